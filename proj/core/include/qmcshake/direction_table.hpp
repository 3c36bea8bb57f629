#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

namespace qmcshake {

/// Primitive polynomial over GF(2),
///   P(x) = x^s + a_1 x^{s-1} + ... + a_{s-1} x + 1.
/// Only the interior coefficients a_1..a_{s-1} are stored.
class PrimitivePolynomial {
 public:
  /// Throws std::invalid_argument if degree < 1 or the coefficient count is
  /// not degree - 1.
  PrimitivePolynomial(unsigned degree, std::vector<std::uint8_t> interior);

  /// Builds from the packed integer used by direction-table files, where a_1
  /// is the most significant of the degree - 1 bits.
  static PrimitivePolynomial from_packed(unsigned degree, std::uint32_t packed);

  unsigned degree() const { return degree_; }
  std::span<const std::uint8_t> interior() const { return interior_; }

  /// Coefficient a_k for 1 <= k < degree.
  bool coefficient(unsigned k) const { return interior_[k - 1] != 0; }

  /// Full polynomial as a bit mask, bit i holding the coefficient of x^i.
  std::uint64_t mask() const;

 private:
  unsigned degree_;
  std::vector<std::uint8_t> interior_;
};

/// True iff the polynomial is primitive over GF(2), i.e. x has
/// multiplicative order 2^s - 1 modulo P. Brute force; intended for s <= 24.
bool is_primitive(const PrimitivePolynomial& poly);

/// Extends seed values m_1..m_s to m_1..m_count with the XOR recurrence
///   m_k = 2 a_1 m_{k-1} ^ 2^2 a_2 m_{k-2} ^ ... ^ 2^s m_{k-s} ^ m_{k-s}.
/// Throws std::invalid_argument when the seed count differs from the degree
/// or a seed value is even or not below 2^k.
std::vector<std::uint64_t> extend_direction_numbers(
    const PrimitivePolynomial& poly, std::span<const std::uint64_t> seed_m,
    std::size_t count);

/// One dimension of a direction table as it appears in the table file.
struct DirectionEntry {
  PrimitivePolynomial poly;
  std::vector<std::uint64_t> seed_m;
};

/// Per-dimension Sobol direction integers. Entry (j, k) holds
/// v_{k,j} = m_{k,j} * 2^{K-k}, a K-bit fixed-point fraction. Dimension 0 is
/// the van der Corput dimension with m_k = 1 for every k.
class DirectionTable {
 public:
  static constexpr unsigned kDefaultBits = 32;

  /// `entries` describe dimensions 2..d; dimension 1 is implicit.
  DirectionTable(std::span<const DirectionEntry> entries,
                 unsigned bits = kDefaultBits);

  /// Single-dimension table built from one polynomial and its seeds, with no
  /// implicit van der Corput dimension.
  static DirectionTable single(const DirectionEntry& entry,
                               unsigned bits = kDefaultBits);

  /// Parses the `d s a m_1 ... m_s` layout. Lines that do not start with a
  /// digit are ignored. Loads at most `max_dimension` dimensions when given.
  static DirectionTable parse(std::string_view text,
                              std::size_t max_dimension = 0,
                              unsigned bits = kDefaultBits);
  static DirectionTable load(const std::filesystem::path& path,
                             std::size_t max_dimension = 0,
                             unsigned bits = kDefaultBits);

  /// The table compiled into the library (Joe-Kuo new-joe-kuo-6 values).
  static const DirectionTable& shipped();
  static std::string_view shipped_text();

  std::size_t dimension() const { return dim_; }
  unsigned bits() const { return bits_; }

  /// Direction integer v_{k,j} for 0-based dimension j and 1-based k.
  std::uint32_t v(std::size_t j, unsigned k) const {
    return v_[j * bits_ + (k - 1)];
  }
  /// Direction numbers m_{k,j} for 0-based dimension j.
  std::vector<std::uint64_t> m(std::size_t j) const;

  /// Polynomial degree for dimension j (0 for the van der Corput dimension).
  unsigned degree(std::size_t j) const { return degrees_[j]; }

 private:
  DirectionTable(std::size_t dim, unsigned bits);
  void set_dimension(std::size_t j, std::span<const std::uint64_t> m,
                     unsigned degree);

  std::size_t dim_;
  unsigned bits_;
  std::vector<std::uint32_t> v_;
  std::vector<unsigned> degrees_;
};

}  // namespace qmcshake
