#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qmcshake {

/// Uniform partition of [0,1)^d into m^d half-open cells
///   K = prod_i [a_i / m, (a_i + 1) / m).
/// Cell indices are mixed-radix with a_1 as the most significant digit.
class CellGrid {
 public:
  CellGrid(std::size_t d, std::size_t m);

  std::size_t dimension() const { return d_; }
  std::size_t cells_per_axis() const { return m_; }
  std::size_t size() const { return total_; }

  /// Lower face a / m as the double used by every containment test.
  double lower(std::size_t a) const { return edges_[a]; }
  double upper(std::size_t a) const { return edges_[a + 1]; }
  double center(std::size_t a) const { return (static_cast<double>(a) + 0.5) / static_cast<double>(m_); }

  /// Cell coordinate along one axis; consistent with lower()/upper().
  std::size_t axis_cell(double x) const;
  std::size_t cell_of(std::span<const double> x) const;

  std::vector<std::size_t> multi_index(std::size_t cell) const;
  std::size_t flat_index(std::span<const std::size_t> a) const;

  void bounds(std::size_t cell, std::span<double> lo, std::span<double> hi) const;
  void center(std::size_t cell, std::span<double> s) const;
  bool contains(std::size_t cell, std::span<const double> x) const;

 private:
  std::size_t d_;
  std::size_t m_;
  std::size_t total_;
  std::vector<double> edges_;
};

/// Reflection through `center`: 2 s - p.
void reflect(std::span<const double> p, std::span<const double> center,
             std::span<double> out);

}  // namespace qmcshake
