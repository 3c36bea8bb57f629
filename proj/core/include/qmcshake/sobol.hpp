#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qmcshake/direction_table.hpp"
#include "qmcshake/point_set.hpp"

namespace qmcshake {

/// Sobol (LP-tau) sequence in base 2 with Antonov-Saleev Gray-code stepping.
///
/// Point i is x_i = g_1 v_1 ^ g_2 v_2 ^ ... where g = i ^ (i >> 1) is the
/// Gray code of i. Stepping from i to i + 1 XORs in v_c, c being the position
/// of the lowest zero bit of i, so every point costs one XOR per dimension.
/// The Gray ordering permutes points only within each block of 2^k, so every
/// prefix of length 2^k is the same set as the direct-order prefix.
class SobolGenerator {
 public:
  /// Uses the first `dimension` dimensions of `table`. The table must outlive
  /// the generator. Throws std::invalid_argument if dimension is 0 or exceeds
  /// the table.
  SobolGenerator(const DirectionTable& table, std::size_t dimension);

  std::size_t dimension() const { return dim_; }
  std::uint64_t index() const { return index_; }
  /// Number of points available, 2^K.
  std::uint64_t capacity() const { return std::uint64_t{1} << table_->bits(); }

  /// Writes point `index()` to `out` (length dimension()) and advances.
  /// Throws std::out_of_range once all 2^K points have been emitted.
  void next(std::span<double> out);
  std::vector<double> next();

  /// Integer form of the next point (K-bit numerators), then advances.
  void next_integer(std::span<std::uint32_t> out);

  /// Repositions the generator at `index` using the direct formula.
  void seek(std::uint64_t index);

  /// Direct evaluation of the K-bit numerators at `index` in Gray order.
  static void integer_at(const DirectionTable& table, std::size_t dimension,
                         std::uint64_t index, std::span<std::uint32_t> out);
  /// Direct evaluation in natural order, x_i = i_1 v_1 ^ i_2 v_2 ^ ...
  static void integer_at_natural(const DirectionTable& table,
                                 std::size_t dimension, std::uint64_t index,
                                 std::span<std::uint32_t> out);

  double scale() const { return scale_; }

 private:
  void advance();

  const DirectionTable* table_;
  std::size_t dim_;
  std::uint64_t index_ = 0;
  std::vector<std::uint32_t> state_;
  double scale_;
};

/// First `n` points of the `d`-dimensional sequence from `table`. With
/// `skip_zero`, the initial all-zeros point is dropped before counting.
/// Throws std::invalid_argument for d == 0, n == 0 or d beyond the table and
/// std::out_of_range when n exceeds the 2^K point budget.
PointSet generate(std::size_t d, std::size_t n, bool skip_zero = false,
                  const DirectionTable& table = DirectionTable::shipped());

}  // namespace qmcshake
