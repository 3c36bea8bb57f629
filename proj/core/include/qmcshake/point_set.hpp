#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace qmcshake {

enum class Provenance { RawSobol, Shaken, Scrambled, Uniform, SymmetrizedPairs };

std::string_view to_string(Provenance p);

// Ordered batch of points in [0,1)^d, stored row-major.
class PointSet {
 public:
  PointSet(std::size_t dimension, Provenance provenance);

  // Takes ownership of a row-major coordinate buffer. Throws
  // std::invalid_argument if the buffer is not a whole number of points, a
  // coordinate falls outside [0,1), or a symmetrized set has odd length.
  PointSet(std::size_t dimension, std::vector<double> coords,
           Provenance provenance);

  std::size_t dimension() const { return dim_; }
  std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
  bool empty() const { return coords_.empty(); }
  Provenance provenance() const { return provenance_; }

  std::span<const double> operator[](std::size_t i) const {
    return {coords_.data() + i * dim_, dim_};
  }
  std::span<const double> coords() const { return coords_; }

  // Appends one point; throws std::invalid_argument on a wrong length or an
  // out-of-range coordinate.
  void push_back(std::span<const double> point);

  void reserve(std::size_t n) { coords_.reserve(n * dim_); }

 private:
  std::size_t dim_;
  std::vector<double> coords_;
  Provenance provenance_;
};

}  // namespace qmcshake
