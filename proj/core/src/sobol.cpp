#include "qmcshake/sobol.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace qmcshake {

SobolGenerator::SobolGenerator(const DirectionTable& table,
                               std::size_t dimension)
    : table_(&table), dim_(dimension), state_(dimension, 0u) {
  if (dim_ == 0) throw std::invalid_argument("SobolGenerator: dimension must be >= 1");
  if (dim_ > table.dimension()) {
    throw std::invalid_argument("SobolGenerator: dimension " +
                                std::to_string(dim_) + " exceeds table limit " +
                                std::to_string(table.dimension()));
  }
  scale_ = 1.0 / static_cast<double>(capacity());
}

void SobolGenerator::advance() {
  ++index_;
  if (index_ >= capacity()) return;
  // Lowest zero bit of the previous index, 1-based.
  const unsigned c = static_cast<unsigned>(std::countr_one(index_ - 1)) + 1;
  for (std::size_t j = 0; j < dim_; ++j) state_[j] ^= table_->v(j, c);
}

void SobolGenerator::next_integer(std::span<std::uint32_t> out) {
  if (out.size() != dim_) throw std::invalid_argument("SobolGenerator: wrong output size");
  if (index_ >= capacity()) {
    throw std::out_of_range("SobolGenerator: all 2^K points emitted");
  }
  std::copy(state_.begin(), state_.end(), out.begin());
  advance();
}

void SobolGenerator::next(std::span<double> out) {
  if (out.size() != dim_) throw std::invalid_argument("SobolGenerator: wrong output size");
  if (index_ >= capacity()) {
    throw std::out_of_range("SobolGenerator: all 2^K points emitted");
  }
  for (std::size_t j = 0; j < dim_; ++j) out[j] = state_[j] * scale_;
  advance();
}

std::vector<double> SobolGenerator::next() {
  std::vector<double> out(dim_);
  next(out);
  return out;
}

void SobolGenerator::seek(std::uint64_t index) {
  if (index > capacity()) throw std::out_of_range("SobolGenerator: seek past end");
  index_ = index;
  if (index < capacity()) integer_at(*table_, dim_, index, state_);
}

void SobolGenerator::integer_at_natural(const DirectionTable& table,
                                        std::size_t dimension,
                                        std::uint64_t index,
                                        std::span<std::uint32_t> out) {
  if (index >> table.bits()) throw std::out_of_range("Sobol index overflow");
  std::fill(out.begin(), out.begin() + dimension, 0u);
  for (unsigned k = 1; index != 0; ++k, index >>= 1) {
    if (index & 1u) {
      for (std::size_t j = 0; j < dimension; ++j) out[j] ^= table.v(j, k);
    }
  }
}

void SobolGenerator::integer_at(const DirectionTable& table,
                                std::size_t dimension, std::uint64_t index,
                                std::span<std::uint32_t> out) {
  if (index >> table.bits()) throw std::out_of_range("Sobol index overflow");
  integer_at_natural(table, dimension, index ^ (index >> 1), out);
}

PointSet generate(std::size_t d, std::size_t n, bool skip_zero,
                  const DirectionTable& table) {
  if (n == 0) throw std::invalid_argument("generate: n must be >= 1");
  SobolGenerator gen(table, d);
  const std::uint64_t needed = n + (skip_zero ? 1u : 0u);
  if (needed > gen.capacity()) {
    throw std::out_of_range("generate: n exceeds the 2^K point budget");
  }
  std::vector<double> coords(n * d);
  std::vector<double> scratch(d);
  if (skip_zero) gen.next(scratch);
  for (std::size_t i = 0; i < n; ++i) {
    gen.next(std::span<double>(coords.data() + i * d, d));
  }
  return PointSet(d, std::move(coords), Provenance::RawSobol);
}

}  // namespace qmcshake
