#include "qmcshake/cell_grid.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace qmcshake {

CellGrid::CellGrid(std::size_t d, std::size_t m) : d_(d), m_(m), total_(1) {
  if (d_ == 0 || m_ == 0) throw std::invalid_argument("CellGrid: d and m must be >= 1");
  for (std::size_t i = 0; i < d_; ++i) {
    if (total_ > std::numeric_limits<std::size_t>::max() / m_) {
      throw std::invalid_argument("CellGrid: m^d overflows");
    }
    total_ *= m_;
  }
  edges_.resize(m_ + 1);
  for (std::size_t a = 0; a <= m_; ++a) {
    edges_[a] = static_cast<double>(a) / static_cast<double>(m_);
  }
}

std::size_t CellGrid::axis_cell(double x) const {
  if (!(x >= 0.0 && x < 1.0)) throw std::out_of_range("CellGrid: coordinate outside [0,1)");
  auto a = static_cast<std::size_t>(x * static_cast<double>(m_));
  if (a >= m_) a = m_ - 1;
  while (a > 0 && x < edges_[a]) --a;
  while (a + 1 < m_ && x >= edges_[a + 1]) ++a;
  return a;
}

std::size_t CellGrid::cell_of(std::span<const double> x) const {
  std::size_t cell = 0;
  for (std::size_t i = 0; i < d_; ++i) cell = cell * m_ + axis_cell(x[i]);
  return cell;
}

std::vector<std::size_t> CellGrid::multi_index(std::size_t cell) const {
  std::vector<std::size_t> a(d_);
  for (std::size_t i = d_; i-- > 0;) {
    a[i] = cell % m_;
    cell /= m_;
  }
  return a;
}

std::size_t CellGrid::flat_index(std::span<const std::size_t> a) const {
  std::size_t cell = 0;
  for (std::size_t i = 0; i < d_; ++i) cell = cell * m_ + a[i];
  return cell;
}

void CellGrid::bounds(std::size_t cell, std::span<double> lo,
                      std::span<double> hi) const {
  for (std::size_t i = d_; i-- > 0;) {
    const std::size_t a = cell % m_;
    cell /= m_;
    lo[i] = edges_[a];
    hi[i] = edges_[a + 1];
  }
}

void CellGrid::center(std::size_t cell, std::span<double> s) const {
  for (std::size_t i = d_; i-- > 0;) {
    s[i] = center(cell % m_);
    cell /= m_;
  }
}

bool CellGrid::contains(std::size_t cell, std::span<const double> x) const {
  for (std::size_t i = d_; i-- > 0;) {
    const std::size_t a = cell % m_;
    cell /= m_;
    if (!(x[i] >= edges_[a] && x[i] < edges_[a + 1])) return false;
  }
  return true;
}

void reflect(std::span<const double> p, std::span<const double> center,
             std::span<double> out) {
  for (std::size_t i = 0; i < p.size(); ++i) out[i] = 2.0 * center[i] - p[i];
}

}  // namespace qmcshake
