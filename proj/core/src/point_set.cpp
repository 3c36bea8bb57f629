#include "qmcshake/point_set.hpp"

#include <stdexcept>
#include <string>

namespace qmcshake {

namespace {

void check_unit(double x) {
  if (!(x >= 0.0 && x < 1.0)) {
    throw std::invalid_argument("PointSet: coordinate " + std::to_string(x) +
                                " outside [0,1)");
  }
}

}  // namespace

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::RawSobol: return "raw-sobol";
    case Provenance::Shaken: return "shaken";
    case Provenance::Scrambled: return "scrambled";
    case Provenance::Uniform: return "uniform";
    case Provenance::SymmetrizedPairs: return "symmetrized-pairs";
  }
  return "unknown";
}

PointSet::PointSet(std::size_t dimension, Provenance provenance)
    : dim_(dimension), provenance_(provenance) {
  if (dim_ == 0) throw std::invalid_argument("PointSet: dimension must be >= 1");
}

PointSet::PointSet(std::size_t dimension, std::vector<double> coords,
                   Provenance provenance)
    : PointSet(dimension, provenance) {
  if (coords.size() % dim_ != 0) {
    throw std::invalid_argument("PointSet: buffer is not a whole number of points");
  }
  for (double x : coords) check_unit(x);
  coords_ = std::move(coords);
  if (provenance_ == Provenance::SymmetrizedPairs && size() % 2 != 0) {
    throw std::invalid_argument("PointSet: symmetrized pairs need an even count");
  }
}

void PointSet::push_back(std::span<const double> point) {
  if (point.size() != dim_) {
    throw std::invalid_argument("PointSet: point has wrong dimension");
  }
  for (double x : point) check_unit(x);
  coords_.insert(coords_.end(), point.begin(), point.end());
}

}  // namespace qmcshake
