#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qmcshake/point_set.hpp"

namespace qmcshake {

/// Elementary base-2 interval prod_j [a_j 2^-e_j, (a_j + 1) 2^-e_j).
struct ElementaryInterval {
  std::vector<unsigned> exponents;
  std::vector<std::uint64_t> offsets;
  std::size_t count = 0;  // points found inside

  std::string describe() const;
};

struct NetCheckResult {
  bool passed = true;
  std::size_t intervals_checked = 0;
  std::optional<ElementaryInterval> violation;  // first offending interval

  explicit operator bool() const { return passed; }
};

/// Brute-force (t,m,s)-net test in base 2: every elementary interval of
/// volume 2^{t-m} must hold exactly 2^t points. Enumerates all exponent
/// vectors summing to m - t and counts points per interval. Throws
/// std::invalid_argument unless the set has exactly 2^m points and t <= m.
NetCheckResult check_net_property(const PointSet& ps, unsigned t, unsigned m);

/// Smallest t in [0, m] for which `ps` is a (t,m,s)-net.
unsigned net_quality(const PointSet& ps, unsigned m);

/// Minimum Euclidean distance over all unordered pairs. Exact; uses a sweep
/// over points sorted by the first coordinate that skips pairs whose
/// first-coordinate gap already exceeds the best distance. Throws
/// std::invalid_argument for fewer than two points.
double min_pairwise_distance(const PointSet& ps);
/// Same, over a row-major buffer of points of dimension `d` (any range).
double min_pairwise_distance(std::span<const double> coords, std::size_t d);

}  // namespace qmcshake
