#include "qmcshake/net.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qmcshake {

std::string ElementaryInterval::describe() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (j) os << " x ";
    os << '[' << offsets[j] << "/2^" << exponents[j] << ", " << offsets[j] + 1
       << "/2^" << exponents[j] << ')';
  }
  os << " holds " << count << " points";
  return os.str();
}

namespace {

// Calls visit(exponents) for every vector of s non-negative integers summing
// to total; stops early when visit returns false.
template <typename Visit>
bool for_each_composition(std::vector<unsigned>& e, std::size_t pos,
                          unsigned remaining, Visit& visit) {
  if (pos + 1 == e.size()) {
    e[pos] = remaining;
    return visit(e);
  }
  for (unsigned k = 0; k <= remaining; ++k) {
    e[pos] = k;
    if (!for_each_composition(e, pos + 1, remaining - k, visit)) return false;
  }
  return true;
}

std::uint64_t digit_prefix(double x, unsigned bits) {
  return static_cast<std::uint64_t>(std::ldexp(x, static_cast<int>(bits)));
}

}  // namespace

NetCheckResult check_net_property(const PointSet& ps, unsigned t, unsigned m) {
  if (t > m) throw std::invalid_argument("check_net_property: t exceeds m");
  if (m > 30) throw std::invalid_argument("check_net_property: m too large");
  const std::size_t n = std::size_t{1} << m;
  if (ps.size() != n) {
    throw std::invalid_argument("check_net_property: expected 2^" +
                                std::to_string(m) + " points, got " +
                                std::to_string(ps.size()));
  }
  const std::size_t s = ps.dimension();
  const unsigned level = m - t;
  const std::size_t expected = std::size_t{1} << t;

  NetCheckResult result;
  std::vector<std::size_t> counts(std::size_t{1} << level);
  std::vector<unsigned> exps(s);

  auto visit = [&](const std::vector<unsigned>& e) {
    ++result.intervals_checked;
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto p = ps[i];
      std::uint64_t key = 0;
      for (std::size_t j = 0; j < s; ++j) {
        key = (key << e[j]) | digit_prefix(p[j], e[j]);
      }
      ++counts[key];
    }
    for (std::size_t key = 0; key < counts.size(); ++key) {
      if (counts[key] == expected) continue;
      ElementaryInterval bad;
      bad.exponents = e;
      bad.offsets.resize(s);
      bad.count = counts[key];
      std::uint64_t rest = key;
      for (std::size_t j = s; j-- > 0;) {
        bad.offsets[j] = rest & ((std::uint64_t{1} << e[j]) - 1);
        rest >>= e[j];
      }
      result.passed = false;
      result.violation = std::move(bad);
      return false;
    }
    return true;
  };
  for_each_composition(exps, 0, level, visit);
  return result;
}

unsigned net_quality(const PointSet& ps, unsigned m) {
  for (unsigned t = 0; t < m; ++t) {
    if (check_net_property(ps, t, m)) return t;
  }
  return m;
}

double min_pairwise_distance(const PointSet& ps) {
  return min_pairwise_distance(ps.coords(), ps.dimension());
}

double min_pairwise_distance(std::span<const double> coords, std::size_t d) {
  if (d == 0 || coords.size() % d != 0) {
    throw std::invalid_argument("min_pairwise_distance: ragged coordinates");
  }
  const std::size_t n = coords.size() / d;
  if (n < 2) throw std::invalid_argument("min_pairwise_distance: need >= 2 points");
  auto point = [&](std::size_t i) { return coords.subspan(i * d, d); };

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return coords[a * d] < coords[b * d];
  });
  std::vector<double> sorted(n * d);
  for (std::size_t i = 0; i < n; ++i) {
    const auto p = point(order[i]);
    std::copy(p.begin(), p.end(), sorted.begin() + i * d);
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < n && best > 0.0; ++i) {
    const double* a = sorted.data() + i * d;
    for (std::size_t k = i + 1; k < n; ++k) {
      const double* b = sorted.data() + k * d;
      const double gap = b[0] - a[0];
      if (gap * gap >= best) break;
      double acc = gap * gap;
      for (std::size_t j = 1; j < d && acc < best; ++j) {
        const double diff = b[j] - a[j];
        acc += diff * diff;
      }
      best = std::min(best, acc);
    }
  }
  return std::sqrt(best);
}

}  // namespace qmcshake
