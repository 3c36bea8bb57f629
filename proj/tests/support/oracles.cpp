#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace oracle {

std::vector<std::uint64_t> m_sequence(const std::vector<int>& interior,
                                      const std::vector<std::uint64_t>& seeds,
                                      std::size_t count) {
  const std::size_t s = seeds.size();
  std::vector<int> c(s + 1, 0);
  for (std::size_t i = 1; i < s; ++i) c[i] = interior[i - 1];
  c[s] = 1;
  std::vector<std::uint64_t> m(seeds);
  for (std::size_t k = s + 1; k <= count; ++k) {
    std::uint64_t v = m[k - s - 1];
    for (std::size_t i = 1; i <= s; ++i) {
      if (c[i]) v ^= m[k - i - 1] * (std::uint64_t{1} << i);
    }
    m.push_back(v);
  }
  m.resize(count);
  return m;
}

double sobol_coordinate(const std::vector<std::uint64_t>& m, std::uint64_t index,
                        bool gray, unsigned bits) {
  const std::uint64_t g = gray ? index ^ (index >> 1) : index;
  std::uint64_t acc = 0;
  for (unsigned k = 1; k <= bits; ++k) {
    if ((g >> (k - 1)) & 1u) acc ^= m[k - 1] << (bits - k);
  }
  return std::ldexp(static_cast<double>(acc), -static_cast<int>(bits));
}

double min_distance(const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < pts[i].size(); ++k) {
        const double diff = pts[i][k] - pts[j][k];
        s += diff * diff;
      }
      best = std::min(best, std::sqrt(s));
    }
  }
  return best;
}

namespace {

void compositions(unsigned total, std::size_t parts, std::vector<unsigned>& cur,
                  const std::function<void(const std::vector<unsigned>&)>& fn) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    fn(cur);
    cur.pop_back();
    return;
  }
  for (unsigned e = 0; e <= total; ++e) {
    cur.push_back(e);
    compositions(total - e, parts, cur, fn);
    cur.pop_back();
  }
}

}  // namespace

bool is_net(const std::vector<Point>& pts, unsigned t, unsigned m) {
  if (pts.size() != (std::size_t{1} << m)) return false;
  const std::size_t d = pts.front().size();
  const std::size_t expect = std::size_t{1} << t;
  bool ok = true;
  std::vector<unsigned> cur;
  compositions(m - t, d, cur, [&](const std::vector<unsigned>& e) {
    if (!ok) return;
    std::vector<std::uint64_t> a(d, 0);
    while (true) {
      std::size_t count = 0;
      for (const auto& p : pts) {
        bool inside = true;
        for (std::size_t j = 0; j < d && inside; ++j) {
          const double w = std::ldexp(1.0, -static_cast<int>(e[j]));
          inside = p[j] >= a[j] * w && p[j] < (a[j] + 1) * w;
        }
        count += inside;
      }
      if (count != expect) {
        ok = false;
        return;
      }
      std::size_t j = 0;
      while (j < d && ++a[j] == (std::uint64_t{1} << e[j])) a[j++] = 0;
      if (j == d) break;
    }
  });
  return ok;
}

void gauss_legendre01(std::size_t n, std::vector<double>& nodes,
                      std::vector<double>& weights) {
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1.0, p1 = x;
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    nodes[i] = 0.5 * (1.0 - x);
    weights[i] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
}

Anova tensor_anova(const std::function<double(std::span<const double>)>& f,
                   std::size_t d, std::size_t nodes) {
  std::vector<double> x, w;
  gauss_legendre01(nodes, x, w);

  // Visits every grid point of the listed axes, with the product weight.
  auto grid = [x, w, nodes](const std::vector<std::size_t>& axes,
                            std::vector<double>& pt,
                            const std::function<void(double)>& fn) {
    std::vector<std::size_t> idx(axes.size(), 0);
    while (true) {
      double weight = 1.0;
      for (std::size_t a = 0; a < axes.size(); ++a) {
        pt[axes[a]] = x[idx[a]];
        weight *= w[idx[a]];
      }
      fn(weight);
      std::size_t a = 0;
      while (a < axes.size() && ++idx[a] == nodes) idx[a++] = 0;
      if (a == axes.size()) break;
    }
  };

  std::vector<std::size_t> all(d);
  for (std::size_t i = 0; i < d; ++i) all[i] = i;

  Anova out;
  std::vector<double> pt(d);
  double s1 = 0.0, s2 = 0.0;
  grid(all, pt, [&](double wt) {
    const double v = f(pt);
    s1 += wt * v;
    s2 += wt * v * v;
  });
  out.f0 = s1;
  out.D = s2 - s1 * s1;
  const double f0 = s1;
  out.partial = [f, d, grid, f0](const std::vector<std::size_t>& y) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < d; ++i) {
      if (std::find(y.begin(), y.end(), i) == y.end()) z.push_back(i);
    }
    std::vector<double> p(d);
    double acc = 0.0;
    grid(y, p, [&](double wy) {
      double cond = 0.0;
      grid(z, p, [&](double wz) { cond += wz * f(p); });
      acc += wy * cond * cond;
    });
    return acc - f0 * f0;
  };
  return out;
}

double ks_uniform(std::vector<double> sample) {
  std::sort(sample.begin(), sample.end());
  const double n = static_cast<double>(sample.size());
  double stat = 0.0;
  for (std::size_t i = 0; i < sample.size(); ++i) {
    stat = std::max(stat, std::max((i + 1) / n - sample[i], sample[i] - i / n));
  }
  return stat;
}

}  // namespace oracle
