#include "polyorder/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <stdexcept>

namespace polyorder {

// xoshiro256** seeded through splitmix64.
Rng::Rng(std::uint64_t seed) {
  std::uint64_t z = seed;
  for (auto& s : state_) {
    z += 0x9e3779b97f4a7c15ULL;
    std::uint64_t t = z;
    t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
    t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
    s = t ^ (t >> 31);
  }
}

std::uint64_t Rng::next() {
  auto rotl = [](std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); };
  const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
  const std::uint64_t t = state_[1] << 17;
  state_[2] ^= state_[0];
  state_[3] ^= state_[1];
  state_[1] ^= state_[2];
  state_[0] ^= state_[3];
  state_[2] ^= t;
  state_[3] = rotl(state_[3], 45);
  return result;
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double Rng::uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

double Rng::normal() {
  // Box-Muller; one variate per call keeps the stream simple to reason about.
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

namespace {

using Coords = std::vector<double>;

std::vector<Coords> simplex_grid(const Simplex& s, std::size_t n) {
  std::vector<Coords> out;
  if (n == 1) {
    out.emplace_back(s.dim, s.mass / static_cast<double>(s.dim));
    return out;
  }
  const std::size_t total = n - 1;
  Coords cur(s.dim, 0.0);
  // Compositions of `total` into dim parts, first coordinate descending.
  auto rec = [&](auto&& self, std::size_t idx, std::size_t left) -> void {
    if (idx + 1 == s.dim) {
      cur[idx] = s.mass * static_cast<double>(left) / static_cast<double>(total);
      out.push_back(cur);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      cur[idx] = s.mass * static_cast<double>(k) / static_cast<double>(total);
      self(self, idx + 1, left - k);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::vector<Coords> simplex_vertices(const Simplex& s) {
  std::vector<Coords> out;
  for (std::size_t i = 0; i < s.dim; ++i) {
    Coords v(s.dim, 0.0);
    v[i] = s.mass;
    out.push_back(std::move(v));
  }
  return out;
}

Coords simplex_uniform(const Simplex& s, Rng& rng) {
  Coords v(s.dim);
  double sum = 0.0;
  for (auto& x : v) {
    double u = rng.uniform();
    while (u <= 0.0) u = rng.uniform();
    x = -std::log(u);
    sum += x;
  }
  for (auto& x : v) x = s.mass * x / sum;
  return v;
}

std::vector<Coords> cartesian(const std::vector<std::vector<Coords>>& parts) {
  std::vector<Coords> out{Coords{}};
  for (const auto& part : parts) {
    std::vector<Coords> next;
    next.reserve(out.size() * part.size());
    for (const auto& prefix : out) {
      for (const auto& tail : part) {
        Coords c = prefix;
        c.insert(c.end(), tail.begin(), tail.end());
        next.push_back(std::move(c));
      }
    }
    out = std::move(next);
  }
  return out;
}

const std::vector<Simplex>* simplex_factors(const Domain& d, std::vector<Simplex>& scratch) {
  if (const auto* s = std::get_if<Simplex>(&d.kind())) {
    scratch = {*s};
    return &scratch;
  }
  if (const auto* p = std::get_if<SimplexProduct>(&d.kind())) return &p->factors;
  return nullptr;
}

std::vector<Coords> grid_points(const Domain& d, std::size_t n) {
  std::vector<Simplex> scratch;
  if (const auto* factors = simplex_factors(d, scratch)) {
    std::vector<std::vector<Coords>> parts;
    for (const auto& s : *factors) parts.push_back(simplex_grid(s, n));
    return cartesian(parts);
  }
  const Box& b = d.as_box();
  std::vector<std::vector<Coords>> axes;
  for (std::size_t j = 0; j < d.dim(); ++j) {
    std::vector<Coords> axis;
    if (n == 1) {
      axis.push_back({0.5 * (b.lower[j] + b.upper[j])});
    } else {
      for (std::size_t k = 0; k < n; ++k) {
        const double t = static_cast<double>(k) / static_cast<double>(n - 1);
        // Endpoints are hit exactly.
        const double v = k + 1 == n ? b.upper[j] : b.lower[j] + t * (b.upper[j] - b.lower[j]);
        axis.push_back({v});
      }
    }
    axes.push_back(std::move(axis));
  }
  return cartesian(axes);
}

std::vector<Coords> anchor_points(const Domain& d, std::size_t limit) {
  std::vector<Simplex> scratch;
  std::vector<Coords> out;
  if (const auto* factors = simplex_factors(d, scratch)) {
    std::size_t combos = 1;
    for (const auto& s : *factors) combos *= s.dim;
    if (combos <= limit) {
      std::vector<std::vector<Coords>> parts;
      for (const auto& s : *factors) parts.push_back(simplex_vertices(s));
      out = cartesian(parts);
    }
    Coords bary;
    for (const auto& s : *factors) bary.insert(bary.end(), s.dim, s.mass / static_cast<double>(s.dim));
    out.push_back(std::move(bary));
    return out;
  }
  const Box& b = d.as_box();
  if (d.dim() < 20 && (std::size_t{1} << d.dim()) <= limit) {
    std::vector<std::vector<Coords>> axes;
    for (std::size_t j = 0; j < d.dim(); ++j) axes.push_back({{b.lower[j]}, {b.upper[j]}});
    out = cartesian(axes);
  }
  return out;
}

Coords uniform_point(const Domain& d, Rng& rng) {
  std::vector<Simplex> scratch;
  if (const auto* factors = simplex_factors(d, scratch)) {
    Coords out;
    for (const auto& s : *factors) {
      auto v = simplex_uniform(s, rng);
      out.insert(out.end(), v.begin(), v.end());
    }
    return out;
  }
  const Box& b = d.as_box();
  Coords out(d.dim());
  for (std::size_t j = 0; j < d.dim(); ++j) out[j] = rng.uniform(b.lower[j], b.upper[j]);
  return out;
}

std::string strategy_tag(const SampleStrategy& s) {
  if (const auto* g = std::get_if<GridStrategy>(&s)) return "grid(" + std::to_string(g->n_per_axis) + ")";
  if (const auto* r = std::get_if<SeededRandomStrategy>(&s)) {
    return "seeded(" + std::to_string(r->seed) + "," + std::to_string(r->count) + ")";
  }
  return "explicit";
}

// Largest t >= 0 with center + t*dir inside the domain (dir already in the
// tangent space for simplex factors).
double max_step(const Domain& d, const Coords& center, const Coords& dir, double cap) {
  double t = cap;
  if (d.is_box()) {
    const Box& b = d.as_box();
    for (std::size_t j = 0; j < center.size(); ++j) {
      if (dir[j] > 0) t = std::min(t, (b.upper[j] - center[j]) / dir[j]);
      if (dir[j] < 0) t = std::min(t, (b.lower[j] - center[j]) / dir[j]);
    }
  } else {
    for (std::size_t j = 0; j < center.size(); ++j) {
      if (dir[j] < 0) t = std::min(t, center[j] / -dir[j]);
    }
  }
  return std::max(t, 0.0);
}

}  // namespace

SampleSet sample_domain(const Domain& d, const SampleStrategy& strategy, std::uint64_t seed) {
  SampleSet out;
  out.strategy = strategy;
  out.seed = seed;
  out.descriptor = strategy_tag(strategy);
  if (const auto* g = std::get_if<GridStrategy>(&strategy)) {
    if (g->n_per_axis == 0) throw std::invalid_argument("sample_domain: grid size must be positive");
    for (auto& c : grid_points(d, g->n_per_axis)) out.points.emplace_back(std::move(c));
    return out;
  }
  if (const auto* r = std::get_if<SeededRandomStrategy>(&strategy)) {
    if (r->count == 0) throw std::invalid_argument("sample_domain: count must be positive");
    out.seed = r->seed;
    auto anchors = anchor_points(d, r->count / 2);
    for (auto& c : anchors) {
      if (out.points.size() == r->count) break;
      out.points.emplace_back(std::move(c));
    }
    Rng rng(r->seed);
    while (out.points.size() < r->count) out.points.emplace_back(uniform_point(d, rng));
    return out;
  }
  throw std::invalid_argument("sample_domain: explicit sets are built with explicit_samples");
}

SampleSet explicit_samples(const Domain& d, std::vector<Point> points, std::string descriptor) {
  for (const Point& p : points) d.require_contains(p, "explicit_samples");
  SampleSet out;
  out.points = std::move(points);
  out.strategy = ExplicitStrategy{};
  out.descriptor = std::move(descriptor);
  return out;
}

SampleSet augment(SampleSet base, const std::vector<Point>& extra, const std::string& tag) {
  std::set<Point> seen(base.points.begin(), base.points.end());
  std::size_t added = 0;
  for (const Point& p : extra) {
    if (seen.insert(p).second) {
      base.points.push_back(p);
      ++added;
    }
  }
  base.descriptor += "+" + tag + "(" + std::to_string(added) + ")";
  return base;
}

SampleSet sample_ball(const Domain& d, const Point& center, double radius,
                      std::size_t count, std::uint64_t seed) {
  if (!(radius > 0.0)) throw std::invalid_argument("sample_ball: radius must be positive");
  d.require_contains(center, "sample_ball");
  const std::size_t m = d.dim();

  // Coordinate blocks that must keep their sum (simplex factors); a box is
  // a single unconstrained block.
  std::vector<Simplex> scratch;
  const auto* factors = simplex_factors(d, scratch);
  std::vector<std::pair<std::size_t, std::size_t>> blocks;  // (offset, size)
  std::size_t free_dims = m;
  if (factors) {
    free_dims = 0;
    std::size_t off = 0;
    for (const auto& s : *factors) {
      blocks.emplace_back(off, s.dim);
      off += s.dim;
      free_dims += s.dim - 1;
    }
  }
  auto project = [&](Coords& v) {
    for (auto [off, n] : blocks) {
      double mean = 0.0;
      for (std::size_t i = off; i < off + n; ++i) mean += v[i];
      mean /= static_cast<double>(n);
      for (std::size_t i = off; i < off + n; ++i) v[i] -= mean;
    }
  };

  SampleSet out;
  out.strategy = SeededRandomStrategy{seed, count};
  out.seed = seed;
  const Coords& c = center.vec();

  if (free_dims > 0) {
    Rng rng(seed);
    const std::size_t max_attempts = 200 * std::max<std::size_t>(count, 1);
    std::size_t attempts = 0;
    std::size_t accepted = 0;
    while (accepted < count && attempts < max_attempts) {
      ++attempts;
      Coords dir(m);
      for (auto& v : dir) v = rng.normal();
      project(dir);
      double len = 0.0;
      for (double v : dir) len += v * v;
      len = std::sqrt(len);
      if (len == 0.0) continue;
      const double r = radius * std::pow(rng.uniform(), 1.0 / static_cast<double>(free_dims));
      Coords x(m);
      for (std::size_t i = 0; i < m; ++i) x[i] = c[i] + r * dir[i] / len;
      Point p(std::move(x));
      if (p == center || !d.contains(p)) continue;
      out.points.push_back(std::move(p));
      ++accepted;
    }

    // Axis directions: +-e_j on a box, +-(e_i - e_j)/sqrt(2) inside each simplex factor.
    std::vector<Coords> axes;
    if (!factors) {
      for (std::size_t j = 0; j < m; ++j) {
        Coords e(m, 0.0);
        e[j] = 1.0;
        axes.push_back(e);
      }
    } else {
      for (auto [off, n] : blocks) {
        for (std::size_t i = off; i < off + n; ++i) {
          for (std::size_t j = i + 1; j < off + n; ++j) {
            Coords e(m, 0.0);
            e[i] = std::numbers::sqrt2 / 2;
            e[j] = -std::numbers::sqrt2 / 2;
            axes.push_back(e);
          }
        }
      }
    }
    for (auto& e : axes) {
      for (double sign : {1.0, -1.0}) {
        Coords dir(e);
        for (auto& v : dir) v *= sign;
        const double t = max_step(d, c, dir, radius);
        if (t <= 0.0) continue;
        Coords x(m);
        for (std::size_t i = 0; i < m; ++i) x[i] = c[i] + t * dir[i];
        Point p(std::move(x));
        if (p != center && d.contains(p)) out.points.push_back(std::move(p));
      }
    }
  }

  if (out.points.empty()) {
    throw std::invalid_argument("sample_ball: no domain points in ball around " + center.to_string());
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "ball(r=%.6g,seed=%llu,n=%zu)", radius,
                static_cast<unsigned long long>(seed), out.points.size());
  out.descriptor = buf;
  return out;
}

}  // namespace polyorder
