#include "manhattan/exact.hpp"

#include <algorithm>
#include <sstream>

namespace manhattan {

namespace {

constexpr unsigned kMaxSteps = 1u << 30;

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

// #{x in Z^d : |x|_1 = k}.
BigInt l1_sphere_count(int d, unsigned k) {
  if (k == 0) return 1;
  BigInt sum = 0;
  const unsigned jmax = std::min<unsigned>(d, k);
  for (unsigned j = 1; j <= jmax; ++j) {
    sum += int_pow(BigInt(2), j) * binomial(d, j) * binomial(k - 1, j - 1);
  }
  return sum;
}

void check_budget(std::size_t live, std::size_t max_live_sites, int d, unsigned n) {
  if (live > max_live_sites) {
    throw ResourceError("live site count " + std::to_string(live) +
                            " exceeds budget " + std::to_string(max_live_sites) +
                            " at (d=" + std::to_string(d) +
                            ", n=" + std::to_string(n) + "); raise --max-sites",
                        d, n);
  }
}

}  // namespace

bool same_distribution(const PathDistribution& a, const PathDistribution& b) {
  if (a.d != b.d || a.n != b.n || a.total != b.total) return false;
  if (a.counts.size() != b.counts.size()) return false;
  for (const auto& [site, count] : a.counts) {
    auto it = b.counts.find(site);
    if (it == b.counts.end() || it->second != count) return false;
  }
  return true;
}

PathDistribution origin_distribution(Dimension d) {
  PathDistribution dist;
  dist.d = d.value();
  dist.n = 0;
  dist.total = 1;
  dist.counts.emplace(Site(d.value(), 0), BigInt(1));
  return dist;
}

PathDistribution evolve(const PathDistribution& dist, const OrientationRule& rule,
                        std::size_t max_live_sites) {
  if (rule.dimension() != dist.d) {
    throw std::invalid_argument("rule dimension does not match distribution");
  }
  if (dist.n >= kMaxSteps) {
    throw std::invalid_argument("step count out of supported coordinate range");
  }

  PathDistribution next;
  next.d = dist.d;
  next.n = dist.n + 1;
  next.total = dist.total * dist.d;
  next.counts.reserve(dist.counts.size() * dist.d);

  Site y;
  for (const auto& [x, count] : dist.counts) {
    for (int axis = 0; axis < dist.d; ++axis) {
      y = x;
      y[axis] += rule.line_sign(axis, x);
      next.counts[y] += count;
    }
    check_budget(next.counts.size(), max_live_sites, next.d, next.n);
  }
  return next;
}

PathDistribution exact_distribution(Dimension d, unsigned n,
                                    const OrientationRule& rule,
                                    std::size_t max_live_sites) {
  const BigInt bound = reachable_sites_bound(d, n);
  if (bound > max_live_sites) {
    throw ResourceError("estimated " + bound.str() + " live sites at (d=" +
                            std::to_string(d.value()) + ", n=" + std::to_string(n) +
                            ") exceeds budget " + std::to_string(max_live_sites) +
                            "; raise --max-sites",
                        d.value(), n);
  }
  PathDistribution dist = origin_distribution(d);
  for (unsigned k = 0; k < n; ++k) dist = evolve(dist, rule, max_live_sites);
  return dist;
}

PathDistribution enumerate_paths(Dimension d, unsigned n, const OrientationRule& rule,
                                 std::uint64_t path_cap) {
  const BigInt paths = int_pow(BigInt(d.value()), n);
  if (paths > path_cap) {
    throw ResourceError("d^n = " + paths.str() + " paths exceeds enumeration cap " +
                            std::to_string(path_cap),
                        d.value(), n);
  }

  PathDistribution dist;
  dist.d = d.value();
  dist.n = n;
  dist.total = paths;

  const int dim = d.value();
  std::vector<int> choice(n, 0);
  std::vector<Site> pos(n + 1, Site(dim, 0));

  auto extend_from = [&](unsigned level) {
    for (unsigned k = level; k < n; ++k) {
      pos[k + 1] = pos[k];
      pos[k + 1][choice[k]] += rule.line_sign(choice[k], pos[k]);
    }
  };

  extend_from(0);
  while (true) {
    dist.counts[pos[n]] += 1;
    // Odometer over the d^n choice sequences.
    int level = static_cast<int>(n) - 1;
    while (level >= 0 && choice[level] == dim - 1) {
      choice[level] = 0;
      --level;
    }
    if (level < 0) break;
    ++choice[level];
    extend_from(static_cast<unsigned>(level));
  }
  return dist;
}

std::vector<Rational> exact_mean(const PathDistribution& dist) {
  std::vector<BigInt> sums(dist.d, BigInt(0));
  for (const auto& [x, count] : dist.counts) {
    for (int i = 0; i < dist.d; ++i) sums[i] += count * x[i];
  }
  std::vector<Rational> mean;
  mean.reserve(dist.d);
  for (const auto& s : sums) mean.emplace_back(s, dist.total);
  return mean;
}

Rational exact_msd(const PathDistribution& dist) {
  BigInt sum = 0;
  for (const auto& [x, count] : dist.counts) {
    __int128 normsq = 0;
    for (Coord c : x) normsq += static_cast<__int128>(c) * c;
    sum += count * bigint_from_i128(normsq);
  }
  return Rational(sum, dist.total);
}

Rational return_probability(Dimension d, unsigned n_even, const OrientationRule& rule,
                            std::size_t max_live_sites) {
  if (n_even % 2 != 0) {
    throw std::invalid_argument(
        "return probability asked at odd n = " + std::to_string(n_even) +
        ": the coordinate sum has the parity of the step count, so the walk "
        "cannot be at the origin after an odd number of steps");
  }
  const PathDistribution dist = exact_distribution(d, n_even, rule, max_live_sites);
  const auto it = dist.counts.find(Site(d.value(), 0));
  const BigInt at_origin = it == dist.counts.end() ? BigInt(0) : it->second;
  return Rational(at_origin, dist.total);
}

bool srw_coupling_check(Dimension d, unsigned n, std::size_t max_live_sites) {
  if (d.value() != 2) {
    throw std::invalid_argument(
        "the floor-halving map matches a simple random walk only in two "
        "dimensions: for d > 2 the path counts (2d)^n and d^(mn) can never "
        "agree");
  }

  const OrientationRule rule = OrientationRule::manhattan(d);
  const PathDistribution walk = exact_distribution(d, 2 * n, rule, max_live_sites);

  std::unordered_map<Site, BigInt, SiteHash> folded;
  for (const auto& [x, count] : walk.counts) {
    folded[Site{floor_div2(x[0]), floor_div2(x[1])}] += count;
  }

  // n-step 2D simple symmetric random walk, path counts (total 4^n).
  std::unordered_map<Site, BigInt, SiteHash> srw;
  srw.emplace(Site{0, 0}, BigInt(1));
  for (unsigned k = 0; k < n; ++k) {
    std::unordered_map<Site, BigInt, SiteHash> next;
    next.reserve(srw.size() * 4);
    for (const auto& [x, count] : srw) {
      next[Site{x[0] + 1, x[1]}] += count;
      next[Site{x[0] - 1, x[1]}] += count;
      next[Site{x[0], x[1] + 1}] += count;
      next[Site{x[0], x[1] - 1}] += count;
    }
    srw = std::move(next);
    check_budget(srw.size(), max_live_sites, 2, k + 1);
  }

  if (folded.size() != srw.size()) return false;
  for (const auto& [site, count] : folded) {
    auto it = srw.find(site);
    if (it == srw.end() || it->second != count) return false;
  }
  return true;
}

BigInt reachable_sites_bound(Dimension d, unsigned n) {
  // Walks of any orientation rule stay in the L1 ball of radius n and on the
  // coordinate-sum parity of n.
  BigInt ball = 0;
  for (unsigned k = n % 2; k <= n; k += 2) ball += l1_sphere_count(d.value(), k);
  const BigInt paths = int_pow(BigInt(d.value()), n);
  return std::min(ball, paths);
}

std::vector<Site> sorted_sites(const PathDistribution& dist) {
  std::vector<Site> sites;
  sites.reserve(dist.counts.size());
  for (const auto& [site, count] : dist.counts) sites.push_back(site);
  std::sort(sites.begin(), sites.end());
  return sites;
}

std::string to_json_lines(const PathDistribution& dist, const OrientationRule& rule) {
  std::ostringstream out;
  out << "{\"d\":" << dist.d << ",\"n\":" << dist.n << ",\"rule\":\"" << rule.name()
      << "\",\"total\":\"" << dist.total.str() << "\"}\n";
  for (const Site& site : sorted_sites(dist)) {
    out << "{\"site\":[";
    for (std::size_t i = 0; i < site.size(); ++i) {
      if (i != 0) out << ",";
      out << site[i];
    }
    out << "],\"count\":\"" << dist.counts.at(site).str() << "\"}\n";
  }
  return out.str();
}

}  // namespace manhattan
