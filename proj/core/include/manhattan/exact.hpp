#pragma once

#include "manhattan/lattice.hpp"
#include "manhattan/numeric.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace manhattan {

inline constexpr std::size_t kDefaultMaxLiveSites = 5'000'000;
inline constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

// Raised when a computation would exceed its configured budget; carries the
// limiting (d, n) so callers can report it.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what, int d, unsigned n)
      : std::runtime_error(what), d_(d), n_(n) {}
  int dimension() const { return d_; }
  unsigned steps() const { return n_; }

 private:
  int d_;
  unsigned n_;
};

// Exact law of the walk after n steps: site -> number of n-step paths ending
// there. Counts sum to d^n.
struct PathDistribution {
  int d = 0;
  unsigned n = 0;
  BigInt total = 0;
  std::unordered_map<Site, BigInt, SiteHash> counts;
};

bool same_distribution(const PathDistribution& a, const PathDistribution& b);

// Point mass at the origin (n = 0).
PathDistribution origin_distribution(Dimension d);

// One transition: every path extends along each of the d outgoing edges.
PathDistribution evolve(const PathDistribution& dist, const OrientationRule& rule,
                        std::size_t max_live_sites = kDefaultMaxLiveSites);

// n transitions from the origin, via the sparse DP.
PathDistribution exact_distribution(Dimension d, unsigned n,
                                    const OrientationRule& rule,
                                    std::size_t max_live_sites = kDefaultMaxLiveSites);

// Same law, computed by walking all d^n paths one at a time. Second oracle;
// refuses when d^n exceeds the cap.
PathDistribution enumerate_paths(Dimension d, unsigned n, const OrientationRule& rule,
                                 std::uint64_t path_cap = kDefaultEnumerationCap);

// Per-coordinate E[X_n], exact.
std::vector<Rational> exact_mean(const PathDistribution& dist);

// E|X_n|^2, exact.
Rational exact_msd(const PathDistribution& dist);

// P(X_n = 0) for even n; odd n is rejected (the coordinate-sum parity equals
// the step parity, so an odd-step return is impossible).
Rational return_probability(Dimension d, unsigned n_even, const OrientationRule& rule,
                            std::size_t max_live_sites = kDefaultMaxLiveSites);

// d = 2 only: folds the exact 2n-step law through x -> floor(x/2)
// (componentwise, toward -inf) and compares it with the exact n-step law of
// the 2D simple symmetric random walk. Both laws weight 4^n paths, so the
// count maps are compared directly.
bool srw_coupling_check(Dimension d, unsigned n,
                        std::size_t max_live_sites = kDefaultMaxLiveSites);

// Upper bound on the number of distinct sites reachable in n steps:
// min(d^n, #{x : |x|_1 <= n, |x|_1 = n mod 2}). Used as the budget precheck.
BigInt reachable_sites_bound(Dimension d, unsigned n);

// Sites with nonzero count, sorted lexicographically.
std::vector<Site> sorted_sites(const PathDistribution& dist);

// JSON lines: one header object, then one {"site":[...],"count":"..."} line
// per site in lexicographic order. Byte-stable.
std::string to_json_lines(const PathDistribution& dist, const OrientationRule& rule);

}  // namespace manhattan
