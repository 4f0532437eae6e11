#pragma once

#include "manhattan/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace manhattan {

using Coord = std::int64_t;
using Site = std::vector<Coord>;

// Per-axis outgoing edge signs at a site; entries are +1 or -1.
using LocalEnv = std::vector<std::int8_t>;

// Number of lattice dimensions. The engines assume d <= 64 (axis masks and
// 64-bit coordinate arithmetic), so construction rejects anything outside
// [2, 64].
class Dimension {
 public:
  explicit Dimension(int d);
  int value() const { return d_; }

 private:
  int d_;
};

// A signed unit move along one axis. Axes are 0-based.
struct Step {
  int axis;
  int sign;
};

enum class RuleKind { kManhattan, kIidCoin, kCustom };

// Finite per-line sign table: (axis, coordinates with that axis removed) -> +/-1.
using LineTable = std::map<std::pair<int, std::vector<Coord>>, int>;

// Assigns one orientation sign to every axis-aligned line of Z^d.
//
// manhattan: axis i at site x points +1 iff the sum of the other coordinates
//            is even.
// iid_coin:  a fixed +/-1 per line, derived by hashing (axis, perpendicular
//            coordinates, seed) through the SplitMix64 finalizer chain; the
//            same inputs always give the same sign, on every platform.
// custom:    an explicit finite table; querying a line outside the table
//            throws std::out_of_range.
class OrientationRule {
 public:
  static OrientationRule manhattan(Dimension d);
  static OrientationRule iid_coin(Dimension d, std::uint64_t seed);
  static OrientationRule custom(Dimension d, LineTable table);

  int dimension() const { return d_; }
  RuleKind kind() const { return kind_; }
  std::uint64_t seed() const { return seed_; }

  // Orientation (+1 or -1) of the axis line through x; never depends on
  // x[axis].
  int line_sign(int axis, const Site& x) const;

  // "manhattan", "iid:<seed>" or "custom"; used in report headers.
  std::string name() const;

 private:
  OrientationRule(Dimension d, RuleKind kind, std::uint64_t seed, LineTable table);

  int d_;
  RuleKind kind_;
  std::uint64_t seed_;
  LineTable table_;
};

// The outgoing-edge sign vector at x.
LocalEnv local_env(const OrientationRule& rule, const Site& x);

// The d directed edges leaving x, one per axis.
std::vector<Step> out_steps(const OrientationRule& rule, const Site& x);

// True iff y - x is a unit step whose sign matches the line orientation at x.
bool is_directed_edge(const OrientationRule& rule, const Site& x, const Site& y);

// Distinct local environments over the box [-radius, radius]^d. radius >= 2.
std::set<LocalEnv> env_census(const OrientationRule& rule, int radius = 2);

// True iff the env entry for `axis` is constant at x + k*e_axis, k in
// [-span, span].
bool check_line_consistency(const OrientationRule& rule, const Site& x, int axis,
                            int span);

// 2^d environments occur for even d, 2^(d-1) for odd d.
BigInt expected_manhattan_census(Dimension d);

// JSON array of sign vectors, sorted, e.g. [[-1,-1],[-1,1],[1,-1],[1,1]].
std::string census_to_json(const std::set<LocalEnv>& envs);

// Platform-independent hash for sparse site maps.
struct SiteHash {
  std::size_t operator()(const Site& x) const;
};

Site step_target(const Site& x, const Step& s);

}  // namespace manhattan
