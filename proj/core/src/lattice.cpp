#include "manhattan/lattice.hpp"

#include "manhattan/rng.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace manhattan {

namespace {

void require_site_dim(const Site& x, int d) {
  if (static_cast<int>(x.size()) != d) {
    throw std::invalid_argument("site has " + std::to_string(x.size()) +
                                " coordinates, rule expects " + std::to_string(d));
  }
}

std::uint64_t hash_fold(std::uint64_t h, std::uint64_t word) {
  return mix64((h ^ word) + kGoldenGamma);
}

}  // namespace

Dimension::Dimension(int d) : d_(d) {
  if (d < 2 || d > 64) {
    throw std::invalid_argument("dimension must be in [2, 64], got " +
                                std::to_string(d));
  }
}

OrientationRule::OrientationRule(Dimension d, RuleKind kind, std::uint64_t seed,
                                 LineTable table)
    : d_(d.value()), kind_(kind), seed_(seed), table_(std::move(table)) {}

OrientationRule OrientationRule::manhattan(Dimension d) {
  return OrientationRule(d, RuleKind::kManhattan, 0, {});
}

OrientationRule OrientationRule::iid_coin(Dimension d, std::uint64_t seed) {
  return OrientationRule(d, RuleKind::kIidCoin, seed, {});
}

OrientationRule OrientationRule::custom(Dimension d, LineTable table) {
  for (const auto& [key, sign] : table) {
    if (key.first < 0 || key.first >= d.value()) {
      throw std::invalid_argument("custom table axis out of range");
    }
    if (static_cast<int>(key.second.size()) != d.value() - 1) {
      throw std::invalid_argument("custom table key must have d-1 coordinates");
    }
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("custom table signs must be +1 or -1");
    }
  }
  return OrientationRule(d, RuleKind::kCustom, 0, std::move(table));
}

int OrientationRule::line_sign(int axis, const Site& x) const {
  require_site_dim(x, d_);
  if (axis < 0 || axis >= d_) {
    throw std::invalid_argument("axis out of range");
  }
  switch (kind_) {
    case RuleKind::kManhattan: {
      // Parity of the coordinate sum excluding this axis.
      std::uint64_t parity = 0;
      for (int j = 0; j < d_; ++j) {
        if (j != axis) parity ^= static_cast<std::uint64_t>(x[j]);
      }
      return (parity & 1u) ? -1 : +1;
    }
    case RuleKind::kIidCoin: {
      std::uint64_t h =
          mix64(seed_ + kGoldenGamma * static_cast<std::uint64_t>(axis + 1));
      for (int j = 0; j < d_; ++j) {
        if (j != axis) h = hash_fold(h, static_cast<std::uint64_t>(x[j]));
      }
      return (h >> 63) ? -1 : +1;
    }
    case RuleKind::kCustom: {
      std::vector<Coord> perp;
      perp.reserve(d_ - 1);
      for (int j = 0; j < d_; ++j) {
        if (j != axis) perp.push_back(x[j]);
      }
      auto it = table_.find({axis, perp});
      if (it == table_.end()) {
        throw std::out_of_range("custom orientation table has no entry for this line");
      }
      return it->second;
    }
  }
  std::abort();  // unreachable
}

std::string OrientationRule::name() const {
  switch (kind_) {
    case RuleKind::kManhattan:
      return "manhattan";
    case RuleKind::kIidCoin:
      return "iid:" + std::to_string(seed_);
    case RuleKind::kCustom:
      return "custom";
  }
  std::abort();
}

LocalEnv local_env(const OrientationRule& rule, const Site& x) {
  const int d = rule.dimension();
  require_site_dim(x, d);
  LocalEnv env(d);
  for (int i = 0; i < d; ++i) {
    env[i] = static_cast<std::int8_t>(rule.line_sign(i, x));
  }
  return env;
}

std::vector<Step> out_steps(const OrientationRule& rule, const Site& x) {
  const LocalEnv env = local_env(rule, x);
  std::vector<Step> steps;
  steps.reserve(env.size());
  for (int i = 0; i < static_cast<int>(env.size()); ++i) {
    steps.push_back(Step{i, env[i]});
  }
  return steps;
}

bool is_directed_edge(const OrientationRule& rule, const Site& x, const Site& y) {
  const int d = rule.dimension();
  require_site_dim(x, d);
  require_site_dim(y, d);
  int step_axis = -1;
  Coord step_sign = 0;
  for (int i = 0; i < d; ++i) {
    const Coord delta = y[i] - x[i];
    if (delta == 0) continue;
    if (delta != 1 && delta != -1) return false;
    if (step_axis != -1) return false;  // more than one axis moved
    step_axis = i;
    step_sign = delta;
  }
  if (step_axis == -1) return false;
  return rule.line_sign(step_axis, x) == step_sign;
}

std::set<LocalEnv> env_census(const OrientationRule& rule, int radius) {
  if (radius < 2) {
    throw std::invalid_argument("census radius must be >= 2");
  }
  const int d = rule.dimension();
  const std::uint64_t side = 2 * static_cast<std::uint64_t>(radius) + 1;
  // (2r+1)^d sites get visited; refuse boxes that would never finish.
  double box = std::pow(static_cast<double>(side), d);
  if (box > 1e8) {
    throw std::invalid_argument("census box (2r+1)^d too large; reduce d or radius");
  }

  std::set<LocalEnv> envs;
  Site x(d, -radius);
  while (true) {
    envs.insert(local_env(rule, x));
    int axis = 0;
    while (axis < d && x[axis] == radius) {
      x[axis] = -radius;
      ++axis;
    }
    if (axis == d) break;
    ++x[axis];
  }
  return envs;
}

bool check_line_consistency(const OrientationRule& rule, const Site& x, int axis,
                            int span) {
  if (span < 1) throw std::invalid_argument("span must be >= 1");
  const int d = rule.dimension();
  require_site_dim(x, d);
  if (axis < 0 || axis >= d) throw std::invalid_argument("axis out of range");

  Site y = x;
  y[axis] = x[axis] - span;
  const std::int8_t first = local_env(rule, y)[axis];
  for (int k = -span + 1; k <= span; ++k) {
    y[axis] = x[axis] + k;
    if (local_env(rule, y)[axis] != first) return false;
  }
  return true;
}

BigInt expected_manhattan_census(Dimension d) {
  const int exp = (d.value() % 2 == 0) ? d.value() : d.value() - 1;
  return int_pow(BigInt(2), static_cast<unsigned>(exp));
}

std::string census_to_json(const std::set<LocalEnv>& envs) {
  std::ostringstream out;
  out << "[";
  bool first_env = true;
  for (const auto& env : envs) {
    if (!first_env) out << ",";
    first_env = false;
    out << "[";
    for (std::size_t i = 0; i < env.size(); ++i) {
      if (i != 0) out << ",";
      out << static_cast<int>(env[i]);
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

std::size_t SiteHash::operator()(const Site& x) const {
  std::uint64_t h = 0x51bca2c5b67dfb42ULL;
  for (Coord c : x) h = hash_fold(h, static_cast<std::uint64_t>(c));
  return static_cast<std::size_t>(h);
}

Site step_target(const Site& x, const Step& s) {
  Site y = x;
  y[s.axis] += s.sign;
  return y;
}

}  // namespace manhattan
