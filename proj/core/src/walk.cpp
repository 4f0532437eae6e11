#include "manhattan/walk.hpp"

#include "manhattan/rng.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <numeric>
#include <sstream>
#include <thread>

namespace manhattan {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr std::uint64_t kMaxSimSteps = 1'000'000'000;

std::string site_string(const std::vector<Coord>& pos) {
  std::string s = "(";
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if (i != 0) s += ",";
    s += std::to_string(pos[i]);
  }
  return s + ")";
}

__int128 normsq_of(const std::vector<Coord>& pos) {
  __int128 s = 0;
  for (Coord c : pos) s += static_cast<__int128>(c) * c;
  return s;
}

// Exact per-record integer sums, staged in 128-bit lanes and flushed into
// big integers before any lane can overflow.
struct RecordAccum {
  explicit RecordAccum(int d)
      : lane_x(d, 0), lane_x_sq(d, 0), big_sum_x(d, 0), big_sum_x_sq(d, 0) {}

  std::vector<__int128> lane_x;
  std::vector<__int128> lane_x_sq;
  __int128 lane_q = 0;
  std::vector<BigInt> big_sum_x;
  std::vector<BigInt> big_sum_x_sq;
  BigInt big_sum_q = 0;

  void flush() {
    for (std::size_t i = 0; i < lane_x.size(); ++i) {
      big_sum_x[i] += bigint_from_i128(lane_x[i]);
      big_sum_x_sq[i] += bigint_from_i128(lane_x_sq[i]);
      lane_x[i] = 0;
      lane_x_sq[i] = 0;
    }
    big_sum_q += bigint_from_i128(lane_q);
    lane_q = 0;
  }
};

// Chains one lane may absorb before a 128-bit sum could overflow.
std::uint64_t chains_per_flush(int d, std::uint64_t n_steps, bool& q_fits) {
  const BigInt limit = int_pow(BigInt(2), 126);
  const BigInt m2 = BigInt(n_steps) * n_steps;  // per-chain x_i^2
  const BigInt mq = m2 * m2 * d * d;            // per-chain |x|^4
  q_fits = mq <= limit;
  BigInt per = limit / m2;
  if (q_fits) {
    const BigInt per_q = limit / mq;
    if (per_q < per) per = per_q;
  }
  const BigInt cap = BigInt(std::uint64_t(1) << 62);
  if (per > cap) per = cap;
  return per < 1 ? 1 : per.convert_to<std::uint64_t>();
}

struct ChainRunner {
  const OrientationRule& rule;
  const std::vector<std::uint64_t>& schedule;
  std::uint64_t n_steps;
  std::uint64_t master_seed;
  bool check;
  bool q_fits;

  void run_chain(std::uint64_t chain, std::vector<RecordAccum>& accums) const {
    const int d = rule.dimension();
    Xoshiro256StarStar rng(chain_seed(master_seed, chain));

    std::vector<Coord> pos(d, 0);
    // Manhattan environment tracked as parity bits: the sign on axis i is
    // given by the parity of (coordinate sum) - x[i].
    std::uint64_t coord_parity = 0;
    unsigned sum_parity = 0;
    const bool is_manhattan = rule.kind() == RuleKind::kManhattan;

    LocalEnv env;
    if (check) env = local_env(rule, pos);

    std::size_t rec = 0;
    if (schedule[rec] == 0) {
      record(pos, accums[rec]);
      ++rec;
    }

    for (std::uint64_t n = 1; n <= n_steps; ++n) {
      const int axis = static_cast<int>(bounded_index(rng.next(), d));
      int sign;
      if (check) {
        sign = env[axis];
      } else if (is_manhattan) {
        sign = ((sum_parity ^ (coord_parity >> axis)) & 1u) ? -1 : +1;
      } else {
        sign = rule.line_sign(axis, pos);
      }

      if (!check) {
        pos[axis] += sign;
        coord_parity ^= std::uint64_t(1) << axis;
        sum_parity ^= 1u;
      } else {
        const __int128 normsq_before = normsq_of(pos);
        const Coord old_coord = pos[axis];
        pos[axis] += sign;

        const __int128 lhs = normsq_of(pos) - normsq_before;
        const __int128 rhs = __int128(2) * old_coord * sign + 1;
        if (lhs != rhs) {
          throw InvariantViolation(
              "squared-norm increment identity failed at chain " +
              std::to_string(chain) + ", step " + std::to_string(n) + ", position " +
              site_string(pos));
        }

        const LocalEnv fresh = local_env(rule, pos);
        if (is_manhattan) {
          for (int i = 0; i < d; ++i) {
            const std::int8_t expected = (i == axis) ? env[i] : std::int8_t(-env[i]);
            if (fresh[i] != expected) {
              throw InvariantViolation("environment flip rule failed at chain " +
                                       std::to_string(chain) + ", step " +
                                       std::to_string(n) + ", position " +
                                       site_string(pos));
            }
          }
        }
        env = fresh;
      }

      if (rec < schedule.size() && n == schedule[rec]) {
        record(pos, accums[rec]);
        ++rec;
      }
    }
  }

  void record(const std::vector<Coord>& pos, RecordAccum& acc) const {
    __int128 normsq = 0;
    for (std::size_t i = 0; i < pos.size(); ++i) {
      const Coord c = pos[i];
      acc.lane_x[i] += c;
      const __int128 csq = static_cast<__int128>(c) * c;
      acc.lane_x_sq[i] += csq;
      normsq += csq;
    }
    if (q_fits) {
      acc.lane_q += normsq * normsq;
    } else {
      const BigInt nb = bigint_from_i128(normsq);
      acc.big_sum_q += nb * nb;
    }
  }
};

}  // namespace

WalkerState make_walker(const OrientationRule& rule) {
  WalkerState state;
  state.position = Site(rule.dimension(), 0);
  state.env = local_env(rule, state.position);
  state.steps_taken = 0;
  return state;
}

WalkerState step(const WalkerState& state, const OrientationRule& rule,
                 int axis_choice) {
  const int d = rule.dimension();
  if (axis_choice < 0 || axis_choice >= d) {
    throw std::invalid_argument("axis choice out of range");
  }
  WalkerState next;
  next.position = state.position;
  next.position[axis_choice] += state.env[axis_choice];
  next.env = local_env(rule, next.position);
  next.steps_taken = state.steps_taken + 1;
  return next;
}

std::vector<std::uint64_t> record_schedule(std::uint64_t n_steps,
                                           std::uint64_t stride) {
  std::vector<std::uint64_t> schedule;
  for (std::uint64_t n = 0; n <= n_steps; n += stride) schedule.push_back(n);
  if (schedule.back() != n_steps) schedule.push_back(n_steps);
  return schedule;
}

SampleMoments simulate(const SimConfig& config) {
  if (config.n_steps < 1) throw std::invalid_argument("n_steps must be >= 1");
  if (config.n_steps > kMaxSimSteps) {
    throw std::invalid_argument("n_steps above supported bound 10^9");
  }
  if (config.n_chains < 1) throw std::invalid_argument("n_chains must be >= 1");
  if (config.record_stride < 1) {
    throw std::invalid_argument("record_stride must be >= 1");
  }
  if (config.n_workers < 1) throw std::invalid_argument("n_workers must be >= 1");

  const int d = config.dimension();
  const auto schedule = record_schedule(config.n_steps, config.record_stride);
  const bool check = config.invariants_resolved();

  bool q_fits = true;
  const std::uint64_t flush_every = chains_per_flush(d, config.n_steps, q_fits);
  const ChainRunner runner{config.rule, schedule,    config.n_steps,
                           config.seed, check,       q_fits};

  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(config.n_workers, config.n_chains));

  std::vector<std::vector<RecordAccum>> partials(
      workers, std::vector<RecordAccum>(schedule.size(), RecordAccum(d)));
  std::vector<std::exception_ptr> errors(workers);

  auto work = [&](unsigned w) {
    try {
      const std::uint64_t lo = config.n_chains * w / workers;
      const std::uint64_t hi = config.n_chains * (w + 1) / workers;
      std::uint64_t since_flush = 0;
      for (std::uint64_t chain = lo; chain < hi; ++chain) {
        runner.run_chain(chain, partials[w]);
        if (++since_flush == flush_every) {
          for (auto& acc : partials[w]) acc.flush();
          since_flush = 0;
        }
      }
      for (auto& acc : partials[w]) acc.flush();
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  for (unsigned w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
  }

  SampleMoments result;
  result.rule_name = config.rule.name();
  result.d = d;
  result.n_steps = config.n_steps;
  result.n_chains = config.n_chains;
  result.seed = config.seed;
  result.record_stride = config.record_stride;
  result.checked_invariants = check;
  result.records.resize(schedule.size());

  // Merge in worker order; the sums are exact integers, so the result is
  // identical for every partition.
  for (std::size_t r = 0; r < schedule.size(); ++r) {
    MomentRecord& rec = result.records[r];
    rec.n = schedule[r];
    rec.sum_x.assign(d, 0);
    rec.sum_x_sq.assign(d, 0);
    rec.sum_normsq_sq = 0;
    for (unsigned w = 0; w < workers; ++w) {
      const RecordAccum& acc = partials[w][r];
      for (int i = 0; i < d; ++i) {
        rec.sum_x[i] += acc.big_sum_x[i];
        rec.sum_x_sq[i] += acc.big_sum_x_sq[i];
      }
      rec.sum_normsq_sq += acc.big_sum_q;
    }
  }
  return result;
}

BigInt SampleMoments::sum_normsq(const MomentRecord& rec) const {
  return std::accumulate(rec.sum_x_sq.begin(), rec.sum_x_sq.end(), BigInt(0));
}

Rational SampleMoments::mean_estimate(const MomentRecord& rec, int coord) const {
  return Rational(rec.sum_x.at(coord), BigInt(n_chains));
}

Rational SampleMoments::msd_estimate(const MomentRecord& rec) const {
  return Rational(sum_normsq(rec), BigInt(n_chains));
}

namespace {

double stderr_from_sums(const BigInt& s1, const BigInt& s2, std::uint64_t n) {
  if (n < 2) return 0.0;
  // Degenerate sample: all values equal.
  if (s2 * n == s1 * s1) return 0.0;
  const double nd = static_cast<double>(n);
  const double mean = s1.convert_to<double>() / nd;
  const double var =
      (s2.convert_to<double>() - nd * mean * mean) / (nd - 1.0);
  return var > 0.0 ? std::sqrt(var / nd) : 0.0;
}

}  // namespace

double SampleMoments::msd_stderr(const MomentRecord& rec) const {
  return stderr_from_sums(sum_normsq(rec), rec.sum_normsq_sq, n_chains);
}

double SampleMoments::mean_stderr(const MomentRecord& rec, int coord) const {
  return stderr_from_sums(rec.sum_x.at(coord), rec.sum_x_sq.at(coord), n_chains);
}

std::string SampleMoments::to_csv() const {
  std::ostringstream out;
  out << "# manhattan simulate v1\n";
  out << "# rule=" << rule_name << " d=" << d << " n_steps=" << n_steps
      << " n_chains=" << n_chains << " seed=" << seed
      << " record_stride=" << record_stride
      << " check_invariants=" << (checked_invariants ? 1 : 0) << "\n";
  out << "n";
  for (int i = 0; i < d; ++i) out << ",mean_" << i;
  out << ",msd_estimate,stderr,n_chains\n";
  for (const auto& rec : records) {
    out << rec.n;
    for (int i = 0; i < d; ++i) {
      out << "," << format_g17(to_double(mean_estimate(rec, i)));
    }
    out << "," << format_g17(to_double(msd_estimate(rec)));
    out << "," << format_g17(msd_stderr(rec));
    out << "," << n_chains << "\n";
  }
  return out.str();
}

std::string SampleMoments::to_json() const {
  ordered_json j;
  j["schema"] = "manhattan-simulate-v1";
  j["rule"] = rule_name;
  j["d"] = d;
  j["n_steps"] = n_steps;
  j["n_chains"] = n_chains;
  j["seed"] = seed;
  j["record_stride"] = record_stride;
  j["check_invariants"] = checked_invariants;
  j["records"] = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json r;
    r["n"] = rec.n;
    r["mean"] = ordered_json::array();
    r["mean_float"] = ordered_json::array();
    for (int i = 0; i < d; ++i) {
      const Rational m = mean_estimate(rec, i);
      r["mean"].push_back({{"num", numerator(m).str()}, {"den", denominator(m).str()}});
      r["mean_float"].push_back(to_double(m));
    }
    const Rational v = msd_estimate(rec);
    r["msd"] = {{"num", numerator(v).str()}, {"den", denominator(v).str()}};
    r["msd_float"] = to_double(v);
    r["stderr"] = msd_stderr(rec);
    j["records"].push_back(std::move(r));
  }
  return j.dump(2) + "\n";
}

}  // namespace manhattan
