#include "maskent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "maskent/error.hpp"

namespace maskent {

namespace {

template <typename Fn>
void parallel_for(std::uint64_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, workers);
  if (workers == 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  pool.clear();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(15);
  os << v;
  return os.str();
}

std::string tag(std::uint64_t digest) {
  std::ostringstream os;
  os << std::hex << digest;
  return os.str();
}

// Checks shared by every instance: the exact collision bound, the averaged
// Rényi bound, the Jensen step, and equality for coordinate-wise tables.
void check_report(const TheoremReport& r, std::uint64_t digest, std::vector<std::string>& violations) {
  const std::string who = " [f " + tag(digest) + "]";
  if (r.avg_cp > r.cp_bound) {
    violations.push_back("collision bound: avg_cp " + r.avg_cp.str() + " > " + r.cp_bound.str() + who);
  }
  if (r.avg_h2 < r.h2_bound - kTolerance) {
    violations.push_back("renyi bound: avg_h2 " + fmt_double(r.avg_h2) + " < " + fmt_double(r.h2_bound) + who);
  }
  const double jensen = -r.avg_cp.log2();
  if (r.avg_h2 < jensen - kTolerance) {
    violations.push_back("jensen step: avg_h2 " + fmt_double(r.avg_h2) + " < -log2(avg_cp) " + fmt_double(jensen) + who);
  }
  if (r.coordinatewise && !r.equality_holds) {
    violations.push_back("equality clause: coordinate-wise table has avg_cp " + r.avg_cp.str() + " != " + r.cp_bound.str() + who);
  }
}

// joint_collision == avg_cp, shell terms sum to it, and every conditional
// term is at most q^{-d} (with equality for coordinate-wise tables).
void check_identities(const FunctionTable& f, const TheoremReport& r, const Rational& joint,
                      const std::vector<ShellTerm>& shells, std::uint64_t digest, std::vector<std::string>& violations) {
  const std::string who = " [f " + tag(digest) + "]";
  if (joint != r.avg_cp) {
    violations.push_back("joint identity: joint collision " + joint.str() + " != avg_cp " + r.avg_cp.str() + who);
  }
  const Rational total = shell_total(shells);
  if (total != joint) {
    violations.push_back("shell identity: shell sum " + total.str() + " != joint collision " + joint.str() + who);
  }
  for (const auto& s : shells) {
    const Rational cap(1, ipow(Rational::Integer(f.q()), static_cast<unsigned>(s.distance)));
    if (s.conditional_collision > cap) {
      violations.push_back("shell cap: d=" + std::to_string(s.distance) + " term " + s.conditional_collision.str() + " > " + cap.str() + who);
    }
    if (r.coordinatewise && s.conditional_collision != cap) {
      violations.push_back("shell equality: d=" + std::to_string(s.distance) + " term " + s.conditional_collision.str() + " != " + cap.str() + who);
    }
  }
}

void check_images(const FunctionTable& f, std::uint64_t budget, std::uint64_t digest, std::vector<std::string>& violations) {
  const ImageStats stats = image_stats(f, budget);
  const std::string who = " [f " + tag(digest) + "]";
  if (!stats.max_exceeds_half) {
    violations.push_back("image corollary: max image " + std::to_string(stats.max_image) + " <= q/2" + who);
  }
  if (!stats.average_meets_bound) {
    violations.push_back("image corollary: average image " + stats.average_image.str() + " < q^2/(2q-1)" + who);
  }
}

struct Evaluated {
  InstanceSummary summary;
  std::vector<std::string> violations;
  double h2_slack = 0.0;
  Rational cp_slack;
};

Evaluated evaluate(const FunctionTable& f, bool with_identities, bool with_images, std::uint64_t budget) {
  Evaluated out;
  const TheoremReport r = family_averages(f, false, budget);
  out.summary = InstanceSummary{table_digest(f), r.avg_cp, r.avg_h2, r.avg_shannon, r.coordinatewise, r.equality_holds};
  check_report(r, out.summary.digest, out.violations);
  if (with_identities) {
    check_identities(f, r, joint_collision(f, budget), shell_decomposition(f, budget), out.summary.digest, out.violations);
  }
  if (with_images) check_images(f, budget, out.summary.digest, out.violations);
  out.h2_slack = r.avg_h2 - r.h2_bound;
  out.cp_slack = r.cp_bound - r.avg_cp;
  return out;
}

CampaignResult start_result(const CampaignConfig& config) {
  if (config.n < 1) throw ArgumentError("campaign dimension must be >= 1");
  CampaignResult result;
  result.config = config;
  Bounds b = bounds(config.q, config.n);
  result.cp_bound = std::move(b.cp_bound);
  result.h2_bound = b.h2_bound;
  return result;
}

// Folds per-instance outcomes, in order, into the result.
void merge(CampaignResult& result, std::vector<Evaluated>& evaluated) {
  if (evaluated.empty()) return;
  Rational slack_sum;
  double h2_sum = 0.0;
  result.min_cp_slack = result.max_cp_slack = evaluated.front().cp_slack;
  result.min_h2_slack = result.max_h2_slack = evaluated.front().h2_slack;
  result.max_avg_cp = evaluated.front().summary.avg_cp;
  for (auto& e : evaluated) {
    result.min_cp_slack = std::min(result.min_cp_slack, e.cp_slack);
    result.max_cp_slack = std::max(result.max_cp_slack, e.cp_slack);
    slack_sum += e.cp_slack;
    result.min_h2_slack = std::min(result.min_h2_slack, e.h2_slack);
    result.max_h2_slack = std::max(result.max_h2_slack, e.h2_slack);
    h2_sum += e.h2_slack;
    result.max_avg_cp = std::max(result.max_avg_cp, e.summary.avg_cp);
    result.coordinatewise_count += e.summary.coordinatewise;
    for (auto& v : e.violations) result.violations.push_back(std::move(v));
    result.instances.push_back(std::move(e.summary));
  }
  const auto count = static_cast<long long>(evaluated.size());
  result.mean_cp_slack = slack_sum / Rational(count);
  result.mean_h2_slack = h2_sum / static_cast<double>(count);
  if (result.max_avg_cp > result.cp_bound) {
    result.violations.push_back("collision bound: campaign maximum " + result.max_avg_cp.str() + " > " + result.cp_bound.str());
  }
}

FunctionTable decode_function(const FieldPtr& field, std::size_t n, std::uint64_t domain, std::uint64_t index) {
  std::vector<std::uint64_t> outputs(domain);
  for (auto& y : outputs) {
    y = index % domain;
    index /= domain;
  }
  return FunctionTable(field, n, std::move(outputs));
}

template <typename Clock = std::chrono::steady_clock>
struct Stopwatch {
  typename Clock::time_point start = Clock::now();
  std::chrono::duration<double> elapsed() const { return Clock::now() - start; }
};

}  // namespace

std::string to_string(CampaignMode mode) {
  switch (mode) {
    case CampaignMode::exhaustive: return "exhaustive";
    case CampaignMode::random: return "random";
    case CampaignMode::hillclimb: return "hillclimb";
  }
  return "unknown";
}

CampaignMode parse_campaign_mode(std::string_view name) {
  if (name == "exhaustive") return CampaignMode::exhaustive;
  if (name == "random") return CampaignMode::random;
  if (name == "hillclimb") return CampaignMode::hillclimb;
  throw ArgumentError("unknown campaign suite '" + std::string(name) + "'");
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("empty range");
  // Largest multiple of bound representable in 64 bits, minus one.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  std::uint64_t draw;
  do {
    draw = rng();
  } while (draw > limit);
  return draw % bound;
}

FunctionTable random_table(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
  const auto size = checked_pow(field->q(), n);
  if (!size) throw TableError("domain size overflows 64 bits");
  std::vector<std::uint64_t> outputs(*size);
  for (auto& y : outputs) y = uniform_below(rng, *size);
  return FunctionTable(field, n, std::move(outputs));
}

std::uint64_t table_digest(const FunctionTable& f) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t word) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (word >> (8 * byte)) & 0xFF;
      h *= 1099511628211ull;
    }
  };
  mix(f.field().p());
  mix(f.field().m());
  mix(f.n());
  for (std::uint64_t y : f.outputs()) mix(y);
  return h;
}

CampaignResult exhaustive_campaign(const CampaignConfig& config) {
  const Stopwatch watch;
  CampaignResult result = start_result(config);
  const FieldPtr field = build_field_of_order(config.q);
  const std::uint64_t domain = *checked_pow(config.q, config.n);
  const auto count = checked_pow(domain, domain);
  require_budget(count, config.budget, "exhaustive campaign");
  require_budget(checked_pow(config.q, 2 * config.n), config.budget, "exhaustive campaign instance");

  std::vector<Evaluated> evaluated(*count);
  parallel_for(*count, config.workers, [&](std::uint64_t index) {
    evaluated[index] = evaluate(decode_function(field, config.n, domain, index), true, config.n == 1, config.budget);
  });
  merge(result, evaluated);

  bool all_coordinatewise = true;
  for (std::uint64_t index = 0; index < *count; ++index) {
    const InstanceSummary& s = result.instances[index];
    if (s.avg_cp != result.max_avg_cp) continue;
    all_coordinatewise = all_coordinatewise && s.coordinatewise;
    result.argmax.push_back(decode_function(field, config.n, domain, index));
  }
  result.argmax_all_coordinatewise = all_coordinatewise;
  result.wall_time = watch.elapsed();
  return result;
}

CampaignResult random_campaign(const CampaignConfig& config) {
  const Stopwatch watch;
  CampaignResult result = start_result(config);
  const FieldPtr field = build_field_of_order(config.q);
  require_budget(checked_pow(config.q, 2 * config.n), config.budget, "random campaign instance");

  std::mt19937_64 rng(config.seed);
  std::vector<FunctionTable> tables;
  tables.reserve(config.samples);
  for (std::uint64_t i = 0; i < config.samples; ++i) tables.push_back(random_table(field, config.n, rng));

  std::vector<Evaluated> evaluated(tables.size());
  parallel_for(tables.size(), config.workers, [&](std::uint64_t i) {
    evaluated[i] = evaluate(tables[i], i < config.identity_samples, false, config.budget);
  });
  merge(result, evaluated);
  result.wall_time = watch.elapsed();
  return result;
}

CampaignResult hillclimb_search(const CampaignConfig& config) {
  const Stopwatch watch;
  CampaignResult result = start_result(config);
  const FieldPtr field = build_field_of_order(config.q);
  require_budget(checked_pow(config.q, 2 * config.n), config.budget, "hill-climb instance");
  const std::uint64_t domain = *checked_pow(config.q, config.n);
  // avg_cp = count / q^{3n}; the bound in the same units.
  const Rational::Integer denominator = ipow(Rational::Integer(domain), 3);
  const Rational::Integer ceiling = result.cp_bound.numerator() * (denominator / result.cp_bound.denominator());

  std::mt19937_64 rng(config.seed);
  std::vector<FunctionTable> bests;
  std::vector<Evaluated> evaluated;
  for (std::uint64_t restart = 0; restart < config.restarts; ++restart) {
    FunctionTable current = random_table(field, config.n, rng);
    Rational::Integer score = family_collision_count(current, config.budget);
    result.trajectory.push_back({restart, 0, Rational(score, denominator)});
    std::vector<std::uint64_t> outputs(current.outputs().begin(), current.outputs().end());
    for (std::uint64_t iter = 1; iter <= config.iters && score < ceiling; ++iter) {
      const std::uint64_t x = uniform_below(rng, domain);
      const std::uint64_t y = uniform_below(rng, domain);
      if (outputs[x] == y) continue;
      const std::uint64_t previous = outputs[x];
      outputs[x] = y;
      FunctionTable candidate(field, config.n, outputs);
      Rational::Integer candidate_score = family_collision_count(candidate, config.budget);
      if (candidate_score > score) {
        score = std::move(candidate_score);
        current = std::move(candidate);
        result.trajectory.push_back({restart, iter, Rational(score, denominator)});
      } else {
        outputs[x] = previous;
      }
    }
    evaluated.push_back(evaluate(current, true, false, config.budget));
    bests.push_back(std::move(current));
  }
  merge(result, evaluated);

  for (std::size_t i = 1; i < result.trajectory.size(); ++i) {
    const auto& prev = result.trajectory[i - 1];
    const auto& cur = result.trajectory[i];
    if (cur.restart == prev.restart && cur.best <= prev.best) {
      result.violations.push_back("hill-climb trajectory not strictly increasing at restart " + std::to_string(cur.restart));
    }
  }
  bool all_coordinatewise = true;
  for (std::size_t i = 0; i < bests.size(); ++i) {
    if (result.instances[i].avg_cp != result.max_avg_cp) continue;
    all_coordinatewise = all_coordinatewise && result.instances[i].coordinatewise;
    result.argmax.push_back(bests[i]);
  }
  result.argmax_all_coordinatewise = all_coordinatewise && !result.argmax.empty();
  result.wall_time = watch.elapsed();
  return result;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  switch (config.mode) {
    case CampaignMode::exhaustive: return exhaustive_campaign(config);
    case CampaignMode::random: return random_campaign(config);
    case CampaignMode::hillclimb: return hillclimb_search(config);
  }
  throw ArgumentError("unknown campaign mode");
}

InstanceVerdict verify_instance(const FunctionTable& f, bool keep_per_k, std::uint64_t budget) {
  InstanceVerdict verdict;
  const std::uint64_t digest = table_digest(f);
  const bool is_square = f == square_family(f.field_ptr(), f.n());
  verdict.report = family_averages(f, keep_per_k || is_square, budget);
  TheoremReport& r = verdict.report;
  check_report(r, digest, verdict.violations);

  verdict.joint_collision = joint_collision(f, budget);
  verdict.shells = shell_decomposition(f, budget);
  check_identities(f, r, verdict.joint_collision, verdict.shells, digest, verdict.violations);
  if (f.n() == 1) check_images(f, budget, digest, verdict.violations);

  if (r.coordinatewise) {
    verdict.chain_rule_gap = chain_rule_gap(f, budget);
    if (*verdict.chain_rule_gap > kTolerance) {
      verdict.violations.push_back("chain rule: entropy differs from coordinate sum by " + fmt_double(*verdict.chain_rule_gap));
    }
  }

  if (is_square) {
    const TightnessPrediction pred = tightness_predictions(f.q(), f.n());
    verdict.prediction = pred;
    if (std::abs(r.avg_shannon - pred.avg_shannon) > kTolerance) {
      verdict.violations.push_back("tightness: avg_shannon " + fmt_double(r.avg_shannon) + " != predicted " + fmt_double(pred.avg_shannon));
    }
    if (std::abs(r.avg_h2 - pred.avg_h2) > kTolerance) {
      verdict.violations.push_back("tightness: avg_h2 " + fmt_double(r.avg_h2) + " != predicted " + fmt_double(pred.avg_h2));
    }
    if (f.q() % 2 == 0) {
      // cp(g_k(A)) = 2^{weight(k)} / q^n
      const Rational::Integer domain(f.domain_size());
      for (const auto& entry : *r.per_k) {
        const Rational expected(ipow(Rational::Integer(2), static_cast<unsigned>(hamming_weight(entry.k))), domain);
        if (entry.cp != expected) {
          verdict.violations.push_back("even square map: cp at k code " + std::to_string(entry.k.code()) + " is " + entry.cp.str() + ", expected " + expected.str());
        }
      }
    }
    if (!keep_per_k) r.per_k.reset();
  }
  return verdict;
}

}  // namespace maskent
