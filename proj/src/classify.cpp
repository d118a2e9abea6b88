#include "combhardy/classify.hpp"

#include <cmath>
#include <limits>

#include "combhardy/errors.hpp"

namespace combhardy {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

Verdict with_tails(const CombSpec& spec, Verdict v) {
  if (v.decision == Decision::InfiniteHardy) {
    v.bound_lower = kInf;
    v.bound_upper = kInf;
  } else {
    BoundTails tails = bound_tails(spec);
    v.bound_lower = tails.lower_effective;
    v.bound_upper = tails.upper;
  }
  return v;
}

Verdict infinite(const CombSpec& spec, Justification j, std::string notes) {
  Verdict v;
  v.decision = Decision::InfiniteHardy;
  v.justification = j;
  v.notes = std::move(notes);
  return with_tails(spec, v);
}

Verdict finite(const CombSpec& spec, Justification j, std::string notes) {
  Verdict v;
  v.decision = Decision::FiniteHardy;
  v.justification = j;
  v.notes = std::move(notes);
  return with_tails(spec, v);
}

/// Symbolic limit of log alpha_n / (b_n - b_{n-1}) for families with a
/// declared envelope. Only an infinite limit licenses the general bound rule.
enum class EnvelopeLimit { None, Finite, Infinite };

EnvelopeLimit envelope_ratio_limit(const CombSpec& spec) {
  switch (spec.family) {
    case Family::SubexpExp: {
      // b_n = n^p, ratio n^p / (n^p - (n-1)^p) ~ n/p.
      double p = std::get<SubexpExpParams>(spec.params).p;
      return p >= 1.0 ? EnvelopeLimit::Infinite : EnvelopeLimit::None;
    }
    case Family::DoubleExp:
      // b_n = e^n, ratio e/(e-1): finite, the rule does not apply.
      return EnvelopeLimit::Finite;
    case Family::Oscillating:
      // Off-spike terms keep the liminf at log(c)/r: finite.
      return EnvelopeLimit::Finite;
    case Family::Custom: {
      const auto& cp = std::get<CustomParams>(spec.params);
      if (cp.formula == "exp_exp_nk" || cp.formula == "exp_exp_n_over_log_n")
        return EnvelopeLimit::Infinite;
      return EnvelopeLimit::None;
    }
    default:
      return EnvelopeLimit::None;
  }
}

}  // namespace

const char* to_string(Decision d) {
  switch (d) {
    case Decision::InfiniteHardy: return "InfiniteHardy";
    case Decision::FiniteHardy: return "FiniteHardy";
    case Decision::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(Justification j) {
  switch (j) {
    case Justification::Thm1_2_Subexponential: return "Thm1_2_Subexponential";
    case Justification::Thm1_3_GeneralBound: return "Thm1_3_GeneralBound";
    case Justification::Cor1_4_ExpBound: return "Cor1_4_ExpBound";
    case Justification::Thm1_5_Oscillating: return "Thm1_5_Oscillating";
    case Justification::Thm1_6_DoubleExp: return "Thm1_6_DoubleExp";
    case Justification::Sec1_ExponentialType: return "Sec1_ExponentialType";
    case Justification::BoundedGaps_Thm1_1: return "BoundedGaps_Thm1_1";
    case Justification::Cor4_1_Bou: return "Cor4_1_Bou";
    case Justification::NumericTrendOnly: return "NumericTrendOnly";
  }
  return "?";
}

Verdict classify(const CombSpec& spec, const ClassifyOptions& opts) {
  if (!spec.materialized()) throw Error("spec must be materialized first");

  // Rule 1: bounded gaps.
  if (spec.family == Family::Constant)
    return infinite(spec, Justification::BoundedGaps_Thm1_1,
                    "gap sequence is constant, hence bounded");

  // Rule 2: subexponential growth, log alpha_n / n -> 0.
  if (spec.family == Family::Polynomial)
    return infinite(spec, Justification::Thm1_2_Subexponential,
                    "log alpha_n / n = p log(n+1)/n -> 0");
  if (spec.family == Family::SubexpExp &&
      std::get<SubexpExpParams>(spec.params).p < 1.0)
    return infinite(spec, Justification::Thm1_2_Subexponential,
                    "log alpha_n / n = n^{p-1} -> 0 for p < 1");

  // Rule 3: declared envelope with log alpha_n / (b_n - b_{n-1}) -> inf.
  if (envelope_ratio_limit(spec) == EnvelopeLimit::Infinite) {
    if (spec.family == Family::SubexpExp &&
        std::get<SubexpExpParams>(spec.params).p == 1.0)
      return infinite(spec, Justification::Cor1_4_ExpBound,
                      "alpha_n = e^n <= e^n and alpha_n -> infinity");
    std::string notes = "envelope ratio log alpha_n/(b_n - b_{n-1}) -> infinity";
    if (spec.family == Family::Custom &&
        std::get<CustomParams>(spec.params).formula == "exp_exp_n_over_log_n") {
      // The envelope b_n = e^{n/log n} is an interpretation: its increment
      // floor is only checked numerically over the materialized range.
      double r = kInf;
      for (int n = 2; n <= spec.truncate_n; ++n) {
        double d = *declared_b_value(spec, n) - *declared_b_value(spec, n - 1);
        r = std::min(r, d);
      }
      notes += "; envelope declared by interpretation, numeric increment floor " +
               std::to_string(r);
    }
    return infinite(spec, Justification::Thm1_3_GeneralBound, notes);
  }

  // Rule 4: exponential type alpha_n = e^{c n}.
  if (spec.family == Family::Exponential) {
    auto series = criterion_series(spec);
    return infinite(spec, Justification::Sec1_ExponentialType,
                    "alpha_n = e^{cn}; criterion ratio at truncation R_N = " +
                        std::to_string(series.back().ratio_Rprime));
  }

  // Rule 5: the sparse-spike construction.
  if (spec.family == Family::Oscillating)
    return finite(spec, Justification::Thm1_5_Oscillating,
                  "spike subsequence keeps the criterion liminf finite");

  // Rule 6: double exponential gaps.
  if (spec.family == Family::DoubleExp)
    return finite(spec, Justification::Thm1_6_DoubleExp,
                  "criterion ratio tends to e/(e-1)");

  // Fallback: custom formulas without a registered class may lean on the
  // exit-time moment corollary when asked; explicit lists never do.
  if (opts.run_bou_check && spec.family == Family::Custom &&
      check_bou_corollary(spec, opts.bou_thetas)) {
    return infinite(spec, Justification::Cor4_1_Bou,
                    "desk-scale tail-ratio test of the moment series passed; "
                    "numeric evidence, not a symbolic proof");
  }

  Verdict v;
  v.decision = Decision::Undetermined;
  v.justification = Justification::NumericTrendOnly;
  v.notes = "no symbolic rule applies; numeric tails attached as diagnostics";
  v.trend = trend_report(spec);
  return with_tails(spec, v);
}

bool check_bou_corollary(const CombSpec& spec, std::span<const double> thetas) {
  if (!spec.materialized()) throw Error("spec must be materialized first");
  if (thetas.empty()) throw Error("check_bou_corollary needs at least one theta");
  const int n_total = spec.truncate_n;

  for (double theta : thetas) {
    if (!(theta > 0.0 && theta < 1.0))
      throw Error("theta must lie in (0,1)");
    // log t_j = 2 max_{n<=j} log alpha_n + j log theta; the series converges
    // iff the tail log-ratios stay negative.
    double running_max = -kInf;
    std::vector<double> log_terms(n_total);
    for (int j = 1; j <= n_total; ++j) {
      running_max = std::max(running_max, spec.log_gaps[j - 1]);
      log_terms[j - 1] = 2.0 * running_max + j * std::log(theta);
    }
    TailWindow w = tail_window(n_total);
    for (int j = std::max(2, w.lo); j <= w.hi; ++j) {
      if (log_terms[j - 1] - log_terms[j - 2] >= 0.0) return false;
    }
  }
  return true;
}

CombSpec build_counterexample(const OscillatingParams& params, int n) {
  if (params.c <= 1.0) throw InvalidFamilyParam("oscillating c must exceed 1");
  if (params.min_b_increment(n) <= 0.0)
    throw InvalidFamilyParam("envelope increment floor must be positive");
  CombSpec spec;
  spec.family = Family::Oscillating;
  spec.params = params;
  spec.truncate_n = n;
  return materialize(std::move(spec));
}

}  // namespace combhardy
