#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "crmip/errors.hpp"
#include "crmip/traffic_model.hpp"

namespace crmip {

enum class ServiceFamily { exponential };

inline ServiceFamily parse_service_family(std::string_view name) {
  if (name == "exponential") return ServiceFamily::exponential;
  throw unsupported_distribution("unsupported service-time distribution '" + std::string(name) +
                                 "' (built in: exponential)");
}

inline const char* to_string(ServiceFamily f) {
  switch (f) {
    case ServiceFamily::exponential:
      return "exponential";
  }
  return "?";
}

// Secondary-user service time, described through the Laplace transform L(s)
// of its density. Everything the handoff-count analysis needs is expressed
// in terms of L and its derivatives. Real is the scalar type; the analysis
// itself runs in double, extended precision is used by derivative checks.
template <typename Real>
struct BasicServiceTimeModel {
  Real mu_mcr = Real(1.8);
  ServiceFamily family = ServiceFamily::exponential;

  void validate() const {
    detail::require(std::isfinite(mu_mcr) && mu_mcr > 0,
                    "mu_mcr must be a finite rate > 0, got " + std::to_string(mu_mcr));
  }

  Real mean() const { return 1 / mu_mcr; }

  Real laplace(Real s) const { return laplace_derivative(s, 0); }

  // 1 - L(s), evaluated without cancellation for small s.
  Real laplace_complement(Real s) const {
    check_s(s);
    switch (family) {
      case ServiceFamily::exponential:
        return s / (mu_mcr + s);
    }
    throw unsupported_distribution("laplace_complement");
  }

  // k-th derivative of L at s, closed form.
  Real laplace_derivative(Real s, int k) const {
    check_s(s);
    detail::require(k >= 0, "derivative order must be >= 0");
    switch (family) {
      case ServiceFamily::exponential: {
        // (-1)^k k! mu / (mu + s)^(k+1)
        const Real a = mu_mcr + s;
        Real v = mu_mcr / a;
        for (int j = 1; j <= k; ++j) v *= -static_cast<Real>(j) / a;
        return v;
      }
    }
    throw unsupported_distribution("laplace_derivative");
  }

  // (-x)^k / k! * L^(k)(s) without forming k! (stays finite for large k).
  Real taylor_term(Real s, int k, Real x) const {
    check_s(s);
    detail::require(k >= 0, "derivative order must be >= 0");
    switch (family) {
      case ServiceFamily::exponential: {
        const Real a = mu_mcr + s;
        return mu_mcr / a * std::pow(x / a, k);
      }
    }
    throw unsupported_distribution("taylor_term");
  }

  // Pr(a Poisson stream of rate s produces at least k events within one
  // service time).
  Real prob_at_least(Real s, int k) const {
    check_s(s);
    detail::require(k >= 0, "event count must be >= 0");
    switch (family) {
      case ServiceFamily::exponential:
        return std::pow(s / (mu_mcr + s), k);
    }
    throw unsupported_distribution("prob_at_least");
  }

 private:
  static void check_s(Real s) {
    detail::require(std::isfinite(s) && s >= 0, "Laplace argument must be finite and >= 0");
  }
};

using ServiceTimeModel = BasicServiceTimeModel<double>;

enum class EvaluationVariant {
  normalized,  // path-probability form; sums to one
  as_printed,  // literal failure-path term with the extra rate factor
};

inline EvaluationVariant parse_variant(std::string_view name) {
  if (name == "normalized") return EvaluationVariant::normalized;
  if (name == "as_printed") return EvaluationVariant::as_printed;
  throw invalid_parameter("variant must be 'normalized' or 'as_printed', got '" + std::string(name) +
                          "'");
}

inline const char* to_string(EvaluationVariant v) {
  return v == EvaluationVariant::normalized ? "normalized" : "as_printed";
}

struct HandoffCountDistribution {
  std::vector<double> probs;  // Pr(H = k), k = 0..K
  EvaluationVariant variant = EvaluationVariant::normalized;
  double mean = 0.0;          // closed-form E(H)
  double tail = 0.0;          // normalized-variant Pr(H > K) at truncation

  double total() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

  double truncated_mean() const {
    double m = 0.0;
    for (std::size_t k = 1; k < probs.size(); ++k) m += static_cast<double>(k) * probs[k];
    return m;
  }
};

namespace detail {

inline void check_lambda(double lambda) {
  require(std::isfinite(lambda) && lambda >= 0.0, "lambda must be a finite rate >= 0");
}

// Rate of handoff-triggering events: PU arrivals that land on the SU channel.
inline double trigger_rate(const HandoffOutcomeProbs& outcome, double lambda) {
  return lambda * outcome.p_l;
}

}  // namespace detail

inline double prob_zero_handoffs(const ServiceTimeModel& model, const HandoffOutcomeProbs& outcome,
                                 double lambda) {
  model.validate();
  detail::check_lambda(lambda);
  return model.laplace(detail::trigger_rate(outcome, lambda));
}

inline double prob_k_handoffs(const ServiceTimeModel& model, const HandoffOutcomeProbs& outcome,
                              double lambda, int k,
                              EvaluationVariant variant = EvaluationVariant::normalized) {
  model.validate();
  detail::check_lambda(lambda);
  if (k < 1) throw invalid_parameter("prob_k_handoffs needs k >= 1; use prob_zero_handoffs for k = 0");

  const double s = detail::trigger_rate(outcome, lambda);
  const double succ_rate = lambda * outcome.p_succ;
  const double success_path = model.taylor_term(s, k, succ_rate);

  double failure_path = 0.0;
  if (variant == EvaluationVariant::as_printed) {
    failure_path = lambda * outcome.p_fail * model.taylor_term(s, k - 1, succ_rate);
  } else {
    // k-1 successful handoffs then a failed one: each trigger succeeds with
    // P_under and fails with P_over, independent of the service clock.
    failure_path = std::pow(outcome.p_under, k - 1) * outcome.p_over * model.prob_at_least(s, k);
  }
  return success_path + failure_path;
}

inline double expected_handoffs(const ServiceTimeModel& model, const HandoffOutcomeProbs& outcome,
                                double lambda) {
  model.validate();
  detail::check_lambda(lambda);
  const double reclaim = outcome.p_succ + outcome.p_fail;
  if (outcome.p_fail > 0.0) {
    return reclaim * model.laplace_complement(lambda * outcome.p_fail) / outcome.p_fail;
  }
  // p_fail -> 0 limit: -lambda * (p_succ + p_fail) * L'(0).
  return -lambda * reclaim * model.laplace_derivative(0.0, 1);
}

inline constexpr int kMaxHandoffCount = 1'000'000;

inline HandoffCountDistribution distribution(const ServiceTimeModel& model,
                                             const HandoffOutcomeProbs& outcome, double lambda,
                                             EvaluationVariant variant = EvaluationVariant::normalized,
                                             double tail_tol = 1e-12) {
  model.validate();
  detail::check_lambda(lambda);
  detail::require(tail_tol > 0.0 && tail_tol < 1.0, "tail_tol must lie in (0, 1)");

  const double s = detail::trigger_rate(outcome, lambda);
  // Pr(H > K) = P_under^K * Pr(at least K+1 triggers during service)
  auto tail_after = [&](int k) {
    return std::pow(outcome.p_under, k) * model.prob_at_least(s, k + 1);
  };

  HandoffCountDistribution dist;
  dist.variant = variant;
  dist.mean = expected_handoffs(model, outcome, lambda);
  dist.probs.push_back(prob_zero_handoffs(model, outcome, lambda));
  int k = 0;
  while (tail_after(k) >= tail_tol) {
    if (k >= kMaxHandoffCount) {
      throw non_convergence("handoff-count tail still " + std::to_string(tail_after(k)) +
                            " after " + std::to_string(kMaxHandoffCount) + " terms");
    }
    ++k;
    dist.probs.push_back(prob_k_handoffs(model, outcome, lambda, k, variant));
  }
  dist.tail = tail_after(k);
  return dist;
}

}  // namespace crmip
