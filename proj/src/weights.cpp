// Copyright 2026 The HetDP Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hetdp/weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hetdp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_sizes(const WeightVector& w, const PrivacyDemand& eps) {
  if (w.size() != eps.size()) {
    throw std::invalid_argument("weights and demands differ in length");
  }
}

double l1_to_uniform(const std::vector<double>& w) {
  const double u = 1.0 / static_cast<double>(w.size());
  double s = 0.0;
  for (double wi : w) s += std::abs(wi - u);
  return s;
}

double l2_sq(const std::vector<double>& w) {
  double s = 0.0;
  for (double wi : w) s += wi * wi;
  return s;
}

double l2_sq_to_uniform(const std::vector<double>& w) {
  const double u = 1.0 / static_cast<double>(w.size());
  double s = 0.0;
  for (double wi : w) s += (wi - u) * (wi - u);
  return s;
}

std::vector<double> normalized(std::vector<double> w) {
  double sum = 0.0;
  for (double wi : w) sum += wi;
  for (double& wi : w) wi /= sum;
  return w;
}

// Exact minimizer of ||w - 1/n||_1^2 + L^2 * ||w/eps||_inf^2 over the
// simplex.
//
// Parametrize by s = ||w/eps||_inf. For fixed s the weights are boxed by
// w_i <= s*eps_i, and the least l1 distance to uniform subject to the box
// and the simplex is exactly 2*delta(s) with
// delta(s) = sum_i max(0, 1/n - s*eps_i) (put min(1/n, s*eps_i) everywhere,
// then park the missing mass on coordinates with headroom; feasibility needs
// sum_i s*eps_i >= 1, i.e. s >= 1/||eps||_1 when every eps is finite).
// The objective is then the univariate convex piecewise-quadratic
//   F(s) = 4*delta(s)^2 + L^2 s^2,
// whose segments are delimited by the breakpoints s = 1/(n*eps_i); each
// segment minimum is closed-form, so a single sorted sweep finds the global
// minimum exactly.
struct ScanResult {
  std::vector<double> w;
  int segments;
};

ScanResult exact_c_weights(const PrivacyDemand& eps, double L) {
  const std::size_t n = eps.size();
  const double u = 1.0 / static_cast<double>(n);

  std::vector<double> finite;
  finite.reserve(n);
  for (double e : eps.values()) {
    if (std::isfinite(e)) finite.push_back(e);
  }
  if (L == 0.0 || finite.empty()) {
    return {std::vector<double>(n, u), 0};
  }

  double s_min = 0.0;
  if (finite.size() == n) {
    double tot = 0.0;
    for (double e : finite) tot += e;
    s_min = 1.0 / tot;
  }

  // Breakpoints ascending means epsilon descending.
  std::sort(finite.begin(), finite.end(), std::greater<double>());
  const double L2 = L * L;

  // Active set at s = s_min: every coordinate whose cap is still below 1/n.
  std::size_t head = 0;  // coords finite[0..head) have left the active set
  while (head < finite.size() && u / finite[head] <= s_min) ++head;
  double act_count = static_cast<double>(finite.size() - head);
  double act_sum = 0.0;
  for (std::size_t i = head; i < finite.size(); ++i) act_sum += finite[i];

  double best_s = s_min;
  double delta_min = act_count * u - s_min * act_sum;
  double best_f = 4.0 * delta_min * delta_min + L2 * s_min * s_min;
  int segments = 1;

  double a = s_min;
  while (head < finite.size()) {
    const double b = u / finite[head];
    // Segment [a, b]: delta(s) = m*u - s*E with the current active set.
    const double m = act_count, E = act_sum;
    double s = 4.0 * m * u * E / (4.0 * E * E + L2);
    s = std::min(std::max(s, a), b);
    const double d = std::max(0.0, m * u - s * E);
    const double f = 4.0 * d * d + L2 * s * s;
    if (f < best_f) {
      best_f = f;
      best_s = s;
    }
    ++segments;
    // Coordinates whose breakpoint is b leave the active set.
    while (head < finite.size() && u / finite[head] == b) {
      act_sum -= finite[head];
      act_count -= 1.0;
      ++head;
    }
    a = b;
  }
  // Beyond the last breakpoint delta == 0 and F = L^2 s^2 only grows, so the
  // sweep above already saw the global minimum.

  // Recover a minimizer at s = best_s: caps where deficient, then spread the
  // missing mass over the headroom (proportionally, so permuting eps permutes
  // the weights; infinite-eps coordinates share it equally).
  const double s = best_s;
  std::vector<double> w(n);
  double placed = 0.0;
  std::size_t n_inf = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double e = eps[i];
    w[i] = std::isfinite(e) ? std::min(u, s * e) : u;
    placed += w[i];
    if (!std::isfinite(e)) ++n_inf;
  }
  const double deficit = 1.0 - placed;
  if (deficit > 0.0) {
    if (n_inf > 0) {
      const double add = deficit / static_cast<double>(n_inf);
      for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(eps[i])) w[i] += add;
      }
    } else {
      double headroom = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        headroom += std::max(0.0, s * eps[i] - u);
      }
      for (std::size_t i = 0; i < n; ++i) {
        const double h = std::max(0.0, s * eps[i] - u);
        if (h > 0.0) w[i] += deficit * h / headroom;
      }
    }
  }
  return {normalized(std::move(w)), segments};
}

// Capped-sequence recursion for min ||w||_2^2 + c*||w/eps||_inf^2:
// with eps sorted ascending, r_1 = eps_(1) and
// r_{k+1} = min((sum_{i<=k} r_i^2 + c) / sum_{i<=k} r_i, eps_(k+1));
// the minimizer is r normalized.
std::vector<double> turbo_weights_raw(const PrivacyDemand& eps, double c) {
  const std::size_t n = eps.size();
  if (c == 0.0 || eps.all_infinite()) {
    return std::vector<double>(n, 1.0 / static_cast<double>(n));
  }
  const std::vector<std::size_t> order = eps.ascending_order();
  const std::vector<double> r = detail::turbo_r_sequence(eps, c);
  double s1 = 0.0;
  for (double ri : r) s1 += ri;
  std::vector<double> w(n);
  for (std::size_t j = 0; j < n; ++j) w[order[j]] = r[j] / s1;
  return w;
}

}  // namespace

std::vector<double> detail::turbo_r_sequence(const PrivacyDemand& eps,
                                             double c) {
  if (c <= 0.0 || eps.all_infinite()) {
    throw std::invalid_argument(
        "r sequence needs c > 0 and a finite demand");
  }
  const std::size_t n = eps.size();
  const std::vector<std::size_t> order = eps.ascending_order();
  std::vector<double> r(n);
  r[0] = eps[order[0]];
  double s1 = r[0], s2 = r[0] * r[0];
  for (std::size_t k = 1; k < n; ++k) {
    r[k] = std::min((s2 + c) / s1, eps[order[k]]);
    s1 += r[k];
    s2 += r[k] * r[k];
  }
  return r;
}

double ObjectiveParams::log_term() const {
  if (std::isnan(k_eff) || k_eff < 1.0) {
    throw std::invalid_argument("k_eff must be >= 1");
  }
  if (std::isnan(beta) || beta <= 0.0 || beta > 1.0) {
    throw std::invalid_argument("beta must lie in (0, 1]");
  }
  return std::max(0.0, std::log(k_eff / beta));
}

ObjectiveParams objective_params_for(const Task& task, Metric metric,
                                     double beta) {
  if (std::isnan(beta) || beta <= 0.0 || beta > 1.0) {
    throw std::invalid_argument("beta must lie in (0, 1]");
  }
  const double k =
      task.kind == TaskKind::kFrequency ? static_cast<double>(task.bins) : 1.0;
  switch (metric) {
    case Metric::kPac:
      return ObjectiveParams{std::max(1.0, k), beta};
    case Metric::kMse:
      return task.kind == TaskKind::kFrequency
                 ? ObjectiveParams{std::max(1.0, k), 1.0}
                 : ObjectiveParams{std::exp(1.0), 1.0};
  }
  throw std::invalid_argument("unknown metric");
}

double max_privacy_ratio(const WeightVector& w, const PrivacyDemand& eps) {
  check_sizes(w, eps);
  double s = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (std::isfinite(eps[i])) s = std::max(s, w[i] / eps[i]);
  }
  return s;
}

double correlated_objective(const WeightVector& w, const PrivacyDemand& eps,
                            const ObjectiveParams& params) {
  check_sizes(w, eps);
  const double L = params.log_term();
  const double l1 = l1_to_uniform(w.values());
  const double s = max_privacy_ratio(w, eps);
  return std::sqrt(l1 * l1 + L * L * s * s);
}

double uncorrelated_objective(const WeightVector& w, const PrivacyDemand& eps,
                              const ObjectiveParams& params) {
  check_sizes(w, eps);
  const double L = params.log_term();
  const double l1 = l1_to_uniform(w.values());
  const double s = max_privacy_ratio(w, eps);
  const double data_term = std::min(l1 * l1, L * l2_sq(w.values()));
  return std::sqrt(data_term + L * L * s * s);
}

double objective_value(Setting setting, const WeightVector& w,
                       const PrivacyDemand& eps,
                       const ObjectiveParams& params) {
  return setting == Setting::kCorrelated
             ? correlated_objective(w, eps, params)
             : uncorrelated_objective(w, eps, params);
}

SolverReport solve_weights_exact(Setting setting, const PrivacyDemand& eps,
                                 const ObjectiveParams& params) {
  const double L = params.log_term();
  ScanResult c = exact_c_weights(eps, L);
  if (setting == Setting::kCorrelated) {
    WeightVector w(std::move(c.w));
    const double val = correlated_objective(w, eps, params);
    return SolverReport{std::move(w), val, c.segments, true};
  }
  // Uncorrelated: min over the two data-term branches equals the min of the
  // two branch problems. Branch 1 is the correlated problem; branch 2
  // (L*||w||_2^2 data term) is the quadratic recursion with c = L.
  WeightVector w1(std::move(c.w));
  const double f1 = uncorrelated_objective(w1, eps, params);
  if (L == 0.0) {
    return SolverReport{std::move(w1), f1, c.segments, true};
  }
  WeightVector w2(turbo_weights_raw(eps, L));
  const double f2 = uncorrelated_objective(w2, eps, params);
  if (f2 < f1) {
    return SolverReport{std::move(w2), f2, c.segments + 1, true};
  }
  return SolverReport{std::move(w1), f1, c.segments + 1, true};
}

SolverReport solve_weights_turbo(const PrivacyDemand& eps, double c) {
  if (std::isnan(c) || c < 0.0) {
    throw std::invalid_argument("turbo coefficient must be non-negative");
  }
  WeightVector w(turbo_weights_raw(eps, c));
  const double s = max_privacy_ratio(w, eps);
  const double val = l2_sq(w.values()) + c * s * s;
  return SolverReport{std::move(w), val, static_cast<int>(eps.size()), true};
}

double turbo_surrogate_value(Setting setting, const WeightVector& w,
                             const PrivacyDemand& eps,
                             const ObjectiveParams& params) {
  check_sizes(w, eps);
  const double L = params.log_term();
  const double n = static_cast<double>(w.size());
  const double s = max_privacy_ratio(w, eps);
  const double d2 = n * l2_sq_to_uniform(w.values());
  if (setting == Setting::kCorrelated) return d2 + L * L * s * s;
  return std::min(d2, L * l2_sq(w.values())) + L * L * s * s;
}

SolverReport turbo_objective_weights(Setting setting, const PrivacyDemand& eps,
                                     const ObjectiveParams& params) {
  const double L = params.log_term();
  const std::size_t n = eps.size();
  if (L == 0.0) {
    WeightVector w = WeightVector::uniform(n);
    const double val = turbo_surrogate_value(setting, w, eps, params);
    return SolverReport{std::move(w), val, 0, true};
  }
  // On the simplex n*||w - 1/n||_2^2 = n*||w||_2^2 - 1, so the first branch
  // is the quadratic recursion with c = L^2/n up to a constant shift.
  const double c1 = L * L / static_cast<double>(n);
  WeightVector w1(turbo_weights_raw(eps, c1));
  if (setting == Setting::kCorrelated) {
    const double val = turbo_surrogate_value(setting, w1, eps, params);
    return SolverReport{std::move(w1), val, static_cast<int>(n), true};
  }
  // Second branch: L*||w||_2^2 + L^2 s^2 scales to c = L.
  WeightVector w2(turbo_weights_raw(eps, L));
  const double f1 = turbo_surrogate_value(setting, w1, eps, params);
  const double f2 = turbo_surrogate_value(setting, w2, eps, params);
  if (f2 < f1) {
    return SolverReport{std::move(w2), f2, static_cast<int>(2 * n), true};
  }
  return SolverReport{std::move(w1), f1, static_cast<int>(2 * n), true};
}

WeightVector hpfa_weights(const PrivacyDemand& eps) {
  std::vector<double> w(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) {
    w[i] = -std::expm1(-eps[i]);  // 1 - e^{-eps}; 1 at eps = inf
  }
  return WeightVector(normalized(std::move(w)));
}

WeightVector prop_weights(const PrivacyDemand& eps) {
  double sum = 0.0;
  for (double e : eps.values()) {
    if (std::isinf(e)) {
      throw std::invalid_argument(
          "proportional weights are undefined for infinite epsilon");
    }
    sum += e;
  }
  std::vector<double> w(eps.size());
  for (std::size_t i = 0; i < eps.size(); ++i) w[i] = eps[i] / sum;
  return WeightVector(std::move(w));
}

namespace {

// Per-user variance coefficient of the debiased local frequency report:
// coth(eps/4)/eps, with the eps -> inf limit 0.
double ldp_noise_coeff(double e) {
  if (std::isinf(e)) return 0.0;
  return 1.0 / (std::tanh(e / 4.0) * e);
}

std::vector<double> inverse_coeff_weights(const std::vector<double>& d) {
  std::vector<double> w(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) w[i] = 1.0 / d[i];
  return normalized(std::move(w));
}

}  // namespace

double ldp_surrogate_value(Setting setting, const WeightVector& w,
                           const PrivacyDemand& eps,
                           const ObjectiveParams& params, const Task& task) {
  check_sizes(w, eps);
  if (task.kind == TaskKind::kMean) {
    const ObjectiveParams mean_params{1.0, params.beta};
    return objective_value(setting, w, eps, mean_params);
  }
  const double L = params.log_term();
  const double n = static_cast<double>(w.size());
  double noise = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    noise += w[i] * w[i] * ldp_noise_coeff(eps[i]);
  }
  const double d2 = n * l2_sq_to_uniform(w.values());
  const double data_term = setting == Setting::kCorrelated
                               ? d2
                               : std::min(d2, L * l2_sq(w.values()));
  return std::sqrt(data_term + L * noise);
}

SolverReport ldp_weights(Setting setting, const PrivacyDemand& eps,
                         const ObjectiveParams& params, const Task& task) {
  if (task.kind == TaskKind::kMean) {
    // The mean task reuses the exact weighted-release weights with the noise
    // max running over a single coordinate.
    return solve_weights_exact(setting, eps,
                               ObjectiveParams{1.0, params.beta});
  }
  const double L = params.log_term();
  const std::size_t n = eps.size();
  const double nd = static_cast<double>(n);
  if (L == 0.0) {
    WeightVector w = WeightVector::uniform(n);
    const double val = ldp_surrogate_value(setting, w, eps, params, task);
    return SolverReport{std::move(w), val, 1, true};
  }
  // Both branches are diagonal quadratics sum_i d_i w_i^2 (+ constants) with
  // d_i > 0; on the simplex the minimizer is interior with w_i = (1/d_i)
  // normalized.
  std::vector<double> d1(n);
  for (std::size_t i = 0; i < n; ++i) {
    d1[i] = nd + L * ldp_noise_coeff(eps[i]);
  }
  WeightVector w1(inverse_coeff_weights(d1));
  if (setting == Setting::kCorrelated) {
    const double val = ldp_surrogate_value(setting, w1, eps, params, task);
    return SolverReport{std::move(w1), val, 1, true};
  }
  std::vector<double> d2(n);
  for (std::size_t i = 0; i < n; ++i) {
    d2[i] = L * (1.0 + ldp_noise_coeff(eps[i]));
  }
  WeightVector w2(inverse_coeff_weights(d2));
  const double f1 = ldp_surrogate_value(setting, w1, eps, params, task);
  const double f2 = ldp_surrogate_value(setting, w2, eps, params, task);
  if (f2 < f1) return SolverReport{std::move(w2), f2, 2, true};
  return SolverReport{std::move(w1), f1, 2, true};
}

}  // namespace hetdp
