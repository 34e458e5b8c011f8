#pragma once

#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "polyorder/field.hpp"
#include "polyorder/sampling.hpp"

namespace polyorder {

/// Classical fixed-step RK4.
struct IntegratorConfig {
  double dt = 1e-3;
  double t_max = 200.0;
  double convergence_eps = 1e-6;  // stop once |F(x)| drops below this
  double floor_eps = 1e-12;       // stop once |x| drops below this (non-Lipschitz origin)

  void validate() const;
};

enum class Termination { MaxTime, Converged, LeftDomain, StepUnderflow };
std::string_view to_string(Termination t);

struct TrajectorySample {
  double t;
  Point x;
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  IntegratorConfig config;
  Termination terminated = Termination::MaxTime;

  const Point& final_state() const { return samples.back().x; }
  double final_time() const { return samples.back().t; }
};

/// Integrates x' = F(x) from x0. Every stored sample lies in F's domain; the
/// first step that would leave it ends the run with LeftDomain.
Trajectory integrate(const VectorField& F, const Point& x0, const IntegratorConfig& cfg = {});

/// Adaptive Simpson estimate of the integral of a 1-D field over [a, b]
/// (b < a gives the negated integral). Both ends must lie in f's domain.
double integrate_1d(const ScalarField& f, double a, double b, double abs_tol = 1e-10);

/// L(x) = integral of f from x_ref to x.
double lyapunov_integral(const ScalarField& f, double x_ref, double x);

struct StabilityTrial {
  Point x0;
  double final_distance = 0.0;
  std::optional<Point> limit_point;  // nearest candidate, when converged
  bool converged = false;            // final_distance <= convergence_eps
  Termination terminated = Termination::MaxTime;
  double final_time = 0.0;
};

struct SetStabilityReport {
  std::vector<Point> candidate_set;
  std::vector<StabilityTrial> trials;
  bool lyapunov_checked = false;
  bool lyapunov_monotone = true;
  double max_lyapunov_increase = 0.0;
  IntegratorConfig config;

  bool all_converged() const;
};

/// Largest tolerated rise of L between consecutive samples.
inline constexpr double kLyapunovSlack = 1e-8;

/// Integrates from every initial condition and records the distance of the
/// final state to `candidate`. When `potential` is given (a 1-D f with
/// F = -f) the change of L = integral of f is checked between consecutive
/// samples of every trajectory.
SetStabilityReport check_setwise_stability(const VectorField& F, const std::vector<Point>& candidate,
                                           const SampleSet& initial_conditions,
                                           const IntegratorConfig& cfg = {},
                                           const std::optional<ScalarField>& potential = std::nullopt);

/// "t,x1,...,xm" header then one row per sample, 17 significant digits.
void write_trajectory_csv(const Trajectory& traj, std::ostream& out);

}  // namespace polyorder
