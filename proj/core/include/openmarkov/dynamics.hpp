#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "openmarkov/finset.hpp"
#include "openmarkov/markov.hpp"
#include "openmarkov/subspace.hpp"

namespace openmarkov {

Eigen::MatrixXd to_real(const RatMatrix& m);
Eigen::VectorXd to_real(const RatVector& v);

/// exp(tH) by scaling and squaring around a Taylor series.
/// Throws InvalidArgument if t < 0 and NonFinite on NaN/overflow.
Eigen::MatrixXd expm(const Eigen::MatrixXd& h, double t);

/// Piecewise-constant vector-valued function of time: values[k] holds on
/// [breakpoints[k-1], breakpoints[k]), with values.size() == breakpoints.size() + 1.
class Schedule {
 public:
  Schedule() = default;
  /// Throws InvalidArgument on unsorted breakpoints or mismatched sizes.
  Schedule(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> values);
  static Schedule constant(Eigen::VectorXd value);
  static Schedule zero(Eigen::Index size);

  const Eigen::VectorXd& at(double t) const;
  Eigen::Index size() const { return values_.front().size(); }
  const std::vector<double>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Eigen::VectorXd>& values() const noexcept { return values_; }

 private:
  std::vector<double> breakpoints_;
  std::vector<Eigen::VectorXd> values_{Eigen::VectorXd()};
};

struct FlowSpec {
  Schedule inflow;   // over S
  Schedule outflow;  // over T
};

FlowSpec zero_flows(const OpenMarkov& m);

struct Trajectory {
  std::vector<double> times;
  std::vector<Eigen::VectorXd> states;
};

/// Right-hand side H v + i_* I - o_* O.
Eigen::VectorXd master_rhs(const OpenMarkov& m, const Eigen::VectorXd& v, const Eigen::VectorXd& in,
                           const Eigen::VectorXd& out);

/// Fixed-step RK4 on the open master equation, recording every step (the last
/// step is shortened to land on t_end). Flows are held at their value at
/// each step's midpoint. Throws InvalidArgument on dt <= 0,
/// t_end < 0 or size mismatches, NonFinite if the state blows up.
Trajectory integrate_master(const OpenMarkov& m, const FlowSpec& flows, const Eigen::VectorXd& v0,
                            double t_end, double dt);

/// particular + span(kernel) is the full solution set of H v = o_* O - i_* I.
struct AffineFamily {
  Eigen::VectorXd particular;
  std::vector<Eigen::VectorXd> kernel;
};

/// Exact solve after converting I and O to rationals; nullopt when infeasible.
std::optional<AffineFamily> steady_states(const OpenMarkov& m, const Eigen::VectorXd& inflow,
                                          const Eigen::VectorXd& outflow);

/// max |p_* exp(tH) - exp(tH') p_*|. Throws NotIntertwining unless
/// p_* H = H' p_* holds exactly.
double coarse_grain_commutes_numeric(const RatMatrix& h, const RatMatrix& h_coarse, const FinMap& p,
                                     double t);

/// Euclidean distance from x to the subspace.
double distance_to_subspace(const Subspace& s, const Eigen::VectorXd& x);

}  // namespace openmarkov
