#include "openmarkov/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "openmarkov/error.hpp"

namespace openmarkov {

namespace {

void require_finite(const Eigen::MatrixXd& m, const char* what) {
  if (!m.allFinite()) fail(ErrorCode::NonFinite, std::string(what) + " is not finite");
}

}  // namespace

Eigen::MatrixXd to_real(const RatMatrix& m) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).get_d();
  }
  return out;
}

Eigen::VectorXd to_real(const RatVector& v) {
  Eigen::VectorXd out(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) out(k) = v[k].get_d();
  return out;
}

Eigen::MatrixXd expm(const Eigen::MatrixXd& h, double t) {
  if (h.rows() != h.cols()) fail(ErrorCode::NotSquare, "expm needs a square matrix");
  if (!(t >= 0)) fail(ErrorCode::InvalidArgument, "expm needs t >= 0");
  require_finite(h, "generator");
  const Eigen::Index n = h.rows();
  Eigen::MatrixXd a = t * h;
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (n > 0 && norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  a /= std::ldexp(1.0, squarings);

  Eigen::MatrixXd result = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd term = Eigen::MatrixXd::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * a / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() <= std::numeric_limits<double>::epsilon() * 1e-3) break;
  }
  for (int k = 0; k < squarings; ++k) result = result * result;
  require_finite(result, "matrix exponential");
  return result;
}

Schedule::Schedule(std::vector<double> breakpoints, std::vector<Eigen::VectorXd> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.size() != breakpoints_.size() + 1) {
    fail(ErrorCode::InvalidArgument, "a schedule needs one more value than breakpoints");
  }
  for (std::size_t k = 1; k < breakpoints_.size(); ++k) {
    if (!(breakpoints_[k - 1] < breakpoints_[k])) {
      fail(ErrorCode::InvalidArgument, "schedule breakpoints must be strictly increasing");
    }
  }
  for (const auto& v : values_) {
    if (v.size() != values_.front().size()) {
      fail(ErrorCode::InvalidArgument, "schedule values differ in length");
    }
    require_finite(v, "schedule value");
  }
}

Schedule Schedule::constant(Eigen::VectorXd value) { return Schedule({}, {std::move(value)}); }

Schedule Schedule::zero(Eigen::Index size) { return constant(Eigen::VectorXd::Zero(size)); }

const Eigen::VectorXd& Schedule::at(double t) const {
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  return values_[static_cast<std::size_t>(it - breakpoints_.begin())];
}

FlowSpec zero_flows(const OpenMarkov& m) {
  return FlowSpec{Schedule::zero(static_cast<Eigen::Index>(m.inputs().size())),
                  Schedule::zero(static_cast<Eigen::Index>(m.outputs().size()))};
}

Eigen::VectorXd master_rhs(const OpenMarkov& m, const Eigen::VectorXd& v, const Eigen::VectorXd& in,
                           const Eigen::VectorXd& out) {
  Eigen::VectorXd dv = to_real(m.generator()) * v;
  for (std::size_t s = 0; s < m.inputs().size(); ++s) dv(m.input_leg()(s)) += in(s);
  for (std::size_t t = 0; t < m.outputs().size(); ++t) dv(m.output_leg()(t)) -= out(t);
  return dv;
}

Trajectory integrate_master(const OpenMarkov& m, const FlowSpec& flows, const Eigen::VectorXd& v0,
                            double t_end, double dt) {
  if (!(dt > 0)) fail(ErrorCode::InvalidArgument, "dt must be positive");
  if (!(t_end >= 0)) fail(ErrorCode::InvalidArgument, "t_end must be nonnegative");
  const auto nx = static_cast<Eigen::Index>(m.states().size());
  if (v0.size() != nx) fail(ErrorCode::InvalidArgument, "initial state has the wrong length");
  if (flows.inflow.size() != static_cast<Eigen::Index>(m.inputs().size()) ||
      flows.outflow.size() != static_cast<Eigen::Index>(m.outputs().size())) {
    fail(ErrorCode::InvalidArgument, "flow vectors do not match the boundary");
  }
  require_finite(v0, "initial state");

  const Eigen::MatrixXd h = to_real(m.generator());
  const Eigen::MatrixXd in_push = to_real(pushforward_matrix(m.input_leg()));
  const Eigen::MatrixXd out_push = to_real(pushforward_matrix(m.output_leg()));
  // Flows are sampled once per step at its midpoint, so a step that ends on
  // a breakpoint sees a single constant forcing.
  Eigen::VectorXd forcing;
  auto rhs = [&](const Eigen::VectorXd& v) -> Eigen::VectorXd { return h * v + forcing; };

  Trajectory traj;
  const auto steps = static_cast<std::size_t>(std::ceil(t_end / dt - 1e-9));
  traj.times.reserve(steps + 1);
  traj.states.reserve(steps + 1);
  traj.times.push_back(0.0);
  traj.states.push_back(v0);
  Eigen::VectorXd v = v0;
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    const double step = std::min(dt, t_end - t);
    forcing = in_push * flows.inflow.at(t + step / 2) - out_push * flows.outflow.at(t + step / 2);
    const Eigen::VectorXd k1 = rhs(v);
    const Eigen::VectorXd k2 = rhs(v + step / 2 * k1);
    const Eigen::VectorXd k3 = rhs(v + step / 2 * k2);
    const Eigen::VectorXd k4 = rhs(v + step * k3);
    v += step / 6 * (k1 + 2 * k2 + 2 * k3 + k4);
    require_finite(v, "trajectory");
    traj.times.push_back(k + 1 == steps ? t_end : t + step);
    traj.states.push_back(v);
  }
  return traj;
}

std::optional<AffineFamily> steady_states(const OpenMarkov& m, const Eigen::VectorXd& inflow,
                                          const Eigen::VectorXd& outflow) {
  if (inflow.size() != static_cast<Eigen::Index>(m.inputs().size()) ||
      outflow.size() != static_cast<Eigen::Index>(m.outputs().size())) {
    fail(ErrorCode::InvalidArgument, "flow vectors do not match the boundary");
  }
  RatVector rhs(m.states().size());
  for (std::size_t s = 0; s < m.inputs().size(); ++s) {
    rhs[m.input_leg()(s)] -= from_double(inflow(static_cast<Eigen::Index>(s)));
  }
  for (std::size_t t = 0; t < m.outputs().size(); ++t) {
    rhs[m.output_leg()(t)] += from_double(outflow(static_cast<Eigen::Index>(t)));
  }
  const auto particular = solve(m.generator(), rhs);
  if (!particular) return std::nullopt;
  AffineFamily family{to_real(*particular), {}};
  const Subspace null = kernel(m.generator());
  for (std::size_t r = 0; r < null.dim(); ++r) family.kernel.push_back(to_real(null.basis().row(r)));
  return family;
}

double coarse_grain_commutes_numeric(const RatMatrix& h, const RatMatrix& h_coarse, const FinMap& p,
                                     double t) {
  const RatMatrix push = pushforward_matrix(p);
  if (h.rows() != p.dom().size() || h_coarse.rows() != p.cod().size() || !h.is_square() ||
      !h_coarse.is_square()) {
    fail(ErrorCode::DimensionMismatch, "generators do not fit the map");
  }
  if (!(push * h == h_coarse * push)) {
    fail(ErrorCode::NotIntertwining, "p_* H != H' p_*");
  }
  const Eigen::MatrixXd push_real = to_real(push);
  const Eigen::MatrixXd diff =
      push_real * expm(to_real(h), t) - expm(to_real(h_coarse), t) * push_real;
  return diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff();
}

double distance_to_subspace(const Subspace& s, const Eigen::VectorXd& x) {
  if (x.size() != static_cast<Eigen::Index>(s.ambient_dim())) {
    fail(ErrorCode::DimensionMismatch, "vector does not live in the subspace's ambient space");
  }
  if (s.dim() == 0) return x.norm();
  const Eigen::MatrixXd basis = to_real(s.basis()).transpose();
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(basis);
  const Eigen::MatrixXd q =
      qr.householderQ() * Eigen::MatrixXd::Identity(basis.rows(), basis.cols());
  return (x - q * (q.transpose() * x)).norm();
}

}  // namespace openmarkov
