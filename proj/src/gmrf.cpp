#include "grca/gmrf.hpp"

#include <cmath>
#include <stdexcept>

namespace grca {

void GmrfState::validate() const {
  if (S.rows() < 1 || S.cols() < 1)
    throw std::invalid_argument("GmrfState: empty scale field");
  if (W.rows() != S.rows() + 1 || W.cols() != S.cols() + 1)
    throw std::invalid_argument("GmrfState: W must be one larger than S in each dim");
  if (!(S.array() > 0.0).all() || !(W.array() > 0.0).all())
    throw std::invalid_argument("GmrfState: entries must be strictly positive");
}

GmrfState GmrfState::ones(int n_row, int n_col) {
  GmrfState st;
  st.S = Eigen::MatrixXd::Ones(n_row, n_col);
  st.W = Eigen::MatrixXd::Ones(n_row + 1, n_col + 1);
  return st;
}

double alpha4(const Eigen::MatrixXd& W, int i, int j) {
  if (i < 0 || j < 0 || i >= W.rows() - 1 || j >= W.cols() - 1)
    throw std::out_of_range("alpha4: index outside the scale grid");
  return 0.25 * (W(i, j) + W(i + 1, j) + W(i, j + 1) + W(i + 1, j + 1));
}

double alpha5(const Eigen::MatrixXd& S, int i, int j) {
  if (i < 0 || j < 0 || i > S.rows() || j > S.cols())
    throw std::out_of_range("alpha5: index outside the auxiliary grid");
  double sum = 0.0;
  for (int di = -1; di <= 0; ++di)
    for (int dj = -1; dj <= 0; ++dj) {
      const int si = i + di;
      const int sj = j + dj;
      if (si < 0 || sj < 0 || si >= S.rows() || sj >= S.cols()) continue;
      const double s = S(si, sj);
      if (!(s > 0.0)) throw std::invalid_argument("alpha5: nonpositive scale");
      sum += 1.0 / s;
    }
  return 0.25 * sum;
}

double log_density_unnorm(const GmrfState& state, double alpha3,
                          double rate_offset) {
  state.validate();
  const double log_s_sum = state.S.array().log().sum();
  const double log_w_sum = state.W.array().log().sum();
  double edge_sum = 0.0;
  for (int i = 0; i < state.n_row(); ++i)
    for (int j = 0; j < state.n_col(); ++j)
      edge_sum += 4.0 * alpha4(state.W, i, j) / state.S(i, j);
  return -(alpha3 + 1.0) * log_s_sum + (alpha3 - 1.0) * log_w_sum -
         0.25 * alpha3 * edge_sum - rate_offset * state.W.sum();
}

double lambda_stat(const GmrfState& state) {
  state.validate();
  double edge_sum = 0.0;
  for (int i = 0; i < state.n_row(); ++i)
    for (int j = 0; j < state.n_col(); ++j)
      edge_sum += 4.0 * alpha4(state.W, i, j) / state.S(i, j);
  return -edge_sum +
         4.0 * (state.W.array().log().sum() - state.S.array().log().sum());
}

void sweep_s_block(GmrfState& state, double alpha3, RngStream& rng) {
  for (int i = 0; i < state.n_row(); ++i)
    for (int j = 0; j < state.n_col(); ++j) {
      const double scale = alpha3 * alpha4(state.W, i, j);
      double s = rng.inverse_gamma(alpha3, scale);
      if (s < 1e-300) s = 1e-300;
      state.S(i, j) = s;
    }
}

void sweep_w_block(GmrfState& state, double alpha3, RngStream& rng,
                   double rate_offset) {
  for (int i = 0; i < state.W.rows(); ++i)
    for (int j = 0; j < state.W.cols(); ++j) {
      const double rate = alpha3 * alpha5(state.S, i, j) + rate_offset;
      double w = rng.gamma(alpha3, 1.0 / rate);
      if (w < 1e-300) w = 1e-300;
      state.W(i, j) = w;
    }
}

GmrfState gibbs_kernel(const GmrfState& state, double alpha3, RngStream& rng,
                       double rate_offset) {
  state.validate();
  if (!(alpha3 > 0.0))
    throw std::invalid_argument("gibbs_kernel: alpha3 must be positive");
  GmrfState next = state;
  sweep_s_block(next, alpha3, rng);
  sweep_w_block(next, alpha3, rng, rate_offset);
  return next;
}

double update_alpha3(double alpha3, const GmrfState& state_chain,
                     const GmrfState& state_aux, int t, double a_max) {
  if (t < 1) throw std::invalid_argument("update_alpha3: t must be >= 1");
  const double step = std::pow(static_cast<double>(t), -0.75);
  const double proposal =
      alpha3 + step * (lambda_stat(state_chain) - lambda_stat(state_aux));
  constexpr double kFloor = 1e-3;  // keeps every conditional proper
  return std::min(a_max, std::max(kFloor, proposal));
}

}  // namespace grca
