#pragma once

#include <Eigen/Dense>

#include "grca/rng.hpp"

namespace grca {

/// State of the gamma Markov random field over nonlinearity scales.
///
/// S is the n_row x n_col field of positive scales; W is the auxiliary
/// (n_row+1) x (n_col+1) field. The graph is bipartite: s(i,j) is linked to
/// its four W corners w(i,j), w(i+1,j), w(i,j+1), w(i+1,j+1), so every s node
/// has exactly four W neighbours and boundary w nodes have one to four S
/// neighbours.
struct GmrfState {
  Eigen::MatrixXd S;
  Eigen::MatrixXd W;

  int n_row() const { return static_cast<int>(S.rows()); }
  int n_col() const { return static_cast<int>(S.cols()); }

  void validate() const;

  /// All-ones state of the given grid size.
  static GmrfState ones(int n_row, int n_col);
};

/// Mean of the four W corners of s(i,j).
double alpha4(const Eigen::MatrixXd& W, int i, int j);

/// Mean reciprocal of the existing S neighbours of w(i,j); missing border
/// neighbours contribute zero while the divisor stays four.
double alpha5(const Eigen::MatrixXd& S, int i, int j);

/// Unnormalized log density of the field at regularisation alpha3:
///   -(alpha3+1) sum log s + (alpha3-1) sum log w - (alpha3/4) sum_E w/s
/// (minus rate_offset * sum w when an exponential anchor is requested; the
/// anchor makes the otherwise scale-improper field integrable, which some of
/// the statistical validation relies on).
double log_density_unnorm(const GmrfState& state, double alpha3,
                          double rate_offset = 0.0);

/// Sufficient statistic for the alpha3 gradient:
///   Lambda = -sum_E w/s + 4 (sum log w - sum log s),
/// which equals 4 times the alpha3-derivative of log_density_unnorm.
double lambda_stat(const GmrfState& state);

/// In-place block updates. The S block draws every s(i,j) from
/// IG(alpha3, alpha3*alpha4) given W; the W block draws every w(i,j) from
/// Gamma(alpha3, 1/(alpha3*alpha5 + rate_offset)) given S. Each block is
/// conditionally independent across its nodes.
void sweep_s_block(GmrfState& state, double alpha3, RngStream& rng);
void sweep_w_block(GmrfState& state, double alpha3, RngStream& rng,
                   double rate_offset = 0.0);

/// One full two-block Gibbs sweep (S block, then W block).
GmrfState gibbs_kernel(const GmrfState& state, double alpha3, RngStream& rng,
                       double rate_offset = 0.0);

/// Projected stochastic-gradient update of alpha3 with step t^{-3/4}:
/// clamp(alpha3 + t^{-3/4} (Lambda(chain) - Lambda(aux)), 1e-3, a_max).
double update_alpha3(double alpha3, const GmrfState& state_chain,
                     const GmrfState& state_aux, int t, double a_max = 20.0);

}  // namespace grca
