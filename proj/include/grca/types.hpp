#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

namespace grca {

enum class SignMode { PositiveOnly, Unconstrained };

/// Observed reflectance image: L bands by n_row*n_col pixels.
///
/// Pixels are stored column-per-pixel with linear index p = i * n_col + j
/// (row-major over the image grid); bands vary fastest in memory.
struct HyperCube {
  Eigen::MatrixXd data;  // L x N
  int n_row = 0;
  int n_col = 0;

  HyperCube() = default;
  HyperCube(Eigen::MatrixXd d, int rows, int cols)
      : data(std::move(d)), n_row(rows), n_col(cols) {}

  int bands() const { return static_cast<int>(data.rows()); }
  int pixels() const { return n_row * n_col; }
  int pixel_index(int i, int j) const { return i * n_col + j; }

  void validate() const;
};

/// Known endmember spectra, one column per material.
struct EndmemberSet {
  Eigen::MatrixXd M;  // L x R

  int bands() const { return static_cast<int>(M.rows()); }
  int count() const { return static_cast<int>(M.cols()); }

  void validate() const;
};

/// Endmembers augmented with the K = R(R+1)/2 interaction spectra.
///
/// Column order is part of the contract: [m_1..m_R], then sqrt(2)*m_k.*m_k'
/// for k < k' in lexicographic order, then m_k.*m_k for k = 1..R.
struct InteractionBasis {
  Eigen::MatrixXd G;  // L x (R+K)
  int R = 0;
  int K = 0;
  std::vector<std::pair<int, int>> column_labels;  // K labels, 0-based (k,k')

  int bands() const { return static_cast<int>(G.rows()); }
  auto endmembers() const { return G.leftCols(R); }
  auto nonlinear_columns() const { return G.rightCols(K); }
};

/// Per-pixel abundance vectors, R x N, same pixel indexing as HyperCube.
struct AbundanceField {
  Eigen::MatrixXd values;  // R x N
  int n_row = 0;
  int n_col = 0;

  void validate() const;
};

/// Per-pixel nonlinearity coefficients, K x N.
struct NonlinField {
  Eigen::MatrixXd values;  // K x N
  int n_row = 0;
  int n_col = 0;
  SignMode sign_mode = SignMode::PositiveOnly;

  void validate() const;
};

/// Per-band noise variances (diagonal noise covariance).
struct NoiseVariances {
  Eigen::VectorXd sigma2;  // length L

  void validate() const;
};

}  // namespace grca
