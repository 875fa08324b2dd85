#include "grca/model.hpp"

#include <cmath>
#include <stdexcept>

namespace grca {

InteractionBasis build_interaction_basis(const EndmemberSet& endmembers) {
  endmembers.validate();
  const auto& M = endmembers.M;
  const int L = endmembers.bands();
  const int R = endmembers.count();
  const int K = R * (R + 1) / 2;

  InteractionBasis basis;
  basis.R = R;
  basis.K = K;
  basis.G.resize(L, R + K);
  basis.G.leftCols(R) = M;
  basis.column_labels.reserve(K);

  int col = R;
  const double root2 = std::sqrt(2.0);
  for (int k = 0; k < R - 1; ++k)
    for (int kp = k + 1; kp < R; ++kp) {
      basis.G.col(col) = root2 * M.col(k).cwiseProduct(M.col(kp));
      basis.column_labels.emplace_back(k, kp);
      ++col;
    }
  for (int k = 0; k < R; ++k) {
    basis.G.col(col) = M.col(k).cwiseProduct(M.col(k));
    basis.column_labels.emplace_back(k, k);
    ++col;
  }
  return basis;
}

Eigen::VectorXd phi(const Eigen::VectorXd& gamma, const InteractionBasis& basis) {
  if (gamma.size() != basis.K)
    throw std::invalid_argument("phi: gamma length must equal K");
  return basis.nonlinear_columns() * gamma;
}

Eigen::VectorXd reconstruct_pixel(const Eigen::VectorXd& abundance,
                                  const Eigen::VectorXd& gamma,
                                  const InteractionBasis& basis) {
  if (abundance.size() != basis.R)
    throw std::invalid_argument("reconstruct_pixel: abundance length must equal R");
  if (gamma.size() != basis.K)
    throw std::invalid_argument("reconstruct_pixel: gamma length must equal K");
  return basis.endmembers() * abundance + basis.nonlinear_columns() * gamma;
}

double log_likelihood(const HyperCube& cube, const AbundanceField& abundances,
                      const NonlinField& gammas, const NoiseVariances& noise,
                      const InteractionBasis& basis) {
  cube.validate();
  noise.validate();
  const int L = cube.bands();
  const int N = cube.pixels();
  if (noise.sigma2.size() != L)
    throw std::invalid_argument("log_likelihood: noise length mismatch");
  if (abundances.values.rows() != basis.R || gammas.values.rows() != basis.K ||
      abundances.values.cols() != N || gammas.values.cols() != N)
    throw std::invalid_argument("log_likelihood: field dims mismatch");

  const Eigen::VectorXd inv_sigma2 = noise.sigma2.cwiseInverse();
  const double log_norm =
      -0.5 * N *
      (L * std::log(2.0 * M_PI) + noise.sigma2.array().log().sum());

  // Residual for every pixel at once; quadratic form via the band weights.
  Eigen::MatrixXd resid = cube.data - basis.endmembers() * abundances.values -
                          basis.nonlinear_columns() * gammas.values;
  double quad = 0.0;
  for (int l = 0; l < L; ++l) quad += inv_sigma2(l) * resid.row(l).squaredNorm();
  return log_norm - 0.5 * quad;
}

}  // namespace grca
