#pragma once

#include <Eigen/Dense>

#include "grca/types.hpp"

namespace grca {

/// Builds the interaction basis from the endmember matrix.
///
/// Cross-product columns carry a sqrt(2) factor; they can be removed without
/// changing the model by scaling the matching coefficients, which is what the
/// bilinear baseline does with its own extended matrix.
InteractionBasis build_interaction_basis(const EndmemberSet& endmembers);

/// Nonlinear perturbation phi(gamma): the nonlinear basis columns times gamma.
Eigen::VectorXd phi(const Eigen::VectorXd& gamma, const InteractionBasis& basis);

/// Noise-free pixel reconstruction M*a + phi(gamma).
Eigen::VectorXd reconstruct_pixel(const Eigen::VectorXd& abundance,
                                  const Eigen::VectorXd& gamma,
                                  const InteractionBasis& basis);

/// Fully normalized Gaussian log likelihood of the image given all per-pixel
/// reconstructions and the diagonal band noise covariance.
double log_likelihood(const HyperCube& cube, const AbundanceField& abundances,
                      const NonlinField& gammas, const NoiseVariances& noise,
                      const InteractionBasis& basis);

}  // namespace grca
