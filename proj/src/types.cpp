#include "grca/types.hpp"

#include <stdexcept>
#include <string>

namespace grca {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::invalid_argument(what);
}

}  // namespace

void HyperCube::validate() const {
  require(n_row >= 1 && n_col >= 1, "HyperCube: grid dims must be >= 1");
  require(data.rows() >= 1, "HyperCube: need at least one band");
  require(data.cols() == static_cast<Eigen::Index>(pixels()),
          "HyperCube: payload does not match grid dims");
  require(data.allFinite(), "HyperCube: non-finite reflectance value");
}

void EndmemberSet::validate() const {
  require(M.cols() >= 1, "EndmemberSet: need at least one endmember");
  require(M.allFinite(), "EndmemberSet: non-finite entry");
  require((M.array() >= 0.0).all(), "EndmemberSet: negative reflectance");
  for (Eigen::Index r = 0; r < M.cols(); ++r)
    require(M.col(r).norm() > 0.0, "EndmemberSet: zero endmember column");
}

void AbundanceField::validate() const {
  require(values.cols() == static_cast<Eigen::Index>(n_row) * n_col,
          "AbundanceField: dims mismatch");
  require(values.allFinite(), "AbundanceField: non-finite entry");
  require((values.array() >= 0.0).all(), "AbundanceField: negative abundance");
}

void NonlinField::validate() const {
  require(values.cols() == static_cast<Eigen::Index>(n_row) * n_col,
          "NonlinField: dims mismatch");
  require(values.allFinite(), "NonlinField: non-finite entry");
  if (sign_mode == SignMode::PositiveOnly)
    require((values.array() >= 0.0).all(),
            "NonlinField: negative coefficient under positive mode");
}

void NoiseVariances::validate() const {
  require(sigma2.size() >= 1, "NoiseVariances: empty");
  require((sigma2.array() > 0.0).all(), "NoiseVariances: nonpositive variance");
}

}  // namespace grca
