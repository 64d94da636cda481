#pragma once

#include <Eigen/Dense>

namespace pushsum {

// Dense row-major-agnostic aliases used throughout; all matrices are square
// unless a signature says otherwise.
using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace pushsum
