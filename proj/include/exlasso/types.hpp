#pragma once

#include <Eigen/Dense>

namespace exlasso {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace exlasso
