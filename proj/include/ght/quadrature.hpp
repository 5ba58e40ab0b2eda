#pragma once

#include <vector>

#include "ght/dense_vector.hpp"
#include "ght/tensor_spec.hpp"

namespace ght {

// Gauss-Legendre rule mapped to [0, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

GaussLegendreRule gauss_legendre(int count);

inline constexpr int kQuadratureNodeCap = 4096;

// Scalar form Hx^m through its integral representation
//   integral_0^1 t^(a-1) p(t)^m dt,   p(t) = sum_i x_i t^(i-1),
// valid for a >= 1. nodes == 0 selects the policy: an exact rule for
// integer a (polynomial integrand of degree m(n-1)+a-1), adaptive node
// doubling to 1e-10 relative otherwise, capped at kQuadratureNodeCap.
// An explicit positive node count uses that single rule.
double quadrature_scalar(const TensorSpec& spec, const DenseVector& x, int nodes = 0);

}  // namespace ght
