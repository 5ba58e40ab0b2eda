#pragma once

#include <string>

#include "ght/convolution.hpp"
#include "ght/dense_vector.hpp"
#include "ght/tensor_spec.hpp"

namespace ght {

enum class ApplyMethod { naive, convolution, quadrature };

// Value of one tensor-vector contraction: `vector` holds the degree-(m-1)
// form, `scalar` the degree-m form x . vector.
struct ApplyResult {
  DenseVector vector;
  double scalar = 0.0;
  ApplyMethod method = ApplyMethod::naive;
  Warnings warnings;
};

// Ground-truth contraction by direct enumeration of all (m-1)-tuples.
// O(n^m); compensated summation in a fixed index order.
ApplyResult apply_naive(const TensorSpec& spec, const DenseVector& x);

// Same values through the index-total profile: component i is
// sum_k weights[k] / (i - 1 + k + a). Matches apply_naive to 1e-10
// relative on well-conditioned inputs.
ApplyResult apply_fast(const TensorSpec& spec, const DenseVector& x);

// |Hx^m| / ||x||_m^m. Requires m even and x nonzero.
double rayleigh_m(const TensorSpec& spec, const DenseVector& x);

// |Hx^m| / ||x||_2^m. Requires x nonzero.
double rayleigh_2(const TensorSpec& spec, const DenseVector& x);

const char* to_string(ApplyMethod method);

}  // namespace ght
