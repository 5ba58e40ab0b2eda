#pragma once

#include <optional>

#include "ght/tensor_spec.hpp"

namespace ght {

// pi^2/6, the sum of 1/i^2, to one ulp.
inline constexpr double kPiSquaredOver6 = 1.6449340668482264365;

// Which clause of M(a) produced the value.
enum class MBranch {
  positive,          // a > 0
  negative_interior, // -m(n-1) < a < 0
  below_index_range, // a < -m(n-1)
};

struct MValue {
  double value;
  MBranch branch;
};

// N(a): dominates |entry| over the infinite index set.
//   1/a for a > 0,  1/min{a-floor(a), 1+floor(a)-a} for a < 0.
double constant_N(const TensorSpec& spec);

// M(a): dominates |entry| over the finite index set [1,n]^m; three branches
// keyed on -m(n-1). Requires a finite spec.
MValue constant_M(const TensorSpec& spec);

// K(a): operator-norm bound for the (m-1)-th-root operator, a > 0 only.
double constant_K(const TensorSpec& spec);

// C(a): operator-norm bound for the l1-rescaled operator, a > 0 only.
double constant_C(const TensorSpec& spec);

// Every closed-form constant applicable to the spec. big_n needs a shift
// admissible for the infinite index set; big_m needs a finite dim; big_k
// and big_c need a > 0.
struct ConstantsBundle {
  std::optional<double> big_n;
  std::optional<double> big_m;
  std::optional<double> big_k;
  std::optional<double> big_c;
};

ConstantsBundle constants_bundle(const TensorSpec& spec);

}  // namespace ght
