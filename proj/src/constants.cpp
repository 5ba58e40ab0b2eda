#include "ght/constants.hpp"

#include <cmath>

namespace ght {

namespace {

// Distance from a to the nearest integer; zero iff a is an integer.
double integer_gap(double a) {
  double down = a - std::floor(a);
  return std::min(down, 1.0 - down);
}

}  // namespace

double constant_N(const TensorSpec& spec) {
  validate_spec(spec);
  double a = spec.a();
  if (a > 0.0) return 1.0 / a;
  double gap = integer_gap(a);
  if (gap == 0.0) {
    throw UndefinedConstant("N(a) is undefined at integer shifts");
  }
  return 1.0 / gap;
}

MValue constant_M(const TensorSpec& spec) {
  validate_spec(spec);
  if (!spec.is_finite()) {
    throw InvalidParameter("M(a) needs a finite dim");
  }
  double a = spec.a();
  if (a > 0.0) return {1.0 / a, MBranch::positive};
  double span = static_cast<double>(spec.max_offset());
  // a == -span cannot occur: that value is a non-positive integer.
  if (a > -span) return {1.0 / integer_gap(a), MBranch::negative_interior};
  return {1.0 / (-span - a), MBranch::below_index_range};
}

double constant_K(const TensorSpec& spec) {
  validate_spec(spec);
  double a = spec.a();
  if (a <= 0.0) throw UndefinedConstant("K(a) is defined for a > 0 only");
  double base = a < 1.0 ? 1.0 / (a * a) + kPiSquaredOver6 : kPiSquaredOver6;
  double exponent = 1.0 / (2.0 * (spec.order - 1));
  return std::pow(base, exponent);
}

double constant_C(const TensorSpec& spec) {
  validate_spec(spec);
  double a = spec.a();
  if (a <= 0.0) throw UndefinedConstant("C(a) is defined for a > 0 only");
  double base = a < 1.0 ? 1.0 / (a * a) + kPiSquaredOver6 : kPiSquaredOver6;
  return std::sqrt(base);
}

ConstantsBundle constants_bundle(const TensorSpec& spec) {
  validate_spec(spec);
  ConstantsBundle bundle;
  try {
    bundle.big_n = constant_N(spec);
  } catch (const UndefinedConstant&) {
    bundle.big_n.reset();
  }
  if (spec.is_finite()) bundle.big_m = constant_M(spec).value;
  if (spec.a() > 0.0) {
    bundle.big_k = constant_K(spec);
    bundle.big_c = constant_C(spec);
  }
  return bundle;
}

}  // namespace ght
