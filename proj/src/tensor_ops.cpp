#include "ght/tensor_ops.hpp"

#include <cmath>
#include <sstream>

#include "ght/summation.hpp"

namespace ght {

namespace {

void check_apply_args(const TensorSpec& spec, const DenseVector& x) {
  validate_spec(spec);
  if (!spec.is_finite()) {
    throw InvalidParameter("apply needs a finite dim");
  }
  if (x.size() != static_cast<std::size_t>(spec.n())) {
    std::ostringstream msg;
    msg << "vector length " << x.size() << " does not match dim " << spec.n();
    throw ShapeError(msg.str());
  }
}

Warnings conditioning_warnings(const TensorSpec& spec) {
  Warnings warnings;
  double gap = min_denominator_magnitude(spec.a(), spec.max_offset());
  if (gap < kDefaultConditioningFloor) {
    std::ostringstream msg;
    msg << "smallest denominator magnitude " << gap
        << " is below the conditioning floor " << kDefaultConditioningFloor;
    warnings.push_back(msg.str());
  }
  return warnings;
}

}  // namespace

ApplyResult apply_naive(const TensorSpec& spec, const DenseVector& x) {
  check_apply_args(spec, x);
  const int m = spec.m();
  const int n = spec.n();
  const double a = spec.a();

  ApplyResult result;
  result.method = ApplyMethod::naive;
  result.warnings = conditioning_warnings(spec);

  // Odometer over the trailing (m-1)-tuple, first position fastest; the
  // fixed enumeration order keeps the compensated sums deterministic.
  std::vector<KahanSum> acc(n);
  std::vector<int> tuple(m - 1, 1);
  while (true) {
    double product = 1.0;
    long long offset = 0;
    for (int component : tuple) {
      product *= x[component - 1];
      offset += component - 1;
    }
    for (int i = 0; i < n; ++i) {
      double denominator = static_cast<double>(i + offset) + a;
      acc[i].add(product / denominator);
    }
    std::size_t pos = 0;
    while (pos < tuple.size() && ++tuple[pos] > n) {
      tuple[pos] = 1;
      ++pos;
    }
    if (pos == tuple.size()) break;
  }

  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = acc[i].value();
  result.vector = DenseVector(std::move(out));
  result.scalar = dot(x, result.vector);
  return result;
}

ApplyResult apply_fast(const TensorSpec& spec, const DenseVector& x) {
  check_apply_args(spec, x);
  const int n = spec.n();
  const double a = spec.a();

  ApplyResult result;
  result.method = ApplyMethod::convolution;
  result.warnings = conditioning_warnings(spec);

  ConvolutionProfile weights = self_convolve(x, spec.m() - 1);
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) {
    KahanSum acc;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      double denominator = static_cast<double>(i + static_cast<long long>(k)) + a;
      acc.add(weights[k] / denominator);
    }
    out[i] = acc.value();
  }
  result.vector = DenseVector(std::move(out));
  result.scalar = dot(x, result.vector);
  return result;
}

double rayleigh_m(const TensorSpec& spec, const DenseVector& x) {
  check_apply_args(spec, x);
  if (spec.m() % 2 != 0) {
    throw UnsupportedRegime("the m-norm quotient needs an even order");
  }
  if (x.is_zero()) throw DegenerateInput("Rayleigh quotient of the zero vector");
  ApplyResult applied = apply_fast(spec, x);
  KahanSum denominator;
  for (double v : x.coords) denominator.add(std::pow(std::abs(v), spec.m()));
  return std::abs(applied.scalar) / denominator.value();
}

double rayleigh_2(const TensorSpec& spec, const DenseVector& x) {
  check_apply_args(spec, x);
  if (x.is_zero()) throw DegenerateInput("Rayleigh quotient of the zero vector");
  ApplyResult applied = apply_fast(spec, x);
  return std::abs(applied.scalar) / std::pow(x.norm2(), spec.m());
}

const char* to_string(ApplyMethod method) {
  switch (method) {
    case ApplyMethod::naive: return "naive";
    case ApplyMethod::convolution: return "convolution";
    case ApplyMethod::quadrature: return "quadrature";
  }
  return "unknown";
}

}  // namespace ght
