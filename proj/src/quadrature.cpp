#include "ght/quadrature.hpp"

#include <cmath>
#include <sstream>

#include "ght/summation.hpp"

namespace ght {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Scalar form as the weighted node sum of t^(a-1) p(t)^m with p evaluated
// by Horner; the nodes are interior, so t > 0 throughout.
double integrate(const TensorSpec& spec, const DenseVector& x,
                 const GaussLegendreRule& rule) {
  const int m = spec.m();
  const int n = spec.n();
  const double a = spec.a();
  KahanSum acc;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    double t = rule.nodes[q];
    double p = x[n - 1];
    for (int j = n - 2; j >= 0; --j) p = p * t + x[j];
    double prefactor = a == 1.0 ? 1.0 : std::pow(t, a - 1.0);
    acc.add(rule.weights[q] * prefactor * std::pow(p, m));
  }
  return acc.value();
}

}  // namespace

GaussLegendreRule gauss_legendre(int count) {
  if (count < 1) {
    std::ostringstream msg;
    msg << "quadrature rule needs at least one node, got " << count;
    throw InvalidParameter(msg.str());
  }
  GaussLegendreRule rule;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  // Newton on the Legendre recurrence, one root per symmetric pair.
  for (int i = 0; i < (count + 1) / 2; ++i) {
    double z = std::cos(kPi * (i + 0.75) / (count + 0.5));
    double derivative = 0.0;
    for (int pass = 0; pass < 100; ++pass) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < count; ++j) {
        double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      derivative = count * (z * p0 - p1) / (z * z - 1.0);
      double step = p0 / derivative;
      z -= step;
      if (std::abs(step) < 1e-15) break;
    }
    // Map the root pair from [-1, 1] to [0, 1].
    rule.nodes[i] = 0.5 * (1.0 - z);
    rule.nodes[count - 1 - i] = 0.5 * (1.0 + z);
    double w = 1.0 / ((1.0 - z * z) * derivative * derivative);
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  return rule;
}

double quadrature_scalar(const TensorSpec& spec, const DenseVector& x, int nodes) {
  validate_spec(spec);
  if (!spec.is_finite()) throw InvalidParameter("quadrature needs a finite dim");
  if (x.size() != static_cast<std::size_t>(spec.n())) {
    std::ostringstream msg;
    msg << "vector length " << x.size() << " does not match dim " << spec.n();
    throw ShapeError(msg.str());
  }
  const double a = spec.a();
  if (a < 1.0) {
    throw UnsupportedRegime("the integral form needs a >= 1");
  }
  if (nodes > 0) {
    return integrate(spec, x, gauss_legendre(nodes));
  }
  if (std::nearbyint(a) == a) {
    // Polynomial integrand of degree m(n-1) + a - 1: pick the rule exact
    // for it, with a two-node margin.
    long long degree_plus_one = spec.max_offset() + static_cast<long long>(a);
    int exact = static_cast<int>((degree_plus_one + 1) / 2 + 2);
    return integrate(spec, x, gauss_legendre(std::max(exact, 16)));
  }
  int count = 16;
  double previous = integrate(spec, x, gauss_legendre(count));
  while (count * 2 <= kQuadratureNodeCap) {
    count *= 2;
    double current = integrate(spec, x, gauss_legendre(count));
    if (std::abs(current - previous) <= 1e-10 * std::abs(current)) return current;
    previous = current;
  }
  return previous;
}

}  // namespace ght
