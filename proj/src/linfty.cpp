#include "ght/linfty.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ght/convolution.hpp"
#include "ght/tensor_ops.hpp"

namespace ght {

namespace {

void check_operator_spec(const TruncatedOperatorSpec& spec) {
  if (spec.order < 2) {
    std::ostringstream msg;
    msg << "order must be at least 2, got " << spec.order;
    throw InvalidParameter(msg.str());
  }
  if (!(spec.shift > 0.0)) {
    throw UnsupportedRegime(
        "the infinite-dimensional operators are supported for a > 0 only");
  }
  if (spec.output_len < 1) {
    throw InvalidParameter("output_len must be at least 1");
  }
  if (spec.kind == OperatorKind::f_root && spec.order % 2 != 0) {
    throw UnsupportedRegime("the root operator needs an even order");
  }
}

double tail_integral(const TruncatedOperatorSpec& spec, double s, double l1) {
  // Midpoint comparison on a convex integrand: (j+a)^-s <= integral of
  // (t+a)^-s over [j-1/2, j+1/2], so the tail past N is at most the
  // integral from N-1/2. Sharper than starting at N-1, still an upper
  // bound on the discarded remainder.
  double start = static_cast<double>(spec.output_len) - 0.5 + spec.shift;
  return std::pow(l1, spec.p_exponent) * std::pow(start, 1.0 - s) / (s - 1.0);
}

double tail_exponent(const TruncatedOperatorSpec& spec) {
  double s = spec.kind == OperatorKind::f_root
                 ? spec.p_exponent / (spec.order - 1)
                 : spec.p_exponent;
  if (!(s > 1.0)) {
    std::ostringstream msg;
    msg << "tail exponent must exceed 1, got " << s;
    throw DivergentExponent(msg.str());
  }
  return s;
}

double signed_root(double value, int degree) {
  if (degree == 1) return value;
  if (degree == 3) return std::cbrt(value);
  return std::copysign(std::pow(std::abs(value), 1.0 / degree), value);
}

}  // namespace

TruncatedOperatorSpec TruncatedOperatorSpec::f_mode(int m, double a,
                                                    std::size_t output_len) {
  TruncatedOperatorSpec spec;
  spec.order = m;
  spec.shift = a;
  spec.output_len = output_len;
  spec.kind = OperatorKind::f_root;
  // The proven target space: p-th powers of the component bounds decay
  // like (i-1+a)^-2.
  spec.p_exponent = 2.0 * (m - 1);
  check_operator_spec(spec);
  return spec;
}

TruncatedOperatorSpec TruncatedOperatorSpec::t_mode(int m, double a,
                                                    std::size_t output_len, double p) {
  TruncatedOperatorSpec spec;
  spec.order = m;
  spec.shift = a;
  spec.output_len = output_len;
  spec.kind = OperatorKind::t_scaled;
  spec.p_exponent = p;
  check_operator_spec(spec);
  if (!(p > 1.0)) {
    std::ostringstream msg;
    msg << "the rescaled operator needs p > 1, got " << p;
    throw InvalidParameter(msg.str());
  }
  return spec;
}

DenseVector contraction_prefix(int order, double shift, const DenseVector& x,
                               std::size_t output_len) {
  if (order < 2) throw InvalidParameter("order must be at least 2");
  if (!(shift > 0.0)) {
    throw UnsupportedRegime("the infinite index set needs a > 0");
  }
  if (output_len < 1) throw InvalidParameter("output_len must be at least 1");
  ConvolutionProfile weights = self_convolve(x, order - 1);
  std::vector<double> out(output_len);
  for (std::size_t i = 0; i < output_len; ++i) {
    KahanSum acc;
    for (std::size_t k = 0; k < weights.size(); ++k) {
      acc.add(weights[k] / (static_cast<double>(i + k) + shift));
    }
    out[i] = acc.value();
  }
  return DenseVector(std::move(out));
}

DenseVector apply_F(const TruncatedOperatorSpec& spec, const DenseVector& x) {
  check_operator_spec(spec);
  if (spec.kind != OperatorKind::f_root) {
    throw InvalidParameter("apply_F needs an f_root spec");
  }
  DenseVector out = contraction_prefix(spec.order, spec.shift, x, spec.output_len);
  if (spec.order == 2) return out;
  for (double& v : out.coords) v = signed_root(v, spec.order - 1);
  return out;
}

DenseVector apply_T(const TruncatedOperatorSpec& spec, const DenseVector& x) {
  check_operator_spec(spec);
  if (spec.kind != OperatorKind::t_scaled) {
    throw InvalidParameter("apply_T needs a t_scaled spec");
  }
  if (x.size() == 0 || x.is_zero()) {
    return DenseVector(std::vector<double>(spec.output_len, 0.0));
  }
  DenseVector out = contraction_prefix(spec.order, spec.shift, x, spec.output_len);
  double scale = std::pow(x.norm1(), 2.0 - spec.order);
  for (double& v : out.coords) v *= scale;
  return out;
}

double component_bound(const TruncatedOperatorSpec& spec, double x_l1_norm,
                       std::size_t i) {
  check_operator_spec(spec);
  if (i < 1) throw InvalidParameter("component index is 1-based");
  if (x_l1_norm < 0.0) throw InvalidParameter("a norm cannot be negative");
  return std::pow(x_l1_norm, spec.order - 1) /
         (static_cast<double>(i - 1) + spec.shift);
}

TailBound tail_bound(const TruncatedOperatorSpec& spec, double x_l1_norm) {
  check_operator_spec(spec);
  if (x_l1_norm < 0.0) throw InvalidParameter("a norm cannot be negative");
  double s = tail_exponent(spec);
  KahanSum prefix;
  for (std::size_t i = 1; i <= spec.output_len; ++i) {
    prefix.add(std::pow(static_cast<double>(i - 1) + spec.shift, -s));
  }
  TailBound bound;
  bound.computed_prefix = std::pow(x_l1_norm, spec.p_exponent) * prefix.value();
  bound.tail_value = tail_integral(spec, s, x_l1_norm);
  bound.total_bound = bound.computed_prefix + bound.tail_value;
  return bound;
}

DenseVector sample_l1_unit(Rng& rng) {
  int support = rng.next_int(1, 64);
  std::vector<double> magnitudes(support);
  double total = 0.0;
  for (double& g : magnitudes) {
    // Exponential spacings give the flat distribution on the simplex.
    g = -std::log1p(-rng.next_unit());
    total += g;
  }
  if (total == 0.0) {
    magnitudes[0] = 1.0;
    total = 1.0;
  }
  std::vector<double> coords(support);
  for (int i = 0; i < support; ++i) {
    double sign = rng.next_bit() ? 1.0 : -1.0;
    coords[i] = sign * magnitudes[i] / total;
  }
  return DenseVector(std::move(coords));
}

double estimate_operator_norm(const TruncatedOperatorSpec& spec, int samples,
                              std::uint64_t seed) {
  check_operator_spec(spec);
  if (samples < 1) throw InvalidParameter("norm estimation needs at least one sample");
  double s = tail_exponent(spec);
  double best = 0.0;
  for (int trial = 0; trial < samples; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    DenseVector x = sample_l1_unit(rng);
    DenseVector image = spec.kind == OperatorKind::f_root ? apply_F(spec, x)
                                                          : apply_T(spec, x);
    KahanSum powers;
    for (double v : image.coords) {
      powers.add(std::pow(std::abs(v), spec.p_exponent));
    }
    double with_tail = powers.value() + tail_integral(spec, s, x.norm1());
    best = std::max(best, std::pow(with_tail, 1.0 / spec.p_exponent));
  }
  return best;
}

PdReport pd_check(const TensorSpec& spec, int trials, std::uint64_t seed) {
  validate_spec(spec);
  if (!spec.is_finite()) throw InvalidParameter("pd_check needs a finite dim");
  if (spec.m() % 2 != 0) {
    throw UnsupportedRegime("positive definiteness needs an even order");
  }
  if (trials < 1) throw InvalidParameter("pd_check needs at least one trial");

  const int n = spec.n();
  PdReport report;
  report.trials = trials;
  report.regime =
      spec.a() >= 1.0 ? PdRegime::theorem_backed : PdRegime::evidence_only;

  double worst = std::numeric_limits<double>::infinity();
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(trial));
    std::vector<double> coords(n);
    bool all_zero = true;
    do {
      for (double& v : coords) {
        v = rng.next_symmetric();
        if (v != 0.0) all_zero = false;
      }
    } while (all_zero);
    double scale = std::pow(10.0, rng.next_int(-2, 2));
    for (double& v : coords) v *= scale;
    DenseVector x(std::move(coords));

    ApplyResult applied = apply_fast(spec, x);
    KahanSum denominator;
    for (double v : x.coords) denominator.add(std::pow(std::abs(v), spec.m()));
    double value = applied.scalar / denominator.value();
    if (value < worst) {
      worst = value;
      report.worst_input = x;
    }
  }
  report.min_rayleigh = worst;
  report.all_positive = worst > 0.0;
  report.verdict = report.all_positive ? "consistent-with-PD" : "counterexample-found";
  return report;
}

const char* to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::f_root: return "f_root";
    case OperatorKind::t_scaled: return "t_scaled";
  }
  return "unknown";
}

const char* to_string(PdRegime regime) {
  switch (regime) {
    case PdRegime::theorem_backed: return "theorem-backed";
    case PdRegime::evidence_only: return "evidence-only";
  }
  return "unknown";
}

}  // namespace ght
