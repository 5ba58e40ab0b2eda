#include "ght/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "ght/constants.hpp"
#include "ght/convolution.hpp"
#include "ght/tensor_ops.hpp"

namespace ght {

namespace {

void check_finite_spec(const TensorSpec& spec) {
  validate_spec(spec);
  if (!spec.is_finite()) {
    throw InvalidParameter("eigenvalue estimation needs a finite dim");
  }
}

void check_tolerance(double tol) {
  if (!(tol > 0.0)) {
    std::ostringstream msg;
    msg << "tolerance must be positive, got " << tol;
    throw InvalidParameter(msg.str());
  }
}

void scale_to_unit_m_norm(DenseVector& x, int m) {
  KahanSum acc;
  for (double v : x.coords) acc.add(std::pow(std::abs(v), m));
  double norm = std::pow(acc.value(), 1.0 / m);
  for (double& v : x.coords) v /= norm;
}

void scale_to_unit_2_norm(DenseVector& x) {
  double norm = x.norm2();
  for (double& v : x.coords) v /= norm;
}

double h_residual(const DenseVector& y, const DenseVector& x, double value, int m) {
  KahanSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double gap = y[i] - value * std::pow(x[i], m - 1);
    acc.add(gap * gap);
  }
  return std::sqrt(acc.value());
}

double z_residual(const DenseVector& y, const DenseVector& x, double value) {
  KahanSum acc;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double gap = y[i] - value * x[i];
    acc.add(gap * gap);
  }
  return std::sqrt(acc.value());
}

// One shifted power run on the Euclidean sphere. direction +1 climbs
// toward the largest Z-eigenvalue, -1 descends toward the smallest; the
// shift keeps each step monotone.
EigenEstimate z_power_run(const TensorSpec& spec, DenseVector x, double alpha,
                          int direction, const ZOptions& opts) {
  EigenEstimate estimate;
  for (int iteration = 1; iteration <= opts.max_iter; ++iteration) {
    DenseVector y = apply_fast(spec, x).vector;
    double mu = dot(x, y);
    double residual = z_residual(y, x, mu);
    estimate.value = mu;
    estimate.vector = x;
    estimate.residual = residual;
    estimate.iterations = iteration;
    if (residual <= opts.tol * std::min(1.0, std::abs(mu))) {
      estimate.converged = true;
      return estimate;
    }
    DenseVector next = x;
    for (std::size_t i = 0; i < x.size(); ++i) {
      next[i] = direction > 0 ? y[i] + alpha * x[i] : alpha * x[i] - y[i];
    }
    scale_to_unit_2_norm(next);
    x = next;
  }
  estimate.converged = false;
  return estimate;
}

// Largest |value| wins; within 1e-10 of a tie the cheaper run wins.
bool improves(const EigenEstimate& candidate, const EigenEstimate& incumbent) {
  double gap = std::abs(candidate.value) - std::abs(incumbent.value);
  if (std::abs(gap) <= 1e-10) return candidate.iterations < incumbent.iterations;
  return gap > 0.0;
}

}  // namespace

EigenEstimate h_spectral_radius(const TensorSpec& spec, const PowerOptions& opts,
                                PowerTrace* trace) {
  check_finite_spec(spec);
  check_tolerance(opts.tol);
  if (!(spec.a() > 0.0)) {
    throw UnsupportedRegime(
        "the ratio-sandwich power method needs a > 0 (all entries positive)");
  }
  const int m = spec.m();
  const int n = spec.n();
  const double root = 1.0 / (m - 1);

  DenseVector x(std::vector<double>(n, 1.0));
  scale_to_unit_m_norm(x, m);

  EigenEstimate estimate;
  for (int iteration = 1; iteration <= opts.max_iter; ++iteration) {
    DenseVector y = apply_fast(spec, x).vector;
    double lower = std::numeric_limits<double>::infinity();
    double upper = 0.0;
    for (int i = 0; i < n; ++i) {
      double ratio = y[i] / std::pow(x[i], m - 1);
      lower = std::min(lower, ratio);
      upper = std::max(upper, ratio);
    }
    if (trace != nullptr) {
      trace->lower.push_back(lower);
      trace->upper.push_back(upper);
    }
    double value = 0.5 * (lower + upper);
    estimate.value = value;
    estimate.vector = x;
    estimate.iterations = iteration;
    estimate.residual = h_residual(y, x, value, m);
    // The sandwich width bounds the residual: on an m-norm-unit positive
    // iterate, ||y - value*x^[m-1]||_2 <= upper - lower.
    if (upper - lower <= opts.tol * std::min(1.0, lower)) {
      estimate.converged = true;
      return estimate;
    }
    for (int i = 0; i < n; ++i) x[i] = std::pow(y[i], root);
    scale_to_unit_m_norm(x, m);
  }
  estimate.converged = false;
  return estimate;
}

EigenEstimate z_spectral_radius(const TensorSpec& spec, const ZOptions& opts) {
  check_finite_spec(spec);
  check_tolerance(opts.tol);
  if (opts.restarts < 1) {
    throw InvalidParameter("z_spectral_radius needs at least one restart");
  }
  const int n = spec.n();

  // Shift above the sum of all entry magnitudes, grouped by index total.
  ConvolutionProfile totals =
      self_convolve(DenseVector(std::vector<double>(n, 1.0)), spec.m());
  KahanSum entry_mass;
  for (std::size_t k = 0; k < totals.size(); ++k) {
    entry_mass.add(totals[k] *
                   std::abs(1.0 / (static_cast<double>(k) + spec.a())));
  }
  const double alpha = 1.0 + entry_mass.value();

  EigenEstimate best;
  bool have_best = false;
  for (int restart = 0; restart < opts.restarts; ++restart) {
    DenseVector start(std::vector<double>(n, 1.0));
    if (restart > 0) {
      Rng rng = Rng::stream(opts.seed, static_cast<std::uint64_t>(restart));
      do {
        for (int i = 0; i < n; ++i) start[i] = rng.next_symmetric();
      } while (start.norm2() < 1e-12);
    }
    scale_to_unit_2_norm(start);
    for (int direction : {1, -1}) {
      EigenEstimate candidate = z_power_run(spec, start, alpha, direction, opts);
      if (!have_best || improves(candidate, best)) {
        best = candidate;
        have_best = true;
      }
    }
  }
  return best;
}

std::vector<EigenEstimate> dense_matrix_eigen(const TensorSpec& spec) {
  check_finite_spec(spec);
  if (spec.m() != 2) {
    throw UnsupportedRegime("the dense eigensolver is the order-2 oracle only");
  }
  const int n = spec.n();
  const double a = spec.a();

  std::vector<std::vector<double>> matrix(n, std::vector<double>(n));
  std::vector<std::vector<double>> original(n, std::vector<double>(n));
  std::vector<std::vector<double>> basis(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) {
    basis[i][i] = 1.0;
    for (int j = 0; j < n; ++j) {
      matrix[i][j] = 1.0 / (static_cast<double>(i + j) + a);
      original[i][j] = matrix[i][j];
    }
  }

  double frobenius = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) frobenius += matrix[i][j] * matrix[i][j];
  frobenius = std::sqrt(frobenius);

  auto off_diagonal = [&]() {
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) sum += matrix[i][j] * matrix[i][j];
    return std::sqrt(sum);
  };

  int sweeps = 0;
  bool settled = off_diagonal() <= 1e-15 * frobenius;
  while (!settled && sweeps < 60) {
    ++sweeps;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double apq = matrix[p][q];
        if (apq == 0.0) continue;
        double theta = (matrix[q][q] - matrix[p][p]) / (2.0 * apq);
        double t = (theta >= 0.0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        matrix[p][p] -= t * apq;
        matrix[q][q] += t * apq;
        matrix[p][q] = matrix[q][p] = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          double arp = matrix[r][p];
          double arq = matrix[r][q];
          matrix[r][p] = matrix[p][r] = c * arp - s * arq;
          matrix[r][q] = matrix[q][r] = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          double vrp = basis[r][p];
          double vrq = basis[r][q];
          basis[r][p] = c * vrp - s * vrq;
          basis[r][q] = s * vrp + c * vrq;
        }
      }
    }
    settled = off_diagonal() <= 1e-15 * frobenius;
  }

  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int lhs, int rhs) { return matrix[lhs][lhs] > matrix[rhs][rhs]; });

  std::vector<EigenEstimate> estimates;
  estimates.reserve(n);
  for (int rank = 0; rank < n; ++rank) {
    int column = order[rank];
    EigenEstimate estimate;
    estimate.value = matrix[column][column];
    std::vector<double> v(n);
    for (int r = 0; r < n; ++r) v[r] = basis[r][column];
    estimate.vector = DenseVector(std::move(v));
    KahanSum acc;
    for (int r = 0; r < n; ++r) {
      KahanSum row;
      for (int ccol = 0; ccol < n; ++ccol) {
        row.add(original[r][ccol] * estimate.vector[ccol]);
      }
      double gap = row.value() - estimate.value * estimate.vector[r];
      acc.add(gap * gap);
    }
    estimate.residual = std::sqrt(acc.value());
    estimate.iterations = sweeps;
    estimate.converged = settled;
    estimates.push_back(std::move(estimate));
  }
  return estimates;
}

BoundCheck check_h_bound(const TensorSpec& spec, const EigenEstimate& estimate) {
  check_finite_spec(spec);
  BoundCheck check;
  double observed = std::abs(estimate.value);
  double power = std::pow(static_cast<double>(spec.n()), spec.m() - 1);
  if (spec.m() % 2 == 0) {
    check.reports.push_back(make_bound_report(
        BoundName::h_bound_ma, constant_M(spec).value * power, observed));
  } else {
    check.note = "M(a) bound on H-eigenvalues is stated for even order; skipped";
  }
  if (spec.a() > 0.0) {
    check.reports.push_back(
        make_bound_report(BoundName::h_bound_cor35, power / spec.a(), observed));
  }
  return check;
}

BoundCheck check_z_bound(const TensorSpec& spec, const EigenEstimate& estimate) {
  check_finite_spec(spec);
  BoundCheck check;
  double observed = std::abs(estimate.value);
  double power = std::pow(static_cast<double>(spec.n()), spec.m() / 2.0);
  check.reports.push_back(make_bound_report(
      BoundName::z_bound_ma, constant_M(spec).value * power, observed));
  if (spec.a() > 0.0) {
    check.reports.push_back(
        make_bound_report(BoundName::z_bound_cor35, power / spec.a(), observed));
  }
  return check;
}

BoundReport make_bound_report(BoundName name, double bound_value, double observed) {
  BoundReport report;
  report.bound_name = name;
  report.bound_value = bound_value;
  report.observed = observed;
  report.margin = bound_value - observed;
  report.holds = report.margin >= -1e-9 * std::abs(bound_value);
  return report;
}

const char* to_string(BoundName name) {
  switch (name) {
    case BoundName::h_bound_ma: return "h_bound_ma";
    case BoundName::z_bound_ma: return "z_bound_ma";
    case BoundName::h_bound_cor35: return "h_bound_cor35";
    case BoundName::z_bound_cor35: return "z_bound_cor35";
  }
  return "unknown";
}

}  // namespace ght
