// Acceptance gate: one line per criterion, each with its own tolerance and
// runtime budget. Exits nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "ght/constants.hpp"
#include "ght/linfty.hpp"
#include "ght/quadrature.hpp"
#include "ght/spectral.hpp"
#include "ght/summation.hpp"
#include "ght/tensor_ops.hpp"
#include "oracles.hpp"

using namespace ght;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += why;
  }
};

DenseVector random_nonzero(Rng& rng, int n) {
  std::vector<double> coords(n);
  bool all_zero = true;
  do {
    for (double& v : coords) {
      v = rng.next_symmetric();
      if (v != 0.0) all_zero = false;
    }
  } while (all_zero);
  return DenseVector(std::move(coords));
}

DenseVector random_mixed_sign(Rng& rng, int n) {
  while (true) {
    DenseVector x = random_nonzero(rng, n);
    bool has_positive = false;
    bool has_negative = false;
    for (double v : x.coords) {
      has_positive = has_positive || v > 0.0;
      has_negative = has_negative || v < 0.0;
    }
    if (has_positive && has_negative) return x;
  }
}

std::string format_double(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.6g", v);
  return buffer;
}

// 1. The 3x3 Hilbert matrix: both eigenvalue estimators against the dense
// oracle and the frozen value, plus the a > 0 corollary bound of 3.
Outcome criterion1() {
  Outcome out;
  TensorSpec spec = TensorSpec::finite(2, 3, 1.0);
  double dense_top = dense_matrix_eigen(spec)[0].value;
  EigenEstimate h = h_spectral_radius(spec);
  EigenEstimate z = z_spectral_radius(spec);
  if (std::fabs(h.value - 1.4083189) > 1e-6) {
    out.fail("h value " + format_double(h.value) + " off the frozen 1.4083189");
  }
  if (std::fabs(std::fabs(z.value) - 1.4083189) > 1e-6) {
    out.fail("z value " + format_double(z.value) + " off the frozen 1.4083189");
  }
  if (std::fabs(h.value - dense_top) > 1e-6) out.fail("h disagrees with dense oracle");
  if (std::fabs(std::fabs(z.value) - dense_top) > 1e-6) {
    out.fail("z disagrees with dense oracle");
  }
  bool saw_h = false;
  bool saw_z = false;
  for (const BoundReport& report : check_h_bound(spec, h).reports) {
    if (report.bound_name == BoundName::h_bound_cor35) {
      saw_h = true;
      if (std::fabs(report.bound_value - 3.0) > 1e-12 || !report.holds) {
        out.fail("h corollary bound not 3 or violated");
      }
    }
  }
  for (const BoundReport& report : check_z_bound(spec, z).reports) {
    if (report.bound_name == BoundName::z_bound_cor35) {
      saw_z = true;
      if (std::fabs(report.bound_value - 3.0) > 1e-12 || !report.holds) {
        out.fail("z corollary bound not 3 or violated");
      }
    }
  }
  if (!saw_h || !saw_z) out.fail("corollary reports missing");
  if (out.pass) {
    out.detail = "h = z = " + format_double(h.value) + ", corollary bound 3 holds";
  }
  return out;
}

// 2. apply_fast against apply_naive on 100 random instances.
Outcome criterion2() {
  Outcome out;
  Rng rng(20260819);
  const double shifts[] = {0.5, 1.0, 2.5, -0.5, -1.25};
  int checked = 0;
  for (int instance = 0; instance < 100; ++instance) {
    int m = rng.next_int(2, 4);
    int n = rng.next_int(1, 32);
    double a = shifts[rng.next_int(0, 4)];
    TensorSpec spec = TensorSpec::finite(m, n, a);
    DenseVector x = random_nonzero(rng, n);
    ApplyResult naive = apply_naive(spec, x);
    ApplyResult fast = apply_fast(spec, x);
    auto close = [](double got, double want) {
      double tol = std::fabs(want) >= 1e-2 ? 1e-10 * std::fabs(want) : 1e-12;
      return std::fabs(got - want) <= tol;
    };
    for (int i = 0; i < n; ++i) {
      if (!close(fast.vector[i], naive.vector[i])) {
        std::ostringstream msg;
        msg << "mismatch at m=" << m << " n=" << n << " a=" << a << " i=" << i + 1;
        out.fail(msg.str());
        return out;
      }
      ++checked;
    }
    if (!close(fast.scalar, naive.scalar)) {
      out.fail("scalar mismatch at instance " + std::to_string(instance));
      return out;
    }
  }
  out.detail = "100 instances, " + std::to_string(checked) + " components matched";
  return out;
}

// 3. The integral form against enumeration.
Outcome criterion3() {
  Outcome out;
  Rng rng(3);
  int cells = 0;
  for (int m : {2, 4}) {
    for (int n = 1; n <= 8; ++n) {
      for (double a : {1.0, 2.0, 3.5}) {
        TensorSpec spec = TensorSpec::finite(m, n, a);
        for (int trial = 0; trial < 50; ++trial) {
          DenseVector x = random_nonzero(rng, n);
          double want = apply_naive(spec, x).scalar;
          double got = quadrature_scalar(spec, x);
          if (std::fabs(got - want) > 1e-8 * std::max(std::fabs(want), 1e-14)) {
            std::ostringstream msg;
            msg << "quadrature off at m=" << m << " n=" << n << " a=" << a;
            out.fail(msg.str());
            return out;
          }
        }
        ++cells;
      }
    }
  }
  out.detail = std::to_string(cells) + " cells x 50 inputs matched to 1e-8";
  return out;
}

// 4. Strict positivity of the even-order form for a >= 1.
Outcome criterion4() {
  Outcome out;
  double min_seen = 1e300;
  int trials_run = 0;
  int cell = 0;
  for (int m : {2, 4}) {
    for (int n : {2, 4, 8, 16}) {
      for (double a : {1.0, 1.5, 5.0}) {
        TensorSpec spec = TensorSpec::finite(m, n, a);
        Rng rng = Rng::stream(4, static_cast<std::uint64_t>(cell++));
        for (int trial = 0; trial < 1000; ++trial) {
          DenseVector x = random_mixed_sign(rng, n);
          double value = apply_fast(spec, x).scalar;
          min_seen = std::min(min_seen, value);
          ++trials_run;
          if (value <= 0.0) {
            std::ostringstream msg;
            msg << "nonpositive form " << value << " at m=" << m << " n=" << n
                << " a=" << a;
            out.fail(msg.str());
            return out;
          }
        }
      }
    }
  }
  out.detail = std::to_string(trials_run) +
               " mixed-sign trials all positive, min " + format_double(min_seen);
  return out;
}

// 5. Rayleigh quotients against M(a) n^{m-1} and M(a) n^{m/2}, including
// the branch below the index range.
Outcome criterion5() {
  Outcome out;
  const double shifts[] = {1.0, 1.5, 5.0, -0.5, -1.25, -10.0};
  int below_range_cells = 0;
  int cells = 0;
  int cell_seed = 0;
  for (int m : {2, 4}) {
    for (int n : {2, 4, 8, 16}) {
      for (double a : shifts) {
        ++cell_seed;
        if (a == -10.0 && !(a < -static_cast<double>(m) * (n - 1))) continue;
        TensorSpec spec = TensorSpec::finite(m, n, a);
        MValue big_m = constant_M(spec);
        if (big_m.branch == MBranch::below_index_range) ++below_range_cells;
        double h_bound = big_m.value * std::pow(n, m - 1);
        double z_bound = big_m.value * std::pow(n, m / 2.0);
        Rng rng = Rng::stream(5, static_cast<std::uint64_t>(cell_seed));
        for (int trial = 0; trial < 1000; ++trial) {
          DenseVector x = random_nonzero(rng, n);
          if (rayleigh_m(spec, x) > h_bound * (1.0 + 1e-9)) {
            out.fail("rayleigh_m exceeded M(a) n^{m-1} at a=" + format_double(a));
            return out;
          }
          if (rayleigh_2(spec, x) > z_bound * (1.0 + 1e-9)) {
            out.fail("rayleigh_2 exceeded M(a) n^{m/2} at a=" + format_double(a));
            return out;
          }
        }
        ++cells;
      }
    }
  }
  if (below_range_cells == 0) {
    out.fail("the below-index-range branch of M(a) was never exercised");
  }
  if (out.pass) {
    out.detail = std::to_string(cells) + " cells x 1000 inputs, " +
                 std::to_string(below_range_cells) + " below-range cells";
  }
  return out;
}

// 6. Every dense eigenvalue against M(a) n at order 2.
Outcome criterion6() {
  Outcome out;
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    for (double a : {-0.5, -1.25, -6.5}) {
      TensorSpec spec = TensorSpec::finite(2, n, a);
      double bound = constant_M(spec).value * n;
      for (const EigenEstimate& eigen : dense_matrix_eigen(spec)) {
        if (std::fabs(eigen.value) > bound * (1.0 + 1e-9)) {
          std::ostringstream msg;
          msg << "|lambda| = " << std::fabs(eigen.value) << " > " << bound
              << " at n=" << n << " a=" << a;
          out.fail(msg.str());
          return out;
        }
        ++checked;
      }
    }
  }
  out.detail = std::to_string(checked) + " eigenvalues within M(a) n";
  return out;
}

// 7 and 8 share their sampled instances: the truncated operator norms with
// tail allowance against K(a) and C(a), and the per-component domination.
struct OperatorOutcomes {
  Outcome norms;       // criterion 7
  Outcome domination;  // criterion 8
};

OperatorOutcomes criterion7and8() {
  OperatorOutcomes out;
  const std::size_t N = 10000;
  int cell = 0;
  double worst_f_gap = -1e300;
  double worst_t_gap = -1e300;
  double worst_domination = -1e300;
  for (int m : {2, 4}) {
    for (double a : {0.5, 1.0, 2.0}) {
      TruncatedOperatorSpec f_spec = TruncatedOperatorSpec::f_mode(m, a, N);
      TruncatedOperatorSpec t_spec = TruncatedOperatorSpec::t_mode(m, a, N);
      double k_constant = constant_K(TensorSpec::infinite(m, a));
      double c_constant = constant_C(TensorSpec::infinite(m, a));
      double p = f_spec.p_exponent;  // 2(m-1); the T exponent is 2
      for (int trial = 0; trial < 1000; ++trial) {
        Rng rng = Rng::stream(78, static_cast<std::uint64_t>(cell * 1000 + trial));
        DenseVector x = sample_l1_unit(rng);
        double l1 = x.norm1();
        DenseVector prefix = contraction_prefix(m, a, x, N);

        // Criterion 8: |prefix_i| <= l1^{m-1} / (i-1+a).
        for (std::size_t i = 1; i <= N; ++i) {
          double gap = std::fabs(prefix[i - 1]) - component_bound(f_spec, l1, i);
          worst_domination = std::max(worst_domination, gap);
          if (gap > 1e-12) {
            std::ostringstream msg;
            msg << "component " << i << " exceeds its bound by " << gap << " at m="
                << m << " a=" << a;
            out.domination.fail(msg.str());
          }
        }
        if (!out.domination.pass) return out;

        // |F_i|^p = prefix_i^2 when p = 2(m-1); T_i^2 = l1^{2(2-m)} prefix_i^2.
        KahanSum squares;
        for (std::size_t i = 0; i < N; ++i) squares.add(prefix[i] * prefix[i]);
        double f_norm =
            std::pow(squares.value() + tail_bound(f_spec, l1).tail_value, 1.0 / p);
        double t_norm = std::sqrt(std::pow(l1, 2.0 * (2 - m)) * squares.value() +
                                  tail_bound(t_spec, l1).tail_value);
        worst_f_gap = std::max(worst_f_gap, f_norm - k_constant);
        worst_t_gap = std::max(worst_t_gap, t_norm - c_constant);
        if (f_norm > k_constant + 1e-9) {
          out.norms.fail("F norm " + format_double(f_norm) + " above K(a) at m=" +
                         std::to_string(m) + " a=" + format_double(a));
          return out;
        }
        if (t_norm > c_constant + 1e-9) {
          out.norms.fail("T norm " + format_double(t_norm) + " above C(a) at m=" +
                         std::to_string(m) + " a=" + format_double(a));
          return out;
        }

        // Spot-check that the public operators reproduce the same values.
        if (trial < 3) {
          DenseVector f_image = apply_F(f_spec, x);
          DenseVector t_image = apply_T(t_spec, x);
          for (std::size_t i = 0; i < 32; ++i) {
            double f_back = std::copysign(
                std::pow(std::fabs(f_image[i]), static_cast<double>(m - 1)),
                f_image[i]);
            if (std::fabs(f_back - prefix[i]) >
                1e-12 * std::max(1.0, std::fabs(prefix[i]))) {
              out.norms.fail("apply_F disagrees with the contraction prefix");
              return out;
            }
            double t_want = std::pow(l1, 2.0 - m) * prefix[i];
            if (std::fabs(t_image[i] - t_want) >
                1e-12 * std::max(1.0, std::fabs(t_want))) {
              out.norms.fail("apply_T disagrees with the contraction prefix");
              return out;
            }
          }
        }
      }
      ++cell;
    }
  }

  // Near-tightness: the first basis vector at m=2, a=1.
  {
    TruncatedOperatorSpec f_spec = TruncatedOperatorSpec::f_mode(2, 1.0, N);
    DenseVector one_hot{1.0};
    DenseVector prefix = contraction_prefix(2, 1.0, one_hot, N);
    KahanSum squares;
    for (std::size_t i = 0; i < N; ++i) squares.add(prefix[i] * prefix[i]);
    double f_norm = std::sqrt(squares.value() + tail_bound(f_spec, 1.0).tail_value);
    double target = 0.999 * std::sqrt(kPiSquaredOver6);
    if (f_norm < target) {
      out.norms.fail("one-hot input reached only " + format_double(f_norm));
    } else if (out.norms.pass) {
      out.norms.detail = "6000 samples within K(a)/C(a); worst gaps " +
                         format_double(worst_f_gap) + " (F), " +
                         format_double(worst_t_gap) + " (T); one-hot at " +
                         format_double(f_norm);
    }
  }
  if (out.domination.pass) {
    out.domination.detail =
        "worst componentwise excess " + format_double(worst_domination);
  }
  return out;
}

// 9. Structural properties over randomized cases.
Outcome criterion9() {
  Outcome out;
  Rng rng(9);
  const double shifts[] = {0.5, 1.0, 2.5, -0.5, -1.25};

  for (int trial = 0; trial < 200; ++trial) {
    int m = rng.next_int(2, 4);
    int n = rng.next_int(1, 10);
    double a = shifts[rng.next_int(0, 4)];
    TensorSpec spec = TensorSpec::finite(m, n, a);
    DenseVector x = random_nonzero(rng, n);

    double lambda = 0.0;
    while (std::fabs(lambda) < 0.1) lambda = 2.0 * rng.next_symmetric();
    DenseVector scaled = x;
    for (double& v : scaled.coords) v *= lambda;
    ApplyResult base = apply_fast(spec, x);
    ApplyResult stretched = apply_fast(spec, scaled);
    double factor = std::pow(lambda, m - 1);
    for (int i = 0; i < n; ++i) {
      double want = factor * base.vector[i];
      if (std::fabs(stretched.vector[i] - want) >
          1e-10 * std::max(1.0, std::fabs(want))) {
        out.fail("homogeneity broken at trial " + std::to_string(trial));
        return out;
      }
    }
    double scalar_want = std::pow(lambda, m) * base.scalar;
    if (std::fabs(stretched.scalar - scalar_want) >
        1e-10 * std::max(1.0, std::fabs(scalar_want))) {
      out.fail("scalar homogeneity broken at trial " + std::to_string(trial));
      return out;
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    int m = rng.next_int(2, 4);
    int n = rng.next_int(1, 10);
    double a = shifts[rng.next_int(0, 4)];
    TensorSpec spec = TensorSpec::finite(m, n, a);
    std::vector<int> indices(m);
    for (int& i : indices) i = rng.next_int(1, n);
    std::vector<int> shuffled = indices;
    for (int i = m - 1; i > 0; --i) {
      std::swap(shuffled[i], shuffled[rng.next_int(0, i)]);
    }
    if (entry(spec, MultiIndex{std::vector<int>(indices)}) !=
        entry(spec, MultiIndex{std::vector<int>(shuffled)})) {
      out.fail("entry not symmetric under index permutation");
      return out;
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    int m = rng.next_int(2, 4);
    int n = rng.next_int(1, 10);
    double a = shifts[rng.next_int(0, 4)];
    TensorSpec spec = TensorSpec::finite(m, n, a);
    DenseVector x = random_nonzero(rng, n);
    double via_naive = dot(x, apply_naive(spec, x).vector);
    double via_fast = apply_fast(spec, x).scalar;
    if (std::fabs(via_fast - via_naive) >
        1e-10 * std::max(1.0, std::fabs(via_naive))) {
      out.fail("scalar identity broken at trial " + std::to_string(trial));
      return out;
    }
  }

  for (int trial = 0; trial < 200; ++trial) {
    bool f_kind = rng.next_bit();
    int m = f_kind ? 2 + 2 * rng.next_int(0, 1) : rng.next_int(2, 4);
    double a = 0.25 + rng.next_unit() * 3.0;
    std::size_t N = static_cast<std::size_t>(rng.next_int(5, 40));
    TruncatedOperatorSpec spec = f_kind
                                     ? TruncatedOperatorSpec::f_mode(m, a, N)
                                     : TruncatedOperatorSpec::t_mode(m, a, N, 2.5);
    double l1 = 0.1 + rng.next_unit() * 4.0;
    double s = f_kind ? spec.p_exponent / (m - 1) : spec.p_exponent;
    double remainder_lo = oracle::remainder_bracket(s, a, N).first;
    if (tail_bound(spec, l1).tail_value < std::pow(l1, spec.p_exponent) * remainder_lo) {
      out.fail("tail bound under the exact remainder at trial " + std::to_string(trial));
      return out;
    }
  }

  out.detail = "4 properties x 200 randomized cases";
  return out;
}

struct Criterion {
  int id;
  const char* label;
  double budget_seconds;
};

}  // namespace

int main() {
  bool all_pass = true;
  auto report = [&all_pass](const Criterion& criterion, const Outcome& outcome,
                            double elapsed) {
    bool within_budget = elapsed < criterion.budget_seconds;
    bool pass = outcome.pass && within_budget;
    all_pass = all_pass && pass;
    std::printf("[%s] criterion %d: %s (%.2f s, budget %.0f s)%s%s\n",
                pass ? "PASS" : "FAIL", criterion.id, criterion.label, elapsed,
                criterion.budget_seconds,
                outcome.detail.empty() ? "" : " -- ", outcome.detail.c_str());
    if (outcome.pass && !within_budget) {
      std::printf("       exceeded the runtime budget\n");
    }
  };

  using clock = std::chrono::steady_clock;
  auto timed = [](auto&& fn) {
    auto start = clock::now();
    auto result = fn();
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    return std::make_pair(result, elapsed);
  };

  {
    auto [outcome, t] = timed(criterion1);
    report({1, "classical 3x3 Hilbert eigenvalues and corollary bound", 1.0}, outcome, t);
  }
  {
    auto [outcome, t] = timed(criterion2);
    report({2, "fast apply against enumeration on 100 random instances", 30.0}, outcome, t);
  }
  {
    auto [outcome, t] = timed(criterion3);
    report({3, "integral form against enumeration", 10.0}, outcome, t);
  }
  {
    auto [outcome, t] = timed(criterion4);
    report({4, "positive definiteness in the proven regime", 60.0}, outcome, t);
  }
  {
    auto [outcome, t] = timed(criterion5);
    report({5, "Rayleigh quotients within the M(a) bounds", 60.0}, outcome, t);
  }
  {
    auto [outcome, t] = timed(criterion6);
    report({6, "dense spectrum within M(a) n at order 2", 5.0}, outcome, t);
  }
  {
    auto start = clock::now();
    OperatorOutcomes operators = criterion7and8();
    double elapsed = std::chrono::duration<double>(clock::now() - start).count();
    // The two criteria share one pass over the sampled instances, so the
    // elapsed time is attributed to both.
    report({7, "truncated operator norms within K(a) and C(a)", 120.0},
           operators.norms, elapsed);
    report({8, "componentwise domination of the contraction", 120.0},
           operators.domination, elapsed);
  }
  {
    auto [outcome, t] = timed(criterion9);
    report({9, "algebraic property suite", 30.0}, outcome, t);
  }

  std::printf("%s\n", all_pass ? "ACCEPTANCE: all criteria passed"
                               : "ACCEPTANCE: FAILURES PRESENT");
  return all_pass ? 0 : 1;
}
