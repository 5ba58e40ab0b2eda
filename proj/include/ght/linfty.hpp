#pragma once

#include <cstdint>
#include <string>

#include "ght/dense_vector.hpp"
#include "ght/summation.hpp"
#include "ght/tensor_spec.hpp"

namespace ght {

enum class OperatorKind {
  f_root,    // componentwise (m-1)-th root of the contraction; m even
  t_scaled,  // ||x||_1^{2-m} rescaling of the contraction
};

// Truncation window for the infinite-dimensional operators: the first
// output_len components are computed exactly (finite support keeps every
// inner sum finite); everything beyond is covered by tail_bound.
struct TruncatedOperatorSpec {
  int order = 2;             // m
  double shift = 1.0;        // a > 0
  std::size_t output_len = 10000;
  double p_exponent = 2.0;   // target l^p norm
  OperatorKind kind = OperatorKind::t_scaled;

  static TruncatedOperatorSpec f_mode(int m, double a, std::size_t output_len = 10000);
  static TruncatedOperatorSpec t_mode(int m, double a, std::size_t output_len = 10000,
                                      double p = 2.0);
};

// Split of the l^p bound series at the truncation point: prefix holds
// sum_{i<=N} of the per-component bound p-th powers, tail_value dominates
// the rest by integral comparison.
struct TailBound {
  double computed_prefix = 0.0;
  double tail_value = 0.0;
  double total_bound = 0.0;
};

// First output_len components of the contraction prefix for a finitely
// supported input (no root, no rescale); shared by both operators.
DenseVector contraction_prefix(int order, double shift, const DenseVector& x,
                               std::size_t output_len);

// Componentwise signed (m-1)-th root of the contraction. m even (so the
// root degree is odd and real).
DenseVector apply_F(const TruncatedOperatorSpec& spec, const DenseVector& x);

// ||x||_1^{2-m} times the contraction; the zero input maps to zero.
DenseVector apply_T(const TruncatedOperatorSpec& spec, const DenseVector& x);

// ||x||_1^{m-1} / (i - 1 + a): the proven dominator of |contraction_i|.
double component_bound(const TruncatedOperatorSpec& spec, double x_l1_norm, std::size_t i);

// Bound-series split at output_len with exponent s = p/(m-1) (F mode) or
// s = p (T mode); requires s > 1.
TailBound tail_bound(const TruncatedOperatorSpec& spec, double x_l1_norm);

// Supremum estimate of the operator norm over random l1-unit inputs:
// truncated-prefix norm plus tail allowance, maximized over samples.
// Never exceeds K(a) (F mode) or C(a) (T mode).
double estimate_operator_norm(const TruncatedOperatorSpec& spec, int samples,
                              std::uint64_t seed = kDefaultSeed);

// Random l1-unit vector: support size uniform in [1,64] starting at index
// 1, Rademacher signs, flat-Dirichlet magnitudes.
DenseVector sample_l1_unit(Rng& rng);

enum class PdRegime {
  theorem_backed,  // m even, a >= 1: positive definiteness is proven
  evidence_only,   // anywhere else the check merely reports
};

struct PdReport {
  int trials = 0;
  double min_rayleigh = 0.0;
  DenseVector worst_input;
  bool all_positive = false;
  PdRegime regime = PdRegime::evidence_only;
  std::string verdict;  // "consistent-with-PD" or "counterexample-found"
};

// Randomized positive-definiteness probe: mixed-sign, varied-scale inputs,
// minimum observed Rayleigh value. m even required.
PdReport pd_check(const TensorSpec& spec, int trials, std::uint64_t seed = kDefaultSeed);

const char* to_string(OperatorKind kind);
const char* to_string(PdRegime regime);

}  // namespace ght
