#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ght/dense_vector.hpp"
#include "ght/summation.hpp"
#include "ght/tensor_spec.hpp"

namespace ght {

struct EigenEstimate {
  double value = 0.0;
  DenseVector vector;     // m-norm unit in H-mode, Euclidean unit in Z-mode
  double residual = 0.0;  // ||Hx^{m-1} - value * x^{[m-1]}||_2 or the Z analogue
  int iterations = 0;
  bool converged = false;
};

enum class BoundName { h_bound_ma, z_bound_ma, h_bound_cor35, z_bound_cor35 };

struct BoundReport {
  BoundName bound_name;
  double bound_value = 0.0;
  double observed = 0.0;
  double margin = 0.0;  // bound_value - observed
  bool holds = false;   // margin >= -1e-9 * |bound_value|
};

struct BoundCheck {
  std::vector<BoundReport> reports;
  std::string note;  // set when a branch is skipped (odd m)
};

struct PowerOptions {
  double tol = 1e-10;
  int max_iter = 10000;
};

struct ZOptions {
  double tol = 1e-10;
  int max_iter = 10000;
  int restarts = 8;
  std::uint64_t seed = kDefaultSeed;
};

// Per-iteration Collatz-Wielandt sandwich, exposed for property tests.
struct PowerTrace {
  std::vector<double> lower;
  std::vector<double> upper;
};

// Dominant H-eigenvalue by ratio-sandwich power iteration from the
// all-ones start. Positive regime (a > 0) only; the positive eigenvector
// makes the component ratios a two-sided estimate.
EigenEstimate h_spectral_radius(const TensorSpec& spec, const PowerOptions& opts = {},
                                PowerTrace* trace = nullptr);

// Extreme Z-eigenvalue by shifted power iteration on the Euclidean sphere,
// ascent and descent per restart; returns the largest |mu| found.
EigenEstimate z_spectral_radius(const TensorSpec& spec, const ZOptions& opts = {});

// Full symmetric eigendecomposition of the m=2 matrix 1/(i+j-2+a) by
// cyclic Jacobi rotations; the ground-truth oracle for both eigenvalue
// modes at m=2. Sorted by descending value.
std::vector<EigenEstimate> dense_matrix_eigen(const TensorSpec& spec);

// |lambda| <= M(a) n^{m-1} (m even), plus the a > 0 corollary value.
BoundCheck check_h_bound(const TensorSpec& spec, const EigenEstimate& estimate);

// |mu| <= M(a) n^{m/2}, plus the a > 0 corollary value.
BoundCheck check_z_bound(const TensorSpec& spec, const EigenEstimate& estimate);

BoundReport make_bound_report(BoundName name, double bound_value, double observed);

const char* to_string(BoundName name);

}  // namespace ght
