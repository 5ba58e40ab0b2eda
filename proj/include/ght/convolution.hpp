#pragma once

#include <cstddef>
#include <vector>

#include "ght/dense_vector.hpp"

namespace ght {

// Coefficients of (sum_i x_i t^{i-1})^folds: weights[k] collects the
// products x_{i2}...x_{im} whose index total i2+...+im-(m-1) equals k.
struct ConvolutionProfile {
  std::vector<double> weights;

  std::size_t size() const { return weights.size(); }
  double operator[](std::size_t k) const { return weights[k]; }
};

enum class ConvolutionPath {
  automatic,  // direct below the crossover, transform above
  direct,
  transform,
};

// Product lengths at or above this go through the transform path.
inline constexpr std::size_t kConvolutionCrossover = 64;

// (folds)-fold self-convolution of x, i.e. the coefficient sequence of the
// polynomial power. folds == 1 returns the coordinates unchanged.
ConvolutionProfile self_convolve(const DenseVector& x, int folds,
                                 ConvolutionPath path = ConvolutionPath::automatic);

// Plain linear convolution, exposed for the transform path's unit tests.
std::vector<double> convolve_direct(const std::vector<double>& a,
                                    const std::vector<double>& b);

}  // namespace ght
