#include "ght/convolution.hpp"

#include <cmath>
#include <complex>
#include <utility>

#include "ght/summation.hpp"

namespace ght {

namespace {

// The transform runs in long double so that the per-fold rounding stays
// well under the 1e-11 budget even for dense degree-100 products.
using Complex = std::complex<long double>;

constexpr long double kPi = 3.141592653589793238462643383279502884L;

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

void fft_in_place(std::vector<Complex>& data, bool invert) {
  const std::size_t n = data.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(data[i], data[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    long double angle = 2.0L * kPi / static_cast<long double>(len) * (invert ? -1.0L : 1.0L);
    Complex wlen(std::cos(angle), std::sin(angle));
    for (std::size_t base = 0; base < n; base += len) {
      Complex w(1.0L, 0.0L);
      for (std::size_t k = 0; k < len / 2; ++k) {
        Complex even = data[base + k];
        Complex odd = data[base + k + len / 2] * w;
        data[base + k] = even + odd;
        data[base + k + len / 2] = even - odd;
        w *= wlen;
      }
    }
  }
  if (invert) {
    for (Complex& z : data) z /= static_cast<long double>(n);
  }
}

Complex pow_integer(Complex base, int exponent) {
  Complex result(1.0L, 0.0L);
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// Coefficients of p(t)^folds through one forward transform, a pointwise
// power, and one inverse transform; padding to a power of two at least the
// product length makes the cyclic convolution linear.
std::vector<double> transform_power(const std::vector<double>& x, int folds,
                                    std::size_t product_len) {
  std::vector<Complex> data(next_pow2(product_len));
  for (std::size_t i = 0; i < x.size(); ++i) data[i] = Complex(x[i], 0.0L);
  fft_in_place(data, false);
  for (Complex& z : data) z = pow_integer(z, folds);
  fft_in_place(data, true);
  std::vector<double> out(product_len);
  for (std::size_t i = 0; i < product_len; ++i) {
    out[i] = static_cast<double>(data[i].real());
  }
  return out;
}

}  // namespace

std::vector<double> convolve_direct(const std::vector<double>& a,
                                    const std::vector<double>& b) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t k = 0; k < out.size(); ++k) {
    std::size_t lo = k >= b.size() - 1 ? k - (b.size() - 1) : 0;
    std::size_t hi = std::min(k, a.size() - 1);
    KahanSum acc;
    for (std::size_t i = lo; i <= hi; ++i) acc.add(a[i] * b[k - i]);
    out[k] = acc.value();
  }
  return out;
}

ConvolutionProfile self_convolve(const DenseVector& x, int folds, ConvolutionPath path) {
  if (folds < 1) throw InvalidParameter("self-convolution needs at least one fold");
  if (x.size() == 0) throw InvalidParameter("self-convolution needs a nonempty vector");
  if (folds == 1) return {x.coords};
  std::size_t product_len = static_cast<std::size_t>(folds) * (x.size() - 1) + 1;
  if (path == ConvolutionPath::automatic) {
    path = product_len >= kConvolutionCrossover ? ConvolutionPath::transform
                                                : ConvolutionPath::direct;
  }
  if (path == ConvolutionPath::transform) {
    return {transform_power(x.coords, folds, product_len)};
  }
  std::vector<double> weights = x.coords;
  for (int fold = 1; fold < folds; ++fold) {
    weights = convolve_direct(weights, x.coords);
  }
  return {std::move(weights)};
}

}  // namespace ght
