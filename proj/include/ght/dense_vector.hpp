#pragma once

#include <cstddef>
#include <vector>

#include "ght/errors.hpp"

namespace ght {

// Finite real coordinate vector. Entries must be finite; length >= 1.
struct DenseVector {
  std::vector<double> coords;

  DenseVector() = default;
  explicit DenseVector(std::vector<double> values);
  DenseVector(std::initializer_list<double> values);

  std::size_t size() const { return coords.size(); }
  double operator[](std::size_t i) const { return coords[i]; }
  double& operator[](std::size_t i) { return coords[i]; }

  double norm1() const;
  double norm2() const;
  double norm_inf() const;
  // (sum |x_i|^p)^(1/p); p >= 1.
  double norm_p(double p) const;

  bool is_zero() const;

  bool operator==(const DenseVector& other) const = default;
};

// Compensated dot product; the two vectors must have equal length.
double dot(const DenseVector& a, const DenseVector& b);

}  // namespace ght
