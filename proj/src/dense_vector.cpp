#include "ght/dense_vector.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ght/summation.hpp"

namespace ght {

namespace {

void check_coords(const std::vector<double>& coords) {
  if (coords.empty()) {
    throw InvalidParameter("vector needs at least one coordinate");
  }
  for (double v : coords) {
    if (!std::isfinite(v)) {
      throw InvalidParameter("vector coordinates must be finite");
    }
  }
}

}  // namespace

DenseVector::DenseVector(std::vector<double> values) : coords(std::move(values)) {
  check_coords(coords);
}

DenseVector::DenseVector(std::initializer_list<double> values)
    : DenseVector(std::vector<double>(values)) {}

double DenseVector::norm1() const {
  KahanSum acc;
  for (double v : coords) acc.add(std::abs(v));
  return acc.value();
}

double DenseVector::norm2() const {
  KahanSum acc;
  for (double v : coords) acc.add(v * v);
  return std::sqrt(acc.value());
}

double DenseVector::norm_inf() const {
  double best = 0.0;
  for (double v : coords) best = std::max(best, std::abs(v));
  return best;
}

double DenseVector::norm_p(double p) const {
  if (!(p >= 1.0)) {
    std::ostringstream msg;
    msg << "norm exponent must be at least 1, got " << p;
    throw InvalidParameter(msg.str());
  }
  KahanSum acc;
  for (double v : coords) acc.add(std::pow(std::abs(v), p));
  return std::pow(acc.value(), 1.0 / p);
}

bool DenseVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](double v) { return v == 0.0; });
}

double dot(const DenseVector& a, const DenseVector& b) {
  if (a.size() != b.size()) {
    std::ostringstream msg;
    msg << "dot of lengths " << a.size() << " and " << b.size();
    throw ShapeError(msg.str());
  }
  KahanSum acc;
  for (std::size_t i = 0; i < a.size(); ++i) acc.add(a[i] * b[i]);
  return acc.value();
}

}  // namespace ght
