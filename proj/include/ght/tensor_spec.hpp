#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ght/errors.hpp"

namespace ght {

// Non-fatal numerical notes (near-singular denominators and the like)
// collected alongside results instead of aborting them.
using Warnings = std::vector<std::string>;

inline constexpr double kDefaultConditioningFloor = 1e-12;

// True iff `a` is an admissible shift for the doubly infinite index set:
// any real except the non-positive integers. The integer test is exact on
// the representable value; -1.9999999999 is legal.
// Throws InvalidParameter for NaN / infinity.
bool validate_shift(double a);

// Identifies one tensor of the 1/(i1+...+im - m + a) family. `dim` absent
// means the infinite-dimensional tensor.
struct TensorSpec {
  int order = 2;             // m >= 2
  std::optional<int> dim;    // n >= 1 when finite
  double shift = 1.0;        // a

  static TensorSpec finite(int m, int n, double a);
  static TensorSpec infinite(int m, double a);

  bool is_finite() const { return dim.has_value(); }
  int m() const { return order; }
  int n() const { return *dim; }
  double a() const { return shift; }

  // Largest index total minus m, i.e. the denominator offset range is
  // [0, max_offset()] for a finite spec.
  long long max_offset() const { return static_cast<long long>(order) * (*dim - 1); }
};

// Re-checks the TensorSpec invariants on an aggregate-built value; the
// factories call this, direct brace construction may not have.
void validate_spec(const TensorSpec& spec);

// One position (i1,...,im), 1-based as in the entry formula.
struct MultiIndex {
  std::vector<int> indices;

  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> idx) : indices(idx) {}
  explicit MultiIndex(std::vector<int> idx) : indices(std::move(idx)) {}

  std::size_t size() const { return indices.size(); }
  long long sum() const;
};

// Entry value 1/(i1+...+im - m + a). Validates the index against the spec.
// A denominator below `conditioning_floor` in magnitude appends a note to
// `warnings` (when given); the value is still returned.
double entry(const TensorSpec& spec, const MultiIndex& idx,
             Warnings* warnings = nullptr,
             double conditioning_floor = kDefaultConditioningFloor);

// Smallest |s + a| over integer offsets s in [0, max_offset]; used for the
// conditioning check without scanning every index.
double min_denominator_magnitude(double a, long long max_offset);

}  // namespace ght
