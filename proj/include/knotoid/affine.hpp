#pragma once

// Affine index polynomial of a knotoid (or knot) diagram.
//
// Convention. Arc e_0 gets label 0. Passing a visit changes the label by +1
// when the other strand crosses from right to left, -1 otherwise; with the
// codec's chirality this is +1 at the first visit and -1 at the second for a
// positive crossing, the reverse for a negative one. For a crossing with
// incoming labels a (under) and b (over), writhe sign eps and weight
// W = a - b - eps, the polynomial is P(t) = sum eps * (t^W - 1).

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "knotoid/code.hpp"

namespace knotoid {

class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;

  void add(int exponent, long long coefficient);
  long long coefficient(int exponent) const;
  const std::map<int, long long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// Terms ordered by |exponent|, then exponent: "-2 + 1*t^-1 + 1*t^1".
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, long long> terms_;  // no zero coefficients
};

struct CrossingData {
  int a = 0;    // incoming label at the under visit
  int b = 0;    // incoming label at the over visit
  int eps = 0;  // writhe sign
  int weight = 0;
};

/// Labels per arc.
std::vector<int> flat_labels(const Diagram& d);

/// Per crossing (label - 1). Requires over/under data.
std::vector<CrossingData> crossing_data(const Diagram& d);

/// Writhe sign: the chirality if the first visit is over, negated otherwise.
int writhe_sign(const Diagram& d, int crossing);

LaurentPolynomial affine_polynomial(const Diagram& d);

/// Largest exponent with a nonzero coefficient, or 0 if there is none above 0.
int d_max(const LaurentPolynomial& p);

struct AffineBounds {
  int height_lb = 0;
  int crossing_lb = 0;
};

AffineBounds bounds(const Diagram& d);

}  // namespace knotoid
