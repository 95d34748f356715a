#pragma once

#include "derkit/groebner.hpp"

namespace derkit {

/// Hilbert series q(t)/(1-t)^n of a graded quotient of a standard graded
/// polynomial ring, with the fully reduced form q~(t)/(1-t)^dim alongside.
/// e0 = q~(1) is the multiplicity (the length when dim = 0) and e1 = q~'(1)
/// the next Hilbert coefficient.
struct HilbertSeries {
  std::vector<long long> num;
  int nvars = 0;
  std::vector<long long> reduced;
  int dim = 0;
  long long e0 = 0;
  long long e1 = 0;

  /// Value of the Hilbert polynomial at integer z (0 when dim = 0).
  long long polynomial_at(long long z) const;
  /// Coefficients of the series in degrees 0..top.
  std::vector<long long> expand(int top) const;
};

/// Numerator of the Hilbert series of S/(monomial ideal), by the pivot
/// recursion on a most-shared variable.
std::vector<long long> hilbert_numerator(const Ring& ring, std::vector<Monomial> gens);

HilbertSeries hilbert_series_from_lt(const Ring& ring, std::vector<Monomial> lt_gens);
/// Hilbert series of S/I (computes a Gröbner basis for the initial ideal).
HilbertSeries hilbert_series_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens);
HilbertSeries hilbert_series_quotient(const IdealGB& gb);

/// dim of the affine cone S/I and its multiplicity.
struct DimDegree {
  int dim;
  long long degree;
};
DimDegree ideal_dim_degree(const RingPtr& ring, const std::vector<Polynomial>& gens);

/// Series coefficients of num(t)/(1-t)^n in degrees 0..top (n >= 0).
std::vector<long long> expand_series(const std::vector<long long>& num, int n, int top);

long long binom_ll(long long m, int k);

}  // namespace derkit
