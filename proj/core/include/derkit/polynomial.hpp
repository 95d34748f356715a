#pragma once

#include <optional>
#include <string>
#include <vector>

#include "derkit/ring.hpp"

namespace derkit {

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse multivariate polynomial. Terms are kept strictly descending in the
/// ring's monomial order with no zero coefficients, so equality of canonical
/// forms is term-by-term equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  Polynomial(RingPtr ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Coeff& c);
  static Polynomial from_int(RingPtr ring, long long v);
  static Polynomial variable(RingPtr ring, int i);
  static Polynomial term(RingPtr ring, Monomial m, Coeff c);
  /// Sorts, merges and drops zeros.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  const Term& leading() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().mono; }
  const Coeff& lc() const { return terms_.front().coeff; }

  /// Weighted degree of the leading term (= total degree when homogeneous).
  long long degree() const { return terms_.empty() ? -1 : terms_.front().mono.deg; }
  /// Max weighted degree over all terms.
  long long total_degree() const;
  bool is_homogeneous() const;
  /// Degree if homogeneous and nonzero.
  std::optional<long long> homogeneous_degree() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial scaled(const Coeff& c) const;
  Polynomial mono_mul(const Monomial& m, const Coeff& c) const;
  Polynomial monic() const;
  Polynomial derivative(int var) const;

  Coeff evaluate(const std::vector<Coeff>& point) const;
  /// Substitute each variable by the given polynomial (same target ring).
  Polynomial substitute(const std::vector<Polynomial>& images) const;
  /// Reinterpret in `target`, variable i of this ring mapping to variable
  /// var_map[i] of the target.
  Polynomial map_vars(const RingPtr& target, const std::vector<int>& var_map) const;

  std::string str() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring);

}  // namespace derkit
