#pragma once

#include <memory>
#include <string>
#include <vector>

#include "derkit/scalar.hpp"

namespace derkit {

/// Exponent vector with cached weighted total degree. The ambient ring fixes
/// the number of variables and their weights; a Monomial is only meaningful
/// relative to that ring.
struct Monomial {
  std::vector<int> exp;
  long long deg = 0;  // weighted total degree, cached

  bool is_one() const {
    for (int e : exp)
      if (e != 0) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return exp == o.exp; }
};

enum class OrderKind {
  DegRevLex,  // weighted degree, ties broken reverse-lexicographically
  Elim,       // first `elim_block` variables dominate, degrevlex inside each block
};

/// Graded polynomial ring: variable names, positive weights, coefficient
/// field and monomial order. Shared immutably via RingPtr.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> vars, std::vector<int> weights,
       OrderKind order = OrderKind::DegRevLex, int elim_block = 0);

  const Field& field() const { return field_; }
  int nvars() const { return (int)vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var_name(int i) const { return vars_[i]; }
  int weight(int i) const { return weights_[i]; }
  const std::vector<int>& weights() const { return weights_; }
  bool standard_graded() const;
  OrderKind order() const { return order_; }
  int elim_block() const { return elim_block_; }

  /// -1 if unknown.
  int var_index(const std::string& name) const;

  Monomial one() const;
  Monomial monomial(std::vector<int> exps) const;
  Monomial var_power(int i, int e) const;
  long long degree(const Monomial& m) const;

  /// Order comparison: negative, zero, positive as a <, =, > b.
  int compare(const Monomial& a, const Monomial& b) const;

  static Monomial mul(const Monomial& a, const Monomial& b);
  /// a / b; caller must know b | a.
  static Monomial div(const Monomial& a, const Monomial& b);
  static bool divides(const Monomial& b, const Monomial& a);
  static bool coprime(const Monomial& a, const Monomial& b);
  Monomial lcm(const Monomial& a, const Monomial& b) const;

  std::string monomial_string(const Monomial& m) const;

 private:
  int cmp_degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) const;

  Field field_;
  std::vector<std::string> vars_;
  std::vector<int> weights_;
  OrderKind order_;
  int elim_block_;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(Field field, std::vector<std::string> vars,
                  std::vector<int> weights = {}, OrderKind order = OrderKind::DegRevLex,
                  int elim_block = 0);

/// Standard graded ring k[x0..x{n-1}] with the given prefix for names.
RingPtr make_ring_n(Field field, int n, const std::string& prefix = "x");

}  // namespace derkit
