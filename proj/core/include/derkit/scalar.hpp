#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace derkit {

enum class FieldKind { PrimeField, Rationals };

class Coeff;

/// Exact coefficient field: F_p for an odd prime p, or the rationals.
/// All arithmetic in the algebra core goes through a Field instance; there is
/// no floating point anywhere.
class Field {
 public:
  static Field prime(long long p);
  static Field rationals();

  FieldKind kind() const { return kind_; }
  long long characteristic() const { return kind_ == FieldKind::PrimeField ? p_ : 0; }

  Coeff zero() const;
  Coeff one() const;
  Coeff from_int(long long v) const;
  Coeff from_fraction(long long num, long long den) const;

  Coeff add(const Coeff& a, const Coeff& b) const;
  Coeff sub(const Coeff& a, const Coeff& b) const;
  Coeff mul(const Coeff& a, const Coeff& b) const;
  Coeff neg(const Coeff& a) const;
  Coeff inv(const Coeff& a) const;
  Coeff div(const Coeff& a, const Coeff& b) const;

  bool is_zero(const Coeff& a) const;
  bool is_one(const Coeff& a) const;
  bool eq(const Coeff& a, const Coeff& b) const;

  /// Does `c`, viewed as an integer constant, divide into zero here?
  /// True exactly when char divides c.
  bool divides_char(long long c) const;

  std::string to_string(const Coeff& a) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }

 private:
  Field(FieldKind kind, long long p) : kind_(kind), p_(p) {}
  FieldKind kind_;
  long long p_;
};

/// One field element. Prime-field values are canonical residues in [0, p);
/// rationals are exact GMP rationals in lowest terms.
class Coeff {
 public:
  Coeff() : v_(0LL) {}
  explicit Coeff(long long residue) : v_(residue) {}
  explicit Coeff(mpq_class q) : v_(std::move(q)) {}

  bool is_fp() const { return std::holds_alternative<long long>(v_); }
  long long fp() const { return std::get<long long>(v_); }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

 private:
  std::variant<long long, mpq_class> v_;
};

long long mod_pow(long long base, long long exp, long long p);
long long mod_inv(long long a, long long p);
bool is_prime_ll(long long p);

}  // namespace derkit
