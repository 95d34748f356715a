#include "derkit/scalar.hpp"

namespace derkit {

long long mod_pow(long long base, long long exp, long long p) {
  long long r = 1 % p;
  base %= p;
  if (base < 0) base += p;
  while (exp > 0) {
    if (exp & 1) r = (__int128)r * base % p;
    base = (__int128)base * base % p;
    exp >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return mod_pow(a, p - 2, p);
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  for (long long q : {2LL, 3LL, 5LL, 7LL}) {
    if (p == q) return true;
    if (p % q == 0) return false;
  }
  for (long long d = 11; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

Field Field::prime(long long p) {
  if (!is_prime_ll(p)) throw std::invalid_argument("field characteristic must be prime");
  return Field(FieldKind::PrimeField, p);
}

Field Field::rationals() { return Field(FieldKind::Rationals, 0); }

Coeff Field::zero() const {
  return kind_ == FieldKind::PrimeField ? Coeff(0LL) : Coeff(mpq_class(0));
}

Coeff Field::one() const {
  return kind_ == FieldKind::PrimeField ? Coeff(1LL) : Coeff(mpq_class(1));
}

Coeff Field::from_int(long long v) const {
  if (kind_ == FieldKind::PrimeField) {
    long long r = v % p_;
    if (r < 0) r += p_;
    return Coeff(r);
  }
  return Coeff(mpq_class((long)v));
}

Coeff Field::from_fraction(long long num, long long den) const {
  if (den == 0) throw std::domain_error("zero denominator");
  if (kind_ == FieldKind::PrimeField) {
    long long d = den % p_;
    if (d < 0) d += p_;
    return mul(from_int(num), Coeff(mod_inv(d, p_)));
  }
  mpq_class q((long)num, (long)den);
  q.canonicalize();
  return Coeff(q);
}

Coeff Field::add(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::PrimeField) {
    long long r = a.fp() + b.fp();
    if (r >= p_) r -= p_;
    return Coeff(r);
  }
  return Coeff(mpq_class(a.rat() + b.rat()));
}

Coeff Field::sub(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::PrimeField) {
    long long r = a.fp() - b.fp();
    if (r < 0) r += p_;
    return Coeff(r);
  }
  return Coeff(mpq_class(a.rat() - b.rat()));
}

Coeff Field::mul(const Coeff& a, const Coeff& b) const {
  if (kind_ == FieldKind::PrimeField) return Coeff((long long)((__int128)a.fp() * b.fp() % p_));
  return Coeff(mpq_class(a.rat() * b.rat()));
}

Coeff Field::neg(const Coeff& a) const {
  if (kind_ == FieldKind::PrimeField) return Coeff(a.fp() == 0 ? 0 : p_ - a.fp());
  return Coeff(mpq_class(-a.rat()));
}

Coeff Field::inv(const Coeff& a) const {
  if (kind_ == FieldKind::PrimeField) return Coeff(mod_inv(a.fp(), p_));
  if (a.rat() == 0) throw std::domain_error("division by zero in Q");
  return Coeff(mpq_class(1 / a.rat()));
}

Coeff Field::div(const Coeff& a, const Coeff& b) const { return mul(a, inv(b)); }

bool Field::is_zero(const Coeff& a) const {
  return kind_ == FieldKind::PrimeField ? a.fp() == 0 : a.rat() == 0;
}

bool Field::is_one(const Coeff& a) const {
  return kind_ == FieldKind::PrimeField ? a.fp() == 1 : a.rat() == 1;
}

bool Field::eq(const Coeff& a, const Coeff& b) const {
  return kind_ == FieldKind::PrimeField ? a.fp() == b.fp() : a.rat() == b.rat();
}

bool Field::divides_char(long long c) const {
  if (kind_ == FieldKind::Rationals) return false;
  return c % p_ == 0;
}

std::string Field::to_string(const Coeff& a) const {
  if (kind_ == FieldKind::PrimeField) {
    // print balanced residues so small negative integers stay readable
    long long v = a.fp();
    if (v > p_ / 2) v -= p_;
    return std::to_string(v);
  }
  return a.rat().get_str();
}

}  // namespace derkit
