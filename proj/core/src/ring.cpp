#include "derkit/ring.hpp"

#include <algorithm>

namespace derkit {

Ring::Ring(Field field, std::vector<std::string> vars, std::vector<int> weights,
           OrderKind order, int elim_block)
    : field_(field),
      vars_(std::move(vars)),
      weights_(std::move(weights)),
      order_(order),
      elim_block_(elim_block) {
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size()) throw std::invalid_argument("weights/vars mismatch");
  for (int w : weights_)
    if (w < 1) throw std::invalid_argument("variable weights must be >= 1");
  if (order_ == OrderKind::Elim && (elim_block_ < 1 || elim_block_ >= nvars()))
    throw std::invalid_argument("elimination block out of range");
}

bool Ring::standard_graded() const {
  return std::all_of(weights_.begin(), weights_.end(), [](int w) { return w == 1; });
}

int Ring::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

Monomial Ring::one() const { return Monomial{std::vector<int>(nvars(), 0), 0}; }

Monomial Ring::monomial(std::vector<int> exps) const {
  if ((int)exps.size() != nvars()) throw std::invalid_argument("exponent vector length");
  Monomial m{std::move(exps), 0};
  m.deg = degree(m);
  return m;
}

Monomial Ring::var_power(int i, int e) const {
  Monomial m = one();
  m.exp[i] = e;
  m.deg = (long long)weights_[i] * e;
  return m;
}

long long Ring::degree(const Monomial& m) const {
  long long d = 0;
  for (int i = 0; i < nvars(); ++i) d += (long long)weights_[i] * m.exp[i];
  return d;
}

int Ring::cmp_degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) const {
  long long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += (long long)weights_[i] * a.exp[i];
    db += (long long)weights_[i] * b.exp[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // reverse lex: scan from the last variable; larger exponent means smaller
  for (int i = hi - 1; i >= lo; --i) {
    if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
  }
  return 0;
}

int Ring::compare(const Monomial& a, const Monomial& b) const {
  if (order_ == OrderKind::DegRevLex) return cmp_degrevlex(a, b, 0, nvars());
  int c = cmp_degrevlex(a, b, 0, elim_block_);
  if (c != 0) return c;
  return cmp_degrevlex(a, b, elim_block_, nvars());
}

Monomial Ring::mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] += b.exp[i];
  r.deg = a.deg + b.deg;
  return r;
}

Monomial Ring::div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) r.exp[i] -= b.exp[i];
  r.deg = a.deg - b.deg;
  return r;
}

bool Ring::divides(const Monomial& b, const Monomial& a) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (b.exp[i] > a.exp[i]) return false;
  return true;
}

Monomial Ring::lcm(const Monomial& a, const Monomial& b) const {
  Monomial r = a;
  for (size_t i = 0; i < r.exp.size(); ++i) {
    if (b.exp[i] > r.exp[i]) r.exp[i] = b.exp[i];
  }
  r.deg = degree(r);
  return r;
}

bool Ring::coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.exp.size(); ++i)
    if (a.exp[i] > 0 && b.exp[i] > 0) return false;
  return true;
}

std::string Ring::monomial_string(const Monomial& m) const {
  std::string s;
  for (int i = 0; i < nvars(); ++i) {
    if (m.exp[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars_[i];
    if (m.exp[i] > 1) s += "^" + std::to_string(m.exp[i]);
  }
  return s.empty() ? "1" : s;
}

RingPtr make_ring(Field field, std::vector<std::string> vars, std::vector<int> weights,
                  OrderKind order, int elim_block) {
  return std::make_shared<Ring>(field, std::move(vars), std::move(weights), order, elim_block);
}

RingPtr make_ring_n(Field field, int n, const std::string& prefix) {
  std::vector<std::string> vars;
  for (int i = 0; i < n; ++i) vars.push_back(prefix + std::to_string(i));
  return make_ring(field, std::move(vars));
}

}  // namespace derkit
