#include "derkit/polynomial.hpp"

#include <algorithm>

namespace derkit {

Polynomial Polynomial::constant(RingPtr ring, const Coeff& c) {
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  Monomial one = ring->one();
  return Polynomial(ring, {Term{one, c}});
}

Polynomial Polynomial::from_int(RingPtr ring, long long v) {
  return constant(ring, ring->field().from_int(v));
}

Polynomial Polynomial::variable(RingPtr ring, int i) {
  Monomial m = ring->var_power(i, 1);
  return Polynomial(ring, {Term{std::move(m), ring->field().one()}});
}

Polynomial Polynomial::term(RingPtr ring, Monomial m, Coeff c) {
  if (ring->field().is_zero(c)) return zero(std::move(ring));
  return Polynomial(ring, {Term{std::move(m), std::move(c)}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const Ring& R = *ring;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return R.compare(a.mono, b.mono) > 0; });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = R.field().add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const Term& t) { return R.field().is_zero(t.coeff); }),
            out.end());
  return Polynomial(std::move(ring), std::move(out));
}

long long Polynomial::total_degree() const {
  long long d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long long d = terms_.front().mono.deg;
  for (const auto& t : terms_)
    if (t.mono.deg != d) return false;
  return true;
}

std::optional<long long> Polynomial::homogeneous_degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.front().mono.deg;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  const Ring& R = *ring_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = R.compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff s = R.field().add(terms_[i].coeff, o.terms_[j].coeff);
      if (!R.field().is_zero(s)) out.push_back(Term{terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  const Ring& R = *ring_;
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{Ring::mul(a.mono, b.mono), R.field().mul(a.coeff, b.coeff)});
  return from_terms(ring_, std::move(prod));
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  const Field& F = ring_->field();
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (!(terms_[i].mono == o.terms_[i].mono)) return false;
    if (!F.eq(terms_[i].coeff, o.terms_[i].coeff)) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Coeff& c) const {
  if (ring_->field().is_zero(c)) return zero(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, c);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::mono_mul(const Monomial& m, const Coeff& c) const {
  if (ring_->field().is_zero(c)) return zero(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_)
    out.push_back(Term{Ring::mul(t.mono, m), ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lc()));
}

Polynomial Polynomial::derivative(int var) const {
  const Ring& R = *ring_;
  std::vector<Term> out;
  for (const auto& t : terms_) {
    int e = t.mono.exp[var];
    if (e == 0) continue;
    Coeff c = R.field().mul(t.coeff, R.field().from_int(e));
    if (R.field().is_zero(c)) continue;
    Monomial m = t.mono;
    m.exp[var] -= 1;
    m.deg -= R.weight(var);
    out.push_back(Term{std::move(m), std::move(c)});
  }
  // term order is preserved by removing one fixed variable? Not in general;
  // re-sort to stay canonical.
  return from_terms(ring_, std::move(out));
}

Coeff Polynomial::evaluate(const std::vector<Coeff>& point) const {
  const Field& F = ring_->field();
  Coeff acc = F.zero();
  for (const auto& t : terms_) {
    Coeff v = t.coeff;
    for (int i = 0; i < ring_->nvars(); ++i) {
      for (int e = 0; e < t.mono.exp[i]; ++e) v = F.mul(v, point[i]);
    }
    acc = F.add(acc, v);
  }
  return acc;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
  if (images.empty()) throw std::invalid_argument("substitute: no images");
  RingPtr target = images.front().ring();
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : terms_) {
    Polynomial v = Polynomial::constant(target, t.coeff);
    for (int i = 0; i < ring_->nvars(); ++i) {
      for (int e = 0; e < t.mono.exp[i]; ++e) v = v * images[i];
    }
    acc = acc + v;
  }
  return acc;
}

Polynomial Polynomial::map_vars(const RingPtr& target, const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<int> e(target->nvars(), 0);
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (var_map[i] < 0) throw std::invalid_argument("map_vars: variable not in target");
      e[var_map[i]] += t.mono.exp[i];
    }
    out.push_back(Term{target->monomial(std::move(e)), t.coeff});
  }
  return from_terms(target, std::move(out));
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Ring& R = *ring_;
  const Field& F = R.field();
  std::string s;
  for (size_t i = 0; i < terms_.size(); ++i) {
    std::string c = F.to_string(terms_[i].coeff);
    bool neg = !c.empty() && c[0] == '-';
    std::string cabs = neg ? c.substr(1) : c;
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    bool mono_one = terms_[i].mono.is_one();
    if (cabs == "1" && !mono_one) {
      s += R.monomial_string(terms_[i].mono);
    } else if (mono_one) {
      s += cabs;
    } else {
      s += cabs + "*" + R.monomial_string(terms_[i].mono);
    }
  }
  return s;
}

namespace {

struct Parser {
  const std::string& text;
  size_t pos = 0;
  const RingPtr& ring;

  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }
  bool eat(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && isdigit((unsigned char)text[pos])) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoll(text.substr(start, pos - start));
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && (isalnum((unsigned char)text[pos]) || text[pos] == '_')) ++pos;
    if (pos == start || isdigit((unsigned char)text[start])) fail("expected variable name");
    return text.substr(start, pos - start);
  }

  // term := coeff? ('*'? var ('^' int)?)*
  Polynomial term() {
    const Field& F = ring->field();
    Coeff c = F.one();
    std::vector<int> exps(ring->nvars(), 0);
    bool saw_any = false;
    skip_ws();
    if (pos < text.size() && isdigit((unsigned char)text[pos])) {
      c = F.from_int(integer());
      saw_any = true;
    }
    while (true) {
      skip_ws();
      bool star = eat('*');
      skip_ws();
      if (pos >= text.size() || !(isalpha((unsigned char)text[pos]) || text[pos] == '_')) {
        if (star) fail("dangling '*'");
        break;
      }
      std::string name = identifier();
      int idx = ring->var_index(name);
      if (idx < 0) fail("unknown variable '" + name + "'");
      long long e = 1;
      if (eat('^')) e = integer();
      if (e < 0) fail("negative exponent");
      exps[idx] += (int)e;
      saw_any = true;
    }
    if (!saw_any) fail("expected term");
    return Polynomial::term(ring, ring->monomial(std::move(exps)), std::move(c));
  }

  Polynomial expression() {
    Polynomial acc = Polynomial::zero(ring);
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial t = term();
    acc = neg ? acc - t : acc + t;
    while (true) {
      skip_ws();
      if (pos >= text.size()) break;
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        fail("expected '+' or '-'");
      }
    }
    return acc;
  }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  Parser p{text, 0, ring};
  Polynomial r = p.expression();
  return r;
}

}  // namespace derkit
