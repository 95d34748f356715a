#include "derkit/module.hpp"

#include <algorithm>
#include <limits>

namespace derkit {

FreeModule free_module(RingPtr ring, std::vector<long long> gen_deg) {
  return FreeModule{std::move(ring), std::move(gen_deg)};
}

FreeModule free_module_rank1(RingPtr ring, long long shift) {
  return FreeModule{std::move(ring), {shift}};
}

std::shared_ptr<const ModuleOrder> ModuleOrder::pot(RingPtr ring) {
  auto o = std::make_shared<ModuleOrder>();
  o->ring_ = std::move(ring);
  return o;
}

std::shared_ptr<const ModuleOrder> ModuleOrder::schreyer(
    std::shared_ptr<const ModuleOrder> parent, std::vector<MTerm> parent_leading) {
  auto o = std::make_shared<ModuleOrder>();
  o->parent_ = std::move(parent);
  o->parent_lt_ = std::move(parent_leading);
  return o;
}

int ModuleOrder::compare(int c1, const Monomial& m1, int c2, const Monomial& m2) const {
  if (parent_) {
    const MTerm& l1 = parent_lt_[c1];
    const MTerm& l2 = parent_lt_[c2];
    int c = parent_->compare(l1.comp, Ring::mul(m1, l1.mono), l2.comp, Ring::mul(m2, l2.mono));
    if (c != 0) return c;
    if (c1 != c2) return c1 < c2 ? 1 : -1;
    return 0;
  }
  if (c1 != c2) return c1 < c2 ? 1 : -1;
  return ring_->compare(m1, m2);
}

Vec vec_zero() { return Vec{}; }

Vec vec_basis(const FreeModule& F, int comp) {
  return Vec{{MTerm{comp, F.ring->one(), F.ring->field().one()}}};
}

Vec vec_term(int comp, Monomial m, Coeff c) { return Vec{{MTerm{comp, std::move(m), std::move(c)}}}; }

Vec vec_canonical(const Ring& R, const ModuleOrder& ord, std::vector<MTerm> terms) {
  std::sort(terms.begin(), terms.end(), [&](const MTerm& a, const MTerm& b) {
    return ord.compare(a.comp, a.mono, b.comp, b.mono) > 0;
  });
  std::vector<MTerm> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().comp == t.comp && out.back().mono == t.mono) {
      out.back().coeff = R.field().add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [&](const MTerm& t) { return R.field().is_zero(t.coeff); }),
            out.end());
  return Vec{std::move(out)};
}

Vec vec_add(const Ring& R, const ModuleOrder& ord, const Vec& a, const Vec& b) {
  std::vector<MTerm> out;
  out.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    int c = ord.compare(a.terms[i].comp, a.terms[i].mono, b.terms[j].comp, b.terms[j].mono);
    if (c > 0) {
      out.push_back(a.terms[i++]);
    } else if (c < 0) {
      out.push_back(b.terms[j++]);
    } else {
      Coeff s = R.field().add(a.terms[i].coeff, b.terms[j].coeff);
      if (!R.field().is_zero(s)) out.push_back(MTerm{a.terms[i].comp, a.terms[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) out.push_back(b.terms[j]);
  return Vec{std::move(out)};
}

Vec vec_neg(const Ring& R, const Vec& a) {
  Vec out = a;
  for (auto& t : out.terms) t.coeff = R.field().neg(t.coeff);
  return out;
}

Vec vec_scale(const Ring& R, const Vec& a, const Coeff& c) {
  if (R.field().is_zero(c)) return vec_zero();
  Vec out = a;
  for (auto& t : out.terms) t.coeff = R.field().mul(t.coeff, c);
  return out;
}

Vec vec_axpy(const Ring& R, const ModuleOrder& ord, const Vec& a, const Coeff& c,
             const Monomial& m, const Vec& b) {
  if (R.field().is_zero(c)) return a;
  std::vector<MTerm> out;
  out.reserve(a.terms.size() + b.terms.size());
  size_t i = 0, j = 0;
  while (i < a.terms.size() && j < b.terms.size()) {
    Monomial bm = Ring::mul(b.terms[j].mono, m);
    int cmp = ord.compare(a.terms[i].comp, a.terms[i].mono, b.terms[j].comp, bm);
    if (cmp > 0) {
      out.push_back(a.terms[i++]);
    } else if (cmp < 0) {
      out.push_back(MTerm{b.terms[j].comp, std::move(bm), R.field().mul(c, b.terms[j].coeff)});
      ++j;
    } else {
      Coeff s = R.field().add(a.terms[i].coeff, R.field().mul(c, b.terms[j].coeff));
      if (!R.field().is_zero(s)) out.push_back(MTerm{a.terms[i].comp, a.terms[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.terms.size(); ++i) out.push_back(a.terms[i]);
  for (; j < b.terms.size(); ++j) {
    out.push_back(MTerm{b.terms[j].comp, Ring::mul(b.terms[j].mono, m),
                        R.field().mul(c, b.terms[j].coeff)});
  }
  return Vec{std::move(out)};
}

Vec vec_poly_mul(const Ring& R, const ModuleOrder& ord, const Polynomial& p, const Vec& b) {
  Vec acc = vec_zero();
  for (const auto& t : p.terms()) acc = vec_axpy(R, ord, acc, t.coeff, t.mono, b);
  return acc;
}

bool vec_eq(const Ring& R, const Vec& a, const Vec& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i) {
    if (a.terms[i].comp != b.terms[i].comp) return false;
    if (!(a.terms[i].mono == b.terms[i].mono)) return false;
    if (!R.field().eq(a.terms[i].coeff, b.terms[i].coeff)) return false;
  }
  return true;
}

long long vec_degree(const FreeModule& F, const Vec& v) {
  long long d = std::numeric_limits<long long>::min();
  for (const auto& t : v.terms) d = std::max(d, t.mono.deg + F.gen_deg[t.comp]);
  return d;
}

bool vec_homogeneous(const FreeModule& F, const Vec& v) {
  if (v.is_zero()) return true;
  long long d = v.terms.front().mono.deg + F.gen_deg[v.terms.front().comp];
  for (const auto& t : v.terms)
    if (t.mono.deg + F.gen_deg[t.comp] != d) return false;
  return true;
}

std::vector<Polynomial> vec_components(const FreeModule& F, const Vec& v) {
  std::vector<std::vector<Term>> parts(F.rank());
  for (const auto& t : v.terms) parts[t.comp].push_back(Term{t.mono, t.coeff});
  std::vector<Polynomial> out;
  out.reserve(F.rank());
  for (auto& p : parts) out.push_back(Polynomial::from_terms(F.ring, std::move(p)));
  return out;
}

Polynomial vec_component(const FreeModule& F, const Vec& v, int comp) {
  std::vector<Term> part;
  for (const auto& t : v.terms)
    if (t.comp == comp) part.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(F.ring, std::move(part));
}

Vec vec_from_components(const FreeModule& F, const ModuleOrder& ord,
                        const std::vector<Polynomial>& comps) {
  std::vector<MTerm> terms;
  for (int c = 0; c < (int)comps.size(); ++c) {
    for (const auto& t : comps[c].terms()) terms.push_back(MTerm{c, t.mono, t.coeff});
  }
  return vec_canonical(*F.ring, ord, std::move(terms));
}

Vec vec_from_poly(const FreeModule& F, const ModuleOrder& ord, const Polynomial& p, int comp) {
  std::vector<MTerm> terms;
  for (const auto& t : p.terms()) terms.push_back(MTerm{comp, t.mono, t.coeff});
  return vec_canonical(*F.ring, ord, std::move(terms));
}

Polynomial poly_from_vec(const FreeModule& F, const Vec& v) {
  std::vector<Term> terms;
  for (const auto& t : v.terms) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(F.ring, std::move(terms));
}

std::string vec_str(const FreeModule& F, const Vec& v) {
  if (v.is_zero()) return "0";
  std::vector<Polynomial> comps = vec_components(F, v);
  std::string s;
  for (int c = 0; c < (int)comps.size(); ++c) {
    if (comps[c].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + comps[c].str() + ")*e" + std::to_string(c);
  }
  return s;
}

}  // namespace derkit
