#include "derkit/presented.hpp"

#include <algorithm>

namespace derkit {

PresentedModule presented_from_matrix(RingPtr ring, std::vector<long long> gen_deg,
                                      std::vector<Vec> rel_cols, std::vector<Polynomial> over,
                                      bool add_over_multiples) {
  PresentedModule m;
  m.ring = std::move(ring);
  m.gen_deg = std::move(gen_deg);
  m.rels = std::move(rel_cols);
  m.over = std::move(over);
  if (add_over_multiples) {
    auto ord = ModuleOrder::pot(m.ring);
    FreeModule F = m.pres_free();
    for (const auto& g : m.over) {
      for (int k = 0; k < m.ngens(); ++k) {
        m.rels.push_back(vec_from_poly(F, *ord, g, k));
      }
    }
  }
  return m;
}

PresentedModule subquotient(const FreeModule& ambient, std::vector<Vec> u, std::vector<Vec> v,
                            std::vector<Polynomial> over) {
  const int q = (int)u.size();
  // syzygies of [u | v]; relations of the subquotient are the first q coords
  std::vector<Vec> all = u;
  for (auto& w : v) all.push_back(w);
  std::vector<Vec> syz = syzygy_generators(ambient, all);

  PresentedModule m;
  m.ring = ambient.ring;
  m.over = std::move(over);
  for (const auto& g : u) m.gen_deg.push_back(vec_degree(ambient, g));
  auto ord = ModuleOrder::pot(ambient.ring);
  for (const auto& s : syz) {
    std::vector<MTerm> first;
    for (const auto& t : s.terms)
      if (t.comp < q) first.push_back(t);
    Vec col = vec_canonical(*ambient.ring, *ord, std::move(first));
    if (!col.is_zero()) m.rels.push_back(std::move(col));
  }
  m.ambient = ambient;
  m.reps = std::move(u);
  return m;
}

namespace {

// component of a relation column at `row` (a polynomial)
Polynomial entry_at(const PresentedModule& m, const Vec& col, int row) {
  std::vector<Term> terms;
  for (const auto& t : col.terms)
    if (t.comp == row) terms.push_back(Term{t.mono, t.coeff});
  return Polynomial::from_terms(m.ring, std::move(terms));
}

}  // namespace

PresentedModule minimalize(const PresentedModule& input) {
  PresentedModule m = input;
  const Field& K = m.ring->field();
  auto ord = ModuleOrder::pot(m.ring);

  for (;;) {
    // find a relation with a degree-zero (unit) entry
    int pr = -1, pc = -1;
    Coeff unit = K.zero();
    for (int c = 0; c < (int)m.rels.size() && pr < 0; ++c) {
      for (const auto& t : m.rels[c].terms) {
        if (t.mono.is_one()) {
          pr = t.comp;
          pc = c;
          unit = t.coeff;
          break;
        }
      }
    }
    if (pr < 0) break;

    FreeModule F = m.pres_free();
    Vec pivot = m.rels[pc];
    Coeff inv = K.inv(unit);
    // clear row pr in every other column
    std::vector<Vec> next;
    next.reserve(m.rels.size() - 1);
    for (int c = 0; c < (int)m.rels.size(); ++c) {
      if (c == pc) continue;
      Polynomial a = entry_at(m, m.rels[c], pr);
      Vec col = m.rels[c];
      if (!a.is_zero()) {
        Polynomial factor = a.scaled(K.neg(inv));
        col = vec_add(*m.ring, *ord, col, vec_poly_mul(*m.ring, *ord, factor, pivot));
      }
      if (!col.is_zero()) next.push_back(std::move(col));
    }
    // delete generator pr: reindex components
    auto drop_row = [&](Vec& v) {
      std::vector<MTerm> out;
      for (auto& t : v.terms) {
        if (t.comp == pr) continue;  // cleared already
        MTerm nt = t;
        if (nt.comp > pr) nt.comp -= 1;
        out.push_back(std::move(nt));
      }
      v = vec_canonical(*m.ring, *ord, std::move(out));
    };
    for (auto& col : next) drop_row(col);
    m.rels = std::move(next);
    m.gen_deg.erase(m.gen_deg.begin() + pr);
    if (!m.reps.empty()) m.reps.erase(m.reps.begin() + pr);
  }

  // drop zero columns and duplicates of columns
  std::vector<Vec> cleaned;
  for (auto& col : m.rels) {
    if (col.is_zero()) continue;
    bool dup = false;
    for (const auto& prev : cleaned)
      if (vec_eq(*m.ring, prev, col)) {
        dup = true;
        break;
      }
    if (!dup) cleaned.push_back(std::move(col));
  }
  m.rels = std::move(cleaned);
  return m;
}

std::vector<long long> module_hf(const PresentedModule& m, long long lo, long long hi) {
  std::vector<long long> out(hi - lo + 1, 0);
  if (m.ngens() == 0) return out;
  FreeModule F = m.pres_free();
  ModuleGB gb = buchberger(F, m.rels);
  // componentwise leading-term staircases
  std::vector<std::vector<Monomial>> lt(m.ngens());
  for (const auto& g : gb.gb) lt[g.leading().comp].push_back(g.leading().mono);
  long long min_gd = *std::min_element(m.gen_deg.begin(), m.gen_deg.end());
  int top = (int)std::max<long long>(0, hi - min_gd);
  for (int j = 0; j < m.ngens(); ++j) {
    std::vector<long long> num = hilbert_numerator(*m.ring, lt[j]);
    std::vector<long long> coeffs = expand_series(num, m.ring->nvars(), top);
    for (long long d = lo; d <= hi; ++d) {
      long long k = d - m.gen_deg[j];
      if (k >= 0 && k < (long long)coeffs.size()) out[d - lo] += coeffs[k];
    }
  }
  return out;
}

std::vector<long long> minimal_gen_degrees(const PresentedModule& m) {
  PresentedModule mm = minimalize(m);
  std::vector<long long> d = mm.gen_deg;
  std::sort(d.begin(), d.end());
  return d;
}

std::optional<long long> module_indeg(const PresentedModule& m) {
  std::vector<long long> d = minimal_gen_degrees(m);
  if (d.empty()) return std::nullopt;
  return d.front();
}

bool module_is_zero(const PresentedModule& m) { return minimal_gen_degrees(m).empty(); }

std::vector<Vec> prune_redundant(const FreeModule& F, std::vector<Vec> gens) {
  auto ord = ModuleOrder::pot(F.ring);
  // ascending degree so later (heavier) elements are tested against lighter ones
  std::stable_sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
    return vec_degree(F, a) < vec_degree(F, b);
  });
  std::vector<Vec> kept;
  for (size_t k = 0; k < gens.size(); ++k) {
    if (gens[k].is_zero()) continue;
    std::vector<Vec> others = kept;
    for (size_t l = k + 1; l < gens.size(); ++l) others.push_back(gens[l]);
    if (others.empty()) {
      kept.push_back(std::move(gens[k]));
      continue;
    }
    ModuleGB gb = buchberger(F, others);
    if (!in_submodule(gb, gens[k])) kept.push_back(std::move(gens[k]));
  }
  return kept;
}

long long FreeResolution::regularity() const {
  long long r = std::numeric_limits<long long>::min();
  for (size_t i = 0; i < shifts.size(); ++i)
    for (long long d : shifts[i]) r = std::max(r, d - (long long)i);
  return r;
}

std::string FreeResolution::betti_string() const {
  std::string s;
  for (size_t i = 0; i < shifts.size(); ++i) {
    std::vector<long long> d = shifts[i];
    std::sort(d.begin(), d.end());
    s += "F" + std::to_string(i) + ":";
    for (long long x : d) s += " " + std::to_string(x);
    s += "\n";
  }
  return s;
}

FreeResolution free_resolution(const PresentedModule& m_in) {
  PresentedModule m = minimalize(m_in);
  FreeResolution res;
  res.ring = m.ring;
  res.shifts.push_back(m.gen_deg);
  if (m.ngens() == 0) return res;

  FreeModule F = m.pres_free();
  std::vector<Vec> cols = prune_redundant(F, m.rels);
  int guard = m.ring->nvars() + 3;
  while (!cols.empty()) {
    std::vector<long long> step_shifts;
    for (const auto& c : cols) step_shifts.push_back(vec_degree(F, c));
    res.steps.push_back(cols);
    res.shifts.push_back(step_shifts);
    if ((int)res.steps.size() > guard)
      throw std::logic_error("free resolution failed to terminate");
    std::vector<Vec> syz = syzygy_generators(F, cols);
    F = free_module(m.ring, step_shifts);
    cols = prune_redundant(F, std::move(syz));
  }
  return res;
}

FreeResolution free_resolution_quotient(const RingPtr& ring, const std::vector<Polynomial>& ideal) {
  FreeModule F = free_module_rank1(ring);
  auto ord = ModuleOrder::pot(ring);
  std::vector<Vec> cols;
  for (const auto& g : ideal)
    if (!g.is_zero()) cols.push_back(vec_from_poly(F, *ord, g));
  PresentedModule m;
  m.ring = ring;
  m.gen_deg = {0};
  m.rels = std::move(cols);
  return free_resolution(m);
}

bool resolution_is_valid(const FreeResolution& res) {
  const RingPtr& ring = res.ring;
  auto ord = ModuleOrder::pot(ring);
  // no unit entries (minimality)
  for (const auto& step : res.steps) {
    for (const auto& col : step) {
      for (const auto& t : col.terms) {
        if (t.mono.is_one()) return false;
      }
    }
  }
  // composition of consecutive maps is zero
  for (size_t i = 0; i + 1 < res.steps.size(); ++i) {
    FreeModule target = free_module(ring, res.shifts[i]);
    const auto& M1 = res.steps[i];      // F_{i+1} -> F_i
    const auto& M2 = res.steps[i + 1];  // F_{i+2} -> F_{i+1}
    for (const auto& col : M2) {
      Vec acc = vec_zero();
      for (const auto& t : col.terms) {
        acc = vec_axpy(*ring, *ord, acc, t.coeff, t.mono, M1[t.comp]);
      }
      if (!acc.is_zero()) return false;
    }
  }
  return true;
}

}  // namespace derkit
