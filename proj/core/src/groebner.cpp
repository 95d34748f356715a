#include "derkit/groebner.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace derkit {

Vec normal_form(const FreeModule& F, const ModuleOrder& ord, Vec v,
                const std::vector<Vec>& basis, std::vector<Polynomial>* quotients) {
  const Ring& R = *F.ring;
  const Field& K = R.field();
  if (quotients) quotients->assign(basis.size(), Polynomial::zero(F.ring));
  std::vector<MTerm> rem;
  while (!v.is_zero()) {
    const MTerm& t = v.leading();
    int red = -1;
    for (int k = 0; k < (int)basis.size(); ++k) {
      if (basis[k].is_zero()) continue;
      const MTerm& lt = basis[k].leading();
      if (lt.comp == t.comp && Ring::divides(lt.mono, t.mono)) {
        red = k;
        break;
      }
    }
    if (red < 0) {
      rem.push_back(t);
      v.terms.erase(v.terms.begin());
      continue;
    }
    const MTerm& lt = basis[red].leading();
    Coeff q = K.div(t.coeff, lt.coeff);
    Monomial m = Ring::div(t.mono, lt.mono);
    if (quotients) {
      (*quotients)[red] =
          (*quotients)[red] + Polynomial::term(F.ring, m, q);
    }
    v = vec_axpy(R, ord, v, K.neg(q), m, basis[red]);
  }
  return Vec{std::move(rem)};
}

namespace {

struct Pair {
  long long deg;
  int i, j;  // i < j
  Monomial lcm;
};

struct PairCmp {
  bool operator()(const Pair& a, const Pair& b) const {
    if (a.deg != b.deg) return a.deg < b.deg;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
  }
};

class GBWorker {
 public:
  GBWorker(const FreeModule& F, std::shared_ptr<const ModuleOrder> ord, GBOptions opts)
      : F_(F), R_(*F.ring), K_(F.ring->field()), ord_(std::move(ord)), opts_(opts) {}

  void add_generators(std::vector<Vec> gens) {
    gens_count_ = (int)gens.size();
    for (int k = 0; k < (int)gens.size(); ++k) {
      Vec g = std::move(gens[k]);
      if (g.is_zero()) continue;
      // pre-reduce against what is already there; redundant generators
      // (frequent in minor lists) never enter the pair set
      std::vector<Polynomial> quot;
      Vec red = normal_form(F_, *ord_, std::move(g), basis, opts_.track ? &quot : nullptr);
      if (red.is_zero()) continue;
      std::vector<Polynomial> tr;
      if (opts_.track) {
        tr.assign(gens_count_, Polynomial::zero(F_.ring));
        tr[k] = Polynomial::from_int(F_.ring, 1);
        for (size_t b = 0; b < basis.size(); ++b) {
          if (quot[b].is_zero()) continue;
          for (int m = 0; m < gens_count_; ++m) tr[m] = tr[m] - quot[b] * transform[b][m];
        }
      }
      insert(std::move(red), std::move(tr));
    }
  }

  void run() {
    while (!pairs_.empty()) {
      Pair p = *pairs_.begin();
      if (opts_.degree_cap >= 0 && p.deg > opts_.degree_cap) {
        truncated_ = true;
        break;
      }
      pairs_.erase(pairs_.begin());
      process_pair(p);
    }
    reduce_basis();
  }

  // members exposed to buchberger()
  std::vector<Vec> basis;
  std::vector<std::vector<Polynomial>> transform;
  bool truncated_ = false;

 private:
  long long elt_degree(const Vec& v) const { return vec_degree(F_, v); }

  void process_pair(const Pair& p) {
    const Vec& gi = basis[p.i];
    const Vec& gj = basis[p.j];
    Monomial mi = Ring::div(p.lcm, gi.leading().mono);
    Monomial mj = Ring::div(p.lcm, gj.leading().mono);
    // basis elements are monic
    Vec sp = vec_axpy(R_, *ord_, vec_zero(), K_.one(), mi, gi);
    sp = vec_axpy(R_, *ord_, sp, K_.neg(K_.one()), mj, gj);
    std::vector<Polynomial> quot;
    Vec nf = normal_form(F_, *ord_, std::move(sp), basis, opts_.track ? &quot : nullptr);
    if (nf.is_zero()) return;
    std::vector<Polynomial> tr;
    if (opts_.track) {
      tr.assign(gens_count_, Polynomial::zero(F_.ring));
      Polynomial pmi = Polynomial::term(F_.ring, mi, K_.one());
      Polynomial pmj = Polynomial::term(F_.ring, mj, K_.one());
      for (int k = 0; k < gens_count_; ++k) {
        Polynomial acc = pmi * transform[p.i][k] - pmj * transform[p.j][k];
        for (size_t b = 0; b < basis.size(); ++b) {
          if (!quot[b].is_zero()) acc = acc - quot[b] * transform[b][k];
        }
        tr[k] = std::move(acc);
      }
    }
    insert(std::move(nf), std::move(tr));
  }

  void insert(Vec g, std::vector<Polynomial> tr) {
    // monic
    Coeff lc = g.leading().coeff;
    if (!K_.is_one(lc)) {
      Coeff inv = K_.inv(lc);
      g = vec_scale(R_, g, inv);
      for (auto& q : tr) q = q.scaled(inv);
    }
    int t = (int)basis.size();
    basis.push_back(std::move(g));
    if (opts_.track) transform.push_back(std::move(tr));
    update_pairs(t);
  }

  // Gebauer-Möller pair update.
  void update_pairs(int t) {
    const MTerm& lt = basis[t].leading();
    // chain criterion against surviving old pairs
    for (auto it = pairs_.begin(); it != pairs_.end();) {
      const Pair& p = *it;
      const MTerm& li = basis[p.i].leading();
      if (li.comp == lt.comp && Ring::divides(lt.mono, p.lcm)) {
        Monomial l_it = R_.lcm(basis[p.i].leading().mono, lt.mono);
        Monomial l_jt = R_.lcm(basis[p.j].leading().mono, lt.mono);
        if (!(l_it == p.lcm) && !(l_jt == p.lcm)) {
          it = pairs_.erase(it);
          continue;
        }
      }
      ++it;
    }
    // candidate pairs (i, t)
    struct Cand {
      int i;
      Monomial lcm;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < t; ++i) {
      if (basis[i].is_zero()) continue;
      const MTerm& li = basis[i].leading();
      if (li.comp != lt.comp) continue;
      Monomial l = R_.lcm(li.mono, lt.mono);
      bool cop = F_.rank() == 1 && Ring::coprime(li.mono, lt.mono);
      cands.push_back(Cand{i, std::move(l), cop});
    }
    // M: drop candidates whose lcm is a proper multiple of another's
    std::vector<bool> keep(cands.size(), true);
    for (size_t a = 0; a < cands.size(); ++a) {
      for (size_t b = 0; b < cands.size(); ++b) {
        if (a == b || !keep[a] || !keep[b]) continue;
        if (!(cands[b].lcm == cands[a].lcm) && Ring::divides(cands[b].lcm, cands[a].lcm)) {
          keep[a] = false;
        }
      }
    }
    // F: one pair per lcm value; if any member of the class is coprime the
    // whole class goes (product criterion; rank one only by construction).
    std::vector<size_t> order_idx;
    for (size_t a = 0; a < cands.size(); ++a)
      if (keep[a]) order_idx.push_back(a);
    std::vector<bool> emitted(cands.size(), false);
    for (size_t a : order_idx) {
      if (emitted[a] || !keep[a]) continue;
      bool any_coprime = false;
      size_t rep = a;
      for (size_t b : order_idx) {
        if (!(cands[b].lcm == cands[a].lcm)) continue;
        emitted[b] = true;
        if (cands[b].coprime) any_coprime = true;
        if (cands[b].i < cands[rep].i) rep = b;
      }
      if (any_coprime) continue;
      long long deg = cands[rep].lcm.deg + F_.gen_deg[lt.comp];
      pairs_.insert(Pair{deg, cands[rep].i, t, cands[rep].lcm});
    }
  }

  void reduce_basis() {
    // drop elements whose leading term is divisible by another's
    std::vector<int> order_idx(basis.size());
    for (size_t i = 0; i < basis.size(); ++i) order_idx[i] = (int)i;
    std::vector<bool> dead(basis.size(), false);
    for (size_t a = 0; a < basis.size(); ++a) {
      if (basis[a].is_zero()) {
        dead[a] = true;
        continue;
      }
      for (size_t b = 0; b < basis.size(); ++b) {
        if (a == b || dead[a] || dead[b]) continue;
        const MTerm& la = basis[a].leading();
        const MTerm& lb = basis[b].leading();
        if (la.comp == lb.comp && Ring::divides(lb.mono, la.mono)) {
          if (lb.mono == la.mono && b > a) continue;  // keep the earlier one
          dead[a] = true;
        }
      }
    }
    std::vector<Vec> kept;
    std::vector<std::vector<Polynomial>> kept_tr;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (dead[i]) continue;
      kept.push_back(std::move(basis[i]));
      if (opts_.track) kept_tr.push_back(std::move(transform[i]));
    }
    basis = std::move(kept);
    transform = std::move(kept_tr);
    // tail-reduce each against the others
    for (size_t i = 0; i < basis.size(); ++i) {
      Vec self = std::move(basis[i]);
      basis[i] = vec_zero();
      std::vector<Polynomial> quot;
      Vec red = normal_form(F_, *ord_, std::move(self), basis, opts_.track ? &quot : nullptr);
      if (opts_.track) {
        for (size_t b = 0; b < basis.size(); ++b) {
          if (b == i || quot[b].is_zero()) continue;
          for (int k = 0; k < gens_count_; ++k)
            transform[i][k] = transform[i][k] - quot[b] * transform[b][k];
        }
      }
      basis[i] = std::move(red);
    }
    // sort ascending by leading term for a canonical result
    std::vector<size_t> perm(basis.size());
    for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) {
      const MTerm& la = basis[a].leading();
      const MTerm& lb = basis[b].leading();
      return ord_->compare(la.comp, la.mono, lb.comp, lb.mono) < 0;
    });
    std::vector<Vec> sorted;
    std::vector<std::vector<Polynomial>> sorted_tr;
    for (size_t i : perm) {
      sorted.push_back(std::move(basis[i]));
      if (opts_.track) sorted_tr.push_back(std::move(transform[i]));
    }
    basis = std::move(sorted);
    transform = std::move(sorted_tr);
  }

  const FreeModule& F_;
  const Ring& R_;
  const Field& K_;
  std::shared_ptr<const ModuleOrder> ord_;
  GBOptions opts_;
  int gens_count_ = 0;
  std::set<Pair, PairCmp> pairs_;
};

}  // namespace

ModuleGB buchberger(const FreeModule& F, std::vector<Vec> gens, GBOptions opts,
                    std::shared_ptr<const ModuleOrder> order) {
  if (!order) order = ModuleOrder::pot(F.ring);
  if (opts.degree_cap >= 0) {
    for (const auto& g : gens) {
      if (!vec_homogeneous(F, g))
        throw std::invalid_argument("degree-capped Gröbner basis needs homogeneous input");
    }
  }
  GBWorker w(F, order, opts);
  std::vector<Vec> gens_copy = gens;
  w.add_generators(std::move(gens_copy));
  w.run();
  ModuleGB out;
  out.ambient = F;
  out.order = order;
  out.gens = std::move(gens);
  out.gb = std::move(w.basis);
  out.transform = std::move(w.transform);
  out.truncated = w.truncated_;
  out.degree_cap = opts.degree_cap;
  return out;
}

Vec normal_form(const ModuleGB& gb, const Vec& v) {
  return normal_form(gb.ambient, *gb.order, v, gb.gb);
}

bool in_submodule(const ModuleGB& gb, const Vec& v) { return normal_form(gb, v).is_zero(); }

std::vector<Vec> syzygy_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                   long long degree_cap) {
  const Ring& R = *F.ring;
  const Field& K = R.field();
  for (const auto& g : gens) {
    if (!vec_homogeneous(F, g)) throw std::invalid_argument("syzygies need homogeneous input");
  }

  GBOptions opts;
  opts.track = true;
  ModuleGB gb = buchberger(F, gens, opts);
  const std::vector<Vec>& H = gb.gb;
  const int t = (int)H.size();
  const int s = (int)gens.size();

  FreeModule syzF = free_module(F.ring, {});
  for (const auto& g : gens)
    syzF.gen_deg.push_back(g.is_zero() ? 0 : vec_degree(F, g));
  auto syz_ord = ModuleOrder::pot(F.ring);

  std::vector<Vec> out;

  // change-of-basis rows: gens[k] - sum_l B[k][l] H[l] = 0 rewritten through
  // the tracked transform A (H = A * gens) gives rows of (Id - B A).
  std::vector<std::vector<Polynomial>> B(s);
  for (int k = 0; k < s; ++k) {
    std::vector<Polynomial> quot;
    Vec nf = normal_form(F, *gb.order, gens[k], H, &quot);
    if (!nf.is_zero())
      throw std::logic_error("generator does not reduce to zero against its own basis");
    B[k] = std::move(quot);
  }
  for (int k = 0; k < s; ++k) {
    std::vector<MTerm> row_terms;
    std::vector<Polynomial> row(s, Polynomial::zero(F.ring));
    row[k] = Polynomial::from_int(F.ring, 1);
    for (int l = 0; l < t; ++l) {
      if (B[k][l].is_zero()) continue;
      for (int m = 0; m < s; ++m) row[m] = row[m] - B[k][l] * gb.transform[l][m];
    }
    Vec v = vec_from_components(syzF, *syz_ord, row);
    if (!v.is_zero()) out.push_back(std::move(v));
  }

  // Schreyer syzygies of the reduced basis, mapped back through A.
  for (int i = 0; i < t; ++i) {
    for (int j = i + 1; j < t; ++j) {
      const MTerm& li = H[i].leading();
      const MTerm& lj = H[j].leading();
      if (li.comp != lj.comp) continue;
      Monomial l = R.lcm(li.mono, lj.mono);
      long long pair_deg = l.deg + F.gen_deg[li.comp];
      if (degree_cap >= 0 && pair_deg > degree_cap) continue;
      Monomial mi = Ring::div(l, li.mono);
      Monomial mj = Ring::div(l, lj.mono);
      std::vector<Polynomial> sigma(t, Polynomial::zero(F.ring));
      if (F.rank() == 1 && Ring::coprime(li.mono, lj.mono)) {
        // Koszul syzygy; no reduction needed
        Polynomial pi = poly_from_vec(F, H[i]);
        Polynomial pj = poly_from_vec(F, H[j]);
        sigma[i] = pj;
        sigma[j] = -pi;
      } else {
        Vec sp = vec_axpy(R, *gb.order, vec_zero(), K.one(), mi, H[i]);
        sp = vec_axpy(R, *gb.order, sp, K.neg(K.one()), mj, H[j]);
        std::vector<Polynomial> quot;
        Vec nf = normal_form(F, *gb.order, std::move(sp), H, &quot);
        if (!nf.is_zero()) throw std::logic_error("S-pair of a Gröbner basis did not reduce to zero");
        sigma[i] = Polynomial::term(F.ring, mi, K.one());
        sigma[j] = sigma[j] - Polynomial::term(F.ring, mj, K.one());
        for (int b = 0; b < t; ++b) sigma[b] = sigma[b] - quot[b];
      }
      // sigma * A
      std::vector<Polynomial> row(s, Polynomial::zero(F.ring));
      for (int b = 0; b < t; ++b) {
        if (sigma[b].is_zero()) continue;
        for (int m = 0; m < s; ++m) row[m] = row[m] + sigma[b] * gb.transform[b][m];
      }
      Vec v = vec_from_components(syzF, *syz_ord, row);
      if (!v.is_zero()) out.push_back(std::move(v));
    }
  }

  if (degree_cap >= 0) {
    std::vector<Vec> capped;
    for (auto& v : out)
      if (vec_degree(syzF, v) <= degree_cap) capped.push_back(std::move(v));
    out = std::move(capped);
  }
  return out;
}

IdealGB ideal_gb(RingPtr ring, const std::vector<Polynomial>& gens, long long degree_cap) {
  FreeModule F = free_module_rank1(ring);
  auto ord = ModuleOrder::pot(ring);
  std::vector<Vec> vgens;
  for (const auto& g : gens) vgens.push_back(vec_from_poly(F, *ord, g));
  GBOptions opts;
  opts.degree_cap = degree_cap;
  ModuleGB m = buchberger(F, std::move(vgens), opts, ord);
  IdealGB out;
  out.ring = std::move(ring);
  out.gens = gens;
  out.truncated = m.truncated;
  for (const auto& v : m.gb) out.gb.push_back(poly_from_vec(F, v));
  return out;
}

Polynomial nf_ideal(const IdealGB& gb, const Polynomial& f) {
  FreeModule F = free_module_rank1(gb.ring);
  auto ord = ModuleOrder::pot(gb.ring);
  std::vector<Vec> basis;
  for (const auto& g : gb.gb) basis.push_back(vec_from_poly(F, *ord, g));
  Vec nf = normal_form(F, *ord, vec_from_poly(F, *ord, f), basis);
  return poly_from_vec(F, nf);
}

bool in_ideal(const IdealGB& gb, const Polynomial& f) { return nf_ideal(gb, f).is_zero(); }

bool ideal_eq(const IdealGB& a, const IdealGB& b) {
  if (a.gb.size() != b.gb.size()) return false;
  for (size_t i = 0; i < a.gb.size(); ++i)
    if (a.gb[i] != b.gb[i]) return false;
  return true;
}

std::vector<Monomial> leading_monomials(const IdealGB& gb) {
  std::vector<Monomial> out;
  for (const auto& g : gb.gb) out.push_back(g.lm());
  return out;
}

std::vector<Vec> syzygies_of_polys(RingPtr ring, const std::vector<Polynomial>& gens,
                                   long long degree_cap) {
  FreeModule F = free_module_rank1(ring);
  auto ord = ModuleOrder::pot(ring);
  std::vector<Vec> vgens;
  for (const auto& g : gens) vgens.push_back(vec_from_poly(F, *ord, g));
  return syzygy_generators(F, vgens, degree_cap);
}

EliminationResult eliminate(const std::vector<Polynomial>& gens, std::vector<int> keep) {
  if (gens.empty()) throw std::invalid_argument("eliminate: no generators");
  RingPtr ring = gens.front().ring();
  int n = ring->nvars();
  std::sort(keep.begin(), keep.end());
  std::vector<bool> kept(n, false);
  for (int k : keep) kept[k] = true;
  std::vector<int> elim;
  for (int i = 0; i < n; ++i)
    if (!kept[i]) elim.push_back(i);

  EliminationResult out;
  out.kept = keep;

  std::vector<std::string> sub_names;
  std::vector<int> sub_weights;
  for (int k : keep) {
    sub_names.push_back(ring->var_name(k));
    sub_weights.push_back(ring->weight(k));
  }
  out.subring = make_ring(ring->field(), sub_names, sub_weights);

  if (elim.empty()) {
    out.gens = gens;
    std::vector<int> idmap(n);
    for (int i = 0; i < n; ++i) idmap[i] = i;
    for (auto& g : out.gens) g = g.map_vars(out.subring, idmap);
    return out;
  }

  // permuted ring: eliminated variables first, block order
  std::vector<std::string> perm_names;
  std::vector<int> perm_weights;
  std::vector<int> to_perm(n, -1);
  int idx = 0;
  for (int e : elim) {
    perm_names.push_back(ring->var_name(e));
    perm_weights.push_back(ring->weight(e));
    to_perm[e] = idx++;
  }
  for (int k : keep) {
    perm_names.push_back(ring->var_name(k));
    perm_weights.push_back(ring->weight(k));
    to_perm[k] = idx++;
  }
  RingPtr perm_ring =
      make_ring(ring->field(), perm_names, perm_weights, OrderKind::Elim, (int)elim.size());

  std::vector<Polynomial> mapped;
  for (const auto& g : gens) mapped.push_back(g.map_vars(perm_ring, to_perm));
  IdealGB gb = ideal_gb(perm_ring, mapped);

  std::vector<int> perm_to_sub(perm_ring->nvars(), -1);
  for (int i = 0; i < (int)keep.size(); ++i) perm_to_sub[(int)elim.size() + i] = i;

  for (const auto& g : gb.gb) {
    bool free_of_elim = true;
    for (const auto& t : g.terms()) {
      for (int e = 0; e < (int)elim.size() && free_of_elim; ++e)
        if (t.mono.exp[e] != 0) free_of_elim = false;
    }
    if (free_of_elim) out.gens.push_back(g.map_vars(out.subring, perm_to_sub));
  }
  return out;
}

}  // namespace derkit
