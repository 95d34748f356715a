#include "derkit/ideal_ops.hpp"

#include <algorithm>

namespace derkit {

namespace {

std::vector<Polynomial> drop_zero_dups(const RingPtr& ring, std::vector<Polynomial> gens) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    Polynomial m = g.monic();
    bool dup = false;
    for (const auto& h : out)
      if (h == m) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(std::move(m));
  }
  (void)ring;
  return out;
}

}  // namespace

std::vector<Polynomial> ideal_intersect(const RingPtr& ring, const std::vector<Polynomial>& I,
                                        const std::vector<Polynomial>& J) {
  std::vector<Polynomial> all = I;
  for (const auto& g : J) all.push_back(g);
  std::vector<Vec> syz = syzygies_of_polys(ring, all);
  FreeModule F = free_module_rank1(ring);
  std::vector<Polynomial> out;
  for (const auto& s : syz) {
    // the I-part of the syzygy evaluates inside I and equals -(J-part), so it
    // lies in the intersection
    Polynomial h = Polynomial::zero(ring);
    for (const auto& t : s.terms) {
      if (t.comp < (int)I.size()) h = h + Polynomial::term(ring, t.mono, t.coeff) * I[t.comp];
    }
    out.push_back(std::move(h));
  }
  return drop_zero_dups(ring, std::move(out));
}

std::vector<Polynomial> ideal_quotient_elem(const RingPtr& ring, const std::vector<Polynomial>& I,
                                            const Polynomial& g) {
  if (g.is_zero()) return {Polynomial::from_int(ring, 1)};
  std::vector<Polynomial> all{g};
  for (const auto& f : I) all.push_back(f);
  std::vector<Vec> syz = syzygies_of_polys(ring, all);
  std::vector<Polynomial> out;
  for (const auto& s : syz) {
    Polynomial c0 = Polynomial::zero(ring);
    for (const auto& t : s.terms)
      if (t.comp == 0) c0 = c0 + Polynomial::term(ring, t.mono, t.coeff);
    out.push_back(std::move(c0));
  }
  return drop_zero_dups(ring, std::move(out));
}

std::vector<Polynomial> ideal_quotient(const RingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J) {
  std::vector<Polynomial> acc;
  bool first = true;
  for (const auto& g : J) {
    std::vector<Polynomial> q = ideal_quotient_elem(ring, I, g);
    acc = first ? q : ideal_intersect(ring, acc, q);
    first = false;
  }
  if (first) return {Polynomial::from_int(ring, 1)};  // (I : 0-ideal) = (1)
  return acc;
}

std::vector<Polynomial> ideal_saturate(const RingPtr& ring, const std::vector<Polynomial>& I,
                                       const std::vector<Polynomial>& J) {
  std::vector<Polynomial> cur = I;
  for (;;) {
    std::vector<Polynomial> next = ideal_quotient(ring, cur, J);
    if (ideals_equal(ring, cur, next)) return cur;
    cur = std::move(next);
  }
}

std::vector<Polynomial> irrelevant_ideal(const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (int i = 0; i < ring->nvars(); ++i) out.push_back(Polynomial::variable(ring, i));
  return out;
}

std::vector<Polynomial> saturate_at_irrelevant(const RingPtr& ring,
                                               const std::vector<Polynomial>& I) {
  return ideal_saturate(ring, I, irrelevant_ideal(ring));
}

bool ideals_equal(const RingPtr& ring, const std::vector<Polynomial>& I,
                  const std::vector<Polynomial>& J) {
  IdealGB a = ideal_gb(ring, I);
  IdealGB b = ideal_gb(ring, J);
  return ideal_eq(a, b);
}

bool ideal_is_unit(const RingPtr& ring, const std::vector<Polynomial>& I) {
  IdealGB a = ideal_gb(ring, I);
  return a.gb.size() == 1 && a.gb.front().lm().is_one();
}

namespace {

Polynomial det_rec(const RingPtr& ring, const PolyMatrix& m, std::vector<int> rows,
                   std::vector<int> cols) {
  if (rows.size() == 1) return m[rows[0]][cols[0]];
  Polynomial acc = Polynomial::zero(ring);
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (size_t c = 0; c < cols.size(); ++c) {
    if (m[rows[0]][cols[c]].is_zero()) continue;
    std::vector<int> sub_cols;
    for (size_t cc = 0; cc < cols.size(); ++cc)
      if (cc != c) sub_cols.push_back(cols[cc]);
    Polynomial minor = det_rec(ring, m, sub_rows, sub_cols);
    Polynomial contrib = m[rows[0]][cols[c]] * minor;
    acc = (c % 2 == 0) ? acc + contrib : acc - contrib;
  }
  return acc;
}

void subsets_rec(int n, int k, int start, std::vector<int>& cur,
                 std::vector<std::vector<int>>& out) {
  if ((int)cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_rec(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets_rec(n, k, 0, cur, out);
  return out;
}

}  // namespace

Polynomial poly_det(const RingPtr& ring, const PolyMatrix& m) {
  std::vector<int> rows(m.size()), cols(m.size());
  for (size_t i = 0; i < m.size(); ++i) rows[i] = cols[i] = (int)i;
  return det_rec(ring, m, rows, cols);
}

std::vector<Polynomial> minors(const RingPtr& ring, const PolyMatrix& m, int k) {
  int rows = (int)m.size();
  int cols = rows ? (int)m[0].size() : 0;
  if (k < 1 || k > rows || k > cols) throw std::invalid_argument("minor size out of range");
  std::vector<Polynomial> out;
  for (const auto& rs : subsets(rows, k)) {
    for (const auto& cs : subsets(cols, k)) {
      Polynomial d = det_rec(ring, m, rs, cs);
      if (!d.is_zero()) out.push_back(std::move(d));
    }
  }
  return out;
}

PolyMatrix jacobian_matrix(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  PolyMatrix m;
  for (const auto& f : gens) {
    std::vector<Polynomial> row;
    for (int i = 0; i < ring->nvars(); ++i) row.push_back(f.derivative(i));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<Polynomial> fitting_ideal(const RingPtr& ring, const PolyMatrix& rel, int ngens,
                                      int index) {
  int size = ngens - index;
  if (size <= 0) return {Polynomial::from_int(ring, 1)};
  if (rel.empty() || size > (int)rel.size() || size > (int)rel[0].size()) return {};
  return minors(ring, rel, size);
}

}  // namespace derkit
