#include "derkit/hilbert.hpp"

#include <algorithm>
#include <numeric>

namespace derkit {

long long binom_ll(long long m, int k) {
  if (k < 0) return 0;
  // product of k consecutive integers ending at m, over k!
  long long num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= (m - i);
    den *= (i + 1);
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  return num / den;
}

namespace {

std::vector<long long> poly_mul_ll(const std::vector<long long>& a,
                                   const std::vector<long long>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

void poly_add_shifted_ll(std::vector<long long>& a, const std::vector<long long>& b,
                         long long shift) {
  if ((long long)a.size() < (long long)b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

void drop_nonminimal(std::vector<Monomial>& gens) {
  std::vector<Monomial> out;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j) {
      if (i == j) continue;
      if (Ring::divides(gens[j], gens[i])) {
        if (gens[j] == gens[i] && j > i) continue;
        redundant = true;
      }
    }
    if (!redundant) out.push_back(gens[i]);
  }
  gens = std::move(out);
}

std::vector<long long> numerator_rec(const Ring& ring, std::vector<Monomial> gens) {
  drop_nonminimal(gens);
  if (gens.empty()) return {1};
  for (const auto& g : gens)
    if (g.is_one()) return {0};

  // pairwise coprime => product of (1 - t^deg)
  bool all_coprime = true;
  for (size_t i = 0; i < gens.size() && all_coprime; ++i)
    for (size_t j = i + 1; j < gens.size() && all_coprime; ++j)
      if (!Ring::coprime(gens[i], gens[j])) all_coprime = false;
  if (all_coprime) {
    std::vector<long long> acc{1};
    for (const auto& g : gens) {
      std::vector<long long> f(g.deg + 1, 0);
      f[0] = 1;
      f[g.deg] -= 1;
      acc = poly_mul_ll(acc, f);
    }
    return acc;
  }

  // pivot on the variable occurring in the most generators
  int n = ring.nvars();
  std::vector<int> count(n, 0);
  for (const auto& g : gens)
    for (int v = 0; v < n; ++v)
      if (g.exp[v] > 0) ++count[v];
  int pivot = (int)(std::max_element(count.begin(), count.end()) - count.begin());

  // I = (I + (x)) + x*(I : x)
  std::vector<Monomial> plus = gens;
  Monomial xv = ring.var_power(pivot, 1);
  plus.push_back(xv);
  std::vector<Monomial> colon;
  for (const auto& g : gens) {
    Monomial h = g;
    if (h.exp[pivot] > 0) {
      h.exp[pivot] -= 1;
      h.deg -= ring.weight(pivot);
    }
    colon.push_back(std::move(h));
  }
  std::vector<long long> a = numerator_rec(ring, std::move(plus));
  std::vector<long long> b = numerator_rec(ring, std::move(colon));
  // from 0 -> S/(I:x) -x-> S/I -> S/(I+(x)) -> 0:
  // N(I) = N(I + (x)) + t^w N(I : x)
  poly_add_shifted_ll(a, b, ring.weight(pivot));
  return a;
}

}  // namespace

std::vector<long long> hilbert_numerator(const Ring& ring, std::vector<Monomial> gens) {
  if (!ring.standard_graded())
    throw std::invalid_argument("Hilbert series requires the standard grading");
  return numerator_rec(ring, std::move(gens));
}

long long HilbertSeries::polynomial_at(long long z) const {
  if (dim == 0) return 0;
  long long acc = 0;
  for (size_t i = 0; i < reduced.size(); ++i)
    acc += reduced[i] * binom_ll(z - (long long)i + dim - 1, dim - 1);
  return acc;
}

std::vector<long long> HilbertSeries::expand(int top) const { return expand_series(num, nvars, top); }

std::vector<long long> expand_series(const std::vector<long long>& num, int n, int top) {
  std::vector<long long> out(top + 1, 0);
  // 1/(1-t)^n = sum C(i+n-1, n-1) t^i
  for (int i = 0; i <= top; ++i) {
    long long c = binom_ll(i + n - 1, n - 1);
    for (size_t j = 0; j < num.size(); ++j) {
      long long k = i + (long long)j;
      if (k > top) break;
      out[k] += num[j] * c;
    }
  }
  return out;
}

HilbertSeries hilbert_series_from_lt(const Ring& ring, std::vector<Monomial> lt_gens) {
  HilbertSeries hs;
  hs.nvars = ring.nvars();
  hs.num = hilbert_numerator(ring, std::move(lt_gens));
  bool all_zero = true;
  for (long long c : hs.num)
    if (c != 0) all_zero = false;
  if (all_zero) {
    // the zero ring
    hs.reduced = {0};
    hs.dim = -1;
    hs.e0 = hs.e1 = 0;
    return hs;
  }
  // cancel (1-t) factors: q(1) == 0 means divisible
  std::vector<long long> q = hs.num;
  int cancels = 0;
  auto value_at_one = [](const std::vector<long long>& p) {
    long long s = 0;
    for (long long c : p) s += c;
    return s;
  };
  while (!q.empty() && value_at_one(q) == 0) {
    // divide by (1-t): if q = (1-t) r then r_i = sum_{j<=i} q_j
    std::vector<long long> r(q.size() - 1, 0);
    long long run = 0;
    for (size_t i = 0; i + 1 < q.size(); ++i) {
      run += q[i];
      r[i] = run;
    }
    q = std::move(r);
    ++cancels;
    if (q.empty()) break;
  }
  if (q.empty()) q = {0};
  hs.reduced = q;
  hs.dim = hs.nvars - cancels;
  hs.e0 = value_at_one(q);
  long long d1 = 0;
  for (size_t i = 0; i < q.size(); ++i) d1 += (long long)i * q[i];
  hs.e1 = d1;
  return hs;
}

HilbertSeries hilbert_series_quotient(const IdealGB& gb) {
  std::vector<Monomial> lts;
  for (const auto& g : gb.gb) lts.push_back(g.lm());
  return hilbert_series_from_lt(*gb.ring, std::move(lts));
}

HilbertSeries hilbert_series_quotient(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  IdealGB gb = ideal_gb(ring, gens);
  return hilbert_series_quotient(gb);
}

DimDegree ideal_dim_degree(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  HilbertSeries hs = hilbert_series_quotient(ring, gens);
  return DimDegree{hs.dim, hs.e0};
}

}  // namespace derkit
