#include "derkit/families.hpp"

namespace derkit {

namespace {

std::vector<Polynomial> scroll_like_minors(const RingPtr& ring, const PolyMatrix& m2xk) {
  return minors(ring, m2xk, 2);
}

}  // namespace

FamilyCurve family_rational_normal(int n, const Field& field) {
  if (n < 2) throw std::invalid_argument("rational normal curve needs n >= 2");
  RingPtr ring = make_ring_n(field, n + 1, "x");
  PolyMatrix mat(2);
  for (int c = 0; c < n; ++c) {
    mat[0].push_back(Polynomial::variable(ring, c));
    mat[1].push_back(Polynomial::variable(ring, c + 1));
  }
  FamilyCurve out;
  out.spec.ring = ring;
  out.spec.ideal = scroll_like_minors(ring, mat);
  out.spec.name = "rnc" + std::to_string(n);
  out.spec.flags = {flag::reduced, flag::irreducible, flag::locally_irreducible, flag::domain};

  out.pred.d = n;
  out.pred.p_a = 0;
  out.pred.p_g = 0;
  out.pred.tau = 0;
  out.pred.sigma = 0;
  out.pred.ncomponents = 1;
  out.spec.asserted_components = 1;
  if (n >= 3) {
    out.pred.indeg = 0;
    out.pred.mu_der = 4;
    out.pred.mu_der_mod_euler = 3;
  }

  // the four degree-zero generators of Der, written on the basis d/dx_i
  auto ord = ModuleOrder::pot(ring);
  FreeModule amb = free_module(ring, std::vector<long long>(n + 1, -1));
  const Field& K = field;
  auto add_gen = [&](std::vector<std::pair<int, std::pair<long long, int>>> entries) {
    // entries: (component i, (scalar, variable index))
    std::vector<MTerm> terms;
    for (auto& e : entries) {
      Coeff c = K.from_int(e.second.first);
      if (K.is_zero(c)) continue;
      terms.push_back(MTerm{e.first, ring->var_power(e.second.second, 1), c});
    }
    out.pred.der_generators.push_back(vec_canonical(*ring, *ord, std::move(terms)));
  };
  {
    std::vector<std::pair<int, std::pair<long long, int>>> g1, g2, g3, g4;
    for (int i = 0; i <= n - 1; ++i) {
      g1.push_back({i, {n - i, i}});
      g2.push_back({i, {n - i, i + 1}});
    }
    for (int i = 1; i <= n; ++i) {
      g3.push_back({i, {i, i - 1}});
      g4.push_back({i, {i, i}});
    }
    add_gen(g1);
    add_gen(g2);
    add_gen(g3);
    add_gen(g4);
  }
  return out;
}

FamilyCurve family_beauty(int n, int r, const Field& field) {
  if (n < 3 || r < 1) throw std::invalid_argument("family needs n >= 3 and r >= 1");
  // variables x1..xn, indices 0..n-1 internally
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  RingPtr ring = make_ring(field, names);

  PolyMatrix mat(2);
  for (int c = 0; c < n - 1; ++c) mat[0].push_back(Polynomial::variable(ring, c));
  for (int c = 1; c <= n - 2; ++c)
    mat[1].push_back(Polynomial::term(ring, ring->var_power(c, r), field.one()));
  mat[1].push_back(Polynomial::term(ring, ring->var_power(0, r), field.one()) +
                   Polynomial::term(ring, ring->var_power(n - 1, r), field.one()));

  FamilyCurve out;
  out.spec.ring = ring;
  out.spec.ideal = scroll_like_minors(ring, mat);
  out.spec.name = "beauty" + std::to_string(n) + "r" + std::to_string(r);
  out.spec.flags = {flag::reduced, flag::irreducible, flag::locally_irreducible, flag::domain,
                    flag::lci};
  if (n <= 4 || r == 1) out.spec.flags.insert(flag::planar_singularities);

  auto power_sum = [&](int lo, int hi) {  // sum of r^k for k in [lo, hi]
    long long acc = 0, pw = 1;
    for (int k = 0; k <= hi; ++k) {
      if (k >= lo) acc += pw;
      pw *= r;
    }
    return acc;
  };
  long long d = power_sum(0, n - 2);
  long long rn1 = 1;
  for (int k = 0; k < n - 1; ++k) rn1 *= r;
  out.pred.d = d;
  out.pred.p_a = ((n - 2) * rn1 - d + 1) / 2;
  out.pred.tau = (n - 3) * rn1 - d + r + 1;
  out.pred.sigma = *out.pred.tau / 2;
  long long rn2 = rn1 / r;
  out.pred.p_g = (r * (rn2 - 1)) / 2;
  out.pred.indeg = r - 1;
  out.pred.ncomponents = 1;
  for (int m = n - 3; m >= 0; --m) out.pred.local_semigroup.push_back(power_sum(m, n - 3));
  if (r > 1) out.spec.local_semigroup = out.pred.local_semigroup;
  out.spec.asserted_components = 1;

  // singular points (1:0:...:0:rho), rho^r = -1, when the field has them
  // (n = 3 gives a smooth plane curve, no points to attach)
  if (r > 1 && n >= 4) {
    std::vector<Coeff> roots = roots_of_minus_one(field, r);
    if ((long long)roots.size() == r) {
      for (const auto& rho : roots) {
        ProjPoint p;
        p.coords.assign(n, field.zero());
        p.coords[0] = field.one();
        p.coords[n - 1] = rho;
        out.spec.points.push_back(std::move(p));
      }
    }
  }

  // the distinguished degree r-1 derivation
  {
    auto ord = ModuleOrder::pot(ring);
    std::vector<MTerm> terms;
    for (int i = 2; i <= n - 1; ++i) {
      long long coeff = power_sum(n - i, n - 2);
      Monomial mono = Ring::mul(ring->var_power(i - 1, 1), ring->var_power(n - 1, r - 1));
      Coeff c = field.from_int(coeff);
      if (!field.is_zero(c)) terms.push_back(MTerm{i - 1, mono, c});
    }
    Coeff dc = field.from_int(d);
    if (!field.is_zero(dc)) {
      terms.push_back(MTerm{n - 1, ring->var_power(0, r), dc});
      terms.push_back(MTerm{n - 1, ring->var_power(n - 1, r), dc});
    }
    out.pred.special_generator = vec_canonical(*ring, *ord, std::move(terms));
  }
  return out;
}

FamilyCurve family_plane(const Polynomial& f, std::set<std::string> flags,
                         std::vector<ProjPoint> points) {
  if (f.ring()->nvars() != 3) throw std::invalid_argument("plane curve needs three variables");
  FamilyCurve out;
  out.spec.ring = f.ring();
  out.spec.ideal = {f};
  out.spec.points = std::move(points);
  out.spec.flags = std::move(flags);
  out.spec.flags.insert(flag::lci);
  out.spec.flags.insert(flag::planar_singularities);
  out.spec.name = "plane";
  out.pred.d = f.degree();
  return out;
}

long long suitable_prime_for_root_count(int r, long long start) {
  long long step = 2LL * r;
  for (long long p = start;; ++p) {
    if (p % step != 1) continue;
    if (is_prime_ll(p)) return p;
  }
}

std::vector<Coeff> roots_of_minus_one(const Field& field, int r) {
  std::vector<Coeff> out;
  if (field.kind() == FieldKind::Rationals) {
    if (r % 2 == 1) out.push_back(field.from_int(-1));
    return out;
  }
  long long p = field.characteristic();
  for (long long a = 1; a < p; ++a) {
    if (mod_pow(a, r, p) == p - 1) out.push_back(field.from_int(a));
  }
  return out;
}

}  // namespace derkit
