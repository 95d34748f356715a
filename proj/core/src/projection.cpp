#include "derkit/projection.hpp"

#include "derkit/linalg.hpp"

namespace derkit {

namespace {

// invert via row reduction of [M | I]; empty result when singular
std::vector<std::vector<Coeff>> invert_matrix(const Field& K,
                                              const std::vector<std::vector<Coeff>>& m) {
  int n = (int)m.size();
  DenseMatrix aug(K, n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m[i][j];
    aug.at(i, n + i) = K.one();
  }
  std::vector<int> piv = aug.rref();
  if ((int)piv.size() != n || piv[n - 1] != n - 1) return {};
  std::vector<std::vector<Coeff>> inv(n, std::vector<Coeff>(n, K.zero()));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = aug.at(i, n + j);
  return inv;
}

}  // namespace

ProjectionResult general_projection(const CurveAnalysis& an, const DerivationModule& der,
                                    std::uint64_t seed) {
  const RingPtr& ring = an.ring();
  const Field& K = ring->field();
  const int n = ring->nvars();
  if (an.dim != 2) throw std::invalid_argument("projection needs a curve");

  ProjectionResult out;
  out.seed_used = seed;
  out.a_curve = an.a_inv;
  if (!der.indeg || !der.findeg.determined)
    throw std::invalid_argument("projection comparison needs measured derivation degrees");
  out.indeg_curve = *der.indeg;
  out.findeg_curve = der.findeg.value;

  std::vector<std::vector<Coeff>> M, invM;
  Polynomial plane_poly;
  RingPtr subring;
  int attempt = 0;
  const int max_attempts = 24;
  for (; attempt < max_attempts; ++attempt) {
    Prng rng(seed + (std::uint64_t)attempt * 0x9e3779b9ULL);
    if (n == 3) {
      // the projection of a plane curve is itself (identity coordinates)
      M.assign(3, std::vector<Coeff>(3, K.zero()));
      for (int i = 0; i < 3; ++i) M[i][i] = K.one();
      invM = M;
    } else {
      M.assign(n, std::vector<Coeff>(n, K.zero()));
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M[i][j] = rng.coeff(K);
      invM = invert_matrix(K, M);
      if (invM.empty()) continue;
    }

    // substitute x_j -> sum_k invM[j][k] y_k, then contract to k[y0,y1,y2]
    std::vector<Polynomial> images;
    for (int j = 0; j < n; ++j) {
      Polynomial acc = Polynomial::zero(ring);
      for (int k = 0; k < n; ++k) {
        if (K.is_zero(invM[j][k])) continue;
        acc = acc + Polynomial::variable(ring, k).scaled(invM[j][k]);
      }
      images.push_back(std::move(acc));
    }
    std::vector<Polynomial> transformed;
    for (const auto& f : an.spec.ideal) transformed.push_back(f.substitute(images));

    EliminationResult er = eliminate(transformed, {0, 1, 2});
    IdealGB gb = ideal_gb(er.subring, er.gens);
    if (gb.gb.size() != 1) continue;
    Polynomial f = gb.gb.front();
    if (f.degree() != an.degree) continue;  // degree dropped: degenerate center
    plane_poly = f;
    subring = er.subring;
    break;
  }
  if (plane_poly.is_zero())
    throw std::runtime_error("no usable projection found within the retry budget");
  out.retries = attempt;
  out.plane_poly = plane_poly;

  out.plane.ring = subring;
  out.plane.ideal = {plane_poly};
  out.plane.name = an.spec.name.empty() ? "projection" : an.spec.name + "_projection";
  out.plane.flags = {flag::reduced, flag::lci, flag::planar_singularities};
  if (an.spec.has_flag(flag::irreducible)) {
    out.plane.flags.insert(flag::irreducible);
    out.plane.flags.insert(flag::domain);
  }

  for (const auto& p : an.spec.points) {
    ProjPoint q;
    for (int i = 0; i < 3; ++i) {
      Coeff acc = K.zero();
      for (int j = 0; j < n; ++j) acc = K.add(acc, K.mul(M[i][j], p.coords[j]));
      q.coords.push_back(acc);
    }
    bool all_zero = true;
    for (const auto& c : q.coords)
      if (!K.is_zero(c)) all_zero = false;
    if (all_zero) throw std::runtime_error("projection center met a supplied point");
    out.image_points.push_back(std::move(q));
  }
  out.plane.points = out.image_points;

  CurveAnalysis pan = analyze_curve(out.plane);
  out.a_plane = pan.a_inv;
  DerivationModule pder = derivation_module(pan, seed ^ 0xabcdULL);
  if (!pder.indeg || !pder.findeg.determined)
    throw std::runtime_error("projection image derivation degrees not determined");
  out.indeg_plane = *pder.indeg;
  out.findeg_plane = pder.findeg.value;

  BoundReport& r = out.sandwich;
  r.id = TheoremId::GP_SANDWICH;
  r.seed = seed;
  auto hyp = [&](const std::string& name, bool pass, const std::string& obs) {
    r.hypotheses.push_back(Hypothesis{name, "yes", obs, pass});
  };
  hyp("reduced (asserted)", an.spec.has_flag(flag::reduced),
      an.spec.has_flag(flag::reduced) ? "yes" : "no");
  hyp("finite birational extension (degree preserved)", true,
      "projected degree = " + std::to_string(plane_poly.degree()));
  hyp("plane image Gorenstein", true, "hypersurface");
  hyp("quotients identified (ACM)", an.acm, an.acm ? "yes" : "no");
  r.inputs["a(A)"] = std::to_string(out.a_plane);
  r.inputs["a(R)"] = std::to_string(out.a_curve);
  r.inputs["indeg_A"] = std::to_string(out.indeg_plane);
  r.inputs["findeg_A"] = std::to_string(out.findeg_plane);
  r.inputs["indeg_R"] = std::to_string(out.indeg_curve);
  r.inputs["findeg_R"] = std::to_string(out.findeg_curve);
  long long shift = -out.a_plane + out.a_curve;
  bool ineq1 = out.findeg_curve >= out.indeg_plane + shift;
  bool ineq2 = out.findeg_plane >= out.indeg_curve + shift;
  r.inputs["findeg_R >= indeg_A - a(A) + a(R)"] = ineq1 ? "yes" : "no";
  r.inputs["findeg_A >= indeg_R - a(A) + a(R)"] = ineq2 ? "yes" : "no";
  r.lhs = Fraction(out.findeg_curve);
  r.rhs = Fraction(out.indeg_plane + shift);
  r.rel = Relation::GE;
  bool gate = an.spec.has_flag(flag::reduced) && an.acm;
  r.verdict = !gate ? Verdict::Inapplicable
                    : ((ineq1 && ineq2) ? Verdict::Holds : Verdict::Fails);
  return out;
}

}  // namespace derkit
