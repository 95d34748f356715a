#include "derkit/curve.hpp"

#include <algorithm>

namespace derkit {

std::vector<Polynomial> CurveAnalysis::jacobian_with_ideal() const {
  std::vector<Polynomial> out = jacobian;
  for (const auto& g : spec.ideal) out.push_back(g);
  return out;
}

bool CurveAnalysis::is_hypersurface() const { return dim == spec.ring->nvars() - 1; }

std::vector<Polynomial> jacobian_ideal_lift(const RingPtr& ring,
                                            const std::vector<Polynomial>& ideal, int dim) {
  PolyMatrix jac = jacobian_matrix(ring, ideal);
  int size = ring->nvars() - dim;
  if (size <= 0) return {Polynomial::from_int(ring, 1)};
  if ((int)jac.size() < size) return {};
  return minors(ring, jac, size);
}

std::vector<Polynomial> partial_jacobian_lift(const RingPtr& ring,
                                              const std::vector<Polynomial>& ideal,
                                              const std::vector<Polynomial>& forms) {
  IdealGB gb = ideal_gb(ring, ideal);
  for (const auto& f : forms) {
    if (!in_ideal(gb, f)) throw std::invalid_argument("partial Jacobian form not in the ideal");
  }
  PolyMatrix jac = jacobian_matrix(ring, forms);
  return minors(ring, jac, (int)forms.size());
}

Coeff eval_at_point(const Polynomial& f, const ProjPoint& p) { return f.evaluate(p.coords); }

bool point_on_ideal(const std::vector<Polynomial>& ideal, const ProjPoint& p) {
  for (const auto& g : ideal) {
    if (g.is_zero()) continue;
    if (!g.ring()->field().is_zero(eval_at_point(g, p))) return false;
  }
  return true;
}

std::vector<Polynomial> point_prime_ideal(const RingPtr& ring, const ProjPoint& p) {
  const Field& K = ring->field();
  int n = ring->nvars();
  if ((int)p.coords.size() != n) throw std::invalid_argument("point coordinate count");
  int piv = -1;
  for (int i = 0; i < n && piv < 0; ++i)
    if (!K.is_zero(p.coords[i])) piv = i;
  if (piv < 0) throw std::invalid_argument("point has all-zero coordinates");
  std::vector<Polynomial> out;
  for (int i = 0; i < n; ++i) {
    if (i == piv) continue;
    // a_piv * x_i - a_i * x_piv
    Polynomial g = Polynomial::variable(ring, i).scaled(p.coords[piv]) -
                   Polynomial::variable(ring, piv).scaled(p.coords[i]);
    out.push_back(std::move(g));
  }
  return out;
}

CurveAnalysis analyze_curve(const CurveSpec& spec_in) {
  CurveAnalysis an;
  an.spec = spec_in;
  const RingPtr& ring = an.spec.ring;
  if (!ring->standard_graded())
    throw std::invalid_argument("curve analysis requires the standard grading");
  for (const auto& g : an.spec.ideal) {
    if (!g.is_zero() && !g.is_homogeneous())
      throw std::invalid_argument("curve ideal must be homogeneous");
  }

  std::vector<Polynomial> sat = saturate_at_irrelevant(ring, an.spec.ideal);
  an.input_was_saturated = ideals_equal(ring, sat, an.spec.ideal);
  if (!an.input_was_saturated) an.spec.ideal = std::move(sat);

  an.hs = hilbert_series_quotient(ring, an.spec.ideal);
  an.dim = an.hs.dim;
  an.degree = an.hs.e0;
  an.p_a = 1 - an.hs.polynomial_at(0);

  an.res = free_resolution_quotient(ring, an.spec.ideal);
  an.reg = an.res.regularity();
  int codim = ring->nvars() - an.dim;
  an.acm = (an.res.length() == codim);
  an.cm_type = an.res.length() > 0 ? (long long)an.res.shifts.back().size() : 1;
  an.gorenstein = an.acm && an.cm_type == 1;
  an.complete_intersection =
      an.res.length() == 0 || (int)an.res.shifts[1].size() == codim;

  CanonicalModule cm = canonical_module(ring, an.spec.ideal, an.res, an.dim);
  an.omega = minimalize(cm.omega);
  std::optional<long long> ind = module_indeg(an.omega);
  if (!ind) throw std::logic_error("canonical module vanished");
  an.a_inv = -*ind;

  an.jacobian = jacobian_ideal_lift(ring, an.spec.ideal, an.dim);
  HilbertSeries hj = hilbert_series_quotient(ring, an.jacobian_with_ideal());
  an.dim_mod_jac = hj.dim;
  an.smooth = (hj.dim <= 0);
  an.e_mod_jac = an.smooth ? 0 : hj.e0;

  an.char_divides_degree = ring->field().divides_char(an.degree);

  // supplied points must lie on the curve
  for (const auto& p : an.spec.points) {
    if (!point_on_ideal(an.spec.ideal, p))
      throw std::invalid_argument("supplied singular point is not on the curve");
  }
  return an;
}

}  // namespace derkit
