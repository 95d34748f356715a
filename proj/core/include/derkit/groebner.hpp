#pragma once

#include "derkit/module.hpp"

namespace derkit {

struct GBOptions {
  /// For homogeneous input: drop S-pairs of degree > cap. The result is then
  /// a basis whose ideal/module membership answers are valid up to that
  /// degree only, and `truncated` is set.
  long long degree_cap = -1;
  /// Record gb[i] = sum_k transform[i][k] * gens[k].
  bool track = false;
};

/// Gröbner basis of a submodule of a graded free module, together with the
/// generators it came from. The reduced basis is monic, auto-reduced and
/// sorted ascending by leading term, hence bit-identical for identical input.
struct ModuleGB {
  FreeModule ambient;
  std::shared_ptr<const ModuleOrder> order;
  std::vector<Vec> gens;
  std::vector<Vec> gb;
  std::vector<std::vector<Polynomial>> transform;
  bool truncated = false;
  long long degree_cap = -1;
};

/// Full normal form of v against `basis`; no term of the result is divisible
/// by any leading term. If `quotients` is supplied it receives polynomials
/// q_k with v = sum q_k basis[k] + result.
Vec normal_form(const FreeModule& F, const ModuleOrder& ord, Vec v,
                const std::vector<Vec>& basis, std::vector<Polynomial>* quotients = nullptr);

/// Buchberger's algorithm with the Gebauer-Möller pair update (product
/// criterion in rank one, chain criterion everywhere). Input must be
/// homogeneous when a degree cap is requested.
ModuleGB buchberger(const FreeModule& F, std::vector<Vec> gens, GBOptions opts = {},
                    std::shared_ptr<const ModuleOrder> order = nullptr);

Vec normal_form(const ModuleGB& gb, const Vec& v);
bool in_submodule(const ModuleGB& gb, const Vec& v);

/// Generators of the first syzygy module of the *given* generators (not of
/// the internal Gröbner basis), as elements of a free module whose basis
/// degrees are the generator degrees. Obtained from the reduced basis via
/// Schreyer's construction plus the change-of-basis rows. With a degree cap,
/// the output generates every syzygy of degree <= cap.
std::vector<Vec> syzygy_generators(const FreeModule& F, const std::vector<Vec>& gens,
                                   long long degree_cap = -1);

// --- rank-one conveniences: ideals ---

struct IdealGB {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::vector<Polynomial> gb;
  bool truncated = false;
};

IdealGB ideal_gb(RingPtr ring, const std::vector<Polynomial>& gens, long long degree_cap = -1);
Polynomial nf_ideal(const IdealGB& gb, const Polynomial& f);
bool in_ideal(const IdealGB& gb, const Polynomial& f);
/// Equality of ideals via mutual reduction of reduced bases.
bool ideal_eq(const IdealGB& a, const IdealGB& b);
/// Leading monomials of the reduced basis (the staircase generators).
std::vector<Monomial> leading_monomials(const IdealGB& gb);

std::vector<Vec> syzygies_of_polys(RingPtr ring, const std::vector<Polynomial>& gens,
                                   long long degree_cap = -1);

/// Contraction of a homogeneous ideal to the subring on the kept variables,
/// computed with a block elimination order. Returns the subring and the
/// contraction's generators expressed there.
struct EliminationResult {
  RingPtr subring;
  std::vector<Polynomial> gens;
  std::vector<int> kept;  // indices into the original ring
};
EliminationResult eliminate(const std::vector<Polynomial>& gens, std::vector<int> keep);

}  // namespace derkit
