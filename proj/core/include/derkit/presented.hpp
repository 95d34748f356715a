#pragma once

#include <optional>

#include "derkit/hilbert.hpp"

namespace derkit {

/// Finitely presented graded module, given by generator degrees and relation
/// columns in the free module on those generators. When the module lives
/// over a quotient ring R = S/I, `over` records I and the relation list is
/// complete (it contains the I-multiples of the generators, explicitly or as
/// consequences). Optional concrete representatives embed the generators in
/// an ambient free module; they are carried through minimalization.
struct PresentedModule {
  RingPtr ring;
  std::vector<Polynomial> over;
  std::vector<long long> gen_deg;
  std::vector<Vec> rels;

  std::optional<FreeModule> ambient;
  std::vector<Vec> reps;

  FreeModule pres_free() const { return free_module(ring, gen_deg); }
  int ngens() const { return (int)gen_deg.size(); }
};

PresentedModule presented_from_matrix(RingPtr ring, std::vector<long long> gen_deg,
                                      std::vector<Vec> rel_cols,
                                      std::vector<Polynomial> over = {},
                                      bool add_over_multiples = false);

/// Presentation of (U + V)/V inside the ambient free module. Generators are
/// the images of `u`; relations are all coefficient vectors a with
/// sum a_i u_i in <V>. Membership of I-multiples is found by the syzygy
/// computation itself when V contains I times the ambient basis (or when the
/// quotient is genuinely an R-module).
PresentedModule subquotient(const FreeModule& ambient, std::vector<Vec> u, std::vector<Vec> v,
                            std::vector<Polynomial> over = {});

/// Gaussian cancellation of degree-zero unit entries in the relation matrix;
/// the result has minimal generators (entries of the matrix lie in the
/// irrelevant ideal). Representatives are pruned along.
PresentedModule minimalize(const PresentedModule& m);

/// Hilbert function of the cokernel in degrees lo..hi.
std::vector<long long> module_hf(const PresentedModule& m, long long lo, long long hi);

/// Least degree of a nonzero element; nullopt for the zero module.
std::optional<long long> module_indeg(const PresentedModule& m);
std::vector<long long> minimal_gen_degrees(const PresentedModule& m);
bool module_is_zero(const PresentedModule& m);

/// Drop generators lying in the submodule spanned by the others; for
/// homogeneous input the survivors are a minimal generating set.
std::vector<Vec> prune_redundant(const FreeModule& F, std::vector<Vec> gens);

/// Minimal graded free resolution (of the cokernel of a presentation, or of
/// S/I). steps[i] holds the columns of the map F_{i+1} -> F_i; shifts[i] the
/// generator degrees of F_i.
struct FreeResolution {
  RingPtr ring;
  std::vector<std::vector<long long>> shifts;
  std::vector<std::vector<Vec>> steps;

  int length() const { return (int)steps.size(); }
  /// betti[i] = sorted generator degrees of F_i
  const std::vector<long long>& betti_row(int i) const { return shifts[i]; }
  long long regularity() const;
  std::string betti_string() const;
};

FreeResolution free_resolution(const PresentedModule& m);
FreeResolution free_resolution_quotient(const RingPtr& ring, const std::vector<Polynomial>& ideal);

/// Consecutive maps compose to zero and no unit entries remain.
bool resolution_is_valid(const FreeResolution& res);

}  // namespace derkit
