#pragma once

#include <map>

#include "derkit/families.hpp"

namespace derkit {

/// Exact rational for bound arithmetic; values stay tiny.
struct Fraction {
  long long num = 0;
  long long den = 1;

  Fraction() = default;
  Fraction(long long n) : num(n), den(1) {}
  Fraction(long long n, long long d);

  Fraction operator+(const Fraction& o) const;
  Fraction operator-(const Fraction& o) const;
  Fraction operator*(const Fraction& o) const;
  Fraction operator/(const Fraction& o) const;
  bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
  bool operator<(const Fraction& o) const;
  bool operator<=(const Fraction& o) const { return *this < o || *this == o; }

  std::string str() const;
};

Fraction fraction_max(const Fraction& a, const Fraction& b);
Fraction fraction_min(const Fraction& a, const Fraction& b);

enum class TheoremId {
  HYPER,
  PC,
  CURVES,
  CURVES_NODES,
  SMOOTH,
  SMOOTH_GOR,
  DPW,
  DPW_EK_A,
  DPW_EK_B,
  TURINA_A,
  TURINA_B,
  UB_A,
  UB_B,
  UB_C,
  UB_D,
  UB_E,
  RTYPE_BOUND,
  EQUALITY,
  CURVEIN3_INDEG,
  GP_SANDWICH,
};

const char* theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(const std::string& name);
std::vector<TheoremId> all_theorem_ids();

struct Hypothesis {
  std::string name;
  std::string required;
  std::string observed;
  bool pass = false;
};

enum class Relation { GE, LE, EQ };
enum class Verdict { Holds, Fails, Inapplicable };

const char* relation_str(Relation r);
const char* verdict_str(Verdict v);

/// One theorem instance: hypothesis checklist, the invariants consumed (with
/// their routes), both sides of the relation and the verdict. A "Fails" on
/// an applicable instance indicates an engine bug, never new mathematics.
struct BoundReport {
  TheoremId id{};
  std::vector<Hypothesis> hypotheses;
  std::map<std::string, std::string> inputs;
  Fraction lhs, rhs;
  Relation rel = Relation::GE;
  Verdict verdict = Verdict::Inapplicable;
  std::uint64_t seed = 0;
  std::string note;

  bool applicable() const { return verdict != Verdict::Inapplicable; }
  std::string to_json() const;
  std::string one_line() const;
};

/// Pure arithmetic: evaluate one theorem against an already-computed
/// invariant report. Missing inputs make the instance inapplicable, never a
/// guess.
BoundReport evaluate_bound(TheoremId id, const InvariantReport& inv);

struct CheckOptions {
  std::vector<TheoremId> ids;  // empty = all
  std::uint64_t seed = 1;
  bool with_projection = false;  // include GP_SANDWICH (runs a projection)
};

struct CheckResult {
  InvariantReport invariants;
  std::vector<BoundReport> reports;
  bool all_applicable_hold = true;
};

/// Analyze the curve, compute invariants and the derivation module, then
/// evaluate the requested theorem instances.
CheckResult check_curve(const CurveSpec& spec, const CheckOptions& opts);
CheckResult check_family(const FamilyCurve& fam, const CheckOptions& opts);

std::string reports_to_json(const CheckResult& result);

}  // namespace derkit
