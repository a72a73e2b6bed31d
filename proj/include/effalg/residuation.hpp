#pragma once

#include <optional>
#include <tuple>
#include <vector>

#include "effalg/effect_algebra.hpp"
#include "effalg/implication.hpp"

namespace effalg {

/// Candidate or validated strict unsharp residuated poset: a bounded poset
/// with antitone involution, a partial product table and a subset-valued
/// implication table. `validated` and `divisible` are set by validate_surp.
struct UnsharpResiduatedPoset {
  Poset poset;
  Involution inv;
  std::vector<std::optional<Element>> product;  // n*n, nullopt = undefined
  std::vector<Subset> imp;                      // n*n
  bool divisible = false;
  bool validated = false;

  std::size_t size() const { return poset.size(); }
  std::optional<Element> op(Element x, Element y) const { return product[x * size() + y]; }
  std::optional<Element>& op(Element x, Element y) { return product[x * size() + y]; }
  const Subset& implies(Element x, Element y) const { return imp[x * size() + y]; }
  Subset& implies(Element x, Element y) { return imp[x * size() + y]; }
};

struct SurpValidation {
  UnsharpResiduatedPoset structure;
  /// Clauses C1, C2:*, C3, C4. Divisibility is reported separately since
  /// it is a property, not a validity condition.
  Report report;
  /// First (x,y) for which x.(x->y) differs from L(x,y), if any.
  std::optional<std::pair<Element, Element>> divisibility_witness;

  bool ok() const { return report.ok(); }
};

/// Exhaustive check of (C1)-(C4); sets `divisible` from (C5).
SurpValidation validate_surp(UnsharpResiduatedPoset candidate);

/// Elementwise product {w.y | w in A}; nullopt if some product is undefined.
std::optional<Subset> product_image(const UnsharpResiduatedPoset& c, const Subset& a, Element y);

/// Evaluates the dual adjointness (C3') on every triple and compares it
/// outcome-by-outcome with (C3).
Report check_dual_adjointness(const UnsharpResiduatedPoset& c);

/// C(E): the product x.y = (x'+y')' and implication x' + L(x,y) over E's order.
/// Not yet validated.
UnsharpResiduatedPoset from_effect_algebra(const EffectAlgebra& e);

/// E(C): x+y := (x'.y')' if and only if x <= y'. The outcome report adds a
/// clause checking that the induced order equals the order of `c`.
ValidationOutcome to_effect_algebra(const UnsharpResiduatedPoset& c);

struct TableDiff {
  Element x;
  Element y;
  std::optional<Element> original;
  std::optional<Element> rebuilt;
};

struct RoundtripResult {
  bool equal = false;
  std::vector<TableDiff> diff;
  /// Set when E(C(E)) failed to validate.
  std::optional<Report> failure;
};

/// Compares the sum table of E(C(E)) with E entrywise (label-preserving).
RoundtripResult roundtrip_check(const EffectAlgebra& e);

/// C(E(C)) == C, comparing order, involution, product and implication tables.
/// Reported as an observation; not guaranteed for arbitrary validated C.
bool reconstructs(const UnsharpResiduatedPoset& c);

/// Triple-by-triple: the (C3) biconditional at (a,b,c) and the implication
/// property (xi) at (b,a',c), which the equivalence proof pairs up.
Report equivalence_c3_xi(const EffectAlgebra& e);

}  // namespace effalg
