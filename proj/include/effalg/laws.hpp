#pragma once

#include <optional>
#include <string>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

struct FailingPair {
  Element x;
  Element y;
  Subset lhs;
  Subset rhs;
  bool comparable = false;
  /// Diagnostic only: whether the raw sets (not their cones) coincide.
  bool raw_equal = false;
};

struct LawReport {
  std::string law;
  bool holds_globally = true;
  std::vector<FailingPair> failing_pairs;
  /// True when every failing pair is incomparable.
  bool comparable_only_status = true;
};

struct ContrapositionResult {
  bool holds = false;
  Subset lhs;  // U(a->b)
  Subset rhs;  // U(b'->a')
};

/// Unsharp contraposition at (a,b): U(a->b) == U(b'->a').
ContrapositionResult contraposition_pair(const EffectAlgebra& e, Element a, Element b);

/// Every pair violating the unsharp contraposition law, annotated with comparability.
LawReport counterexample_search(const EffectAlgebra& e);

/// Contraposition on all comparable pairs; on lattices also the variant
/// U(x->y) == U((x^y)'->x').
Report check_prop1(const EffectAlgebra& e);

class NotALattice : public std::invalid_argument {
 public:
  NotALattice() : std::invalid_argument("effect algebra is not lattice-ordered") {}
};

/// x' + (x^y) == y + (x'^y') on all pairs. Throws NotALattice.
LawReport identity_equ1(const EffectAlgebra& e);

struct Prop2Result {
  bool contraposition_holds = false;
  bool identity_holds = false;
  bool agree() const { return contraposition_holds == identity_holds; }
};

/// Global truth of contraposition vs the identity; throws NotALattice.
Prop2Result check_prop2_equivalence(const EffectAlgebra& e);

inline constexpr unsigned kMaxBooleanAtoms = 6;

/// Boolean algebra with `atoms` atoms, x+y := x v y iff x <= y'.
/// Element i is the atom set with bit pattern i; 0 and 1 are the bounds.
EffectAlgebra boolean_to_ea(unsigned atoms);

struct IntroAdjointnessResult {
  bool holds_globally = true;
  std::optional<std::vector<Element>> failing_triple;
  MonotonicityResult monotonicity;
};

/// L(U(x,y').y) <= UL(y,z) iff LU(x,y') <= U(y->z) on every triple, recorded
/// together with the monotonicity status of `e`.
IntroAdjointnessResult check_intro_adjointness(const EffectAlgebra& e);

}  // namespace effalg
