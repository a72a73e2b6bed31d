#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

/// A subset containing 1 and closed under the unsharp Modus Ponens rule:
/// x in D and x->y inside D imply y in D.
struct DeductiveSystem {
  Subset members;

  bool operator==(const DeductiveSystem&) const = default;
};

struct DeductionVerdict {
  bool deductive = false;
  bool missing_one = false;
  /// First (x,y) with x in D, x->y inside D, and y not in D.
  std::optional<std::pair<Element, Element>> witness;
};

/// Direct check of both defining conditions.
DeductionVerdict is_deductive_system(const EffectAlgebra& e, const Subset& d);

/// D & D' is empty. Throws std::invalid_argument unless D is proper and contains 1.
bool characterize(const EffectAlgebra& e, const Subset& d);

/// Largest carrier scanned subset-by-subset; larger ones use the pair construction.
inline constexpr std::size_t kBruteForceDedLimit = 20;

/// All deductive systems ordered by cardinality, then by bit pattern.
std::vector<DeductiveSystem> enumerate_ded(const EffectAlgebra& e);

/// Brute-force scan of all 2^n subsets; throws std::length_error above kBruteForceDedLimit.
std::vector<DeductiveSystem> enumerate_ded_brute_force(const EffectAlgebra& e);

/// Pair construction: at most one element of each pair {x,x'} with x != x',
/// never 0 or a self-complementary element, plus E itself.
std::vector<DeductiveSystem> enumerate_ded_by_pairs(const EffectAlgebra& e);

/// (Ded(E), inclusion) with meets and joins indexed into `systems`.
struct DedLattice {
  std::vector<DeductiveSystem> systems;
  std::size_t bottom = 0;
  std::size_t top = 0;
  /// Every family of systems has an infimum and supremum inside Ded(E).
  bool complete = false;
  /// False when completeness was checked on sampled families only.
  bool exhaustive = true;

  std::optional<std::size_t> index_of(const Subset& members) const;
  std::size_t meet(std::size_t i, std::size_t j) const;
  std::size_t join(std::size_t i, std::size_t j) const;
  /// Indices of systems covering `i` in the inclusion order.
  std::vector<std::size_t> covers_of(std::size_t i) const;
};

DedLattice ded_lattice(const EffectAlgebra& e);

/// {1,x} for x outside {0,1} with x' != x. Empty when no such x exists.
std::vector<DeductiveSystem> atoms(const EffectAlgebra& e);

/// M u {1} if M & M' is empty and 0 is not in M, else E.
DeductiveSystem generate(const EffectAlgebra& e, const Subset& m);

}  // namespace effalg
