#pragma once

#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

/// x -> y := x' + L(x,y). Always defined because L(x,y) <= x.
Subset implies(const EffectAlgebra& e, Element x, Element y);

/// A -> B := A' + L(A,B), with L(A,B) the lower cone of A u B.
Subset implies(const EffectAlgebra& e, const Subset& a, const Subset& b);
Subset implies(const EffectAlgebra& e, Element x, const Subset& b);
Subset implies(const EffectAlgebra& e, const Subset& a, Element y);

/// Full n*n table of x -> y.
class ImplicationTable {
 public:
  explicit ImplicationTable(const EffectAlgebra& e);

  std::size_t size() const { return labels_.size(); }
  const Subset& entry(Element x, Element y) const { return cells_[x * size() + y]; }
  const std::vector<std::string>& labels() const { return labels_; }

  bool operator==(const ImplicationTable&) const = default;

 private:
  std::vector<std::string> labels_;
  std::vector<Subset> cells_;
};

ImplicationTable implication_table(const EffectAlgebra& e);

/// Exhaustive check of the twelve implication properties; clause "xii"
/// is skipped unless the induced order is a lattice.
Report theorem2_suite(const EffectAlgebra& e);

/// Exhaustive check of the seven set-argument implication identities.
Report theorem4_suite(const EffectAlgebra& e);

}  // namespace effalg
