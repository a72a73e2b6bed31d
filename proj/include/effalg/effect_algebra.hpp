#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "effalg/poset.hpp"
#include "effalg/report.hpp"
#include "effalg/subset.hpp"

namespace effalg {

/// Raw partial-sum table over a labeled carrier, before any axiom check.
/// Entry sum[x*n+y] is the value of x+y, or nullopt when undefined.
struct PartialTable {
  std::vector<std::string> labels;
  Element zero = 0;
  Element one = 0;
  std::vector<std::optional<Element>> sum;
  /// Either empty or one entry per element; cross-checked against the
  /// complements derived from the sum table.
  std::vector<std::optional<Element>> declared_complement;

  std::size_t size() const { return labels.size(); }
  std::optional<Element> at(Element x, Element y) const { return sum[x * size() + y]; }
  std::optional<Element>& at(Element x, Element y) { return sum[x * size() + y]; }

  /// Empty table over `labels` with x+0 = 0+x = x filled in.
  static PartialTable with_zero_rows(std::vector<std::string> labels, Element zero, Element one);

  bool operator==(const PartialTable&) const = default;
};

/// Raised when a set operation is applied outside its domain, e.g. x+A with A not below x'.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(const std::string& what, std::vector<Element> witness)
      : std::invalid_argument(what), witness_(std::move(witness)) {}
  const std::vector<Element>& witness() const { return witness_; }

 private:
  std::vector<Element> witness_;
};

struct ValidationOutcome;

/// A validated finite effect algebra. Only obtainable through validate(),
/// so every instance satisfies (E1)-(E4) and carries its induced order.
class EffectAlgebra {
 public:
  std::size_t size() const { return labels_.size(); }
  Element zero() const { return zero_; }
  Element one() const { return one_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }

  std::optional<Element> sum(Element x, Element y) const {
    std::uint8_t v = sum_[x * size() + y];
    if (v == kUndefined) return std::nullopt;
    return Element{v};
  }
  bool defined(Element x, Element y) const { return sum_[x * size() + y] != kUndefined; }
  Element comp(Element x) const { return comp_[x]; }

  const Poset& order() const { return order_; }
  bool leq(Element x, Element y) const { return order_.leq(x, y); }
  bool lattice() const { return lattice_; }

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }
  Subset singleton(Element x) const { return Subset::single(size(), x); }

  /// The sum table in raw form, complements left undeclared.
  PartialTable table() const;

  /// Label-preserving equality of the sum tables.
  bool operator==(const EffectAlgebra& o) const {
    return labels_ == o.labels_ && zero_ == o.zero_ && one_ == o.one_ && sum_ == o.sum_;
  }

 private:
  friend ValidationOutcome validate(const PartialTable& table);
  static constexpr std::uint8_t kUndefined = 0xFF;

  EffectAlgebra(const PartialTable& t, std::vector<Element> comp, Poset order);

  std::vector<std::string> labels_;
  Element zero_;
  Element one_;
  std::vector<std::uint8_t> sum_;
  std::vector<Element> comp_;
  Poset order_;
  bool lattice_;
};

struct ValidationOutcome {
  std::optional<EffectAlgebra> algebra;
  Report report;

  bool ok() const { return algebra.has_value(); }
};

/// Checks E1, E4, E3, the order axioms of the induced relation, then E2.
/// The first failing axiom short-circuits; later ones are marked skipped.
ValidationOutcome validate(const PartialTable& table);

/// Like validate(), but throws std::invalid_argument with the report on failure.
EffectAlgebra make_effect_algebra(const PartialTable& table);

/// The induced order x <= y iff x+z = y for some z.
Poset induced_order(const EffectAlgebra& e);

Element complement(const EffectAlgebra& e, Element x);

/// x.y = (x'+y')', defined exactly when x' <= y.
std::optional<Element> odot(const EffectAlgebra& e, Element x, Element y);

/// {x.w | w in A}; throws PreconditionError if some product is undefined.
Subset odot(const EffectAlgebra& e, Element x, const Subset& a);

/// A' = {x' | x in A}
Subset set_complement(const EffectAlgebra& e, const Subset& a);

/// x+A; requires A <= x'.
Subset add_elem_set(const EffectAlgebra& e, Element x, const Subset& a);

/// A+B; requires A <= B'.
Subset add_sets(const EffectAlgebra& e, const Subset& a, const Subset& b);

Report check_lemma1(const EffectAlgebra& e);
Report check_lemma2(const EffectAlgebra& e);

struct MonotonicityResult {
  bool holds = true;
  /// False when the subset pairs were sampled rather than exhausted.
  bool exhaustive = true;
  std::optional<Element> witness_x;
  std::optional<Subset> witness_a;
  std::optional<Subset> witness_b;
};

/// if A,B <= x' and L(A) <= U(B) then L(x+A) <= U(x+B), for all x and nonempty A, B.
/// Exhaustive over subset pairs for carriers of at most 9 elements.
MonotonicityResult is_monotonous(const EffectAlgebra& e, std::size_t samples_per_element = 20000);

}  // namespace effalg
