#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "effalg/report.hpp"
#include "effalg/subset.hpp"

namespace effalg {

/// Finite bounded poset with at most 64 labeled elements. Immutable once built.
class Poset {
 public:
  /// Builds a poset from a row-major n*n order matrix (leq[x*n+y] is x <= y).
  /// Throws std::invalid_argument when the relation is not a bounded
  /// partial order or the labels are not distinct.
  Poset(std::vector<std::string> labels, const std::vector<bool>& leq, Element bottom, Element top);

  /// Same checks as the constructor, returned as a report instead of thrown.
  static Report check_order(const std::vector<std::string>& labels, const std::vector<bool>& leq,
                            Element bottom, Element top);

  std::size_t size() const { return labels_.size(); }
  Element bottom() const { return bottom_; }
  Element top() const { return top_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> index_of(const std::string& label) const;

  bool leq(Element x, Element y) const { return ((up_[x] >> y) & 1U) != 0; }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }

  /// {y | x <= y}
  Subset up_set(Element x) const { return Subset(size(), up_[x]); }
  /// {y | y <= x}
  Subset down_set(Element x) const { return Subset(size(), down_[x]); }

  Subset empty_set() const { return Subset::empty(size()); }
  Subset full_set() const { return Subset::full(size()); }
  Subset singleton(Element x) const { return Subset::single(size(), x); }

  std::vector<bool> matrix() const;

  bool operator==(const Poset& o) const {
    return labels_ == o.labels_ && up_ == o.up_ && bottom_ == o.bottom_ && top_ == o.top_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::uint64_t> up_;
  std::vector<std::uint64_t> down_;
  Element bottom_ = 0;
  Element top_ = 0;
};

/// An antitone involution, given as the image of each element.
struct Involution {
  std::vector<Element> map;

  Element operator()(Element x) const { return map.at(x); }
  bool operator==(const Involution&) const = default;
};

/// L(A) = {x | x <= y for all y in A}; L(empty) is the whole carrier.
Subset lower_cone(const Poset& p, const Subset& a);
/// U(A) = {x | y <= x for all y in A}; U(empty) is the whole carrier.
Subset upper_cone(const Poset& p, const Subset& a);

inline Subset lower_cone(const Poset& p, Element x, Element y) {
  return p.down_set(x) & p.down_set(y);
}
inline Subset upper_cone(const Poset& p, Element x, Element y) {
  return p.up_set(x) & p.up_set(y);
}

/// A <= B: every member of A is below every member of B. Vacuous on empty sides.
bool set_leq(const Poset& p, const Subset& a, const Subset& b);

bool comparable(const Poset& p, Element x, Element y);

/// [a,b] = U(a) & L(b)
inline Subset interval(const Poset& p, Element a, Element b) { return p.up_set(a) & p.down_set(b); }

/// Clauses: permutation, involutive, antitone, bounds.
Report validate_involution(const Poset& p, const Involution& inv);

/// Covering pairs (x,y): x < y with nothing strictly between. Sorted.
std::vector<std::pair<Element, Element>> hasse_edges(const Poset& p);

std::optional<Element> meet(const Poset& p, Element x, Element y);
std::optional<Element> join(const Poset& p, Element x, Element y);
bool is_lattice(const Poset& p);

}  // namespace effalg
