#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

inline constexpr std::size_t kMinEnumeration = 2;
inline constexpr std::size_t kMaxEnumeration = 7;
/// Order-constrained searches can go further since the order prunes hard.
inline constexpr std::size_t kMaxConstrainedEnumeration = 9;

struct EnumerationOptions {
  bool up_to_iso = false;
  /// Worker count; 0 reads the THREADS environment variable, else 1.
  unsigned threads = 0;
  /// When set, only algebras whose induced order equals this poset are
  /// produced. Its bottom must be index 0 and its top index n-1.
  const Poset* order = nullptr;
};

/// Algebras are produced with 0 at index 0 and 1 at index n-1, labeled
/// "0", "a", "b", ..., "1" unless an order constraint supplies labels.
struct EnumerationResult {
  std::size_t n = 0;
  bool up_to_iso = false;
  std::vector<EffectAlgebra> algebras;
  std::uint64_t labeled_count = 0;
  std::uint64_t iso_count = 0;
};

/// Backtracking over the upper triangle of the sum table, pruning on E3
/// uniqueness, cancellation, and associativity of fully decided triples.
/// Every emitted table passes validate(). Order is deterministic.
EnumerationResult enumerate_effect_algebras(std::size_t n, const EnumerationOptions& options = {});

inline EnumerationResult enumerate_effect_algebras(std::size_t n, bool up_to_iso) {
  EnumerationOptions o;
  o.up_to_iso = up_to_iso;
  return enumerate_effect_algebras(n, o);
}

/// Encoded sum table after the minimizing relabeling. Equal codes iff isomorphic.
struct CanonicalForm {
  std::vector<std::uint8_t> code;
  /// relabel[x] is the position of x in the canonical table.
  std::vector<Element> relabel;

  bool operator==(const CanonicalForm& o) const { return code == o.code; }
  auto operator<=>(const CanonicalForm& o) const { return code <=> o.code; }
};

inline constexpr std::size_t kMaxCanonical = 9;

/// Minimal table encoding over all 0,1-fixing relabelings that respect the
/// degree and self-complement invariants. Throws std::out_of_range above 9 elements.
CanonicalForm canonical_form(const EffectAlgebra& e);

/// Relabels indices: element x of `e` becomes element sigma[x], keeping its label.
EffectAlgebra permute(const EffectAlgebra& e, const std::vector<Element>& sigma);

/// A bijection sigma with sigma(0)=0, sigma(1)=1 transporting sums exactly.
std::optional<std::vector<Element>> is_isomorphic(const EffectAlgebra& a, const EffectAlgebra& b);

/// Number of sum-preserving bijections of `e` onto itself.
std::uint64_t automorphism_count(const EffectAlgebra& e);

/// "0" for index 0, "1" for index n-1, letters in between.
std::string default_label(std::size_t index, std::size_t n);

}  // namespace effalg
