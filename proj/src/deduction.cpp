#include "effalg/deduction.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "effalg/implication.hpp"

namespace effalg {

namespace {

// Closure check against a precomputed implication table.
DeductionVerdict check_closed(const EffectAlgebra& e, const ImplicationTable& imp, const Subset& d) {
  DeductionVerdict v;
  if (!d.contains(e.one())) {
    v.missing_one = true;
    return v;
  }
  const std::size_t n = e.size();
  for (Element x : d)
    for (Element y = 0; y < n; ++y)
      if (!d.contains(y) && imp.entry(x, y).is_subset_of(d)) {
        v.witness = std::make_pair(x, y);
        return v;
      }
  v.deductive = true;
  return v;
}

void sort_canonical(std::vector<DeductiveSystem>& systems) {
  std::sort(systems.begin(), systems.end(), [](const DeductiveSystem& a, const DeductiveSystem& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members.bits() < b.members.bits();
  });
}

}  // namespace

DeductionVerdict is_deductive_system(const EffectAlgebra& e, const Subset& d) {
  if (d.carrier_size() != e.size()) throw std::invalid_argument("subset carrier does not match algebra");
  return check_closed(e, ImplicationTable(e), d);
}

bool characterize(const EffectAlgebra& e, const Subset& d) {
  if (d.carrier_size() != e.size()) throw std::invalid_argument("subset carrier does not match algebra");
  if (!d.contains(e.one())) throw std::invalid_argument("characterization needs 1 in D");
  if (d.is_full()) throw std::invalid_argument("characterization needs a proper subset; E is always deductive");
  return !d.intersects(set_complement(e, d));
}

std::vector<DeductiveSystem> enumerate_ded_brute_force(const EffectAlgebra& e) {
  const std::size_t n = e.size();
  if (n > kBruteForceDedLimit) throw std::length_error("carrier too large for subset scan");
  const ImplicationTable imp(e);
  std::vector<DeductiveSystem> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Subset d(n, bits);
    if (check_closed(e, imp, d).deductive) out.push_back({d});
  }
  sort_canonical(out);
  return out;
}

std::vector<DeductiveSystem> enumerate_ded_by_pairs(const EffectAlgebra& e) {
  const std::size_t n = e.size();
  std::vector<Element> reps;
  for (Element x = 0; x < n; ++x) {
    const Element xc = e.comp(x);
    if (x == e.zero() || x == e.one() || xc == x) continue;
    if (x < xc) reps.push_back(x);
  }
  // Each pair contributes none, x, or x'.
  std::vector<DeductiveSystem> out;
  std::vector<int> choice(reps.size(), 0);
  while (true) {
    Subset d = e.singleton(e.one());
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (choice[i] == 1) d.insert(reps[i]);
      else if (choice[i] == 2) d.insert(e.comp(reps[i]));
    if (!d.is_full()) out.push_back({d});
    std::size_t i = 0;
    while (i < choice.size() && choice[i] == 2) choice[i++] = 0;
    if (i == choice.size()) break;
    ++choice[i];
  }
  out.push_back({e.full_set()});
  sort_canonical(out);
  return out;
}

std::vector<DeductiveSystem> enumerate_ded(const EffectAlgebra& e) {
  if (e.size() <= kBruteForceDedLimit) return enumerate_ded_brute_force(e);
  return enumerate_ded_by_pairs(e);
}

std::optional<std::size_t> DedLattice::index_of(const Subset& members) const {
  for (std::size_t i = 0; i < systems.size(); ++i)
    if (systems[i].members == members) return i;
  return std::nullopt;
}

namespace {

// Greatest system inside `bound` (intersection of a family).
std::optional<std::size_t> greatest_below(const std::vector<DeductiveSystem>& s, const Subset& bound) {
  Subset all_lower = Subset::empty(bound.carrier_size());
  for (const auto& d : s)
    if (d.members.is_subset_of(bound)) all_lower |= d.members;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].members == all_lower) return i;
  return std::nullopt;
}

// Least system containing `bound` (union of a family).
std::optional<std::size_t> least_above(const std::vector<DeductiveSystem>& s, const Subset& bound) {
  Subset all_upper = Subset::full(bound.carrier_size());
  for (const auto& d : s)
    if (bound.is_subset_of(d.members)) all_upper &= d.members;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i].members == all_upper) return i;
  return std::nullopt;
}

}  // namespace

std::size_t DedLattice::meet(std::size_t i, std::size_t j) const {
  auto k = greatest_below(systems, systems.at(i).members & systems.at(j).members);
  if (!k) throw std::logic_error("deductive systems without meet");
  return *k;
}

std::size_t DedLattice::join(std::size_t i, std::size_t j) const {
  auto k = least_above(systems, systems.at(i).members | systems.at(j).members);
  if (!k) throw std::logic_error("deductive systems without join");
  return *k;
}

std::vector<std::size_t> DedLattice::covers_of(std::size_t i) const {
  std::vector<std::size_t> out;
  const Subset& base = systems.at(i).members;
  for (std::size_t j = 0; j < systems.size(); ++j) {
    const Subset& up = systems[j].members;
    if (up == base || !base.is_subset_of(up)) continue;
    bool between = false;
    for (std::size_t k = 0; k < systems.size() && !between; ++k) {
      const Subset& mid = systems[k].members;
      between = mid != base && mid != up && base.is_subset_of(mid) && mid.is_subset_of(up);
    }
    if (!between) out.push_back(j);
  }
  return out;
}

DedLattice ded_lattice(const EffectAlgebra& e) {
  DedLattice lat;
  lat.systems = enumerate_ded(e);
  const auto& s = lat.systems;
  const std::size_t n = e.size();
  auto bottom = greatest_below(s, e.singleton(e.one()));
  auto top = least_above(s, e.full_set());
  lat.complete = bottom && top && s[*bottom].members == e.singleton(e.one()) && s[*top].members.is_full();
  if (!lat.complete) return lat;
  lat.bottom = *bottom;
  lat.top = *top;

  auto family_ok = [&](std::uint64_t family) {
    Subset inter = Subset::full(n), uni = Subset::empty(n);
    for (std::size_t i = 0; i < s.size(); ++i)
      if ((family >> i) & 1U) {
        inter &= s[i].members;
        uni |= s[i].members;
      }
    return greatest_below(s, inter).has_value() && least_above(s, uni).has_value();
  };

  // Pairwise meets and joins plus bounds already make a finite poset complete;
  // the family scan below checks completeness directly.
  for (std::size_t i = 0; i < s.size() && lat.complete; ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!family_ok((std::uint64_t{1} << i) | (std::uint64_t{1} << j))) {
        lat.complete = false;
        break;
      }

  constexpr std::size_t kExhaustiveFamilies = 20;
  if (s.size() <= kExhaustiveFamilies) {
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << s.size()) && lat.complete; ++f)
      lat.complete = family_ok(f);
  } else if (s.size() <= 64) {
    lat.exhaustive = false;
    std::mt19937_64 rng(0xded);
    for (int k = 0; k < 20000 && lat.complete; ++k) {
      std::uint64_t f = rng() & Subset::mask(s.size());
      lat.complete = family_ok(f);
    }
  } else {
    lat.exhaustive = false;
  }
  return lat;
}

std::vector<DeductiveSystem> atoms(const EffectAlgebra& e) {
  std::vector<DeductiveSystem> out;
  for (Element x = 0; x < e.size(); ++x) {
    if (x == e.zero() || x == e.one() || e.comp(x) == x) continue;
    Subset d = e.singleton(e.one());
    d.insert(x);
    out.push_back({d});
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.members.bits() < b.members.bits(); });

  if (e.size() <= kBruteForceDedLimit) {
    DedLattice lat = ded_lattice(e);
    std::vector<DeductiveSystem> covers;
    // Without atom candidates Ded(E) = {{1}, E}; E is then the only cover.
    for (std::size_t i : lat.covers_of(lat.bottom))
      if (!lat.systems[i].members.is_full()) covers.push_back(lat.systems[i]);
    std::sort(covers.begin(), covers.end(),
              [](const auto& a, const auto& b) { return a.members.bits() < b.members.bits(); });
    if (covers != out) throw std::logic_error("atoms disagree with covers of {1} in Ded(E)");
  }
  return out;
}

DeductiveSystem generate(const EffectAlgebra& e, const Subset& m) {
  if (m.carrier_size() != e.size()) throw std::invalid_argument("subset carrier does not match algebra");
  if (m.contains(e.zero()) || m.intersects(set_complement(e, m))) return {e.full_set()};
  Subset d = m;
  d.insert(e.one());
  return {d};
}

}  // namespace effalg
