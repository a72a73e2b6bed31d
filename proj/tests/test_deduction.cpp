#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "effalg/deduction.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/fixtures.hpp"
#include "effalg/implication.hpp"
#include "oracle.hpp"

using namespace effalg;

namespace {

std::vector<std::uint64_t> oracle_systems(const oracle::Table& t) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t.n()); ++bits) {
    std::vector<bool> d(t.n());
    for (int i = 0; i < t.n(); ++i) d[i] = (bits >> i) & 1U;
    if (oracle::deductive(t, d)) out.push_back(bits);
  }
  return out;
}

std::vector<std::uint64_t> bits_of(const std::vector<DeductiveSystem>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& d : v) out.push_back(d.members.bits());
  return out;
}

std::vector<EffectAlgebra> corpus() {
  std::vector<EffectAlgebra> out;
  for (const char* name : {"E9", "E6", "BOOL-2", "BOOL-3", "CHAIN-5"}) out.push_back(load_fixture(name));
  for (std::size_t n = 2; n <= 6; ++n)
    for (auto& e : enumerate_effect_algebras(n, true).algebras) out.push_back(e);
  return out;
}

}  // namespace

TEST_CASE("membership by definition") {
  EffectAlgebra e = load_fixture("E9");
  CHECK(is_deductive_system(e, Subset(9, {8})).deductive);
  CHECK(is_deductive_system(e, Subset(9, {1, 2, 8})).deductive);
  DeductionVerdict d = is_deductive_system(e, Subset(9, {4, 8}));
  CHECK_FALSE(d.deductive);
  // d -> 0 = {d} lies inside but 0 does not
  REQUIRE(d.witness.has_value());
  CHECK(*d.witness == std::pair<Element, Element>{4, 0});
  DeductionVerdict no_one = is_deductive_system(e, Subset(9, {1}));
  CHECK_FALSE(no_one.deductive);
  CHECK(no_one.missing_one);
  CHECK(is_deductive_system(e, e.full_set()).deductive);
}

TEST_CASE("characterization") {
  EffectAlgebra e9 = load_fixture("E9");
  CHECK(characterize(e9, Subset(9, {1, 2, 8})));
  CHECK_FALSE(characterize(e9, Subset(9, {4, 8})));
  EffectAlgebra e6 = load_fixture("E6");
  CHECK_FALSE(characterize(e6, Subset(6, {1, 2, 5})));
  CHECK_THROWS_AS(characterize(e9, e9.full_set()), std::invalid_argument);
  CHECK_THROWS_AS(characterize(e9, Subset(9, {1})), std::invalid_argument);
}

TEST_CASE("characterization agrees with the definition on every subset") {
  for (const auto& e : corpus()) {
    oracle::Table t = oracle::from(e);
    const std::size_t n = e.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      Subset d(n, bits);
      std::vector<bool> raw(n);
      for (std::size_t i = 0; i < n; ++i) raw[i] = d.contains(static_cast<Element>(i));
      const bool direct = is_deductive_system(e, d).deductive;
      CHECK(direct == oracle::deductive(t, raw));
      if (!d.contains(e.one()) || d == e.full_set()) continue;
      CHECK(direct == characterize(e, d));
      if (!direct) continue;
      // no a in D has a -> b inside D
      for (Element a : d)
        for (Element b = 0; b < n; ++b) CHECK_FALSE(implies(e, a, b).is_subset_of(d));
    }
  }
}

TEST_CASE("enumeration") {
  EffectAlgebra e9 = load_fixture("E9");
  auto systems = enumerate_ded(e9);
  CHECK(systems.size() == 28);
  CHECK(systems.front().members == Subset(9, {8}));
  CHECK(systems.back().members == e9.full_set());
  CHECK(enumerate_ded(load_fixture("E6")).size() == 10);
  auto two = enumerate_ded(chain_to_ea(2));
  REQUIRE(two.size() == 2);
  CHECK(two[0].members == Subset(2, {1}));
  CHECK(two[1].members == Subset(2, {0, 1}));

  for (const auto& e : corpus()) {
    auto brute = enumerate_ded_brute_force(e);
    auto pairs = enumerate_ded_by_pairs(e);
    CHECK(bits_of(brute) == bits_of(pairs));
    auto expected = oracle_systems(oracle::from(e));
    auto got = bits_of(brute);
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
    // sorted by size, then bits
    for (std::size_t i = 1; i < brute.size(); ++i) {
      const auto& a = brute[i - 1].members;
      const auto& b = brute[i].members;
      CHECK((a.size() < b.size() || (a.size() == b.size() && a.bits() < b.bits())));
    }
    // closed under intersection
    for (const auto& a : brute)
      for (const auto& b : brute)
        CHECK(std::find(got.begin(), got.end(), (a.members & b.members).bits()) != got.end());
  }
  // above the scan limit only the pair construction runs
  EffectAlgebra big = load_fixture("BOOL-6");
  CHECK_THROWS_AS(enumerate_ded_brute_force(big), std::length_error);
  // no self-complementary elements: each of the 62 middle elements gives an atom
  CHECK(atoms(big).size() == 62);
}

TEST_CASE("lattice of deductive systems") {
  EffectAlgebra e = load_fixture("E9");
  DedLattice l = ded_lattice(e);
  REQUIRE(l.systems.size() == 28);
  CHECK(l.systems[l.bottom].members == Subset(9, {8}));
  CHECK(l.systems[l.top].members == e.full_set());
  CHECK(l.complete);
  const std::size_t a = *l.index_of(Subset(9, {1, 8}));
  const std::size_t b = *l.index_of(Subset(9, {2, 8}));
  const std::size_t g = *l.index_of(Subset(9, {7, 8}));
  CHECK(l.meet(a, b) == l.bottom);
  CHECK(l.join(a, g) == l.top);
  CHECK(l.systems[l.join(a, b)].members == Subset(9, {1, 2, 8}));

  // meets are intersections, joins the least system above both
  for (std::size_t i = 0; i < l.systems.size(); ++i)
    for (std::size_t j = 0; j < l.systems.size(); ++j) {
      const Subset both = l.systems[i].members | l.systems[j].members;
      CHECK(l.systems[l.meet(i, j)].members == (l.systems[i].members & l.systems[j].members));
      std::optional<std::size_t> least;
      for (std::size_t k = 0; k < l.systems.size(); ++k)
        if (both.is_subset_of(l.systems[k].members) &&
            (!least || l.systems[k].members.is_subset_of(l.systems[*least].members)))
          least = k;
      CHECK(l.join(i, j) == least);
    }

  DedLattice l6 = ded_lattice(load_fixture("E6"));
  CHECK(l6.complete);
  CHECK(l6.exhaustive);
}

TEST_CASE("atoms") {
  EffectAlgebra e9 = load_fixture("E9");
  auto at = atoms(e9);
  std::vector<Subset> expected;
  for (Element x : {1, 2, 3, 5, 6, 7}) expected.push_back(Subset(9, {x, 8}));
  REQUIRE(at.size() == 6);
  for (std::size_t i = 0; i < 6; ++i) CHECK(at[i].members == expected[i]);

  DedLattice l = ded_lattice(e9);
  std::vector<Subset> covers;
  for (std::size_t i : l.covers_of(l.bottom)) covers.push_back(l.systems[i].members);
  CHECK(covers == expected);

  CHECK(atoms(load_fixture("E6")).size() == 4);
  CHECK(atoms(chain_to_ea(2)).empty());
  // the 3-chain has only a self-complementary middle element
  CHECK(atoms(chain_to_ea(3)).empty());
}

TEST_CASE("generated systems") {
  EffectAlgebra e = load_fixture("E9");
  CHECK(generate(e, Subset(9, {1, 2})).members == Subset(9, {1, 2, 8}));
  CHECK(generate(e, Subset(9, {1, 7})).members == e.full_set());
  CHECK(generate(e, Subset(9, {0})).members == e.full_set());
  CHECK(generate(e, e.empty_set()).members == Subset(9, {8}));

  for (const auto& alg : corpus()) {
    if (alg.size() > 9) continue;
    auto systems = enumerate_ded(alg);
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << alg.size()); ++bits) {
      Subset m(alg.size(), bits);
      Subset least = alg.full_set();
      for (const auto& d : systems)
        if (m.is_subset_of(d.members)) least &= d.members;
      CHECK(generate(alg, m).members == least);
    }
  }
}
