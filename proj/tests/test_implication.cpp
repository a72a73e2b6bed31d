#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "effalg/emit.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/fixtures.hpp"
#include "effalg/implication.hpp"
#include "oracle.hpp"

using namespace effalg;

namespace {

std::vector<EffectAlgebra> small_algebras() {
  std::vector<EffectAlgebra> out;
  for (std::size_t n = 2; n <= 6; ++n)
    for (auto& e : enumerate_effect_algebras(n, true).algebras) out.push_back(e);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("single implications on E9") {
  EffectAlgebra e = load_fixture("E9");
  CHECK(implies(e, 1, 4) == Subset(9, {7}));           // a -> d = {g}
  CHECK(implies(e, 6, 5) == Subset(9, {2, 4, 5}));     // f -> e = {b,d,e}
  CHECK(implies(e, 5, 1) == Subset(9, {3, 6}));        // e -> a = {c,f}
  CHECK(implies(e, 7, 3) == Subset(9, {1, 6}));        // g -> c = {a,f}
  for (Element b = 0; b < 9; ++b) CHECK(implies(e, 0, b) == Subset(9, {8}));
}

TEST_CASE("implication against the definition") {
  std::vector<EffectAlgebra> all = small_algebras();
  for (const char* name : {"E9", "E6", "BOOL-3"}) all.push_back(load_fixture(name));
  for (const auto& e : all) {
    oracle::Table t = oracle::from(e);
    ImplicationTable table = implication_table(e);
    for (Element x = 0; x < e.size(); ++x)
      for (Element y = 0; y < e.size(); ++y) {
        CHECK(implies(e, x, y) == oracle::subset(oracle::implies(t, x, y)));
        CHECK(table.entry(x, y) == implies(e, x, y));
        // x' is the least member
        CHECK(table.entry(x, y).contains(e.comp(x)));
        CHECK(table.entry(x, y).is_subset_of(e.order().up_set(e.comp(x))));
      }
  }
}

TEST_CASE("2-element table") {
  EffectAlgebra e = chain_to_ea(2);
  ImplicationTable t = implication_table(e);
  CHECK(t.entry(0, 0) == Subset(2, {1}));
  CHECK(t.entry(0, 1) == Subset(2, {1}));
  CHECK(t.entry(1, 0) == Subset(2, {0}));
  CHECK(t.entry(1, 1) == Subset(2, {0, 1}));
}

TEST_CASE("E9 table matches the golden file") {
  const std::string golden = read_file(EFFALG_SOURCE_DIR "/tests/golden/e9_implication.csv");
  REQUIRE_FALSE(golden.empty());
  CHECK(emit_table(implication_table(load_fixture("E9")), TableFormat::csv) == golden);
}

TEST_CASE("set arguments") {
  EffectAlgebra e = load_fixture("E9");
  const Poset& p = e.order();
  // U(a) -> b = L(a') + L(a,b) = L(g) + {0}
  CHECK(implies(e, p.up_set(1), 2) == Subset(9, {0, 2, 3, 7}));
  CHECK(implies(e, p.up_set(1), 2) == add_sets(e, p.down_set(7), lower_cone(p, 1, 2)));
  // a -> L(a,b) = {a'}
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) CHECK(implies(e, a, lower_cone(p, a, b)) == e.singleton(e.comp(a)));
  // {1} -> b = L(b)
  for (Element b = 0; b < 9; ++b) CHECK(implies(e, e.singleton(8), b) == p.down_set(b));
  // singletons agree with the element form
  for (Element a = 0; a < 9; ++a)
    for (Element b = 0; b < 9; ++b) {
      CHECK(implies(e, e.singleton(a), e.singleton(b)) == implies(e, a, b));
      CHECK(implies(e, a, e.singleton(b)) == implies(e, a, b));
    }
}

TEST_CASE("elementary properties by direct evaluation") {
  for (const auto& e : small_algebras()) {
    oracle::Table t = oracle::from(e);
    const int n = t.n();
    for (int a = 0; a < n; ++a) {
      const int ac = oracle::comp(t, a);
      // a -> 0 = {a'}
      CHECK(oracle::implies(t, a, t.zero) == oracle::set_of(t, {ac}));
      CHECK(implies(e, a, 0) == e.singleton(ac));
      for (int b = 0; b < n; ++b) {
        auto ab = oracle::implies(t, a, b);
        // a <= b: a -> b = U(a')
        if (oracle::leq(t, a, b)) CHECK(oracle::subset(ab) == e.order().up_set(ac));
        // b <= a: a -> b = [a', a'+b]
        if (oracle::leq(t, b, a)) {
          auto top = t.at(ac, b);
          REQUIRE(top >= 0);
          std::vector<bool> iv(n, false);
          for (int w = 0; w < n; ++w) iv[w] = oracle::leq(t, ac, w) && oracle::leq(t, w, top);
          CHECK(ab == iv);
        }
        // L(a -> b) = L(a')
        CHECK(oracle::lower(t, ab) == oracle::lower(t, oracle::set_of(t, {ac})));
        for (int c = 0; c < n; ++c)
          if (oracle::leq(t, b, c)) {
            auto ac_set = oracle::implies(t, a, c);
            for (int w = 0; w < n; ++w) CHECK((!ab[w] || ac_set[w]));
          }
      }
    }
  }
}

TEST_CASE("property suites") {
  std::vector<std::pair<std::string, EffectAlgebra>> all;
  for (const char* name : {"E9", "E6", "BOOL-1", "BOOL-2", "BOOL-3", "CHAIN-5"}) all.emplace_back(name, load_fixture(name));
  for (auto& e : small_algebras()) all.emplace_back("enumerated", e);
  for (const auto& [name, e] : all) {
    CAPTURE(name);
    Report t2 = theorem2_suite(e);
    Report t4 = theorem4_suite(e);
    CHECK_MESSAGE(t2.ok(), format_report(t2, e.labels()));
    CHECK_MESSAGE(t4.ok(), format_report(t4, e.labels()));
    CHECK(t2.clauses.size() == 12);
    CHECK(t4.clauses.size() == 9);
    CHECK(t2.find("xi")->status == ClauseStatus::pass);
    CHECK(t2.find("xii")->status == (e.lattice() ? ClauseStatus::pass : ClauseStatus::skipped));
    for (const auto& c : t2.clauses) CHECK(c.witness.empty());
    for (const auto& c : t4.clauses) CHECK(c.witness.empty());
  }
  CHECK(theorem2_suite(load_fixture("E9")).find("xii")->status == ClauseStatus::skipped);
  CHECK(theorem2_suite(load_fixture("E6")).find("xii")->status == ClauseStatus::pass);
}

TEST_CASE("double negation and related identities on E9") {
  EffectAlgebra e = load_fixture("E9");
  const Poset& p = e.order();
  for (Element a = 0; a < 9; ++a) {
    CHECK(implies(e, implies(e, a, 0), 0) == e.singleton(a));
    for (Element b = 0; b < 9; ++b) {
      CHECK(upper_cone(p, implies(e, a, upper_cone(p, a, b))) == e.singleton(8));
      for (Element c = 0; c < 9; ++c) CHECK(implies(e, a, implies(e, b, c)) == implies(e, a, e.comp(b)));
    }
  }
}
