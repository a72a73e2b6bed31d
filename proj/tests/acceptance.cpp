// Acceptance run: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "effalg/checks.hpp"
#include "effalg/deduction.hpp"
#include "effalg/emit.hpp"
#include "effalg/enumerate.hpp"
#include "effalg/fixtures.hpp"
#include "effalg/implication.hpp"
#include "effalg/laws.hpp"
#include "effalg/residuation.hpp"
#include "oracle.hpp"

using namespace effalg;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

double battery_seconds = 0;
int failures = 0;

void criterion(int id, const char* title, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& ex) {
    o.ok = false;
    o.detail = std::string("exception: ") + ex.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (id <= 9) battery_seconds += secs;
  if (o.ok && limit > 0 && secs >= limit) {
    o.ok = false;
    o.detail = "over the " + std::to_string(limit) + " s limit";
  }
  failures += o.ok ? 0 : 1;
  std::printf("criterion %2d: %s  %s (%.3f s)%s%s\n", id, o.ok ? "PASS" : "FAIL", title, secs,
              o.detail.empty() ? "" : ": ", o.detail.c_str());
  std::fflush(stdout);
}

std::vector<EffectAlgebra> enumerated_up_to(std::size_t max_n) {
  std::vector<EffectAlgebra> out;
  for (std::size_t n = 2; n <= max_n; ++n)
    for (auto& e : enumerate_effect_algebras(n, false).algebras) out.push_back(e);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t factorial(std::size_t k) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

}  // namespace

int main() {
  criterion(1, "fixture fidelity of the E9 implication table", 1.0, [] {
    Outcome o;
    const std::string golden = read_file(EFFALG_SOURCE_DIR "/tests/golden/e9_implication.csv");
    o.require(!golden.empty(), "golden file missing");
    const std::string got = emit_table(implication_table(load_fixture("E9")), TableFormat::csv);
    o.require(got == golden, "table differs from the golden file");
    return o;
  });

  criterion(2, "contraposition and identity counterexamples", 0, [] {
    Outcome o;
    EffectAlgebra e9 = load_fixture("E9");
    ContrapositionResult ad = contraposition_pair(e9, 1, 4);
    o.require(!ad.holds, "(a,d) holds");
    o.require(ad.lhs == Subset(9, {7, 8}) && ad.rhs == Subset(9, {6, 8}), "(a,d) cones differ from {g,1} / {f,1}");
    ContrapositionResult ea = contraposition_pair(e9, 5, 1);
    o.require(ea.holds && ea.lhs == Subset(9, {6, 8}) && ea.rhs == Subset(9, {6, 8}), "(e,a) is not {f,1} on both sides");
    LawReport id = identity_equ1(load_fixture("E6"));
    bool found = false;
    for (const auto& f : id.failing_pairs)
      found = found || (f.x == 1 && f.y == 3 && f.lhs == Subset(6, {2}) && f.rhs == Subset(6, {3}));
    o.require(found, "E6 pair (a,b) with a' vs b not reported");
    return o;
  });

  criterion(3, "theorem suites on fixtures", 5.0, [] {
    Outcome o;
    for (const char* name : {"E9", "E6", "BOOL-1", "BOOL-2", "BOOL-3"}) {
      EffectAlgebra e = load_fixture(name);
      Report r = run_suites(e, {"lemma1", "lemma2", "th2", "th4"});
      o.require(r.ok(), std::string(name) + ": " + format_report(r, e.labels()));
      for (const auto& c : r.clauses) o.require(c.witness.empty(), std::string(name) + ": witness in " + c.id);
      const ClauseResult* xi = r.find("th2.xi");
      const ClauseResult* xii = r.find("th2.xii");
      o.require(xi && xi->status == ClauseStatus::pass, std::string(name) + ": xi not checked");
      o.require(xii && xii->status == (e.lattice() ? ClauseStatus::pass : ClauseStatus::skipped),
                std::string(name) + ": xii status");
    }
    o.require(!load_fixture("E9").lattice() && load_fixture("E6").lattice(), "lattice status of E9/E6");
    return o;
  });

  criterion(4, "residuation soundness and roundtrip", 60.0, [] {
    Outcome o;
    std::vector<std::pair<std::string, EffectAlgebra>> all;
    for (const char* name : {"E9", "E6", "BOOL-1", "BOOL-2", "BOOL-3"}) all.emplace_back(name, load_fixture(name));
    for (auto& e : enumerated_up_to(5)) all.emplace_back("enumerated n=" + std::to_string(e.size()), e);
    for (const auto& [name, e] : all) {
      SurpValidation v = validate_surp(from_effect_algebra(e));
      o.require(v.ok() && v.structure.divisible, name + ": C(E) not a divisible structure");
      o.require(roundtrip_check(e).equal, name + ": E(C(E)) differs");
    }
    return o;
  });

  criterion(5, "C3 and (xi) agree triple by triple", 0, [] {
    Outcome o;
    for (const auto& e : enumerated_up_to(5)) {
      Report r = equivalence_c3_xi(e);
      o.require(r.ok(), format_report(r, e.labels()));
    }
    return o;
  });

  criterion(6, "deductive systems", 0, [] {
    Outcome o;
    for (const char* name : {"E9", "E6"}) {
      EffectAlgebra e = load_fixture(name);
      const std::size_t n = e.size();
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Subset d(n, bits);
        if (!d.contains(e.one()) || d == e.full_set()) continue;
        o.require(is_deductive_system(e, d).deductive == characterize(e, d),
                  std::string(name) + ": disagreement at " + format_subset(d, e.labels()));
      }
    }
    EffectAlgebra e9 = load_fixture("E9");
    o.require(enumerate_ded(e9).size() == 28, "E9 does not have 28 systems");
    auto at = atoms(e9);
    o.require(at.size() == 6, "E9 does not have 6 atoms");
    std::size_t i = 0;
    for (Element x : {1, 2, 3, 5, 6, 7})
      o.require(i < at.size() && at[i++].members == Subset(9, {x, 8}), "atoms are not {1,x}");
    o.require(generate(e9, Subset(9, {1, 7})).members == e9.full_set(), "generate(E9,{a,g}) is not E");
    DedLattice l = ded_lattice(e9);
    o.require(l.complete, "Ded(E9) reported incomplete");
    // finite with a bottom: pairwise least upper bounds make it complete
    for (std::size_t a = 0; a < l.systems.size(); ++a)
      for (std::size_t b = 0; b < l.systems.size(); ++b) {
        const Subset both = l.systems[a].members | l.systems[b].members;
        std::size_t above = 0;
        bool least = false;
        for (const auto& s : l.systems)
          if (both.is_subset_of(s.members)) {
            ++above;
            least = least || s.members == l.systems[l.join(a, b)].members;
          }
        o.require(above > 0 && least && both.is_subset_of(l.systems[l.join(a, b)].members), "missing join");
        o.require(l.systems[l.meet(a, b)].members == (l.systems[a].members & l.systems[b].members), "missing meet");
        for (const auto& s : l.systems)
          if (both.is_subset_of(s.members))
            o.require(l.systems[l.join(a, b)].members.is_subset_of(s.members), "join is not least");
      }
    return o;
  });

  criterion(7, "contraposition structure", 0, [] {
    Outcome o;
    std::vector<EffectAlgebra> all = enumerated_up_to(5);
    for (const auto& name : fixture_names()) all.push_back(load_fixture(name));
    for (const auto& e : all) {
      Report r = check_prop1(e);
      o.require(r.ok(), format_report(r, e.labels()));
    }
    std::vector<EffectAlgebra> lattices;
    for (const auto& e : enumerated_up_to(5))
      if (e.lattice()) lattices.push_back(e);
    lattices.push_back(load_fixture("E6"));
    lattices.push_back(load_fixture("BOOL-2"));
    for (const auto& e : lattices) o.require(check_prop2_equivalence(e).agree(), "contraposition and identity disagree");
    return o;
  });

  criterion(8, "enumeration against the oracle", 0, [] {
    Outcome o;
    o.require(enumerate_effect_algebras(2, false).algebras.size() == 1, "n=2 is not unique");
    auto tables = oracle::all_effect_algebras(3, true);
    std::vector<oracle::Table> reps;
    for (const auto& t : tables) {
      bool fresh = true;
      for (const auto& r : reps) fresh = fresh && !oracle::isomorphic(r, t);
      if (fresh) reps.push_back(t);
    }
    o.require(enumerate_effect_algebras(3, true).iso_count == reps.size(), "n=3 iso count differs from the oracle");
    for (std::size_t n = 2; n <= 4; ++n) {
      EnumerationResult r = enumerate_effect_algebras(n, true);
      std::uint64_t total = 0;
      for (const auto& e : r.algebras) total += factorial(n - 2) / automorphism_count(e);
      o.require(total == r.labeled_count, "orbit identity fails at n=" + std::to_string(n));
    }
    return o;
  });

  criterion(9, "mutation sensitivity", 0, [] {
    Outcome o;
    EffectAlgebra e9 = load_fixture("E9");
    PartialTable t = e9.table();
    t.at(1, 7) = std::nullopt;
    t.at(7, 1) = std::nullopt;
    ValidationOutcome v = validate(t);
    const ClauseResult* e3 = v.report.find("E3");
    o.require(!v.ok() && e3 && e3->status == ClauseStatus::fail, "E3 violation not reported");
    o.require(e3 && e3->witness == std::vector<Element>{1}, "E3 witness is not a");
    UnsharpResiduatedPoset c = from_effect_algebra(e9);
    c.implies(1, 0) = Subset(9, {7, 8});
    SurpValidation s = validate_surp(c);
    const ClauseResult* c4 = s.report.find("C4");
    o.require(!s.ok() && c4 && c4->status == ClauseStatus::fail, "C4 violation not reported");
    o.require(c4 && c4->witness == std::vector<Element>{1}, "C4 witness is not a");
    return o;
  });

  criterion(10, "CLI check over all suites and fixtures", 0, [] {
    Outcome o;
    const std::string cmd = std::string("\"") + EFFALG_CLI + "\" check 'fixture:*' --suite all > /dev/null";
    const int status = std::system(cmd.c_str());
    o.require(status == 0, "effalg check exited with status " + std::to_string(status));
    o.require(battery_seconds < 180.0, "criteria 1-9 took " + std::to_string(battery_seconds) + " s");
    return o;
  });

  std::printf("criteria 1-9 took %.3f s in total\n", battery_seconds);
  return failures == 0 ? 0 : 1;
}
