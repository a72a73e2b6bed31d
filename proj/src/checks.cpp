#include "effalg/checks.hpp"

#include <sstream>
#include <stdexcept>

#include "effalg/deduction.hpp"
#include "effalg/dsl.hpp"
#include "effalg/implication.hpp"
#include "effalg/laws.hpp"
#include "effalg/residuation.hpp"

namespace effalg {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1", "lemma2", "th2",   "th4",   "c1-c5",
                                              "th3",    "roundtrip", "prop1", "c3-xi", "dual"};
  return names;
}

std::vector<std::string> parse_suite_list(const std::string& list) {
  std::vector<std::string> out;
  std::istringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      out.insert(out.end(), suite_names().begin(), suite_names().end());
      continue;
    }
    bool known = false;
    for (const auto& s : suite_names()) known = known || s == item;
    if (!known) throw std::invalid_argument("unknown suite '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw std::invalid_argument("empty suite list");
  return out;
}

Report check_ded_characterization(const EffectAlgebra& e) {
  Report r;
  r.title = "deductive systems vs D & D' = 0";
  auto& c = r.add("characterization");
  const std::size_t n = e.size();
  if (n > kBruteForceDedLimit) {
    c.status = ClauseStatus::skipped;
    c.detail = "carrier too large for subset scan";
    return r;
  }
  const Subset full = e.full_set();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Subset d(n, bits);
    if (!d.contains(e.one()) || d == full) continue;
    if (is_deductive_system(e, d).deductive != characterize(e, d)) fail_once(c, d.elements());
  }
  return r;
}

namespace {

Report residuation_suite(const EffectAlgebra& e) {
  SurpValidation v = validate_surp(from_effect_algebra(e));
  Report r = v.report;
  auto& c5 = r.add("C5");
  if (!v.ok()) {
    c5.status = ClauseStatus::skipped;
  } else if (!v.structure.divisible) {
    std::vector<Element> w;
    if (v.divisibility_witness) w = {v.divisibility_witness->first, v.divisibility_witness->second};
    fail_once(c5, w, "not divisible");
  }
  return r;
}

Report roundtrip_suite(const EffectAlgebra& e) {
  Report r;
  auto& eq = r.add("E(C(E))");
  RoundtripResult rt = roundtrip_check(e);
  if (!rt.equal) {
    std::vector<Element> w;
    if (!rt.diff.empty()) w = {rt.diff.front().x, rt.diff.front().y};
    fail_once(eq, w, rt.failure ? "rebuilt table invalid" : "tables differ");
  }
  auto& spec = r.add("spec");
  AlgebraSpec s = to_spec(e, "roundtrip");
  AlgebraSpec back = parse_spec(emit_spec(s));
  if (!back.same_content(s)) fail_once(spec, {}, "emit/parse changed the spec");
  else if (!(make_effect_algebra(to_table(back)) == e)) fail_once(spec, {}, "reparsed table differs");
  return r;
}

Report dual_suite(const EffectAlgebra& e) {
  SurpValidation v = validate_surp(from_effect_algebra(e));
  if (!v.ok()) {
    Report r;
    r.add("C3'", ClauseStatus::skipped).detail = "structure invalid";
    return r;
  }
  return check_dual_adjointness(v.structure);
}

}  // namespace

Report run_suite(const EffectAlgebra& e, const std::string& suite) {
  Report part;
  if (suite == "lemma1") part = check_lemma1(e);
  else if (suite == "lemma2") part = check_lemma2(e);
  else if (suite == "th2") part = theorem2_suite(e);
  else if (suite == "th4") part = theorem4_suite(e);
  else if (suite == "c1-c5") part = residuation_suite(e);
  else if (suite == "th3") part = check_ded_characterization(e);
  else if (suite == "roundtrip") part = roundtrip_suite(e);
  else if (suite == "prop1") part = check_prop1(e);
  else if (suite == "c3-xi") part = equivalence_c3_xi(e);
  else if (suite == "dual") part = dual_suite(e);
  else throw std::invalid_argument("unknown suite '" + suite + "'");
  Report r;
  r.title = suite;
  r.merge(part, suite + ".");
  return r;
}

Report run_suites(const EffectAlgebra& e, const std::vector<std::string>& suites) {
  Report r;
  r.title = "check";
  for (const auto& s : suites) r.merge(run_suite(e, s));
  return r;
}

}  // namespace effalg
