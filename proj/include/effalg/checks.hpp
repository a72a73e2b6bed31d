#pragma once

#include <string>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

/// lemma1 lemma2 th2 th4 c1-c5 th3 roundtrip prop1 c3-xi dual
const std::vector<std::string>& suite_names();

/// Splits a comma list; "all" expands to every suite. Throws
/// std::invalid_argument on unknown names.
std::vector<std::string> parse_suite_list(const std::string& list);

/// Runs one suite; clause ids come back prefixed with the suite name.
Report run_suite(const EffectAlgebra& e, const std::string& suite);

Report run_suites(const EffectAlgebra& e, const std::vector<std::string>& suites);

/// Brute-force deductive-system check against the D & D' = 0 criterion on
/// every proper subset containing 1. Skipped above kBruteForceDedLimit.
Report check_ded_characterization(const EffectAlgebra& e);

}  // namespace effalg
