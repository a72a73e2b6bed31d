#pragma once

#include <string>
#include <vector>

#include "effalg/dsl.hpp"

namespace effalg {

/// Bundled algebras: E9, E6, BOOL-k (k = 1..6), CHAIN-n (n = 2..9).
std::vector<std::string> fixture_names();

/// Spec text of a bundled fixture; throws std::out_of_range for unknown names.
std::string fixture_text(const std::string& name);

EffectAlgebra load_fixture(const std::string& name);

/// Reads "fixture:NAME" or a file path. Throws std::runtime_error when a
/// file cannot be read and std::out_of_range for unknown fixtures.
std::string load_source(const std::string& source);

/// The n-element chain 0 < a < ... < 1 with i+j defined iff i+j <= n-1.
EffectAlgebra chain_to_ea(std::size_t n);

}  // namespace effalg
