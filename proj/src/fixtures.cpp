#include "effalg/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "effalg/enumerate.hpp"
#include "effalg/laws.hpp"

namespace effalg {

namespace {

constexpr const char* kE9 = R"(algebra E9
elements 0 a b c d e f g 1
zero 0
one 1
sum a b = e
sum a c = f
sum a g = 1
sum b b = d
sum b c = g
sum b d = f
sum b f = 1
sum c e = 1
sum d d = 1
complement 0 = 1
complement a = g
complement b = f
complement c = e
complement d = d
complement e = c
complement f = b
complement g = a
complement 1 = 0
)";

constexpr const char* kE6 = R"(algebra E6
elements 0 a a' b b' 1
zero 0
one 1
sum a a' = 1
sum b b' = 1
complement 0 = 1
complement a = a'
complement a' = a
complement b = b'
complement b' = b
complement 1 = 0
)";

constexpr std::size_t kMaxChain = 9;

std::optional<unsigned> suffix(const std::string& name, const std::string& prefix) {
  if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
  unsigned v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || v > 100) return std::nullopt;
    v = v * 10 + static_cast<unsigned>(name[i] - '0');
  }
  return v;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> names{"E9", "E6"};
  for (unsigned k = 1; k <= kMaxBooleanAtoms; ++k) names.push_back("BOOL-" + std::to_string(k));
  for (std::size_t n = 2; n <= kMaxChain; ++n) names.push_back("CHAIN-" + std::to_string(n));
  return names;
}

std::string fixture_text(const std::string& name) {
  if (name == "E9") return kE9;
  if (name == "E6") return kE6;
  if (auto k = suffix(name, "BOOL-"); k && *k >= 1 && *k <= kMaxBooleanAtoms)
    return emit_spec(boolean_to_ea(*k), name);
  if (auto n = suffix(name, "CHAIN-"); n && *n >= 2 && *n <= kMaxChain) return emit_spec(chain_to_ea(*n), name);
  throw std::out_of_range("unknown fixture '" + name + "'");
}

EffectAlgebra load_fixture(const std::string& name) {
  return make_effect_algebra(to_table(parse_spec(fixture_text(name))));
}

std::string load_source(const std::string& source) {
  const std::string scheme = "fixture:";
  if (source.rfind(scheme, 0) == 0) return fixture_text(source.substr(scheme.size()));
  std::ifstream in(source, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + source + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

EffectAlgebra chain_to_ea(std::size_t n) {
  if (n < 2 || n > 27) throw std::invalid_argument("chain length must be 2..27");
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = default_label(i, n);
  PartialTable t = PartialTable::with_zero_rows(std::move(labels), 0, static_cast<Element>(n - 1));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; x + y < n; ++y) t.at(x, y) = x + y;
  return make_effect_algebra(t);
}

}  // namespace effalg
