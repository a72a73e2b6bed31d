#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "effalg/effect_algebra.hpp"

namespace effalg {

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

struct SumEntry {
  std::string x, y, z;
  SourceLocation where;
};

struct ComplementDecl {
  std::string x, y;
  SourceLocation where;
};

/// Parsed algebra description. Format, one directive per line:
///
///     algebra NAME
///     elements L1 L2 ...
///     zero L
///     one L
///     sum X Y = Z          (one orientation per unordered pair)
///     complement X = Y     (optional, cross-checked)
///
/// `#` starts a comment. x+0 = 0+x = x is implied.
struct AlgebraSpec {
  std::string name;
  std::vector<std::string> elements;
  std::string zero;
  std::string one;
  std::vector<SumEntry> sums;
  std::vector<ComplementDecl> complements;

  /// Content equality; source locations are ignored.
  bool same_content(const AlgebraSpec& o) const;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLocation where, const std::string& message);
  SourceLocation where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  SourceLocation where_;
  std::string message_;
};

/// Throws ParseError on syntax errors, unknown labels, and duplicate or
/// conflicting sum/complement lines.
AlgebraSpec parse_spec(std::string_view text);

/// Splits a stream of documents separated by lines holding only `---`.
std::vector<AlgebraSpec> parse_spec_stream(std::string_view text);

/// Symmetric closure plus zero rows; declared complements carried along.
PartialTable to_table(const AlgebraSpec& spec);

/// Spec listing each defined non-zero sum once (x <= y by index) and every complement.
AlgebraSpec to_spec(const EffectAlgebra& e, const std::string& name);

std::string emit_spec(const AlgebraSpec& spec);
std::string emit_spec(const EffectAlgebra& e, const std::string& name);

}  // namespace effalg
