#include "effalg/dsl.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <sstream>

namespace effalg {

ParseError::ParseError(SourceLocation where, const std::string& message)
    : std::runtime_error(std::to_string(where.line) + ":" + std::to_string(where.column) + ": " + message),
      where_(where),
      message_(message) {}

bool AlgebraSpec::same_content(const AlgebraSpec& o) const {
  if (name != o.name || elements != o.elements || zero != o.zero || one != o.one) return false;
  if (sums.size() != o.sums.size() || complements.size() != o.complements.size()) return false;
  for (std::size_t i = 0; i < sums.size(); ++i)
    if (sums[i].x != o.sums[i].x || sums[i].y != o.sums[i].y || sums[i].z != o.sums[i].z) return false;
  for (std::size_t i = 0; i < complements.size(); ++i)
    if (complements[i].x != o.complements[i].x || complements[i].y != o.complements[i].y) return false;
  return true;
}

namespace {

struct Token {
  std::string text;
  std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), start + 1});
  }
  return out;
}

class Parser {
 public:
  AlgebraSpec run(std::string_view text, std::size_t first_line) {
    std::size_t line_no = first_line;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      line(tokenize(text.substr(pos, end - pos)), line_no);
      ++line_no;
      pos = end + 1;
    }
    const SourceLocation eof{line_no - 1, 1};
    if (!have_name_) throw ParseError(eof, "missing 'algebra NAME' line");
    if (!have_elements_) throw ParseError(eof, "missing 'elements' line");
    if (spec_.zero.empty()) throw ParseError(eof, "missing 'zero' line");
    if (spec_.one.empty()) throw ParseError(eof, "missing 'one' line");
    return spec_;
  }

 private:
  void line(const std::vector<Token>& t, std::size_t line_no) {
    if (t.empty()) return;
    auto at = [&](const Token& tok) { return SourceLocation{line_no, tok.column}; };
    const std::string& kw = t[0].text;
    auto arity = [&](std::size_t n, const char* usage) {
      if (t.size() != n) throw ParseError(at(t[std::min(t.size(), n) - 1]), std::string("expected '") + usage + "'");
    };

    if (kw == "algebra") {
      arity(2, "algebra NAME");
      if (have_name_) throw ParseError(at(t[0]), "duplicate 'algebra' line");
      spec_.name = t[1].text;
      have_name_ = true;
    } else if (kw == "elements") {
      if (have_elements_) throw ParseError(at(t[0]), "duplicate 'elements' line");
      if (t.size() < 2) throw ParseError(at(t[0]), "expected at least one element label");
      for (std::size_t i = 1; i < t.size(); ++i) {
        if (t[i].text == "=") throw ParseError(at(t[i]), "'=' is not a valid label");
        if (index_.count(t[i].text)) throw ParseError(at(t[i]), "duplicate element '" + t[i].text + "'");
        if (spec_.elements.size() == kMaxCarrier) throw ParseError(at(t[i]), "more than 64 elements");
        index_[t[i].text] = spec_.elements.size();
        spec_.elements.push_back(t[i].text);
      }
      have_elements_ = true;
    } else if (kw == "zero" || kw == "one") {
      arity(2, kw == "zero" ? "zero LABEL" : "one LABEL");
      std::string& slot = kw == "zero" ? spec_.zero : spec_.one;
      if (!slot.empty()) throw ParseError(at(t[0]), "duplicate '" + kw + "' line");
      label(t[1], line_no);
      slot = t[1].text;
    } else if (kw == "sum") {
      arity(5, "sum X Y = Z");
      if (t[3].text != "=") throw ParseError(at(t[3]), "expected '='");
      for (std::size_t i : {1U, 2U, 4U}) label(t[i], line_no);
      add_sum(SumEntry{t[1].text, t[2].text, t[4].text, at(t[0])});
    } else if (kw == "complement") {
      arity(4, "complement X = Y");
      if (t[2].text != "=") throw ParseError(at(t[2]), "expected '='");
      label(t[1], line_no);
      label(t[3], line_no);
      for (const auto& c : spec_.complements)
        if (c.x == t[1].text)
          throw ParseError(at(t[0]), (c.y == t[3].text ? "duplicate" : "conflicting") +
                                         std::string(" complement for '") + c.x + "'");
      spec_.complements.push_back(ComplementDecl{t[1].text, t[3].text, at(t[0])});
    } else {
      throw ParseError(at(t[0]), "unknown directive '" + kw + "'");
    }
  }

  void label(const Token& tok, std::size_t line_no) {
    if (!have_elements_) throw ParseError({line_no, tok.column}, "label used before 'elements' line");
    if (!index_.count(tok.text)) throw ParseError({line_no, tok.column}, "unknown label '" + tok.text + "'");
  }

  void add_sum(SumEntry e) {
    std::size_t x = index_.at(e.x), y = index_.at(e.y);
    auto key = std::minmax(x, y);
    if (auto it = seen_.find(key); it != seen_.end()) {
      const SumEntry& prev = spec_.sums[it->second];
      const bool same = prev.z == e.z;
      throw ParseError(e.where, std::string(same ? "duplicate" : "conflicting") + " sum entry for " + e.x + "+" +
                                    e.y + " (first given on line " + std::to_string(prev.where.line) + ")");
    }
    seen_[key] = spec_.sums.size();
    spec_.sums.push_back(std::move(e));
  }

  AlgebraSpec spec_;
  bool have_name_ = false;
  bool have_elements_ = false;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen_;
};

bool has_directives(std::string_view doc) {
  std::size_t p = 0;
  while (p <= doc.size()) {
    std::size_t e = doc.find('\n', p);
    if (e == std::string_view::npos) e = doc.size();
    if (!tokenize(doc.substr(p, e - p)).empty()) return true;
    p = e + 1;
  }
  return false;
}

}  // namespace

AlgebraSpec parse_spec(std::string_view text) { return Parser().run(text, 1); }

std::vector<AlgebraSpec> parse_spec_stream(std::string_view text) {
  std::vector<AlgebraSpec> out;
  std::size_t pos = 0, line_no = 1, doc_start = 0, doc_line = 1;
  auto flush = [&](std::size_t end) {
    std::string_view doc = text.substr(doc_start, end - doc_start);
    if (has_directives(doc)) out.push_back(Parser().run(doc, doc_line));
  };
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view ln = text.substr(pos, end - pos);
    while (!ln.empty() && (ln.back() == '\r' || ln.back() == ' ')) ln.remove_suffix(1);
    if (ln == "---") {
      flush(pos);
      doc_start = end + 1;
      doc_line = line_no + 1;
    }
    ++line_no;
    pos = end + 1;
  }
  if (doc_start < text.size()) flush(text.size());
  return out;
}

PartialTable to_table(const AlgebraSpec& spec) {
  std::map<std::string, Element> index;
  for (Element i = 0; i < spec.elements.size(); ++i) index[spec.elements[i]] = i;
  PartialTable t = PartialTable::with_zero_rows(spec.elements, index.at(spec.zero), index.at(spec.one));
  for (const auto& s : spec.sums) {
    Element x = index.at(s.x), y = index.at(s.y), z = index.at(s.z);
    // entries restating x+0 = x are accepted; anything else on the zero row conflicts
    if ((x == t.zero || y == t.zero) && t.at(x, y) != z)
      throw ParseError(s.where, "sum entry contradicts x+0 = x");
    t.at(x, y) = z;
    t.at(y, x) = z;
  }
  if (!spec.complements.empty()) {
    t.declared_complement.assign(t.size(), std::nullopt);
    for (const auto& c : spec.complements) t.declared_complement[index.at(c.x)] = index.at(c.y);
  }
  return t;
}

AlgebraSpec to_spec(const EffectAlgebra& e, const std::string& name) {
  AlgebraSpec s;
  s.name = name;
  s.elements = e.labels();
  s.zero = e.label(e.zero());
  s.one = e.label(e.one());
  const std::size_t n = e.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y)
      if (x != e.zero() && y != e.zero())
        if (auto z = e.sum(x, y)) s.sums.push_back(SumEntry{e.label(x), e.label(y), e.label(*z), {}});
  for (Element x = 0; x < n; ++x) s.complements.push_back(ComplementDecl{e.label(x), e.label(e.comp(x)), {}});
  return s;
}

std::string emit_spec(const AlgebraSpec& spec) {
  std::ostringstream out;
  out << "algebra " << spec.name << '\n';
  out << "elements";
  for (const auto& l : spec.elements) out << ' ' << l;
  out << '\n';
  out << "zero " << spec.zero << '\n';
  out << "one " << spec.one << '\n';
  for (const auto& s : spec.sums) out << "sum " << s.x << ' ' << s.y << " = " << s.z << '\n';
  for (const auto& c : spec.complements) out << "complement " << c.x << " = " << c.y << '\n';
  return out.str();
}

std::string emit_spec(const EffectAlgebra& e, const std::string& name) { return emit_spec(to_spec(e, name)); }

}  // namespace effalg
