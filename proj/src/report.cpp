#include "effalg/report.hpp"

#include <sstream>

namespace effalg {

const char* to_string(ClauseStatus s) {
  switch (s) {
    case ClauseStatus::pass: return "pass";
    case ClauseStatus::fail: return "FAIL";
    case ClauseStatus::skipped: return "skipped";
    case ClauseStatus::sampled: return "sampled";
  }
  return "?";
}

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t k = 0;
  for (const auto& c : clauses) k += c.status == ClauseStatus::fail ? 1 : 0;
  return k;
}

const ClauseResult* Report::find(const std::string& id) const {
  for (const auto& c : clauses)
    if (c.id == id) return &c;
  return nullptr;
}

ClauseResult& Report::add(std::string id, ClauseStatus status) {
  clauses.push_back(ClauseResult{std::move(id), status, {}, {}});
  return clauses.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (auto c : other.clauses) {
    c.id = prefix + c.id;
    clauses.push_back(std::move(c));
  }
}

void fail_once(ClauseResult& clause, std::vector<Element> witness, std::string detail) {
  if (clause.status == ClauseStatus::fail) return;
  clause.status = ClauseStatus::fail;
  clause.witness = std::move(witness);
  clause.detail = std::move(detail);
}

std::string format_report(const Report& r, const std::vector<std::string>& labels) {
  std::ostringstream out;
  if (!r.title.empty()) out << r.title << '\n';
  for (const auto& c : r.clauses) {
    out << "  " << c.id << ": " << to_string(c.status);
    if (!c.witness.empty()) {
      out << " witness (";
      for (std::size_t i = 0; i < c.witness.size(); ++i) {
        if (i) out << ',';
        Element w = c.witness[i];
        out << (w < labels.size() ? labels[w] : std::to_string(w));
      }
      out << ')';
    }
    if (!c.detail.empty()) out << " " << c.detail;
    out << '\n';
  }
  out << (r.ok() ? "result: pass" : "result: FAIL") << '\n';
  return out.str();
}

}  // namespace effalg
