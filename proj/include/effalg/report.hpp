#pragma once

#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "effalg/subset.hpp"

namespace effalg {

enum class ClauseStatus { pass, fail, skipped, sampled };

const char* to_string(ClauseStatus s);

/// Outcome of one checked clause. At most one witness is kept: the
/// lexicographically first failing tuple.
struct ClauseResult {
  std::string id;
  ClauseStatus status = ClauseStatus::pass;
  std::vector<Element> witness;
  std::string detail;
};

/// A named list of clause outcomes. Used for axiom validation and for
/// exhaustive property suites alike.
struct Report {
  std::string title;
  // deque: references returned by add() stay valid as clauses are appended
  std::deque<ClauseResult> clauses;

  bool ok() const;
  const ClauseResult* find(const std::string& id) const;
  ClauseResult& add(std::string id, ClauseStatus status = ClauseStatus::pass);
  /// Number of failing clauses.
  std::size_t failures() const;
  /// Appends all clauses of `other`, prefixing their ids.
  void merge(const Report& other, const std::string& prefix = {});
};

/// Records a failure with witness on `clause` unless it already failed.
void fail_once(ClauseResult& clause, std::vector<Element> witness, std::string detail = {});

std::string format_report(const Report& r, const std::vector<std::string>& labels);

}  // namespace effalg
