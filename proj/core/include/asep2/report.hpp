// Outcome of exact matrix identity checks.
#ifndef ASEP2_REPORT_HPP
#define ASEP2_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "asep2/operators.hpp"

namespace asep2 {

struct RelationResult {
  std::string relation;
  int L = 0;
  bool holds = false;
  std::optional<EntryDiff> first_mismatch;  // 0-based row/col
  std::string detail;
};

class RelationReport {
 public:
  /// Records lhs == rhs, keeping the first differing entry on failure.
  bool check(const std::string& relation, int L, const SparseQMatrix& lhs, const SparseQMatrix& rhs,
             std::string detail = {});
  /// Records a zero residual check.
  bool check_zero(const std::string& relation, int L, const SparseQMatrix& residual, std::string detail = {});
  void add(RelationResult r) { results_.push_back(std::move(r)); }
  void append(const RelationReport& other);

  const std::vector<RelationResult>& results() const { return results_; }
  bool all_hold() const;
  std::vector<std::string> failed_relations() const;
  const RelationResult* find(const std::string& relation) const;

  /// JSON array of {"relation", "L", "holds", "first_mismatch"} objects; rows
  /// and columns there are 1-based canonical indices.
  std::string to_json(int indent = 2) const;

 private:
  std::vector<RelationResult> results_;
};

}  // namespace asep2

#endif  // ASEP2_REPORT_HPP
