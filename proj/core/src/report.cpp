#include "asep2/report.hpp"

#include <nlohmann/json.hpp>

namespace asep2 {

bool RelationReport::check(const std::string& relation, int L, const SparseQMatrix& lhs, const SparseQMatrix& rhs,
                           std::string detail) {
  RelationResult r{relation, L, true, first_difference(lhs, rhs), std::move(detail)};
  r.holds = !r.first_mismatch.has_value();
  results_.push_back(std::move(r));
  return results_.back().holds;
}

bool RelationReport::check_zero(const std::string& relation, int L, const SparseQMatrix& residual,
                                std::string detail) {
  return check(relation, L, residual, SparseQMatrix(residual.dim()), std::move(detail));
}

void RelationReport::append(const RelationReport& other) {
  results_.insert(results_.end(), other.results_.begin(), other.results_.end());
}

bool RelationReport::all_hold() const {
  for (const auto& r : results_)
    if (!r.holds) return false;
  return true;
}

std::vector<std::string> RelationReport::failed_relations() const {
  std::vector<std::string> out;
  for (const auto& r : results_)
    if (!r.holds) out.push_back(r.relation);
  return out;
}

const RelationResult* RelationReport::find(const std::string& relation) const {
  for (const auto& r : results_)
    if (r.relation == relation) return &r;
  return nullptr;
}

std::string RelationReport::to_json(int indent) const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : results_) {
    nlohmann::ordered_json j;
    j["relation"] = r.relation;
    j["L"] = r.L;
    j["holds"] = r.holds;
    if (r.first_mismatch) {
      j["first_mismatch"] = {{"row", r.first_mismatch->row + 1},
                             {"col", r.first_mismatch->col + 1},
                             {"lhs", r.first_mismatch->lhs.to_string()},
                             {"rhs", r.first_mismatch->rhs.to_string()}};
    } else {
      j["first_mismatch"] = nullptr;
    }
    if (!r.detail.empty()) j["detail"] = r.detail;
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

}  // namespace asep2
