#include "crowdforge/types.hpp"

#include <algorithm>
#include <unordered_set>

namespace crowdforge {

LabelMatrix::LabelMatrix(std::size_t n_instances, std::size_t n_labelers)
    : n_instances_(n_instances),
      n_labelers_(n_labelers),
      entries_(n_instances * n_labelers, 0) {
  if (n_instances_ == 0 || n_labelers_ == 0) {
    throw DomainError("LabelMatrix: need at least one instance and one labeler");
  }
}

LabelMatrix LabelMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty()) {
    throw DomainError("LabelMatrix: need at least one instance and one labeler");
  }
  LabelMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.n_labelers_) {
      throw DomainError("LabelMatrix: ragged rows (row " + std::to_string(i) + " has " +
                        std::to_string(rows[i].size()) + " entries, expected " +
                        std::to_string(m.n_labelers_) + ")");
    }
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.set(i, j, rows[i][j]);
  }
  m.validate();
  return m;
}

void LabelMatrix::set(std::size_t instance, std::size_t labeler, int value) {
  if (value != -1 && value != 0 && value != 1) {
    throw DomainError("LabelMatrix: entry must be -1, 0 or 1, got " + std::to_string(value));
  }
  entries_[instance * n_labelers_ + labeler] = value;
}

std::size_t LabelMatrix::observed_in_instance(std::size_t instance) const {
  std::size_t count = 0;
  for (std::size_t j = 0; j < n_labelers_; ++j) {
    if (at(instance, j) != 0) ++count;
  }
  return count;
}

std::size_t LabelMatrix::observed_by_labeler(std::size_t labeler) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < n_instances_; ++i) {
    if (at(i, labeler) != 0) ++count;
  }
  return count;
}

void LabelMatrix::validate() const {
  for (std::size_t i = 0; i < n_instances_; ++i) {
    if (observed_in_instance(i) == 0) {
      throw DomainError("LabelMatrix: instance " + std::to_string(i) + " has no labels");
    }
  }
  for (std::size_t j = 0; j < n_labelers_; ++j) {
    if (observed_by_labeler(j) == 0) {
      throw DomainError("LabelMatrix: labeler " + std::to_string(j) + " has no labels");
    }
  }
}

ExpertLabels::ExpertLabels(std::vector<std::pair<std::size_t, int>> pairs,
                           std::size_t n_instances)
    : pairs_(std::move(pairs)), lookup_(n_instances, 0) {
  if (pairs_.empty()) {
    throw DomainError("ExpertLabels: need at least one expert-labeled instance");
  }
  if (pairs_.size() > n_instances) {
    throw DomainError("ExpertLabels: more expert labels than instances");
  }
  for (const auto& [index, label] : pairs_) {
    if (index >= n_instances) {
      throw DomainError("ExpertLabels: instance index " + std::to_string(index) +
                        " out of range (N=" + std::to_string(n_instances) + ")");
    }
    if (label != -1 && label != 1) {
      throw DomainError("ExpertLabels: label must be -1 or 1, got " + std::to_string(label));
    }
    if (lookup_[index] != 0) {
      throw DomainError("ExpertLabels: duplicate instance index " + std::to_string(index));
    }
    lookup_[index] = label;
  }
}

std::string score_kind_name(ScoreKind kind) {
  switch (kind) {
    case ScoreKind::elice1: return "elice1";
    case ScoreKind::elice2: return "elice2";
    case ScoreKind::elice3_refined: return "elice3-refined";
  }
  return "unknown";
}

std::string method_name(Method method) {
  switch (method) {
    case Method::majority: return "majority";
    case Method::dawid_skene: return "dawid-skene";
    case Method::karger: return "karger";
    case Method::elice1: return "elice1";
    case Method::elice2: return "elice2";
    case Method::elice3: return "elice3";
  }
  return "unknown";
}

std::optional<Method> method_from_name(const std::string& name) {
  if (name == "majority") return Method::majority;
  if (name == "dawid-skene") return Method::dawid_skene;
  if (name == "karger") return Method::karger;
  if (name == "elice1") return Method::elice1;
  if (name == "elice2") return Method::elice2;
  if (name == "elice3") return Method::elice3;
  return std::nullopt;
}

}  // namespace crowdforge
