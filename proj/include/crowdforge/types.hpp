#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crowdforge/errors.hpp"

namespace crowdforge {

// N x M matrix of crowd labels, instances by labelers. Entries are -1/+1,
// 0 meaning "labeler j did not label instance i". Aggregators skip zeros and
// divide by observed counts, so incomplete matrices are first-class.
class LabelMatrix {
 public:
  LabelMatrix(std::size_t n_instances, std::size_t n_labelers);

  // Builds and validates in one step; rows must be rectangular.
  static LabelMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int at(std::size_t instance, std::size_t labeler) const {
    return entries_[instance * n_labelers_ + labeler];
  }
  void set(std::size_t instance, std::size_t labeler, int value);

  std::size_t n_instances() const { return n_instances_; }
  std::size_t n_labelers() const { return n_labelers_; }

  std::size_t observed_in_instance(std::size_t instance) const;
  std::size_t observed_by_labeler(std::size_t labeler) const;

  // Rejects any all-zero row or column; entry values are checked at set time.
  void validate() const;

  const std::vector<int>& raw() const { return entries_; }

 private:
  std::size_t n_instances_;
  std::size_t n_labelers_;
  std::vector<int> entries_;
};

// Reference labels for a subset of instances, indexed 0-based against the
// label matrix rows.
class ExpertLabels {
 public:
  // Pairs of (instance index, label). Indices must be unique and < n_instances;
  // labels +/-1; at least one pair.
  ExpertLabels(std::vector<std::pair<std::size_t, int>> pairs, std::size_t n_instances);

  std::size_t size() const { return pairs_.size(); }
  const std::vector<std::pair<std::size_t, int>>& pairs() const { return pairs_; }

  // 0 when the instance has no expert label.
  int label_for(std::size_t instance) const {
    return instance < lookup_.size() ? lookup_[instance] : 0;
  }
  bool covers(std::size_t instance) const { return label_for(instance) != 0; }

 private:
  std::vector<std::pair<std::size_t, int>> pairs_;
  std::vector<int> lookup_;
};

enum class ScoreKind { elice1, elice2, elice3_refined };

std::string score_kind_name(ScoreKind kind);

// Per-labeler ability scores. `unscored` lists labelers that had no overlap
// with the expert subset; their score is fixed at 0.
struct AbilityVector {
  std::vector<double> values;
  ScoreKind kind = ScoreKind::elice1;
  std::vector<std::size_t> unscored;
};

struct DifficultyVector {
  std::vector<double> values;
  ScoreKind kind = ScoreKind::elice1;
};

enum class Method { majority, dawid_skene, karger, elice1, elice2, elice3 };

std::string method_name(Method method);
std::optional<Method> method_from_name(const std::string& name);

// Knobs a method actually used, recorded for reproducibility. Unset fields
// do not apply to the method.
struct MethodParams {
  std::optional<double> scale_c;
  std::optional<double> mu;
  std::optional<double> nu;
  std::optional<std::string> comparison_mode;
  std::optional<std::uint64_t> seed;
  std::optional<int> iterations;
};

struct AggregationResult {
  std::vector<int> labels;  // +/-1 per instance
  AbilityVector abilities;
  DifficultyVector difficulties;
  Method method = Method::majority;
  MethodParams params;
};

}  // namespace crowdforge
