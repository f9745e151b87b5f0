#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"

#include "crowdforge/types.hpp"

namespace crowdforge {

// File formats (all headerless CSV):
//   labels:   one row per instance, comma-separated -1/1/0
//   expert:   lines "instance_index,label" with 0-based index and label +/-1
//   truth:    one +/-1 per line
//   features: one row per instance, comma-separated reals
// Readers throw ParseError naming the path and 1-based line of the offense.

LabelMatrix read_label_matrix_csv(const std::filesystem::path& path);
void write_label_matrix_csv(const std::filesystem::path& path, const LabelMatrix& labels);

std::vector<std::pair<std::size_t, int>> read_expert_pairs_csv(const std::filesystem::path& path);
void write_expert_pairs_csv(const std::filesystem::path& path,
                            const std::vector<std::pair<std::size_t, int>>& pairs);

std::vector<int> read_sign_vector_csv(const std::filesystem::path& path);
void write_sign_vector_csv(const std::filesystem::path& path, const std::vector<int>& values);

std::vector<std::vector<double>> read_features_csv(const std::filesystem::path& path);
void write_features_csv(const std::filesystem::path& path,
                        const std::vector<std::vector<double>>& rows);

// Writes to a sibling temp file and renames, so readers never observe a
// partial file.
void write_text_atomic(const std::filesystem::path& path, const std::string& content);

nlohmann::json method_params_json(const MethodParams& params);

// Result schema v1: {schema_version, method, params, labels, abilities,
// difficulties, accuracy?}.
nlohmann::json aggregation_result_json(const AggregationResult& result,
                                       std::optional<double> accuracy = std::nullopt);

}  // namespace crowdforge
