#include "crowdforge/io.hpp"

#include <unistd.h>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace crowdforge {

namespace {

std::string location(const std::filesystem::path& path, std::size_t line) {
  return path.string() + ":" + std::to_string(line);
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  return in;
}

// Strips trailing CR (files may come from Windows tools) and surrounding blanks.
std::string_view trimmed(std::string_view s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
    s.remove_suffix(1);
  }
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(trimmed(line.substr(start)));
      break;
    }
    fields.push_back(trimmed(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return fields;
}

long long parse_int(std::string_view field, const std::filesystem::path& path, std::size_t line) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(location(path, line) + ": expected integer, got '" + std::string(field) + "'");
  }
  return value;
}

double parse_double(std::string_view field, const std::filesystem::path& path, std::size_t line) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(location(path, line) + ": expected number, got '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

LabelMatrix read_label_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<int>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<int> row;
    for (std::string_view field : split_commas(line)) {
      long long v = parse_int(field, path, line_no);
      if (v != -1 && v != 0 && v != 1) {
        throw ParseError(location(path, line_no) + ": label must be -1, 0 or 1, got " +
                         std::to_string(v));
      }
      row.push_back(static_cast<int>(v));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(location(path, line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(path.string() + ": no label rows");
  }
  try {
    return LabelMatrix::from_rows(rows);
  } catch (const DomainError& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_label_matrix_csv(const std::filesystem::path& path, const LabelMatrix& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.n_instances(); ++i) {
    for (std::size_t j = 0; j < labels.n_labelers(); ++j) {
      if (j) out += ',';
      out += std::to_string(labels.at(i, j));
    }
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<std::pair<std::size_t, int>> read_expert_pairs_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::pair<std::size_t, int>> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    auto fields = split_commas(line);
    if (fields.size() != 2) {
      throw ParseError(location(path, line_no) + ": expected 'instance_index,label'");
    }
    long long index = parse_int(fields[0], path, line_no);
    long long label = parse_int(fields[1], path, line_no);
    if (index < 0) {
      throw ParseError(location(path, line_no) + ": negative instance index");
    }
    if (label != -1 && label != 1) {
      throw ParseError(location(path, line_no) + ": expert label must be -1 or 1");
    }
    pairs.emplace_back(static_cast<std::size_t>(index), static_cast<int>(label));
  }
  if (pairs.empty()) {
    throw ParseError(path.string() + ": no expert labels");
  }
  return pairs;
}

void write_expert_pairs_csv(const std::filesystem::path& path,
                            const std::vector<std::pair<std::size_t, int>>& pairs) {
  std::string out;
  for (const auto& [index, label] : pairs) {
    out += std::to_string(index);
    out += ',';
    out += std::to_string(label);
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<int> read_sign_vector_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<int> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    long long v = parse_int(trimmed(line), path, line_no);
    if (v != -1 && v != 1) {
      throw ParseError(location(path, line_no) + ": expected -1 or 1, got " + std::to_string(v));
    }
    values.push_back(static_cast<int>(v));
  }
  if (values.empty()) {
    throw ParseError(path.string() + ": no values");
  }
  return values;
}

void write_sign_vector_csv(const std::filesystem::path& path, const std::vector<int>& values) {
  std::string out;
  for (int v : values) {
    out += std::to_string(v);
    out += '\n';
  }
  write_text_atomic(path, out);
}

std::vector<std::vector<double>> read_features_csv(const std::filesystem::path& path) {
  std::ifstream in = open_input(path);
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (trimmed(line).empty()) continue;
    std::vector<double> row;
    for (std::string_view field : split_commas(line)) {
      row.push_back(parse_double(field, path, line_no));
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError(location(path, line_no) + ": expected " +
                       std::to_string(rows.front().size()) + " columns, got " +
                       std::to_string(row.size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw ParseError(path.string() + ": no feature rows");
  }
  return rows;
}

void write_features_csv(const std::filesystem::path& path,
                        const std::vector<std::vector<double>>& rows) {
  std::ostringstream out;
  out.precision(17);
  for (const auto& row : rows) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) out << ',';
      out << row[j];
    }
    out << '\n';
  }
  write_text_atomic(path, out.str());
}

void write_text_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path dir = path.parent_path();
  std::filesystem::path tmp =
      (dir.empty() ? std::filesystem::path(".") : dir) /
      (path.filename().string() + ".tmp." + std::to_string(::getpid()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw ParseError("cannot write " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      std::filesystem::remove(tmp);
      throw ParseError("failed writing " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw ParseError("cannot rename " + tmp.string() + " to " + path.string() + ": " +
                     ec.message());
  }
}

nlohmann::json method_params_json(const MethodParams& params) {
  nlohmann::json j = nlohmann::json::object();
  if (params.scale_c) j["scale_c"] = *params.scale_c;
  if (params.mu) j["mu"] = *params.mu;
  if (params.nu) j["nu"] = *params.nu;
  if (params.comparison_mode) j["mode"] = *params.comparison_mode;
  if (params.seed) j["seed"] = *params.seed;
  if (params.iterations) j["iterations"] = *params.iterations;
  return j;
}

nlohmann::json aggregation_result_json(const AggregationResult& result,
                                       std::optional<double> accuracy) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["method"] = method_name(result.method);
  j["params"] = method_params_json(result.params);
  j["labels"] = result.labels;
  j["abilities"] = result.abilities.values;
  j["difficulties"] = result.difficulties.values;
  if (!result.abilities.unscored.empty()) {
    j["unscored_labelers"] = result.abilities.unscored;
  }
  if (accuracy) j["accuracy"] = *accuracy;
  return j;
}

}  // namespace crowdforge
