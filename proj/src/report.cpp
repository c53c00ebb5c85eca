// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include "photostat/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace photostat {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) {
    return s;
  }
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_cell(const Value& v) {
  return std::visit(
      Overloaded{[](std::monostate) { return std::string(); },
                 [](bool b) { return std::string(b ? "true" : "false"); },
                 [](std::int64_t i) { return std::to_string(i); },
                 [](std::uint64_t u) { return std::to_string(u); },
                 [](double d) { return format_real(d); },
                 [](const std::string& s) { return csv_escape(s); }},
      v.storage());
}

// JSON has no literal for non-finite reals; they are written as null.
std::string json_cell(const Value& v) {
  return std::visit(
      Overloaded{[](std::monostate) { return std::string("null"); },
                 [](bool b) { return std::string(b ? "true" : "false"); },
                 [](std::int64_t i) { return std::to_string(i); },
                 [](std::uint64_t u) { return std::to_string(u); },
                 [](double d) {
                   return std::isfinite(d) ? format_real(d) : std::string("null");
                 },
                 [](const std::string& s) { return nlohmann::json(s).dump(); }},
      v.storage());
}

std::string json_key(const std::string& key) { return nlohmann::json(key).dump(); }

void write_json_object(std::ostringstream& os,
                       const std::vector<std::pair<std::string, Value>>& fields) {
  os << '{';
  for (std::size_t i = 0; i < fields.size(); ++i) {
    os << (i ? "," : "") << json_key(fields[i].first) << ':'
       << json_cell(fields[i].second);
  }
  os << '}';
}

}  // namespace

std::string format_real(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void OutputDocument::add_metadata(std::string key, Value value) {
  metadata_.emplace_back(std::move(key), std::move(value));
}

void OutputDocument::set_columns(std::vector<std::string> columns) {
  columns_ = std::move(columns);
}

void OutputDocument::add_row(std::vector<Value> row) {
  if (row.size() != columns_.size()) {
    throw std::logic_error("row length does not match column count");
  }
  rows_.push_back(std::move(row));
}

void OutputDocument::add_summary(std::string key, Value value) {
  summary_.emplace_back(std::move(key), std::move(value));
}

std::string OutputDocument::render(OutputFormat format) const {
  return format == OutputFormat::Json ? to_json() : to_csv();
}

std::string OutputDocument::to_csv() const {
  std::ostringstream os;
  for (const auto& [key, value] : metadata_) {
    os << "# " << key << ": " << csv_cell(value) << "\r\n";
  }
  for (std::size_t c = 0; c < columns_.size(); ++c) {
    os << (c ? "," : "") << csv_escape(columns_[c]);
  }
  os << "\r\n";
  for (const auto& row : rows_) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << (c ? "," : "") << csv_cell(row[c]);
    }
    os << "\r\n";
  }
  for (const auto& [key, value] : summary_) {
    os << "# summary." << key << ": " << csv_cell(value) << "\r\n";
  }
  return os.str();
}

std::string OutputDocument::to_json() const {
  std::ostringstream os;
  os << "{\"metadata\":";
  write_json_object(os, metadata_);
  os << ",\"rows\":[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? "," : "") << '{';
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      os << (c ? "," : "") << json_key(columns_[c]) << ':' << json_cell(rows_[r][c]);
    }
    os << '}';
  }
  os << "],\"summary\":";
  write_json_object(os, summary_);
  os << "}\n";
  return os.str();
}

}  // namespace photostat
