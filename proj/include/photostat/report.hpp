// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace photostat {

/// One cell of an output table: empty, boolean, integer, real or text.
class Value {
 public:
  using Storage =
      std::variant<std::monostate, bool, std::int64_t, std::uint64_t, double, std::string>;

  Value() = default;
  Value(bool b) : v_(b) {}
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T i) {
    if constexpr (std::is_signed_v<T>) {
      v_ = static_cast<std::int64_t>(i);
    } else {
      v_ = static_cast<std::uint64_t>(i);
    }
  }
  Value(double d) : v_(d) {}
  Value(std::string s) : v_(std::move(s)) {}
  Value(const char* s) : v_(std::string(s)) {}

  [[nodiscard]] const Storage& storage() const { return v_; }

 private:
  Storage v_;
};

/// Reals use 17 significant digits, enough to round-trip a double.
[[nodiscard]] std::string format_real(double x);

enum class OutputFormat { Csv, Json };

/// Table with run metadata and an optional trailing summary.
///
/// CSV: "# key: value" comment lines for metadata, one header row, data rows,
/// then "# summary.key: value" lines. JSON: one object with "metadata",
/// "rows" (array of objects keyed by column) and "summary".
class OutputDocument {
 public:
  void add_metadata(std::string key, Value value);
  void set_columns(std::vector<std::string> columns);
  /// Row length must match the column count.
  void add_row(std::vector<Value> row);
  void add_summary(std::string key, Value value);

  [[nodiscard]] std::string render(OutputFormat format) const;
  [[nodiscard]] std::string to_csv() const;
  [[nodiscard]] std::string to_json() const;

 private:
  std::vector<std::pair<std::string, Value>> metadata_;
  std::vector<std::string> columns_;
  std::vector<std::vector<Value>> rows_;
  std::vector<std::pair<std::string, Value>> summary_;
};

}  // namespace photostat
