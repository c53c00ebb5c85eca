// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <random>

#include "doctest.h"
#include "json.hpp"
#include "photostat/report.hpp"

using namespace photostat;

TEST_CASE("property: format_real round-trips doubles") {
  std::mt19937_64 gen(1);
  std::uniform_int_distribution<std::uint64_t> bits;
  int checked = 0;
  while (checked < 20000) {
    const std::uint64_t b = bits(gen);
    double x;
    std::memcpy(&x, &b, sizeof x);
    if (!std::isfinite(x)) {
      continue;
    }
    ++checked;
    CHECK(std::strtod(format_real(x).c_str(), nullptr) == x);
  }
  CHECK(format_real(0.5) == "0.5");
  CHECK(format_real(1.0 / 3.0) == "0.33333333333333331");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("CSV layout") {
  OutputDocument doc;
  doc.add_metadata("command", "demo");
  doc.add_metadata("note", "has, comma");
  doc.set_columns({"n", "label"});
  doc.add_row({std::size_t{0}, "plain"});
  doc.add_row({-3, "with \"quote\""});
  doc.add_summary("total", 1.5);
  doc.add_summary("missing", Value());
  CHECK(doc.to_csv() ==
        "# command: demo\r\n"
        "# note: \"has, comma\"\r\n"
        "n,label\r\n"
        "0,plain\r\n"
        "-3,\"with \"\"quote\"\"\"\r\n"
        "# summary.total: 1.5\r\n"
        "# summary.missing: \r\n");
  CHECK_THROWS(doc.add_row({1}));
}

TEST_CASE("JSON layout parses and keeps values") {
  OutputDocument doc;
  doc.add_metadata("seed", std::uint64_t{18446744073709551615ULL});
  doc.add_metadata("flag", true);
  doc.set_columns({"x", "y"});
  doc.add_row({0.1, std::numeric_limits<double>::infinity()});
  doc.add_row({1e-300, Value()});
  doc.add_summary("name", "a\"b");
  const auto j = nlohmann::json::parse(doc.to_json());
  CHECK(j["metadata"]["seed"].get<std::uint64_t>() == 18446744073709551615ULL);
  CHECK(j["metadata"]["flag"].get<bool>());
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["x"].get<double>() == 0.1);
  CHECK(j["rows"][0]["y"].is_null());
  CHECK(j["rows"][1]["x"].get<double>() == 1e-300);
  CHECK(j["rows"][1]["y"].is_null());
  CHECK(j["summary"]["name"] == "a\"b");
}
