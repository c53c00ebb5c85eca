// Copyright 2026 The photostat Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace photostat {

/// Raised when an argument lies outside the domain of an operation
/// (negative occupancy, a = 0 in a cavity, nonpositive temperature, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace photostat
