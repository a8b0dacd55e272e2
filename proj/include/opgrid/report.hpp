// Copyright 2026 The opgrid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "opgrid/numlin/dense.hpp"

namespace opgrid {

enum class CheckStatus { Pass, Fail, Flagged };

std::string_view to_string(CheckStatus s);

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  double residual = 0.0;
  std::string detail;
};

/// Ordered list of named checks. Fails iff some check fails; flagged checks
/// are informational.
class VerificationReport {
 public:
  explicit VerificationReport(std::string subject = {}) : subject_(std::move(subject)) {}

  void add(Check c) { checks_.push_back(std::move(c)); }
  void pass(std::string name, std::string detail = {}, double residual = 0.0);
  void fail(std::string name, std::string detail = {}, double residual = 0.0);
  void flag(std::string name, std::string detail = {}, double residual = 0.0);
  /// Pass iff `ok`.
  void require(bool ok, std::string name, std::string detail = {}, double residual = 0.0);
  /// Exact matrix equality with the entrywise residual recorded.
  void require_equal(std::string name, const ExactMatrix& got, const ExactMatrix& want,
                     std::string detail = {});
  /// Appends other's checks with names prefixed by `prefix`.
  void merge(const VerificationReport& other, std::string_view prefix = {});

  bool passed() const;
  std::size_t count(CheckStatus s) const;
  double max_residual() const;

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }
  double elapsed_ms() const { return elapsed_ms_; }
  void set_elapsed_ms(double ms) { elapsed_ms_ = ms; }

  /// Failed and flagged check names joined by "; ".
  std::string summary() const;

 private:
  std::string subject_;
  std::vector<Check> checks_;
  double elapsed_ms_ = 0.0;
};

/// Collapses many instances of one identity into a single passing check, or
/// individual failures (the first `max_listed`, then a count).
class IdentityTally {
 public:
  IdentityTally(std::string name, std::size_t max_listed = 20)
      : name_(std::move(name)), max_listed_(max_listed) {}

  void record(bool ok, const std::string& instance, double residual = 0.0);
  /// Exact comparison of got against want.
  void record_equal(const ExactMatrix& got, const ExactMatrix& want, const std::string& instance);
  void flag(const std::string& instance, double residual = 0.0);

  void finish(VerificationReport& report) const;
  std::size_t failures() const { return failures_.size() + unlisted_; }

 private:
  std::string name_;
  std::size_t max_listed_;
  std::size_t instances_ = 0;
  std::vector<Check> failures_;
  std::vector<Check> flags_;
  std::size_t unlisted_ = 0;
  double worst_ = 0.0;
};

}  // namespace opgrid
