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

#include "opgrid/report.hpp"

#include <algorithm>

namespace opgrid {

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Flagged: return "flagged";
  }
  return "fail";
}

void VerificationReport::pass(std::string name, std::string detail, double residual) {
  add({std::move(name), CheckStatus::Pass, residual, std::move(detail)});
}

void VerificationReport::fail(std::string name, std::string detail, double residual) {
  add({std::move(name), CheckStatus::Fail, residual, std::move(detail)});
}

void VerificationReport::flag(std::string name, std::string detail, double residual) {
  add({std::move(name), CheckStatus::Flagged, residual, std::move(detail)});
}

void VerificationReport::require(bool ok, std::string name, std::string detail, double residual) {
  add({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, residual, std::move(detail)});
}

void VerificationReport::require_equal(std::string name, const ExactMatrix& got, const ExactMatrix& want,
                                       std::string detail) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    fail(std::move(name), "shape mismatch " + detail);
    return;
  }
  const double r = residual(got, want);
  require(r == 0.0 && got == want, std::move(name), std::move(detail), r);
}

void VerificationReport::merge(const VerificationReport& other, std::string_view prefix) {
  for (Check c : other.checks_) {
    c.name = std::string(prefix) + c.name;
    checks_.push_back(std::move(c));
  }
}

bool VerificationReport::passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerificationReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

double VerificationReport::max_residual() const {
  double r = 0.0;
  for (const auto& c : checks_) r = std::max(r, c.residual);
  return r;
}

std::string VerificationReport::summary() const {
  std::string out;
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Pass) continue;
    if (!out.empty()) out += "; ";
    out += std::string(to_string(c.status)) + ": " + c.name;
    if (!c.detail.empty()) out += " (" + c.detail + ")";
  }
  return out;
}

void IdentityTally::record(bool ok, const std::string& instance, double residual) {
  ++instances_;
  worst_ = std::max(worst_, residual);
  if (ok) return;
  if (failures_.size() < max_listed_) {
    failures_.push_back({name_, CheckStatus::Fail, residual, instance});
  } else {
    ++unlisted_;
  }
}

void IdentityTally::record_equal(const ExactMatrix& got, const ExactMatrix& want, const std::string& instance) {
  if (got.rows() != want.rows() || got.cols() != want.cols()) {
    record(false, instance + " (shape mismatch)", 0.0);
    return;
  }
  const bool ok = got == want;
  record(ok, instance, ok ? 0.0 : residual(got, want));
}

void IdentityTally::flag(const std::string& instance, double residual) {
  ++instances_;
  flags_.push_back({name_, CheckStatus::Flagged, residual, instance});
}

void IdentityTally::finish(VerificationReport& report) const {
  if (failures_.empty() && unlisted_ == 0) {
    report.pass(name_, std::to_string(instances_) + " instances", worst_);
  }
  for (const auto& f : failures_) report.add(f);
  if (unlisted_ > 0) {
    report.fail(name_, std::to_string(unlisted_) + " further failures not listed", worst_);
  }
  for (const auto& f : flags_) report.add(f);
}

}  // namespace opgrid
