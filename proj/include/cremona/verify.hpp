// Copyright 2026 The cremona-kit Authors
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
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cremona/scalar.hpp"

namespace cremona {

// Randomized property suites. Trial k of a run seeded with s draws all of
// its randomness from Rng(Rng::mix(s, k)), so a report depends only on
// (suite, seed, trials, field, dim).

struct SuiteFailure {
  std::string case_id;
  std::string inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const SuiteFailure&, const SuiteFailure&) = default;
};

struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::vector<SuiteFailure> failures;
  std::vector<SuiteReport> parts;  // filled for "all" only

  bool ok() const { return failures.empty() && passed == trials; }

  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t trials = 20;
  FieldSpec field = FieldSpec::rational();
  std::size_t dim = 2;
};

// polynomials, cremona, deformation, linear, affineauto, cocycles, all.
const std::vector<std::string>& suite_names();

// Throws INVALID_ARGUMENT for an unknown suite name.
SuiteReport run_suite(std::string_view name, const SuiteOptions& options);

// JSON with a top-level "schema": 1.
std::string report_to_json(const SuiteReport& report);
// Throws PARSE_ERROR on malformed input.
SuiteReport report_from_json(std::string_view text);

std::string report_summary(const SuiteReport& report);

}  // namespace cremona
