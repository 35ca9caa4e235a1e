// Copyright 2026 The Orlicz Toolkit Authors
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

#ifndef ORLICZ_CONFIG_HPP_
#define ORLICZ_CONFIG_HPP_

// Every default used by the library and the CLI lives here. Flags override
// individual values; nothing is read from the environment.

namespace orlicz::defaults {

inline constexpr char kVersion[] = "0.1.0";

// Evaluation and validation.
inline constexpr double kTMax = 1.0;
inline constexpr int kPointsPerDecade = 64;
inline constexpr double kGridTMin = 1e-30;
// Asymptotic probes below t_min at log t = 2^j * log t_min, j = 1..kTailDoublings.
inline constexpr int kTailDoublings = 20;
inline constexpr double kValidationTolerance = 1e-12;

// Modular space.
inline constexpr double kNormRelTol = 1e-12;
inline constexpr int kNormMaxBisections = 200;

// Indices.
inline constexpr double kBoydEscape = 1e9;
inline constexpr double kBoydWidth = 0.01;
inline constexpr double kBoydGrowthTol = 1e-9;
inline constexpr double kBoydPMin = 1.0;
inline constexpr double kBoydPMax = 64.0;
inline constexpr double kDelta2Escape = 1e6;
inline constexpr double kDelta2C = 2.0;
inline constexpr double kEquivalenceSpread = 1e6;

// Relative Delta2 sequences.
inline constexpr double kPositivityThreshold = 1e-12;
inline constexpr double kTMembershipTol = 1e-12;
inline constexpr double kCertificateTol = 1e-12;
inline constexpr double kExtractKMax = 64;

// Subspaces.
inline constexpr double kTruncationTol = 1e-9;
inline constexpr double kIsometryTol = 1e-10;
inline constexpr int kWitnessKMax = 1024;

// Smoothness.
inline constexpr double kLimitThreshold = 1e-6;

// CLI.
inline constexpr unsigned kSeed = 42;

}  // namespace orlicz::defaults

#endif  // ORLICZ_CONFIG_HPP_
