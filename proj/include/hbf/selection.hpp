// Copyright 2026 The Authors.
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

#ifndef HBF_SELECTION_HPP_
#define HBF_SELECTION_HPP_

#include <armadillo>
#include <cstdint>
#include <string>

#include "hbf/approx.hpp"
#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/report.hpp"

namespace hbf {

enum class SelectionScheme { kExhaustive, kPerUser, kTwoStep };

// Everything a beam-selection run needs: long-term channel statistics, the
// codebook, the rate approximation to optimize, and the stream budget.
// Selections use only long-term quantities (Hbar, Omega, D); no per-drop CSI.
struct SelectionContext {
  RiceanParams params;
  DftCodebook codebook;
  Scheme objective = Scheme::kUlZf;
  LinkPowers powers{1.0, 1.0};
  arma::uword num_streams = 0;              // Ns
  arma::uword margin = 1;                   // two-step margin n
  std::uint64_t max_candidates = 10000000;  // exhaustive enumeration budget

  arma::uword streams_per_user() const {  // C = floor(Ns / Nu)
    return num_streams / params.num_users();
  }
};

// Outcome of a selection run. `comparisons` counts the evaluations actually
// performed; `theoretical_comparisons` is the published formula for the
// scheme, as an exact decimal (exhaustive grows as M^Ns and can exceed 64
// bits). The two match for per-user and two-step.
struct SelectionResult {
  BeamSelection selection;
  std::uint64_t comparisons = 0;
  std::string theoretical_comparisons;
  double objective = 0.0;  // approximate sum rate of the chosen selection
  std::string scheme;
  arma::uword margin = 0;  // two-step only
};

// Evaluates every distinct Ns-subset of the codebook and returns the one
// maximizing the configured rate approximation; ties break to the
// lexicographically smallest sorted index list. Refuses to run when the
// subset count exceeds the budget, naming the count. (The published
// comparison count M^Ns enumerates ordered tuples with repeats; repeats can
// never help and order never matters, so only distinct subsets are visited.)
SelectionResult exhaustive_search(const SelectionContext& ctx);

// Allocates C beams to each of the first Nu-1 users and the remainder to the
// last one, each user taking its strongest projected-power beams; a beam
// already claimed by an earlier user is skipped for the next best. Requires
// Ns >= Nu.
SelectionResult per_user_selection(const SelectionContext& ctx);

// Step 1 runs per-user selection with C+n beams per user; step 2 greedily
// removes the Nu(C+n) - Ns surplus beams, each round dropping the beam whose
// removal leaves the highest approximate rate (ties removed at the lowest
// position, survivor order never reshuffled). Requires Nu(C+n) <= M.
SelectionResult two_step_selection(const SelectionContext& ctx);

// The published comparison-count formulas as exact decimals:
// exhaustive M^Ns, per-user M*Nu, two-step M*Nu + [Nu^2(C+n)^2 + Nu(C+n)
// - Ns^2 - Ns]/2 with C = floor(Ns/Nu).
std::string comparison_count(SelectionScheme scheme, arma::uword order,
                             arma::uword num_streams, arma::uword num_users,
                             arma::uword margin);

}  // namespace hbf

#endif  // HBF_SELECTION_HPP_
