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

#ifndef HBF_LINKRATES_HPP_
#define HBF_LINKRATES_HPP_

#include <armadillo>
#include <cstdint>
#include <optional>

#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/report.hpp"

namespace hbf {

// Monte-Carlo settings. Drops are evaluated on independent (seed, drop)
// substreams; `threads` only controls scheduling and never the result
// (0 = one worker per hardware thread).
struct McConfig {
  std::uint64_t drops = 1000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

// Downlink power normalization flavor: one coefficient from long-term
// statistics, or per-stream coefficients from the instantaneous channel.
enum class Normalization { kLongTerm, kShortTerm };

// A drop is discarded as degenerate when the effective Gram matrix has
// condition number above this limit (or is outright singular).
inline constexpr double kDegenerateConditionLimit = 1e12;

// One downlink precoder draw: the unnormalized precoder and the short-term
// normalization coefficients rho_k = 1/(sqrt(Nu) ||w_k||). Long-term
// evaluation replaces rho with its constant.
struct PrecoderDrop {
  arma::cx_mat wbar;  // Ns x Nu
  arma::vec rho;
};

// --- per-drop kernels -------------------------------------------------------

// Uplink ZF rates for one drop, log2(1 + p_avg / [(Geq^H Geq)^-1]_kk).
// Returns nullopt when the Gram matrix is degenerate.
std::optional<arma::vec> ul_zf_drop_rate(const EffectiveChannel& geq,
                                         const LinkPowers& powers);

// Uplink MRC rates for one drop from the per-user SINR. A zero column yields
// rate 0 for that user.
arma::vec ul_mrc_drop_rate(const EffectiveChannel& geq,
                           const LinkPowers& powers);

// Downlink ZF precoder Wbar = Geq* (Geq^T Geq*)^-1 with short-term rho.
// Returns nullopt when the Gram matrix is degenerate.
std::optional<PrecoderDrop> zf_precoder_drop(const EffectiveChannel& geq);

// Downlink MRT precoder Wbar = Geq* with short-term rho (infinite for a zero
// column; short-term evaluation discards such drops).
PrecoderDrop mrt_precoder_drop(const EffectiveChannel& geq);

// Downlink per-user SINRs for a given normalization, any precoder flavor:
//   sinr_k = P rho_k^2 ||g_k||^4 / (P sum_{j!=k} rho_j^2 |g_k^H g_j|^2 + 1)
arma::vec dl_mrt_drop_sinr(const EffectiveChannel& geq,
                           const arma::vec& rho_sq, double p_total);

// Exact expectation of ||Geq||_F^2 over the fading, sum_i beta_i/(K_i+1) *
// (Ns + K_i ||F hbar_i||^2); the reciprocal is the long-term MRT rho^2.
double expected_geq_frobenius_sq(const RiceanParams& params,
                                 const AnalogBeamformer& bf);

// --- Monte-Carlo evaluators -------------------------------------------------

// Ergodic uplink rate (kUlZf or kUlMrc) averaged over seeded drops.
// Deterministic for a fixed seed regardless of thread count; degenerate drops
// are discarded and counted.
RateReport mc_rate(Scheme kind, const RiceanParams& params,
                   const AnalogBeamformer& bf, const LinkPowers& powers,
                   const McConfig& mc);

// Ergodic downlink ZF rate. Long-term: E||Wbar||_F^2 is estimated from the
// same drop set, then every user gets log2(1 + P rho^2) with no per-drop
// variance. Short-term: per-drop log2(1 + P rho_k^2) averaged. Long-term
// requires Ns > Nu.
RateReport dl_zf_rate(const RiceanParams& params, const AnalogBeamformer& bf,
                      const LinkPowers& powers, Normalization norm,
                      const McConfig& mc);

// Ergodic downlink MRT rate. Long-term rho^2 comes from the exact closed form
// above; short-term uses per-drop column norms and discards zero-column drops.
RateReport dl_mrt_rate(const RiceanParams& params, const AnalogBeamformer& bf,
                       const LinkPowers& powers, Normalization norm,
                       const McConfig& mc);

// --- internals exposed for tests --------------------------------------------

// Mean/stderr aggregation over drop-indexed per-user vectors; an absent entry
// marks a discarded drop. The reduction is index-ordered, so results do not
// depend on how the drops were produced.
RateReport aggregate_drops(Scheme scheme,
                           const std::vector<std::optional<arma::vec>>& rates);

}  // namespace hbf

#endif  // HBF_LINKRATES_HPP_
