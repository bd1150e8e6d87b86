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

#ifndef HBF_APPROX_HPP_
#define HBF_APPROX_HPP_

#include <armadillo>
#include <vector>

#include "hbf/channel.hpp"
#include "hbf/codebook.hpp"
#include "hbf/report.hpp"

namespace hbf {

// Central-Wishart surrogate covariance of the effective channel Gram matrix:
//   SigmaHat = (Omega + I)^-1 + (1/Ns) T^H T,  T = F Hbar [Omega (Omega+I)^-1]^(1/2)
// together with its leave-one-out family (user k's row and column removed) and
// the ascending eigenvalues of both. The leave-one-out eigenvalues interlace
// the full ones.
struct SigmaHat {
  arma::cx_mat full;                      // Nu x Nu, Hermitian positive definite
  std::vector<arma::cx_mat> leave_one_out;  // per user, (Nu-1) x (Nu-1)
  arma::vec eigen_full;                   // ascending
  std::vector<arma::vec> eigen_loo;       // per user, ascending
};

// The chi moment quantities of the beamformed Ricean channel:
//   chi3_k   = K_k ||F hbar_k||^2 + Ns
//   chi1_k   = chi3_k^2 + 2 chi3_k - Ns
//   chi2_kj  = K_k K_j |hbar_j^H F^H F hbar_k|^2 + chi3_j + chi3_k - Ns  (j != k)
// chi2 is symmetric; its diagonal is unused and left at zero.
struct ChiSet {
  arma::vec chi3;
  arma::vec chi1;
  arma::mat chi2;  // Nu x Nu
};

// Digamma function for x > 0, accurate to 1e-10 or better; upward recurrence
// into the asymptotic series.
double digamma(double x);

// Builds the surrogate covariance family from the channel statistics and a
// beamformer, or directly from the projected LoS Gram matrix
// Hbar^H F^H F Hbar (which is all the formulas depend on).
SigmaHat sigma_hat(const RiceanParams& params, const AnalogBeamformer& bf);
SigmaHat sigma_hat_from_gram(const arma::cx_mat& los_gram,
                             arma::uword num_streams, const arma::vec& kappas);

// The per-user eigenvalue-product ratios
//   eps_k = prod_i alpha_i / prod_i alphabar_{k,i}
// which also equal det(SigmaHat) / det(SigmaHat_k).
arma::vec epsilon_factors(const SigmaHat& sh);

// The chi quantities, from statistics + beamformer or from the LoS Gram.
ChiSet chi_set(const RiceanParams& params, const AnalogBeamformer& bf);
ChiSet chi_set_from_gram(const arma::cx_mat& los_gram, arma::uword num_streams,
                         const arma::vec& kappas);

// Closed-form ergodic rate approximation for one scheme. All six formulas
// depend on the beamformer only through the projected LoS Gram matrix, so a
// Gram-level entry point is provided for callers that cache it.
// Preconditions: Ns >= Nu for the ZF schemes; Ns > Nu for downlink ZF with
// long-term normalization (rejected otherwise).
RateReport approx_rate(Scheme scheme, const RiceanParams& params,
                       const AnalogBeamformer& bf, const LinkPowers& powers);
RateReport approx_rate_from_gram(Scheme scheme, const arma::cx_mat& los_gram,
                                 arma::uword num_streams,
                                 const arma::vec& betas,
                                 const arma::vec& kappas,
                                 const LinkPowers& powers);

// Rayleigh (K = 0) reductions of the uplink approximations. Independent of
// the beam choice. Only kUlZf and kUlMrc are defined.
RateReport rayleigh_rate(Scheme scheme, const arma::vec& betas,
                         arma::uword num_streams, arma::uword num_users,
                         const LinkPowers& powers);

// Pure-LoS (K -> inf) rate limits for all six schemes, given the projected
// LoS powers ||F hbar_k||^2. Valid only when the effective LoS components are
// orthogonal, which is the caller's responsibility. A zero projection is
// rejected for downlink ZF long-term (its harmonic sum diverges).
RateReport los_limit_rate(Scheme scheme, const arma::vec& betas,
                          const arma::vec& los_projections,
                          arma::uword num_streams, arma::uword num_users,
                          const LinkPowers& powers);

}  // namespace hbf

#endif  // HBF_APPROX_HPP_
