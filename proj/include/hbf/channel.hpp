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

#ifndef HBF_CHANNEL_HPP_
#define HBF_CHANNEL_HPP_

#include <armadillo>
#include <cstdint>
#include <vector>

#include "hbf/codebook.hpp"

namespace hbf {

// How the deterministic LoS matrix is produced: i.i.d. CN(0,1) entries drawn
// once and held fixed, or half-wavelength ULA steering vectors at per-user
// angles.
struct LosModel {
  enum class Kind { kGaussianIid, kUlaSteering };

  Kind kind = Kind::kGaussianIid;
  std::vector<double> angles_rad;  // ULA only; one angle per user

  static LosModel gaussian() { return {}; }
  static LosModel ula(std::vector<double> angles);
};

// Ricean channel statistics for all users: large-scale gains beta_k, Ricean
// factors K_k (linear scale), and the LoS matrix with column k serving user k.
struct RiceanParams {
  arma::vec betas;    // > 0
  arma::vec kappas;   // >= 0, finite
  arma::cx_mat los;   // M x Nu

  RiceanParams(arma::vec betas_in, arma::vec kappas_in, arma::cx_mat los_in);

  arma::uword num_antennas() const { return los.n_rows; }
  arma::uword num_users() const { return los.n_cols; }
};

// One fading draw of the M x Nu multiuser channel G.
struct ChannelRealization {
  arma::cx_mat g;
};

// The analog-beamformed channel G_eq = F * G seen by the digital stage.
struct EffectiveChannel {
  arma::cx_mat geq;  // Ns x Nu

  arma::uword num_streams() const { return geq.n_rows; }
  arma::uword num_users() const { return geq.n_cols; }
};

// Draws (or constructs) the LoS matrix. The Gaussian variant uses a dedicated
// substream of the seed so it is independent of every drop. ULA angles must
// lie in [-pi/2, pi/2].
arma::cx_mat gen_los(const LosModel& model, arma::uword num_antennas,
                     arma::uword num_users, std::uint64_t seed);

// One Ricean fading draw:
//   G = (Hbar * [Omega (Omega+I)^-1]^(1/2) + Hw * [(Omega+I)^-1]^(1/2)) * D^(1/2)
// with Hw i.i.d. CN(0,1) from the (seed, drop) substream. The same pair always
// reproduces G bit for bit, regardless of evaluation order.
ChannelRealization sample_channel(const RiceanParams& params,
                                  std::uint64_t seed, std::uint64_t drop);

// G_eq = F * G. Rejects a dimension mismatch.
EffectiveChannel effective_channel(const AnalogBeamformer& beamformer,
                                   const ChannelRealization& channel);

}  // namespace hbf

#endif  // HBF_CHANNEL_HPP_
