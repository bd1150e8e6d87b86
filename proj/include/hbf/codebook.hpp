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

#ifndef HBF_CODEBOOK_HPP_
#define HBF_CODEBOOK_HPP_

#include <armadillo>
#include <vector>

namespace hbf {

// The M-point unitary DFT beam codebook. Row n is the n-th analog beam; every
// entry has modulus 1/sqrt(M) (constant-modulus analog constraint) and the
// rows are orthonormal.
struct DftCodebook {
  arma::uword order = 0;  // antenna count M
  arma::cx_mat entries;   // M x M, entry (m, n) = exp(j*2*pi*m*n/M)/sqrt(M)
};

// An ordered list of distinct beam indices, each in [0, M). Indices are
// zero-based everywhere, including the CLI and output files.
struct BeamSelection {
  std::vector<arma::uword> indices;

  // Rejects an empty list or duplicate indices. Range checks against a
  // codebook happen where the selection is materialized.
  explicit BeamSelection(std::vector<arma::uword> beam_indices);

  arma::uword size() const { return static_cast<arma::uword>(indices.size()); }
};

// Analog beamformer F: the selected rows of the DFT codebook, in selection
// order. Satisfies F * F^H = I because the rows of U are orthonormal and the
// selection is duplicate-free.
struct AnalogBeamformer {
  arma::cx_mat matrix;   // Ns x M
  BeamSelection source;  // the selection this beamformer was built from

  arma::uword num_streams() const { return matrix.n_rows; }
  arma::uword num_antennas() const { return matrix.n_cols; }
};

// Builds the unitary DFT codebook of the given order. Deterministic; rejects
// order 0.
DftCodebook build_dft(arma::uword order);

// Extracts the selected codebook rows. Rejects out-of-range indices (the
// selection itself already forbids duplicates).
AnalogBeamformer analog_beamformer(const DftCodebook& codebook,
                                   const BeamSelection& selection);

// Projected power of v on every DFT beam: entry n is |u_n^H v|^2 where u_n is
// the n-th beam. The powers sum to ||v||^2 (unitarity). Rejects a length
// mismatch.
arma::vec beam_projection_powers(const DftCodebook& codebook,
                                 const arma::cx_vec& v);

}  // namespace hbf

#endif  // HBF_CODEBOOK_HPP_
