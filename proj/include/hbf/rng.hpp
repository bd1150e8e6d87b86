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

#ifndef HBF_RNG_HPP_
#define HBF_RNG_HPP_

#include <armadillo>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace hbf {

// SplitMix64 finalizer, used to turn (seed, stream) pairs into engine seeds.
inline std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

// Stream index reserved for draws that happen once per experiment (the LoS
// matrix); Monte-Carlo drops use their drop index as the stream.
inline constexpr std::uint64_t kLosStream = ~std::uint64_t{0};

// Deterministic substream generator. Each (seed, stream) pair yields an
// independent, reproducible sequence, so drops can be evaluated in any order
// or concurrently without changing the draws.
class Rng {
 public:
  Rng(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix64(seed + 0x9e3779b97f4a7c15ULL * (stream + 1))) {}

  // Uniform draw on (0, 1]; never returns 0 so logs are safe.
  double uniform() {
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
  }

  // One CN(0,1) draw (unit total variance) via the polar Box-Muller form.
  std::complex<double> cgauss() {
    const double radius = std::sqrt(-std::log(uniform()));
    const double phase = 2.0 * arma::datum::pi * uniform();
    return {radius * std::cos(phase), radius * std::sin(phase)};
  }

  // Column-major matrix of i.i.d. CN(0,1) entries.
  arma::cx_mat cgauss_matrix(arma::uword n_rows, arma::uword n_cols) {
    arma::cx_mat out(n_rows, n_cols);
    for (arma::uword c = 0; c < n_cols; ++c)
      for (arma::uword r = 0; r < n_rows; ++r) out(r, c) = cgauss();
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace hbf

#endif  // HBF_RNG_HPP_
