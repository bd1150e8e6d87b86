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

#ifndef HBF_REPORT_HPP_
#define HBF_REPORT_HPP_

#include <armadillo>
#include <cstdint>
#include <string>
#include <string_view>

namespace hbf {

// The six link/beamformer/normalization combinations the rate machinery
// covers. Downlink schemes carry their power-normalization flavor.
enum class Scheme {
  kUlZf,
  kUlMrc,
  kDlZfLongTerm,
  kDlZfShortTerm,
  kDlMrtLongTerm,
  kDlMrtShortTerm,
};

std::string_view scheme_label(Scheme scheme);

inline bool is_uplink(Scheme scheme) {
  return scheme == Scheme::kUlZf || scheme == Scheme::kUlMrc;
}

// Transmit powers against unit noise. Uplink rates use the per-user power,
// downlink rates the total power; SNR in dB maps to these linearly
// (P = 10^(snr_db/10)).
struct LinkPowers {
  double p_avg = 1.0;    // uplink per-user transmit power
  double p_total = 1.0;  // downlink total transmit power

  LinkPowers(double per_user, double total);
  static LinkPowers from_snr_db(double snr_db);
};

// Per-user and sum rates in bits/s/Hz plus Monte-Carlo bookkeeping. Closed
// forms report zero standard errors and zero drops.
struct RateReport {
  arma::vec per_user;
  double sum = 0.0;  // always accu(per_user)
  arma::vec std_err;
  double sum_std_err = 0.0;
  std::string scheme;
  std::uint64_t drops_used = 0;
  std::uint64_t drops_discarded = 0;
};

// Assembles a report with the sum invariant enforced.
RateReport make_report(Scheme scheme, arma::vec per_user, arma::vec std_err,
                       double sum_std_err, std::uint64_t drops_used,
                       std::uint64_t drops_discarded);

// Closed-form variant: zero errors, zero drops.
RateReport make_closed_form_report(Scheme scheme, arma::vec per_user);

}  // namespace hbf

#endif  // HBF_REPORT_HPP_
