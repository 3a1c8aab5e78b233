#pragma once

#include "fdsic/lsq.hpp"
#include "fdsic/signal.hpp"

namespace fdsic {

/// Memory-polynomial structure: odd polynomial degrees 1, 3, ..., max_degree
/// over an FIR memory of memory_symbols symbol-spaced taps.
struct HammersteinConfig {
    int max_degree = 3;
    int memory_symbols = 4;

    int basis_per_tap() const { return (max_degree + 1) / 2; }
    int coeff_count() const { return memory_symbols * basis_per_tap(); }
    void validate() const;
};

/// Stacked coefficient vector, length memory_symbols * (max_degree+1)/2,
/// tap-major with ascending odd degree within each tap.
struct HammersteinModel {
    cvec q;
    HammersteinConfig config;
};

/// One regressor row for the window [s[n], s[n-1], ..., s[n-L_q+1]]:
/// entry (tap l, odd degree p) = window[l] * |window[l]|^(p-1).
cvec basis_row(const cvec& window, const HammersteinConfig& cfg);

/// N x coeff_count regressor; windows before the block start are zero-padded.
CMatrix build_regressor(const cvec& s, const HammersteinConfig& cfg);

HammersteinModel fit_hammerstein(const cvec& s_pilot, const cvec& lambda_pilot,
                                 const HammersteinConfig& cfg, double ridge = 0.0);

/// Out-of-sample interference regeneration: build_regressor(s_data) * q.
cvec regenerate(const HammersteinModel& model, const cvec& s_data);

/// Elementwise lambda - r_hat.
cvec cancel(const cvec& lambda_rx, const cvec& r_hat);

} // namespace fdsic
