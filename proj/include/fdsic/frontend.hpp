#pragma once

#include "fdsic/rng.hpp"
#include "fdsic/signal.hpp"

namespace fdsic {

/// Rapp AM/AM solid-state PA model. Output phase equals input phase;
/// magnitude saturates at sat_amplitude.
struct RappPa {
    double smoothness = 2.0;
    double sat_amplitude = 1.0;
    double input_gain = 1.0;
};

/// Per-sample out = g*x / (1 + (|g*x|/A)^(2*sigma))^(1/(2*sigma)).
cvec rapp_amplify(const cvec& x, const RappPa& pa);
cplx rapp_amplify_one(cplx x, const RappPa& pa);

/// Input power at which the AM/AM curve sits 3 dB below the linear
/// extrapolation, found by bisection (input_gain plays no role here).
double rapp_p3db_input_power(const RappPa& pa);

/// Pick input_gain so a signal of mean power ref_input_power is driven
/// ibo_db below the 3 dB compression input power.
RappPa with_ibo(RappPa pa, double ibo_db, double ref_input_power);

/// Sample-spaced multipath response, span_symbols * oversampling taps,
/// unit power (sum |taps|^2 = 1).
struct MultipathChannel {
    cvec taps;
    int span_symbols = 1;
};

/// i.i.d. complex-Gaussian taps with uniform power profile, normalized.
MultipathChannel draw_channel(Rng& rng, int span_symbols, int oversampling);

cvec apply_channel(const cvec& x, const MultipathChannel& h, ConvMode mode = ConvMode::aligned);

struct NoiseSpec {
    double snr_db = 0.0; ///< signal power over noise power, measured on x
};

/// Add circularly-symmetric complex Gaussian noise at the requested SNR
/// relative to measure_power(x). +inf SNR returns x unchanged.
cvec add_awgn(const cvec& x, const NoiseSpec& spec, Rng& rng);

/// Same, with the noise variance per complex sample given explicitly.
cvec add_awgn_variance(const cvec& x, double noise_variance, Rng& rng);

} // namespace fdsic
