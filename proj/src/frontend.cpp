#include "fdsic/frontend.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace fdsic {

cplx rapp_amplify_one(cplx x, const RappPa& pa) {
    const cplx in = pa.input_gain * x;
    const double mag = std::abs(in);
    if (mag == 0.0)
        return cplx(0.0, 0.0);
    const double p = 2.0 * pa.smoothness;
    const double den = std::pow(1.0 + std::pow(mag / pa.sat_amplitude, p), 1.0 / p);
    return in / den;
}

cvec rapp_amplify(const cvec& x, const RappPa& pa) {
    cvec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = rapp_amplify_one(x[i], pa);
    return out;
}

double rapp_p3db_input_power(const RappPa& pa) {
    if (!(pa.smoothness > 0.0) || !(pa.sat_amplitude > 0.0))
        throw std::invalid_argument("rapp_p3db_input_power: invalid PA parameters");
    // Compression in dB at input amplitude r is 20*log10((1+(r/A)^(2s))^(1/(2s))),
    // strictly increasing in r. Bisect for the 3 dB point.
    const double target = 3.0;
    auto compression_db = [&](double r) {
        const double p = 2.0 * pa.smoothness;
        return (20.0 / p) * std::log10(1.0 + std::pow(r / pa.sat_amplitude, p));
    };
    double lo = pa.sat_amplitude * 1e-9;
    double hi = pa.sat_amplitude;
    while (compression_db(hi) < target)
        hi *= 2.0;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (compression_db(mid) < target)
            lo = mid;
        else
            hi = mid;
        if ((hi - lo) <= 1e-9 * hi)
            break;
    }
    if ((hi - lo) > 1e-6 * hi)
        throw std::runtime_error("rapp_p3db_input_power: bisection did not converge");
    const double r = 0.5 * (lo + hi);
    return r * r;
}

RappPa with_ibo(RappPa pa, double ibo_db, double ref_input_power) {
    if (!(ref_input_power > 0.0))
        throw std::invalid_argument("with_ibo: ref_input_power must be positive");
    const double target_power = rapp_p3db_input_power(pa) * std::pow(10.0, -ibo_db / 10.0);
    pa.input_gain = std::sqrt(target_power / ref_input_power);
    return pa;
}

MultipathChannel draw_channel(Rng& rng, int span_symbols, int oversampling) {
    if (span_symbols < 1 || oversampling < 1)
        throw std::invalid_argument("draw_channel: spans must be >= 1");
    MultipathChannel h;
    h.span_symbols = span_symbols;
    h.taps.resize(static_cast<std::size_t>(span_symbols) * oversampling);
    double energy = 0.0;
    for (auto& t : h.taps) {
        t = rng.cgaussian();
        energy += std::norm(t);
    }
    const double scale = 1.0 / std::sqrt(energy);
    for (auto& t : h.taps)
        t *= scale;
    return h;
}

cvec apply_channel(const cvec& x, const MultipathChannel& h, ConvMode mode) {
    return fir_convolve(x, h.taps, mode);
}

cvec add_awgn(const cvec& x, const NoiseSpec& spec, Rng& rng) {
    if (x.empty())
        throw std::invalid_argument("add_awgn: empty input");
    if (std::isinf(spec.snr_db) && spec.snr_db > 0.0)
        return x;
    const double variance = measure_power(x) / std::pow(10.0, spec.snr_db / 10.0);
    return add_awgn_variance(x, variance, rng);
}

cvec add_awgn_variance(const cvec& x, double noise_variance, Rng& rng) {
    if (x.empty())
        throw std::invalid_argument("add_awgn_variance: empty input");
    if (noise_variance == 0.0)
        return x;
    const double sigma = std::sqrt(noise_variance);
    cvec out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] + sigma * rng.cgaussian();
    return out;
}

} // namespace fdsic
