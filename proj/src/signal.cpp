#include "fdsic/signal.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdsic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Root-raised-cosine impulse response at time t (in symbol periods).
double rrc_pulse(double t, double beta) {
    const double four_bt = 4.0 * beta * t;
    if (std::abs(t) < 1e-10)
        return 1.0 - beta + 4.0 * beta / kPi;
    if (std::abs(std::abs(four_bt) - 1.0) < 1e-9) {
        const double a = kPi / (4.0 * beta);
        return (beta / std::sqrt(2.0)) *
               ((1.0 + 2.0 / kPi) * std::sin(a) + (1.0 - 2.0 / kPi) * std::cos(a));
    }
    const double num = std::sin(kPi * t * (1.0 - beta)) + four_bt * std::cos(kPi * t * (1.0 + beta));
    return num / (kPi * t * (1.0 - four_bt * four_bt));
}

} // namespace

FirTaps rrc_taps(double rolloff, int span_symbols, int oversampling) {
    if (!(rolloff > 0.0) || rolloff > 1.0)
        throw std::invalid_argument("rrc_taps: rolloff must be in (0, 1]");
    if (span_symbols < 1 || oversampling < 1)
        throw std::invalid_argument("rrc_taps: span_symbols and oversampling must be >= 1");

    const int len = span_symbols * oversampling;
    const double center = (len - 1) / 2.0;
    FirTaps f;
    f.span_symbols = span_symbols;
    f.oversampling = oversampling;
    f.coeffs.resize(len);
    double energy = 0.0;
    for (int i = 0; i < len; ++i) {
        const double v = rrc_pulse((i - center) / oversampling, rolloff);
        f.coeffs[i] = cplx(v, 0.0);
        energy += v * v;
    }
    const double scale = 1.0 / std::sqrt(energy);
    for (auto& c : f.coeffs)
        c *= scale;
    return f;
}

FirTaps delta_taps() {
    FirTaps f;
    f.coeffs = {cplx(1.0, 0.0)};
    f.span_symbols = 1;
    f.oversampling = 1;
    return f;
}

FirTaps time_reverse(const FirTaps& f) {
    FirTaps r = f;
    std::reverse(r.coeffs.begin(), r.coeffs.end());
    return r;
}

cvec upsample(const cvec& s, int m) {
    if (m < 1)
        throw std::invalid_argument("upsample: factor must be >= 1");
    cvec out(s.size() * static_cast<std::size_t>(m), cplx(0.0, 0.0));
    for (std::size_t n = 0; n < s.size(); ++n)
        out[n * static_cast<std::size_t>(m)] = s[n];
    return out;
}

cvec downsample(const cvec& x, int m, int phase) {
    if (m < 1)
        throw std::invalid_argument("downsample: factor must be >= 1");
    if (phase < 0 || phase >= m)
        throw std::invalid_argument("downsample: phase must satisfy 0 <= phase < m");
    cvec out;
    out.reserve((x.size() + static_cast<std::size_t>(m) - 1) / static_cast<std::size_t>(m));
    for (std::size_t k = static_cast<std::size_t>(phase); k < x.size(); k += static_cast<std::size_t>(m))
        out.push_back(x[k]);
    return out;
}

cvec fir_convolve(const cvec& x, const cvec& taps, ConvMode mode) {
    if (x.empty() || taps.empty())
        throw std::invalid_argument("fir_convolve: empty input");
    const std::size_t lx = x.size();
    const std::size_t lf = taps.size();
    cvec full(lx + lf - 1, cplx(0.0, 0.0));
    for (std::size_t j = 0; j < lf; ++j) {
        const cplx fj = taps[j];
        if (fj == cplx(0.0, 0.0))
            continue;
        for (std::size_t i = 0; i < lx; ++i)
            full[i + j] += x[i] * fj;
    }
    if (mode == ConvMode::full)
        return full;
    const std::size_t delay = (lf - 1) / 2;
    return cvec(full.begin() + static_cast<std::ptrdiff_t>(delay),
                full.begin() + static_cast<std::ptrdiff_t>(delay + lx));
}

cvec pulse_shape(const cvec& s, const FirTaps& g) {
    if (g.oversampling < 1)
        throw std::invalid_argument("pulse_shape: invalid oversampling");
    return fir_convolve(upsample(s, g.oversampling), g.coeffs, ConvMode::full);
}

cvec matched_filter(const cvec& y, const FirTaps& g, int sample_offset, int n_symbols) {
    const int m = g.oversampling;
    if (m < 1)
        throw std::invalid_argument("matched_filter: invalid oversampling");
    const cvec z = fir_convolve(y, g.coeffs, ConvMode::full);
    if (n_symbols < 0)
        n_symbols = static_cast<int>((y.size() + static_cast<std::size_t>(m) - 1) /
                                     static_cast<std::size_t>(m));
    cvec out(static_cast<std::size_t>(n_symbols), cplx(0.0, 0.0));
    for (int n = 0; n < n_symbols; ++n) {
        const long long k = static_cast<long long>(n) * m + sample_offset;
        if (k >= 0 && k < static_cast<long long>(z.size()))
            out[static_cast<std::size_t>(n)] = z[static_cast<std::size_t>(k)];
    }
    return out;
}

int cascade_delay(const FirTaps& g_tx, const FirTaps& g_rx) {
    return (g_tx.length() - 1 + g_rx.length() - 1) / 2;
}

double measure_power(const cvec& x) {
    if (x.empty())
        throw std::invalid_argument("measure_power: empty input");
    double acc = 0.0;
    for (const auto& v : x)
        acc += std::norm(v);
    return acc / static_cast<double>(x.size());
}

double measure_papr_db(const cvec& x) {
    if (x.empty())
        throw std::invalid_argument("measure_papr_db: empty input");
    double peak = 0.0;
    double acc = 0.0;
    for (const auto& v : x) {
        const double p = std::norm(v);
        peak = std::max(peak, p);
        acc += p;
    }
    return 10.0 * std::log10(peak / (acc / static_cast<double>(x.size())));
}

} // namespace fdsic
