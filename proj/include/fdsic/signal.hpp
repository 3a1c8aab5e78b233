#pragma once

#include <complex>
#include <vector>

namespace fdsic {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// FIR filter taps at sample rate. For pulse-shaping/matched filters the tap
/// count is exactly oversampling * span_symbols, taps centered on index
/// (len - 1) / 2 (half-sample center when the count is even).
struct FirTaps {
    cvec coeffs;
    int span_symbols = 1;
    int oversampling = 1;

    int length() const { return static_cast<int>(coeffs.size()); }
};

enum class ConvMode {
    full,    ///< linear convolution, length len(x) + len(f) - 1
    aligned, ///< group delay floor((len(f)-1)/2) trimmed, length preserved
};

/// Root-raised-cosine taps: span_symbols * oversampling real taps sampled at
/// t = (i - (len-1)/2) / oversampling symbol periods, unit-energy normalized.
/// The t = 0 and |t| = 1/(4*rolloff) singular points use their analytic limits.
FirTaps rrc_taps(double rolloff, int span_symbols, int oversampling);

/// Single unit tap (identity filter).
FirTaps delta_taps();

/// Taps reversed in time (the conventional receive filter for a transmit pulse).
FirTaps time_reverse(const FirTaps& f);

/// Zero-stuff by factor m: out[k] = s[k/m] when m divides k, else 0.
cvec upsample(const cvec& s, int m);

/// Keep every m-th sample starting at `phase` (0 <= phase < m).
cvec downsample(const cvec& x, int m, int phase);

cvec fir_convolve(const cvec& x, const cvec& taps, ConvMode mode);

/// Transmit pulse shaping: x[k] = sum_n s[n] g[k - n*M], full length.
cvec pulse_shape(const cvec& s, const FirTaps& g);

/// Receive filter + downsample: out[n] = (y * g)[n*M + sample_offset].
/// sample_offset absorbs the cascade group delay; indexes outside the
/// convolution are zero. n_symbols < 0 derives the count from len(y).
cvec matched_filter(const cvec& y, const FirTaps& g, int sample_offset, int n_symbols = -1);

/// Group delay, in samples, of a transmit/receive filter cascade with
/// center-symmetric taps. Equals len-1 for two equal-length filters.
int cascade_delay(const FirTaps& g_tx, const FirTaps& g_rx);

/// Mean of |x|^2.
double measure_power(const cvec& x);

/// 10*log10(max|x|^2 / mean|x|^2).
double measure_papr_db(const cvec& x);

} // namespace fdsic
