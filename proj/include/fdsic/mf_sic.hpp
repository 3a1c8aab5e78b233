#pragma once

#include "fdsic/lsq.hpp"
#include "fdsic/signal.hpp"

#include <iosfwd>

namespace fdsic {

/// Receive filter fitted by LS so that its downsampled output reproduces the
/// known transmitted interference symbols directly.
struct LearnedMf {
    cvec g1; ///< length oversampling * span_symbols
    int oversampling = 1;
    int span_symbols = 1;
};

/// Row n = [eta[n*M], eta[n*M + 1], ..., eta[n*M + M*L_g - 1]]; the n*M row
/// stride carries the downsampling of the receive filter. Rows past the end
/// of the stream are zero-padded.
CMatrix build_observation_matrix(const cvec& eta, int n_symbols, int oversampling,
                                 int span_symbols);

/// g1 = argmin ||E g - s_pilot||; requires len(s_pilot) >= M * L_g.
LearnedMf fit_mf(const cvec& eta_pilot, const cvec& s_pilot, int oversampling,
                 int span_symbols, double ridge = 0.0);

/// Symbol n = inner product of observation row n with g1.
cvec apply_mf(const cvec& eta, const LearnedMf& mf, int n_symbols);

/// Elementwise lambda - s_known; no regeneration stage exists in this path.
cvec cancel_known(const cvec& lambda_rx, const cvec& s_known);

/// CSV exchange format for handing g1 to the far transmitter:
/// a header line with dimensions, then index,real,imag rows.
void save_mf_csv(const LearnedMf& mf, std::ostream& out);
LearnedMf load_mf_csv(std::istream& in);

} // namespace fdsic
