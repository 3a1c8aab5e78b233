#include "fdsic/mf_sic.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fdsic {

CMatrix build_observation_matrix(const cvec& eta, int n_symbols, int oversampling,
                                 int span_symbols) {
    if (oversampling < 1 || span_symbols < 1 || n_symbols < 1)
        throw std::invalid_argument("build_observation_matrix: dimensions must be >= 1");
    const std::size_t width = static_cast<std::size_t>(oversampling) * span_symbols;
    if (eta.size() < width)
        throw std::invalid_argument("build_observation_matrix: stream too short for one row");
    CMatrix e(static_cast<std::size_t>(n_symbols), width);
    for (int n = 0; n < n_symbols; ++n) {
        const std::size_t base = static_cast<std::size_t>(n) * oversampling;
        for (std::size_t j = 0; j < width; ++j) {
            const std::size_t k = base + j;
            e.at(static_cast<std::size_t>(n), j) = (k < eta.size()) ? eta[k] : cplx(0.0, 0.0);
        }
    }
    return e;
}

LearnedMf fit_mf(const cvec& eta_pilot, const cvec& s_pilot, int oversampling,
                 int span_symbols, double ridge) {
    const int n_pilot = static_cast<int>(s_pilot.size());
    const int width = oversampling * span_symbols;
    if (n_pilot < width)
        throw std::invalid_argument("fit_mf: need at least M * L_g pilot symbols");
    const CMatrix e = build_observation_matrix(eta_pilot, n_pilot, oversampling, span_symbols);
    LsOptions opts;
    opts.ridge = ridge;
    LearnedMf mf;
    mf.oversampling = oversampling;
    mf.span_symbols = span_symbols;
    mf.g1 = solve_ls(e, s_pilot, opts);
    return mf;
}

cvec apply_mf(const cvec& eta, const LearnedMf& mf, int n_symbols) {
    const std::size_t width = mf.g1.size();
    if (width != static_cast<std::size_t>(mf.oversampling) * mf.span_symbols)
        throw std::invalid_argument("apply_mf: inconsistent filter dimensions");
    cvec out(static_cast<std::size_t>(n_symbols), cplx(0.0, 0.0));
    for (int n = 0; n < n_symbols; ++n) {
        const std::size_t base = static_cast<std::size_t>(n) * mf.oversampling;
        cplx acc(0.0, 0.0);
        const std::size_t avail = (base < eta.size()) ? eta.size() - base : 0;
        const std::size_t jmax = std::min(width, avail);
        for (std::size_t j = 0; j < jmax; ++j)
            acc += mf.g1[j] * eta[base + j];
        out[static_cast<std::size_t>(n)] = acc;
    }
    return out;
}

cvec cancel_known(const cvec& lambda_rx, const cvec& s_known) {
    if (lambda_rx.size() != s_known.size())
        throw std::invalid_argument("cancel_known: length mismatch");
    cvec out(lambda_rx.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = lambda_rx[i] - s_known[i];
    return out;
}

void save_mf_csv(const LearnedMf& mf, std::ostream& out) {
    out << "# fdsic-mf v1 m=" << mf.oversampling << " lg=" << mf.span_symbols << "\n";
    out << "index,real,imag\n";
    char buf[96];
    for (std::size_t i = 0; i < mf.g1.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "%zu,%.17g,%.17g\n", i, mf.g1[i].real(), mf.g1[i].imag());
        out << buf;
    }
}

LearnedMf load_mf_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line))
        throw std::invalid_argument("load_mf_csv: empty input");
    LearnedMf mf;
    if (std::sscanf(line.c_str(), "# fdsic-mf v1 m=%d lg=%d", &mf.oversampling,
                    &mf.span_symbols) != 2)
        throw std::invalid_argument("load_mf_csv: bad header: " + line);
    if (!std::getline(in, line) || line != "index,real,imag")
        throw std::invalid_argument("load_mf_csv: missing column header");
    const std::size_t expected =
        static_cast<std::size_t>(mf.oversampling) * static_cast<std::size_t>(mf.span_symbols);
    mf.g1.reserve(expected);
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        std::size_t idx = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%zu,%lg,%lg", &idx, &re, &im) != 3)
            throw std::invalid_argument("load_mf_csv: bad row: " + line);
        if (idx != mf.g1.size())
            throw std::invalid_argument("load_mf_csv: non-contiguous index");
        mf.g1.emplace_back(re, im);
    }
    if (mf.g1.size() != expected)
        throw std::invalid_argument("load_mf_csv: coefficient count does not match header");
    return mf;
}

} // namespace fdsic
