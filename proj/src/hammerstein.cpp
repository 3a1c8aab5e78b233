#include "fdsic/hammerstein.hpp"

#include <cmath>
#include <stdexcept>

namespace fdsic {

void HammersteinConfig::validate() const {
    if (max_degree < 1 || max_degree % 2 == 0)
        throw std::invalid_argument("HammersteinConfig: max_degree must be odd and >= 1");
    if (memory_symbols < 1)
        throw std::invalid_argument("HammersteinConfig: memory_symbols must be >= 1");
}

cvec basis_row(const cvec& window, const HammersteinConfig& cfg) {
    cfg.validate();
    if (window.size() != static_cast<std::size_t>(cfg.memory_symbols))
        throw std::invalid_argument("basis_row: window length must equal memory_symbols");
    cvec row(static_cast<std::size_t>(cfg.coeff_count()));
    std::size_t idx = 0;
    for (int l = 0; l < cfg.memory_symbols; ++l) {
        const cplx s = window[static_cast<std::size_t>(l)];
        const double mag2 = std::norm(s);
        double w = 1.0; // |s|^(p-1) for p = 1, 3, ...
        for (int b = 0; b < cfg.basis_per_tap(); ++b) {
            row[idx++] = s * w;
            w *= mag2;
        }
    }
    return row;
}

CMatrix build_regressor(const cvec& s, const HammersteinConfig& cfg) {
    cfg.validate();
    const int n = static_cast<int>(s.size());
    if (n < cfg.memory_symbols)
        throw std::invalid_argument("build_regressor: block shorter than the model memory");
    CMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(cfg.coeff_count()));
    cvec window(static_cast<std::size_t>(cfg.memory_symbols));
    for (int row = 0; row < n; ++row) {
        for (int l = 0; l < cfg.memory_symbols; ++l) {
            const int k = row - l;
            window[static_cast<std::size_t>(l)] =
                (k >= 0) ? s[static_cast<std::size_t>(k)] : cplx(0.0, 0.0);
        }
        const cvec r = basis_row(window, cfg);
        std::copy(r.begin(), r.end(), m.data.begin() + static_cast<std::ptrdiff_t>(
                                                            static_cast<std::size_t>(row) * m.cols));
    }
    return m;
}

HammersteinModel fit_hammerstein(const cvec& s_pilot, const cvec& lambda_pilot,
                                 const HammersteinConfig& cfg, double ridge) {
    if (s_pilot.size() != lambda_pilot.size())
        throw std::invalid_argument("fit_hammerstein: pilot blocks must have equal length");
    if (s_pilot.size() < static_cast<std::size_t>(cfg.coeff_count()))
        throw std::invalid_argument("fit_hammerstein: not enough pilots for the coefficient count");
    HammersteinModel model;
    model.config = cfg;
    LsOptions opts;
    opts.ridge = ridge;
    model.q = solve_ls(build_regressor(s_pilot, cfg), lambda_pilot, opts);
    return model;
}

cvec regenerate(const HammersteinModel& model, const cvec& s_data) {
    return matvec(build_regressor(s_data, model.config), model.q);
}

cvec cancel(const cvec& lambda_rx, const cvec& r_hat) {
    if (lambda_rx.size() != r_hat.size())
        throw std::invalid_argument("cancel: length mismatch");
    cvec out(lambda_rx.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = lambda_rx[i] - r_hat[i];
    return out;
}

} // namespace fdsic
