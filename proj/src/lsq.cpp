#include "fdsic/lsq.hpp"

#include <cmath>
#include <string>

namespace fdsic {

cvec matvec(const CMatrix& a, const cvec& x) {
    if (x.size() != a.cols)
        throw std::invalid_argument("matvec: dimension mismatch");
    cvec y(a.rows, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < a.rows; ++i) {
        cplx acc(0.0, 0.0);
        const cplx* row = a.data.data() + i * a.cols;
        for (std::size_t j = 0; j < a.cols; ++j)
            acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

cvec solve_ls(const CMatrix& a, const cvec& b, const LsOptions& opts) {
    if (a.rows == 0 || a.cols == 0)
        throw std::invalid_argument("solve_ls: empty system");
    if (a.rows < a.cols)
        throw std::invalid_argument("solve_ls: system must be square or tall (rows >= cols)");
    if (b.size() != a.rows)
        throw std::invalid_argument("solve_ls: rhs length must equal rows");

    double fro2 = 0.0;
    for (const auto& v : a.data)
        fro2 += std::norm(v);
    const double anorm = std::sqrt(fro2);

    // Working copy, optionally augmented with sqrt(ridge) * I rows.
    const bool ridged = opts.ridge > 0.0;
    const std::size_t rows = a.rows + (ridged ? a.cols : 0);
    const std::size_t cols = a.cols;
    CMatrix r(rows, cols);
    std::copy(a.data.begin(), a.data.end(), r.data.begin());
    cvec rhs(rows, cplx(0.0, 0.0));
    std::copy(b.begin(), b.end(), rhs.begin());
    if (ridged) {
        const double s = std::sqrt(opts.ridge);
        for (std::size_t j = 0; j < cols; ++j)
            r.at(a.rows + j, j) = cplx(s, 0.0);
    }

    // Householder QR, reflectors applied to rhs on the fly.
    cvec v(rows);
    for (std::size_t j = 0; j < cols; ++j) {
        double colnorm2 = 0.0;
        for (std::size_t i = j; i < rows; ++i)
            colnorm2 += std::norm(r.at(i, j));
        const double colnorm = std::sqrt(colnorm2);
        if (colnorm <= opts.rank_tol * anorm)
            throw singular_system_error(
                j, "solve_ls: rank-deficient system at column " + std::to_string(j));

        const cplx pivot = r.at(j, j);
        const cplx phase = (pivot == cplx(0.0, 0.0)) ? cplx(1.0, 0.0) : pivot / std::abs(pivot);
        const cplx alpha = -phase * colnorm;

        double vnorm2 = 0.0;
        for (std::size_t i = j; i < rows; ++i) {
            v[i] = r.at(i, j);
            if (i == j)
                v[i] -= alpha;
            vnorm2 += std::norm(v[i]);
        }
        if (vnorm2 > 0.0) {
            const double tau = 2.0 / vnorm2;
            for (std::size_t c = j + 1; c < cols; ++c) {
                cplx dot(0.0, 0.0);
                for (std::size_t i = j; i < rows; ++i)
                    dot += std::conj(v[i]) * r.at(i, c);
                dot *= tau;
                for (std::size_t i = j; i < rows; ++i)
                    r.at(i, c) -= dot * v[i];
            }
            cplx dot(0.0, 0.0);
            for (std::size_t i = j; i < rows; ++i)
                dot += std::conj(v[i]) * rhs[i];
            dot *= tau;
            for (std::size_t i = j; i < rows; ++i)
                rhs[i] -= dot * v[i];
        }
        r.at(j, j) = alpha;
        for (std::size_t i = j + 1; i < rows; ++i)
            r.at(i, j) = cplx(0.0, 0.0);
    }

    // Back substitution on the cols x cols upper-triangular block.
    cvec x(cols, cplx(0.0, 0.0));
    for (std::size_t jj = cols; jj-- > 0;) {
        cplx acc = rhs[jj];
        for (std::size_t k = jj + 1; k < cols; ++k)
            acc -= r.at(jj, k) * x[k];
        x[jj] = acc / r.at(jj, jj);
    }
    return x;
}

} // namespace fdsic
