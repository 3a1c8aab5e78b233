#pragma once

#include "fdsic/signal.hpp"

#include <cstddef>
#include <stdexcept>

namespace fdsic {

/// Dense complex matrix, row-major.
struct CMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    cvec data;

    CMatrix() = default;
    CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, cplx(0.0, 0.0)) {}

    cplx& at(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    const cplx& at(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

cvec matvec(const CMatrix& a, const cvec& x);

/// Thrown when the design matrix is column-rank-deficient; `column` is the
/// first column whose reduced norm fell below tolerance * ||A||_F.
class singular_system_error : public std::runtime_error {
public:
    singular_system_error(std::size_t col, const std::string& what)
        : std::runtime_error(what), column(col) {}
    std::size_t column;
};

struct LsOptions {
    double ridge = 0.0;     ///< Tikhonov weight; 0 disables augmentation
    double rank_tol = 1e-12;
};

/// argmin_x ||A x - b||_2 for a tall full-rank A, by Householder QR.
cvec solve_ls(const CMatrix& a, const cvec& b, const LsOptions& opts = {});

} // namespace fdsic
