#pragma once

#include <cstdint>

namespace fdsic {

/// Inputs for the analytical real-multiplication counts. These evaluate the
/// normal-equation formulas; the solver actually shipped uses QR, so the
/// counts describe the published algorithms, not this implementation.
struct ComplexityInput {
    std::int64_t n = 128;   ///< symbols per block
    std::int64_t m = 8;     ///< oversampling
    std::int64_t l_g = 4;   ///< pulse-shaping / receive filter span, symbols
    std::int64_t l_q = 4;   ///< memory-polynomial FIR length, symbols
    std::int64_t p = 3;     ///< memory-polynomial max (odd) degree

    void validate() const;
    std::int64_t p_tilde() const { return (p + 1) / 2; }
};

/// Per-block multiplications after training.
std::int64_t runtime_hammerstein(const ComplexityInput& c); ///< 2N(ML_g+1) + 6N*P~*L_q
std::int64_t runtime_proposed(const ComplexityInput& c);    ///< 2N(ML_g+1)

/// The published training count for the memory-polynomial method as printed
/// uses L_g inside the P~ terms while its derivation uses L_q throughout;
/// both variants are available.
enum class TrainingVariant {
    derivation_text, ///< P~ * L_q in the quadratic and cubic terms
    as_printed,      ///< P~ * L_g in the quadratic and cubic terms
};

std::int64_t training_hammerstein(const ComplexityInput& c,
                                  TrainingVariant v = TrainingVariant::derivation_text);
std::int64_t training_proposed(const ComplexityInput& c); ///< 4N(2(ML_g)^2 + ML_g) + 4(ML_g)^3

} // namespace fdsic
