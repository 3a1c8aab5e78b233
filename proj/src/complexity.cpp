#include "fdsic/complexity.hpp"

#include <stdexcept>

namespace fdsic {

void ComplexityInput::validate() const {
    if (n < 1 || m < 1 || l_g < 1 || l_q < 1 || p < 1)
        throw std::invalid_argument("ComplexityInput: all dimensions must be >= 1");
    if (p % 2 == 0)
        throw std::invalid_argument("ComplexityInput: polynomial degree must be odd");
}

std::int64_t runtime_hammerstein(const ComplexityInput& c) {
    c.validate();
    return 2 * c.n * (c.m * c.l_g + 1) + 6 * c.n * c.p_tilde() * c.l_q;
}

std::int64_t runtime_proposed(const ComplexityInput& c) {
    c.validate();
    return 2 * c.n * (c.m * c.l_g + 1);
}

std::int64_t training_hammerstein(const ComplexityInput& c, TrainingVariant v) {
    c.validate();
    const std::int64_t pl =
        c.p_tilde() * (v == TrainingVariant::derivation_text ? c.l_q : c.l_g);
    return 2 * c.n * (c.m * c.l_g + 1) + 2 * c.n * pl * (4 * pl + 3) + 4 * pl * pl * pl;
}

std::int64_t training_proposed(const ComplexityInput& c) {
    c.validate();
    const std::int64_t ml = c.m * c.l_g;
    return 4 * c.n * (2 * ml * ml + ml) + 4 * ml * ml * ml;
}

} // namespace fdsic
