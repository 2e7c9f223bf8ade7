#include "spingate/elliptic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spingate {

double elliptic_k_norm(double k) {
    if (!(k >= 0.0) || !(k < 1.0))
        throw std::domain_error("elliptic_k_norm: k must lie in [0, 1), got " +
                                std::to_string(k));
    // (1-k)(1+k) keeps the complementary modulus accurate near k = 1.
    double a = 1.0;
    double g = std::sqrt((1.0 - k) * (1.0 + k));
    while (std::abs(a - g) > 1e-15) {
        const double am = 0.5 * (a + g);
        g = std::sqrt(a * g);
        a = am;
    }
    return 1.0 / a;
}

}  // namespace spingate
