#pragma once

namespace spingate {

/// Normalized complete elliptic integral of the first kind,
/// K_norm(k) = (1/pi) * Int_0^pi du / sqrt(1 - k^2 sin^2 u), so K_norm(0) = 1.
/// Computed by the arithmetic-geometric mean: K_norm(k) = 1/AGM(1, sqrt(1-k^2)).
/// Throws std::domain_error for k outside [0, 1) (the integral diverges at 1).
double elliptic_k_norm(double k);

}  // namespace spingate
