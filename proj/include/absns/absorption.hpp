#pragma once

#include <array>

#include "absns/spectral_field.hpp"

namespace absns {

/// Exact solution magnitude of the pointwise damping ODE
///     dm/dt = -alpha * m^(sigma-1),   m(0) = m0 >= 0.
///
/// sigma < 2: m(tau) = (m0^(2-sigma) - alpha(2-sigma)tau)_+^(1/(2-sigma)),
///            exactly zero once tau >= m0^(2-sigma)/(alpha(2-sigma));
/// sigma = 2: m(tau) = m0 exp(-alpha tau);
/// sigma > 2: m(tau) = (m0^(2-sigma) + alpha(sigma-2)tau)^(-1/(sigma-2)).
double absorption_magnitude(double m0, double alpha, double sigma, double tau);

/// Time at which the magnitude reaches exactly zero (sigma < 2 only);
/// +infinity for sigma >= 2 or alpha = 0, zero for m0 = 0.
double absorption_extinction_time(double m0, double alpha, double sigma);

/// Applies the closed-form damping to every grid point of a velocity field.
/// Direction is preserved; the magnitude never increases.
void absorption_substep(PhysicalField& u, double alpha, double sigma, double tau);

using Vec2 = std::array<double, 2>;

/// The damping operator xi -> |xi|^(p-2) xi (maps 0 to 0 for every p > 1).
Vec2 absorption_map(const Vec2& xi, double p);

/// (F(xi) - F(eta)) . (xi - eta) / (|xi - eta|^2 (|xi| + |eta|)^(p-2)),
/// the normalized monotonicity quotient of the damping operator.
double monotonicity_ratio(const Vec2& xi, const Vec2& eta, double p);

/// |F(xi) - F(eta)| / (|xi - eta| (|xi| + |eta|)^(p-2)), the normalized
/// continuity quotient.
double continuity_ratio(const Vec2& xi, const Vec2& eta, double p);

}  // namespace absns
