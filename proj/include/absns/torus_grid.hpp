#pragma once

#include <cmath>
#include <stdexcept>

namespace absns {

/// Uniform collocation grid on the periodic square [0, L)^2.
///
/// Fourier modes live on the integer lattice k in {-n/2, ..., n/2-1}^2,
/// scaled by 2*pi/L.  Index i along an axis maps to the signed integer
/// wavenumber i for i < n/2 and i - n for i >= n/2 (standard FFT order).
struct TorusGrid {
    int n = 0;           // modes (and collocation points) per axis, even, >= 8
    double length = 2.0 * M_PI;

    TorusGrid() = default;
    TorusGrid(int modes_per_axis, double domain_length = 2.0 * M_PI)
        : n(modes_per_axis), length(domain_length) {
        if (n < 8 || n % 2 != 0)
            throw std::invalid_argument("TorusGrid: modes_per_axis must be even and >= 8");
        if (!(length > 0.0))
            throw std::invalid_argument("TorusGrid: domain_length must be positive");
    }

    int size() const { return n * n; }
    double dx() const { return length / n; }
    double cell_area() const { return dx() * dx(); }
    double area() const { return length * length; }

    /// Signed integer wavenumber for axis index i.
    int k_int(int i) const { return i < n / 2 ? i : i - n; }

    /// Physical wavenumber (2*pi/L scaling).
    double wave(int i) const { return 2.0 * M_PI / length * k_int(i); }

    /// Largest |integer wavenumber| kept by the 2/3 dealiasing rule.
    int dealias_cutoff() const { return n / 3; }

    bool operator==(const TorusGrid& o) const { return n == o.n && length == o.length; }
};

}  // namespace absns
