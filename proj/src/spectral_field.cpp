#include "absns/spectral_field.hpp"

#include <algorithm>
#include <cmath>

#include "absns/fft.hpp"

namespace absns {

double max_abs_coeff(const SpectralField& f) {
    double m = 0.0;
    for (const auto& c : f.coeffs) m = std::max(m, std::abs(c));
    return m;
}

double hermitian_defect(const SpectralField& f) {
    const int n = f.grid.n;
    double defect = 0.0;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) {
            const int im = (n - i) % n;
            for (int j = 0; j < n; ++j) {
                const int jm = (n - j) % n;
                defect = std::max(defect,
                                  std::abs(f.at(c, i, j) - std::conj(f.at(c, im, jm))));
            }
        }
    return defect;
}

bool is_hermitian(const SpectralField& f, double tol_rel) {
    const double m = max_abs_coeff(f);
    if (m == 0.0) return true;
    return hermitian_defect(f) <= tol_rel * m;
}

void symmetrize(SpectralField& f) {
    const int n = f.grid.n;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) {
            const int im = (n - i) % n;
            for (int j = 0; j < n; ++j) {
                const int jm = (n - j) % n;
                if (i * n + j > im * n + jm) continue;  // visit each pair once
                const Complex a = f.at(c, i, j);
                const Complex b = f.at(c, im, jm);
                const Complex avg = 0.5 * (a + std::conj(b));
                f.at(c, i, j) = avg;
                f.at(c, im, jm) = std::conj(avg);
            }
        }
    // self-conjugate modes must be real
    for (int c = 0; c < 2; ++c) {
        f.at(c, 0, 0) = Complex{f.at(c, 0, 0).real(), 0.0};
        f.at(c, 0, n / 2) = Complex{f.at(c, 0, n / 2).real(), 0.0};
        f.at(c, n / 2, 0) = Complex{f.at(c, n / 2, 0).real(), 0.0};
        f.at(c, n / 2, n / 2) = Complex{f.at(c, n / 2, n / 2).real(), 0.0};
    }
}

void remove_mean(SpectralField& f) {
    f.at(0, 0, 0) = Complex{};
    f.at(1, 0, 0) = Complex{};
}

void zero_nyquist(SpectralField& f) {
    const int n = f.grid.n;
    for (int c = 0; c < 2; ++c)
        for (int i = 0; i < n; ++i) {
            f.at(c, i, n / 2) = Complex{};
            f.at(c, n / 2, i) = Complex{};
        }
}

double divergence_defect(const SpectralField& f) {
    const int n = f.grid.n;
    double defect = 0.0;
    for (int i = 0; i < n; ++i) {
        const double kx = f.grid.wave(i);
        for (int j = 0; j < n; ++j) {
            const double ky = f.grid.wave(j);
            defect = std::max(defect, std::abs(kx * f.at(0, i, j) + ky * f.at(1, i, j)));
        }
    }
    return defect;
}

bool is_divergence_free(const SpectralField& f, double tol_rel) {
    const double m = max_abs_coeff(f);
    if (m == 0.0) return true;
    return divergence_defect(f) <= tol_rel * m;
}

void leray_project_in_place(SpectralField& f) {
    const int n = f.grid.n;
    for (int i = 0; i < n; ++i) {
        const double kx = f.grid.wave(i);
        for (int j = 0; j < n; ++j) {
            if (i == 0 && j == 0) continue;
            const double ky = f.grid.wave(j);
            const double k2 = kx * kx + ky * ky;
            const Complex kdotu = kx * f.at(0, i, j) + ky * f.at(1, i, j);
            f.at(0, i, j) -= kx * kdotu / k2;
            f.at(1, i, j) -= ky * kdotu / k2;
        }
    }
}

SpectralField leray_project(const SpectralField& f) {
    SpectralField out = f;
    leray_project_in_place(out);
    return out;
}

PhysicalField transform_to_physical(const SpectralField& f, double tol_rel) {
    if (!is_hermitian(f, tol_rel))
        throw SymmetryError("transform_to_physical: field is not conjugate symmetric");
    PhysicalField out(f.grid);
    Fft2d& fft = Fft2d::for_size(f.grid.n);
    fft.inverse(f.component(0), out.component(0));
    fft.inverse(f.component(1), out.component(1));
    return out;
}

SpectralField transform_to_spectral(const PhysicalField& p) {
    SpectralField out(p.grid);
    Fft2d& fft = Fft2d::for_size(p.grid.n);
    fft.forward(p.component(0), out.component(0));
    fft.forward(p.component(1), out.component(1));
    symmetrize(out);
    return out;
}

double l2_norm_sq(const SpectralField& f) {
    double s = 0.0;
    for (const auto& c : f.coeffs) s += std::norm(c);
    return f.grid.area() * s;
}

double gradient_norm_sq(const SpectralField& f) {
    const int n = f.grid.n;
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double kx = f.grid.wave(i);
        for (int j = 0; j < n; ++j) {
            const double ky = f.grid.wave(j);
            const double k2 = kx * kx + ky * ky;
            s += k2 * (std::norm(f.at(0, i, j)) + std::norm(f.at(1, i, j)));
        }
    }
    return f.grid.area() * s;
}

double l2_inner(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("l2_inner: grid mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        s += a.coeffs[i].real() * b.coeffs[i].real() + a.coeffs[i].imag() * b.coeffs[i].imag();
    return a.grid.area() * s;
}

double lsigma_power(const PhysicalField& p, double sigma) {
    if (!(sigma > 1.0)) throw std::invalid_argument("lsigma: sigma must exceed 1");
    const int m = p.grid.size();
    const double* u = p.component(0);
    const double* v = p.component(1);
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        const double mag2 = u[i] * u[i] + v[i] * v[i];
        s += std::pow(mag2, 0.5 * sigma);
    }
    return s * p.grid.cell_area();
}

double lsigma_norm(const PhysicalField& p, double sigma) {
    return std::pow(lsigma_power(p, sigma), 1.0 / sigma);
}

double lsigma_norm(const SpectralField& f, double sigma) {
    return lsigma_norm(transform_to_physical(f), sigma);
}

double max_speed(const PhysicalField& p) {
    const int m = p.grid.size();
    const double* u = p.component(0);
    const double* v = p.component(1);
    double s = 0.0;
    for (int i = 0; i < m; ++i) s = std::max(s, u[i] * u[i] + v[i] * v[i]);
    return std::sqrt(s);
}

SpectralField axpy(const SpectralField& a, double s, const SpectralField& b) {
    if (!(a.grid == b.grid)) throw std::invalid_argument("axpy: grid mismatch");
    SpectralField out = a;
    for (std::size_t i = 0; i < out.coeffs.size(); ++i) out.coeffs[i] += s * b.coeffs[i];
    return out;
}

}  // namespace absns
