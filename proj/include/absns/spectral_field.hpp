#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "absns/torus_grid.hpp"

namespace absns {

using Complex = std::complex<double>;

struct SymmetryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two-component real velocity field sampled on the collocation grid.
/// Layout: component-major, row-major within a component (index c*n*n + i*n + j).
struct PhysicalField {
    TorusGrid grid;
    std::vector<double> values;  // size 2*n*n

    PhysicalField() = default;
    explicit PhysicalField(const TorusGrid& g) : grid(g), values(2 * g.size(), 0.0) {}

    double& at(int c, int i, int j) { return values[(c * grid.n + i) * grid.n + j]; }
    double at(int c, int i, int j) const { return values[(c * grid.n + i) * grid.n + j]; }
    double* component(int c) { return values.data() + c * grid.size(); }
    const double* component(int c) const { return values.data() + c * grid.size(); }
};

/// Fourier coefficients of a two-component velocity field on the torus.
///
/// A field representing real velocities satisfies the conjugate symmetry
/// uhat(k) = conj(uhat(-k)) componentwise; solver fields additionally carry
/// zero mean and zero divergence (k . uhat(k) = 0).
struct SpectralField {
    TorusGrid grid;
    std::vector<Complex> coeffs;  // size 2*n*n, same layout as PhysicalField

    SpectralField() = default;
    explicit SpectralField(const TorusGrid& g) : grid(g), coeffs(2 * g.size(), Complex{}) {}

    Complex& at(int c, int i, int j) { return coeffs[(c * grid.n + i) * grid.n + j]; }
    Complex at(int c, int i, int j) const { return coeffs[(c * grid.n + i) * grid.n + j]; }
    Complex* component(int c) { return coeffs.data() + c * grid.size(); }
    const Complex* component(int c) const { return coeffs.data() + c * grid.size(); }
};

/// Largest coefficient magnitude over both components.
double max_abs_coeff(const SpectralField& f);

/// Max |uhat(k) - conj(uhat(-k))| over all modes and components.
double hermitian_defect(const SpectralField& f);
bool is_hermitian(const SpectralField& f, double tol_rel = 1e-12);

/// Averages conjugate-symmetric pairs so the symmetry holds exactly.
void symmetrize(SpectralField& f);

/// Zeroes the k = 0 mode of both components.
void remove_mean(SpectralField& f);

/// Zeroes the Nyquist row/column (k = -n/2).  Those modes have no conjugate
/// partner on the grid and are excluded from the representable set.
void zero_nyquist(SpectralField& f);

/// Max |k . uhat(k)| over all modes (physical wavenumbers).
double divergence_defect(const SpectralField& f);
bool is_divergence_free(const SpectralField& f, double tol_rel = 1e-12);

/// Modewise removal of the component of uhat(k) parallel to k.  Idempotent
/// and non-expansive in the L2 norm; leaves the k = 0 mode untouched.
SpectralField leray_project(const SpectralField& f);
void leray_project_in_place(SpectralField& f);

/// Inverse transform.  Throws SymmetryError if the input is not conjugate
/// symmetric to tol_rel (relative to the largest coefficient).
PhysicalField transform_to_physical(const SpectralField& f, double tol_rel = 1e-10);

/// Forward transform; output is symmetrized so the conjugate symmetry holds
/// exactly.
SpectralField transform_to_spectral(const PhysicalField& p);

/// Parseval: integral of |u|^2 over the domain, L^2 sum_k |uhat|^2.
double l2_norm_sq(const SpectralField& f);

/// Enstrophy: L^2 sum_k |k|^2 |uhat(k)|^2.
double gradient_norm_sq(const SpectralField& f);

/// L2 inner product  integral a . b dx  of two real fields (spectral form).
double l2_inner(const SpectralField& a, const SpectralField& b);

/// (integral |u|^sigma dx)^(1/sigma) by collocation quadrature; sigma > 1.
double lsigma_norm(const SpectralField& f, double sigma);
double lsigma_norm(const PhysicalField& p, double sigma);

/// integral |u|^sigma dx (the power carried by the energy balance).
double lsigma_power(const PhysicalField& p, double sigma);

/// Pointwise vector magnitude maximum over the grid.
double max_speed(const PhysicalField& p);

/// a + s*b (grids must match).
SpectralField axpy(const SpectralField& a, double s, const SpectralField& b);

}  // namespace absns
