#pragma once

#include <array>
#include <complex>
#include <span>
#include <vector>

#include "mlaf/grid.hpp"

namespace mlaf {

using Complex = std::complex<double>;

/// Fourier coefficients of a real 3-component field on a TorusGrid.
///
/// coeff(m) multiplies exp(i k0 m.x); a field sampled at the grid points is
/// u(x_j) = sum_m coeff(m) exp(i k0 m.x_j). Only the half lattice with
/// m_z >= 0 is stored, the rest follows from coeff(-m) = conj(coeff(m)).
class SpectralVectorField {
public:
    explicit SpectralVectorField(const TorusGrid& grid);

    const TorusGrid& grid() const { return grid_; }

    std::span<Complex> component(int c) { return data_[c]; }
    std::span<const Complex> component(int c) const { return data_[c]; }

    Complex& operator()(int c, std::size_t idx) { return data_[c][idx]; }
    Complex operator()(int c, std::size_t idx) const { return data_[c][idx]; }

    /// Coefficient of lattice mode m (any sign of m_z).
    Complex mode(int c, const Mode& m) const;
    /// Sets coeff(m) and, through Hermitian symmetry, coeff(-m).
    void set_mode(int c, const Mode& m, Complex value);

    void set_zero();

    SpectralVectorField& operator+=(const SpectralVectorField& other);
    SpectralVectorField& operator-=(const SpectralVectorField& other);
    SpectralVectorField& operator*=(double s);
    /// this += s * other
    void axpy(double s, const SpectralVectorField& other);

    friend SpectralVectorField operator+(SpectralVectorField a, const SpectralVectorField& b) {
        a += b;
        return a;
    }
    friend SpectralVectorField operator-(SpectralVectorField a, const SpectralVectorField& b) {
        a -= b;
        return a;
    }
    friend SpectralVectorField operator*(double s, SpectralVectorField a) {
        a *= s;
        return a;
    }

private:
    void require_same_grid(const SpectralVectorField& other) const;

    TorusGrid grid_;
    std::array<std::vector<Complex>, 3> data_;
};

/// Samples of a real 3-component field at the n^3 collocation points
/// x_j = j * L / n.
class PhysicalVectorField {
public:
    explicit PhysicalVectorField(const TorusGrid& grid);

    const TorusGrid& grid() const { return grid_; }
    std::span<double> component(int c) { return data_[c]; }
    std::span<const double> component(int c) const { return data_[c]; }

private:
    TorusGrid grid_;
    std::array<std::vector<double>, 3> data_;
};

/// Visits every stored spectral slot as fn(idx, mode, weight), where weight
/// counts how many full-lattice modes the slot stands for (1 or 2).
template <typename Fn>
void for_each_mode(const TorusGrid& grid, Fn&& fn) {
    const int n = grid.n();
    const int nzh = grid.nz_half();
    std::size_t idx = 0;
    for (int ix = 0; ix < n; ++ix) {
        const int mx = grid.mode_of(ix);
        for (int iy = 0; iy < n; ++iy) {
            const int my = grid.mode_of(iy);
            for (int iz = 0; iz < nzh; ++iz, ++idx) {
                const int mz = grid.mode_of(iz);
                const double weight = (iz == 0 || iz == n / 2) ? 1.0 : 2.0;
                fn(idx, Mode{mx, my, mz}, weight);
            }
        }
    }
}

inline double mode_norm2(const TorusGrid& grid, const Mode& m) {
    const double k0 = grid.k0();
    return k0 * k0 * static_cast<double>(m[0] * m[0] + m[1] * m[1] + m[2] * m[2]);
}

} // namespace mlaf
