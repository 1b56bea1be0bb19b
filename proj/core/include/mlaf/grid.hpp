#pragma once

#include <array>
#include <cstddef>

namespace mlaf {

class TorusGrid;
namespace detail {
TorusGrid make_small_grid(int n, double length);
} // namespace detail

/// Integer lattice index of a Fourier mode, m in [-n/2, n/2)^3.
using Mode = std::array<int, 3>;

/// Uniform discretization of the cubic periodic box [0, L)^3.
///
/// Spectral arrays use the real-to-complex half layout: index (ix, iy, iz)
/// with ix, iy in [0, n) and iz in [0, n/2], flattened row-major. Modes with
/// negative z-index are implied by Hermitian symmetry.
class TorusGrid {
public:
    int n() const { return n_; }
    double length() const { return length_; }
    /// Fundamental wavenumber 2*pi/L.
    double k0() const { return k0_; }
    /// Largest retained |m_i| under the 2/3 rule.
    int dealias_cut() const { return cut_; }
    double dx() const { return length_ / n_; }
    double volume() const { return length_ * length_ * length_; }

    int nz_half() const { return n_ / 2 + 1; }
    std::size_t spectral_size() const {
        return static_cast<std::size_t>(n_) * n_ * nz_half();
    }
    std::size_t physical_size() const {
        return static_cast<std::size_t>(n_) * n_ * n_;
    }

    std::size_t spectral_index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * n_ + iy) * nz_half() + iz;
    }
    std::size_t physical_index(int ix, int iy, int iz) const {
        return (static_cast<std::size_t>(ix) * n_ + iy) * n_ + iz;
    }

    /// Lattice index of array position i along any axis, in [-n/2, n/2).
    int mode_of(int i) const { return i < n_ / 2 ? i : i - n_; }
    /// Array position of lattice index m along the x or y axis.
    int index_of(int m) const { return m >= 0 ? m : m + n_; }

    /// Wavenumber used by spectral derivatives; zero on the Nyquist index.
    double derivative_wavenumber(int i) const {
        return i == n_ / 2 ? 0.0 : k0_ * mode_of(i);
    }

    bool in_mask(const Mode& m) const {
        return abs_int(m[0]) <= cut_ && abs_int(m[1]) <= cut_ && abs_int(m[2]) <= cut_;
    }

    friend bool operator==(const TorusGrid& a, const TorusGrid& b) {
        return a.n_ == b.n_ && a.length_ == b.length_;
    }

private:
    TorusGrid(int n, double length);

    static int abs_int(int v) { return v < 0 ? -v : v; }

    int n_;
    double length_;
    double k0_;
    int cut_;

    friend TorusGrid make_grid(int n, double length);
    friend TorusGrid detail::make_small_grid(int n, double length);
};

/// Builds a grid with n even, n >= 8 and L > 0; throws ConfigError otherwise.
TorusGrid make_grid(int n, double length);

/// Retained-mode radius of the 2/3 rule on an n-point axis.
int dealias_cut_for(int n);

namespace detail {
/// Grids below the public minimum (even n >= 4), used only by the
/// brute-force oracle sweeps.
TorusGrid make_small_grid(int n, double length);
} // namespace detail

} // namespace mlaf
