#include "mlaf/field.hpp"

#include <algorithm>

#include "mlaf/error.hpp"

namespace mlaf {

namespace {

int wrap(int m, int n) { return ((m % n) + n) % n; }

} // namespace

SpectralVectorField::SpectralVectorField(const TorusGrid& grid) : grid_(grid) {
    for (auto& c : data_) {
        c.assign(grid.spectral_size(), Complex{});
    }
}

Complex SpectralVectorField::mode(int c, const Mode& m) const {
    const int n = grid_.n();
    const int mz = wrap(m[2], n);
    if (mz <= n / 2) {
        return data_[c][grid_.spectral_index(wrap(m[0], n), wrap(m[1], n), mz)];
    }
    return std::conj(data_[c][grid_.spectral_index(wrap(-m[0], n), wrap(-m[1], n), n - mz)]);
}

void SpectralVectorField::set_mode(int c, const Mode& m, Complex value) {
    const int n = grid_.n();
    int ix = wrap(m[0], n);
    int iy = wrap(m[1], n);
    int iz = wrap(m[2], n);
    if (iz > n / 2) {
        ix = wrap(-m[0], n);
        iy = wrap(-m[1], n);
        iz = n - iz;
        value = std::conj(value);
    }
    if (iz == 0 || iz == n / 2) {
        const int px = wrap(-ix, n);
        const int py = wrap(-iy, n);
        if (px == ix && py == iy) {
            value = Complex(value.real(), 0.0);
        }
        data_[c][grid_.spectral_index(px, py, iz)] = std::conj(value);
    }
    data_[c][grid_.spectral_index(ix, iy, iz)] = value;
}

void SpectralVectorField::set_zero() {
    for (auto& c : data_) {
        std::fill(c.begin(), c.end(), Complex{});
    }
}

void SpectralVectorField::require_same_grid(const SpectralVectorField& other) const {
    if (!(grid_ == other.grid_)) {
        throw ShapeError("spectral fields live on different grids");
    }
}

SpectralVectorField& SpectralVectorField::operator+=(const SpectralVectorField& other) {
    require_same_grid(other);
    for (int c = 0; c < 3; ++c) {
        auto& dst = data_[c];
        const auto& src = other.data_[c];
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += src[i];
        }
    }
    return *this;
}

SpectralVectorField& SpectralVectorField::operator-=(const SpectralVectorField& other) {
    require_same_grid(other);
    for (int c = 0; c < 3; ++c) {
        auto& dst = data_[c];
        const auto& src = other.data_[c];
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] -= src[i];
        }
    }
    return *this;
}

SpectralVectorField& SpectralVectorField::operator*=(double s) {
    for (auto& c : data_) {
        for (auto& v : c) {
            v *= s;
        }
    }
    return *this;
}

void SpectralVectorField::axpy(double s, const SpectralVectorField& other) {
    require_same_grid(other);
    for (int c = 0; c < 3; ++c) {
        auto& dst = data_[c];
        const auto& src = other.data_[c];
        for (std::size_t i = 0; i < dst.size(); ++i) {
            dst[i] += s * src[i];
        }
    }
}

PhysicalVectorField::PhysicalVectorField(const TorusGrid& grid) : grid_(grid) {
    for (auto& c : data_) {
        c.assign(grid.physical_size(), 0.0);
    }
}

} // namespace mlaf
