#pragma once

#include <array>
#include <vector>

#include "mlaf/field.hpp"
#include "mlaf/model.hpp"

namespace mlaf::oracle {

/// Largest grid the brute-force routines accept.
inline constexpr int kMaxDenseN = 8;

/// Coefficients of a 3-component field on the full lattice [-n/2, n/2)^3.
/// No symmetry is exploited; every coefficient is stored explicitly.
class DenseField {
public:
    DenseField(int n, double length);

    int n() const { return n_; }
    double length() const { return length_; }
    double k0() const;
    /// Retained-mode radius of this module's own mask: max |m_i| <= (n - 1) / 3.
    int cut() const { return (n_ - 1) / 3; }

    Complex& at(int c, const Mode& m) { return data_[c][offset(m)]; }
    Complex at(int c, const Mode& m) const { return data_[c][offset(m)]; }

    /// Calls fn(mode) for every lattice mode in [-n/2, n/2)^3.
    template <typename Fn>
    void for_each(Fn&& fn) const {
        const int h = n_ / 2;
        for (int a = -h; a < h; ++a)
            for (int b = -h; b < h; ++b)
                for (int c = -h; c < h; ++c) fn(Mode{a, b, c});
    }

    bool in_mask(const Mode& m) const;

private:
    std::size_t offset(const Mode& m) const;

    int n_;
    double length_;
    std::array<std::vector<Complex>, 3> data_;
};

/// Throws DomainError when n > kMaxDenseN.
DenseField to_dense(const SpectralVectorField& field);
SpectralVectorField from_dense(const DenseField& dense, const TorusGrid& grid);

/// Literal sum over p + q = k of i (a(p).q) b(q) over retained p, q,
/// restricted to retained k, then projected onto divergence-free fields.
DenseField dense_nonlinear(const DenseField& a, const DenseField& b);

/// Same sum without the projection.
DenseField dense_advection(const DenseField& a, const DenseField& b);

DenseField dense_project(const DenseField& u);
DenseField dense_filter(const DenseField& u, double alpha);

/// H_N = L^3 sum |k|^{2N} |u(k)|^2, N = 0..max_order.
std::vector<double> dense_moments(const DenseField& u, int max_order);

/// L^3 Re sum a(k).conj(b(k)).
double dense_inner(const DenseField& a, const DenseField& b);

/// -P[(a.grad) b] + nu lap u + f with the model's (a, b) pairing.
DenseField dense_rhs(const DenseField& u, const ModelParams& params, const DenseField& f);

/// Classical fixed-step RK4 on dense_rhs.
DenseField reference_integrate(const DenseField& u0, const ModelParams& params,
                               const DenseField& f, double dt, int steps);

/// Largest |x - y| over all components and modes, and largest |y|.
double max_abs_difference(const DenseField& x, const DenseField& y);
double max_abs(const DenseField& x);

} // namespace mlaf::oracle
