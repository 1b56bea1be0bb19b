#pragma once

#include <array>
#include <vector>

#include "mlaf/field.hpp"

namespace mlaf {

/// Highest Sobolev moment order available unless configured otherwise.
inline constexpr int kDefaultMaxMoment = 6;

/// Leray projection onto divergence-free, zero-mean fields.
SpectralVectorField project_solenoidal(const SpectralVectorField& field);

/// ||k.u(k)|| / ||k u(k)|| over the lattice; 0 for a field with no k != 0 content.
double divergence_residual(const SpectralVectorField& field);

/// Zeroes every mode outside the 2/3-rule mask.
SpectralVectorField truncate_to_mask(const SpectralVectorField& field);

/// H_N = L^3 * sum_k |k|^{2N} |u(k)|^2. Throws DomainError when N > max_order.
double sobolev_moment(const SpectralVectorField& field, int order,
                      int max_order = kDefaultMaxMoment);

/// H_0 .. H_{max_order} in one sweep.
std::vector<double> sobolev_moments(const SpectralVectorField& field, int max_order);

/// L^3 * Re sum_k |k|^{2N} a(k).conj(b(k)); order 0 is the L2 inner product.
double inner_product(const SpectralVectorField& a, const SpectralVectorField& b, int order = 0);

/// Velocity gradient at the collocation points; entry 3*i + j holds d_j v_i.
std::array<std::vector<double>, 9> gradient_samples(const SpectralVectorField& field);

struct SupNorms {
    double value = 0.0;    ///< max_x |v(x)|
    double gradient = 0.0; ///< max_x |grad v(x)|_F
};

/// Maxima over the collocation points only.
SupNorms sup_norms(const SpectralVectorField& field);

/// Componentwise product a_i b_i of the mask-truncated inputs, truncated to
/// the mask: the exact convolution restricted to retained modes.
SpectralVectorField dealiased_product(const SpectralVectorField& a, const SpectralVectorField& b);

/// (a.grad) b of the mask-truncated inputs, truncated to the mask. Not projected.
SpectralVectorField dealiased_advection(const SpectralVectorField& a, const SpectralVectorField& b);

} // namespace mlaf
