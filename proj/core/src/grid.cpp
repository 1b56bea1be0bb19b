#include "mlaf/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mlaf/error.hpp"

namespace mlaf {

// Retained modes satisfy 3*cut < n, so products of two retained modes never
// alias back onto a retained mode.
int dealias_cut_for(int n) { return (n - 1) / 3; }

TorusGrid::TorusGrid(int n, double length)
    : n_(n), length_(length), k0_(2.0 * std::numbers::pi / length), cut_(dealias_cut_for(n)) {}

TorusGrid make_grid(int n, double length) {
    if (n < 8 || n % 2 != 0) {
        throw ConfigError("grid.n: must be an even integer >= 8, got " + std::to_string(n));
    }
    if (!(length > 0.0) || !std::isfinite(length)) {
        throw ConfigError("grid.L: must be a positive finite length");
    }
    return TorusGrid(n, length);
}

namespace detail {

TorusGrid make_small_grid(int n, double length) {
    if (n < 4 || n % 2 != 0) {
        throw ConfigError("small grid: n must be even and >= 4, got " + std::to_string(n));
    }
    if (!(length > 0.0)) {
        throw ConfigError("small grid: L must be positive");
    }
    return TorusGrid(n, length);
}

} // namespace detail

} // namespace mlaf
