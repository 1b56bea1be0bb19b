#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "mlaf/integrator.hpp"

namespace mlaf {

inline constexpr std::uint32_t kCheckpointVersion = 1;

/// Everything needed to continue a run: the velocity, the run constants and
/// the exact time-grid position. The forcing is rebuilt from its seed.
struct Checkpoint {
    int n = 0;
    double L = 0.0;
    double nu = 0.0;
    double alpha = 0.0;
    ModelKind kind = ModelKind::MlAlpha;
    double t = 0.0;
    std::uint64_t seed = 0;
    double dt = 0.0;
    std::uint64_t step = 0;
    SpectralVectorField u;
};

/// Layout, little-endian: "MLAF", u32 version, i32 n, f64 L, f64 nu,
/// f64 alpha, u32 kind, f64 t, u64 seed, f64 dt, u64 step, then the three
/// velocity components as n * n * (n/2 + 1) pairs of f64 (re, im).
void write_checkpoint(std::ostream& out, const Checkpoint& ckpt);
void save_checkpoint(const std::string& path, const Checkpoint& ckpt);

/// Throws FormatError on bad magic, a different version or truncation.
Checkpoint read_checkpoint(std::istream& in);
Checkpoint load_checkpoint(const std::string& path);

Checkpoint make_checkpoint(const SimState& state, std::uint64_t seed, double dt);

} // namespace mlaf
