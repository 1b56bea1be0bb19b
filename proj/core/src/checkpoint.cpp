#include "mlaf/checkpoint.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>

#include "mlaf/error.hpp"

namespace mlaf {

namespace {

constexpr std::array<char, 4> kMagic{'M', 'L', 'A', 'F'};

template <typename T>
void put(std::ostream& out, T value) {
    static_assert(std::is_trivially_copyable_v<T>);
    std::array<char, sizeof(T)> bytes;
    std::memcpy(bytes.data(), &value, sizeof(T));
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    out.write(bytes.data(), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
    std::array<char, sizeof(T)> bytes;
    if (!in.read(bytes.data(), sizeof(T))) {
        throw FormatError("checkpoint: truncated file");
    }
    if constexpr (std::endian::native == std::endian::big) {
        std::reverse(bytes.begin(), bytes.end());
    }
    T value;
    std::memcpy(&value, bytes.data(), sizeof(T));
    return value;
}

ModelKind kind_from_code(std::uint32_t code) {
    switch (code) {
    case 0: return ModelKind::MlAlpha;
    case 1: return ModelKind::LerayAlpha;
    case 2: return ModelKind::Nse;
    }
    throw FormatError("checkpoint: unknown model kind code " + std::to_string(code));
}

} // namespace

Checkpoint make_checkpoint(const SimState& state, std::uint64_t seed, double dt) {
    const TorusGrid& g = state.u.grid();
    return Checkpoint{g.n(),           g.length(), state.params.nu, state.params.alpha,
                      state.params.kind, state.t,  seed,            dt,
                      state.step,      state.u};
}

void write_checkpoint(std::ostream& out, const Checkpoint& c) {
    out.write(kMagic.data(), kMagic.size());
    put<std::uint32_t>(out, kCheckpointVersion);
    put<std::int32_t>(out, c.n);
    put<double>(out, c.L);
    put<double>(out, c.nu);
    put<double>(out, c.alpha);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(c.kind));
    put<double>(out, c.t);
    put<std::uint64_t>(out, c.seed);
    put<double>(out, c.dt);
    put<std::uint64_t>(out, c.step);
    for (int comp = 0; comp < 3; ++comp) {
        for (const Complex& v : c.u.component(comp)) {
            put<double>(out, v.real());
            put<double>(out, v.imag());
        }
    }
    if (!out) {
        throw FormatError("checkpoint: write failed");
    }
}

void save_checkpoint(const std::string& path, const Checkpoint& ckpt) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw FormatError("checkpoint: cannot open '" + tmp + "' for writing");
        }
        write_checkpoint(out, ckpt);
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(std::istream& in) {
    std::array<char, 4> magic{};
    if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
        throw FormatError("checkpoint: bad magic");
    }
    const auto version = get<std::uint32_t>(in);
    if (version != kCheckpointVersion) {
        throw FormatError("checkpoint: version " + std::to_string(version) +
                          " not supported (expected " + std::to_string(kCheckpointVersion) + ")");
    }
    const int n = get<std::int32_t>(in);
    const double L = get<double>(in);
    const double nu = get<double>(in);
    const double alpha = get<double>(in);
    const ModelKind kind = kind_from_code(get<std::uint32_t>(in));
    const double t = get<double>(in);
    const auto seed = get<std::uint64_t>(in);
    const double dt = get<double>(in);
    const auto step = get<std::uint64_t>(in);

    TorusGrid grid = [&] {
        try {
            return make_grid(n, L);
        } catch (const ConfigError& e) {
            throw FormatError(std::string("checkpoint: invalid grid: ") + e.what());
        }
    }();
    Checkpoint c{n, L, nu, alpha, kind, t, seed, dt, step, SpectralVectorField(grid)};
    for (int comp = 0; comp < 3; ++comp) {
        for (Complex& v : c.u.component(comp)) {
            const double re = get<double>(in);
            const double im = get<double>(in);
            v = Complex(re, im);
        }
    }
    return c;
}

Checkpoint load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("checkpoint: cannot open '" + path + "'");
    }
    return read_checkpoint(in);
}

} // namespace mlaf
