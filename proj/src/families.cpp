#include "nsest/families.hpp"

#include <cmath>
#include <random>

namespace nsest {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

// Uniform doubles derived from raw engine output so that streams are
// reproducible independent of the standard library's distribution internals.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

int uniform_int(std::mt19937_64& rng, int lo, int hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(rng() % span);
}

FamilyMember make_polynomial(std::mt19937_64& rng, const FamilyOptions& opts) {
    FamilyMember m;
    m.kind = FamilyKind::polynomial;
    const int deg = uniform_int(rng, 1, opts.poly_degree_max);
    m.param = "deg=" + std::to_string(deg);
    for (int total = 0; total <= deg; ++total)
        for (int b1 = 0; b1 <= total; ++b1)
            for (int b2 = 0; b2 + b1 <= total; ++b2) {
                const int b3 = total - b1 - b2;
                m.poly_powers.push_back({b1, b2, b3});
                m.poly_coeffs.push_back(uniform(rng, -1.0, 1.0));
            }
    return m;
}

FamilyMember make_trig(std::mt19937_64& rng, const FamilyOptions& opts) {
    FamilyMember m;
    m.kind = FamilyKind::trig;
    const int n_modes = uniform_int(rng, 1, 3);
    m.param = "modes=" + std::to_string(n_modes);
    for (int t = 0; t < n_modes; ++t) {
        FamilyMember::Mode mode;
        do {
            mode.k = {uniform_int(rng, -opts.wave_number_max, opts.wave_number_max),
                      uniform_int(rng, -opts.wave_number_max, opts.wave_number_max),
                      uniform_int(rng, -opts.wave_number_max, opts.wave_number_max)};
        } while (mode.k[0] == 0 && mode.k[1] == 0 && mode.k[2] == 0);
        mode.amplitude = uniform(rng, -1.0, 1.0);
        mode.phase = uniform(rng, 0.0, kTwoPi);
        m.modes.push_back(mode);
    }
    return m;
}

FamilyMember make_bump(std::mt19937_64& rng, const FamilyOptions& opts) {
    FamilyMember m;
    m.kind = FamilyKind::gaussian_bump;
    m.bump_sigma = uniform(rng, opts.sigma_min, opts.sigma_max);
    m.bump_amp = uniform(rng, 0.5, 2.0);
    m.bump_center = {uniform(rng, 0.3, 0.7), uniform(rng, 0.3, 0.7), uniform(rng, 0.3, 0.7)};
    char buf[32];
    std::snprintf(buf, sizeof buf, "sigma=%.3f", m.bump_sigma);
    m.param = buf;
    return m;
}

FamilyMember make_fourier(std::mt19937_64& rng, const FamilyOptions& opts) {
    FamilyMember m;
    m.kind = FamilyKind::random_fourier;
    const int cap = opts.fourier_mode_cap;
    m.param = "cap=" + std::to_string(cap);
    for (int k1 = -cap; k1 <= cap; ++k1)
        for (int k2 = -cap; k2 <= cap; ++k2)
            for (int k3 = 0; k3 <= cap; ++k3) {
                if (k3 == 0 && (k1 < 0 || (k1 == 0 && k2 <= 0))) continue;  // one per ±k pair
                FamilyMember::Mode mode;
                mode.k = {k1, k2, k3};
                const double k2norm =
                    static_cast<double>(k1 * k1 + k2 * k2 + k3 * k3);
                mode.amplitude = uniform(rng, -1.0, 1.0) / (1.0 + k2norm);
                mode.phase = uniform(rng, 0.0, kTwoPi);
                m.modes.push_back(mode);
            }
    return m;
}

} // namespace

std::string to_string(FamilyKind k) {
    switch (k) {
        case FamilyKind::polynomial: return "polynomial";
        case FamilyKind::trig: return "trig";
        case FamilyKind::gaussian_bump: return "gaussian_bump";
        case FamilyKind::random_fourier: return "random_fourier";
    }
    return "unknown";
}

double FamilyMember::evaluate(double x, double y, double z) const {
    switch (kind) {
        case FamilyKind::polynomial: {
            double acc = 0.0;
            for (std::size_t t = 0; t < poly_coeffs.size(); ++t) {
                const auto& p = poly_powers[t];
                double term = poly_coeffs[t];
                for (int e = 0; e < p[0]; ++e) term *= x;
                for (int e = 0; e < p[1]; ++e) term *= y;
                for (int e = 0; e < p[2]; ++e) term *= z;
                acc += term;
            }
            return acc;
        }
        case FamilyKind::trig:
        case FamilyKind::random_fourier: {
            double acc = 0.0;
            for (const Mode& m : modes)
                acc += m.amplitude *
                       std::cos(kTwoPi * (m.k[0] * x + m.k[1] * y + m.k[2] * z) + m.phase);
            return acc;
        }
        case FamilyKind::gaussian_bump: {
            const double dx = x - bump_center[0];
            const double dy = y - bump_center[1];
            const double dz = z - bump_center[2];
            const double r2 = dx * dx + dy * dy + dz * dz;
            return bump_amp * std::exp(-r2 / (2.0 * bump_sigma * bump_sigma));
        }
    }
    return 0.0;
}

ScalarField FamilyMember::sample(const Grid& grid) const {
    return ScalarField::sample(grid,
                               [this](double x, double y, double z) { return evaluate(x, y, z); });
}

FunctionFamily FunctionFamily::mixed(int count, std::uint64_t seed, const FamilyOptions& opts) {
    FunctionFamily fam;
    fam.seed_ = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        switch (i % 4) {
            case 0: fam.members_.push_back(make_polynomial(rng, opts)); break;
            case 1: fam.members_.push_back(make_trig(rng, opts)); break;
            case 2: fam.members_.push_back(make_bump(rng, opts)); break;
            default: fam.members_.push_back(make_fourier(rng, opts)); break;
        }
    }
    return fam;
}

FunctionFamily FunctionFamily::of_kind(FamilyKind kind, int count, std::uint64_t seed,
                                       const FamilyOptions& opts) {
    FunctionFamily fam;
    fam.seed_ = seed;
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
        switch (kind) {
            case FamilyKind::polynomial: fam.members_.push_back(make_polynomial(rng, opts)); break;
            case FamilyKind::trig: fam.members_.push_back(make_trig(rng, opts)); break;
            case FamilyKind::gaussian_bump: fam.members_.push_back(make_bump(rng, opts)); break;
            case FamilyKind::random_fourier: fam.members_.push_back(make_fourier(rng, opts)); break;
        }
    }
    return fam;
}

FunctionFamily FunctionFamily::constants(int count, double base) {
    FunctionFamily fam;
    for (int i = 0; i < count; ++i) {
        FamilyMember m;
        m.kind = FamilyKind::polynomial;
        const double c = base * static_cast<double>(i + 1);
        m.param = "const=" + std::to_string(c);
        m.poly_powers.push_back({0, 0, 0});
        m.poly_coeffs.push_back(c);
        fam.members_.push_back(std::move(m));
    }
    return fam;
}

double bump_profile(double r) {
    if (!(r < 1.0)) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

ScalarField dilated_bump(const Grid& grid, double mu, const std::array<double, 3>& center) {
    const double radius = 0.5 / mu;
    for (double c : center)
        if (c - radius < 0.0 || c + radius > 1.0)
            throw InvalidFamilyError("dilated_bump: support of radius " + std::to_string(radius) +
                                     " leaves the cube");
    return ScalarField::sample(grid, [mu, &center](double x, double y, double z) {
        const double dx = x - center[0];
        const double dy = y - center[1];
        const double dz = z - center[2];
        const double r = 2.0 * mu * std::sqrt(dx * dx + dy * dy + dz * dz);
        return bump_profile(r);
    });
}

} // namespace nsest
