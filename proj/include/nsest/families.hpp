#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "nsest/field.hpp"
#include "nsest/grid.hpp"

namespace nsest {

enum class FamilyKind { polynomial, trig, gaussian_bump, random_fourier };

std::string to_string(FamilyKind k);

/// One generated smooth function, in a closed form that can be sampled on any
/// grid. All members are C-infinity on the closed cube.
struct FamilyMember {
    FamilyKind kind;
    std::string param;  // short human-readable parameter tag for reports

    // polynomial: coeffs[t] for monomials enumerated by total degree
    std::vector<double> poly_coeffs;
    std::vector<std::array<int, 3>> poly_powers;

    // trig / random_fourier: sum of a*cos(2pi k.x + phi)
    struct Mode {
        double amplitude;
        double phase;
        std::array<int, 3> k;
    };
    std::vector<Mode> modes;

    // gaussian bump: A*exp(-|x-c|^2/(2 sigma^2))
    double bump_amp = 0.0;
    double bump_sigma = 0.0;
    std::array<double, 3> bump_center{};

    double evaluate(double x, double y, double z) const;
    ScalarField sample(const Grid& grid) const;
};

/// Parameter envelope for generated members. Defaults stay well inside the
/// resolvable range of the grids this toolkit runs on.
struct FamilyOptions {
    int poly_degree_max = 4;
    int wave_number_max = 2;       // <= 3 supported
    double sigma_min = 0.15;       // >= 0.05 supported
    double sigma_max = 0.5;
    int fourier_mode_cap = 2;      // <= 3 supported
};

/// Deterministic corpus of smooth test functions.
class FunctionFamily {
public:
    /// Round-robin mix over all four kinds.
    static FunctionFamily mixed(int count, std::uint64_t seed, const FamilyOptions& opts = {});
    static FunctionFamily of_kind(FamilyKind kind, int count, std::uint64_t seed,
                                  const FamilyOptions& opts = {});
    /// count copies of distinct nonzero constants (degree-0 polynomials).
    static FunctionFamily constants(int count, double base = 1.0);

    const std::vector<FamilyMember>& members() const { return members_; }
    std::uint64_t seed() const { return seed_; }
    std::size_t size() const { return members_.size(); }
    void push_back(FamilyMember m) { members_.push_back(std::move(m)); }

private:
    std::vector<FamilyMember> members_;
    std::uint64_t seed_ = 0;
};

/// Compactly supported radial bump phi(r) = exp(1 - 1/(1-r^2)) for r < 1,
/// zero beyond. The dilation family used by the scaling-balance test is
/// u_mu(x) = phi(2 mu |x - x0|) with x0 the cube center, so the support
/// radius is 0.5/mu and stays inside the cube exactly when mu >= 1.
double bump_profile(double r);

/// Throws InvalidFamilyError when the support would leave the cube (mu < 1).
ScalarField dilated_bump(const Grid& grid, double mu,
                         const std::array<double, 3>& center = {0.5, 0.5, 0.5});

} // namespace nsest
