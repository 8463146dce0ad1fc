#pragma once

#include <cmath>
#include <string>

#include "nsest/errors.hpp"

namespace nsest {

/// Interpolation weight between the C^{2+alpha} norm and the L_q norm:
/// omega = (q*l + 3) / (q*(2+alpha) + 3), valid for l in [0, 2+alpha].
inline double omega(double l, double q, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("omega: alpha must lie in (0,1)");
    if (!(q > 1.0)) throw DomainError("omega: q must exceed 1");
    if (!(l >= 0.0 && l <= 2.0 + alpha))
        throw DomainError("omega: l must lie in [0, 2+alpha], got " + std::to_string(l));
    return (q * l + 3.0) / (q * (2.0 + alpha) + 3.0);
}

struct SpecialOmegas {
    double omega_0;
    double omega_alpha;
    double omega_1;
    double omega_1alpha;
};

/// The four weights used with q = 6 (the L_6 embedding): l = 0, alpha, 1, 1+alpha.
inline SpecialOmegas special_omegas(double alpha) {
    return SpecialOmegas{omega(0.0, 6.0, alpha), omega(alpha, 6.0, alpha),
                         omega(1.0, 6.0, alpha), omega(1.0 + alpha, 6.0, alpha)};
}

struct AExponents {
    double a1;
    double a2;
};

/// a1 = 6(2+alpha)/(6(2+alpha)+3) < 1 and a2 = 2 - a1.
inline AExponents a_exponents(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("a_exponents: alpha must lie in (0,1)");
    const double a1 = 6.0 * (2.0 + alpha) / (6.0 * (2.0 + alpha) + 3.0);
    return AExponents{a1, 2.0 - a1};
}

struct YoungExponents {
    double A_paper;  // a1 / ((1-a1)*a2)
    double A_young;  // a1 / (1-a1), the exponent the eps-optimization produces
    double B;        // a2 / (1-a1)
};

/// Exponents of the eps-split of X^{a1} Y^{a2}. Both A variants are reported;
/// the numerical fit in young_split_check adjudicates between them. B is what
/// the final estimate uses and agrees with (2-a1)/(1-a1) when a2 = 2-a1.
inline YoungExponents young_exponents(double a1, double a2) {
    if (!(a1 > 0.0 && a1 < 1.0))
        throw DomainError("young_exponents: a1 must lie in (0,1) for the eps-split");
    if (!(a2 > 0.0)) throw DomainError("young_exponents: a2 must be positive");
    return YoungExponents{a1 / ((1.0 - a1) * a2), a1 / (1.0 - a1), a2 / (1.0 - a1)};
}

/// Critical Sobolev embedding exponent dim*p/(dim-p); requires p < dim.
inline double sobolev_critical_exponent(int space_dim, double p) {
    if (space_dim <= 0) throw DomainError("sobolev_critical_exponent: dim must be positive");
    if (!(p > 0.0) || p >= static_cast<double>(space_dim))
        throw DomainError("sobolev_critical_exponent: need 0 < p < dim, no embedding otherwise");
    return static_cast<double>(space_dim) * p / (static_cast<double>(space_dim) - p);
}

/// Every exponent of the estimate chain for one (q, alpha) pair.
struct ExponentSet {
    double q;
    double alpha;
    double omega_0;
    double omega_alpha;
    double omega_1;
    double omega_1alpha;
    double a1;
    double a2;
    double A_paper;
    double A_young;
    double B;

    static ExponentSet compute(double alpha, double q = 6.0) {
        ExponentSet s{};
        s.q = q;
        s.alpha = alpha;
        s.omega_0 = omega(0.0, q, alpha);
        s.omega_alpha = omega(alpha, q, alpha);
        s.omega_1 = omega(1.0, q, alpha);
        s.omega_1alpha = omega(1.0 + alpha, q, alpha);
        // a1 = omega_0 + omega_1alpha at any q; for q = 6 this reduces to the
        // closed form 6(2+alpha)/(6(2+alpha)+3) of a_exponents.
        s.a1 = s.omega_0 + s.omega_1alpha;
        s.a2 = 2.0 - s.a1;
        const auto y = young_exponents(s.a1, s.a2);
        s.A_paper = y.A_paper;
        s.A_young = y.A_young;
        s.B = y.B;
        return s;
    }
};

} // namespace nsest
