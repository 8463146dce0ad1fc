#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nsest/families.hpp"
#include "nsest/field.hpp"
#include "nsest/norms.hpp"

namespace nsest {

/// R = |u|^(l) / ((|u|^(2+alpha))^omega * (||u||_q)^(1-omega)).
/// Scale invariant in u; throws UndefinedRatioError for the zero field.
double interpolation_ratio(const ScalarField& u, double l, double q, double alpha,
                           const PairScan& scan = {});

/// Same ratio from a precomputed derivative bundle (u must be the bundle's field).
double interpolation_ratio(const NormBundle& bundle, const ScalarField& u, double l, double q,
                           double alpha);

struct InterpRow {
    std::string kind;
    std::string param;
    std::uint64_t seed;
    double l;
    double q;
    double alpha;
    double lhs;
    double norm_2a;
    double norm_q;
    double omega;
    double ratio;
};

struct InterpReport {
    std::vector<InterpRow> rows;
    double c_emp = 0.0;  // max ratio over the family
    int grid_n = 0;
    std::uint64_t seed = 0;
    double l = 0.0;
    double q = 0.0;
    double alpha = 0.0;
};

InterpReport family_sweep(const FunctionFamily& family, double l, double q, double alpha,
                          const Grid& grid, const PairScan& scan = {});

/// One pass per member shared across several l values.
std::vector<InterpReport> family_sweep_multi(const FunctionFamily& family, std::span<const double> ls,
                                             double q, double alpha, const Grid& grid,
                                             const PairScan& scan = {});

void write_interp_csv(std::ostream& out, const InterpReport& report, bool with_timestamp);

struct ScalingBalanceResult {
    std::vector<double> mus;
    std::vector<double> lhs_values;  // |u_mu|^(l)
    std::vector<double> rhs_values;  // (|u_mu|^(2+alpha))^omega (||u_mu||_q)^(1-omega)
    double s_lhs = 0.0;              // fitted log-log slope of lhs vs mu
    double s_rhs = 0.0;
};

/// Fits the dilation scaling of both sides of the interpolation inequality on
/// the compact bump family; the two slopes must agree when omega carries the
/// right exponent balance.
ScalingBalanceResult scaling_balance_test(std::span<const double> mus, double l, double q,
                                          double alpha, const Grid& grid,
                                          const PairScan& scan = {});

struct YoungFitReport {
    double a1 = 0.0;
    double a2 = 0.0;
    double A_young = 0.0;
    double A_paper = 0.0;
    double B = 0.0;
    std::vector<double> epsilons;
    std::vector<double> c_min_closed;   // (1-a1) a1^{a1/(1-a1)} eps^{-a1/(1-a1)}
    std::vector<double> c_min_search;   // random-search maxima of X^{a1} - eps X
    double slope_closed = 0.0;          // log-log fit of c_min_closed vs eps
    double slope_search = 0.0;
    std::uint64_t inequality_samples = 0;
    std::uint64_t inequality_violations = 0;  // of X^a1 Y^a2 <= eps X + C_min(eps) Y^B
};

/// Closed-form C_min(eps) = sup_{X>0} (X^{a1} - eps X) for Y = 1.
double young_c_min(double a1, double eps);

YoungFitReport young_split_check(double a1, double a2, std::span<const double> epsilons,
                                 int trials, std::uint64_t seed = 20240501);

void write_young_csv(std::ostream& out, const YoungFitReport& report, bool with_timestamp);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

} // namespace nsest
