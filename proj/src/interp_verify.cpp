#include "nsest/interp_verify.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "nsest/csv.hpp"
#include "nsest/exponents.hpp"

namespace nsest {

namespace {

double ratio_from_bundle(const NormBundle& bundle, const ScalarField& u, double l, double q,
                         double alpha) {
    if (u.is_zero()) throw UndefinedRatioError("interpolation_ratio: zero field");
    const double w = omega(l, q, alpha);
    const double lhs = bundle.norm_l(l);
    const double strong = bundle.c_norm(2, alpha);
    const double weak = lq_norm(u, q);
    const double denom = std::pow(strong, w) * std::pow(weak, 1.0 - w);
    return lhs / denom;
}

} // namespace

double interpolation_ratio(const ScalarField& u, double l, double q, double alpha,
                           const PairScan& scan) {
    NormBundle bundle(u, scan);
    return ratio_from_bundle(bundle, u, l, q, alpha);
}

double interpolation_ratio(const NormBundle& bundle, const ScalarField& u, double l, double q,
                           double alpha) {
    return ratio_from_bundle(bundle, u, l, q, alpha);
}

std::vector<InterpReport> family_sweep_multi(const FunctionFamily& family,
                                             std::span<const double> ls, double q, double alpha,
                                             const Grid& grid, const PairScan& scan) {
    if (family.size() == 0) throw PreconditionError("family_sweep: empty family");
    std::vector<InterpReport> reports(ls.size());
    for (std::size_t t = 0; t < ls.size(); ++t) {
        reports[t].grid_n = grid.n();
        reports[t].seed = family.seed();
        reports[t].l = ls[t];
        reports[t].q = q;
        reports[t].alpha = alpha;
    }
    for (const FamilyMember& member : family.members()) {
        const ScalarField u = member.sample(grid);
        const NormBundle bundle(u, scan);
        const double strong = bundle.c_norm(2, alpha);
        const double weak = lq_norm(u, q);
        for (std::size_t t = 0; t < ls.size(); ++t) {
            const double l = ls[t];
            const double w = omega(l, q, alpha);
            const double lhs = bundle.norm_l(l);
            if (u.is_zero()) throw UndefinedRatioError("family_sweep: zero member");
            const double ratio = lhs / (std::pow(strong, w) * std::pow(weak, 1.0 - w));
            InterpRow row{to_string(member.kind), member.param, family.seed(), l,     q,
                          alpha,                  lhs,          strong,        weak,  w,
                          ratio};
            reports[t].rows.push_back(std::move(row));
            reports[t].c_emp = std::max(reports[t].c_emp, ratio);
        }
    }
    return reports;
}

InterpReport family_sweep(const FunctionFamily& family, double l, double q, double alpha,
                          const Grid& grid, const PairScan& scan) {
    const double ls[1] = {l};
    return family_sweep_multi(family, ls, q, alpha, grid, scan)[0];
}

void write_interp_csv(std::ostream& out, const InterpReport& report, bool with_timestamp) {
    CsvWriter csv(out, with_timestamp);
    csv.header("kind,param,seed,l,q,alpha,lhs,norm_2a,norm_q,omega,ratio");
    for (const InterpRow& r : report.rows) {
        csv.field(r.kind);
        csv.field(r.param);
        csv.field(r.seed);
        csv.field(r.l);
        csv.field(r.q);
        csv.field(r.alpha);
        csv.field(r.lhs);
        csv.field(r.norm_2a);
        csv.field(r.norm_q);
        csv.field(r.omega);
        csv.field(r.ratio);
        csv.end_row();
    }
    csv.field("C_emp");
    csv.field(report.c_emp);
    csv.end_row();
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw DomainError("loglog_slope: need two samples of equal length");
    const auto n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ScalingBalanceResult scaling_balance_test(std::span<const double> mus, double l, double q,
                                          double alpha, const Grid& grid, const PairScan& scan) {
    if (mus.size() < 2) throw PreconditionError("scaling_balance_test: need at least two scales");
    ScalingBalanceResult res;
    const double w = omega(l, q, alpha);
    for (double mu : mus) {
        const ScalarField u = dilated_bump(grid, mu);
        const NormBundle bundle(u, scan);
        const double lhs = bundle.norm_l(l);
        const double rhs = std::pow(bundle.c_norm(2, alpha), w) * std::pow(lq_norm(u, q), 1.0 - w);
        res.mus.push_back(mu);
        res.lhs_values.push_back(lhs);
        res.rhs_values.push_back(rhs);
    }
    res.s_lhs = loglog_slope(res.mus, res.lhs_values);
    res.s_rhs = loglog_slope(res.mus, res.rhs_values);
    return res;
}

double young_c_min(double a1, double eps) {
    if (!(a1 > 0.0 && a1 < 1.0)) throw DomainError("young_c_min: a1 must lie in (0,1)");
    if (!(eps > 0.0)) throw DomainError("young_c_min: eps must be positive");
    const double p = a1 / (1.0 - a1);
    return (1.0 - a1) * std::pow(a1, p) * std::pow(eps, -p);
}

YoungFitReport young_split_check(double a1, double a2, std::span<const double> epsilons,
                                 int trials, std::uint64_t seed) {
    if (!(a1 > 0.0 && a1 < 1.0))
        throw DomainError("young_split_check: a1 must lie in (0,1)");
    if (!(a2 > 0.0)) throw DomainError("young_split_check: a2 must be positive");
    if (trials < 100) throw PreconditionError("young_split_check: need at least 100 trials");
    for (double e : epsilons)
        if (!(e > 0.0 && e <= 1.0))
            throw DomainError("young_split_check: epsilons must lie in (0,1]");
    if (epsilons.size() < 2)
        throw PreconditionError("young_split_check: need at least two epsilons");

    YoungFitReport rep;
    rep.a1 = a1;
    rep.a2 = a2;
    const auto y = young_exponents(a1, a2);
    rep.A_young = y.A_young;
    rep.A_paper = y.A_paper;
    rep.B = y.B;
    rep.epsilons.assign(epsilons.begin(), epsilons.end());

    std::mt19937_64 rng(seed);
    auto uniform01 = [&rng]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    // X* = (a1/eps)^{1/(1-a1)} spans many decades over the eps range; the
    // random search samples log-uniformly over a window that covers it.
    const double log_lo = std::log(1e-8);
    const double log_hi = std::log(1e24);
    for (double eps : epsilons) {
        rep.c_min_closed.push_back(young_c_min(a1, eps));
        double best = 0.0;
        for (int t = 0; t < trials; ++t) {
            const double X = std::exp(log_lo + (log_hi - log_lo) * uniform01());
            best = std::max(best, std::pow(X, a1) - eps * X);
        }
        rep.c_min_search.push_back(best);
    }
    rep.slope_closed = loglog_slope(rep.epsilons, rep.c_min_closed);
    rep.slope_search = loglog_slope(rep.epsilons, rep.c_min_search);

    // X^{a1} Y^{a2} <= eps X + C_min(eps) Y^B with B = a2/(1-a1): sampled check.
    const std::uint64_t samples = static_cast<std::uint64_t>(trials) * epsilons.size();
    rep.inequality_samples = samples;
    for (double eps : epsilons) {
        const double cmin = young_c_min(a1, eps);
        for (int t = 0; t < trials; ++t) {
            const double X = std::exp(std::log(1e-6) + std::log(1e12) * uniform01());
            const double Y = std::exp(std::log(1e-6) + std::log(1e12) * uniform01());
            const double lhs = std::pow(X, a1) * std::pow(Y, a2);
            const double rhs = eps * X + cmin * std::pow(Y, rep.B);
            if (lhs > rhs * (1.0 + 1e-12)) ++rep.inequality_violations;
        }
    }
    return rep;
}

void write_young_csv(std::ostream& out, const YoungFitReport& report, bool with_timestamp) {
    CsvWriter csv(out, with_timestamp);
    csv.header("eps,c_min_closed,c_min_search");
    for (std::size_t i = 0; i < report.epsilons.size(); ++i) {
        csv.field(report.epsilons[i]);
        csv.field(report.c_min_closed[i]);
        csv.field(report.c_min_search[i]);
        csv.end_row();
    }
    csv.field("slope_closed");
    csv.field(report.slope_closed);
    csv.end_row();
    csv.field("slope_search");
    csv.field(report.slope_search);
    csv.end_row();
    csv.field("neg_A_young");
    csv.field(-report.A_young);
    csv.end_row();
    csv.field("neg_A_paper");
    csv.field(-report.A_paper);
    csv.end_row();
    csv.field("B");
    csv.field(report.B);
    csv.end_row();
    csv.field("violations");
    csv.field(report.inequality_violations);
    csv.end_row();
}

} // namespace nsest
