#include "nsest/estimate_verify.hpp"

#include <cmath>
#include <ostream>

#include "nsest/csv.hpp"
#include "nsest/families.hpp"
#include "nsest/interp_verify.hpp"
#include "nsest/mms.hpp"

namespace nsest {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double vector_c_alpha_norm(const VectorField& f, double alpha, const PairScan& scan) {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c)
        acc += sup_norm(f[c]) + holder_seminorm(f[c], alpha, scan);
    return acc;
}

double vector_c_2alpha_norm(const VectorField& f, double alpha, const PairScan& scan) {
    double acc = 0.0;
    for (int c = 0; c < 3; ++c) acc += c_norm(f[c], 2, alpha, scan).c_norm;
    return acc;
}

ProductRuleResult product_rule_check(const VectorField& v, double alpha, const PairScan& scan) {
    const VectorField adv = advect(v);
    ProductRuleResult res;

    double sup_v = 0.0, sem_v = 0.0;
    for (int i = 0; i < 3; ++i) {
        sup_v += sup_norm(v[i]);
        sem_v += holder_seminorm(v[i], alpha, scan);
    }
    double sup_dv = 0.0, sem_dv = 0.0;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            MultiIndex beta{l == 0 ? 1 : 0, l == 1 ? 1 : 0, l == 2 ? 1 : 0};
            const ScalarField d = derivative(v[k], beta);
            sup_dv += sup_norm(d);
            sem_dv += holder_seminorm(d, alpha, scan);
        }
    for (int i = 0; i < 3; ++i) {
        res.lhs0 += sup_norm(adv[i]);
        res.lhsA += holder_seminorm(adv[i], alpha, scan);
    }
    res.rhs0 = sup_v * sup_dv;
    res.rhsA = sup_v * sem_dv + sem_v * sup_dv;
    return res;
}

double nonlinear_holder_estimate(const VectorField& v, double alpha, const PairScan& scan) {
    if (v.is_zero()) throw UndefinedRatioError("nonlinear_holder_estimate: zero field");
    const double num = vector_c_alpha_norm(advect(v), alpha, scan);
    const auto a = a_exponents(alpha);
    const double den = std::pow(vector_c_2alpha_norm(v, alpha, scan), a.a1) *
                       std::pow(lq_norm(v, 6.0), a.a2);
    return num / den;
}

double schauder_ratio(const FlowState& state, const VectorField& g, double alpha,
                      const PairScan& scan) {
    const double g_a = vector_c_alpha_norm(g, alpha, scan);
    const VectorField vn = state.velocity_nodal();
    const bool state_zero = vn.is_zero();
    if (g_a == 0.0) {
        if (state_zero) return 0.0;
        throw InconsistencyError("schauder_ratio: zero RHS with a nonzero state");
    }
    const double v_2a = vector_c_2alpha_norm(vn, alpha, scan);
    const ScalarField pn = state.pressure_nodal();
    VectorField gradp(derivative(pn, {1, 0, 0}), derivative(pn, {0, 1, 0}),
                      derivative(pn, {0, 0, 1}));
    const double gradp_a = vector_c_alpha_norm(gradp, alpha, scan);
    return (v_2a + gradp_a) / g_a;
}

ForcingSpec ForcingSpec::parse(const std::string& kind, double nu) {
    ForcingSpec spec;
    spec.nu = nu;
    if (kind == "trig")
        spec.kind = Kind::trig;
    else if (kind == "bump")
        spec.kind = Kind::bump;
    else if (kind == "manufactured")
        spec.kind = Kind::manufactured;
    else
        throw ConfigError("forcing.kind must be trig|bump|manufactured, got " + kind);
    return spec;
}

VectorField ForcingSpec::build(const Grid& grid, double amplitude) const {
    switch (kind) {
        case Kind::trig:
            return VectorField::sample(
                grid, [amplitude](double, double y, double) { return amplitude * std::sin(kTwoPi * y); },
                [](double, double, double) { return 0.0; },
                [](double, double, double) { return 0.0; });
        case Kind::bump: {
            return VectorField::sample(
                grid,
                [amplitude](double x, double y, double z) {
                    const double dx = x - 0.5, dy = y - 0.5, dz = z - 0.5;
                    const double r = 2.0 * std::sqrt(dx * dx + dy * dy + dz * dz);
                    return amplitude * bump_profile(r);
                },
                [](double, double, double) { return 0.0; },
                [](double, double, double) { return 0.0; });
        }
        case Kind::manufactured: {
            ManufacturedSolution mms;
            mms.amplitude = 1.0;
            return mms.forcing_navier_stokes_field(grid, nu).scaled(amplitude);
        }
    }
    throw ConfigError("ForcingSpec: bad kind");
}

std::vector<EstimateRow> theorem_sweep(std::span<const double> amplitudes,
                                       const ForcingSpec& forcing, double nu, double alpha,
                                       const Grid& grid, const SolverConfig& cfg,
                                       const PairScan& scan) {
    const ExponentSet exps = ExponentSet::compute(alpha);
    std::vector<EstimateRow> rows;
    for (double amp : amplitudes) {
        EstimateRow row;
        row.amplitude = amp;
        row.B = exps.B;
        const VectorField f = forcing.build(grid, amp);
        if (amp == 0.0 || f.is_zero()) {
            row.converged = true;
            rows.push_back(row);
            continue;
        }
        try {
            const NsSolution sol = solve_navier_stokes(FluidProblem(nu, f), cfg);
            const VectorField vn = sol.state.velocity_nodal();
            const VectorField adv = advect(vn);
            const VectorField g = f.minus(adv);

            row.f_alpha = vector_c_alpha_norm(f, alpha, scan);
            row.v_2a = vector_c_2alpha_norm(vn, alpha, scan);
            const ScalarField pn = sol.state.pressure_nodal();
            VectorField gradp(derivative(pn, {1, 0, 0}), derivative(pn, {0, 1, 0}),
                              derivative(pn, {0, 0, 1}));
            row.gradp_a = vector_c_alpha_norm(gradp, alpha, scan);
            row.v_w12 = sobolev_norm(vn, 1, 2.0);
            row.v_l6 = lq_norm(vn, 6.0);
            row.nlterm_a = vector_c_alpha_norm(adv, alpha, scan);
            row.g_alpha = vector_c_alpha_norm(g, alpha, scan);
            row.Q = row.v_2a / (row.f_alpha + std::pow(row.v_w12, exps.B));
            row.C_nl = row.nlterm_a /
                       (std::pow(row.v_2a, exps.a1) * std::pow(row.v_l6, exps.a2));
            row.C_schauder = row.g_alpha == 0.0 ? 0.0 : (row.v_2a + row.gradp_a) / row.g_alpha;
            row.converged = true;
        } catch (const NonlinearDivergenceError&) {
            row.converged = false;
        }
        rows.push_back(row);
    }
    return rows;
}

double absorption_check(const EstimateRow& row, double eps, const ExponentSet& exps) {
    const double c_eps = young_c_min(exps.a1, eps) * std::pow(row.C_nl, exps.B / exps.a2);
    const double rhs =
        eps * row.v_2a + row.f_alpha + c_eps * std::pow(row.v_l6, exps.B);
    return rhs - row.g_alpha;
}

void write_estimate_csv(std::ostream& out, std::span<const EstimateRow> rows,
                        bool with_timestamp) {
    CsvWriter csv(out, with_timestamp);
    csv.header(
        "amplitude,f_alpha,v_2a,gradp_a,v_w12,v_l6,nlterm_a,g_alpha,B,Q,C_nl,C_schauder,"
        "converged");
    for (const EstimateRow& r : rows) {
        csv.field(r.amplitude);
        csv.field(r.f_alpha);
        csv.field(r.v_2a);
        csv.field(r.gradp_a);
        csv.field(r.v_w12);
        csv.field(r.v_l6);
        csv.field(r.nlterm_a);
        csv.field(r.g_alpha);
        csv.field(r.B);
        csv.field(r.Q);
        csv.field(r.C_nl);
        csv.field(r.C_schauder);
        csv.field(r.converged ? 1 : 0);
        csv.end_row();
    }
}

void write_trace_csv(std::ostream& out, std::span<const PicardTraceRow> rows,
                     bool with_timestamp) {
    CsvWriter csv(out, with_timestamp);
    csv.header("iter,update_sup,residual_sup,div_max");
    for (const PicardTraceRow& r : rows) {
        csv.field(r.iter);
        csv.field(r.update_sup);
        csv.field(r.residual_sup);
        csv.field(r.div_max);
        csv.end_row();
    }
}

} // namespace nsest
