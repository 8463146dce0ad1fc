#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "nsest/exponents.hpp"
#include "nsest/navier_stokes.hpp"
#include "nsest/norms.hpp"

namespace nsest {

/// Vector C^alpha norm: sum over components of sup + seminorm.
double vector_c_alpha_norm(const VectorField& f, double alpha, const PairScan& scan = {});
/// Vector C^{2+alpha} norm: sum over components of the full order-2 norm.
double vector_c_2alpha_norm(const VectorField& f, double alpha, const PairScan& scan = {});

struct ProductRuleResult {
    double lhs0 = 0.0;  // |(v.grad)v|^(0)
    double rhs0 = 0.0;  // sum_{i,k,l} |v_i|^0 |d_l v_k|^0
    double lhsA = 0.0;  // <(v.grad)v>^(alpha)
    double rhsA = 0.0;  // the two mixed sup/seminorm sums
};

/// Both sides of the pointwise product-rule bounds for the convective term.
/// They hold as literal inequalities on any grid because both sides are
/// evaluated from the same sampled fields and the same pair set.
ProductRuleResult product_rule_check(const VectorField& v, double alpha,
                                     const PairScan& scan = {});

/// C_nl = |(v.grad)v|^(alpha) / ((|v|^(2+alpha))^{a1} (||v||_6)^{a2});
/// scale invariant since both sides are homogeneous of degree 2.
double nonlinear_holder_estimate(const VectorField& v, double alpha, const PairScan& scan = {});

/// (|v|^(2+alpha) + |grad p|^(alpha)) / |g|^(alpha) for a state solving the
/// linear problem with RHS g. Zero state with zero g gives 0.
double schauder_ratio(const FlowState& state, const VectorField& g, double alpha,
                      const PairScan& scan = {});

struct ForcingSpec {
    enum class Kind { trig, bump, manufactured } kind = Kind::trig;
    double nu = 1.0;  // used by the manufactured pattern

    static ForcingSpec parse(const std::string& kind, double nu);
    VectorField build(const Grid& grid, double amplitude) const;
};

struct EstimateRow {
    double amplitude = 0.0;
    double f_alpha = 0.0;
    double v_2a = 0.0;
    double gradp_a = 0.0;
    double v_w12 = 0.0;
    double v_l6 = 0.0;
    double nlterm_a = 0.0;
    double g_alpha = 0.0;
    double B = 0.0;
    double Q = 0.0;       // v_2a / (f_alpha + v_w12^B)
    double C_nl = 0.0;
    double C_schauder = 0.0;
    bool converged = false;
};

/// One Navier-Stokes solve per amplitude with the full estimate bookkeeping.
/// A diverging amplitude yields a flagged, unconverged row instead of a throw.
std::vector<EstimateRow> theorem_sweep(std::span<const double> amplitudes,
                                       const ForcingSpec& forcing, double nu, double alpha,
                                       const Grid& grid, const SolverConfig& cfg = {},
                                       const PairScan& scan = {});

/// The intermediate bound |g|^a <= eps |v|^(2+a) + |f|^a + C(eps) (||v||_6)^B
/// with C(eps) = C_min(eps) * C_nl^{B/a2} from the fitted Young constant.
/// Returns the slack rhs - lhs (nonnegative when the bound holds).
double absorption_check(const EstimateRow& row, double eps, const ExponentSet& exps);

void write_estimate_csv(std::ostream& out, std::span<const EstimateRow> rows,
                        bool with_timestamp);
void write_trace_csv(std::ostream& out, std::span<const PicardTraceRow> rows,
                     bool with_timestamp);

} // namespace nsest
