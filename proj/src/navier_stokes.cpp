#include "nsest/navier_stokes.hpp"

#include <cmath>

#include "nsest/norms.hpp"

namespace nsest {

VectorField advect(const VectorField& v) {
    const Grid& g = v.grid();
    std::array<ScalarField, 3> grads_of[3] = {
        {derivative(v[0], {1, 0, 0}), derivative(v[0], {0, 1, 0}), derivative(v[0], {0, 0, 1})},
        {derivative(v[1], {1, 0, 0}), derivative(v[1], {0, 1, 0}), derivative(v[1], {0, 0, 1})},
        {derivative(v[2], {1, 0, 0}), derivative(v[2], {0, 1, 0}), derivative(v[2], {0, 0, 1})}};
    std::array<std::vector<double>, 3> out;
    for (auto& o : out) o.assign(g.node_count(), 0.0);
    for (int c = 0; c < 3; ++c)
        for (std::size_t t = 0; t < g.node_count(); ++t)
            out[static_cast<std::size_t>(c)][t] = v[0][t] * grads_of[c][0][t] +
                                                  v[1][t] * grads_of[c][1][t] +
                                                  v[2][t] * grads_of[c][2][t];
    return VectorField(ScalarField(g, std::move(out[0])), ScalarField(g, std::move(out[1])),
                       ScalarField(g, std::move(out[2])));
}

namespace {

double nodal_sup(const VectorField& f) {
    double best = 0.0;
    for (int c = 0; c < 3; ++c)
        for (double x : f[c].values()) best = std::max(best, std::abs(x));
    return best;
}

/// nu*(-Lap)v + N(v) + Gp - f on interior faces.
double ns_momentum_residual(const FlowState& state, double nu,
                            const StaggeredVelocity& f_faces) {
    const Grid& g = state.grid();
    StaggeredVelocity res(g);
    neg_laplacian_component(0, g, state.velocity.u, res.u);
    neg_laplacian_component(1, g, state.velocity.v, res.v);
    neg_laplacian_component(2, g, state.velocity.w, res.w);
    res.scale(nu);
    res.axpy(1.0, convect(state.velocity));
    res.axpy(1.0, gradient_to_faces(state.pressure));
    res.axpy(-1.0, f_faces);
    const int M = g.cells();
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j) {
            res.u.at(0, j, k) = 0.0;
            res.u.at(M, j, k) = 0.0;
        }
    for (int k = 0; k < M; ++k)
        for (int i = 0; i < M; ++i) {
            res.v.at(i, 0, k) = 0.0;
            res.v.at(i, M, k) = 0.0;
        }
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) {
            res.w.at(i, j, 0) = 0.0;
            res.w.at(i, j, M) = 0.0;
        }
    return res.sup();
}

} // namespace

NsSolution solve_navier_stokes(const FluidProblem& prob, const SolverConfig& cfg) {
    cfg.validate();
    const Grid& grid = prob.grid();
    const StokesSolver stokes(grid, prob.nu, cfg);
    const StaggeredVelocity f_faces = faces_from_nodal(prob.forcing);
    const double sup_f = nodal_sup(prob.forcing);
    const double residual_bound = 10.0 * cfg.inner_tol * (1.0 + sup_f);
    const double theta = cfg.damping;

    NsSolution sol(grid);
    sol.state.nu = prob.nu;
    for (int iter = 1; iter <= cfg.max_picard; ++iter) {
        StaggeredVelocity g = f_faces;
        g.axpy(-1.0, convect(sol.state.velocity));
        const FlowState lin = stokes.solve(g, iter > 1 ? &sol.state.pressure : nullptr);

        StaggeredVelocity update = lin.velocity;
        update.axpy(-1.0, sol.state.velocity);
        update.scale(theta);
        sol.state.velocity.axpy(1.0, update);
        sol.state.pressure.a.scale(1.0 - theta);
        sol.state.pressure.a.axpy(theta, lin.pressure.a);
        sol.state.pressure.subtract_mean();

        const double update_sup = update.sup();
        const double resid = ns_momentum_residual(sol.state, prob.nu, f_faces);
        const double div_max = divergence(sol.state.velocity).a.sup();
        sol.trace.push_back(PicardTraceRow{iter, update_sup, resid, div_max});
        sol.iterations = iter;

        if (!(update_sup < 1e6))
            throw NonlinearDivergenceError(
                "solve_navier_stokes: Picard update blew up; reduce the forcing amplitude "
                "or increase nu",
                update_sup, iter);
        if (update_sup < cfg.tol && resid <= residual_bound) {
            sol.state.momentum_residual = resid;
            sol.state.divergence_max = div_max;
            return sol;
        }
    }
    throw NonlinearDivergenceError(
        "solve_navier_stokes: no convergence within max_picard iterations; reduce the "
        "forcing amplitude or increase nu",
        sol.trace.empty() ? 0.0 : sol.trace.back().update_sup, cfg.max_picard);
}

double weak_residual(const FlowState& state, const VectorField& f, const StaggeredVelocity& eta,
                     double div_tol) {
    const Grid& g = state.grid();
    if (eta.grid != g) throw PreconditionError("weak_residual: eta grid mismatch");
    if (eta.boundary_sup() != 0.0)
        throw PreconditionError("weak_residual: eta must vanish on boundary faces");
    if (divergence(eta).a.sup() > div_tol)
        throw PreconditionError("weak_residual: eta is not discretely solenoidal");

    if (!(state.nu > 0.0))
        throw PreconditionError("weak_residual: state carries no viscosity (not from a solve?)");

    const double h3 = std::pow(g.h(), 3);
    StaggeredVelocity lap(g);
    neg_laplacian_component(0, g, state.velocity.u, lap.u);
    neg_laplacian_component(1, g, state.velocity.v, lap.v);
    neg_laplacian_component(2, g, state.velocity.w, lap.w);
    // <(-Lap)v, eta> equals the discrete grad-grad pairing by summation by parts;
    // eta vanishes on boundary faces, so boundary values of the face-interpolated
    // f and of N(v) never enter the sums
    const double viscous = state.nu * dot(lap, eta) * h3;
    const double convective = dot(convect(state.velocity), eta) * h3;
    const double load = dot(faces_from_nodal(f), eta) * h3;
    return std::abs(viscous + convective - load);
}

EnergyRatios energy_check(const FlowState& state, const VectorField& f) {
    const VectorField v = state.velocity_nodal();
    const double f2 = lq_norm(f, 2.0);
    const double w12 = sobolev_norm(v, 1, 2.0);
    const double l6 = lq_norm(v, 6.0);
    EnergyRatios r{};
    r.w12_over_f = f2 == 0.0 ? 0.0 : w12 / f2;
    r.l6_over_w12 = w12 == 0.0 ? 0.0 : l6 / w12;
    return r;
}

} // namespace nsest
