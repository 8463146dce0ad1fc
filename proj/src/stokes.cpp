#include "nsest/stokes.hpp"

#include <cmath>

namespace nsest {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// Eigenvectors of the 1D second-difference operator on M cells of width h.
// "normal": unknowns at interior face planes i=1..M-1, zero Dirichlet ends,
//           basis sin(pi a i / M).
// "tangential": unknowns at cell centers (j+1/2)h with reflection ghosts,
//           basis sin(pi b (j+1/2) / M).
// Both share eigenvalues (2 - 2 cos(pi m / M)) / h^2.
void build_normal_basis(int M, double h, std::vector<double>& fwd, std::vector<double>& inv,
                        std::vector<double>& eig) {
    const int K = M - 1;
    fwd.assign(static_cast<std::size_t>(K) * K, 0.0);
    inv.assign(static_cast<std::size_t>(K) * K, 0.0);
    eig.assign(static_cast<std::size_t>(K), 0.0);
    for (int a = 0; a < K; ++a) {
        eig[static_cast<std::size_t>(a)] =
            (2.0 - 2.0 * std::cos(kPi * (a + 1) / M)) / (h * h);
        for (int i = 0; i < K; ++i) {
            const double s = std::sin(kPi * (a + 1) * (i + 1) / M);
            fwd[static_cast<std::size_t>(a) * K + i] = 2.0 / M * s;
            inv[static_cast<std::size_t>(i) * K + a] = s;
        }
    }
}

void build_tangential_basis(int M, double h, std::vector<double>& fwd, std::vector<double>& inv,
                            std::vector<double>& eig) {
    const int K = M;
    fwd.assign(static_cast<std::size_t>(K) * K, 0.0);
    inv.assign(static_cast<std::size_t>(K) * K, 0.0);
    eig.assign(static_cast<std::size_t>(K), 0.0);
    for (int b = 0; b < K; ++b) {
        eig[static_cast<std::size_t>(b)] =
            (2.0 - 2.0 * std::cos(kPi * (b + 1) / M)) / (h * h);
        const double norm = (b + 1 == M ? 1.0 : 2.0) / M;
        for (int j = 0; j < K; ++j) {
            const double s = std::sin(kPi * (b + 1) * (j + 0.5) / M);
            fwd[static_cast<std::size_t>(b) * K + j] = norm * s;
            inv[static_cast<std::size_t>(j) * K + b] = s;
        }
    }
}

// y <- mat * x along one axis of a dense block, mat is K x K row-major.
void apply_along_axis(std::vector<double>& data, const std::array<int, 3>& dims, int axis,
                      const std::vector<double>& mat) {
    const int K = dims[static_cast<std::size_t>(axis)];
    const std::array<std::size_t, 3> strides = {
        1, static_cast<std::size_t>(dims[0]),
        static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1])};
    const std::size_t s = strides[static_cast<std::size_t>(axis)];
    const int o1 = axis == 0 ? 1 : 0;
    const int o2 = axis == 2 ? 1 : 2;
    std::vector<double> line(static_cast<std::size_t>(K));
    std::vector<double> out(static_cast<std::size_t>(K));
    for (int c2 = 0; c2 < dims[static_cast<std::size_t>(o2)]; ++c2)
        for (int c1 = 0; c1 < dims[static_cast<std::size_t>(o1)]; ++c1) {
            const std::size_t base = strides[static_cast<std::size_t>(o1)] * c1 +
                                     strides[static_cast<std::size_t>(o2)] * c2;
            for (int t = 0; t < K; ++t) line[static_cast<std::size_t>(t)] = data[base + s * t];
            for (int r = 0; r < K; ++r) {
                double acc = 0.0;
                const double* row = mat.data() + static_cast<std::size_t>(r) * K;
                for (int t = 0; t < K; ++t) acc += row[t] * line[static_cast<std::size_t>(t)];
                out[static_cast<std::size_t>(r)] = acc;
            }
            for (int r = 0; r < K; ++r) data[base + s * r] = out[static_cast<std::size_t>(r)];
        }
}

} // namespace

ComponentSolver::ComponentSolver(Grid grid, int axis, InnerSolver method)
    : grid_(grid), axis_(axis), method_(method) {
    const int M = grid.cells();
    build_normal_basis(M, grid.h(), fwd_normal_, inv_normal_, eig_normal_);
    build_tangential_basis(M, grid.h(), fwd_tang_, inv_tang_, eig_tang_);
}

void ComponentSolver::solve(const MacArray& b, double nu, MacArray& x, double cg_abs_tol) const {
    const int M = grid_.cells();
    x = MacArray(b.nx, b.ny, b.nz);

    if (method_ == InnerSolver::fst) {
        // interior block dims: M-1 along the normal axis, M along the others
        std::array<int, 3> dims{M, M, M};
        dims[static_cast<std::size_t>(axis_)] = M - 1;
        std::vector<double> block(static_cast<std::size_t>(dims[0]) * dims[1] * dims[2]);
        const int off_i = axis_ == 0 ? 1 : 0;
        const int off_j = axis_ == 1 ? 1 : 0;
        const int off_k = axis_ == 2 ? 1 : 0;
        {
            std::size_t t = 0;
            for (int k = 0; k < dims[2]; ++k)
                for (int j = 0; j < dims[1]; ++j)
                    for (int i = 0; i < dims[0]; ++i, ++t)
                        block[t] = b.at(i + off_i, j + off_j, k + off_k);
        }
        for (int ax = 0; ax < 3; ++ax)
            apply_along_axis(block, dims, ax, ax == axis_ ? fwd_normal_ : fwd_tang_);
        {
            std::size_t t = 0;
            for (int k = 0; k < dims[2]; ++k) {
                const double lk = (axis_ == 2 ? eig_normal_ : eig_tang_)[static_cast<std::size_t>(k)];
                for (int j = 0; j < dims[1]; ++j) {
                    const double lj =
                        (axis_ == 1 ? eig_normal_ : eig_tang_)[static_cast<std::size_t>(j)];
                    for (int i = 0; i < dims[0]; ++i, ++t) {
                        const double li =
                            (axis_ == 0 ? eig_normal_ : eig_tang_)[static_cast<std::size_t>(i)];
                        block[t] /= nu * (li + lj + lk);
                    }
                }
            }
        }
        for (int ax = 0; ax < 3; ++ax)
            apply_along_axis(block, dims, ax, ax == axis_ ? inv_normal_ : inv_tang_);
        {
            std::size_t t = 0;
            for (int k = 0; k < dims[2]; ++k)
                for (int j = 0; j < dims[1]; ++j)
                    for (int i = 0; i < dims[0]; ++i, ++t)
                        x.at(i + off_i, j + off_j, k + off_k) = block[t];
        }
        return;
    }

    // conjugate gradients on nu * (-Laplacian); arrays keep boundary faces zero
    MacArray r = b;
    MacArray Ap(b.nx, b.ny, b.nz);
    // r = b - A x with x = 0
    MacArray p = r;
    double rr = dot(r, r);
    const int max_iters = 20000;
    for (int it = 0; it < max_iters; ++it) {
        if (r.sup() <= cg_abs_tol) return;
        neg_laplacian_component(axis_, grid_, p, Ap);
        Ap.scale(nu);
        const double pAp = dot(p, Ap);
        if (pAp <= 0.0)
            throw LinearSolverStallError("ComponentSolver: CG lost positive definiteness",
                                         r.sup());
        const double alpha = rr / pAp;
        x.axpy(alpha, p);
        r.axpy(-alpha, Ap);
        const double rr_new = dot(r, r);
        const double beta = rr_new / rr;
        rr = rr_new;
        p.scale(beta);
        p.axpy(1.0, r);
    }
    throw LinearSolverStallError("ComponentSolver: CG did not reach tolerance", r.sup());
}

StokesSolver::StokesSolver(Grid grid, double nu, SolverConfig cfg)
    : grid_(grid), nu_(nu), cfg_(cfg),
      cu_(grid, 0, cfg.inner), cv_(grid, 1, cfg.inner), cw_(grid, 2, cfg.inner) {
    if (!(nu > 0.0)) throw DomainError("StokesSolver: nu must be positive");
    cfg_.validate();
}

void StokesSolver::velocity_solve(const StaggeredVelocity& rhs, StaggeredVelocity& out,
                                  double cg_abs_tol) const {
    cu_.solve(rhs.u, nu_, out.u, cg_abs_tol);
    cv_.solve(rhs.v, nu_, out.v, cg_abs_tol);
    cw_.solve(rhs.w, nu_, out.w, cg_abs_tol);
}

FlowState StokesSolver::solve(const StaggeredVelocity& g_faces,
                              const CellField* pressure_warm_start) const {
    FlowState state(grid_);
    state.nu = nu_;
    const double sup_g = g_faces.sup();
    if (sup_g == 0.0 && pressure_warm_start == nullptr) return state;  // zero data, zero state

    const double cg_abs_tol = 0.05 * cfg_.inner_tol * (1.0 + sup_g);
    const double div_target =
        std::max(1e-12 * (1.0 + sup_g / nu_), 1e-3 * cfg_.div_tol);

    // Schur complement S = D A^{-1} G acting on mean-zero cell fields;
    // the CG residual equals the divergence of the velocity matching p.
    auto apply_schur = [&](const CellField& q, StaggeredVelocity& scratch) {
        const StaggeredVelocity gq = gradient_to_faces(q);
        velocity_solve(gq, scratch, cg_abs_tol);
        return divergence(scratch);
    };

    StaggeredVelocity u_free(grid_);
    velocity_solve(g_faces, u_free, cg_abs_tol);
    CellField rhs = divergence(u_free);
    rhs.subtract_mean();

    CellField p(grid_);
    if (pressure_warm_start != nullptr) p = *pressure_warm_start;

    StaggeredVelocity scratch(grid_);
    CellField r = rhs;
    if (pressure_warm_start != nullptr) {
        const CellField Sp = apply_schur(p, scratch);
        for (std::size_t t = 0; t < r.a.a.size(); ++t) r.a.a[t] -= Sp.a.a[t];
        r.subtract_mean();
    }

    for (int round = 0; round < 3; ++round) {
        CellField d = r;
        double rr = dot(r.a, r.a);
        for (int it = 0; it < cfg_.max_schur_iters && r.a.sup() > div_target; ++it) {
            const CellField Sd = apply_schur(d, scratch);
            const double dSd = dot(d.a, Sd.a);
            if (dSd <= 0.0) break;
            const double alpha = rr / dSd;
            p.a.axpy(alpha, d.a);
            r.a.axpy(-alpha, Sd.a);
            r.subtract_mean();
            const double rr_new = dot(r.a, r.a);
            const double beta = rr_new / rr;
            rr = rr_new;
            d.a.scale(beta);
            d.a.axpy(1.0, r.a);
        }
        // certify with the true divergence of the matching velocity
        StaggeredVelocity rhs_mom = g_faces;
        const StaggeredVelocity gp = gradient_to_faces(p);
        rhs_mom.axpy(-1.0, gp);
        velocity_solve(rhs_mom, state.velocity, cg_abs_tol);
        r = divergence(state.velocity);
        r.subtract_mean();
        if (r.a.sup() <= std::max(div_target, 0.5 * cfg_.div_tol)) break;
    }

    p.subtract_mean();
    state.pressure = p;
    state.divergence_max = divergence(state.velocity).a.sup();
    if (state.divergence_max > cfg_.div_tol)
        throw LinearSolverStallError("StokesSolver: divergence target not met",
                                     state.divergence_max);

    // momentum residual at interior faces: nu*(-Lap)v + Gp - g
    StaggeredVelocity res(grid_);
    neg_laplacian_component(0, grid_, state.velocity.u, res.u);
    neg_laplacian_component(1, grid_, state.velocity.v, res.v);
    neg_laplacian_component(2, grid_, state.velocity.w, res.w);
    res.scale(nu_);
    res.axpy(1.0, gradient_to_faces(state.pressure));
    res.axpy(-1.0, g_faces);
    // zero out boundary-face entries of g that the operator does not see
    const int M = grid_.cells();
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
    state.momentum_residual = res.sup();
    if (state.momentum_residual > cfg_.inner_tol * (1.0 + sup_g))
        throw LinearSolverStallError("StokesSolver: momentum residual target not met",
                                     state.momentum_residual);
    return state;
}

FlowState solve_stokes(const VectorField& g, double nu, const Grid& grid,
                       const SolverConfig& cfg) {
    StokesSolver solver(grid, nu, cfg);
    return solver.solve(faces_from_nodal(g));
}

} // namespace nsest
