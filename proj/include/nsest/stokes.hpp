#pragma once

#include <memory>
#include <optional>
#include <string>

#include "nsest/field.hpp"
#include "nsest/grid.hpp"
#include "nsest/mac.hpp"

namespace nsest {

enum class InnerSolver { fst, cg };

struct SolverConfig {
    double tol = 1e-8;         // Picard sup-norm update tolerance
    double inner_tol = 1e-10;  // momentum residual scale for linear solves
    double div_tol = 1e-8;     // divergence cap for converged states
    double damping = 1.0;      // Picard damping theta in (0,1]
    int max_picard = 200;
    InnerSolver inner = InnerSolver::fst;
    int max_schur_iters = 600;

    void validate() const {
        if (!(tol > 0.0) || !(inner_tol > 0.0) || !(div_tol > 0.0))
            throw DomainError("SolverConfig: tolerances must be positive");
        if (!(damping > 0.0 && damping <= 1.0))
            throw DomainError("SolverConfig: damping must lie in (0,1]");
        if (max_picard < 1) throw DomainError("SolverConfig: max_picard must be >= 1");
    }
};

/// Velocity, pressure, and the residuals the solve certified.
struct FlowState {
    StaggeredVelocity velocity;
    CellField pressure;          // mean-zero
    double nu = 0.0;
    double momentum_residual = 0.0;
    double divergence_max = 0.0;

    explicit FlowState(Grid g) : velocity(g), pressure(g) {}

    const Grid& grid() const { return velocity.grid; }
    VectorField velocity_nodal() const { return nodal_from_faces(velocity); }
    ScalarField pressure_nodal() const { return nodal_from_cells(pressure); }
};

/// Direct or CG solver for one velocity component's Dirichlet problem
/// nu * (-Laplacian) x = b. The fst path diagonalizes the operator with sine
/// bases (plain in the face-normal axis, half-shifted in the tangential ones);
/// the cg path runs plain conjugate gradients on the same SPD stencil.
class ComponentSolver {
public:
    ComponentSolver(Grid grid, int axis, InnerSolver method);

    /// b and x are full face arrays; boundary faces stay zero.
    void solve(const MacArray& b, double nu, MacArray& x, double cg_abs_tol) const;

private:
    Grid grid_;
    int axis_;
    InnerSolver method_;
    // dense sine transforms per axis role
    std::vector<double> fwd_normal_, inv_normal_, eig_normal_;
    std::vector<double> fwd_tang_, inv_tang_, eig_tang_;
};

/// Stationary Stokes solve -nu Lap v + grad p = g, div v = 0, v = 0 on the
/// boundary. Uzawa-type conjugate-gradient iteration on the pressure Schur
/// complement with component solves inside.
class StokesSolver {
public:
    StokesSolver(Grid grid, double nu, SolverConfig cfg);

    FlowState solve(const StaggeredVelocity& g_faces,
                    const CellField* pressure_warm_start = nullptr) const;

    const SolverConfig& config() const { return cfg_; }
    double nu() const { return nu_; }

private:
    void velocity_solve(const StaggeredVelocity& rhs, StaggeredVelocity& out,
                        double cg_abs_tol) const;

    Grid grid_;
    double nu_;
    SolverConfig cfg_;
    ComponentSolver cu_, cv_, cw_;
};

/// Convenience wrapper: nodal RHS, fresh solver.
FlowState solve_stokes(const VectorField& g, double nu, const Grid& grid,
                       const SolverConfig& cfg = {});

} // namespace nsest
