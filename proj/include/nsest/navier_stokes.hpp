#pragma once

#include <vector>

#include "nsest/field.hpp"
#include "nsest/stokes.hpp"

namespace nsest {

struct FluidProblem {
    double nu;
    VectorField forcing;  // nodal

    FluidProblem(double nu_, VectorField forcing_) : nu(nu_), forcing(std::move(forcing_)) {
        if (!(nu > 0.0)) throw DomainError("FluidProblem: nu must be positive");
    }
    const Grid& grid() const { return forcing.grid(); }
};

/// Nodal advective form (v.grad)v using the norms module's stencils; this is
/// the operator the estimate chain measures.
VectorField advect(const VectorField& v);

struct PicardTraceRow {
    int iter;
    double update_sup;
    double residual_sup;
    double div_max;
};

struct NsSolution {
    FlowState state;
    std::vector<PicardTraceRow> trace;
    int iterations = 0;

    explicit NsSolution(Grid g) : state(g) {}
};

/// Picard iteration v^{k+1} = StokesSolve(f - N(v^k)) with damping; the
/// convective term is lagged wholesale onto the right-hand side.
NsSolution solve_navier_stokes(const FluidProblem& prob, const SolverConfig& cfg = {});

/// Discrete weak-form defect of the momentum balance against one solenoidal
/// test field on the staggered grid:
///   | nu <grad v, grad eta> + <N(v), eta> - <f, eta> | * h^3.
/// eta must be discretely divergence-free (<= div_tol) and zero on boundary
/// faces; the pressure term then drops out exactly.
double weak_residual(const FlowState& state, const VectorField& f, const StaggeredVelocity& eta,
                     double div_tol = 1e-8);

struct EnergyRatios {
    double w12_over_f;   // ||v||_{W^1_2} / ||f||_2
    double l6_over_w12;  // ||v||_6 / ||v||_{W^1_2}
};

/// Empirical stand-ins for the energy bound and the L6 embedding constants.
EnergyRatios energy_check(const FlowState& state, const VectorField& f);

} // namespace nsest
