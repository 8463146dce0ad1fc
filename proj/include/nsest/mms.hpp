#pragma once

#include <span>
#include <vector>

#include "nsest/navier_stokes.hpp"

namespace nsest {

/// Closed-form reference solution for convergence studies:
///   psi  = [x(1-x) y(1-y) z(1-z)]^2,  v* = amplitude * curl(0,0,psi),
///   p*   = amplitude * sin(pi x) cos(pi y)   (already mean-zero on the cube).
/// v* and its first derivatives vanish on the boundary; div v* = 0 exactly.
struct ManufacturedSolution {
    double amplitude = 50.0;

    double velocity(int comp, double x, double y, double z) const;
    double velocity_laplacian(int comp, double x, double y, double z) const;
    double advection(int comp, double x, double y, double z) const;  // (v*.grad)v*
    double pressure(double x, double y) const;
    double pressure_gradient(int comp, double x, double y) const;

    /// g = -nu Lap v* + grad p*
    double forcing_stokes(int comp, double nu, double x, double y, double z) const;
    /// g = -nu Lap v* + (v*.grad)v* + grad p*
    double forcing_navier_stokes(int comp, double nu, double x, double y, double z) const;

    VectorField forcing_stokes_field(const Grid& grid, double nu) const;
    VectorField forcing_navier_stokes_field(const Grid& grid, double nu) const;

    /// sqrt(sum over faces of (v - v*)^2 h^3) against face-center samples.
    double velocity_error_l2(const FlowState& state) const;
    /// L2 cell error of mean-zero pressure.
    double pressure_error_l2(const FlowState& state) const;
};

struct MmsLevel {
    int n = 0;
    double err_stokes = 0.0;
    double err_ns = 0.0;
    double p_err_stokes = 0.0;
    double p_err_ns = 0.0;
    double div_stokes = 0.0;
    double div_ns = 0.0;
    int picard_iterations = 0;
};

struct MmsStudy {
    std::vector<MmsLevel> levels;
    std::vector<double> orders_stokes;  // log2 ratios between consecutive levels
    std::vector<double> orders_ns;
    bool ran_stokes = false;
    bool ran_ns = false;
};

MmsStudy run_mms_study(std::span<const int> levels, double nu, const SolverConfig& cfg,
                       bool do_stokes, bool do_ns, double amplitude = 50.0);

} // namespace nsest
