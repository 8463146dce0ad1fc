#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "nsest/field.hpp"
#include "nsest/grid.hpp"

namespace nsest {

/// Plain 3D array for one staggered quantity (face, cell, or edge centered).
struct MacArray {
    int nx = 0, ny = 0, nz = 0;
    std::vector<double> a;

    MacArray() = default;
    MacArray(int nx_, int ny_, int nz_)
        : nx(nx_), ny(ny_), nz(nz_),
          a(static_cast<std::size_t>(nx_) * ny_ * nz_, 0.0) {}

    std::size_t idx(int i, int j, int k) const {
        return static_cast<std::size_t>(i) +
               static_cast<std::size_t>(nx) *
                   (static_cast<std::size_t>(j) + static_cast<std::size_t>(ny) * k);
    }
    double& at(int i, int j, int k) { return a[idx(i, j, k)]; }
    double at(int i, int j, int k) const { return a[idx(i, j, k)]; }
    std::size_t size() const { return a.size(); }

    double sup() const;
    void axpy(double alpha, const MacArray& x);  // this += alpha*x
    void scale(double alpha);
};

/// MAC staggered velocity on the unit cube: component c lives on faces normal
/// to axis c. Arrays include the boundary faces, which no-slip keeps at zero.
struct StaggeredVelocity {
    Grid grid;
    MacArray u, v, w;  // dims (M+1,M,M), (M,M+1,M), (M,M,M+1) with M = grid.cells()

    explicit StaggeredVelocity(Grid g)
        : grid(g),
          u(g.cells() + 1, g.cells(), g.cells()),
          v(g.cells(), g.cells() + 1, g.cells()),
          w(g.cells(), g.cells(), g.cells() + 1) {}

    MacArray& component(int c) { return c == 0 ? u : (c == 1 ? v : w); }
    const MacArray& component(int c) const { return c == 0 ? u : (c == 1 ? v : w); }

    double sup() const;
    void axpy(double alpha, const StaggeredVelocity& x);
    void scale(double alpha);
    /// max |value| over faces on the domain boundary (normal direction ends).
    double boundary_sup() const;
};

/// Cell-centered scalar (pressure), M^3 values.
struct CellField {
    Grid grid;
    MacArray a;

    explicit CellField(Grid g) : grid(g), a(g.cells(), g.cells(), g.cells()) {}

    double mean() const;
    void subtract_mean();
};

/// Discrete divergence, one value per cell.
CellField divergence(const StaggeredVelocity& vel);

/// Discrete pressure gradient on interior faces; boundary faces get zero.
StaggeredVelocity gradient_to_faces(const CellField& p);

/// -Laplacian of one velocity component on its interior faces. Tangential
/// walls use the reflection ghost (value negated across the wall) so the
/// operator stays symmetric positive definite; output is zero on boundary
/// faces.
void neg_laplacian_component(int axis, const Grid& grid, const MacArray& in, MacArray& out);

/// Conservative (divergence-form) convection N(v) on interior faces; with a
/// discretely divergence-free field the form is energy neutral up to the
/// divergence residual.
StaggeredVelocity convect(const StaggeredVelocity& vel);

/// Second-order interpolation of a nodal vector field onto faces.
StaggeredVelocity faces_from_nodal(const VectorField& f);

/// Second-order interpolation of face velocities back to nodes; no-slip makes
/// every boundary node exactly zero.
VectorField nodal_from_faces(const StaggeredVelocity& vel);

/// Cell-centered scalar to nodes: quadratic ghost extrapolation at the walls,
/// 8-cell averaging inside.
ScalarField nodal_from_cells(const CellField& p);

/// <x, y> over all stored entries.
double dot(const MacArray& x, const MacArray& y);
double dot(const StaggeredVelocity& x, const StaggeredVelocity& y);

/// Exactly solenoidal random test field: the discrete curl of smooth random
/// edge potentials that vanish on the boundary. Zero on all boundary faces.
StaggeredVelocity random_solenoidal_field(const Grid& grid, std::uint64_t seed);

} // namespace nsest
