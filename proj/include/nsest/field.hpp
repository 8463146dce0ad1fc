#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "nsest/errors.hpp"
#include "nsest/grid.hpp"

namespace nsest {

/// Real-valued function sampled at the nodes of a Grid.
///
/// Immutable after construction; every operation on fields returns a new one.
class ScalarField {
public:
    ScalarField(Grid grid, std::vector<double> values)
        : grid_(grid), values_(std::move(values)) {
        if (values_.size() != grid_.node_count())
            throw InvalidFieldError("ScalarField: value count " +
                                    std::to_string(values_.size()) +
                                    " does not match grid node count " +
                                    std::to_string(grid_.node_count()));
        for (double v : values_)
            if (!std::isfinite(v))
                throw InvalidFieldError("ScalarField: non-finite value");
    }

    static ScalarField zeros(Grid grid) {
        return ScalarField(grid, std::vector<double>(grid.node_count(), 0.0));
    }

    static ScalarField constant(Grid grid, double c) {
        return ScalarField(grid, std::vector<double>(grid.node_count(), c));
    }

    /// Sample f(x,y,z) at every node.
    template <class F>
    static ScalarField sample(Grid grid, F&& f) {
        std::vector<double> v(grid.node_count());
        const int n = grid.n();
        std::size_t idx = 0;
        for (int k = 0; k < n; ++k) {
            const double z = grid.coord(k);
            for (int j = 0; j < n; ++j) {
                const double y = grid.coord(j);
                for (int i = 0; i < n; ++i, ++idx)
                    v[idx] = f(grid.coord(i), y, z);
            }
        }
        return ScalarField(grid, std::move(v));
    }

    const Grid& grid() const { return grid_; }
    std::span<const double> values() const { return values_; }
    double operator[](std::size_t idx) const { return values_[idx]; }
    double at(int i, int j, int k) const { return values_[grid_.index(i, j, k)]; }
    std::size_t size() const { return values_.size(); }

    ScalarField scaled(double lambda) const {
        std::vector<double> v(values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = lambda * values_[i];
        return ScalarField(grid_, std::move(v));
    }

    ScalarField plus(const ScalarField& other) const {
        require_same_grid(other);
        std::vector<double> v(values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] + other.values_[i];
        return ScalarField(grid_, std::move(v));
    }

    ScalarField minus(const ScalarField& other) const {
        require_same_grid(other);
        std::vector<double> v(values_.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = values_[i] - other.values_[i];
        return ScalarField(grid_, std::move(v));
    }

    bool is_zero() const {
        for (double v : values_)
            if (v != 0.0) return false;
        return true;
    }

    void require_same_grid(const ScalarField& other) const {
        if (grid_ != other.grid_)
            throw InvalidFieldError("ScalarField: grids differ");
    }

private:
    Grid grid_;
    std::vector<double> values_;
};

/// Three scalar components sharing one Grid.
class VectorField {
public:
    VectorField(ScalarField c1, ScalarField c2, ScalarField c3)
        : comps_{std::move(c1), std::move(c2), std::move(c3)} {
        if (comps_[0].grid() != comps_[1].grid() || comps_[0].grid() != comps_[2].grid())
            throw InvalidFieldError("VectorField: components on different grids");
    }

    static VectorField zeros(Grid grid) {
        return VectorField(ScalarField::zeros(grid), ScalarField::zeros(grid),
                           ScalarField::zeros(grid));
    }

    /// Sample (f1,f2,f3)(x,y,z) componentwise.
    template <class F1, class F2, class F3>
    static VectorField sample(Grid grid, F1&& f1, F2&& f2, F3&& f3) {
        return VectorField(ScalarField::sample(grid, std::forward<F1>(f1)),
                           ScalarField::sample(grid, std::forward<F2>(f2)),
                           ScalarField::sample(grid, std::forward<F3>(f3)));
    }

    const Grid& grid() const { return comps_[0].grid(); }
    const ScalarField& component(int c) const { return comps_[static_cast<std::size_t>(c)]; }
    const ScalarField& operator[](int c) const { return component(c); }

    VectorField scaled(double lambda) const {
        return VectorField(comps_[0].scaled(lambda), comps_[1].scaled(lambda),
                           comps_[2].scaled(lambda));
    }

    VectorField plus(const VectorField& other) const {
        return VectorField(comps_[0].plus(other.comps_[0]), comps_[1].plus(other.comps_[1]),
                           comps_[2].plus(other.comps_[2]));
    }

    VectorField minus(const VectorField& other) const {
        return VectorField(comps_[0].minus(other.comps_[0]), comps_[1].minus(other.comps_[1]),
                           comps_[2].minus(other.comps_[2]));
    }

    bool is_zero() const {
        return comps_[0].is_zero() && comps_[1].is_zero() && comps_[2].is_zero();
    }

private:
    std::array<ScalarField, 3> comps_;
};

} // namespace nsest
