#pragma once

#include <cstddef>
#include <cstdint>

#include "nsest/errors.hpp"

namespace nsest {

/// Uniform node lattice on the closed unit cube [0,1]^3.
///
/// Nodes sit at (i*h, j*h, k*h) with h = 1/(n-1). Refining n -> 2n-1 halves h
/// and keeps every existing node in place, so coarse-grid quantities can be
/// compared against fine-grid ones point by point.
class Grid {
public:
    explicit Grid(int n_per_axis) : n_(n_per_axis) {
        if (n_ < 5)
            throw DomainError("Grid: need at least 5 nodes per axis, got " +
                              std::to_string(n_));
    }

    int n() const { return n_; }
    int cells() const { return n_ - 1; }
    double h() const { return 1.0 / static_cast<double>(n_ - 1); }
    std::size_t node_count() const {
        auto n = static_cast<std::size_t>(n_);
        return n * n * n;
    }

    /// Row-major with x fastest.
    std::size_t index(int i, int j, int k) const {
        auto n = static_cast<std::size_t>(n_);
        return static_cast<std::size_t>(i) +
               n * (static_cast<std::size_t>(j) + n * static_cast<std::size_t>(k));
    }

    double coord(int i) const { return static_cast<double>(i) * h(); }

    Grid refined() const { return Grid(2 * n_ - 1); }

    bool operator==(const Grid& other) const { return n_ == other.n_; }
    bool operator!=(const Grid& other) const { return n_ != other.n_; }

private:
    int n_;
};

/// Multi-index for partial derivatives, |beta| <= 2 supported.
struct MultiIndex {
    int b1 = 0;
    int b2 = 0;
    int b3 = 0;

    int order() const { return b1 + b2 + b3; }

    int component(int axis) const { return axis == 0 ? b1 : (axis == 1 ? b2 : b3); }

    void validate() const {
        if (b1 < 0 || b2 < 0 || b3 < 0)
            throw DomainError("MultiIndex: negative entry");
        if (order() > 2)
            throw UnsupportedOrderError("MultiIndex: |beta| = " +
                                        std::to_string(order()) +
                                        " exceeds supported order 2");
    }
};

} // namespace nsest
