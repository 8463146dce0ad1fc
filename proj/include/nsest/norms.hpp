#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nsest/field.hpp"
#include "nsest/grid.hpp"

namespace nsest {

/// How Hölder seminorm pair scans are carried out.
///
/// With node_count^2 <= budget all node pairs are evaluated. Above that the
/// scan takes every axis-aligned pair (both nodes on one grid line) that fits
/// the budget, then fills the remainder with a seeded uniform sample of
/// general pairs. The result is a lower bound of the continuum seminorm.
struct PairScan {
    std::uint64_t budget = 4'000'000;
    std::uint64_t seed = 1234567;
};

/// max over nodes of |u|.
double sup_norm(const ScalarField& u);

/// Discrete alpha-Hölder seminorm: max over the evaluated pair set of
/// |u(x)-u(y)| / |x-y|^alpha.
double holder_seminorm(const ScalarField& u, double alpha, const PairScan& scan = {});

/// Finite-difference partial derivative D^beta u, second order everywhere
/// (central stencils inside, one-sided at the faces). Mixed derivatives are
/// composed in fixed axis order x1, x2, x3.
ScalarField derivative(const ScalarField& u, const MultiIndex& beta);

/// Composite trapezoidal L_q norm, q > 1.
double lq_norm(const ScalarField& u, double q);
/// Vector convention: sum of component norms.
double lq_norm(const VectorField& u, double q);

/// W^m_q norm: sum of L_q norms of all derivatives of order <= m.
double sobolev_norm(const ScalarField& u, int m, double q);
double sobolev_norm(const VectorField& u, int m, double q);

/// Everything c_norm computes, kept per derivative order so callers can
/// reassemble any of the intermediate quantities.
struct NormReport {
    int m = 0;
    double alpha = 0.0;
    std::array<double, 3> sup_by_order{};     // sum of sup norms over |beta| = k
    std::array<double, 3> holder_by_order{};  // sum of seminorms over |beta| = k
    double c_norm = 0.0;                      // sum_{k<=m} sup + top-order seminorms
    std::optional<double> lq;                 // filled when a q was requested
    std::optional<double> sobolev;
    std::uint64_t seed = 0;
    std::uint64_t pair_budget = 0;
    bool exhaustive_pairs = false;
};

/// C^{m+alpha} norm report; optionally also fills L_q and W^m_q entries.
NormReport c_norm(const ScalarField& u, int m, double alpha, const PairScan& scan = {},
                  std::optional<double> q = std::nullopt);

/// All multi-indices of the given order (3 axes).
std::vector<MultiIndex> multi_indices_of_order(int order);

/// Derivative fields of u up to order 2 with cached sup norms and seminorms,
/// so the interpolation machinery can ask for |u|^(l) at several l without
/// rescanning. |u|^(l) follows the usual reading: integer l is the sum of sup
/// norms of orders <= l, fractional l = m+sigma adds the order-m seminorms
/// with exponent sigma.
class NormBundle {
public:
    NormBundle(const ScalarField& u, const PairScan& scan);

    const ScalarField& field(const MultiIndex& beta) const;
    double sup_of_order(int k) const;
    double holder_of_order(int k, double sigma) const;
    double integer_norm(int m) const;          // |u|^(m)
    double c_norm(int m, double sigma) const;  // |u|^(m+sigma)
    double norm_l(double l) const;             // dispatch on integer vs fractional l
    const PairScan& scan() const { return scan_; }

private:
    PairScan scan_;
    std::vector<ScalarField> fields_;   // [1, d1 x3, d2 x6] in multi-index order
    std::array<double, 10> sups_;
    mutable std::vector<std::pair<std::pair<int, double>, double>> holder_cache_;
};

} // namespace nsest
