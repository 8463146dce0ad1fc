#include "nsest/norms.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace nsest {

namespace {

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("alpha must lie in (0,1), got " + std::to_string(alpha));
}

/// d^alpha for d = sqrt(r2_int) * h, tabulated over integer squared offsets.
std::vector<double> distance_pow_table(int n, double h, double alpha) {
    const int max_r2 = 3 * (n - 1) * (n - 1);
    std::vector<double> tab(static_cast<std::size_t>(max_r2) + 1, 0.0);
    const double h_alpha = std::pow(h, alpha);
    for (int r2 = 1; r2 <= max_r2; ++r2)
        tab[static_cast<std::size_t>(r2)] = std::pow(static_cast<double>(r2), 0.5 * alpha) * h_alpha;
    return tab;
}

struct LineScan {
    // max over pairs (a,b) on one stride-s line of |v[a]-v[b]| / dpow[(b-a)^2]
    static double run(const double* v, int count, std::size_t stride,
                      const std::vector<double>& dpow) {
        double best = 0.0;
        for (int a = 0; a < count - 1; ++a) {
            const double va = v[static_cast<std::size_t>(a) * stride];
            for (int b = a + 1; b < count; ++b) {
                const double vb = v[static_cast<std::size_t>(b) * stride];
                const int d = b - a;
                const double quot = std::abs(va - vb) / dpow[static_cast<std::size_t>(d * d)];
                if (quot > best) best = quot;
            }
        }
        return best;
    }
};

// Lemire-style bounded draw; deterministic for a fixed engine stream.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(rng()) * static_cast<unsigned __int128>(n)) >> 64);
}

} // namespace

double sup_norm(const ScalarField& u) {
    double best = 0.0;
    for (double v : u.values()) {
        if (!std::isfinite(v))
            throw InvalidFieldError("sup_norm: non-finite value in field");
        best = std::max(best, std::abs(v));
    }
    return best;
}

double holder_seminorm(const ScalarField& u, double alpha, const PairScan& scan) {
    check_alpha(alpha);
    const Grid& g = u.grid();
    const int n = g.n();
    const auto N = static_cast<std::uint64_t>(g.node_count());
    const double* v = u.values().data();
    const auto dpow = distance_pow_table(n, g.h(), alpha);

    double best = 0.0;

    if (N * N <= scan.budget) {
        // exhaustive over all unordered node pairs
        std::vector<int> xs(N), ys(N), zs(N);
        {
            std::size_t idx = 0;
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i, ++idx) {
                        xs[idx] = i;
                        ys[idx] = j;
                        zs[idx] = k;
                    }
        }
        for (std::uint64_t a = 0; a + 1 < N; ++a) {
            const double va = v[a];
            for (std::uint64_t b = a + 1; b < N; ++b) {
                const int dx = xs[a] - xs[b], dy = ys[a] - ys[b], dz = zs[a] - zs[b];
                const int r2 = dx * dx + dy * dy + dz * dz;
                const double quot = std::abs(va - v[b]) / dpow[static_cast<std::size_t>(r2)];
                if (quot > best) best = quot;
            }
        }
        return best;
    }

    const auto nn = static_cast<std::uint64_t>(n);
    const std::uint64_t pairs_per_line = nn * (nn - 1) / 2;
    const std::uint64_t lines = 3 * nn * nn;
    std::uint64_t used = 0;

    // Axis-aligned pairs: all separations when they fit the budget, otherwise
    // separations up to the largest cap that does. The nearest-neighbor layer
    // always fits (precondition on the budget).
    int sep_cap = n - 1;
    if (lines * pairs_per_line > scan.budget) {
        // pairs with separation <= s on one line: s*(2n-1-s)/2 summed... count directly
        sep_cap = 1;
        for (int s = n - 1; s >= 1; --s) {
            std::uint64_t count = 0;
            for (int d = 1; d <= s; ++d) count += nn - static_cast<std::uint64_t>(d);
            if (lines * count <= scan.budget) {
                sep_cap = s;
                break;
            }
        }
    }
    {
        const auto stride_for_axis = [&](int axis) -> std::size_t {
            if (axis == 0) return 1;
            if (axis == 1) return static_cast<std::size_t>(n);
            return static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        };
        for (int axis = 0; axis < 3; ++axis) {
            const std::size_t stride = stride_for_axis(axis);
            for (int c2 = 0; c2 < n; ++c2) {
                for (int c1 = 0; c1 < n; ++c1) {
                    // base index of the line: axis coordinate runs free
                    std::size_t base;
                    if (axis == 0)
                        base = g.index(0, c1, c2);
                    else if (axis == 1)
                        base = g.index(c1, 0, c2);
                    else
                        base = g.index(c1, c2, 0);
                    const double* line = v + base;
                    if (sep_cap == n - 1) {
                        best = std::max(best, LineScan::run(line, n, stride, dpow));
                        used += pairs_per_line;
                    } else {
                        for (int a = 0; a < n - 1; ++a) {
                            const double va = line[static_cast<std::size_t>(a) * stride];
                            const int bmax = std::min(n - 1, a + sep_cap);
                            for (int b = a + 1; b <= bmax; ++b) {
                                const double vb = line[static_cast<std::size_t>(b) * stride];
                                const int d = b - a;
                                const double quot =
                                    std::abs(va - vb) / dpow[static_cast<std::size_t>(d * d)];
                                if (quot > best) best = quot;
                                ++used;
                            }
                        }
                    }
                }
            }
        }
    }

    // Seeded uniform fill with general pairs up to the budget.
    if (used < scan.budget) {
        std::mt19937_64 rng(scan.seed);
        std::vector<int> xs(N), ys(N), zs(N);
        {
            std::size_t idx = 0;
            for (int k = 0; k < n; ++k)
                for (int j = 0; j < n; ++j)
                    for (int i = 0; i < n; ++i, ++idx) {
                        xs[idx] = i;
                        ys[idx] = j;
                        zs[idx] = k;
                    }
        }
        for (std::uint64_t s = used; s < scan.budget; ++s) {
            const std::uint64_t a = bounded(rng, N);
            const std::uint64_t b = bounded(rng, N);
            if (a == b) continue;
            const int dx = xs[a] - xs[b], dy = ys[a] - ys[b], dz = zs[a] - zs[b];
            const int r2 = dx * dx + dy * dy + dz * dz;
            const double quot = std::abs(v[a] - v[b]) / dpow[static_cast<std::size_t>(r2)];
            if (quot > best) best = quot;
        }
    }
    return best;
}

namespace {

/// One-dimensional second-order differences along a strided line.
/// order 1: central inside, (-3,4,-1)/(2h) one-sided at the ends.
/// order 2: central inside, (2,-5,4,-1)/h^2 one-sided at the ends.
void diff_line(const double* in, double* out, int n, std::size_t stride, double h, int order) {
    auto v = [&](int i) { return in[static_cast<std::size_t>(i) * stride]; };
    auto set = [&](int i, double x) { out[static_cast<std::size_t>(i) * stride] = x; };
    if (order == 1) {
        const double inv2h = 1.0 / (2.0 * h);
        set(0, (-3.0 * v(0) + 4.0 * v(1) - v(2)) * inv2h);
        for (int i = 1; i < n - 1; ++i) set(i, (v(i + 1) - v(i - 1)) * inv2h);
        set(n - 1, (3.0 * v(n - 1) - 4.0 * v(n - 2) + v(n - 3)) * inv2h);
    } else {
        const double invh2 = 1.0 / (h * h);
        set(0, (2.0 * v(0) - 5.0 * v(1) + 4.0 * v(2) - v(3)) * invh2);
        for (int i = 1; i < n - 1; ++i) set(i, (v(i + 1) - 2.0 * v(i) + v(i - 1)) * invh2);
        set(n - 1, (2.0 * v(n - 1) - 5.0 * v(n - 2) + 4.0 * v(n - 3) - v(n - 4)) * invh2);
    }
}

std::vector<double> diff_axis(const Grid& g, const std::vector<double>& in, int axis, int order) {
    const int n = g.n();
    std::vector<double> out(in.size());
    const std::size_t stride = axis == 0 ? 1
                             : axis == 1 ? static_cast<std::size_t>(n)
                                         : static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    for (int c2 = 0; c2 < n; ++c2) {
        for (int c1 = 0; c1 < n; ++c1) {
            std::size_t base;
            if (axis == 0)
                base = g.index(0, c1, c2);
            else if (axis == 1)
                base = g.index(c1, 0, c2);
            else
                base = g.index(c1, c2, 0);
            diff_line(in.data() + base, out.data() + base, n, stride, g.h(), order);
        }
    }
    return out;
}

} // namespace

ScalarField derivative(const ScalarField& u, const MultiIndex& beta) {
    beta.validate();
    const Grid& g = u.grid();
    std::vector<double> work(u.values().begin(), u.values().end());
    for (int axis = 0; axis < 3; ++axis) {
        const int b = beta.component(axis);
        if (b == 0) continue;
        if (b == 2) {
            work = diff_axis(g, work, axis, 2);
        } else {
            work = diff_axis(g, work, axis, 1);
        }
    }
    return ScalarField(g, std::move(work));
}

double lq_norm(const ScalarField& u, double q) {
    if (!(q > 1.0))
        throw DomainError("lq_norm: q must exceed 1, got " + std::to_string(q));
    const Grid& g = u.grid();
    const int n = g.n();
    const double h = g.h();
    std::vector<double> w1d(static_cast<std::size_t>(n), h);
    w1d.front() = 0.5 * h;
    w1d.back() = 0.5 * h;
    double acc = 0.0;
    std::size_t idx = 0;
    const double* v = u.values().data();
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) {
            const double wjk = w1d[static_cast<std::size_t>(j)] * w1d[static_cast<std::size_t>(k)];
            for (int i = 0; i < n; ++i, ++idx)
                acc += wjk * w1d[static_cast<std::size_t>(i)] * std::pow(std::abs(v[idx]), q);
        }
    return std::pow(acc, 1.0 / q);
}

double lq_norm(const VectorField& u, double q) {
    return lq_norm(u[0], q) + lq_norm(u[1], q) + lq_norm(u[2], q);
}

std::vector<MultiIndex> multi_indices_of_order(int order) {
    std::vector<MultiIndex> out;
    for (int b1 = 0; b1 <= order; ++b1)
        for (int b2 = 0; b2 + b1 <= order; ++b2) {
            const int b3 = order - b1 - b2;
            out.push_back(MultiIndex{b1, b2, b3});
        }
    return out;
}

double sobolev_norm(const ScalarField& u, int m, double q) {
    if (m < 0 || m > 2)
        throw UnsupportedOrderError("sobolev_norm: m must be 0..2, got " + std::to_string(m));
    double acc = 0.0;
    for (int k = 0; k <= m; ++k)
        for (const MultiIndex& beta : multi_indices_of_order(k))
            acc += lq_norm(k == 0 ? u : derivative(u, beta), q);
    return acc;
}

double sobolev_norm(const VectorField& u, int m, double q) {
    return sobolev_norm(u[0], m, q) + sobolev_norm(u[1], m, q) + sobolev_norm(u[2], m, q);
}

NormReport c_norm(const ScalarField& u, int m, double alpha, const PairScan& scan,
                  std::optional<double> q) {
    if (m < 0 || m > 2)
        throw UnsupportedOrderError("c_norm: m must be 0..2, got " + std::to_string(m));
    check_alpha(alpha);
    NormReport rep;
    rep.m = m;
    rep.alpha = alpha;
    rep.seed = scan.seed;
    rep.pair_budget = scan.budget;
    const auto N = static_cast<std::uint64_t>(u.grid().node_count());
    rep.exhaustive_pairs = N * N <= scan.budget;
    for (int k = 0; k <= m; ++k) {
        for (const MultiIndex& beta : multi_indices_of_order(k)) {
            const ScalarField d = k == 0 ? u : derivative(u, beta);
            rep.sup_by_order[static_cast<std::size_t>(k)] += sup_norm(d);
            rep.holder_by_order[static_cast<std::size_t>(k)] += holder_seminorm(d, alpha, scan);
        }
    }
    rep.c_norm = rep.holder_by_order[static_cast<std::size_t>(m)];
    for (int k = 0; k <= m; ++k) rep.c_norm += rep.sup_by_order[static_cast<std::size_t>(k)];
    if (q) {
        rep.lq = lq_norm(u, *q);
        rep.sobolev = sobolev_norm(u, m, *q);
    }
    return rep;
}

NormBundle::NormBundle(const ScalarField& u, const PairScan& scan) : scan_(scan) {
    fields_.reserve(10);
    fields_.push_back(u);
    for (int k = 1; k <= 2; ++k)
        for (const MultiIndex& beta : multi_indices_of_order(k))
            fields_.push_back(derivative(u, beta));
    for (std::size_t i = 0; i < fields_.size(); ++i) sups_[i] = sup_norm(fields_[i]);
}

const ScalarField& NormBundle::field(const MultiIndex& beta) const {
    beta.validate();
    const int k = beta.order();
    std::size_t base = k == 0 ? 0 : (k == 1 ? 1 : 4);
    const auto group = multi_indices_of_order(k);
    for (std::size_t i = 0; i < group.size(); ++i)
        if (group[i].b1 == beta.b1 && group[i].b2 == beta.b2 && group[i].b3 == beta.b3)
            return fields_[base + i];
    throw DomainError("NormBundle: bad multi-index");
}

double NormBundle::sup_of_order(int k) const {
    const std::size_t base = k == 0 ? 0 : (k == 1 ? 1 : 4);
    const std::size_t count = k == 0 ? 1 : (k == 1 ? 3 : 6);
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i) acc += sups_[base + i];
    return acc;
}

double NormBundle::holder_of_order(int k, double sigma) const {
    for (const auto& e : holder_cache_)
        if (e.first.first == k && e.first.second == sigma) return e.second;
    const std::size_t base = k == 0 ? 0 : (k == 1 ? 1 : 4);
    const std::size_t count = k == 0 ? 1 : (k == 1 ? 3 : 6);
    double acc = 0.0;
    for (std::size_t i = 0; i < count; ++i)
        acc += holder_seminorm(fields_[base + i], sigma, scan_);
    holder_cache_.push_back({{k, sigma}, acc});
    return acc;
}

double NormBundle::integer_norm(int m) const {
    double acc = 0.0;
    for (int k = 0; k <= m; ++k) acc += sup_of_order(k);
    return acc;
}

double NormBundle::c_norm(int m, double sigma) const {
    return integer_norm(m) + holder_of_order(m, sigma);
}

double NormBundle::norm_l(double l) const {
    if (!(l >= 0.0 && l < 3.0))
        throw DomainError("norm_l: l must lie in [0,3), got " + std::to_string(l));
    const double m_floor = std::floor(l);
    const double sigma = l - m_floor;
    const int m = static_cast<int>(m_floor);
    if (sigma == 0.0) return integer_norm(m);
    return c_norm(m, sigma);
}

} // namespace nsest
