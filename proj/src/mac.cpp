#include "nsest/mac.hpp"

#include <cmath>
#include <random>

namespace nsest {

double MacArray::sup() const {
    double best = 0.0;
    for (double x : a) best = std::max(best, std::abs(x));
    return best;
}

void MacArray::axpy(double alpha, const MacArray& x) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += alpha * x.a[i];
}

void MacArray::scale(double alpha) {
    for (double& x : a) x *= alpha;
}

double StaggeredVelocity::sup() const { return std::max({u.sup(), v.sup(), w.sup()}); }

void StaggeredVelocity::axpy(double alpha, const StaggeredVelocity& x) {
    u.axpy(alpha, x.u);
    v.axpy(alpha, x.v);
    w.axpy(alpha, x.w);
}

void StaggeredVelocity::scale(double alpha) {
    u.scale(alpha);
    v.scale(alpha);
    w.scale(alpha);
}

double StaggeredVelocity::boundary_sup() const {
    const int M = grid.cells();
    double best = 0.0;
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j) {
            best = std::max(best, std::abs(u.at(0, j, k)));
            best = std::max(best, std::abs(u.at(M, j, k)));
        }
    for (int k = 0; k < M; ++k)
        for (int i = 0; i < M; ++i) {
            best = std::max(best, std::abs(v.at(i, 0, k)));
            best = std::max(best, std::abs(v.at(i, M, k)));
        }
    for (int j = 0; j < M; ++j)
        for (int i = 0; i < M; ++i) {
            best = std::max(best, std::abs(w.at(i, j, 0)));
            best = std::max(best, std::abs(w.at(i, j, M)));
        }
    return best;
}

double CellField::mean() const {
    double acc = 0.0;
    for (double x : a.a) acc += x;
    return acc / static_cast<double>(a.size());
}

void CellField::subtract_mean() {
    const double m = mean();
    for (double& x : a.a) x -= m;
}

CellField divergence(const StaggeredVelocity& vel) {
    const int M = vel.grid.cells();
    const double invh = static_cast<double>(M);
    CellField d(vel.grid);
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i)
                d.a.at(i, j, k) = invh * (vel.u.at(i + 1, j, k) - vel.u.at(i, j, k) +
                                          vel.v.at(i, j + 1, k) - vel.v.at(i, j, k) +
                                          vel.w.at(i, j, k + 1) - vel.w.at(i, j, k));
    return d;
}

StaggeredVelocity gradient_to_faces(const CellField& p) {
    const int M = p.grid.cells();
    const double invh = static_cast<double>(M);
    StaggeredVelocity g(p.grid);
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 1; i < M; ++i)
                g.u.at(i, j, k) = invh * (p.a.at(i, j, k) - p.a.at(i - 1, j, k));
    for (int k = 0; k < M; ++k)
        for (int j = 1; j < M; ++j)
            for (int i = 0; i < M; ++i)
                g.v.at(i, j, k) = invh * (p.a.at(i, j, k) - p.a.at(i, j - 1, k));
    for (int k = 1; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i)
                g.w.at(i, j, k) = invh * (p.a.at(i, j, k) - p.a.at(i, j, k - 1));
    return g;
}

void neg_laplacian_component(int axis, const Grid& grid, const MacArray& in, MacArray& out) {
    const int M = grid.cells();
    const double invh2 = static_cast<double>(M) * static_cast<double>(M);
    out = MacArray(in.nx, in.ny, in.nz);

    // normal index range 1..M-1; tangential 0..M-1 with reflection ghosts
    auto tang = [&](double center, double lo_ok, double hi_ok, bool at_lo, bool at_hi) {
        const double left = at_lo ? -center : lo_ok;
        const double right = at_hi ? -center : hi_ok;
        return 2.0 * center - left - right;
    };

    if (axis == 0) {
        for (int k = 0; k < M; ++k)
            for (int j = 0; j < M; ++j)
                for (int i = 1; i < M; ++i) {
                    const double c = in.at(i, j, k);
                    double acc = 2.0 * c - in.at(i - 1, j, k) - in.at(i + 1, j, k);
                    acc += tang(c, j > 0 ? in.at(i, j - 1, k) : 0.0,
                                j < M - 1 ? in.at(i, j + 1, k) : 0.0, j == 0, j == M - 1);
                    acc += tang(c, k > 0 ? in.at(i, j, k - 1) : 0.0,
                                k < M - 1 ? in.at(i, j, k + 1) : 0.0, k == 0, k == M - 1);
                    out.at(i, j, k) = invh2 * acc;
                }
    } else if (axis == 1) {
        for (int k = 0; k < M; ++k)
            for (int j = 1; j < M; ++j)
                for (int i = 0; i < M; ++i) {
                    const double c = in.at(i, j, k);
                    double acc = 2.0 * c - in.at(i, j - 1, k) - in.at(i, j + 1, k);
                    acc += tang(c, i > 0 ? in.at(i - 1, j, k) : 0.0,
                                i < M - 1 ? in.at(i + 1, j, k) : 0.0, i == 0, i == M - 1);
                    acc += tang(c, k > 0 ? in.at(i, j, k - 1) : 0.0,
                                k < M - 1 ? in.at(i, j, k + 1) : 0.0, k == 0, k == M - 1);
                    out.at(i, j, k) = invh2 * acc;
                }
    } else {
        for (int k = 1; k < M; ++k)
            for (int j = 0; j < M; ++j)
                for (int i = 0; i < M; ++i) {
                    const double c = in.at(i, j, k);
                    double acc = 2.0 * c - in.at(i, j, k - 1) - in.at(i, j, k + 1);
                    acc += tang(c, i > 0 ? in.at(i - 1, j, k) : 0.0,
                                i < M - 1 ? in.at(i + 1, j, k) : 0.0, i == 0, i == M - 1);
                    acc += tang(c, j > 0 ? in.at(i, j - 1, k) : 0.0,
                                j < M - 1 ? in.at(i, j + 1, k) : 0.0, j == 0, j == M - 1);
                    out.at(i, j, k) = invh2 * acc;
                }
    }
}

StaggeredVelocity convect(const StaggeredVelocity& vel) {
    const int M = vel.grid.cells();
    const double invh = static_cast<double>(M);
    const MacArray& u = vel.u;
    const MacArray& v = vel.v;
    const MacArray& w = vel.w;
    StaggeredVelocity n(vel.grid);

    // x-momentum at u-faces (i=1..M-1, j,k cells)
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 1; i < M; ++i) {
                const double uE = 0.5 * (u.at(i, j, k) + u.at(i + 1, j, k));
                const double uW = 0.5 * (u.at(i - 1, j, k) + u.at(i, j, k));
                double flux = uE * uE - uW * uW;
                {
                    // y-fluxes at edge planes j and j+1; wall planes carry zero flux
                    double gN = 0.0, gS = 0.0;
                    if (j + 1 != M) {
                        const double vbar = 0.5 * (v.at(i - 1, j + 1, k) + v.at(i, j + 1, k));
                        const double ut = 0.5 * (u.at(i, j, k) + u.at(i, j + 1, k));
                        gN = vbar * ut;
                    }
                    if (j != 0) {
                        const double vbar = 0.5 * (v.at(i - 1, j, k) + v.at(i, j, k));
                        const double ut = 0.5 * (u.at(i, j - 1, k) + u.at(i, j, k));
                        gS = vbar * ut;
                    }
                    flux += gN - gS;
                }
                {
                    double hT = 0.0, hB = 0.0;
                    if (k + 1 != M) {
                        const double wbar = 0.5 * (w.at(i - 1, j, k + 1) + w.at(i, j, k + 1));
                        const double ut = 0.5 * (u.at(i, j, k) + u.at(i, j, k + 1));
                        hT = wbar * ut;
                    }
                    if (k != 0) {
                        const double wbar = 0.5 * (w.at(i - 1, j, k) + w.at(i, j, k));
                        const double ut = 0.5 * (u.at(i, j, k - 1) + u.at(i, j, k));
                        hB = wbar * ut;
                    }
                    flux += hT - hB;
                }
                n.u.at(i, j, k) = invh * flux;
            }

    // y-momentum at v-faces (j=1..M-1, i,k cells)
    for (int k = 0; k < M; ++k)
        for (int j = 1; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                const double vN = 0.5 * (v.at(i, j, k) + v.at(i, j + 1, k));
                const double vS = 0.5 * (v.at(i, j - 1, k) + v.at(i, j, k));
                double flux = vN * vN - vS * vS;
                {
                    double fE = 0.0, fW = 0.0;
                    if (i + 1 != M) {
                        const double ubar = 0.5 * (u.at(i + 1, j - 1, k) + u.at(i + 1, j, k));
                        const double vt = 0.5 * (v.at(i, j, k) + v.at(i + 1, j, k));
                        fE = ubar * vt;
                    }
                    if (i != 0) {
                        const double ubar = 0.5 * (u.at(i, j - 1, k) + u.at(i, j, k));
                        const double vt = 0.5 * (v.at(i - 1, j, k) + v.at(i, j, k));
                        fW = ubar * vt;
                    }
                    flux += fE - fW;
                }
                {
                    double hT = 0.0, hB = 0.0;
                    if (k + 1 != M) {
                        const double wbar = 0.5 * (w.at(i, j - 1, k + 1) + w.at(i, j, k + 1));
                        const double vt = 0.5 * (v.at(i, j, k) + v.at(i, j, k + 1));
                        hT = wbar * vt;
                    }
                    if (k != 0) {
                        const double wbar = 0.5 * (w.at(i, j - 1, k) + w.at(i, j, k));
                        const double vt = 0.5 * (v.at(i, j, k - 1) + v.at(i, j, k));
                        hB = wbar * vt;
                    }
                    flux += hT - hB;
                }
                n.v.at(i, j, k) = invh * flux;
            }

    // z-momentum at w-faces (k=1..M-1, i,j cells)
    for (int k = 1; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                const double wT = 0.5 * (w.at(i, j, k) + w.at(i, j, k + 1));
                const double wB = 0.5 * (w.at(i, j, k - 1) + w.at(i, j, k));
                double flux = wT * wT - wB * wB;
                {
                    double fE = 0.0, fW = 0.0;
                    if (i + 1 != M) {
                        const double ubar = 0.5 * (u.at(i + 1, j, k - 1) + u.at(i + 1, j, k));
                        const double wt = 0.5 * (w.at(i, j, k) + w.at(i + 1, j, k));
                        fE = ubar * wt;
                    }
                    if (i != 0) {
                        const double ubar = 0.5 * (u.at(i, j, k - 1) + u.at(i, j, k));
                        const double wt = 0.5 * (w.at(i - 1, j, k) + w.at(i, j, k));
                        fW = ubar * wt;
                    }
                    flux += fE - fW;
                }
                {
                    double gN = 0.0, gS = 0.0;
                    if (j + 1 != M) {
                        const double vbar = 0.5 * (v.at(i, j + 1, k - 1) + v.at(i, j + 1, k));
                        const double wt = 0.5 * (w.at(i, j, k) + w.at(i, j + 1, k));
                        gN = vbar * wt;
                    }
                    if (j != 0) {
                        const double vbar = 0.5 * (v.at(i, j, k - 1) + v.at(i, j, k));
                        const double wt = 0.5 * (w.at(i, j - 1, k) + w.at(i, j, k));
                        gS = vbar * wt;
                    }
                    flux += gN - gS;
                }
                n.w.at(i, j, k) = invh * flux;
            }
    return n;
}

StaggeredVelocity faces_from_nodal(const VectorField& f) {
    const Grid& g = f.grid();
    const int M = g.cells();
    StaggeredVelocity out(g);
    const ScalarField& f1 = f[0];
    const ScalarField& f2 = f[1];
    const ScalarField& f3 = f[2];
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i <= M; ++i)
                out.u.at(i, j, k) = 0.25 * (f1.at(i, j, k) + f1.at(i, j + 1, k) +
                                            f1.at(i, j, k + 1) + f1.at(i, j + 1, k + 1));
    for (int k = 0; k < M; ++k)
        for (int j = 0; j <= M; ++j)
            for (int i = 0; i < M; ++i)
                out.v.at(i, j, k) = 0.25 * (f2.at(i, j, k) + f2.at(i + 1, j, k) +
                                            f2.at(i, j, k + 1) + f2.at(i + 1, j, k + 1));
    for (int k = 0; k <= M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i)
                out.w.at(i, j, k) = 0.25 * (f3.at(i, j, k) + f3.at(i + 1, j, k) +
                                            f3.at(i, j + 1, k) + f3.at(i + 1, j + 1, k));
    return out;
}

VectorField nodal_from_faces(const StaggeredVelocity& vel) {
    const Grid& g = vel.grid;
    const int n = g.n();
    const int M = g.cells();
    std::vector<double> c1(g.node_count(), 0.0), c2(g.node_count(), 0.0),
        c3(g.node_count(), 0.0);
    for (int k = 1; k < M; ++k)
        for (int j = 1; j < M; ++j)
            for (int i = 0; i < n; ++i)
                c1[g.index(i, j, k)] = 0.25 * (vel.u.at(i, j - 1, k - 1) + vel.u.at(i, j, k - 1) +
                                               vel.u.at(i, j - 1, k) + vel.u.at(i, j, k));
    for (int k = 1; k < M; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 1; i < M; ++i)
                c2[g.index(i, j, k)] = 0.25 * (vel.v.at(i - 1, j, k - 1) + vel.v.at(i, j, k - 1) +
                                               vel.v.at(i - 1, j, k) + vel.v.at(i, j, k));
    for (int k = 0; k < n; ++k)
        for (int j = 1; j < M; ++j)
            for (int i = 1; i < M; ++i)
                c3[g.index(i, j, k)] = 0.25 * (vel.w.at(i - 1, j - 1, k) + vel.w.at(i, j - 1, k) +
                                               vel.w.at(i - 1, j, k) + vel.w.at(i, j, k));
    return VectorField(ScalarField(g, std::move(c1)), ScalarField(g, std::move(c2)),
                       ScalarField(g, std::move(c3)));
}

ScalarField nodal_from_cells(const CellField& p) {
    const Grid& g = p.grid;
    const int M = g.cells();
    const int n = g.n();
    // extended cell array with one quadratic-extrapolation ghost layer per side
    MacArray ext(M + 2, M + 2, M + 2);
    auto E = [&](int i, int j, int k) -> double& { return ext.at(i + 1, j + 1, k + 1); };
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) E(i, j, k) = p.a.at(i, j, k);
    auto extrap = [](double c0, double c1, double c2) { return 3.0 * c0 - 3.0 * c1 + c2; };
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j) {
            E(-1, j, k) = extrap(E(0, j, k), E(1, j, k), E(2, j, k));
            E(M, j, k) = extrap(E(M - 1, j, k), E(M - 2, j, k), E(M - 3, j, k));
        }
    for (int k = 0; k < M; ++k)
        for (int i = -1; i <= M; ++i) {
            E(i, -1, k) = extrap(E(i, 0, k), E(i, 1, k), E(i, 2, k));
            E(i, M, k) = extrap(E(i, M - 1, k), E(i, M - 2, k), E(i, M - 3, k));
        }
    for (int j = -1; j <= M; ++j)
        for (int i = -1; i <= M; ++i) {
            E(i, j, -1) = extrap(E(i, j, 0), E(i, j, 1), E(i, j, 2));
            E(i, j, M) = extrap(E(i, j, M - 1), E(i, j, M - 2), E(i, j, M - 3));
        }
    std::vector<double> vals(g.node_count());
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                double acc = 0.0;
                for (int dk = -1; dk <= 0; ++dk)
                    for (int dj = -1; dj <= 0; ++dj)
                        for (int di = -1; di <= 0; ++di) acc += E(i + di, j + dj, k + dk);
                vals[g.index(i, j, k)] = 0.125 * acc;
            }
    return ScalarField(g, std::move(vals));
}

double dot(const MacArray& x, const MacArray& y) {
    double acc = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i) acc += x.a[i] * y.a[i];
    return acc;
}

double dot(const StaggeredVelocity& x, const StaggeredVelocity& y) {
    return dot(x.u, y.u) + dot(x.v, y.v) + dot(x.w, y.w);
}

StaggeredVelocity random_solenoidal_field(const Grid& grid, std::uint64_t seed) {
    const int M = grid.cells();
    const double h = grid.h();
    const double invh = static_cast<double>(M);
    constexpr double kPi = 3.141592653589793238462643383279;

    std::mt19937_64 rng(seed);
    auto uni = [&rng](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    // three random low-mode trig modulations, one per potential component
    struct Pot {
        double a1, a2, a3, p1, p2, p3;
        double operator()(double x, double y, double z) const {
            const double envelope =
                std::sin(kPi * x) * std::sin(kPi * y) * std::sin(kPi * z);
            return envelope * (a1 * std::cos(2.0 * kPi * x + p1) +
                               a2 * std::cos(2.0 * kPi * y + p2) +
                               a3 * std::cos(2.0 * kPi * z + p3));
        }
    };
    Pot A[3];
    for (int c = 0; c < 3; ++c)
        A[c] = Pot{uni(-1, 1), uni(-1, 1), uni(-1, 1),
                   uni(0, 2 * kPi), uni(0, 2 * kPi), uni(0, 2 * kPi)};

    // edge-centered samples: A_x at (i+1/2, j, k), A_y at (i, j+1/2, k), A_z at (i, j, k+1/2)
    MacArray Ax(M, M + 1, M + 1), Ay(M + 1, M, M + 1), Az(M + 1, M + 1, M);
    for (int k = 0; k <= M; ++k)
        for (int j = 0; j <= M; ++j)
            for (int i = 0; i < M; ++i)
                Ax.at(i, j, k) = A[0]((i + 0.5) * h, j * h, k * h);
    for (int k = 0; k <= M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i <= M; ++i)
                Ay.at(i, j, k) = A[1](i * h, (j + 0.5) * h, k * h);
    for (int k = 0; k < M; ++k)
        for (int j = 0; j <= M; ++j)
            for (int i = 0; i <= M; ++i)
                Az.at(i, j, k) = A[2](i * h, j * h, (k + 0.5) * h);

    StaggeredVelocity eta(grid);
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i <= M; ++i)
                eta.u.at(i, j, k) = invh * (Az.at(i, j + 1, k) - Az.at(i, j, k)) -
                                    invh * (Ay.at(i, j, k + 1) - Ay.at(i, j, k));
    for (int k = 0; k < M; ++k)
        for (int j = 0; j <= M; ++j)
            for (int i = 0; i < M; ++i)
                eta.v.at(i, j, k) = invh * (Ax.at(i, j, k + 1) - Ax.at(i, j, k)) -
                                    invh * (Az.at(i + 1, j, k) - Az.at(i, j, k));
    for (int k = 0; k <= M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i)
                eta.w.at(i, j, k) = invh * (Ay.at(i + 1, j, k) - Ay.at(i, j, k)) -
                                    invh * (Ax.at(i, j + 1, k) - Ax.at(i, j, k));
    return eta;
}

} // namespace nsest
