#include "nsest/mms.hpp"

#include <cmath>

namespace nsest {

namespace {

constexpr double kPi = 3.141592653589793238462643383279;

// P(t) = t^2 (1-t)^2 and its derivatives
inline double P0(double t) { return t * t * (1.0 - t) * (1.0 - t); }
inline double P1(double t) { return 2.0 * t * (1.0 - t) * (1.0 - 2.0 * t); }
inline double P2(double t) { return 2.0 * (1.0 - 6.0 * t + 6.0 * t * t); }
inline double P3(double t) { return 12.0 * (2.0 * t - 1.0); }

} // namespace

double ManufacturedSolution::velocity(int comp, double x, double y, double z) const {
    switch (comp) {
        case 0: return amplitude * P0(x) * P1(y) * P0(z);
        case 1: return -amplitude * P1(x) * P0(y) * P0(z);
        default: return 0.0;
    }
}

double ManufacturedSolution::velocity_laplacian(int comp, double x, double y, double z) const {
    switch (comp) {
        case 0:
            return amplitude * (P2(x) * P1(y) * P0(z) + P0(x) * P3(y) * P0(z) +
                                P0(x) * P1(y) * P2(z));
        case 1:
            return -amplitude * (P3(x) * P0(y) * P0(z) + P1(x) * P2(y) * P0(z) +
                                 P1(x) * P0(y) * P2(z));
        default: return 0.0;
    }
}

double ManufacturedSolution::advection(int comp, double x, double y, double z) const {
    const double v1 = velocity(0, x, y, z);
    const double v2 = velocity(1, x, y, z);
    switch (comp) {
        case 0: {
            const double d1v1 = amplitude * P1(x) * P1(y) * P0(z);
            const double d2v1 = amplitude * P0(x) * P2(y) * P0(z);
            return v1 * d1v1 + v2 * d2v1;
        }
        case 1: {
            const double d1v2 = -amplitude * P2(x) * P0(y) * P0(z);
            const double d2v2 = -amplitude * P1(x) * P1(y) * P0(z);
            return v1 * d1v2 + v2 * d2v2;
        }
        default: return 0.0;
    }
}

double ManufacturedSolution::pressure(double x, double y) const {
    return amplitude * std::sin(kPi * x) * std::cos(kPi * y);
}

double ManufacturedSolution::pressure_gradient(int comp, double x, double y) const {
    switch (comp) {
        case 0: return amplitude * kPi * std::cos(kPi * x) * std::cos(kPi * y);
        case 1: return -amplitude * kPi * std::sin(kPi * x) * std::sin(kPi * y);
        default: return 0.0;
    }
}

double ManufacturedSolution::forcing_stokes(int comp, double nu, double x, double y,
                                            double z) const {
    return -nu * velocity_laplacian(comp, x, y, z) + pressure_gradient(comp, x, y);
}

double ManufacturedSolution::forcing_navier_stokes(int comp, double nu, double x, double y,
                                                   double z) const {
    return forcing_stokes(comp, nu, x, y, z) + advection(comp, x, y, z);
}

VectorField ManufacturedSolution::forcing_stokes_field(const Grid& grid, double nu) const {
    return VectorField::sample(
        grid, [&](double x, double y, double z) { return forcing_stokes(0, nu, x, y, z); },
        [&](double x, double y, double z) { return forcing_stokes(1, nu, x, y, z); },
        [&](double x, double y, double z) { return forcing_stokes(2, nu, x, y, z); });
}

VectorField ManufacturedSolution::forcing_navier_stokes_field(const Grid& grid, double nu) const {
    return VectorField::sample(
        grid, [&](double x, double y, double z) { return forcing_navier_stokes(0, nu, x, y, z); },
        [&](double x, double y, double z) { return forcing_navier_stokes(1, nu, x, y, z); },
        [&](double x, double y, double z) { return forcing_navier_stokes(2, nu, x, y, z); });
}

double ManufacturedSolution::velocity_error_l2(const FlowState& state) const {
    const Grid& g = state.grid();
    const int M = g.cells();
    const double h = g.h();
    const double h3 = h * h * h;
    double acc = 0.0;
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i <= M; ++i) {
                const double e = state.velocity.u.at(i, j, k) -
                                 velocity(0, i * h, (j + 0.5) * h, (k + 0.5) * h);
                acc += e * e * h3;
            }
    for (int k = 0; k < M; ++k)
        for (int j = 0; j <= M; ++j)
            for (int i = 0; i < M; ++i) {
                const double e = state.velocity.v.at(i, j, k) -
                                 velocity(1, (i + 0.5) * h, j * h, (k + 0.5) * h);
                acc += e * e * h3;
            }
    for (int k = 0; k <= M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                const double e = state.velocity.w.at(i, j, k) -
                                 velocity(2, (i + 0.5) * h, (j + 0.5) * h, k * h);
                acc += e * e * h3;
            }
    return std::sqrt(acc);
}

double ManufacturedSolution::pressure_error_l2(const FlowState& state) const {
    const Grid& g = state.grid();
    const int M = g.cells();
    const double h = g.h();
    const double h3 = h * h * h;
    // compare against the mean-zero projection of p* at cell centers
    double pmean = 0.0;
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) pmean += pressure((i + 0.5) * h, (j + 0.5) * h);
    pmean /= static_cast<double>(M) * M * M;
    double acc = 0.0;
    for (int k = 0; k < M; ++k)
        for (int j = 0; j < M; ++j)
            for (int i = 0; i < M; ++i) {
                const double e = state.pressure.a.at(i, j, k) -
                                 (pressure((i + 0.5) * h, (j + 0.5) * h) - pmean);
                acc += e * e * h3;
            }
    return std::sqrt(acc);
}

MmsStudy run_mms_study(std::span<const int> levels, double nu, const SolverConfig& cfg,
                       bool do_stokes, bool do_ns, double amplitude) {
    MmsStudy study;
    study.ran_stokes = do_stokes;
    study.ran_ns = do_ns;
    ManufacturedSolution mms;
    mms.amplitude = amplitude;
    for (int n : levels) {
        Grid grid(n);
        MmsLevel lvl;
        lvl.n = n;
        if (do_stokes) {
            const FlowState st = solve_stokes(mms.forcing_stokes_field(grid, nu), nu, grid, cfg);
            lvl.err_stokes = mms.velocity_error_l2(st);
            lvl.p_err_stokes = mms.pressure_error_l2(st);
            lvl.div_stokes = st.divergence_max;
        }
        if (do_ns) {
            const FluidProblem prob(nu, mms.forcing_navier_stokes_field(grid, nu));
            const NsSolution ns = solve_navier_stokes(prob, cfg);
            lvl.err_ns = mms.velocity_error_l2(ns.state);
            lvl.p_err_ns = mms.pressure_error_l2(ns.state);
            lvl.div_ns = ns.state.divergence_max;
            lvl.picard_iterations = ns.iterations;
        }
        study.levels.push_back(lvl);
    }
    for (std::size_t t = 1; t < study.levels.size(); ++t) {
        const double log_h_ratio =
            std::log(static_cast<double>(study.levels[t].n - 1) /
                     static_cast<double>(study.levels[t - 1].n - 1));
        if (do_stokes)
            study.orders_stokes.push_back(
                std::log(study.levels[t - 1].err_stokes / study.levels[t].err_stokes) /
                log_h_ratio);
        if (do_ns)
            study.orders_ns.push_back(
                std::log(study.levels[t - 1].err_ns / study.levels[t].err_ns) / log_h_ratio);
    }
    return study;
}

} // namespace nsest
