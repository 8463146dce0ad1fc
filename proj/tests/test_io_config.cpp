#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <string>

#include "nsest/config.hpp"
#include "nsest/field_io.hpp"

using namespace nsest;

namespace {

std::string temp_path(const std::string& tag) {
    return std::string("/tmp/nsest_test_") + tag + "_" + std::to_string(::getpid());
}

} // namespace

TEST_CASE("NSFLD1 round trip preserves bits") {
    Grid g(9);
    std::mt19937_64 rng(17);
    std::vector<double> v1(g.node_count()), v2(g.node_count()), v3(g.node_count());
    for (std::size_t t = 0; t < g.node_count(); ++t) {
        v1[t] = 2.0 * (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 1.0;
        v2[t] = 1e-17 * static_cast<double>(rng() >> 40);
        v3[t] = -3.5 + 0.25 * static_cast<double>(t % 7);
    }
    VectorField f(ScalarField(g, v1), ScalarField(g, v2), ScalarField(g, v3));
    const std::string path = temp_path("roundtrip");
    write_nsfld(path, f);
    const VectorField back = read_nsfld_vector(path);
    for (int c = 0; c < 3; ++c)
        for (std::size_t t = 0; t < g.node_count(); ++t) CHECK(back[c][t] == f[c][t]);
    std::remove(path.c_str());
}

TEST_CASE("NSFLD1 error paths") {
    const std::string path = temp_path("bad");
    {
        std::ofstream out(path, std::ios::binary);
        out << "NSFLD1 9 9 9 1\n";
        const double x = 1.0;
        out.write(reinterpret_cast<const char*>(&x), sizeof x);  // truncated payload
    }
    CHECK_THROWS_AS(read_nsfld(path), IoError);
    {
        std::ofstream out(path, std::ios::binary);
        out << "BOGUS 9 9 9 1\n";
    }
    CHECK_THROWS_AS(read_nsfld(path), IoError);
    {
        std::ofstream out(path, std::ios::binary);
        out << "NSFLD1 9 9 7 1\n";
    }
    CHECK_THROWS_AS(read_nsfld(path), IoError);
    CHECK_THROWS_AS(read_nsfld("/nonexistent/nsest"), IoError);
    std::remove(path.c_str());
}

TEST_CASE("config parsing, defaults, overrides") {
    const std::string path = temp_path("cfg");
    {
        std::ofstream out(path);
        out << "# fixture\n";
        out << "grid.n = 9\n";
        out << "fluid.nu = 2.0\n";
        out << "sweep.amplitudes = 0.1, 0.2 ,0.5\n";
        out << "norms.alpha = 0.25   # inline comment\n";
        out << "output.dir = /tmp/out\n";
    }
    RunConfig cfg = RunConfig::from_file(path);
    CHECK(cfg.grid_n == 9);
    CHECK(cfg.nu == 2.0);
    CHECK(cfg.alpha == 0.25);
    CHECK(cfg.sweep_amplitudes.size() == 3);
    CHECK(cfg.sweep_amplitudes[2] == 0.5);
    CHECK(cfg.output_dir == "/tmp/out");
    CHECK(cfg.q == 6.0);  // untouched default
    cfg.validate();

    cfg.set("solver.damping", "0.8");
    CHECK(cfg.damping == 0.8);
    CHECK_THROWS_AS(cfg.set("bogus.key", "1"), ConfigError);
    CHECK_THROWS_AS(cfg.set("fluid.nu", "abc"), ConfigError);
    CHECK_THROWS_AS(cfg.set("grid.n", "9x"), ConfigError);

    cfg.set("norms.alpha", "1.5");
    CHECK_THROWS_AS(cfg.validate(), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("config rejects unknown keys in files") {
    const std::string path = temp_path("cfg2");
    {
        std::ofstream out(path);
        out << "grid.m = 9\n";
    }
    CHECK_THROWS_AS(RunConfig::from_file(path), ConfigError);
    std::remove(path.c_str());
}

TEST_CASE("output dir resolution order") {
    RunConfig cfg;
    CHECK(cfg.resolved_output_dir("flagged") == "flagged");
    cfg.output_dir = "from_config";
    CHECK(cfg.resolved_output_dir("") == "from_config");
    cfg.output_dir.clear();
    setenv("NSEST_OUTPUT_DIR", "from_env", 1);
    CHECK(cfg.resolved_output_dir("") == "from_env");
    unsetenv("NSEST_OUTPUT_DIR");
    CHECK(cfg.resolved_output_dir("") == ".");
}
