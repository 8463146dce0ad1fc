#include "nsest/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

namespace nsest {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": cannot parse '" + v + "' as a number");
    }
    if (pos != v.size()) throw ConfigError(key + ": trailing characters in '" + v + "'");
    return x;
}

long long parse_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long x;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError(key + ": cannot parse '" + v + "' as an integer");
    }
    if (pos != v.size()) throw ConfigError(key + ": trailing characters in '" + v + "'");
    return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (item.empty()) throw ConfigError(key + ": empty list entry");
        out.push_back(parse_double(key, item));
    }
    if (out.empty()) throw ConfigError(key + ": empty list");
    return out;
}

} // namespace

RunConfig RunConfig::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path);
    RunConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(path + ":" + std::to_string(lineno) + ": expected key = value");
        cfg.set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

void RunConfig::set(const std::string& key, const std::string& value) {
    if (key == "grid.n")
        grid_n = static_cast<int>(parse_int(key, value));
    else if (key == "fluid.nu")
        nu = parse_double(key, value);
    else if (key == "forcing.kind")
        forcing_kind = value;
    else if (key == "forcing.amplitude")
        forcing_amplitude = parse_double(key, value);
    else if (key == "sweep.amplitudes")
        sweep_amplitudes = parse_list(key, value);
    else if (key == "norms.alpha")
        alpha = parse_double(key, value);
    else if (key == "norms.q")
        q = parse_double(key, value);
    else if (key == "norms.pair_budget")
        pair_budget = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "solver.tol")
        tol = parse_double(key, value);
    else if (key == "solver.inner_tol")
        inner_tol = parse_double(key, value);
    else if (key == "solver.div_tol")
        div_tol = parse_double(key, value);
    else if (key == "solver.max_picard")
        max_picard = static_cast<int>(parse_int(key, value));
    else if (key == "solver.damping")
        damping = parse_double(key, value);
    else if (key == "solver.inner")
        inner = value;
    else if (key == "verify.stability_tol")
        stability_tol = parse_double(key, value);
    else if (key == "interp.count")
        interp_count = static_cast<int>(parse_int(key, value));
    else if (key == "seed")
        seed = static_cast<std::uint64_t>(parse_int(key, value));
    else if (key == "output.dir")
        output_dir = value;
    else
        throw ConfigError("unknown config key '" + key + "'");
}

void RunConfig::validate() const {
    if (grid_n < 5) throw ConfigError("grid.n must be >= 5");
    if (!(nu > 0.0)) throw ConfigError("fluid.nu must be positive");
    if (forcing_kind != "trig" && forcing_kind != "bump" && forcing_kind != "manufactured")
        throw ConfigError("forcing.kind must be trig|bump|manufactured");
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("norms.alpha must lie in (0,1)");
    if (!(q > 1.0)) throw ConfigError("norms.q must exceed 1");
    if (pair_budget == 0) throw ConfigError("norms.pair_budget must be positive");
    if (!(tol > 0.0) || !(inner_tol > 0.0) || !(div_tol > 0.0))
        throw ConfigError("solver tolerances must be positive");
    if (max_picard < 1) throw ConfigError("solver.max_picard must be >= 1");
    if (!(damping > 0.0 && damping <= 1.0)) throw ConfigError("solver.damping must lie in (0,1]");
    if (inner != "fst" && inner != "cg") throw ConfigError("solver.inner must be fst|cg");
    if (!(stability_tol >= 0.0)) throw ConfigError("verify.stability_tol must be >= 0");
    if (interp_count < 1) throw ConfigError("interp.count must be >= 1");
    if (sweep_amplitudes.empty()) throw ConfigError("sweep.amplitudes must be nonempty");
}

SolverConfig RunConfig::solver_config() const {
    SolverConfig s;
    s.tol = tol;
    s.inner_tol = inner_tol;
    s.div_tol = div_tol;
    s.damping = damping;
    s.max_picard = max_picard;
    s.inner = inner == "cg" ? InnerSolver::cg : InnerSolver::fst;
    return s;
}

PairScan RunConfig::pair_scan() const { return PairScan{pair_budget, seed}; }

std::string RunConfig::resolved_output_dir(const std::string& flag_value) const {
    if (!flag_value.empty()) return flag_value;
    if (!output_dir.empty()) return output_dir;
    if (const char* env = std::getenv("NSEST_OUTPUT_DIR"); env != nullptr && env[0] != '\0')
        return env;
    return ".";
}

} // namespace nsest
