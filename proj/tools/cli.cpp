#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "airybasis/dynamics.hpp"
#include "airybasis/errors.hpp"
#include "airybasis/grin.hpp"
#include "airybasis/spectrum.hpp"

namespace airybasis::cli {
namespace {

using Json = nlohmann::ordered_json;

const std::vector<std::string> kSubcommands = {"eigs", "eigenfunctions", "bounce", "grin", "verify"};

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    return std::string(buf, res.ptr);
}

// The JSON value is the double that the 9-digit text parses to, so CSV and JSON carry identical numbers.
double rounded(double v) {
    const std::string text = format_number(v);
    double out = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), out);
    return out;
}

struct Column {
    std::string name;
    std::vector<double> numbers;
    std::vector<std::string> text;
    bool integral = false;

    std::size_t size() const { return text.empty() ? numbers.size() : text.size(); }
    std::string cell(std::size_t i) const { return text.empty() ? format_number(numbers[i]) : text[i]; }
    Json json() const {
        Json arr = Json::array();
        if (text.empty()) {
            for (double v : numbers) {
                if (integral) {
                    arr.push_back(static_cast<long long>(v));
                } else {
                    arr.push_back(rounded(v));
                }
            }
        } else {
            for (const auto& s : text) arr.push_back(s);
        }
        return arr;
    }
};

void write_table(const RunConfig& cfg, const Json& meta, const std::vector<Column>& columns, std::ostream& os) {
    if (cfg.format == "json") {
        Json data = Json::object();
        for (const auto& c : columns) data[c.name] = c.json();
        os << Json{{"meta", meta}, {"data", data}}.dump(1) << '\n';
        return;
    }
    for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << columns[k].name;
    os << '\n';
    const std::size_t rows = columns.empty() ? 0 : columns.front().size();
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < columns.size(); ++k) os << (k ? "," : "") << columns[k].cell(i);
        os << '\n';
    }
}

Json common_meta(const std::string& command, const RunConfig& cfg) {
    return Json{{"command", command},
                {"lambda", rounded(cfg.lambda)},
                {"xmin", rounded(cfg.x_min)},
                {"xmax", rounded(cfg.x_max)},
                {"points", cfg.points},
                {"nstates", cfg.n_states},
                {"format", cfg.format}};
}

Grid config_grid(const RunConfig& cfg) { return Grid(cfg.x_min, cfg.x_max, cfg.points); }

void cmd_eigs(const RunConfig& cfg, std::ostream& os) {
    Column n{"n", {}, {}, true}, parity{"parity", {}, {}}, energy{"energy", {}, {}};
    for (int k = 0; k < cfg.n_states; ++k) {
        n.numbers.push_back(k);
        parity.text.push_back(to_string(k % 2 == 0 ? Parity::even : Parity::odd));
        energy.numbers.push_back(level_energy(k, cfg.lambda));
    }
    write_table(cfg, common_meta("eigs", cfg), {n, parity, energy}, os);
}

void cmd_eigenfunctions(const RunConfig& cfg, std::ostream& os) {
    const auto basis = build_basis(cfg.lambda, cfg.n_states, config_grid(cfg));
    std::vector<Column> columns{{"x", basis.grid().points(), {}}};
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto v = basis.values(k);
        columns.push_back({"psi_" + std::to_string(k), std::vector<double>(v.begin(), v.end()), {}});
    }
    Json meta = common_meta("eigenfunctions", cfg);
    Json energies = Json::array();
    for (double e : basis.energies()) energies.push_back(rounded(e));
    meta["energies"] = energies;
    write_table(cfg, meta, columns, os);
}

void cmd_bounce(const RunConfig& cfg, std::ostream& os) {
    if (!(cfg.dt > 0.0) || !(cfg.t_max >= 0.0) || !(cfg.tg > 0.0)) throw DomainError("bounce: need dt > 0, tmax >= 0, tg > 0");
    const auto basis = build_basis(cfg.lambda, cfg.n_states, config_grid(cfg));
    const GaussianPacketParams packet{cfg.x0, cfg.sigma};
    const auto steps = static_cast<std::size_t>(std::floor(cfg.t_max / cfg.dt + 1e-9));
    std::vector<double> times(steps + 1);
    for (std::size_t k = 0; k <= steps; ++k) times[k] = static_cast<double>(k) * cfg.dt * cfg.tg;
    const auto traj = trajectory(packet, basis, times);
    const auto coeffs = project(gaussian_packet(packet, basis.grid()), basis);

    Column t{"t", times, {}}, t_tg{"t_over_tg", {}, {}}, mean{"mean_x", {}, {}};
    for (std::size_t k = 0; k <= steps; ++k) {
        t_tg.numbers.push_back(static_cast<double>(k) * cfg.dt);
        mean.numbers.push_back(traj[k].mean_x);
    }
    Json meta = common_meta("bounce", cfg);
    meta["x0"] = rounded(cfg.x0);
    meta["sigma"] = rounded(cfg.sigma);
    meta["tmax"] = rounded(cfg.t_max);
    meta["dt"] = rounded(cfg.dt);
    meta["tg"] = rounded(cfg.tg);
    meta["captured_weight"] = rounded(coeffs.captured_weight());
    write_table(cfg, meta, {t, t_tg, mean}, os);
}

void cmd_grin(const RunConfig& cfg, std::ostream& os) {
    if (cfg.n_z < 1 || !(cfg.z_max >= 0.0) || !(cfg.view > 0.0)) throw DomainError("grin: need nz >= 1, zmax >= 0, view > 0");
    const GrinMedium medium{cfg.kappa, cfg.lambda};
    const auto basis = build_basis(cfg.lambda, cfg.n_states, config_grid(cfg));
    const auto field = airy_wavelet(WaveletParams{cfg.q}, basis.grid());
    std::vector<double> z(cfg.n_z);
    for (std::size_t k = 0; k < cfg.n_z; ++k) {
        z[k] = cfg.n_z == 1 ? 0.0 : cfg.z_max * static_cast<double>(k) / static_cast<double>(cfg.n_z - 1);
    }
    const auto map = intensity_map(field, medium, basis, z);

    const Grid& grid = basis.grid();
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (std::fabs(grid.point(i)) <= cfg.view * (1.0 + 1e-12)) cols.push_back(i);
    }
    Json meta = common_meta("grin", cfg);
    meta["q"] = rounded(cfg.q);
    meta["kappa"] = rounded(cfg.kappa);
    meta["zmax"] = rounded(cfg.z_max);
    meta["nz"] = cfg.n_z;
    meta["view"] = rounded(cfg.view);

    if (cfg.format == "json") {
        Json xs = Json::array(), zs = Json::array(), rows = Json::array();
        for (auto i : cols) xs.push_back(rounded(grid.point(i)));
        for (double v : z) zs.push_back(rounded(v));
        for (std::size_t k = 0; k < z.size(); ++k) {
            const auto row = map.row(k);
            Json r = Json::array();
            for (auto i : cols) r.push_back(rounded(row[i]));
            rows.push_back(std::move(r));
        }
        os << Json{{"meta", meta}, {"data", {{"z", zs}, {"x", xs}, {"intensity", rows}}}}.dump(1) << '\n';
        return;
    }
    os << "z";
    for (auto i : cols) os << ',' << format_number(grid.point(i));
    os << '\n';
    for (std::size_t k = 0; k < z.size(); ++k) {
        const auto row = map.row(k);
        os << format_number(z[k]);
        for (auto i : cols) os << ',' << format_number(row[i]);
        os << '\n';
    }
}

bool cmd_verify(const RunConfig& cfg, std::ostream& os) {
    const auto checks = run_verification(cfg);
    Column name{"check", {}, {}}, status{"status", {}, {}}, value{"value", {}, {}}, threshold{"threshold", {}, {}};
    bool all = true;
    for (const auto& c : checks) {
        name.text.push_back(c.name);
        status.text.push_back(c.passed ? "pass" : "fail");
        value.numbers.push_back(c.value);
        threshold.numbers.push_back(c.threshold);
        all = all && c.passed;
    }
    Json meta = common_meta("verify", cfg);
    meta["fuzz_energy"] = rounded(cfg.fuzz_energy);
    meta["passed"] = all;
    write_table(cfg, meta, {name, status, value, threshold}, os);
    return all;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--lambda", cfg.lambda, "Slope of the potential lambda |x|")->capture_default_str();
    sub->add_option("--xmin", cfg.x_min, "Left end of the grid")->capture_default_str();
    sub->add_option("--xmax", cfg.x_max, "Right end of the grid")->capture_default_str();
    sub->add_option("--points", cfg.points, "Grid points")->capture_default_str()->check(CLI::Range(std::size_t{5}, std::size_t{1} << 26));
    sub->add_option("-n,--nstates,--n", cfg.n_states, "Number of eigenstates")->capture_default_str()->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "Output format")->capture_default_str()->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", cfg.out, "Output file (default stdout)");
    sub->add_option("--config", cfg.config, "File of key=value lines; flags take precedence");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot read " + path);
    std::map<std::string, std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw CLI::ValidationError("--config", "expected key=value: " + line);
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        out[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return out;
}

std::string find_config_path(const std::vector<std::string>& args) {
    std::string path;
    for (std::size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    return path;
}

}  // namespace

RunConfig default_config(const std::string& subcommand) {
    RunConfig cfg;
    if (subcommand == "bounce") {
        cfg.x_min = -50.0;
        cfg.x_max = 50.0;
        cfg.points = 10001;
        cfg.n_states = 120;
    } else if (subcommand == "grin") {
        cfg.lambda = 0.1;
        cfg.x_min = -320.0;
        cfg.x_max = 320.0;
        cfg.points = 32001;
        cfg.n_states = 1000;
    } else if (subcommand == "verify") {
        cfg.n_states = 20;
    }
    return cfg;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Airy-function eigenbasis of the symmetric linear potential", "airybasis"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    std::map<std::string, RunConfig> configs;
    for (const auto& name : kSubcommands) configs[name] = default_config(name);

    auto* eigs = app.add_subcommand("eigs", "Energy levels");
    add_common(eigs, configs["eigs"]);
    auto* eigenfunctions = app.add_subcommand("eigenfunctions", "Sampled eigenfunctions");
    add_common(eigenfunctions, configs["eigenfunctions"]);

    auto* bounce = app.add_subcommand("bounce", "Mean position of a Gaussian packet over time");
    auto& b = configs["bounce"];
    add_common(bounce, b);
    bounce->add_option("--x0", b.x0, "Packet centre")->capture_default_str();
    bounce->add_option("--sigma", b.sigma, "Packet width")->capture_default_str()->check(CLI::PositiveNumber);
    bounce->add_option("--tmax", b.t_max, "Final time in units of tg")->capture_default_str();
    bounce->add_option("--dt", b.dt, "Time step in units of tg")->capture_default_str()->check(CLI::PositiveNumber);
    bounce->add_option("--tg", b.tg, "Time unit")->capture_default_str()->check(CLI::PositiveNumber);

    auto* grin = app.add_subcommand("grin", "Intensity of an Airy wavelet in a linear graded-index medium");
    auto& g = configs["grin"];
    add_common(grin, g);
    grin->add_option("--q", g.q, "Wavelet shift")->capture_default_str();
    grin->add_option("--kappa", g.kappa, "Propagation constant")->capture_default_str()->check(CLI::PositiveNumber);
    grin->add_option("--zmax", g.z_max, "Propagation distance")->capture_default_str();
    grin->add_option("--nz", g.n_z, "Number of z samples")->capture_default_str()->check(CLI::PositiveNumber);
    grin->add_option("--view", g.view, "Half-width of the written x window")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "Run the invariant suite");
    auto& v = configs["verify"];
    add_common(verify, v);
    verify->add_option("--fuzz-energy", v.fuzz_energy, "Scale energies by (1 + value) to inject a fault")->capture_default_str();

    std::vector<std::string> argv = args;
    try {
        const std::string config_path = find_config_path(args);
        if (!config_path.empty() && !args.empty()) {
            auto* sub = app.get_subcommand(args.front());
            std::vector<std::string> injected;
            for (const auto& [key, value] : read_config_file(config_path)) {
                if (key == "config") continue;
                if (sub->get_option_no_throw("--" + key) != nullptr) {
                    injected.push_back("--" + key + "=" + value);
                    continue;
                }
                const bool known = std::any_of(kSubcommands.begin(), kSubcommands.end(), [&](const std::string& s) {
                    return app.get_subcommand(s)->get_option_no_throw("--" + key) != nullptr;
                });
                if (!known) throw CLI::ValidationError("--config", "unknown key '" + key + "'");
            }
            argv.insert(argv.begin() + 1, injected.begin(), injected.end());
        }
        std::reverse(argv.begin(), argv.end());
        app.parse(argv);
    } catch (const CLI::Success& e) {
        app.exit(e, out, err);
        return kSuccess;
    } catch (const CLI::Error& e) {
        err << "usage error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsage;
    }

    auto* chosen = app.get_subcommands().front();
    const std::string command = chosen->get_name();
    const RunConfig& cfg = configs[command];

    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "usage error: cannot open output file " << cfg.out << '\n';
            return kUsage;
        }
    }
    std::ostream& os = cfg.out.empty() ? out : file;
    try {
        if (command == "eigs") cmd_eigs(cfg, os);
        if (command == "eigenfunctions") cmd_eigenfunctions(cfg, os);
        if (command == "bounce") cmd_bounce(cfg, os);
        if (command == "grin") cmd_grin(cfg, os);
        if (command == "verify" && !cmd_verify(cfg, os)) {
            err << "verification failed\n";
            return kVerificationFailed;
        }
    } catch (const DomainError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << '\n';
        return kPrecision;
    } catch (const ConvergenceError& e) {
        err << "convergence error: " << e.what() << '\n';
        return kPrecision;
    }
    return kSuccess;
}

}  // namespace airybasis::cli
