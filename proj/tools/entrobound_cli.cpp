// Command-line front end for the optimal qubit entropic uncertainty bound:
// per-angle bound reports, figure-data sweeps, the critical angle, and the
// brute-force verification suite.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "entrobound/entrobound.hpp"

namespace {

using nlohmann::ordered_json;

// 12 significant digits, C locale, deterministic across runs.
std::string fmt12(double v) {
    char buf[40];
    if (v == 0.0) v = 0.0; // normalize -0
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

struct Units {
    bool degrees = false;
    bool bits = false;
    double angle(double rad) const { return degrees ? rad * 180.0 / entrobound::pi : rad; }
    double angle_in(double v) const { return degrees ? v * entrobound::pi / 180.0 : v; }
    double entropy(double nats) const { return bits ? nats / entrobound::ln2 : nats; }
};

struct SweepSpec {
    double alpha_start = 0.0;
    double alpha_end = 3.141592;
    int steps = 1000;
    std::string output_path;
    std::string format = "csv";
};

entrobound::QubitObservable parse_observable(const std::string& spec) {
    std::vector<double> vals;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        vals.push_back(v);
    }
    if (vals.size() != 5)
        throw std::invalid_argument("expected off,scale,x,y,z");
    return entrobound::QubitObservable(vals[0], vals[1],
                                       entrobound::UnitVector3(vals[2], vals[3], vals[4]));
}

void validate_sweep(const SweepSpec& s) {
    if (!(s.alpha_start >= 0.0 && s.alpha_end < entrobound::pi && s.alpha_start < s.alpha_end))
        throw entrobound::DomainError("sweep: need 0 <= start < end < pi");
    if (s.steps < 2) throw entrobound::DomainError("sweep: steps must be >= 2");
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path '" << path << "'\n";
        std::exit(4);
    }
    return out;
}

int run_bound(double alpha, const Units& units) {
    entrobound::require_alpha_in_range(alpha, "bound");
    const entrobound::BoundReport report = entrobound::bound_report(alpha);
    const entrobound::MinimaProfile profile = entrobound::numeric_minima(alpha);

    std::cout << "alpha = " << fmt12(units.angle(alpha)) << "\n"
              << "regime = " << entrobound::regime_name(profile.regime) << "\n"
              << "optimal = " << fmt12(units.entropy(report.optimal)) << "\n"
              << "maassen_uffink = " << fmt12(units.entropy(report.maassen_uffink)) << "\n"
              << "deutsch = " << fmt12(units.entropy(report.deutsch)) << "\n"
              << "n_minima = " << profile.minima.size() << "\n";
    for (const auto& m : profile.minima)
        std::cout << "minimum theta = " << fmt12(units.angle(m.theta))
                  << " value = " << fmt12(units.entropy(m.value)) << "\n";
    return 0;
}

int run_sweep(const SweepSpec& spec, const Units& units) {
    validate_sweep(spec);
    struct Row {
        double alpha;
        entrobound::BoundReport report;
        entrobound::Regime regime;
        size_t n_minima;
    };
    std::vector<Row> rows;
    for (int i = 0; i < spec.steps; ++i) {
        const double alpha =
            spec.alpha_start + (spec.alpha_end - spec.alpha_start) * i / (spec.steps - 1);
        const auto profile = entrobound::numeric_minima(alpha);
        rows.push_back({alpha, entrobound::bound_report(alpha), profile.regime,
                        profile.minima.size()});
    }

    std::ofstream out = open_output(spec.output_path);
    if (spec.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& r : rows)
            arr.push_back({{"alpha", units.angle(r.alpha)},
                           {"optimal", units.entropy(r.report.optimal)},
                           {"maassen_uffink", units.entropy(r.report.maassen_uffink)},
                           {"deutsch", units.entropy(r.report.deutsch)},
                           {"regime", entrobound::regime_name(r.regime)},
                           {"n_minima", r.n_minima}});
        out << arr.dump(2) << "\n";
    } else {
        out << "alpha,optimal,maassen_uffink,deutsch,regime,n_minima\n";
        for (const auto& r : rows)
            out << fmt12(units.angle(r.alpha)) << ',' << fmt12(units.entropy(r.report.optimal))
                << ',' << fmt12(units.entropy(r.report.maassen_uffink)) << ','
                << fmt12(units.entropy(r.report.deutsch)) << ','
                << entrobound::regime_name(r.regime) << ',' << r.n_minima << "\n";
    }
    return out.good() ? 0 : 4;
}

int run_minima_sweep(const SweepSpec& spec, const Units& units) {
    validate_sweep(spec);
    std::vector<entrobound::MinimaProfile> profiles;
    for (int i = 0; i < spec.steps; ++i) {
        const double alpha =
            spec.alpha_start + (spec.alpha_end - spec.alpha_start) * i / (spec.steps - 1);
        profiles.push_back(entrobound::numeric_minima(alpha));
    }

    std::ofstream out = open_output(spec.output_path);
    if (spec.format == "json") {
        ordered_json arr = ordered_json::array();
        for (const auto& p : profiles)
            for (const auto& m : p.minima)
                arr.push_back({{"alpha", units.angle(p.alpha)},
                               {"theta", units.angle(m.theta)},
                               {"value", units.entropy(m.value)}});
        out << arr.dump(2) << "\n";
    } else {
        out << "alpha,theta,value\n";
        for (const auto& p : profiles)
            for (const auto& m : p.minima)
                out << fmt12(units.angle(p.alpha)) << ',' << fmt12(units.angle(m.theta)) << ','
                    << fmt12(units.entropy(m.value)) << "\n";
    }
    return out.good() ? 0 : 4;
}

int run_critical_angle(double tol, const Units& units) {
    const entrobound::CriticalAngle ca = entrobound::critical_angle(tol);
    std::cout << "critical_angle = " << fmt12(units.angle(ca.value))
              << (units.degrees ? " deg" : " rad") << "\n"
              << "residual = " << fmt12(ca.residual) << "\n";
    return 0;
}

int run_verify(int resolution, int samples) {
    const entrobound::VerifyReport report =
        entrobound::run_verification({resolution, samples});
    for (const auto& c : report.checks)
        std::printf("%-22s %s  discrepancy=%.3e  tolerance=%.3e\n", c.name.c_str(),
                    c.passed ? "PASS" : "FAIL", c.discrepancy, c.tolerance);
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Optimal entropic uncertainty bound for a pair of qubit observables"};
    app.require_subcommand(1);

    Units units;

    // bound
    auto* bound = app.add_subcommand("bound", "Report all bounds and minima for one pair");
    double bound_alpha = -1.0;
    std::vector<std::string> observables;
    bound->add_option("--alpha", bound_alpha, "Angle between the measurement axes");
    bound->add_option("--observable", observables,
                      "Observable as off,scale,x,y,z (give twice)");
    bound->add_flag("--degrees", units.degrees, "Angles in degrees");
    bound->add_flag("--bits", units.bits, "Entropies in bits");

    // sweep / minima-sweep
    SweepSpec spec;
    auto add_sweep_options = [&](CLI::App* sub) {
        sub->add_option("--start", spec.alpha_start, "First angle");
        sub->add_option("--end", spec.alpha_end, "Last angle (inclusive, < pi)");
        sub->add_option("--steps", spec.steps, "Number of angles");
        sub->add_option("-o,--output", spec.output_path, "Output file")->required();
        sub->add_option("--format", spec.format, "csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
        sub->add_flag("--degrees", units.degrees, "Angles in degrees");
        sub->add_flag("--bits", units.bits, "Entropies in bits");
    };
    auto* sweep = app.add_subcommand("sweep", "Bound curves over a range of angles");
    add_sweep_options(sweep);
    auto* minima_sweep =
        app.add_subcommand("minima-sweep", "Minima positions over a range of angles");
    add_sweep_options(minima_sweep);

    // critical-angle
    auto* critical = app.add_subcommand("critical-angle", "Solve the bifurcation angle");
    double tol = 1e-12;
    critical->add_option("--tol", tol, "Residual tolerance");
    critical->add_flag("--degrees", units.degrees, "Angle in degrees");

    // verify
    auto* verify = app.add_subcommand("verify", "Run the oracle cross-check suite");
    int resolution = 2048, samples = 50;
    verify->add_option("--resolution", resolution, "Oracle grid points per angle");
    verify->add_option("--samples", samples, "Angles sampled per check");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*bound) {
            if (!observables.empty()) {
                if (observables.size() != 2 || bound->count("--alpha") > 0) {
                    std::cerr << "error: --observable must be given exactly twice, "
                                 "without --alpha\n";
                    return 2;
                }
                try {
                    const auto frame = entrobound::pair_frame(parse_observable(observables[0]),
                                                              parse_observable(observables[1]));
                    bound_alpha = frame.alpha;
                } catch (const std::invalid_argument& e) {
                    std::cerr << "error: --observable: bad value '" << e.what() << "'\n";
                    return 2;
                }
            } else if (bound_alpha < 0.0 && !bound->count("--alpha")) {
                std::cerr << "error: need --alpha or two --observable specs\n";
                return 2;
            } else {
                bound_alpha = units.angle_in(bound_alpha);
            }
            return run_bound(bound_alpha, units);
        }
        if (*sweep) {
            if (units.degrees) {
                spec.alpha_start = units.angle_in(spec.alpha_start);
                spec.alpha_end = units.angle_in(spec.alpha_end);
            }
            return run_sweep(spec, units);
        }
        if (*minima_sweep) {
            if (units.degrees) {
                spec.alpha_start = units.angle_in(spec.alpha_start);
                spec.alpha_end = units.angle_in(spec.alpha_end);
            }
            return run_minima_sweep(spec, units);
        }
        if (*critical) return run_critical_angle(tol, units);
        if (*verify) return run_verify(resolution, samples);
    } catch (const entrobound::DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const entrobound::ConvergenceFailure& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return 5;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "i/o error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
