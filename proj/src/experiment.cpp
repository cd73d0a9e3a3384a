#include "qst/experiment.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "qst/csv.hpp"
#include "qst/errors.hpp"
#include "qst/fit.hpp"
#include "qst/kernels.hpp"
#include "qst/multi_event.hpp"

namespace qst::cli {

namespace {

struct Flags {
    ExperimentConfig config;
    std::optional<int> k;
    std::optional<int> samples;
    std::string method = "normal_mode";
    double mass = 0.0;
    double time_offset = kDefaultTimeOffset;
    std::vector<double> r_values;
    std::string input;
    int arity = 2;
};

std::string fmt(double v) { return csv::format(v); }

std::string sigma_check(const Flags& f) {
    const int samples = f.samples.value_or(500);
    if (samples < 1) throw ValidationError("--samples must be >= 1");
    std::mt19937_64 rng(f.config.seed);
    std::ostringstream os;
    os << "source,e1,e2,e3,m1,m2,m3,qq,pfaffian,base_point\n";
    double worst_qq = 0.0;
    double worst_pf = 0.0;
    auto emit = [&](const char* source, const SigmaPoint& s) {
        const double qq = invariant_qq(s.tensor());
        const double pf = invariant_pfaffian(s.tensor());
        worst_qq = std::max(worst_qq, std::abs(qq));
        worst_pf = std::max(worst_pf, std::abs(std::abs(pf) - 1.0));
        os << source << ',' << to_csv(s) << ',' << fmt(qq) << ',' << fmt(pf) << ','
           << (is_base_point(s) ? 1 : 0) << '\n';
    };
    for (int i = 0; i < samples; ++i) emit("random", random_sigma(rng));
    const SigmaPoint standard = SigmaPoint::standard();
    for (int i = 0; i < samples; ++i) emit("lorentz", lorentz_act(random_lorentz(rng), standard));
    os << "# max_abs_qq,max_pfaffian_defect\n# " << fmt(worst_qq) << ',' << fmt(worst_pf) << '\n';
    if (worst_qq > f.config.tolerance || worst_pf > f.config.tolerance) {
        std::ostringstream msg;
        msg << "quantum conditions violated: max |QQ| = " << worst_qq
            << ", max ||Pf| - 1| = " << worst_pf;
        throw NumericalError(msg.str());
    }
    return os.str();
}

std::string weyl_check(const Flags& f) {
    const int pairs = f.samples.value_or(8);
    if (pairs < 1) throw ValidationError("--samples must be >= 1");
    std::mt19937_64 rng(f.config.seed);
    std::uniform_real_distribution<double> uniform(-1.0, 1.0);
    std::vector<std::pair<Vec4, Vec4>> exponents;
    auto draw = [&] {
        Vec4 v;
        for (int i = 0; i < 4; ++i) v(i) = uniform(rng);
        return v.norm() > 1.0 ? Vec4(v.normalized()) : v;
    };
    for (int i = 0; i < pairs; ++i) {
        const Vec4 a = draw();
        const Vec4 b = draw();
        exponents.emplace_back(a, b);
    }
    std::ostringstream os;
    os << "dim,residual\n";
    for (int n = 8; n <= f.config.truncation_dim; n *= 2) {
        const CoordinateSet c = build_coordinates(n);
        const CVector psi = ground_state(n).coefficients();
        double worst = 0.0;
        for (const auto& [a, b] : exponents)
            worst = std::max(worst, weyl_composition_residual(c, {a}, {b}, psi));
        os << n << ',' << fmt(worst) << '\n';
    }
    return os.str();
}

std::string spectrum_rows(const std::vector<SpectrumLevel>& levels, const std::string& method) {
    std::ostringstream os;
    os << "index,eigenvalue,edge_flag,method\n";
    for (std::size_t i = 0; i < levels.size(); ++i)
        os << i << ',' << fmt(levels[i].value) << ',' << (levels[i].edge ? 1 : 0) << ',' << method
           << '\n';
    return os.str();
}

std::string spectrum(const Flags& f) {
    const CoordinateSet c = build_coordinates(f.config.truncation_dim);
    return spectrum_rows(length_levels(c, f.k.value_or(5)), "kronecker_sum");
}

std::string distance(const Flags& f) {
    const DistanceMethod method = distance_method_from_string(f.method);
    const PairSystem p = build_pair(f.config.truncation_dim);
    return spectrum_rows(pair_distance_levels(p, f.k.value_or(5), method), to_string(method));
}

std::string uncertainty(const Flags& f) {
    const int samples = f.samples.value_or(10000);
    const CoordinateSet c = build_coordinates(f.config.truncation_dim);
    const auto reports = sample_uncertainties(c, samples, f.config.seed);
    std::ostringstream os;
    os << "dq0,dq1,dq2,dq3,prod_ts,prod_ss,edge_flag\n";
    for (const auto& r : reports) os << to_csv(r) << '\n';
    const UncertaintyFloor floor = summarize(reports);
    os << "# min_prod_ts,min_prod_ss,min_sum_sq\n# " << fmt(floor.min_time_space) << ','
       << fmt(floor.min_space_space) << ',' << fmt(floor.min_sum_of_squares) << '\n';
    return os.str();
}

std::string kernel(const Flags& f) {
    KernelSpec spec;
    spec.arity = f.arity;
    if (!f.input.empty()) {
        std::ifstream in(f.input, std::ios::binary);
        if (!in) throw ValidationError("cannot read " + f.input);
        std::stringstream buf;
        buf << in.rdbuf();
        return kernel_batch_csv(spec, buf.str(), f.config.tolerance);
    }
    std::vector<double> ks;
    for (int i = 0; i <= 20; ++i) ks.push_back(0.25 * i);
    const auto profile = damping_profile(spec, ks);
    std::ostringstream os;
    os << "k,envelope\n";
    std::vector<double> xs, ys;
    for (const auto& [k, env] : profile) {
        os << fmt(k) << ',' << fmt(env) << '\n';
        xs.push_back(k * k);
        ys.push_back(std::log(env));
    }
    const LineFit fit = fit_line(xs, ys);
    os << "# log_envelope_vs_k2_slope,intercept,r2\n# " << fmt(fit.slope) << ','
       << fmt(fit.intercept) << ',' << fmt(fit.r_squared) << '\n';
    return os.str();
}

std::string commutator(const Flags& f) {
    std::vector<double> rs = f.r_values;
    if (rs.empty())
        for (int i = 0; i <= 12; ++i) rs.push_back(1.0 + 0.25 * i);
    const auto curve = locality_violation_profile(Vec3::UnitX(), rs, f.mass, f.config.quadrature,
                                                  f.time_offset);
    return to_csv(curve);
}

std::string resolve_output(const std::string& out, const std::string& sub) {
    namespace fs = std::filesystem;
    const char* env = std::getenv("QST_OUT_DIR");
    const std::string dir = env ? env : "";
    if (!out.empty()) {
        fs::path p(out);
        if (p.is_relative() && !dir.empty()) return (fs::path(dir) / p).string();
        return p.string();
    }
    if (!dir.empty()) return (fs::path(dir) / (sub + ".csv")).string();
    return {};
}

}  // namespace

void ExperimentConfig::validate() const {
    if (truncation_dim < 2) throw DimensionTooSmall("--dim must be >= 2");
    if (!(tolerance > 0.0)) throw ValidationError("--tol must be positive");
    quadrature.validate();
}

const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names = {"sigma-check", "weyl-check", "spectrum",
                                                   "uncertainty", "distance",   "kernel",
                                                   "commutator"};
    return names;
}

std::string header_line(const ExperimentConfig& config) {
    std::ostringstream os;
    os << "# " << kToolName << " v" << QST_VERSION << " seed=" << config.seed
       << " dim=" << config.truncation_dim;
    return os.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty()) {
        err << "usage: qst <subcommand> [flags]; subcommands:";
        for (const auto& s : subcommands()) err << ' ' << s;
        err << '\n';
        return kUnknownSubcommand;
    }
    const std::string sub = args.front();
    if (sub == "--help" || sub == "-h" || sub == "help") {
        out << "usage: qst <subcommand> [flags]; subcommands:";
        for (const auto& s : subcommands()) out << ' ' << s;
        out << "\nrun 'qst <subcommand> --help' for flags\n";
        return kSuccess;
    }
    if (sub == "--version") {
        out << kToolName << ' ' << QST_VERSION << '\n';
        return kSuccess;
    }
    const auto& names = subcommands();
    if (std::find(names.begin(), names.end(), sub) == names.end()) {
        err << "error: unknown subcommand '" << sub << "'\n";
        return kUnknownSubcommand;
    }

    Flags f;
    CLI::App app{"Quantum spacetime basic-model experiments", "qst " + sub};
    app.set_config("--config", "", "flat key=value configuration file");
    app.add_option("--dim", f.config.truncation_dim, "levels per oscillator mode");
    app.add_option("--tol", f.config.tolerance, "tolerance for checks");
    app.add_option("--seed", f.config.seed, "random seed");
    app.add_option("--k", f.k, "number of eigenvalues");
    app.add_option("--samples", f.samples, "number of random samples");
    app.add_option("--method", f.method, "normal_mode or brute_force")
        ->check(CLI::IsMember({"normal_mode", "brute_force"}));
    app.add_option("--mass", f.mass, "field mass");
    app.add_option("--kmax", f.config.quadrature.k_max, "radial momentum cutoff");
    app.add_option("--out", f.config.output_path, "output CSV path");
    app.add_option("--time-offset", f.time_offset, "time component of the separations");
    app.add_option("--r", f.r_values, "spatial separations")->delimiter(',');
    app.add_option("--input", f.input, "kernel batch input CSV");
    app.add_option("--arity", f.arity, "kernel arity");

    std::vector<std::string> rest(args.begin() + 1, args.end());
    std::reverse(rest.begin(), rest.end());
    try {
        app.parse(rest);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }

    try {
        f.config.validate();
        if (f.k && *f.k < 1) throw ValidationError("--k must be >= 1");
        if (f.mass < 0.0) throw ValidationError("--mass must be nonnegative");

        std::string body;
        if (sub == "sigma-check") body = sigma_check(f);
        else if (sub == "weyl-check") body = weyl_check(f);
        else if (sub == "spectrum") body = spectrum(f);
        else if (sub == "uncertainty") body = uncertainty(f);
        else if (sub == "distance") body = distance(f);
        else if (sub == "kernel") body = kernel(f);
        else body = commutator(f);

        const std::string content = header_line(f.config) + "\n" + body;
        const std::string path = resolve_output(f.config.output_path, sub);
        if (path.empty()) out << content;
        else csv::write_atomically(path, content);
        return kSuccess;
    } catch (const NumericalError& e) {
        err << "error: " << e.what() << '\n';
        return kConvergenceFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kValidationFailure;
    }
}

}  // namespace qst::cli
