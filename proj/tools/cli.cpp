#include "cli.hpp"

#include "report.hpp"

#include <framekit/framekit.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace framekit::cli {

int exit_code_for(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::NoExtension:
        return kNoExtension;
    case ErrorKind::NoConvergence:
    case ErrorKind::IdentityMismatch:
    case ErrorKind::NotHermitian:
    case ErrorKind::NotPsd:
        return kNumerical;
    default:
        return kUsage;
    }
}

namespace {

using nlohmann::json;

struct InputOptions {
    std::string path;
    std::string family;
    std::optional<double> alpha;
    std::vector<double> alpha_list;
    long size = 0;
};

struct CommonOptions {
    std::optional<double> tol_rank;
    std::optional<double> tol_eq;
    std::string out_path;
};

struct LoadedInput {
    Frame frame;
    std::string digest;
    json description;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open " + path);
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_atomically(const std::string& path, const std::string& text) {
    const std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::InvalidArgument, "cannot write " + tmp.string());
        }
        out << text;
        if (!out.flush()) {
            throw Error(ErrorKind::InvalidArgument, "write to " + tmp.string() + " failed");
        }
    }
    std::filesystem::rename(tmp, target);
}

std::optional<double> env_double(const char* name) {
    const char* raw = std::getenv(name);
    if (raw == nullptr || *raw == '\0') {
        return std::nullopt;
    }
    char* end = nullptr;
    const double v = std::strtod(raw, &end);
    if (end == raw || *end != '\0') {
        throw Error(ErrorKind::InvalidArgument, std::string(name) + " is not a number: " + raw);
    }
    return v;
}

Tolerance resolve_tolerance(const CommonOptions& opts) {
    Tolerance tol;
    if (auto v = env_double("FRAMEKIT_TOL_RANK")) {
        tol.rank_rel_tol = *v;
    }
    if (auto v = env_double("FRAMEKIT_TOL_EQ")) {
        tol.eq_abs_tol = *v;
    }
    if (opts.tol_rank) {
        tol.rank_rel_tol = *opts.tol_rank;
    }
    if (opts.tol_eq) {
        tol.eq_abs_tol = *opts.tol_eq;
    }
    tol.validate();
    return tol;
}

FamilySpec family_from_options(const InputOptions& in) {
    const std::string& name = in.family;
    if (name == "shift-weighted") {
        ShiftWeighted spec;
        if (!in.alpha_list.empty()) {
            std::vector<Complex> list;
            for (double a : in.alpha_list) {
                list.emplace_back(a, 0.0);
            }
            spec.alpha = std::move(list);
        } else {
            spec.alpha = Complex(in.alpha.value_or(1.0), 0.0);
        }
        return spec;
    }
    if (in.alpha || !in.alpha_list.empty()) {
        throw Error(ErrorKind::InvalidArgument, "--alpha applies only to shift-weighted");
    }
    if (name == "even-odd") {
        return EvenOdd{};
    }
    if (name == "sum-spike") {
        return SumSpike{};
    }
    if (name == "difference-chain") {
        return DifferenceChain{};
    }
    if (name == "geometric-kernel") {
        return GeometricKernel{};
    }
    throw Error(ErrorKind::WrongFamily, "unknown family '" + name + "'");
}

json family_description(const InputOptions& in) {
    json d{{"family", in.family}};
    if (in.family == "shift-weighted") {
        if (!in.alpha_list.empty()) {
            d["alpha"] = in.alpha_list;
        } else {
            d["alpha"] = in.alpha.value_or(1.0);
        }
    }
    return d;
}

LoadedInput load_input(const InputOptions& in) {
    if (!in.path.empty() == !in.family.empty()) {
        throw Error(ErrorKind::InvalidArgument, "give exactly one of --input or --family");
    }
    if (!in.path.empty()) {
        const std::string text = read_file(in.path);
        return {parse_frame(text), sha256_hex(text), json{{"file", std::filesystem::path(in.path).filename().string()}}};
    }
    if (in.size <= 0) {
        throw Error(ErrorKind::BadSize, "--family needs --size");
    }
    const FamilySpec spec = family_from_options(in);
    json d = family_description(in);
    d["size"] = in.size;
    return {truncate(spec, in.size), sha256_hex(d.dump()), d};
}

json tolerance_json(const Tolerance& tol) {
    return {{"rank_rel_tol", tol.rank_rel_tol}, {"eq_abs_tol", tol.eq_abs_tol}};
}

json report_header(const std::string& command, const std::string& digest, const json& input, const Tolerance& tol) {
    return {{"schema", std::string(kSchema)},
            {"command", command},
            {"input_digest", digest},
            {"input", input},
            {"tolerances", tolerance_json(tol)}};
}

json vector_json(const RealVector& v) {
    json a = json::array();
    for (Index i = 0; i < v.size(); ++i) {
        a.push_back(v(i));
    }
    return a;
}

json minimality_json(const MinimalityReport& r) {
    return {{"baseline", r.baseline},
            {"trials", r.trials},
            {"min_observed", r.min_observed},
            {"violations", r.violations},
            {"seed", r.seed},
            {"equality_residual", r.equality_residual}};
}

void emit(const json& report, const CommonOptions& opts, std::ostream& out) {
    const std::string text = dump_report(report);
    if (opts.out_path.empty()) {
        out << text;
    } else {
        write_atomically(opts.out_path, text);
    }
}

int cmd_analyze(const InputOptions& in, const CommonOptions& opts, std::ostream& out) {
    const Tolerance tol = resolve_tolerance(opts);
    const LoadedInput input = load_input(in);
    const FrameBounds bounds = frame_bounds(input.frame, tol);
    const FrameClass cls = classify(input.frame, tol);
    json report = report_header("analyze", input.digest, input.description, tol);
    report["results"] = {{"ambient_dim", input.frame.ambient_dim()},
                         {"size", input.frame.size()},
                         {"rank", cls.rank},
                         {"kernel_dim", cls.kernel_dim},
                         {"excess", cls.kernel_dim},
                         {"bounds", {{"lower", bounds.lower}, {"upper", bounds.upper}}},
                         {"frame_of_span", cls.is_frame_of_span},
                         {"tight", cls.is_tight},
                         {"normalized_tight", cls.is_normalized_tight}};
    emit(report, opts, out);
    return kOk;
}

int cmd_approx(const InputOptions& in, const CommonOptions& opts, std::ostream& out) {
    const Tolerance tol = resolve_tolerance(opts);
    const LoadedInput input = load_input(in);
    const ApproximationResult res = symmetric_approximation(input.frame, tol);
    const auto [via_identity, via_projection] = approximation_distance_formulas(res.polar);
    json report = report_header("approx", input.digest, input.description, tol);
    report["results"] = {{"distance", res.distance},
                         {"distance_via_identity", via_identity},
                         {"distance_via_projection", via_projection},
                         {"hs_I_minus_absF", res.hs_I_minus_absF},
                         {"hs_P_minus_absF", res.hs_P_minus_absF},
                         {"rank", res.polar.rank()},
                         {"kernel_dim", res.kernel_dim},
                         {"singulars", vector_json(res.polar.singulars)},
                         {"nu_normalized_tight", classify(res.nu, tol).is_normalized_tight},
                         {"nu", matrix_columns_to_json(res.nu.columns())}};
    emit(report, opts, out);
    return kOk;
}

int cmd_orthogonalize(const InputOptions& in, const std::string& cokernel_path, const CommonOptions& opts,
                      std::ostream& out) {
    const Tolerance tol = resolve_tolerance(opts);
    const LoadedInput input = load_input(in);
    json report = report_header("orthogonalize", input.digest, input.description, tol);

    OrthogonalizationResult res = loewdin_orthogonalization(input.frame, tol);
    if (res.exists && !cokernel_path.empty()) {
        const std::string text = read_file(cokernel_path);
        const Frame cokernel = parse_frame(text);
        report["cokernel_digest"] = sha256_hex(text);
        res = extend_orthogonalization(input.frame, cokernel.columns(), tol);
    }
    json results{{"exists", res.exists},
                 {"unique", res.unique},
                 {"rank", res.rank},
                 {"kernel_dim", res.kernel_dim},
                 {"cokernel_dim", res.cokernel_dim}};
    if (!res.exists) {
        results["reason"] = "cokernel too small";
        report["results"] = results;
        emit(report, opts, out);
        return kNoExtension;
    }
    const Index n = input.frame.size();
    results["distance"] = res.distance;
    results["hs_I_minus_absF_squared"] =
        frobenius_norm_squared(ComplexMatrix::Identity(n, n) - res.polar.absF);
    results["gram_residual"] = res.gram_residual;
    results["inverse_sqrt_checked"] = res.inverse_sqrt_checked;
    results["V"] = matrix_columns_to_json(res.V);
    results["nu"] = matrix_columns_to_json(res.nu->columns());
    report["results"] = results;
    emit(report, opts, out);
    return kOk;
}

int cmd_verify(const InputOptions& in, std::uint64_t trials, std::uint64_t seed, const CommonOptions& opts,
               std::ostream& out) {
    const Tolerance tol = resolve_tolerance(opts);
    const LoadedInput input = load_input(in);
    json report = report_header("verify", input.digest, input.description, tol);
    report["seed"] = seed;

    const MinimalityReport tight = verify_tight_minimality(input.frame, trials, seed, tol);
    std::uint64_t violations = tight.violations;
    json results{{"tight", minimality_json(tight)}};
    if (input.frame.size() <= input.frame.ambient_dim()) {
        const MinimalityReport ortho = verify_orthonormal_minimality(input.frame, trials, seed, tol);
        violations += ortho.violations;
        results["orthonormal"] = minimality_json(ortho);
    } else {
        results["orthonormal"] = {{"skipped", "n > m: no orthonormal systems of this size"}};
    }
    results["violations"] = violations;
    report["results"] = results;
    emit(report, opts, out);
    return violations > 0 ? kViolation : kOk;
}

int cmd_family(const InputOptions& in, const std::vector<long>& sizes, const std::string& csv_path,
               const CommonOptions& opts, std::ostream& out) {
    const Tolerance tol = resolve_tolerance(opts);
    const FamilySpec spec = family_from_options(in);
    std::vector<Index> idx(sizes.begin(), sizes.end());
    const auto rows = diagnostics(spec, idx, tol);

    json d = family_description(in);
    d["sizes"] = sizes;
    json report = report_header("family", sha256_hex(d.dump()), d, tol);
    json table = json::array();
    std::string csv = "size,hs_I_minus_absF,hs_P_minus_absF,operator_norm,kernel_dim,lower_bound,hs_I_minus_gram\n";
    char buf[64];
    auto num = [&buf](double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return std::string(buf);
    };
    for (const auto& r : rows) {
        table.push_back({{"size", r.size},
                         {"hs_I_minus_absF", r.hs_I_minus_absF},
                         {"hs_P_minus_absF", r.hs_P_minus_absF},
                         {"operator_norm", r.operator_norm},
                         {"kernel_dim", r.kernel_dim},
                         {"lower_bound", r.lower_bound},
                         {"hs_I_minus_gram", r.hs_I_minus_gram}});
        csv += std::to_string(r.size) + "," + num(r.hs_I_minus_absF) + "," + num(r.hs_P_minus_absF) + "," +
               num(r.operator_norm) + "," + std::to_string(r.kernel_dim) + "," + num(r.lower_bound) + "," +
               num(r.hs_I_minus_gram) + "\n";
    }
    report["results"] = {{"diagnostics", table}};
    if (!csv_path.empty()) {
        write_atomically(csv_path, csv);
    }
    emit(report, opts, out);
    return kOk;
}

void add_input_options(CLI::App* cmd, InputOptions& in) {
    cmd->add_option("--input", in.path, "frame JSON file");
    cmd->add_option("--family", in.family,
                    "built-in family: shift-weighted, even-odd, sum-spike, difference-chain, geometric-kernel");
    cmd->add_option("--alpha", in.alpha, "constant weight for shift-weighted");
    cmd->add_option("--alpha-list", in.alpha_list, "explicit weights for shift-weighted")->delimiter(',');
    cmd->add_option("--size", in.size, "truncation size for --family");
}

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--tol-rank", opts.tol_rank, "relative singular-value cutoff (env FRAMEKIT_TOL_RANK)");
    cmd->add_option("--tol-eq", opts.tol_eq, "absolute equality tolerance (env FRAMEKIT_TOL_EQ)");
    cmd->add_option("--out", opts.out_path, "write the JSON report here instead of stdout");
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"framekit: symmetric approximation and orthogonalization of frames", "framekit"};
    app.require_subcommand(1);

    InputOptions in;
    CommonOptions opts;
    std::string cokernel_path;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    std::vector<long> sizes;
    std::string csv_path;

    auto* analyze = app.add_subcommand("analyze", "frame bounds, rank, kernel dimension, tightness");
    auto* approx = app.add_subcommand("approx", "symmetric approximation by a normalized tight frame");
    auto* ortho = app.add_subcommand("orthogonalize", "symmetric (Loewdin) orthogonalization");
    auto* verify = app.add_subcommand("verify", "Monte-Carlo check of the minimality inequalities");
    auto* family = app.add_subcommand("family", "truncation diagnostics for a built-in family");
    for (auto* cmd : {analyze, approx, ortho, verify}) {
        add_input_options(cmd, in);
        add_common_options(cmd, opts);
    }
    ortho->add_option("--cokernel", cokernel_path, "frame JSON whose vectors are the images of ker F");
    verify->add_option("--trials", trials, "random candidates per harness")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "random seed");
    family->add_option("--family", in.family, "family name")->required();
    family->add_option("--alpha", in.alpha, "constant weight for shift-weighted");
    family->add_option("--alpha-list", in.alpha_list, "explicit weights for shift-weighted")->delimiter(',');
    family->add_option("--sizes", sizes, "ascending truncation sizes")->required()->delimiter(',');
    family->add_option("--csv", csv_path, "write the diagnostics table as CSV");
    add_common_options(family, opts);

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*analyze) {
            return cmd_analyze(in, opts, out);
        }
        if (*approx) {
            return cmd_approx(in, opts, out);
        }
        if (*ortho) {
            return cmd_orthogonalize(in, cokernel_path, opts, out);
        }
        if (*verify) {
            return cmd_verify(in, trials, seed, opts, out);
        }
        return cmd_family(in, sizes, csv_path, opts, out);
    } catch (const Error& e) {
        err << json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << "\n";
        return exit_code_for(e.kind());
    } catch (const std::filesystem::filesystem_error& e) {
        err << json{{"error", "IoError"}, {"message", e.what()}}.dump() << "\n";
        return kUsage;
    }
}

} // namespace framekit::cli
