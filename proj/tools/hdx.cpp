// Command-line surface: generates fixtures, validates weighted complexes,
// assembles walk operators, runs decompositions, and checks mixing bounds,
// emitting machine-readable JSON reports with embedded provenance.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hdx/acceptance.hpp"
#include "hdx/decomposition.hpp"
#include "hdx/errors.hpp"
#include "hdx/generators.hpp"
#include "hdx/json_io.hpp"
#include "hdx/mixing.hpp"
#include "hdx/operators.hpp"
#include "hdx/rng.hpp"
#include "hdx/spectra.hpp"

#ifndef HDX_TOOL_VERSION
#define HDX_TOOL_VERSION "0.0.0"
#endif

namespace {

using hdx::Json;

struct StopWatch {
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(
                   std::chrono::steady_clock::now() - start)
            .count();
    }
};

void report_duration(const StopWatch& watch) {
    std::cerr << "wall_clock_seconds=" << std::fixed << std::setprecision(3)
              << watch.elapsed() << "\n";
}

/** Writes a report to the chosen path, or to stdout when none is given. */
void emit_json(const Json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        hdx::save_json_file(out_path, j);
    }
}

void emit_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        hdx::save_text_file(out_path, text);
    }
}

/** Loads a JSON input and records its canonical digest in the manifest. */
Json load_input(const std::string& path, hdx::RunManifest& manifest) {
    Json j = hdx::load_json_file(path);
    manifest.inputs.emplace_back(path, hdx::canonical_digest(j));
    return j;
}

hdx::RunManifest make_manifest(int argc, char** argv) {
    hdx::RunManifest manifest;
    manifest.tool_version = HDX_TOOL_VERSION;
    std::string cmd;
    for (int i = 1; i < argc; ++i) {
        if (i > 1) cmd += ' ';
        cmd += argv[i];
    }
    manifest.command = cmd;
    return manifest;
}

std::string fmt17(double x) {
    std::ostringstream os;
    os.precision(17);
    os << x;
    return os.str();
}

// ---- gen -------------------------------------------------------------

struct GenArgs {
    std::string kind;
    int m = 0;
    int n = 0;
    int v = 0;
    int s = 0;
    double p = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenArgs& a) {
    hdx::GeneratedComplex g;
    if (a.kind == "complete") {
        g = hdx::complete_complex(a.m, a.n);
    } else if (a.kind == "random-pure") {
        g = hdx::random_pure_complex(a.m, a.n, a.p, a.seed);
    } else {
        g = hdx::regular_graph_matching(a.v, a.s, a.seed);
    }
    emit_json(hdx::generated_to_json(g), a.out);
    std::cerr << "generated kind=" << a.kind
              << " top_faces=" << g.space->complex.count(g.space->complex.dimension())
              << " attempts=" << g.stats.attempts << "\n";
    return 0;
}

// ---- validate ---------------------------------------------------------

int run_validate(const std::string& input, const std::string& out,
                 hdx::RunManifest manifest) {
    Json cj = load_input(input, manifest);
    hdx::WeightedComplexPtr space = hdx::complex_from_json(cj);
    hdx::ValidationReport rep = hdx::validate(*space);

    const bool checks[] = {rep.closed, rep.pure, rep.weights_positive,
                           rep.max_recursion_residual <= 1e-12,
                           rep.max_total_residual <= 1e-12};
    manifest.checks_total = 5;
    for (bool b : checks) manifest.checks_passed += b ? 1 : 0;

    Json report;
    report["manifest"] = hdx::manifest_to_json(manifest);
    report["validation"] = hdx::validation_to_json(rep);
    emit_json(report, out);

    if (manifest.checks_passed != manifest.checks_total) {
        for (const auto& v : rep.violations) std::cerr << v << "\n";
        std::cerr << "max_recursion_residual="
                  << fmt17(rep.max_recursion_residual)
                  << " max_total_residual=" << fmt17(rep.max_total_residual)
                  << "\n";
        return 1;
    }
    return 0;
}

// ---- spectra ----------------------------------------------------------

int run_sweep(const std::string& sweep, int n, const std::string& out) {
    std::smatch match;
    if (!std::regex_match(sweep, match,
                          std::regex(R"(m=([0-9]+)\.\.([0-9]+))"))) {
        throw hdx::DomainError("sweep must look like m=5..9, got '" + sweep +
                               "'");
    }
    const int lo = std::stoi(match[1]);
    const int hi = std::stoi(match[2]);
    if (lo > hi || lo < n + 1) {
        throw hdx::DomainError("sweep range must satisfy n+1 <= lo <= hi");
    }
    std::string csv = "m,k,achieved,bound\n";
    for (int m = lo; m <= hi; ++m) {
        hdx::GeneratedComplex g = hdx::complete_complex(m, n);
        hdx::SpectralProfile prof = hdx::profile(g.space);
        for (int k = 0; k <= n - 1; ++k) {
            const double achieved =
                hdx::spectrum_on_c0(hdx::upper_walk(g.space, k)).largest;
            const double bound = static_cast<double>(k + 1) / (k + 2) +
                                 (k + 1) * prof.lambda_one_sided;
            csv += std::to_string(m) + "," + std::to_string(k) + "," +
                   fmt17(achieved) + "," + fmt17(bound) + "\n";
        }
    }
    emit_text(csv, out);
    return 0;
}

int run_spectra(const std::string& input, const std::string& out,
                hdx::RunManifest manifest) {
    Json cj = load_input(input, manifest);
    hdx::WeightedComplexPtr space = hdx::complex_from_json(cj);
    hdx::SpectralProfile prof = hdx::profile(space);
    hdx::DescentReport descent = hdx::check_descent(prof);

    int total = 0;
    int passed = 0;
    auto tally = [&](const std::vector<hdx::DescentStep>& steps) {
        for (const auto& s : steps) {
            if (s.vacuous) continue;
            ++total;
            passed += s.ok ? 1 : 0;
        }
    };
    if (descent.applicable) {
        tally(descent.step_mu);
        tally(descent.step_nu);
        tally(descent.top_mu);
        tally(descent.top_nu);
        ++total;
        passed += descent.lambda_consistent ? 1 : 0;
    }
    manifest.checks_total = total;
    manifest.checks_passed = passed;

    Json report;
    report["manifest"] = hdx::manifest_to_json(manifest);
    report["profile"] = hdx::profile_to_json(prof, space->complex);
    report["descent"] = hdx::descent_to_json(descent);
    emit_json(report, out);

    if (passed != total) {
        std::cerr << "descent chain violated; see report\n";
        return 1;
    }
    return 0;
}

// ---- walk -------------------------------------------------------------

struct WalkArgs {
    std::string input;
    int k = 0;
    std::string op;
    std::string dump;
    std::string out;
};

int run_walk(const WalkArgs& a, hdx::RunManifest manifest) {
    Json cj = load_input(a.input, manifest);
    hdx::WeightedComplexPtr space = hdx::complex_from_json(cj);

    hdx::OperatorMatrix op = [&] {
        if (a.op == "upper") return hdx::upper_walk(space, a.k);
        if (a.op == "lower") return hdx::lower_walk(space, a.k);
        if (a.op == "nonlazy") return hdx::nonlazy_upper(space, a.k);
        if (a.op == "d") return hdx::differential(space, a.k);
        return hdx::codifferential(space, a.k);
    }();

    hdx::FactorizationReport frep = hdx::verify_factorizations(space, a.k);
    const bool pass = frep.ok(1e-10);
    manifest.checks_total = 1;
    manifest.checks_passed = pass ? 1 : 0;

    Json report;
    report["manifest"] = hdx::manifest_to_json(manifest);
    Json meta;
    meta["op"] = a.op;
    meta["k"] = a.k;
    meta["rows"] = static_cast<int>(op.mat.rows());
    meta["cols"] = static_cast<int>(op.mat.cols());
    report["operator"] = std::move(meta);
    report["factorization"] = hdx::factorization_to_json(frep);

    if (!a.dump.empty()) {
        const std::string matrix_path = a.dump + ".matrix.csv";
        const std::string rows_path = a.dump + ".rows.csv";
        const std::string cols_path = a.dump + ".cols.csv";
        hdx::save_text_file(matrix_path, hdx::matrix_to_csv(op.mat));
        hdx::save_text_file(
            rows_path, hdx::face_legend_csv(space->complex, op.target_dim()));
        hdx::save_text_file(
            cols_path, hdx::face_legend_csv(space->complex, op.source_dim()));
        Json dumped;
        dumped["matrix"] = matrix_path;
        dumped["row_legend"] = rows_path;
        dumped["col_legend"] = cols_path;
        report["dump"] = std::move(dumped);
    }
    emit_json(report, a.out);

    if (!pass) {
        std::cerr << "factorization residuals exceed 1e-10: updown="
                  << fmt17(frep.updown_residual)
                  << " downup=" << fmt17(frep.downup_residual)
                  << " adjointness=" << fmt17(frep.adjointness_residual)
                  << "\n";
        return 1;
    }
    return 0;
}

// ---- decompose ---------------------------------------------------------

struct DecomposeArgs {
    std::string input;
    int k = -1;
    std::string cochain_file;
    int random_count = 0;
    std::uint64_t seed = 0;
    std::string solver = "svd";
    std::string out;
};

int run_decompose(const DecomposeArgs& a, hdx::RunManifest manifest) {
    Json cj = load_input(a.input, manifest);
    hdx::WeightedComplexPtr space = hdx::complex_from_json(cj);
    hdx::SpectralProfile prof = hdx::profile(space);

    hdx::DecomposeOptions opts;
    if (a.solver == "ridge") {
        opts.solver = hdx::DecomposeOptions::Solver::Ridge;
    }

    std::vector<hdx::Cochain> inputs;
    if (!a.cochain_file.empty()) {
        Json phij = load_input(a.cochain_file, manifest);
        hdx::Cochain phi = hdx::cochain_from_json(phij, space);
        if (a.k >= 0 && a.k != phi.k) {
            throw hdx::DomainError("--k disagrees with the cochain file");
        }
        inputs.push_back(std::move(phi));
    } else {
        if (a.k < 0) {
            throw hdx::DomainError("--k is required with --random");
        }
        manifest.seeds.push_back(a.seed);
        hdx::rng::Engine engine(a.seed);
        for (int i = 0; i < a.random_count; ++i) {
            Eigen::VectorXd v(space->complex.count(a.k));
            for (int j = 0; j < v.size(); ++j) {
                v[j] = hdx::rng::gaussian(engine);
            }
            inputs.push_back(hdx::project_c0(
                hdx::make_cochain(space, a.k, std::move(v))));
        }
    }

    Json runs = Json::array();
    int passed = 0;
    double worst = 0.0;
    for (const hdx::Cochain& phi : inputs) {
        hdx::DecompositionResult res = hdx::decompose(phi, opts);
        hdx::DecompositionVerification ver =
            hdx::verify_decomposition(res, prof);
        const double residual =
            std::max({ver.identity1_residual, ver.identity2_residual,
                      ver.energy_residual, ver.max_correction_residual});
        const bool ok = residual <= 1e-8 && ver.max_c0_residual <= 1e-9 &&
                        ver.upper_ok && ver.lower_ok;
        passed += ok ? 1 : 0;
        worst = std::max(worst, residual);
        Json row = hdx::ladder_to_json(res, &ver);
        row["pass"] = ok;
        runs.push_back(std::move(row));
    }
    manifest.checks_total = static_cast<int>(inputs.size());
    manifest.checks_passed = passed;

    Json report;
    report["manifest"] = hdx::manifest_to_json(manifest);
    report["solver"] = a.solver;
    report["runs"] = std::move(runs);
    emit_json(report, a.out);

    if (passed != manifest.checks_total) {
        std::cerr << "ladder identities violated; worst residual "
                  << fmt17(worst) << "\n";
        return 1;
    }
    return 0;
}

// ---- mixing ------------------------------------------------------------

struct MixingArgs {
    std::string input;
    std::vector<std::string> theorems;
    std::string set_file;
    std::string out;
};

int run_mixing(const MixingArgs& a, hdx::RunManifest manifest) {
    Json cj = load_input(a.input, manifest);
    hdx::WeightedComplexPtr space = hdx::complex_from_json(cj);
    hdx::SpectralProfile prof = hdx::profile(space);

    std::vector<std::string> ids = a.theorems;
    if (ids.empty()) {
        ids = {hdx::kBoundLazyUpper, hdx::kBoundNonLazyNorm,
               hdx::kBoundNonLazyBottom, hdx::kBoundNonLazyFinal};
        if (!a.set_file.empty()) ids.push_back(hdx::kBoundBinary);
    }

    bool want_binary = false;
    std::vector<std::string> spectral_ids;
    for (const auto& id : ids) {
        if (id == hdx::kBoundBinary) {
            want_binary = true;
        } else {
            spectral_ids.push_back(id);
        }
    }
    if (want_binary && a.set_file.empty()) {
        throw hdx::DomainError("the indicator bound 7.3 needs --set FILE");
    }

    Json report;
    int total = 0;
    int passed = 0;

    std::vector<hdx::MixingCheck> checks;
    if (!spectral_ids.empty()) {
        checks = hdx::check_mixing_bounds(space, prof, spectral_ids);
        for (const auto& chk : checks) {
            if (chk.advisory) continue;
            ++total;
            passed += chk.pass ? 1 : 0;
        }
    }

    Json binary;
    if (want_binary) {
        Json sj = load_input(a.set_file, manifest);
        hdx::FaceSet A = hdx::face_set_from_json(sj, space);
        hdx::BinaryMixingCheck bc = hdx::check_binary_mixing(space, A, prof);
        ++total;
        passed += bc.pass ? 1 : 0;
        binary = hdx::binary_mixing_to_json(bc);
    }

    manifest.checks_total = total;
    manifest.checks_passed = passed;
    report["manifest"] = hdx::manifest_to_json(manifest);
    report["lambda_one_sided"] = prof.lambda_one_sided;
    report["lambda_two_sided"] = prof.lambda_two_sided;
    if (!spectral_ids.empty()) {
        report["bounds"] = hdx::mixing_to_json(checks);
    }
    if (want_binary) report["indicator_bound"] = std::move(binary);
    emit_json(report, a.out);

    if (passed != total) {
        for (const auto& chk : checks) {
            if (!chk.advisory && !chk.pass) {
                std::cerr << chk.theorem_id << " k=" << chk.k << " achieved="
                          << fmt17(chk.achieved)
                          << " bound=" << fmt17(chk.bound) << "\n";
            }
        }
        return 1;
    }
    return 0;
}

// ---- suite -------------------------------------------------------------

int run_suite(const std::string& out, hdx::RunManifest manifest) {
    hdx::SuiteResult res = hdx::run_acceptance_suite();
    manifest.checks_total = static_cast<int>(res.criteria.size());
    for (const auto& c : res.criteria) {
        manifest.checks_passed += c.pass ? 1 : 0;
        std::cerr << (c.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name
                  << ": " << c.detail << "\n";
    }
    Json report;
    report["manifest"] = hdx::manifest_to_json(manifest);
    report["criteria"] = res.report["criteria"];
    report["all_pass"] = res.all_pass;
    emit_json(report, out);
    return res.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "weighted simplicial complexes, high order walks, and verification "
        "reports"};
    app.set_version_flag("--version", HDX_TOOL_VERSION);
    app.require_subcommand(1);

    GenArgs gen_args;
    auto* gen = app.add_subcommand("gen", "generate a fixture complex");
    gen->add_option("--kind", gen_args.kind, "generator family")
        ->required()
        ->check(CLI::IsMember(
            {"complete", "random-pure", "regular-graph-matching"}));
    gen->add_option("--m", gen_args.m, "vertex count");
    gen->add_option("--n", gen_args.n, "dimension");
    gen->add_option("--p", gen_args.p, "keep probability");
    gen->add_option("--v", gen_args.v, "graph vertex count");
    gen->add_option("--s", gen_args.s, "graph degree");
    gen->add_option("--seed", gen_args.seed, "random seed");
    gen->add_option("-o,--output", gen_args.out, "output path");

    std::string validate_input;
    std::string validate_out;
    auto* val = app.add_subcommand("validate", "check a complex file");
    val->add_option("input", validate_input, "complex JSON")->required();
    val->add_option("-o,--output", validate_out, "report path");

    std::string spectra_input;
    std::string spectra_out;
    std::string sweep_range;
    int sweep_n = 2;
    auto* spec = app.add_subcommand("spectra", "link spectral profile");
    spec->add_option("input", spectra_input, "complex JSON");
    spec->add_option("--sweep", sweep_range,
                     "complete-complex sweep, e.g. m=5..9 (CSV output)");
    spec->add_option("--n", sweep_n, "sweep dimension");
    spec->add_option("-o,--output", spectra_out, "report path");

    WalkArgs walk_args;
    auto* walk = app.add_subcommand("walk", "assemble a walk operator");
    walk->add_option("input", walk_args.input, "complex JSON")->required();
    walk->add_option("--k", walk_args.k, "operator level")->required();
    walk->add_option("--op", walk_args.op, "operator")
        ->required()
        ->check(CLI::IsMember({"upper", "lower", "nonlazy", "d", "dstar"}));
    walk->add_option("--dump", walk_args.dump,
                     "path prefix for matrix and face-legend CSV dumps");
    walk->add_option("-o,--output", walk_args.out, "report path");

    DecomposeArgs dec_args;
    auto* dec = app.add_subcommand("decompose", "run the cochain ladder");
    dec->add_option("input", dec_args.input, "complex JSON")->required();
    dec->add_option("--k", dec_args.k, "cochain degree");
    auto* from_file =
        dec->add_option("--cochain", dec_args.cochain_file, "cochain JSON");
    auto* from_rng = dec->add_option("--random", dec_args.random_count,
                                     "number of random inputs");
    dec->add_option("--seed", dec_args.seed, "random seed");
    dec->add_option("--solver", dec_args.solver, "preimage regularization")
        ->check(CLI::IsMember({"svd", "ridge"}));
    dec->add_option("-o,--output", dec_args.out, "report path");
    from_file->excludes(from_rng);

    MixingArgs mix_args;
    auto* mix = app.add_subcommand("mixing", "check mixing bounds");
    mix->add_option("input", mix_args.input, "complex JSON")->required();
    mix->add_option("--theorems", mix_args.theorems,
                    "bound ids: 6.5.1, 6.5.2, 6.5.2-ip, 6.6, 7.3")
        ->delimiter(',');
    mix->add_option("--set", mix_args.set_file, "face-set JSON for 7.3");
    mix->add_option("-o,--output", mix_args.out, "report path");

    std::string suite_out;
    auto* suite = app.add_subcommand("suite", "run the acceptance battery");
    suite->add_option("-o,--output", suite_out, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    StopWatch watch;
    try {
        int rc = 2;
        hdx::RunManifest manifest = make_manifest(argc, argv);
        if (gen->parsed()) {
            rc = run_gen(gen_args);
        } else if (val->parsed()) {
            rc = run_validate(validate_input, validate_out, manifest);
        } else if (spec->parsed()) {
            if (!sweep_range.empty()) {
                rc = run_sweep(sweep_range, sweep_n, spectra_out);
            } else if (spectra_input.empty()) {
                throw hdx::DomainError("spectra needs an input or --sweep");
            } else {
                rc = run_spectra(spectra_input, spectra_out, manifest);
            }
        } else if (walk->parsed()) {
            rc = run_walk(walk_args, manifest);
        } else if (dec->parsed()) {
            if (dec_args.cochain_file.empty() && dec_args.random_count <= 0) {
                throw hdx::DomainError(
                    "decompose needs --cochain FILE or --random N");
            }
            rc = run_decompose(dec_args, manifest);
        } else if (mix->parsed()) {
            rc = run_mixing(mix_args, manifest);
        } else if (suite->parsed()) {
            rc = run_suite(suite_out, manifest);
        }
        report_duration(watch);
        return rc;
    } catch (const hdx::InternalError& e) {
        std::cerr << "internal check failure: " << e.what() << "\n";
        report_duration(watch);
        return 1;
    } catch (const hdx::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        report_duration(watch);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        report_duration(watch);
        return 2;
    }
}
