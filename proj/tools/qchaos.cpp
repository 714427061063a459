// Reproducible experiment runner: every diagnostic is a subcommand with a
// seeded configuration, CSV (or JSON) data files and a JSON metadata
// sidecar. Exit codes: 0 success, 1 numerical failure, 2 argument error.

#include "table_io.hpp"

#include "qchaos/algorithms.hpp"
#include "qchaos/chaometrics.hpp"
#include "qchaos/dynamics.hpp"
#include "qchaos/eig.hpp"
#include "qchaos/errors.hpp"
#include "qchaos/linalg.hpp"
#include "qchaos/parallel.hpp"
#include "qchaos/perturbations.hpp"
#include "qchaos/rng.hpp"
#include "qchaos/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <Eigen/SVD>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qchaos;
using json = nlohmann::json;

struct Options {
    std::string algorithm = "grover";
    int n = 5;
    int xi = 2;
    std::optional<double> epsilon; // figure default depends on subcommand/kind
    std::string kind;              // default depends on algorithm
    int iterations = 500;
    int ensemble = 50;
    int bins = 50;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "csv";
    int n_min = 4;
    int n_max = 10;

    bool json_format() const { return format == "json"; }
};

struct ArgumentError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_common(CLI::App* cmd, Options& opt, bool with_algorithm = true) {
    if (with_algorithm)
        cmd->add_option("--algorithm", opt.algorithm, "grover or qft")
            ->check(CLI::IsMember({"grover", "qft"}));
    cmd->add_option("--n", opt.n, "qubit count");
    cmd->add_option("--seed", opt.seed, "base seed");
    cmd->add_option("--out", opt.out, "output base path (default: subcommand name)");
    cmd->add_option("--format", opt.format, "data file format")
        ->check(CLI::IsMember({"csv", "json"}));
}

PerturbationKind parse_kind(const std::string& s) {
    if (s == "independent") return PerturbationKind::independent;
    if (s == "digital") return PerturbationKind::digital;
    if (s == "qft-phase") return PerturbationKind::qft_phase;
    throw ArgumentError("unknown perturbation kind: " + s);
}

std::string default_kind(const std::string& algorithm) {
    return algorithm == "qft" ? "qft-phase" : "independent";
}

Field field_for(const std::string& algorithm) {
    return algorithm == "qft" ? Field::cplx : Field::real;
}

json base_metadata(const std::string& command, const Options& opt) {
    json meta;
    meta["command"] = command;
    meta["n"] = opt.n;
    meta["seed"] = opt.seed;
    meta["format"] = opt.format;
    meta["out"] = opt.out;
    meta["generator"] = kGeneratorFamily;
    meta["tool_version"] = kToolVersion;
    return meta;
}

void write_metadata(const json& meta, const std::string& out_base) {
    std::ofstream f(out_base + "_meta.json", std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + out_base + "_meta.json");
    f << meta.dump(2) << "\n";
}

ComplexMatrix algorithm_matrix(const Options& opt) {
    if (opt.algorithm == "grover") return build_grover(GroverSpec(opt.n, opt.xi));
    return build_qft_closed(opt.n);
}

// spectrum: eigenphases and unfolded circular spacings.
int run_spectrum(Options& opt) {
    const ComplexMatrix u = algorithm_matrix(opt);
    const EigenSystem es = eig_unitary(u, 0.0, opt.seed);
    const SpacingSample spacings = eigenphase_spacings(es);

    io::Table phases{{"index", "phase"}, {}};
    for (int i = 0; i < es.dim(); ++i) phases.add_row(i, es.phases[i]);
    io::write_table(phases, opt.out + "_phases", opt.json_format());

    io::Table sp{{"index", "spacing"}, {}};
    for (std::size_t i = 0; i < spacings.spacings.size(); ++i)
        sp.add_row(static_cast<int>(i), spacings.spacings[i]);
    io::write_table(sp, opt.out + "_spacings", opt.json_format());

    json meta = base_metadata("spectrum", opt);
    meta["algorithm"] = opt.algorithm;
    if (opt.algorithm == "grover") {
        meta["xi"] = opt.xi;
        meta["p"] = GroverSpec(opt.n, opt.xi).p;
    }
    write_metadata(meta, opt.out);
    return 0;
}

// evec-stats: rescaled intensities vs the Porter-Thomas law.
int run_evec_stats(Options& opt) {
    const ComplexMatrix u = algorithm_matrix(opt);
    const EigenSystem es = eig_unitary(u, 0.0, opt.seed);
    std::vector<double> ys = eigenvector_component_sample(es);
    std::sort(ys.begin(), ys.end());

    io::Table t{{"y", "empirical_cdf", "pt_cdf"}, {}};
    const double m = static_cast<double>(ys.size());
    for (std::size_t i = 0; i < ys.size(); ++i)
        t.add_row(ys[i], static_cast<double>(i + 1) / m, porter_thomas_cdf(ys[i]));
    io::write_table(t, opt.out + "_evec", opt.json_format());

    json meta = base_metadata("evec-stats", opt);
    meta["algorithm"] = opt.algorithm;
    if (opt.algorithm == "grover") meta["xi"] = opt.xi;
    meta["ks_vs_porter_thomas"] = ks_distance(ys, porter_thomas_cdf);
    write_metadata(meta, opt.out);
    return 0;
}

// sym-split: symmetric/antisymmetric means over a qubit range.
int run_sym_split(Options& opt) {
    if (opt.n_min < 2 || opt.n_max < opt.n_min)
        throw ArgumentError("need 2 <= n-min <= n-max");
    if (opt.xi < 0 || opt.xi >= dim_for_qubits(opt.n_min))
        throw ArgumentError("xi must be a valid index for the smallest register");

    io::Table t{{"n", "N", "mean_sym", "mean_antisym"}, {}};
    std::vector<double> dims, syms, antis;
    for (int n = opt.n_min; n <= opt.n_max; ++n) {
        const ComplexMatrix u = build_grover(GroverSpec(n, opt.xi));
        const auto [sym, antisym] = sym_antisym_split(u);
        t.add_row(n, dim_for_qubits(n), sym, antisym);
        dims.push_back(dim_for_qubits(n));
        syms.push_back(sym);
        antis.push_back(antisym);
    }
    io::write_table(t, opt.out + "_symsplit", opt.json_format());

    json meta = base_metadata("sym-split", opt);
    meta["algorithm"] = "grover";
    meta["xi"] = opt.xi;
    meta["n_min"] = opt.n_min;
    meta["n_max"] = opt.n_max;
    meta["sym_slope"] = log_log_slope(dims, syms);
    meta["antisym_slope"] = log_log_slope(dims, antis);
    write_metadata(meta, opt.out);
    return 0;
}

// overlap: fidelity series of exact vs perturbed propagation + spectrum.
int run_overlap(Options& opt) {
    const std::string kind_name = opt.kind.empty() ? default_kind(opt.algorithm) : opt.kind;
    const PerturbationKind kind = parse_kind(kind_name);
    const double eps = opt.epsilon.value_or(0.1);

    ComplexMatrix u, u_prime;
    if (opt.algorithm == "grover") {
        if (kind != PerturbationKind::independent)
            throw ArgumentError("overlap with --algorithm grover needs --kind independent");
        const GroverSpec spec(opt.n, opt.xi);
        u = build_grover(spec);
        u_prime = perturbed_grover(spec, {kind, eps, derive_seed(opt.seed, 0)});
    } else {
        if (kind != PerturbationKind::qft_phase)
            throw ArgumentError("overlap with --algorithm qft needs --kind qft-phase");
        u = build_qft_closed(opt.n);
        RngStream rng(derive_seed(opt.seed, 0));
        u_prime = perturbed_qft(opt.n, eps, rng);
    }
    const StateVector psi0 =
        random_state(dim_for_qubits(opt.n), field_for(opt.algorithm), derive_seed(opt.seed, 1));

    const OverlapSeries series = overlap_series(u, u_prime, psi0, opt.iterations);
    io::Table fid{{"k", "fidelity"}, {}};
    for (std::size_t i = 0; i < series.fidelities.size(); ++i)
        fid.add_row(series.iterations[i], series.fidelities[i]);
    io::write_table(fid, opt.out + "_fidelity", opt.json_format());

    const auto spectrum = fourier_magnitude(series);
    io::Table spec_t{{"freq", "magnitude"}, {}};
    for (const auto& [freq, mag] : spectrum) spec_t.add_row(freq, mag);
    io::write_table(spec_t, opt.out + "_spectrum", opt.json_format());

    json meta = base_metadata("overlap", opt);
    meta["algorithm"] = opt.algorithm;
    if (opt.algorithm == "grover") meta["xi"] = opt.xi;
    meta["kind"] = kind_name;
    meta["epsilon"] = eps;
    meta["iterations"] = opt.iterations;
    meta["top3_power_mass_ratio"] = spectral_top_mass_ratio(spectrum);
    write_metadata(meta, opt.out);
    return 0;
}

// angles: unfolded pairwise-angle histogram vs the random-vector baseline.
int run_angles(Options& opt) {
    const std::string kind_name = opt.kind.empty() ? default_kind(opt.algorithm) : opt.kind;
    const PerturbationKind kind = parse_kind(kind_name);
    const int dim = dim_for_qubits(opt.n);

    std::vector<ComplexMatrix> matrices;
    double eps = 0.0;
    if (opt.algorithm == "grover" && kind == PerturbationKind::digital) {
        eps = opt.epsilon.value_or(0.1);
        matrices = digital_grover_family(GroverSpec(opt.n, opt.xi), eps,
                                         derive_seed(opt.seed, 0));
    } else if (opt.algorithm == "grover" && kind == PerturbationKind::independent) {
        eps = opt.epsilon.value_or(0.01);
        const GroverSpec spec(opt.n, opt.xi);
        matrices.resize(opt.ensemble);
        parallel_for(opt.ensemble, [&](int i) {
            matrices[i] = perturbed_grover(
                spec, {kind, eps, derive_seed(opt.seed, static_cast<std::uint64_t>(i))});
        });
    } else if (opt.algorithm == "qft" && kind == PerturbationKind::qft_phase) {
        eps = opt.epsilon.value_or(0.01);
        matrices.resize(opt.ensemble);
        parallel_for(opt.ensemble, [&](int i) {
            RngStream rng(derive_seed(opt.seed, static_cast<std::uint64_t>(i)));
            matrices[i] = perturbed_qft(opt.n, eps, rng);
        });
    } else {
        throw ArgumentError("unsupported algorithm/kind combination: " + opt.algorithm + "/" +
                            kind_name);
    }

    const std::uint64_t psi_stream = matrices.size();
    const StateVector psi0 =
        random_state(dim, field_for(opt.algorithm), derive_seed(opt.seed, psi_stream));
    const AngleEnsemble propagated = angle_ensemble(matrices, psi0, opt.bins);
    const AngleEnsemble baseline =
        random_vector_baseline(dim, static_cast<int>(matrices.size()),
                               field_for(opt.algorithm),
                               derive_seed(opt.seed, psi_stream + 1), opt.bins);

    // shared axis covering both unfolded samples
    double lo = std::min(propagated.histogram.bin_edges.front(),
                         baseline.histogram.bin_edges.front());
    double hi = std::max(propagated.histogram.bin_edges.back(),
                         baseline.histogram.bin_edges.back());
    std::vector<double> edges(opt.bins + 1);
    for (int i = 0; i <= opt.bins; ++i) edges[i] = lo + (hi - lo) * i / opt.bins;
    const Histogram hp = histogram_with_edges(propagated.unfolded, edges);
    const Histogram hb = histogram_with_edges(baseline.unfolded, edges);

    io::Table t{{"bin_center", "density", "baseline_density"}, {}};
    for (int i = 0; i < hp.bins(); ++i)
        t.add_row(hp.bin_center(i), hp.densities[i], hb.densities[i]);
    io::write_table(t, opt.out + "_angles", opt.json_format());

    json meta = base_metadata("angles", opt);
    meta["algorithm"] = opt.algorithm;
    if (opt.algorithm == "grover") meta["xi"] = opt.xi;
    meta["kind"] = kind_name;
    meta["epsilon"] = eps;
    meta["ensemble"] = matrices.size();
    meta["bins"] = opt.bins;
    meta["mean_angle"] = propagated.mean_angle;
    meta["baseline_mean_angle"] = baseline.mean_angle;
    meta["pronounced_peaks"] = count_pronounced_peaks(hp);
    write_metadata(meta, opt.out);
    return 0;
}

// error-sweep: normalized matrix error vs strength with log-log fit.
int run_error_sweep(Options& opt) {
    const std::vector<double> epsilons{1e-4, 1e-3, 1e-2, 1e-1};
    const GroverSpec spec(opt.n, opt.xi);
    const auto rows = matrix_error_sweep(spec, epsilons, opt.ensemble, opt.seed);

    io::Table t{{"epsilon", "error"}, {}};
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        t.add_row(row.epsilon, row.normalized_error);
        xs.push_back(row.epsilon);
        ys.push_back(row.normalized_error);
    }
    io::write_table(t, opt.out + "_errors", opt.json_format());

    json meta = base_metadata("error-sweep", opt);
    meta["algorithm"] = "grover";
    meta["xi"] = opt.xi;
    meta["kind"] = "independent";
    meta["samples_per_epsilon"] = opt.ensemble;
    meta["fit_slope"] = log_log_slope(xs, ys);
    write_metadata(meta, opt.out);
    return 0;
}

// roots: distance of the spectrum to the m-th roots of unity, m = 1..8.
int run_roots(Options& opt) {
    const ComplexMatrix u = algorithm_matrix(opt);
    const EigenSystem es = eig_unitary(u, 0.0, opt.seed);

    io::Table t{{"m", "defect"}, {}};
    for (int m = 1; m <= 8; ++m) t.add_row(m, root_of_unity_defect(es, m));
    io::write_table(t, opt.out + "_roots", opt.json_format());

    json meta = base_metadata("roots", opt);
    meta["algorithm"] = opt.algorithm;
    if (opt.algorithm == "grover") meta["xi"] = opt.xi;
    write_metadata(meta, opt.out);
    return 0;
}

// qft-check: construction cross-checks and the gate-cutoff error sweep.
int run_qft_check(Options& opt) {
    const ComplexMatrix circuit = build_qft_circuit(opt.n);
    const ComplexMatrix closed = build_qft_closed(opt.n);
    const ComplexMatrix fourth = closed * closed * closed * closed;
    const int dim = dim_for_qubits(opt.n);

    const EigenSystem es = eig_unitary(closed, 0.0, opt.seed);

    io::Table summary{{"metric", "value"}, {}};
    summary.add_row("circuit_vs_closed_max_abs", max_abs(circuit - closed));
    summary.add_row("fourth_power_vs_identity_max_abs",
                    max_abs(fourth - ComplexMatrix::Identity(dim, dim)));
    summary.add_row("eigenphase_defect_from_fourth_roots", root_of_unity_defect(es, 4));
    summary.add_row("unitarity_defect_circuit", unitarity_defect(circuit));
    io::write_table(summary, opt.out + "_summary", opt.json_format());

    io::Table approx{{"cutoff", "operator_error"}, {}};
    for (int m = 1; m <= opt.n - 1; ++m) {
        const ComplexMatrix a = build_approximate_qft(QftSpec(opt.n, m));
        Eigen::BDCSVD<ComplexMatrix> svd(a - closed);
        approx.add_row(m, svd.singularValues()(0));
    }
    io::write_table(approx, opt.out + "_approx", opt.json_format());

    json meta = base_metadata("qft-check", opt);
    meta["algorithm"] = "qft";
    write_metadata(meta, opt.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Grover/QFT unitaries, their coherent perturbations, and "
                 "spectral/dynamical chaos diagnostics"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* spectrum = app.add_subcommand("spectrum", "eigenphases + unfolded spacings");
    add_common(spectrum, opt);
    spectrum->add_option("--xi", opt.xi, "marked index (grover)");

    CLI::App* evec = app.add_subcommand("evec-stats", "eigenvector intensities vs Porter-Thomas");
    add_common(evec, opt);
    evec->add_option("--xi", opt.xi, "marked index (grover)");

    CLI::App* sym = app.add_subcommand("sym-split", "symmetric/antisymmetric means vs N");
    add_common(sym, opt);
    sym->add_option("--xi", opt.xi, "marked index");
    sym->add_option("--n-min", opt.n_min, "smallest qubit count");
    sym->add_option("--n-max", opt.n_max, "largest qubit count");

    CLI::App* overlap = app.add_subcommand("overlap", "fidelity series + Fourier magnitudes");
    add_common(overlap, opt);
    overlap->add_option("--xi", opt.xi, "marked index (grover)");
    overlap->add_option("--epsilon", opt.epsilon, "perturbation strength");
    overlap->add_option("--kind", opt.kind, "perturbation kind");
    overlap->add_option("--iterations", opt.iterations, "number of applications");

    CLI::App* angles = app.add_subcommand("angles", "unfolded angle histogram + baseline");
    add_common(angles, opt);
    angles->add_option("--xi", opt.xi, "marked index (grover)");
    angles->add_option("--epsilon", opt.epsilon, "perturbation strength");
    angles->add_option("--kind", opt.kind, "independent | digital | qft-phase");
    angles->add_option("--ensemble", opt.ensemble, "ensemble size (independent/qft kinds)");
    angles->add_option("--bins", opt.bins, "histogram bins");

    CLI::App* sweep = app.add_subcommand("error-sweep", "matrix error vs strength (log-log fit)");
    add_common(sweep, opt, false);
    sweep->add_option("--xi", opt.xi, "marked index");
    sweep->add_option("--ensemble", opt.ensemble, "samples per strength")->default_val(20);

    CLI::App* roots = app.add_subcommand("roots", "root-of-unity defects, m = 1..8");
    add_common(roots, opt);
    roots->add_option("--xi", opt.xi, "marked index (grover)");

    CLI::App* qft_check = app.add_subcommand("qft-check", "QFT construction cross-checks");
    add_common(qft_check, opt, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CLI::App* active = app.get_subcommands().front();
    if (opt.out.empty()) opt.out = active->get_name();

    try {
        if (active == spectrum) return run_spectrum(opt);
        if (active == evec) return run_evec_stats(opt);
        if (active == sym) return run_sym_split(opt);
        if (active == overlap) return run_overlap(opt);
        if (active == angles) return run_angles(opt);
        if (active == sweep) return run_error_sweep(opt);
        if (active == roots) return run_roots(opt);
        if (active == qft_check) return run_qft_check(opt);
    } catch (const ArgumentError& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const DimensionMismatch& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const IndexOutOfRange& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const KindMismatch& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const FamilyTooLarge& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
