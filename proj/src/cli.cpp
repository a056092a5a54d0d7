#include "kpath/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <thread>

#include <unistd.h>

#include "kpath/error.hpp"
#include "kpath/extremal.hpp"
#include "kpath/graph6.hpp"
#include "kpath/kpath_graph.hpp"
#include "kpath/sequence.hpp"
#include "kpath/spectra.hpp"

namespace kpath::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int exit_code_for(Errc code)
{
    switch (code) {
    case Errc::io_error:
    case Errc::no_convergence:
    case Errc::budget_exceeded:
    case Errc::oracle_too_large:
        return exit_internal;
    default:
        return exit_usage;
    }
}

const std::map<std::string, ObjectiveKind> objective_names{
    {"alg-conn", ObjectiveKind::alg_conn},
    {"alpha-index", ObjectiveKind::alpha_index},
    {"alpha-lambda2", ObjectiveKind::alpha_lambda2},
    {"alpha-runner-up", ObjectiveKind::alpha_runner_up},
};

const std::map<std::string, Direction> direction_names{{"max", Direction::max}, {"min", Direction::min}};

const std::map<std::string, MatrixKind> matrix_names{
    {"laplacian", MatrixKind::laplacian},
    {"signless", MatrixKind::signless},
    {"adjacency", MatrixKind::adjacency},
    {"a-alpha", MatrixKind::a_alpha},
};

const std::map<std::string, TableFormat> format_names{{"csv", TableFormat::csv}, {"tsv", TableFormat::tsv}};

struct RunConfig {
    int k = 0;
    bool literal_lambda2 = false;
    int n = 0;
    int n_min = -1;
    int n_max = 0;
    std::string out_path;
    std::vector<std::string> objectives;
    std::string direction = "max";
    std::optional<double> alpha;
    std::vector<double> alphas;
    std::string format = "csv";
    int precision = 4;
    unsigned threads = 0;
    std::size_t budget = SearchOptions{}.budget;
    bool no_header = false;
    std::string g6;
    std::string matrix;
};

SearchOptions search_options(const RunConfig& cfg)
{
    SearchOptions o;
    o.threads = cfg.threads;
    o.budget = cfg.budget;
    return o;
}

// Writes through a sibling temp file renamed into place on success.
class AtomicFile {
public:
    explicit AtomicFile(std::filesystem::path target)
        : target_(std::move(target)), temp_(target_.string() + ".tmp." + std::to_string(::getpid()))
    {
        stream_.open(temp_, std::ios::binary | std::ios::trunc);
        if (!stream_) throw Error(Errc::io_error, "cannot open " + temp_.string() + " for writing");
    }
    AtomicFile(const AtomicFile&) = delete;
    AtomicFile& operator=(const AtomicFile&) = delete;
    ~AtomicFile()
    {
        if (!committed_) {
            stream_.close();
            std::error_code ignored;
            std::filesystem::remove(temp_, ignored);
        }
    }

    std::ostream& stream() { return stream_; }

    void commit()
    {
        stream_.close();
        if (!stream_) throw Error(Errc::io_error, "write to " + temp_.string() + " failed");
        std::error_code ec;
        std::filesystem::rename(temp_, target_, ec);
        if (ec) throw Error(Errc::io_error, "rename to " + target_.string() + ": " + ec.message());
        committed_ = true;
    }

private:
    std::filesystem::path target_;
    std::filesystem::path temp_;
    std::ofstream stream_;
    bool committed_ = false;
};

std::uint64_t write_list(int k, int n, std::ostream& out)
{
    std::uint64_t count = 0;
    auto stream = enumerate(k, n);
    while (auto seq = stream.next()) {
        out << encode_graph6(build_graph(*seq, n)) << '\n';
        ++count;
    }
    return count;
}

int cmd_generate(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    // Validate before touching the filesystem.
    enumerate(cfg.k, cfg.n);
    if (cfg.n > graph6_short_form_max)
        throw Error(Errc::order_too_large, "graph6 lists support n <= " + std::to_string(graph6_short_form_max));

    std::uint64_t count = 0;
    if (cfg.out_path.empty()) {
        count = write_list(cfg.k, cfg.n, out);
    } else {
        AtomicFile file(cfg.out_path);
        count = write_list(cfg.k, cfg.n, file.stream());
        file.commit();
    }
    err << count << '\n';
    return exit_ok;
}

int cmd_count(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    enumerate(cfg.k, cfg.n);
    if (closed_form_available(cfg.k, cfg.n)) {
        out << count_closed_form(cfg.k, cfg.n).count.str() << '\n';
        err << "source: closed form\n";
        return exit_ok;
    }
    std::uint64_t count = 0;
    auto stream = enumerate(cfg.k, cfg.n);
    while (stream.next()) ++count;
    out << count << '\n';
    err << "source: enumeration (no closed form for k=" << cfg.k << ", n=" << cfg.n << ")\n";
    return exit_ok;
}

std::vector<Objective> parse_objectives(const RunConfig& cfg, bool single)
{
    const Direction dir = direction_names.at(cfg.direction);
    std::vector<Objective> out;
    for (const auto& name : cfg.objectives) {
        const ObjectiveKind kind = objective_names.at(name);
        if (kind == ObjectiveKind::alg_conn) {
            if (single && cfg.alpha) throw UsageError("--alpha does not apply to alg-conn");
            out.push_back(Objective::algebraic_connectivity(dir));
            continue;
        }
        std::vector<double> alphas;
        if (single) {
            if (!cfg.alpha) throw UsageError("--alpha is required for " + name);
            alphas.push_back(*cfg.alpha);
        } else {
            alphas = cfg.alphas.empty() ? standard_alphas() : cfg.alphas;
        }
        for (double a : alphas) {
            if (!(a >= 0.0 && a <= 1.0)) throw UsageError("alpha " + std::to_string(a) + " outside [0, 1]");
            out.push_back(Objective{kind, dir, a});
        }
    }
    return out;
}

int emit_records(const RunConfig& cfg, const std::vector<ExtremalRecord>& records, std::ostream& out)
{
    out << format_records(records, format_names.at(cfg.format), cfg.precision, !cfg.no_header);
    return exit_ok;
}

int cmd_search(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto objectives = parse_objectives(cfg, true);
    enumerate(cfg.k, cfg.n);
    const auto records = search_many(cfg.k, cfg.n, objectives, search_options(cfg));
    err << records.front().graphs_examined << " graphs examined\n";
    return emit_records(cfg, records, out);
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const auto objectives = parse_objectives(cfg, false);
    if (cfg.n_min < 0) throw UsageError("--n-min is required");
    if (cfg.n_max < cfg.n_min) throw UsageError("--n-max must be at least --n-min");
    enumerate(cfg.k, cfg.n_min);
    std::vector<ExtremalRecord> records;
    for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
        auto part = search_many(cfg.k, n, objectives, search_options(cfg));
        err << "n=" << n << ": " << part.front().graphs_examined << " graphs\n";
        std::move(part.begin(), part.end(), std::back_inserter(records));
    }
    return emit_records(cfg, records, out);
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    const int n_min = cfg.n_min < 0 ? cfg.k + 1 : cfg.n_min;
    if (cfg.n_max < n_min) throw UsageError("--n-max must be at least " + std::to_string(n_min));
    for (double a : cfg.alphas)
        if (!(a >= 0.0 && a <= 1.0)) throw UsageError("alpha " + std::to_string(a) + " outside [0, 1]");
    const auto alphas = cfg.alphas.empty() ? standard_alphas() : cfg.alphas;
    const auto report = verify_conjectures(cfg.k, n_min, cfg.n_max, alphas, search_options(cfg),
                                           cfg.literal_lambda2 ? SecondObjective::literal_lambda2
                                                               : SecondObjective::runner_up);
    out << report.to_text();
    if (!report.passed()) err << report.failures() << " conjecture checks failed\n";
    return report.passed() ? exit_ok : exit_verification_failed;
}

int cmd_spectrum(const RunConfig& cfg, std::ostream& out, std::ostream&)
{
    const MatrixKind kind = matrix_names.at(cfg.matrix);
    if (kind == MatrixKind::a_alpha && !cfg.alpha) throw UsageError("--alpha is required for a-alpha");
    if (kind != MatrixKind::a_alpha && cfg.alpha) throw UsageError("--alpha only applies to a-alpha");
    const Graph g = decode_graph6(cfg.g6);
    const Spectrum s = eigenvalues(build_matrix(g, kind, cfg.alpha.value_or(0.0)));
    for (double v : s.values) out << format_value(v, 6) << '\n';
    return exit_ok;
}

template <typename Map>
std::vector<std::string> keys(const Map& m)
{
    std::vector<std::string> out;
    for (const auto& [key, value] : m) out.push_back(key);
    return out;
}

void add_search_flags(CLI::App* sub, RunConfig& cfg)
{
    sub->add_option("--direction", cfg.direction, "max or min")->check(CLI::IsMember(keys(direction_names)));
    sub->add_option("--format", cfg.format, "csv or tsv")->check(CLI::IsMember(keys(format_names)));
    sub->add_option("--precision", cfg.precision, "decimals in the value column")->check(CLI::Range(0, 17));
    sub->add_flag("--no-header", cfg.no_header, "omit the header row");
    sub->add_option("--threads", cfg.threads, "worker threads (default: all cores)")->check(CLI::PositiveNumber);
    sub->add_option("--budget", cfg.budget, "maximum graphs per order")->check(CLI::PositiveNumber);
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Enumerate k-path graphs and search their Laplacian and A_alpha spectra", "kpath"};
    app.require_subcommand(1);

    auto* generate = app.add_subcommand("generate", "write every non-isomorphic k-path graph as graph6, one per line");
    generate->add_option("--k", cfg.k)->required();
    generate->add_option("--n", cfg.n)->required();
    generate->add_option("--out", cfg.out_path, "output file (default: stdout)");

    auto* count = app.add_subcommand("count", "number of non-isomorphic k-path graphs of order n");
    count->add_option("--k", cfg.k)->required();
    count->add_option("--n", cfg.n)->required();

    auto* search_cmd = app.add_subcommand("search", "extremal graph for one objective");
    search_cmd->add_option("--k", cfg.k)->required();
    search_cmd->add_option("--n", cfg.n)->required();
    search_cmd->add_option("--objective", cfg.objectives)
        ->required()
        ->expected(1)
        ->check(CLI::IsMember(keys(objective_names)));
    search_cmd->add_option("--alpha", cfg.alpha, "alpha for the alpha objectives");
    add_search_flags(search_cmd, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "extremal graphs over a range of orders");
    sweep_cmd->add_option("--k", cfg.k)->required();
    sweep_cmd->add_option("--n-min", cfg.n_min)->required();
    sweep_cmd->add_option("--n-max", cfg.n_max)->required();
    sweep_cmd->add_option("--objective", cfg.objectives, "repeatable")
        ->required()
        ->check(CLI::IsMember(keys(objective_names)));
    sweep_cmd->add_option("--alphas", cfg.alphas, "comma separated (default 0.1..0.9)")->delimiter(',');
    add_search_flags(sweep_cmd, cfg);

    auto* verify = app.add_subcommand("verify", "check the extremal-family conjectures exhaustively");
    verify->add_option("--k", cfg.k)->required();
    verify->add_option("--n-min", cfg.n_min, "default k+1");
    verify->add_option("--n-max", cfg.n_max)->required();
    verify->add_option("--alphas", cfg.alphas, "comma separated (default 0.1..0.9)")->delimiter(',');
    verify->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    verify->add_option("--budget", cfg.budget)->check(CLI::PositiveNumber);
    verify->add_flag("--literal-lambda2", cfg.literal_lambda2,
                     "check the second eigenvalue of A_alpha instead of the runner-up alpha-index");

    auto* spectrum = app.add_subcommand("spectrum", "ascending eigenvalues of a graph matrix");
    spectrum->add_option("--g6", cfg.g6)->required();
    spectrum->add_option("--matrix", cfg.matrix)->required()->check(CLI::IsMember(keys(matrix_names)));
    spectrum->add_option("--alpha", cfg.alpha);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*generate) return cmd_generate(cfg, out, err);
        if (*count) return cmd_count(cfg, out, err);
        if (*search_cmd) return cmd_search(cfg, out, err);
        if (*sweep_cmd) return cmd_sweep(cfg, out, err);
        if (*verify) return cmd_verify(cfg, out, err);
        if (*spectrum) return cmd_spectrum(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    std::vector<const char*> argv{"kpath"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace kpath::cli
