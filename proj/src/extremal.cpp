#include "kpath/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <sstream>
#include <thread>

#include "kpath/error.hpp"
#include "kpath/graph6.hpp"
#include "kpath/kpath_graph.hpp"
#include "kpath/spectra.hpp"

namespace kpath {

namespace {

std::string alpha_text(double alpha)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", alpha);
    return buf;
}

void check_objective(const Objective& o)
{
    if (o.uses_alpha() && !(o.alpha >= 0.0 && o.alpha <= 1.0))
        throw Error(Errc::alpha_out_of_range, "alpha " + std::to_string(o.alpha) + " outside [0, 1]");
}

// Which eigenvalue of which matrix an objective reads.
enum class Pick { second_smallest, largest, second_largest };

struct MatrixPlan {
    MatrixKind kind;
    double alpha;
};

struct EvalPlan {
    std::vector<MatrixPlan> matrices;
    std::vector<std::size_t> matrix_of;  // per objective
    std::vector<Pick> pick;              // per objective
};

EvalPlan make_plan(std::span<const Objective> objectives)
{
    EvalPlan plan;
    for (const Objective& o : objectives) {
        check_objective(o);
        const MatrixKind kind = o.uses_alpha() ? MatrixKind::a_alpha : MatrixKind::laplacian;
        const double alpha = o.uses_alpha() ? o.alpha : 0.0;
        auto it = std::find_if(plan.matrices.begin(), plan.matrices.end(),
                               [&](const MatrixPlan& m) { return m.kind == kind && m.alpha == alpha; });
        if (it == plan.matrices.end()) {
            plan.matrices.push_back({kind, alpha});
            it = plan.matrices.end() - 1;
        }
        plan.matrix_of.push_back(static_cast<std::size_t>(it - plan.matrices.begin()));
        switch (o.kind) {
        case ObjectiveKind::alg_conn: plan.pick.push_back(Pick::second_smallest); break;
        case ObjectiveKind::alpha_index:
        case ObjectiveKind::alpha_runner_up: plan.pick.push_back(Pick::largest); break;
        case ObjectiveKind::alpha_lambda2: plan.pick.push_back(Pick::second_largest); break;
        }
    }
    return plan;
}

double pick_value(std::span<const double> ascending, Pick pick)
{
    const std::size_t n = ascending.size();
    switch (pick) {
    case Pick::second_smallest: return ascending[1];
    case Pick::largest: return ascending[n - 1];
    case Pick::second_largest: return ascending[n - 2];
    }
    return 0.0;
}

struct Candidate {
    std::size_t index;
    double score;  // value, negated for minimization
    ColorSequence sequence;
};

// Keeps every offered candidate that can still end up in the best level
// (levels == 1) or in one of the two best levels (levels == 2). Both
// running thresholds only grow, so the surviving set after all offers does
// not depend on how the offers were grouped, which makes batch merging exact.
struct Accumulator {
    int levels = 1;
    double best = -std::numeric_limits<double>::infinity();
    double second = -std::numeric_limits<double>::infinity();
    std::vector<Candidate> kept;

    double floor() const { return (levels == 1 ? best : second) - tie_tolerance; }

    void offer(Candidate c)
    {
        if (c.score < floor()) return;
        bool changed = false;
        if (c.score > best) {
            best = c.score;
            changed = true;
        }
        if (levels == 2) {
            if (changed) {
                for (const Candidate& t : kept)
                    if (t.score < best - tie_tolerance) second = std::max(second, t.score);
            } else if (c.score < best - tie_tolerance && c.score > second) {
                second = c.score;
                changed = true;
            }
        }
        kept.push_back(std::move(c));
        if (changed) std::erase_if(kept, [&](const Candidate& t) { return t.score < floor(); });
    }

    void merge(Accumulator&& other)
    {
        for (Candidate& c : other.kept) offer(std::move(c));
    }

    // Candidates of the requested level, in offer order.
    std::vector<const Candidate*> result() const
    {
        std::vector<const Candidate*> top;
        std::vector<const Candidate*> below;
        for (const Candidate& c : kept) (c.score >= best - tie_tolerance ? top : below).push_back(&c);
        return levels == 2 && !below.empty() ? below : top;
    }
};

int levels_for(const Objective& o)
{
    return o.kind == ObjectiveKind::alpha_runner_up ? 2 : 1;
}

struct Batch {
    std::size_t first_index = 0;
    std::vector<ColorSequence> sequences;
};

void process_batch(const Batch& batch, int n, const EvalPlan& plan, std::span<const Objective> objectives,
                   std::vector<Accumulator>& acc)
{
    const auto order = static_cast<std::size_t>(n);
    std::vector<double> work(order * order);
    std::vector<std::vector<double>> spectra(plan.matrices.size(), std::vector<double>(order));
    for (std::size_t b = 0; b < batch.sequences.size(); ++b) {
        const ColorSequence& seq = batch.sequences[b];
        const Graph g = build_graph(seq, n);
        for (std::size_t m = 0; m < plan.matrices.size(); ++m) {
            const SymmetricMatrix matrix = build_matrix(g, plan.matrices[m].kind, plan.matrices[m].alpha);
            std::copy(matrix.data().begin(), matrix.data().end(), work.begin());
            jacobi_eigenvalues(work, n, spectra[m]);
        }
        for (std::size_t o = 0; o < objectives.size(); ++o) {
            const double value = pick_value(spectra[plan.matrix_of[o]], plan.pick[o]);
            const double score = objectives[o].direction == Direction::max ? value : -value;
            acc[o].offer(Candidate{batch.first_index + b, score, seq});
        }
    }
}

unsigned resolve_threads(unsigned requested)
{
    if (requested > 0) return requested;
    return std::max(1U, std::thread::hardware_concurrency());
}

} // namespace

std::string_view objective_kind_name(ObjectiveKind kind) noexcept
{
    switch (kind) {
    case ObjectiveKind::alg_conn: return "alg-conn";
    case ObjectiveKind::alpha_index: return "alpha-index";
    case ObjectiveKind::alpha_lambda2: return "alpha-lambda2";
    case ObjectiveKind::alpha_runner_up: return "alpha-runner-up";
    }
    return "unknown";
}

std::string_view direction_name(Direction d) noexcept
{
    return d == Direction::max ? "max" : "min";
}

std::string Objective::label() const
{
    std::string out(objective_kind_name(kind));
    if (uses_alpha()) out += "(" + alpha_text(alpha) + ")";
    out += "/";
    out += direction_name(direction);
    return out;
}

double evaluate(const Graph& g, const Objective& objective)
{
    check_objective(objective);
    switch (objective.kind) {
    case ObjectiveKind::alg_conn: return algebraic_connectivity(g);
    case ObjectiveKind::alpha_index:
    case ObjectiveKind::alpha_runner_up: return alpha_index(g, objective.alpha);
    case ObjectiveKind::alpha_lambda2: return second_alpha_eigenvalue(g, objective.alpha);
    }
    return 0.0;
}

std::vector<ExtremalRecord> search_many(int k, int n, std::span<const Objective> objectives,
                                        const SearchOptions& options)
{
    const EvalPlan plan = make_plan(objectives);
    if (n > max_order) throw Error(Errc::order_too_large, "order " + std::to_string(n));
    if (closed_form_available(k, n)) {
        const BigInt expected = count_closed_form(k, n).count;
        if (expected > options.budget)
            throw Error(Errc::budget_exceeded, expected.str() + " graphs exceed the budget of " +
                                                   std::to_string(options.budget));
    }
    if (n < 2 && !objectives.empty()) throw Error(Errc::invalid_order, "objectives need at least 2 vertices");

    auto stream = enumerate(k, n);
    const unsigned threads = resolve_threads(options.threads);
    const std::size_t batch_size = std::max<std::size_t>(1, options.batch_size);

    const auto fresh = [&] {
        std::vector<Accumulator> acc(objectives.size());
        for (std::size_t o = 0; o < objectives.size(); ++o) acc[o].levels = levels_for(objectives[o]);
        return acc;
    };
    std::vector<Accumulator> total = fresh();
    std::size_t examined = 0;
    bool exhausted = false;
    while (!exhausted) {
        std::vector<Batch> round;
        for (unsigned t = 0; t < threads && !exhausted; ++t) {
            Batch batch;
            batch.first_index = examined;
            while (batch.sequences.size() < batch_size) {
                auto seq = stream.next();
                if (!seq) {
                    exhausted = true;
                    break;
                }
                batch.sequences.push_back(std::move(*seq));
            }
            examined += batch.sequences.size();
            if (examined > options.budget)
                throw Error(Errc::budget_exceeded, "more than " + std::to_string(options.budget) + " graphs");
            if (!batch.sequences.empty()) round.push_back(std::move(batch));
        }

        std::vector<std::vector<Accumulator>> partial;
        for (std::size_t b = 0; b < round.size(); ++b) partial.push_back(fresh());
        if (round.size() <= 1) {
            for (std::size_t b = 0; b < round.size(); ++b) process_batch(round[b], n, plan, objectives, partial[b]);
        } else {
            std::vector<std::exception_ptr> errors(round.size());
            std::vector<std::thread> workers;
            workers.reserve(round.size());
            for (std::size_t b = 0; b < round.size(); ++b) {
                workers.emplace_back([&, b] {
                    try {
                        process_batch(round[b], n, plan, objectives, partial[b]);
                    } catch (...) {
                        errors[b] = std::current_exception();
                    }
                });
            }
            for (auto& w : workers) w.join();
            for (auto& e : errors)
                if (e) std::rethrow_exception(e);
        }
        for (auto& part : partial)
            for (std::size_t o = 0; o < objectives.size(); ++o) total[o].merge(std::move(part[o]));
    }

    std::vector<ExtremalRecord> records;
    records.reserve(objectives.size());
    for (std::size_t o = 0; o < objectives.size(); ++o) {
        const auto level = total[o].result();
        const Candidate& w = **std::min_element(level.begin(), level.end(), [](const Candidate* a, const Candidate* b) {
            return a->index < b->index;
        });
        ExtremalRecord r;
        r.k = k;
        r.n = n;
        r.objective = objectives[o];
        r.value = objectives[o].direction == Direction::max ? w.score : -w.score;
        r.witness_sequence = w.sequence;
        r.witness_g6 = encode_graph6(build_graph(w.sequence, n));
        r.tie_count = level.size();
        r.graphs_examined = examined;
        records.push_back(std::move(r));
    }
    return records;
}

ExtremalRecord search(int k, int n, const Objective& objective, const SearchOptions& options)
{
    return search_many(k, n, std::span<const Objective>(&objective, 1), options).front();
}

std::vector<ExtremalRecord> sweep(int k, int n_min, int n_max, std::span<const Objective> objectives,
                                  const SearchOptions& options)
{
    std::vector<ExtremalRecord> out;
    for (int n = n_min; n <= n_max; ++n) {
        auto part = search_many(k, n, objectives, options);
        std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
}

std::vector<double> standard_alphas()
{
    std::vector<double> out;
    for (int i = 1; i <= 9; ++i) out.push_back(i / 10.0);
    return out;
}

std::string format_value(double value, int precision)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

std::string format_records(std::span<const ExtremalRecord> records, TableFormat format, int precision, bool header)
{
    const char sep = format == TableFormat::csv ? ',' : '\t';
    bool mixed = false;
    bool any_alpha = false;
    for (const auto& r : records) {
        const auto& first = records.front().objective;
        if (r.objective.kind != first.kind || r.objective.direction != first.direction) mixed = true;
        if (r.objective.uses_alpha()) any_alpha = true;
    }

    std::ostringstream out;
    if (header) {
        out << 'n';
        if (mixed) out << sep << "objective" << sep << "direction";
        if (any_alpha) out << sep << "alpha";
        out << sep << "value" << sep << "g6" << sep << "sequence" << sep << "tie_count" << '\n';
    }
    for (const auto& r : records) {
        out << r.n;
        if (mixed) out << sep << objective_kind_name(r.objective.kind) << sep << direction_name(r.objective.direction);
        if (any_alpha) out << sep << (r.objective.uses_alpha() ? alpha_text(r.objective.alpha) : "");
        out << sep << format_value(r.value, precision) << sep << r.witness_g6 << sep
            << r.witness_sequence.to_string() << sep << r.tie_count << '\n';
    }
    return out.str();
}

bool ConjectureReport::passed() const
{
    return failures() == 0;
}

std::size_t ConjectureReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const ConjectureCheck& c) { return !c.passed; }));
}

std::string ConjectureReport::to_text() const
{
    std::ostringstream out;
    for (const auto& note : notes) out << "NOTE " << note << '\n';
    for (const auto& c : checks) {
        out << (c.passed ? "PASS" : "FAIL") << " k=" << k << " n=" << c.n << ' ' << c.objective.label()
            << " expected=" << c.family << " [" << c.expected.to_string() << "]"
            << " witness=[" << c.witness.to_string() << "]"
            << " value=" << format_value(c.value, 6) << " ties=" << c.tie_count << '\n';
    }
    out << (passed() ? "ALL PASS" : "FAILED") << ": " << checks.size() - failures() << '/' << checks.size()
        << " checks passed\n";
    return out.str();
}

ConjectureReport verify_conjectures(int k, int n_min, int n_max, std::span<const double> alphas,
                                    const SearchOptions& options, SecondObjective second)
{
    if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2");
    if (n_min < k + 1)
        throw Error(Errc::invalid_order, "n_min " + std::to_string(n_min) + " below k+1 = " + std::to_string(k + 1));

    ConjectureReport report;
    report.k = k;
    for (int n = n_min; n <= n_max; ++n) {
        if (n == k + 1) {
            report.notes.push_back("n=" + std::to_string(n) + " skipped: K_" + std::to_string(k + 1) +
                                   " is the only k-path graph of this order");
            continue;
        }
        std::vector<Objective> objectives{Objective::algebraic_connectivity(Direction::max),
                                          Objective::algebraic_connectivity(Direction::min)};
        for (double a : alphas) objectives.push_back(Objective::alpha_index(a));
        for (double a : alphas)
            objectives.push_back(second == SecondObjective::runner_up ? Objective::alpha_runner_up(a)
                                                                      : Objective::alpha_lambda2(a));

        const auto records = search_many(k, n, objectives, options);

        const ColorSequence fan = derive_color_sequence(generalized_fan(k, n).graph(), k);
        const ColorSequence rib = derive_color_sequence(ribbon(k, n).graph(), k);
        const ColorSequence weak = derive_color_sequence(weak_generalized_fan(k, n).graph(), k);

        for (const auto& r : records) {
            ConjectureCheck c;
            c.n = n;
            c.objective = r.objective;
            if (r.objective.kind == ObjectiveKind::alpha_lambda2 ||
                r.objective.kind == ObjectiveKind::alpha_runner_up) {
                c.family = "weak-generalized-fan";
                c.expected = weak;
            } else if (r.objective.kind == ObjectiveKind::alg_conn && r.objective.direction == Direction::min) {
                c.family = "ribbon";
                c.expected = rib;
            } else {
                c.family = "generalized-fan";
                c.expected = fan;
            }
            c.witness = r.witness_sequence;
            c.value = r.value;
            c.tie_count = r.tie_count;
            c.passed = c.witness == c.expected && c.tie_count == 1;
            report.checks.push_back(std::move(c));
        }
    }
    return report;
}

} // namespace kpath
