#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kpath/sequence.hpp"

namespace kpath {

class Graph;

/// alpha_lambda2 reads the second-largest eigenvalue of A_alpha(G) for each
/// graph. alpha_runner_up ranks the graphs by alpha-index and reports the
/// second-best level instead (the best level when every graph ties).
enum class ObjectiveKind { alg_conn, alpha_index, alpha_lambda2, alpha_runner_up };
enum class Direction { max, min };

/// Eigenvalue to optimize over all k-path graphs of an order.
struct Objective {
    ObjectiveKind kind = ObjectiveKind::alg_conn;
    Direction direction = Direction::max;
    double alpha = 0.0;  // used by every kind except alg_conn

    static Objective algebraic_connectivity(Direction d) { return {ObjectiveKind::alg_conn, d, 0.0}; }
    static Objective alpha_index(double alpha, Direction d = Direction::max)
    {
        return {ObjectiveKind::alpha_index, d, alpha};
    }
    static Objective alpha_lambda2(double alpha, Direction d = Direction::max)
    {
        return {ObjectiveKind::alpha_lambda2, d, alpha};
    }
    static Objective alpha_runner_up(double alpha, Direction d = Direction::max)
    {
        return {ObjectiveKind::alpha_runner_up, d, alpha};
    }

    bool uses_alpha() const noexcept { return kind != ObjectiveKind::alg_conn; }
    /// e.g. "alg-conn/max", "alpha-index(0.5)/max".
    std::string label() const;

    friend bool operator==(const Objective&, const Objective&) = default;
};

std::string_view objective_kind_name(ObjectiveKind kind) noexcept;
std::string_view direction_name(Direction d) noexcept;

/// Objective value of a single graph. For alpha_runner_up this is the
/// alpha-index, the quantity being ranked.
double evaluate(const Graph& g, const Objective& objective);

struct ExtremalRecord {
    int k = 0;
    int n = 0;
    Objective objective;
    double value = 0.0;
    std::string witness_g6;
    ColorSequence witness_sequence{2};
    std::size_t tie_count = 0;
    std::size_t graphs_examined = 0;
};

struct SearchOptions {
    unsigned threads = 0;               // 0: hardware concurrency
    std::size_t budget = 2'000'000;     // graphs per (k, n)
    std::size_t batch_size = 256;       // fixed partition; independent of threads
};

/// Exhaustive search over enumerate(k, n). Ties (within tie_tolerance of
/// the optimum) are counted; the witness is the lexicographically smallest
/// tied sequence. Results do not depend on the thread count.
ExtremalRecord search(int k, int n, const Objective& objective, const SearchOptions& options = {});

/// Same as search() for several objectives in one pass over the graphs;
/// spectra shared between objectives are computed once per graph.
std::vector<ExtremalRecord> search_many(int k, int n, std::span<const Objective> objectives,
                                        const SearchOptions& options = {});

/// One record per (n, objective) for n in [n_min, n_max].
std::vector<ExtremalRecord> sweep(int k, int n_min, int n_max, std::span<const Objective> objectives,
                                  const SearchOptions& options = {});

/// 0.1, 0.2, ..., 0.9.
std::vector<double> standard_alphas();

enum class TableFormat { csv, tsv };

/// Fixed-point with `precision` decimals, ties to even on the exact binary
/// value; never prints a negative zero.
std::string format_value(double value, int precision);

/// Header plus one row per record: n, [objective, direction,] [alpha,]
/// value, g6, sequence, tie_count. Objective/direction columns appear only
/// when the records mix objectives; alpha only when some record uses it.
std::string format_records(std::span<const ExtremalRecord> records, TableFormat format, int precision = 4,
                           bool header = true);

struct ConjectureCheck {
    int n = 0;
    Objective objective;
    std::string family;           // expected extremal family
    ColorSequence expected{2};
    ColorSequence witness{2};
    double value = 0.0;
    std::size_t tie_count = 0;
    bool passed = false;
};

struct ConjectureReport {
    int k = 0;
    std::vector<ConjectureCheck> checks;
    std::vector<std::string> notes;

    bool passed() const;
    std::size_t failures() const;
    std::string to_text() const;
};

enum class SecondObjective { runner_up, literal_lambda2 };

/// For each order: max a(G) and max alpha-index must be the generalized
/// fan, min a(G) the ribbon, and the second objective (runner-up
/// alpha-index by default) the weak generalized fan, each with a unique
/// optimum. Order k+1 is skipped with a note.
ConjectureReport verify_conjectures(int k, int n_min, int n_max, std::span<const double> alphas,
                                    const SearchOptions& options = {},
                                    SecondObjective second = SecondObjective::runner_up);

} // namespace kpath
