#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kpath {

using BigInt = boost::multiprecision::cpp_int;

/// Restricted normalized color sequence of a k-path graph.
///
/// Entries are colors of the vertices added after the first (k+1)-clique.
/// A valid sequence has no equal neighbours, starts at 1, never exceeds
/// one more than its running maximum, and uses at most k+1 colors.
class ColorSequence {
public:
    /// Validates every invariant; throws kpath::Error on violation.
    ColorSequence(int k, std::vector<int> entries);

    /// Empty sequence (the clique K_{k+1}).
    explicit ColorSequence(int k);

    int k() const noexcept { return k_; }
    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    int operator[](std::size_t i) const { return entries_[i]; }

    /// Space separated, e.g. "1 2 1 3".
    std::string to_string() const;

    friend bool operator==(const ColorSequence&, const ColorSequence&) = default;
    friend std::strong_ordering operator<=>(const ColorSequence& a, const ColorSequence& b)
    {
        if (auto c = a.k_ <=> b.k_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    struct Unchecked {};
    ColorSequence(Unchecked, int k, std::vector<int> entries) : k_(k), entries_(std::move(entries)) {}

    friend ColorSequence normalize(std::span<const int> entries, int k);
    friend class CanonicalSequenceStream;

    int k_;
    std::vector<int> entries_;
};

/// Relabels colors by order of first appearance (first seen -> 1, ...).
ColorSequence normalize(std::span<const int> entries, int k);

/// Normalized reversal: the sequence read along the reversed core sequence.
ColorSequence reverse_canonical(const ColorSequence& c);

/// True iff c is lexicographically <= its reverse_canonical form.
bool is_canonical(const ColorSequence& c);

/// Lexicographic stream of canonical sequences for all non-isomorphic
/// k-path graphs of order n. Holds O(n) state; copying the stream at any
/// point yields an independent stream producing the identical remainder.
class CanonicalSequenceStream {
public:
    CanonicalSequenceStream(int k, int n);

    /// Next canonical sequence, or nullopt when exhausted.
    std::optional<ColorSequence> next();

    int k() const noexcept { return k_; }
    int order() const noexcept { return n_; }

private:
    bool advance();
    bool current_is_canonical() const;

    int k_;
    int n_;
    std::vector<int> seq_;
    std::vector<int> prefix_max_;
    mutable std::vector<int> relabel_;
    bool started_ = false;
    bool done_ = false;
};

/// Throws InvalidOrder when k < 2 or n < k+1.
CanonicalSequenceStream enumerate(int k, int n);

/// Materialized form of enumerate(); intended for small orders.
std::vector<ColorSequence> enumerate_all(int k, int n);

struct CountResult {
    int k;
    int n;
    BigInt count;
};

/// Closed-form number of non-isomorphic k-path graphs for k in {2,3,4}.
/// Only defined where the formulas are tabulated: n >= 6, 8, 10 for
/// k = 2, 3, 4 respectively; other inputs throw OutOfValidatedRange.
CountResult count_closed_form(int k, int n);

bool closed_form_available(int k, int n) noexcept;

/// Exhaustive oracle: every word over {1..k+1} of length n-k-1, filtered.
/// Limited to length <= 14.
std::set<ColorSequence> brute_force_enumerate(int k, int n);

inline constexpr int brute_force_max_length = 14;

} // namespace kpath
