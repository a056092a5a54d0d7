#include "kpath/sequence.hpp"

#include <algorithm>
#include <map>

#include "kpath/error.hpp"

namespace kpath {

namespace {

void check_k(int k)
{
    if (k < 2) throw Error(Errc::invalid_order, "k must be at least 2, got " + std::to_string(k));
}

void check_order(int k, int n)
{
    check_k(k);
    if (n < k + 1)
        throw Error(Errc::invalid_order,
                    "order " + std::to_string(n) + " is below k+1 = " + std::to_string(k + 1));
}

void check_restricted(std::span<const int> entries)
{
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (entries[i] == entries[i - 1])
            throw Error(Errc::adjacent_repeat, "equal entries at positions " + std::to_string(i - 1) +
                                                   " and " + std::to_string(i));
    }
}

} // namespace

ColorSequence::ColorSequence(int k) : k_(k)
{
    check_k(k);
}

ColorSequence::ColorSequence(int k, std::vector<int> entries) : k_(k), entries_(std::move(entries))
{
    check_k(k);
    check_restricted(entries_);
    int running_max = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const int c = entries_[i];
        if (c > k + 1) throw Error(Errc::too_many_colors, "color " + std::to_string(c) + " exceeds k+1");
        if (c < 1 || c > running_max + 1)
            throw Error(Errc::not_normalized, "entry " + std::to_string(c) + " at position " +
                                                  std::to_string(i) + " breaks first-appearance order");
        running_max = std::max(running_max, c);
    }
}

std::string ColorSequence::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries_[i]);
    }
    return out;
}

ColorSequence normalize(std::span<const int> entries, int k)
{
    check_k(k);
    check_restricted(entries);
    std::map<int, int> relabel;
    std::vector<int> out;
    out.reserve(entries.size());
    for (int c : entries) {
        auto [it, inserted] = relabel.try_emplace(c, static_cast<int>(relabel.size()) + 1);
        if (inserted && it->second > k + 1)
            throw Error(Errc::too_many_colors, "more than k+1 = " + std::to_string(k + 1) + " distinct colors");
        out.push_back(it->second);
    }
    return ColorSequence(ColorSequence::Unchecked{}, k, std::move(out));
}

ColorSequence reverse_canonical(const ColorSequence& c)
{
    std::vector<int> reversed(c.entries().rbegin(), c.entries().rend());
    return normalize(reversed, c.k());
}

bool is_canonical(const ColorSequence& c)
{
    return c.entries() <= reverse_canonical(c).entries();
}

CanonicalSequenceStream::CanonicalSequenceStream(int k, int n) : k_(k), n_(n)
{
    check_order(k, n);
    const auto length = static_cast<std::size_t>(n - k - 1);
    seq_.resize(length);
    prefix_max_.resize(length);
    relabel_.resize(static_cast<std::size_t>(k) + 2);
    for (std::size_t i = 0; i < length; ++i) {
        seq_[i] = (i % 2 == 0) ? 1 : 2;
        prefix_max_[i] = (i == 0) ? 1 : 2;
    }
}

// Lexicographic successor in the language of restricted normalized words
// over at most k+1 colors: bump the rightmost position that admits a larger
// legal value, then complete the suffix minimally (1, 2, 1, ... avoiding the
// left neighbour).
bool CanonicalSequenceStream::advance()
{
    const std::size_t length = seq_.size();
    for (std::size_t i = length; i-- > 1;) {
        const int bound = std::min(k_ + 1, prefix_max_[i - 1] + 1);
        for (int v = seq_[i] + 1; v <= bound; ++v) {
            if (v == seq_[i - 1]) continue;
            seq_[i] = v;
            prefix_max_[i] = std::max(prefix_max_[i - 1], v);
            for (std::size_t j = i + 1; j < length; ++j) {
                seq_[j] = (seq_[j - 1] == 1) ? 2 : 1;
                prefix_max_[j] = std::max(prefix_max_[j - 1], seq_[j]);
            }
            return true;
        }
    }
    return false;
}

bool CanonicalSequenceStream::current_is_canonical() const
{
    // Reverse-normalize on the fly and compare lexicographically, bailing out
    // at the first difference.
    std::fill(relabel_.begin(), relabel_.end(), 0);
    int next_label = 1;
    const std::size_t length = seq_.size();
    for (std::size_t i = 0; i < length; ++i) {
        const int c = seq_[length - 1 - i];
        if (relabel_[c] == 0) relabel_[c] = next_label++;
        if (seq_[i] != relabel_[c]) return seq_[i] < relabel_[c];
    }
    return true;
}

std::optional<ColorSequence> CanonicalSequenceStream::next()
{
    if (done_) return std::nullopt;
    if (!started_) {
        started_ = true;
        // The alternating start is its own reverse-canonical form.
        return ColorSequence(ColorSequence::Unchecked{}, k_, seq_);
    }
    while (advance()) {
        if (current_is_canonical()) return ColorSequence(ColorSequence::Unchecked{}, k_, seq_);
    }
    done_ = true;
    return std::nullopt;
}

CanonicalSequenceStream enumerate(int k, int n)
{
    return CanonicalSequenceStream(k, n);
}

std::vector<ColorSequence> enumerate_all(int k, int n)
{
    std::vector<ColorSequence> out;
    auto stream = enumerate(k, n);
    while (auto c = stream.next()) out.push_back(std::move(*c));
    return out;
}

bool closed_form_available(int k, int n) noexcept
{
    switch (k) {
    case 2: return n >= 6;
    case 3: return n >= 8;
    case 4: return n >= 10;
    default: return false;
    }
}

CountResult count_closed_form(int k, int n)
{
    if (!closed_form_available(k, n))
        throw Error(Errc::out_of_validated_range,
                    "no tabulated closed form for k=" + std::to_string(k) + ", n=" + std::to_string(n));

    auto pow = [](unsigned base, int exp) {
        BigInt r = 1;
        for (int i = 0; i < exp; ++i) r *= base;
        return r;
    };

    const bool even = (n % 2 == 0);
    BigInt numerator;
    unsigned divisor = 1;
    switch (k) {
    case 2:
        numerator = pow(2, n - 6) + (even ? pow(2, (n - 6) / 2) : pow(2, (n - 7) / 2));
        break;
    case 3:
        numerator = pow(3, n - 6) + (even ? 2 * pow(3, (n - 6) / 2) : 4 * pow(3, (n - 7) / 2)) + 1;
        divisor = 4;
        break;
    default:
        numerator = pow(4, n - 8) + (even ? 4 * pow(2, n - 8) : 7 * pow(2, n - 9)) + 1;
        divisor = 3;
        break;
    }
    if (numerator % divisor != 0)
        throw std::logic_error("closed form is not integral for k=" + std::to_string(k) +
                               ", n=" + std::to_string(n));
    return CountResult{k, n, numerator / divisor};
}

namespace {

void brute_force_recurse(int k, std::vector<int>& word, std::size_t pos, std::set<ColorSequence>& out)
{
    if (pos == word.size()) {
        int running_max = 0;
        for (std::size_t i = 0; i < word.size(); ++i) {
            if (i > 0 && word[i] == word[i - 1]) return;
            if (word[i] > running_max + 1) return;
            running_max = std::max(running_max, word[i]);
        }
        ColorSequence c(k, word);
        if (is_canonical(c)) out.insert(std::move(c));
        return;
    }
    for (int v = 1; v <= k + 1; ++v) {
        word[pos] = v;
        brute_force_recurse(k, word, pos + 1, out);
    }
}

} // namespace

std::set<ColorSequence> brute_force_enumerate(int k, int n)
{
    check_order(k, n);
    const int length = n - k - 1;
    if (length > brute_force_max_length)
        throw Error(Errc::oracle_too_large, "sequence length " + std::to_string(length) + " exceeds " +
                                                std::to_string(brute_force_max_length));
    std::set<ColorSequence> out;
    std::vector<int> word(static_cast<std::size_t>(length));
    brute_force_recurse(k, word, 0, out);
    return out;
}

} // namespace kpath
