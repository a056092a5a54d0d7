#include <doctest.h>

#include <kpath/error.hpp>
#include <kpath/sequence.hpp>

#include <algorithm>
#include <limits>
#include <set>

#include "reference_tables.hpp"

using namespace kpath;

namespace {

ColorSequence seq(int k, std::vector<int> v)
{
    return ColorSequence(k, std::move(v));
}

template <class F>
Errc error_of(F&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected kpath::Error");
    return Errc::io_error;
}

} // namespace

TEST_CASE("color sequence invariants are enforced")
{
    CHECK_NOTHROW(seq(2, {1, 2, 1, 3}));
    CHECK(error_of([] { seq(2, {1, 1, 2}); }) == Errc::adjacent_repeat);
    CHECK(error_of([] { seq(2, {1, 2, 3, 4}); }) == Errc::too_many_colors);
    CHECK(error_of([] { seq(2, {2, 1}); }) == Errc::not_normalized);
    CHECK(error_of([] { seq(3, {1, 3}); }) == Errc::not_normalized);
    CHECK(error_of([] { ColorSequence(1); }) == Errc::invalid_order);
    CHECK(ColorSequence(3).empty());
    CHECK(seq(2, {1, 2, 1}).to_string() == "1 2 1");
    CHECK(ColorSequence(2).to_string().empty());
}

TEST_CASE("normalize relabels by first appearance")
{
    const std::vector<int> a{3, 1, 2, 1};
    CHECK(normalize(a, 2) == seq(2, {1, 2, 3, 2}));
    const std::vector<int> b{1, 2, 1};
    CHECK(normalize(b, 2) == seq(2, {1, 2, 1}));
    const std::vector<int> c{1, 3, 2, 1};
    CHECK(normalize(c, 2) == seq(2, {1, 2, 3, 1}));

    const std::vector<int> repeat{1, 1};
    CHECK(error_of([&] { normalize(repeat, 2); }) == Errc::adjacent_repeat);
    const std::vector<int> four{4, 3, 2, 1};
    CHECK(error_of([&] { normalize(four, 2); }) == Errc::too_many_colors);
    CHECK(normalize(four, 3) == seq(3, {1, 2, 3, 4}));
}

TEST_CASE("reverse canonical form")
{
    CHECK(reverse_canonical(seq(2, {1, 2, 1, 3})) == seq(2, {1, 2, 3, 2}));
    CHECK(reverse_canonical(seq(2, {1, 2, 1, 2})) == seq(2, {1, 2, 1, 2}));
    CHECK(reverse_canonical(seq(2, {1, 2, 3, 1})) == seq(2, {1, 2, 3, 1}));
    CHECK(reverse_canonical(ColorSequence(2)) == ColorSequence(2));
}

TEST_CASE("is_canonical")
{
    CHECK(is_canonical(seq(2, {1, 2, 1, 3})));
    CHECK_FALSE(is_canonical(seq(2, {1, 2, 3, 2})));
    CHECK(is_canonical(seq(2, {1, 2, 1})));
}

TEST_CASE("reversal is an involution and normalize is idempotent")
{
    for (int k = 2; k <= 4; ++k) {
        for (const auto& c : brute_force_enumerate(k, k + 8)) {
            const auto r = reverse_canonical(c);
            CHECK(reverse_canonical(r) == c);
            CHECK(normalize(c.entries(), k) == c);
            CHECK(normalize(r.entries(), k) == r);
        }
    }
}

TEST_CASE("enumerate small orders")
{
    CHECK(enumerate_all(2, 6) == std::vector{seq(2, {1, 2, 1}), seq(2, {1, 2, 3})});
    CHECK(enumerate_all(2, 7) == std::vector{seq(2, {1, 2, 1, 2}), seq(2, {1, 2, 1, 3}), seq(2, {1, 2, 3, 1})});
    CHECK(enumerate_all(2, 3) == std::vector{ColorSequence(2)});
    CHECK(enumerate_all(2, 4) == std::vector{seq(2, {1})});
    CHECK(enumerate_all(2, 5) == std::vector{seq(2, {1, 2})});
    CHECK(error_of([] { enumerate(2, 2); }) == Errc::invalid_order);
    CHECK(error_of([] { enumerate(1, 5); }) == Errc::invalid_order);
}

TEST_CASE("enumerate is strictly increasing and every element is valid")
{
    for (int k = 2; k <= 5; ++k) {
        const auto all = enumerate_all(k, k + 10);
        REQUIRE_FALSE(all.empty());
        CHECK(std::adjacent_find(all.begin(), all.end(), [](const auto& a, const auto& b) { return !(a < b); }) ==
              all.end());
        for (const auto& c : all) {
            CHECK(c.size() == 9);
            CHECK(is_canonical(c));
            CHECK_NOTHROW(ColorSequence(k, c.entries()));
        }
    }
}

TEST_CASE("enumerate matches the brute-force oracle")
{
    for (int k = 2; k <= 4; ++k) {
        for (int n = k + 1; n - k - 1 <= 10; ++n) {
            const auto listed = enumerate_all(k, n);
            const std::set<ColorSequence> fast(listed.begin(), listed.end());
            CHECK(fast.size() == listed.size());
            CHECK(fast == brute_force_enumerate(k, n));
        }
    }
    CHECK(brute_force_enumerate(2, 8).size() == 6);
    CHECK(brute_force_enumerate(3, 9).size() == 10);
    CHECK(brute_force_enumerate(2, 6) == std::set{seq(2, {1, 2, 1}), seq(2, {1, 2, 3})});
    CHECK(error_of([] { brute_force_enumerate(2, 2 + 1 + 15); }) == Errc::oracle_too_large);
}

TEST_CASE("stream copies reproduce the remainder")
{
    auto stream = enumerate(3, 12);
    for (int i = 0; i < 37; ++i) REQUIRE(stream.next());
    auto copy = stream;
    while (auto a = stream.next()) {
        auto b = copy.next();
        REQUIRE(b);
        CHECK(*a == *b);
    }
    CHECK_FALSE(copy.next());
    CHECK_FALSE(stream.next());
}

TEST_CASE("closed-form counts")
{
    CHECK(count_closed_form(2, 10).count == 20);
    CHECK(count_closed_form(3, 13).count == 574);
    CHECK(count_closed_form(4, 12).count == 107);

    for (const auto& row : reference::k2_counts)
        if (row.n <= 24) CHECK(count_closed_form(2, row.n).count == row.count);
    for (const auto& row : reference::k3_counts) CHECK(count_closed_form(3, row.n).count == row.count);
    for (const auto& row : reference::k4_counts) CHECK(count_closed_form(4, row.n).count == row.count);

    // Also confirmed by full enumeration.
    CHECK(count_closed_form(2, 25).count == 524800);
    CHECK(count_closed_form(2, 26).count == 1049600);

    CHECK(error_of([] { count_closed_form(2, 5); }) == Errc::out_of_validated_range);
    CHECK(error_of([] { count_closed_form(3, 7); }) == Errc::out_of_validated_range);
    CHECK(error_of([] { count_closed_form(4, 9); }) == Errc::out_of_validated_range);
    CHECK(error_of([] { count_closed_form(5, 20); }) == Errc::out_of_validated_range);
    CHECK_FALSE(closed_form_available(4, 9));
    CHECK(closed_form_available(4, 10));

    const BigInt big = count_closed_form(3, 80).count;
    CHECK(big > BigInt(std::numeric_limits<unsigned long long>::max()));
    CHECK(big == (pow(BigInt(3), 74) + 2 * pow(BigInt(3), 37) + 1) / 4);
}

TEST_CASE("closed form agrees with enumeration")
{
    for (int k = 2; k <= 4; ++k) {
        const int first = k == 2 ? 6 : k == 3 ? 8 : 10;
        for (int n = first; n <= first + 10; ++n) {
            std::size_t count = 0;
            auto stream = enumerate(k, n);
            while (stream.next()) ++count;
            CHECK(BigInt(count) == count_closed_form(k, n).count);
        }
    }
}
