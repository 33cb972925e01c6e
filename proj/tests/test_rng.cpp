#include <doctest.h>

#include <algorithm>
#include <set>

#include "scfn/rng.hpp"

using namespace scfn;

namespace {

// Digit-sum oracle: sum of d_j * B^-(j+1) as an exact fraction over B^digits.
Rational digit_sum(std::uint64_t i, std::uint64_t base) {
    std::int64_t num = 0, den = 1;
    for (; i > 0; i /= base) {
        num = num * static_cast<std::int64_t>(base) + static_cast<std::int64_t>(i % base);
        den *= static_cast<std::int64_t>(base);
    }
    return {num, den};
}

// Brute-force Fibonacci register: bits[0] is register bit 0.
std::vector<std::uint32_t> brute_lfsr(const std::vector<unsigned>& taps, std::uint32_t seed, std::size_t steps) {
    unsigned m = *std::max_element(taps.begin(), taps.end());
    std::vector<int> bits(m);
    for (unsigned b = 0; b < m; ++b) bits[b] = (seed >> b) & 1;
    std::vector<std::uint32_t> out;
    for (std::size_t s = 0; s < steps; ++s) {
        std::uint32_t v = 0;
        for (unsigned b = 0; b < m; ++b) v |= std::uint32_t(bits[b]) << b;
        out.push_back(v);
        int fb = 0;
        for (unsigned t : taps) fb ^= bits[t - 1];
        for (unsigned b = m - 1; b > 0; --b) bits[b] = bits[b - 1];
        bits[0] = fb;
    }
    return out;
}

}  // namespace

TEST_CASE("radical inverse") {
    CHECK(radical_inverse(77, 5) == Rational{53, 125});
    CHECK(radical_inverse(77, 5).reduced().den == 125);
    for (std::uint64_t b : {2, 3, 7, 16}) CHECK(radical_inverse(0, b) == Rational{0, 1});
    CHECK(radical_inverse(6, 2) == Rational{3, 8});
    for (std::uint64_t b : {2, 3, 4, 5, 10})
        for (std::uint64_t i = 0; i < 500; ++i) CHECK(radical_inverse(i, b) == digit_sum(i, b));
    CHECK_THROWS_AS(radical_inverse(5, 1), std::invalid_argument);
    CHECK_THROWS_AS(radical_inverse(5, 0), std::invalid_argument);
}

TEST_CASE("vdc group reversal") {
    std::vector<std::uint32_t> got;
    for (unsigned i = 0; i < 8; ++i) got.push_back(vdc_value_at(1, 3, i));
    CHECK(got == std::vector<std::uint32_t>{0, 4, 2, 6, 1, 5, 3, 7});
    for (unsigned i = 0; i < 1024; ++i) CHECK(vdc_value_at(10, 10, i) == i);
    CHECK(vdc_value_at(2, 4, 6) == 9);
}

TEST_CASE("vdc matches the radical inverse for every group size") {
    for (unsigned m : {3u, 6u, 10u})
        for (unsigned n = 1; n <= m; ++n)
            for (std::uint64_t i = 0; i < (1u << m); ++i) {
                const Rational r = radical_inverse(i, 1ULL << n);
                const auto want = static_cast<std::uint32_t>((static_cast<__int128>(r.num) << m) / r.den);
                REQUIRE(vdc_value_at(n, m, i) == want);
            }
}

TEST_CASE("vdc permutation when n divides m") {
    for (unsigned n : {1u, 2u, 5u, 10u}) {
        std::set<std::uint32_t> seen;
        for (unsigned i = 0; i < 1024; ++i) seen.insert(vdc_value_at(n, 10, i));
        CHECK(seen.size() == 1024);
    }
    std::set<std::uint32_t> nine;
    for (unsigned i = 0; i < 1024; ++i) nine.insert(vdc_value_at(9, 10, i));
    CHECK(nine.size() == 512);
}

TEST_CASE("vdc-2 aligned prefixes stratify") {
    const unsigned m = 10;
    for (unsigned k = 0; k <= m; ++k) {
        const std::uint32_t len = 1u << k, width = 1u << (m - k);
        for (std::uint32_t start = 0; start < 1024; start += len) {
            std::vector<int> hits(len, 0);
            for (std::uint32_t i = start; i < start + len; ++i) hits[vdc_value_at(1, m, i) / width]++;
            REQUIRE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
        }
    }
}

TEST_CASE("lfsr matches a brute-force register") {
    const std::vector<unsigned> taps{3, 2};
    const auto ref = brute_lfsr(taps, 1, 7);
    std::set<std::uint32_t> states(ref.begin(), ref.end());
    CHECK(states == std::set<std::uint32_t>{1, 2, 3, 4, 5, 6, 7});
    for (unsigned i = 0; i < 7; ++i) CHECK(lfsr_value_at(taps, 1, i) == ref[i]);

    for (const auto& t : {std::vector<unsigned>{10, 8, 6, 1}, std::vector<unsigned>{10, 8, 5, 4}}) {
        const auto r = brute_lfsr(t, 1023, 3000);
        for (unsigned i = 0; i < 3000; ++i) REQUIRE(lfsr_value_at(t, 1023, i) == r[i]);
    }
}

TEST_CASE("lfsr periods") {
    CHECK(lfsr_period({10, 8, 6, 1}, 1023) == 1023);
    CHECK(lfsr_period({10, 8, 5, 4}, 1023) == 1023);
    CHECK(lfsr_period({8, 7, 6, 1}, 255) == 255);
    // The literal three-tap reading is a fixed point from all-ones.
    CHECK(lfsr_period({10, 8, 6}, 1023) == 1);
    for (unsigned m = 6; m <= 10; ++m)
        for (int slot : {0, 1}) {
            const auto& taps = bundled_lfsr_taps(m, slot);
            const std::uint32_t seed = (1u << m) - 1;
            CHECK(lfsr_period(taps, seed) == (1u << m) - 1);
            for (std::uint64_t i = 0; i < (1u << m) + 5; ++i) {
                REQUIRE(lfsr_value_at(taps, seed, i) != 0);
                REQUIRE(lfsr_value_at(taps, seed, i + (1u << m) - 1) == lfsr_value_at(taps, seed, i));
            }
        }
    CHECK_THROWS_AS(lfsr_value_at({10, 8, 6, 1}, 0, 0), std::invalid_argument);
}

TEST_CASE("sobol") {
    for (unsigned m : {4u, 8u, 10u})
        for (std::uint64_t i = 0; i < (1u << m); ++i) REQUIRE(sobol_value_at(1, m, i) == vdc_value_at(1, m, i));
    for (unsigned d = 1; d <= sobol_max_dimension; ++d) CHECK(sobol_value_at(d, 10, 0) == 0);
    std::set<std::uint32_t> first8;
    for (unsigned i = 0; i < 8; ++i) first8.insert(sobol_value_at(2, 4, i));
    CHECK(first8.size() == 8);
    for (std::uint32_t v : first8) CHECK(v % 2 == 0);
    for (unsigned d = 1; d <= sobol_max_dimension; ++d) {
        std::set<std::uint32_t> all;
        for (unsigned i = 0; i < 1024; ++i) all.insert(sobol_value_at(d, 10, i));
        CHECK(all.size() == 1024);
    }
    CHECK_THROWS_AS(sobol_value_at(0, 10, 1), std::invalid_argument);
    CHECK_THROWS_AS(sobol_value_at(sobol_max_dimension + 1, 10, 1), std::invalid_argument);
}

TEST_CASE("sequence sources") {
    const auto c = SequenceSource::counter(4);
    for (unsigned i = 0; i < 40; ++i) CHECK(c.value_at(i) == i % 16);
    for (const auto& s : {SequenceSource::vdc(3, 10), SequenceSource::lfsr({10, 8, 6, 1}, 77),
                          SequenceSource::sobol(3, 10), SequenceSource::counter(10)}) {
        const auto vals = s.values(5, 2000);
        for (unsigned i = 0; i < 2000; ++i) {
            REQUIRE(vals[i] == s.value_at(5 + i));
            REQUIRE(vals[i] < 1024u);
        }
        SourceStream st(s, 5);
        for (unsigned i = 0; i < 50; ++i) CHECK(st.next() == vals[i]);
        CHECK(s == SequenceSource(s));
    }
    CHECK(trial_seed(0, 10) == 1);
    for (unsigned t = 0; t < 100; ++t) {
        const std::uint32_t s = trial_seed(t, 10);
        CHECK(s == ((static_cast<std::uint64_t>(t) * 2654435761ULL) % 1024 | 1));
    }
}
