#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "scfn/bitstream.hpp"
#include "scfn/gates.hpp"

using namespace scfn;

namespace {

Bitstream bs(const char* s) { return Bitstream::from_string(s); }

// Literal quotient form of ZCE.
double zce_quotient(const PairCounts& p) {
    const double N = static_cast<double>(p.total());
    const double ab = static_cast<double>(p.a + p.b), ac = static_cast<double>(p.a + p.c);
    const double delta = p.a / N - ab * ac / (N * N);
    const double delta0 = std::floor(ab * ac / N + 0.5) / N - ab * ac / (N * N);
    return delta * (1.0 - delta0 / delta);
}

Bitstream random_stream(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution d(p);
    Bitstream s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, d(rng));
    return s;
}

}  // namespace

TEST_CASE("text form") {
    const auto s = bs("11110000");
    CHECK(s.size() == 8);
    CHECK(s.get(0));
    CHECK(!s.get(7));
    CHECK(s.to_string() == "11110000");
    Bitstream long_s(130, true);
    CHECK(long_s.ones() == 130);
    CHECK_THROWS(Bitstream::from_string("1021"));
}

TEST_CASE("encode") {
    CHECK(encode(4, SequenceSource::counter(3)).to_string() == "11110000");
    CHECK(encode(0, SequenceSource::vdc(1, 3)).to_string() == "00000000");
    CHECK(encode(8, SequenceSource::vdc(1, 3)).to_string() == "11111111");
    CHECK(encode(4, SequenceSource::vdc(1, 3)).to_string() == "10101010");
    CHECK_THROWS_AS(encode(9, SequenceSource::counter(3)), std::invalid_argument);
    // bit_i = X > R_{offset+i}
    const auto src = SequenceSource::lfsr({10, 8, 5, 4}, 123);
    const auto s = encode(300, src, 17);
    for (unsigned i = 0; i < 1024; ++i) REQUIRE(s.get(i) == (300u > src.value_at(17 + i)));
}

TEST_CASE("encode ladder matches per-X encoding") {
    const auto src = SequenceSource::vdc(3, 8);
    const auto ladder = encode_ladder(src.values(0, 256));
    REQUIRE(ladder.size() == 257);
    for (std::uint32_t X = 0; X <= 256; ++X) REQUIRE(ladder[X] == encode(X, src));
}

TEST_CASE("decode") {
    CHECK(decode(bs("11110000")) == Rational{4, 8});
    CHECK(decode(Bitstream(1024, true)) == Rational{1, 1});
    CHECK(decode(bs("00010101")) == Rational{3, 8});
}

TEST_CASE("decode of encode is exact for permutation sources") {
    for (unsigned m = 6; m <= 10; ++m) {
        const std::uint32_t N = 1u << m;
        std::vector<SequenceSource> srcs{SequenceSource::counter(m)};
        for (unsigned n = 1; n <= m; ++n)
            if (m % n == 0) srcs.push_back(SequenceSource::vdc(n, m));
        for (const auto& src : srcs) {
            const auto ladder = encode_ladder(src.values(0, N));
            for (std::uint32_t X = 0; X <= N; ++X) REQUIRE(decode(ladder[X]) == Rational{X, N});
        }
    }
}

TEST_CASE("pair counts") {
    CHECK(pair_counts(bs("00001111"), bs("00111111")) == PairCounts{4, 0, 2, 2});
    CHECK(pair_counts(bs("11110000"), bs("00111111")) == PairCounts{2, 2, 4, 0});
    const auto s = bs("10110010");
    CHECK(pair_counts(s, s) == PairCounts{4, 0, 0, 4});
    CHECK_THROWS(pair_counts(bs("1010"), bs("10101010")));
}

TEST_CASE("scc examples") {
    CHECK(scc(bs("00001111"), bs("00111111")) == doctest::Approx(1.0));
    CHECK(scc(bs("11110000"), bs("00111111")) == doctest::Approx(-1.0));
    CHECK(scc(bs("01010101"), bs("00111111")) == doctest::Approx(0.0));
    CHECK(scc(Bitstream(8), bs("00111111")) == 0.0);
}

TEST_CASE("scc properties") {
    std::mt19937_64 rng(7);
    for (int k = 0; k < 300; ++k) {
        const auto a = random_stream(rng, 64, 0.1 + 0.8 * (k % 10) / 10.0);
        const auto b = random_stream(rng, 64, 0.5);
        const double v = scc(a, b);
        CHECK(v == doctest::Approx(scc(b, a)));
        CHECK(v >= -1.0 - 1e-12);
        CHECK(v <= 1.0 + 1e-12);
        if (a.ones() > 0 && a.ones() < a.size()) CHECK(scc(a, a) == doctest::Approx(1.0));
    }
}

TEST_CASE("zce") {
    CHECK(zce(bs("01010101"), bs("00111111")) == 0.0);
    CHECK(zce(bs("00001111"), bs("00111111")) == doctest::Approx(0.125));
    const auto s = bs("1100101001011100");
    CHECK(zce(s, not1(s)) == doctest::Approx(-0.25));
    std::mt19937_64 rng(11);
    for (int k = 0; k < 500; ++k) {
        const auto a = random_stream(rng, 128, 0.3);
        const auto b = random_stream(rng, 128, 0.6);
        const auto p = pair_counts(a, b);
        const double N = 128.0;
        const double delta = p.a / N - double(p.a + p.b) * double(p.a + p.c) / (N * N);
        if (delta != 0) CHECK(zce(p) == doctest::Approx(zce_quotient(p)).epsilon(1e-12));
    }
}

TEST_CASE("rotate") {
    CHECK(rotate(bs("11111101"), 1).to_string() == "11111011");
    const auto s = bs("1101000110101110");
    CHECK(rotate(s, 0) == s);
    CHECK(rotate(s, 16) == s);
    std::mt19937_64 rng(3);
    const auto w = random_stream(rng, 1024, 0.4);
    for (long long k : {-1025LL, -3LL, 1LL, 63LL, 64LL, 65LL, 1000LL}) {
        const auto r = rotate(w, k);
        CHECK(decode(r) == decode(w));
        for (std::size_t i = 0; i < 1024; ++i)
            REQUIRE(r.get(i) == w.get(static_cast<std::size_t>(((static_cast<long long>(i) + k) % 1024 + 1024) % 1024)));
    }
}

TEST_CASE("shift with initial bit") {
    CHECK(shift_in(bs("11111101"), 1, false).to_string() == "01111110");
    CHECK(shift_in(bs("11111101"), 2, true).to_string() == "11111111");
}

TEST_CASE("and plus or counting identity") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
        const auto a = random_stream(rng, 200, 0.3);
        const auto b = random_stream(rng, 200, 0.7);
        CHECK(and2(a, b).ones() + or2(a, b).ones() == a.ones() + b.ones());
    }
}
