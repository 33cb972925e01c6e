#include <doctest.h>

#include <cstdlib>
#include <random>

#include "scfn/gates.hpp"

using namespace scfn;

namespace {

Bitstream bs(const char* s) { return Bitstream::from_string(s); }

Bitstream random_stream(std::mt19937_64& rng, std::size_t n, double p) {
    std::bernoulli_distribution d(p);
    Bitstream s(n);
    for (std::size_t i = 0; i < n; ++i) s.set(i, d(rng));
    return s;
}

}  // namespace

TEST_CASE("combinational gates") {
    CHECK(and2(bs("01010101"), bs("00111111")).to_string() == "00010101");
    CHECK(and2(bs("11110000"), bs("00111111")).to_string() == "00110000");
    const auto s = bs("10011101");
    const Bitstream ones(8, true);
    CHECK(and2(s, ones) == s);
    CHECK(nand2(s, ones) == not1(s));
    CHECK(xor2(s, s) == Bitstream(8));
    CHECK(and3(s, ones, s) == s);
    CHECK(nand3(s, ones, ones) == not1(s));
    CHECK_THROWS(and2(bs("1010"), s));
    std::mt19937_64 rng(1);
    for (int k = 0; k < 100; ++k) {
        const auto a = random_stream(rng, 100, 0.4);
        const auto b = random_stream(rng, 100, 0.6);
        CHECK(decode(not1(a)).value() == doctest::Approx(1.0 - decode(a).value()));
        CHECK(and2(a, b).ones() + or2(a, b).ones() == a.ones() + b.ones());
    }
}

TEST_CASE("mux add and subtract") {
    const Bitstream ones(8, true), zeros(8);
    const auto half = bs("10101010");
    CHECK(decode(mux_add(ones, zeros, half)) == Rational{1, 2});
    CHECK(mux_add(half, half, bs("11001010")) == half);
    CHECK(mux_add(bs("11110000"), bs("00111111"), half).to_string() == "10110101");
    CHECK(decode(mux_sub(ones, ones, half)) == Rational{1, 2});
    const auto a = bs("11010011");
    CHECK(mux_sub(a, zeros, half) == mux_add(a, ones, half));
    CHECK(mux_sub(bs("11110000"), bs("00111111"), half).to_string() == "11100000");
    std::mt19937_64 rng(2);
    for (int k = 0; k < 100; ++k) {
        const auto x = random_stream(rng, 128, 0.3), y = random_stream(rng, 128, 0.8), sel = random_stream(rng, 128, 0.5);
        std::size_t want = 0;
        for (std::size_t i = 0; i < 128; ++i) want += sel.get(i) ? x.get(i) : y.get(i);
        CHECK(mux_add(x, y, sel).ones() == want);
    }
}

TEST_CASE("dff delay") {
    CHECK(dff_delay(bs("11111101"), 1).to_string() == "11111110");
    const auto s = bs("1011001110001011");
    CHECK(dff_delay(s, 0) == s);
    for (long long k = 0; k < 20; ++k) {
        CHECK(dff_delay(s, k) == rotate(s, -k));
        CHECK(decode(dff_delay(s, k)) == decode(s));
    }
}

TEST_CASE("jk flip-flop divider") {
    const Bitstream ones(8, true), zeros(8);
    CHECK(jkff_div(ones, zeros) == ones);
    CHECK(jkff_div(zeros, ones) == zeros);
    const auto out = jkff_div(bs("10101010"), bs("01010101"));
    CHECK(out.to_string() == "10101010");
    CHECK(decode(out) == Rational{1, 2});
    // Toggle on 1,1, hold on 0,0.
    CHECK(jkff_div(bs("1100"), bs("0100")).to_string() == "1000");
    const auto t = jkff_div_trace(bs("10101010"), bs("01010101"));
    CHECK(t.state_log.size() == 8);
    CHECK(t.output == out);
    CHECK(jkff_div_trace(bs("10101010"), bs("01010101")).state_log == t.state_log);
}

TEST_CASE("cordiv") {
    const auto a = bs("01101001");
    CHECK(cordiv(a, Bitstream(8, true)) == a);
    CHECK(cordiv(a, a).to_string() == "01111111");
    const auto q = cordiv(bs("00001111"), bs("00111111"));
    CHECK(q.to_string() == "00001111");
    CHECK(decode(q) == Rational{1, 2});
    CHECK(cordiv(bs("10000000"), Bitstream(8)) == Bitstream(8));
    const auto t = cordiv_trace(bs("00001111"), bs("00111111"));
    CHECK(t.state_log.size() == 8);
    CHECK(t.output == q);
    CHECK(t.state_log.front() == 0);
}

TEST_CASE("correlator") {
    const auto b = bs("00111111");
    const auto r = correlate_max(bs("11110000"), b, 8);
    CHECK(r.a.to_string() == "00111100");
    CHECK(r.b == b);
    CHECK(scc(r.a, r.b) == doctest::Approx(1.0));
    CHECK(r.a.ones() == 4);
    const auto same = correlate_max(b, b, 8);
    CHECK(same.a == b);
    CHECK(correlate_max(Bitstream(8), b, 8).a == Bitstream(8));

    std::mt19937_64 rng(9);
    for (int k = 0; k < 300; ++k) {
        const auto x = random_stream(rng, 256, 0.2 + 0.6 * (k % 7) / 7.0);
        const auto y = random_stream(rng, 256, 0.5);
        for (std::uint32_t depth : {1u, 4u, 256u}) {
            const auto c = correlate_max(x, y, depth);
            REQUIRE(c.a.ones() + c.residual == x.ones());
            REQUIRE(c.b == y);
            CHECK(scc(c.a, y) >= scc(x, y) - 1e-12);
        }
    }
    const auto tr = correlate_max_trace(bs("11110000"), b, 8);
    CHECK(tr.state_log.size() == 8);
}
