#include "scfn/rng.hpp"

#include <array>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace scfn {

Rational Rational::reduced() const {
    std::int64_t g = std::gcd(num, den);
    if (g == 0) return {0, 1};
    return {num / g, den / g};
}

std::string to_string(const Rational& r) {
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

Rational radical_inverse(std::uint64_t i, std::uint64_t base) {
    if (base < 2) throw std::invalid_argument("radical_inverse: base must be >= 2");
    std::int64_t num = 0;
    std::int64_t den = 1;
    const std::int64_t b = static_cast<std::int64_t>(base);
    while (i > 0) {
        if (den > INT64_MAX / b) throw std::overflow_error("radical_inverse: denominator overflow");
        num = num * b + static_cast<std::int64_t>(i % base);
        den *= b;
        i /= base;
    }
    return {num, den};
}

std::uint32_t vdc_value_at(unsigned n, unsigned m, std::uint64_t i) {
    if (n == 0 || n > 32 || m == 0 || m > 31)
        throw std::invalid_argument("vdc_value_at: need 1 <= n <= 32 and 1 <= m <= 31");
    const unsigned g = (m + n - 1) / n;
    const std::uint64_t gmask = (1ULL << n) - 1;
    const std::uint64_t v = i & ((1ULL << m) - 1);
    std::uint64_t out = 0;
    for (unsigned k = 0; k < g; ++k) out = (out << n) | ((v >> (k * n)) & gmask);
    return static_cast<std::uint32_t>(out >> (g * n - m));
}

std::uint32_t lfsr_step(std::uint32_t state, std::uint32_t tap_mask, unsigned m) {
    const std::uint32_t fb = static_cast<std::uint32_t>(__builtin_popcount(state & tap_mask) & 1);
    return ((state << 1) | fb) & ((1u << m) - 1);
}

namespace {

struct LfsrShape {
    unsigned m = 0;
    std::uint32_t tap_mask = 0;
};

LfsrShape lfsr_shape(const std::vector<unsigned>& taps) {
    LfsrShape s;
    for (unsigned t : taps) {
        if (t == 0 || t > 31) throw std::invalid_argument("lfsr: tap positions must be in 1..31");
        s.m = std::max(s.m, t);
        s.tap_mask |= 1u << (t - 1);
    }
    if (s.m == 0) throw std::invalid_argument("lfsr: empty tap set");
    return s;
}

}  // namespace

std::uint32_t lfsr_value_at(const std::vector<unsigned>& taps, std::uint32_t seed, std::uint64_t i) {
    const LfsrShape sh = lfsr_shape(taps);
    seed &= (1u << sh.m) - 1;
    if (seed == 0) throw std::invalid_argument("lfsr: zero seed locks the register");
    std::uint32_t s = seed;
    for (std::uint64_t k = 0; k < i; ++k) s = lfsr_step(s, sh.tap_mask, sh.m);
    return s;
}

std::uint64_t lfsr_period(const std::vector<unsigned>& taps, std::uint32_t seed) {
    const LfsrShape sh = lfsr_shape(taps);
    seed &= (1u << sh.m) - 1;
    if (seed == 0) throw std::invalid_argument("lfsr: zero seed locks the register");
    std::uint32_t s = seed;
    std::uint64_t n = 0;
    do {
        s = lfsr_step(s, sh.tap_mask, sh.m);
        ++n;
    } while (s != seed && n <= (1ULL << sh.m));
    return n;
}

namespace {

// Joe & Kuo primitive polynomials and initial direction numbers, dimensions 2..8.
struct SobolInit {
    unsigned s;
    unsigned a;
    std::array<std::uint32_t, 5> m;
};

constexpr std::array<SobolInit, 7> sobol_table{{
    {1, 0, {1}},
    {2, 1, {1, 3}},
    {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},
    {4, 1, {1, 1, 3, 3}},
    {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}},
}};

std::array<std::uint32_t, 32> sobol_directions(unsigned dimension) {
    std::array<std::uint32_t, 32> v{};
    if (dimension == 1) {
        for (unsigned k = 1; k <= 31; ++k) v[k] = 1u << (32 - k);
        return v;
    }
    const SobolInit& t = sobol_table[dimension - 2];
    for (unsigned k = 1; k <= t.s; ++k) v[k] = t.m[k - 1] << (32 - k);
    for (unsigned k = t.s + 1; k <= 31; ++k) {
        v[k] = v[k - t.s] ^ (v[k - t.s] >> t.s);
        for (unsigned j = 1; j < t.s; ++j)
            if ((t.a >> (t.s - 1 - j)) & 1u) v[k] ^= v[k - j];
    }
    return v;
}

}  // namespace

std::uint32_t sobol_value_at(unsigned dimension, unsigned m, std::uint64_t i) {
    if (dimension < 1 || dimension > sobol_max_dimension)
        throw std::invalid_argument("sobol: unsupported dimension " + std::to_string(dimension));
    if (m == 0 || m > 31) throw std::invalid_argument("sobol: m must be in 1..31");
    static const auto tables = [] {
        std::array<std::array<std::uint32_t, 32>, sobol_max_dimension + 1> t{};
        for (unsigned d = 1; d <= sobol_max_dimension; ++d) t[d] = sobol_directions(d);
        return t;
    }();
    const auto& v = tables[dimension];
    i &= (1ULL << m) - 1;
    std::uint32_t x = 0;
    for (unsigned k = 1; i != 0; ++k, i >>= 1)
        if (i & 1) x ^= v[k];
    return x >> (32 - m);
}

SequenceSource SequenceSource::counter(unsigned m) {
    SequenceSource s;
    s.kind = SourceKind::Counter;
    s.m = m;
    return s;
}

SequenceSource SequenceSource::vdc(unsigned n, unsigned m) {
    SequenceSource s;
    s.kind = SourceKind::Vdc;
    s.n = n;
    s.m = m;
    return s;
}

SequenceSource SequenceSource::lfsr(std::vector<unsigned> taps, std::uint32_t seed) {
    SequenceSource s;
    s.kind = SourceKind::Lfsr;
    s.m = lfsr_shape(taps).m;
    s.taps = std::move(taps);
    s.seed = seed;
    return s;
}

SequenceSource SequenceSource::sobol(unsigned dimension, unsigned m) {
    SequenceSource s;
    s.kind = SourceKind::Sobol;
    s.dimension = dimension;
    s.m = m;
    return s;
}

std::uint32_t SequenceSource::value_at(std::uint64_t i) const {
    switch (kind) {
        case SourceKind::Counter: return static_cast<std::uint32_t>(i & ((1ULL << m) - 1));
        case SourceKind::Vdc: return vdc_value_at(n, m, i);
        case SourceKind::Lfsr: return lfsr_value_at(taps, seed, i);
        case SourceKind::Sobol: return sobol_value_at(dimension, m, i);
    }
    return 0;
}

std::vector<std::uint32_t> SequenceSource::values(std::uint64_t offset, std::size_t count) const {
    std::vector<std::uint32_t> out(count);
    if (kind == SourceKind::Lfsr) {
        const LfsrShape sh = lfsr_shape(taps);
        std::uint32_t s = lfsr_value_at(taps, seed, offset);
        for (std::size_t k = 0; k < count; ++k) {
            out[k] = s;
            s = lfsr_step(s, sh.tap_mask, sh.m);
        }
        return out;
    }
    for (std::size_t k = 0; k < count; ++k) out[k] = value_at(offset + k);
    return out;
}

std::string SequenceSource::describe() const {
    std::ostringstream os;
    switch (kind) {
        case SourceKind::Counter: os << "counter(m=" << m << ")"; break;
        case SourceKind::Vdc: os << "vdc(base=" << (1ULL << n) << ",m=" << m << ")"; break;
        case SourceKind::Lfsr: {
            os << "lfsr(taps=";
            for (std::size_t k = 0; k < taps.size(); ++k) os << (k ? "," : "") << taps[k];
            os << ",seed=" << seed << ")";
            break;
        }
        case SourceKind::Sobol: os << "sobol(dim=" << dimension << ",m=" << m << ")"; break;
    }
    return os.str();
}

const std::vector<unsigned>& bundled_lfsr_taps(unsigned m, int slot) {
    static const std::vector<std::vector<unsigned>> input{
        {6, 5, 4, 1}, {7, 6, 4, 2}, {8, 7, 6, 1}, {9, 8, 7, 2}, {10, 8, 6, 1}};
    static const std::vector<std::vector<unsigned>> coeff{
        {6, 5, 3, 2}, {7, 6, 5, 4}, {8, 6, 5, 4}, {9, 8, 6, 5}, {10, 8, 5, 4}};
    if (m < 6 || m > 10) throw std::invalid_argument("no bundled LFSR taps for m=" + std::to_string(m));
    return slot == 0 ? input[m - 6] : coeff[m - 6];
}

std::uint32_t trial_seed(unsigned trial, unsigned m) {
    const std::uint64_t mask = (1ULL << m) - 1;
    return static_cast<std::uint32_t>(((static_cast<std::uint64_t>(trial) * 2654435761ULL) & mask) | 1ULL);
}

}  // namespace scfn
