#include "scfn/bitstream.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace scfn {

Bitstream::Bitstream(std::size_t length, bool fill)
    : n_(length), w_((length + 63) / 64, fill ? ~0ULL : 0ULL) {
    trim();
}

Bitstream Bitstream::from_string(std::string_view bits) {
    Bitstream s(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') s.set(i, true);
        else if (bits[i] != '0') throw std::invalid_argument("bitstream text must contain only 0 and 1");
    }
    return s;
}

std::size_t Bitstream::ones() const {
    std::size_t c = 0;
    for (std::uint64_t w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

std::string Bitstream::to_string() const {
    std::string out(n_, '0');
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) out[i] = '1';
    return out;
}

void Bitstream::trim() {
    if (n_ & 63) w_.back() &= (1ULL << (n_ & 63)) - 1;
}

void require_same_length(const Bitstream& a, const Bitstream& b, const char* op) {
    if (a.size() != b.size())
        throw std::invalid_argument(std::string(op) + ": stream length mismatch (" +
                                    std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

Bitstream encode(std::uint32_t X, const SequenceSource& source, std::uint64_t offset) {
    const std::uint64_t N = 1ULL << source.m;
    if (X > N) throw std::invalid_argument("encode: X=" + std::to_string(X) + " outside [0, N]");
    return encode_values(X, source.values(offset, N));
}

Bitstream encode_values(std::uint32_t X, const std::vector<std::uint32_t>& R) {
    Bitstream s(R.size());
    auto& w = s.words();
    for (std::size_t i = 0; i < R.size(); ++i)
        w[i >> 6] |= static_cast<std::uint64_t>(X > R[i]) << (i & 63);
    return s;
}

std::vector<Bitstream> encode_ladder(const std::vector<std::uint32_t>& R) {
    const std::size_t N = R.size();
    std::vector<std::vector<std::size_t>> at_value(N);
    for (std::size_t i = 0; i < N; ++i)
        if (R[i] < N) at_value[R[i]].push_back(i);
    std::vector<Bitstream> out;
    out.reserve(N + 1);
    Bitstream cur(N);
    out.push_back(cur);
    for (std::size_t x = 0; x < N; ++x) {
        for (std::size_t i : at_value[x]) cur.set(i, true);
        out.push_back(cur);
    }
    return out;
}

Rational decode(const Bitstream& s) {
    return {static_cast<std::int64_t>(s.ones()), static_cast<std::int64_t>(s.size())};
}

double decode_value(const Bitstream& s) {
    return static_cast<double>(s.ones()) / static_cast<double>(s.size());
}

PairCounts pair_counts(const Bitstream& s1, const Bitstream& s2) {
    require_same_length(s1, s2, "pair_counts");
    PairCounts p;
    const auto& x = s1.words();
    const auto& y = s2.words();
    std::size_t ones1 = 0, ones2 = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        p.a += static_cast<std::size_t>(std::popcount(x[k] & y[k]));
        ones1 += static_cast<std::size_t>(std::popcount(x[k]));
        ones2 += static_cast<std::size_t>(std::popcount(y[k]));
    }
    p.b = ones1 - p.a;
    p.c = ones2 - p.a;
    p.d = s1.size() - p.a - p.b - p.c;
    return p;
}

double scc(const PairCounts& p) {
    const double a = static_cast<double>(p.a), b = static_cast<double>(p.b);
    const double c = static_cast<double>(p.c), d = static_cast<double>(p.d);
    const double N = a + b + c + d;
    const double num = a * d - b * c;
    double den;
    if (num > 0) den = N * std::min(a + b, a + c) - (a + b) * (a + c);
    else den = (a + b) * (a + c) - N * std::max(a - d, 0.0);
    if (den == 0) return 0.0;
    return num / den;
}

double scc(const Bitstream& s1, const Bitstream& s2) { return scc(pair_counts(s1, s2)); }

double zce(const PairCounts& p) {
    const double N = static_cast<double>(p.total());
    const double prod = static_cast<double>(p.a + p.b) * static_cast<double>(p.a + p.c);
    const double delta = static_cast<double>(p.a) / N - prod / (N * N);
    if (delta == 0) return 0.0;
    const double delta0 = std::floor(prod / N + 0.5) / N - prod / (N * N);
    return delta - delta0;
}

double zce(const Bitstream& s1, const Bitstream& s2) { return zce(pair_counts(s1, s2)); }

Bitstream rotate(const Bitstream& s, long long k) {
    const std::size_t N = s.size();
    if (N == 0) return s;
    const std::size_t r = static_cast<std::size_t>(((k % static_cast<long long>(N)) + static_cast<long long>(N)) %
                                                    static_cast<long long>(N));
    if (r == 0) return s;
    Bitstream out(N);
    if (N % 64 == 0) {
        const auto& in = s.words();
        auto& o = out.words();
        const std::size_t W = in.size();
        const std::size_t q = r / 64, b = r % 64;
        for (std::size_t j = 0; j < W; ++j) {
            const std::uint64_t lo = in[(j + q) % W];
            const std::uint64_t hi = in[(j + q + 1) % W];
            o[j] = b ? (lo >> b) | (hi << (64 - b)) : lo;
        }
        return out;
    }
    for (std::size_t i = 0; i < N; ++i) out.set(i, s.get((i + r) % N));
    return out;
}

Bitstream shift_in(const Bitstream& s, std::size_t k, bool initial) {
    Bitstream out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out.set(i, i < k ? initial : s.get(i - k));
    return out;
}

}  // namespace scfn
