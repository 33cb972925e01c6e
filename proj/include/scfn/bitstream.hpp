#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "scfn/rng.hpp"

namespace scfn {

// Index 0 is the first bit in time and the leftmost character in text form.
class Bitstream {
public:
    Bitstream() = default;
    explicit Bitstream(std::size_t length, bool fill = false);

    static Bitstream from_string(std::string_view bits);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v) {
        const std::uint64_t bit = 1ULL << (i & 63);
        if (v) w_[i >> 6] |= bit; else w_[i >> 6] &= ~bit;
    }

    std::size_t ones() const;
    std::string to_string() const;

    const std::vector<std::uint64_t>& words() const { return w_; }
    std::vector<std::uint64_t>& words() { return w_; }
    // Clears padding bits past the end of the stream.
    void trim();

    friend bool operator==(const Bitstream&, const Bitstream&) = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

struct PairCounts {
    std::size_t a = 0;  // 11
    std::size_t b = 0;  // 10
    std::size_t c = 0;  // 01
    std::size_t d = 0;  // 00
    std::size_t total() const { return a + b + c + d; }
    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

Bitstream encode(std::uint32_t X, const SequenceSource& source, std::uint64_t offset = 0);
// Comparator against precomputed R values; length is R.size().
Bitstream encode_values(std::uint32_t X, const std::vector<std::uint32_t>& R);
// Streams for every X in [0, N], built incrementally.
std::vector<Bitstream> encode_ladder(const std::vector<std::uint32_t>& R);

Rational decode(const Bitstream& s);
double decode_value(const Bitstream& s);

PairCounts pair_counts(const Bitstream& s1, const Bitstream& s2);
double scc(const PairCounts& p);
double scc(const Bitstream& s1, const Bitstream& s2);
double zce(const PairCounts& p);
double zce(const Bitstream& s1, const Bitstream& s2);

// out[i] = in[(i + k) mod N]
Bitstream rotate(const Bitstream& s, long long k);
// out[i] = in[i - k] for i >= k, initial bit before that.
Bitstream shift_in(const Bitstream& s, std::size_t k, bool initial);

void require_same_length(const Bitstream& a, const Bitstream& b, const char* op);

}  // namespace scfn
