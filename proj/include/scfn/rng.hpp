#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scfn {

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    Rational reduced() const;
    friend bool operator==(const Rational& a, const Rational& b) {
        return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
    }
};

std::string to_string(const Rational& r);

// Base-`base` digits of i reversed behind the radix point.
Rational radical_inverse(std::uint64_t i, std::uint64_t base);

std::uint32_t vdc_value_at(unsigned n, unsigned m, std::uint64_t i);

// Fibonacci LFSR. Register width is the largest tap; tap t reads register bit t-1.
std::uint32_t lfsr_step(std::uint32_t state, std::uint32_t tap_mask, unsigned m);
std::uint32_t lfsr_value_at(const std::vector<unsigned>& taps, std::uint32_t seed, std::uint64_t i);
std::uint64_t lfsr_period(const std::vector<unsigned>& taps, std::uint32_t seed);

constexpr unsigned sobol_max_dimension = 8;
std::uint32_t sobol_value_at(unsigned dimension, unsigned m, std::uint64_t i);

enum class SourceKind { Counter, Vdc, Lfsr, Sobol };

struct SequenceSource {
    SourceKind kind = SourceKind::Counter;
    unsigned m = 1;
    unsigned n = 1;                // Vdc group size
    std::vector<unsigned> taps;    // Lfsr
    std::uint32_t seed = 1;        // Lfsr
    unsigned dimension = 1;        // Sobol

    static SequenceSource counter(unsigned m);
    static SequenceSource vdc(unsigned n, unsigned m);
    static SequenceSource lfsr(std::vector<unsigned> taps, std::uint32_t seed);
    static SequenceSource sobol(unsigned dimension, unsigned m);

    std::uint32_t value_at(std::uint64_t i) const;
    std::vector<std::uint32_t> values(std::uint64_t offset, std::size_t count) const;
    std::string describe() const;

    friend bool operator==(const SequenceSource&, const SequenceSource&) = default;
};

// Cycle-by-cycle view over an indexable source.
class SourceStream {
public:
    explicit SourceStream(SequenceSource src, std::uint64_t offset = 0)
        : src_(std::move(src)), index_(offset) {}
    std::uint32_t next() { return src_.value_at(index_++); }
    std::uint64_t index() const { return index_; }

private:
    SequenceSource src_;
    std::uint64_t index_;
};

// Maximal tap sets bundled for m = 6..10. Slot 0 drives inputs, slot 1 coefficients.
const std::vector<unsigned>& bundled_lfsr_taps(unsigned m, int slot);

std::uint32_t trial_seed(unsigned trial, unsigned m);

}  // namespace scfn
