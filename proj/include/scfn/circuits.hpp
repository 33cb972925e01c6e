#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "scfn/bitstream.hpp"
#include "scfn/rng.hpp"

namespace scfn {

enum class Function { sin, cos, tan, tanh, arctan, sigmoid, sinc, exp_neg, ln1p };
enum class Variant { transc_star, transc_club, parhi_lfsr, chu_lfsr, parhi_sobol, chu_sobol };
enum class Factor { constant, x, x2 };
enum class Combiner { direct, times_x };
// Where delay-plan columns 2.. act: cumulatively on each stage's factor stream, per stage on the
// factor stream, or on the previous stage output entering the stage.
enum class DelayPlacement { factor_chain, factor_each, stage_input };

const std::array<Function, 9>& all_functions();
const std::array<Variant, 6>& all_variants();
std::string_view name(Function f);
std::string_view name(Variant v);
std::string_view name(Factor f);
std::string_view name(Combiner c);
std::string_view name(DelayPlacement p);
DelayPlacement parse_placement(std::string_view s);
Function parse_function(std::string_view s);
Variant parse_variant(std::string_view s);
bool is_lfsr(Variant v);
bool is_transc(Variant v);

struct ConfigNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct Stage {
    Factor factor = Factor::x2;
    Rational coeff;
};

struct HornerSpec {
    Function function = Function::sin;
    Variant variant = Variant::transc_star;
    std::uint32_t N = 1024;
    std::vector<Stage> stages;  // inner to outer
    Combiner combiner = Combiner::direct;
    // Published per-stage delay counts; -1 marks an empty column.
    std::vector<int> delay_plan;
    DelayPlacement placement = DelayPlacement::stage_input;
    SequenceSource input_source;
    std::uint64_t input_offset = 0;
    std::vector<SequenceSource> coeff_sources;  // one per stage
    std::vector<std::uint64_t> coeff_offsets;   // one per stage

    unsigned bits() const;
    bool uses_square() const;
    // Delay-plan placement.
    int square_delay() const;
    int factor_delay(std::size_t stage) const;
    int stage_input_delay(std::size_t stage) const;
    int output_delay() const;
    void validate() const;
};

struct TanSpec {
    HornerSpec sin_part;
    HornerSpec cos_part;
    std::uint32_t correlator_depth = 0;  // 0 selects N
    double max_x = 0.78;
};

struct StagePair {
    std::string stage;
    Bitstream first;
    Bitstream second;
};

struct CircuitOutput {
    Bitstream output;
    std::vector<std::pair<std::string, Bitstream>> taps;  // i1 = x^2 (or x), i2.. = stage outputs
    std::vector<StagePair> pairs;                         // gate inputs per tap, for correlation profiling
};

std::vector<Stage> horner_stages(Function f);
Combiner horner_combiner(Function f);

HornerSpec builtin_spec(Function f, Variant v, std::uint32_t N);
TanSpec builtin_tan_spec(Variant v, std::uint32_t N);
std::vector<std::uint32_t> builtin_lengths(Function f, Variant v);
// Reseeds every LFSR source of a spec from the trial schedule.
HornerSpec with_trial(HornerSpec spec, unsigned trial);
TanSpec with_trial(TanSpec spec, unsigned trial);

std::uint32_t quantize(const Rational& c, std::uint32_t N);

Bitstream input_stream(const HornerSpec& spec, std::uint32_t X);
std::vector<Bitstream> coefficient_streams(const HornerSpec& spec);
CircuitOutput eval_circuit(const HornerSpec& spec, std::uint32_t X);
CircuitOutput eval_circuit_streams(const HornerSpec& spec, const Bitstream& x, const std::vector<Bitstream>& coeffs);

Bitstream tan_from_streams(const TanSpec& spec, const Bitstream& sin_out, const Bitstream& cos_out);
Bitstream eval_tan_stream(const TanSpec& spec, std::uint32_t X);
Rational eval_tan(Variant v, std::uint32_t N, std::uint32_t X);

Bitstream poly_power_stream(const Bitstream& x, unsigned k);
Bitstream poly_power(std::uint32_t X, unsigned k, std::uint32_t N, const SequenceSource& source);

double maclaurin_reference(Function f, double x);
double true_reference(Function f, double x);
double horner_reference(Function f, double x);

}  // namespace scfn
