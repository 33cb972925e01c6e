#include "scfn/circuits.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "scfn/gates.hpp"

namespace scfn {

const std::array<Function, 9>& all_functions() {
    static const std::array<Function, 9> fs{Function::sin,     Function::cos,  Function::tan,
                                            Function::tanh,    Function::sigmoid, Function::exp_neg,
                                            Function::arctan,  Function::sinc, Function::ln1p};
    return fs;
}

const std::array<Variant, 6>& all_variants() {
    static const std::array<Variant, 6> vs{Variant::transc_star, Variant::transc_club, Variant::parhi_lfsr,
                                           Variant::chu_lfsr,    Variant::parhi_sobol, Variant::chu_sobol};
    return vs;
}

std::string_view name(Function f) {
    switch (f) {
        case Function::sin: return "sin";
        case Function::cos: return "cos";
        case Function::tan: return "tan";
        case Function::tanh: return "tanh";
        case Function::arctan: return "arctan";
        case Function::sigmoid: return "sigmoid";
        case Function::sinc: return "sinc";
        case Function::exp_neg: return "exp_neg";
        case Function::ln1p: return "ln1p";
    }
    return "?";
}

std::string_view name(Variant v) {
    switch (v) {
        case Variant::transc_star: return "transc-star";
        case Variant::transc_club: return "transc-club";
        case Variant::parhi_lfsr: return "parhi-lfsr";
        case Variant::chu_lfsr: return "chu-lfsr";
        case Variant::parhi_sobol: return "parhi-sobol";
        case Variant::chu_sobol: return "chu-sobol";
    }
    return "?";
}

std::string_view name(Factor f) {
    switch (f) {
        case Factor::constant: return "const";
        case Factor::x: return "x";
        case Factor::x2: return "x2";
    }
    return "?";
}

std::string_view name(Combiner c) { return c == Combiner::direct ? "direct" : "times_x"; }

std::string_view name(DelayPlacement p) {
    switch (p) {
        case DelayPlacement::factor_chain: return "factor_chain";
        case DelayPlacement::factor_each: return "factor_each";
        case DelayPlacement::stage_input: return "stage_input";
    }
    return "?";
}

DelayPlacement parse_placement(std::string_view s) {
    for (DelayPlacement p : {DelayPlacement::factor_chain, DelayPlacement::factor_each, DelayPlacement::stage_input})
        if (name(p) == s) return p;
    throw std::invalid_argument("unknown delay placement '" + std::string(s) + "'");
}

Function parse_function(std::string_view s) {
    for (Function f : all_functions())
        if (name(f) == s) return f;
    if (s == "atan") return Function::arctan;
    if (s == "exp" || s == "exp-neg") return Function::exp_neg;
    if (s == "ln" || s == "log1p") return Function::ln1p;
    throw std::invalid_argument("unknown function '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s) {
    for (Variant v : all_variants())
        if (name(v) == s) return v;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

bool is_lfsr(Variant v) { return v == Variant::parhi_lfsr || v == Variant::chu_lfsr; }
bool is_transc(Variant v) { return v == Variant::transc_star || v == Variant::transc_club; }

std::vector<Stage> horner_stages(Function f) {
    using F = Factor;
    switch (f) {
        case Function::sin:
        case Function::sinc: return {{F::x2, {1, 42}}, {F::x2, {1, 20}}, {F::x2, {1, 6}}};
        case Function::cos: return {{F::x2, {1, 56}}, {F::x2, {1, 30}}, {F::x2, {1, 12}}, {F::x2, {1, 2}}};
        case Function::tanh: return {{F::x2, {17, 42}}, {F::x2, {2, 5}}, {F::x2, {1, 3}}};
        case Function::arctan: return {{F::x2, {5, 21}}, {F::x2, {3, 5}}, {F::x2, {1, 3}}};
        case Function::sigmoid: return {{F::x2, {1, 10}}, {F::x2, {1, 12}}, {F::x, {1, 2}}, {F::constant, {1, 2}}};
        case Function::exp_neg:
            return {{F::x, {1, 5}}, {F::x, {1, 4}}, {F::x, {1, 3}}, {F::x, {1, 2}}, {F::x, {1, 1}}};
        case Function::ln1p: return {{F::x, {4, 5}}, {F::x, {3, 4}}, {F::x, {2, 3}}, {F::x, {1, 2}}};
        case Function::tan: break;
    }
    throw ConfigNotFound("tan is a quotient of two circuits and has no single Horner form");
}

Combiner horner_combiner(Function f) {
    switch (f) {
        case Function::sin:
        case Function::tanh:
        case Function::arctan:
        case Function::ln1p: return Combiner::times_x;
        default: return Combiner::direct;
    }
}

unsigned HornerSpec::bits() const { return static_cast<unsigned>(std::countr_zero(N)); }

bool HornerSpec::uses_square() const {
    for (const Stage& s : stages)
        if (s.factor == Factor::x2) return true;
    return false;
}

namespace {

int plan_at(const std::vector<int>& plan, std::size_t k) {
    return k < plan.size() && plan[k] > 0 ? plan[k] : 0;
}

}  // namespace

int HornerSpec::square_delay() const { return uses_square() ? plan_at(delay_plan, 0) : 0; }

int HornerSpec::factor_delay(std::size_t stage) const {
    if (stages.at(stage).factor == Factor::constant) return 0;
    const std::size_t first = uses_square() ? 1 : 0;
    if (placement == DelayPlacement::stage_input) return stage == 0 && first == 0 ? plan_at(delay_plan, 0) : 0;
    if (placement == DelayPlacement::factor_each) return stage >= first ? plan_at(delay_plan, stage) : 0;
    int d = 0;
    for (std::size_t k = first; k <= stage; ++k) d += plan_at(delay_plan, k);
    return d;
}

int HornerSpec::stage_input_delay(std::size_t stage) const {
    if (placement != DelayPlacement::stage_input || stage == 0) return 0;
    return plan_at(delay_plan, stage);
}

int HornerSpec::output_delay() const {
    return combiner == Combiner::times_x ? plan_at(delay_plan, stages.size()) : 0;
}

void HornerSpec::validate() const {
    if (N < 2 || (N & (N - 1))) throw std::invalid_argument("spec: N must be a power of two");
    if (stages.empty()) throw std::invalid_argument("spec: no stages");
    if (coeff_sources.size() != stages.size() || coeff_offsets.size() != stages.size())
        throw std::invalid_argument("spec: need one coefficient source and offset per stage");
    if (input_source.m != bits()) throw std::invalid_argument("spec: input source width does not match N");
    for (const auto& s : coeff_sources)
        if (s.m != bits()) throw std::invalid_argument("spec: coefficient source width does not match N");
    for (const Stage& s : stages)
        if (s.coeff.den <= 0 || s.coeff.num < 0 || s.coeff.num > s.coeff.den)
            throw std::invalid_argument("spec: coefficients must lie in [0, 1]");
}

namespace {

struct VdcRow {
    std::uint32_t N;
    unsigned input;
    std::vector<unsigned> coeffs;  // published order
};

struct VdcEntry {
    Function f;
    Variant v;
    std::vector<int> delays;
    std::vector<int> order;  // stage j draws published coefficient order[j]
    std::vector<VdcRow> rows;
    std::vector<int> short_order = {};  // rows with fewer bases than stages
};

// Group sizes n of the VDC-2^n assignments.
const std::vector<VdcEntry>& vdc_table() {
    static const std::vector<VdcEntry> t{
        {Function::sin, Variant::transc_star, {2, 0, 0, 0}, {0, 1, 2},
         {{1024, 2, {7, 8, 9}}, {512, 2, {7, 8, 9}}, {256, 2, {7}}, {128, 2, {1, 3, 7}}, {64, 2, {1, 3, 3}}}},
        {Function::cos, Variant::transc_star, {2, 0, 0, 0}, {0, 1, 2, 3},
         {{1024, 3, {3, 2, 4, 8}}, {512, 3, {3, 2, 4, 8}}, {256, 3, {3, 2, 4, 8}}, {128, 3, {3, 2, 4, 7}},
          {64, 3, {3, 2, 4, 6}}}},
        {Function::tanh, Variant::transc_star, {3, 0, 0, 0}, {0, 1, 2},
         {{1024, 4, {5, 4, 1}}, {512, 4, {5, 4, 1}}, {256, 4, {5, 4, 1}}, {128, 4, {5, 4, 1}}, {64, 4, {5, 4, 1}}}},
        {Function::sigmoid, Variant::transc_star, {2, 0, 0, -1}, {0, 1, 1, 2},
         {{1024, 10, {1, 2, 5}}, {512, 9, {1, 2, 5}}, {256, 8, {1, 2, 5}}, {128, 7, {1, 2, 5}}, {64, 6, {1, 2, 5}}}},
        {Function::exp_neg, Variant::transc_star, {0, 0, 0, 0}, {0, 1, 2, 3, 3},
         {{1024, 7, {4, 10, 9, 9}}, {512, 7, {7, 9, 9, 9}}, {256, 5, {5, 8, 8, 8}}, {128, 3, {6, 7, 7, 7}},
          {64, 3, {6, 6, 7, 7}}}},
        {Function::arctan, Variant::transc_star, {2, 0, 0, 0}, {2, 1, 0},
         {{1024, 3, {9, 3, 8}}, {512, 3, {9, 3, 8}}, {256, 3, {4, 3, 6}}, {128, 3, {7, 3, 6}}, {64, 3, {4, 3, 6}}}},
        {Function::sinc, Variant::transc_star, {2, 0, 0, -1}, {0, 1, 2},
         {{1024, 3, {8, 5, 10}}, {512, 3, {8, 5, 9}}, {256, 3, {8, 5, 8}}, {128, 3, {2, 6, 7}}, {64, 3, {2, 3, 6}}}},
        {Function::ln1p, Variant::transc_star, {0, 0, 0, 0}, {0, 1, 3, 2},
         {{1024, 6, {2, 9, 10, 9}}, {512, 6, {2, 8, 9, 8}}, {256, 4, {6, 7, 1}}, {128, 3, {5, 6, 1}},
          {64, 2, {3, 5, 1}}},
         {0, 1, 1, 2}},

        {Function::sin, Variant::transc_club, {1, 0, 0, 0}, {0, 1, 2},
         {{1024, 1, {10}}, {512, 1, {9}}, {256, 1, {8}}, {128, 1, {7}}, {64, 1, {6}}}},
        {Function::cos, Variant::transc_club, {1, 0, 0, 0}, {0, 1, 2, 3},
         {{1024, 2, {4, 2, 3, 5}}, {512, 2, {4, 2, 3, 5}}, {256, 2, {4, 2, 3, 5}}, {128, 2, {4, 2, 3, 5}},
          {64, 2, {4, 2, 3, 5}}}},
        {Function::tanh, Variant::transc_club, {1, 0, 0, 0}, {2, 1, 0},
         {{1024, 1, {2, 6, 6}}, {512, 1, {2, 6, 6}}, {256, 1, {2, 6, 6}}, {128, 1, {2, 6, 6}}, {64, 1, {2, 6, 6}}}},
        {Function::sigmoid, Variant::transc_club, {1, 0, 0, -1}, {0, 1, 2, 3},
         {{1024, 7, {2}}, {512, 7, {2}}, {256, 7, {2}}, {128, 7, {2}}, {64, 7, {2}}}},
        {Function::exp_neg, Variant::transc_club, {0, 0, 0, 2}, {0, 1, 2, 3, 4},
         {{1024, 5, {6}}, {512, 5, {6}}, {256, 5, {6}}, {128, 5, {2}}, {64, 5, {6}}}},
        {Function::arctan, Variant::transc_club, {1, 0, 0, 0}, {2, 1, 0},
         {{1024, 2, {2, 1, 1}}, {512, 2, {2, 1, 1}}, {256, 2, {2, 1, 1}}, {128, 2, {2, 1, 1}}, {64, 2, {2, 1, 1}}}},
        {Function::sinc, Variant::transc_club, {1, 0, 0, -1}, {0, 1, 2},
         {{1024, 2, {9}}, {512, 2, {8}}, {256, 2, {7}}, {128, 2, {7}}, {64, 2, {6}}}},
        {Function::ln1p, Variant::transc_club, {0, 0, 0, 0}, {0, 2, 1, 3},
         {{1024, 4, {5, 6, 8, 8}}, {512, 4, {5, 6, 8, 8}}, {256, 4, {5, 6, 8, 8}}, {128, 4, {5, 3, 7, 7}},
          {64, 2, {1, 5, 6, 6}}}},
    };
    return t;
}

struct TanRow {
    unsigned sin_input;
    std::vector<unsigned> sin_coeffs;
    std::vector<int> sin_delays;
    unsigned cos_input;
    std::vector<unsigned> cos_coeffs;
    std::vector<int> cos_delays;
    std::vector<std::uint32_t> lengths;
};

const TanRow& tan_row(Variant v) {
    static const TanRow star{3, {7, 7, 7}, {3, 0, 0, 1}, 2, {4, 3, 1, 7}, {3, 0, 0, 2}, {1024, 512, 256, 128}};
    static const TanRow club{5, {8, 8, 4}, {1, 0, 0, 2}, 3, {8, 8, 8, 8}, {1, 0, 0, 0}, {1024, 512, 256}};
    return v == Variant::transc_star ? star : club;
}

std::vector<int> sota_delays(Function f, Variant v) {
    const bool parhi = v == Variant::parhi_lfsr || v == Variant::parhi_sobol;
    if (!parhi) {
        if (f == Function::sigmoid || f == Function::sinc) return {1, 1, 1, -1};
        return {1, 1, 1, 1};
    }
    switch (f) {
        case Function::sin:
        case Function::tanh:
        case Function::arctan: return {3, 1, 1, 3};
        case Function::cos: return {4, 1, 1, 1};
        case Function::sigmoid: return {2, 1, 2, -1};
        case Function::sinc: return {3, 1, 1, -1};
        default: return {1, 1, 1, 1};
    }
}

unsigned clamp_group(unsigned n, unsigned m) { return std::min(n, m); }

void require_power_of_two_length(std::uint32_t N) {
    if (N < 64 || N > 1024 || (N & (N - 1)))
        throw ConfigNotFound("no bundled configuration for N=" + std::to_string(N));
}

HornerSpec base_spec(Function f, Variant v, std::uint32_t N) {
    HornerSpec s;
    s.function = f;
    s.variant = v;
    s.N = N;
    s.stages = horner_stages(f);
    s.combiner = horner_combiner(f);
    s.coeff_offsets.assign(s.stages.size(), 0);
    return s;
}

std::vector<SequenceSource> vdc_coefficients(const std::vector<unsigned>& published, const std::vector<int>& order,
                                             std::size_t stages, unsigned m) {
    std::vector<SequenceSource> out;
    for (std::size_t j = 0; j < stages; ++j) {
        std::size_t k = j < order.size() ? static_cast<std::size_t>(order[j]) : j;
        k = std::min(k, published.size() - 1);
        out.push_back(SequenceSource::vdc(clamp_group(published[k], m), m));
    }
    return out;
}

HornerSpec sota_spec(Function f, Variant v, std::uint32_t N, std::vector<int> delays, bool shared_lfsr = false) {
    HornerSpec s = base_spec(f, v, N);
    const unsigned m = s.bits();
    s.delay_plan = std::move(delays);
    if (is_lfsr(v)) {
        s.input_source = SequenceSource::lfsr(bundled_lfsr_taps(m, 0), trial_seed(0, m));
        s.coeff_sources.assign(s.stages.size(),
                               shared_lfsr ? s.input_source
                                           : SequenceSource::lfsr(bundled_lfsr_taps(m, 1), trial_seed(0, m)));
    } else {
        s.input_source = SequenceSource::sobol(1, m);
        s.coeff_sources.assign(s.stages.size(), SequenceSource::sobol(2, m));
    }
    return s;
}

HornerSpec tan_part(Function part, Variant v, std::uint32_t N, unsigned input, const std::vector<unsigned>& coeffs,
                    const std::vector<int>& delays) {
    HornerSpec s = base_spec(part, v, N);
    const unsigned m = s.bits();
    s.delay_plan = delays;
    s.input_source = SequenceSource::vdc(clamp_group(input, m), m);
    std::vector<int> order(s.stages.size());
    std::iota(order.begin(), order.end(), 0);
    s.coeff_sources = vdc_coefficients(coeffs, order, s.stages.size(), m);
    return s;
}

}  // namespace

HornerSpec builtin_spec(Function f, Variant v, std::uint32_t N) {
    if (f == Function::tan) throw ConfigNotFound("tan is built with builtin_tan_spec");
    if (!is_transc(v)) {
        require_power_of_two_length(N);
        return sota_spec(f, v, N, sota_delays(f, v));
    }
    for (const VdcEntry& e : vdc_table()) {
        if (e.f != f || e.v != v) continue;
        for (const VdcRow& r : e.rows) {
            if (r.N != N) continue;
            HornerSpec s = base_spec(f, v, N);
            const unsigned m = s.bits();
            s.delay_plan = e.delays;
            s.input_source = SequenceSource::vdc(clamp_group(r.input, m), m);
            const bool pad = r.coeffs.size() < s.stages.size() && !e.short_order.empty();
            s.coeff_sources = vdc_coefficients(r.coeffs, pad ? e.short_order : e.order, s.stages.size(), m);
            return s;
        }
    }
    throw ConfigNotFound("no bundled configuration for " + std::string(name(f)) + "/" + std::string(name(v)) +
                         " at N=" + std::to_string(N));
}

TanSpec builtin_tan_spec(Variant v, std::uint32_t N) {
    TanSpec t;
    if (is_transc(v)) {
        const TanRow& r = tan_row(v);
        if (std::find(r.lengths.begin(), r.lengths.end(), N) == r.lengths.end())
            throw ConfigNotFound("no bundled tan configuration for " + std::string(name(v)) + " at N=" +
                                 std::to_string(N));
        t.sin_part = tan_part(Function::sin, v, N, r.sin_input, r.sin_coeffs, r.sin_delays);
        t.cos_part = tan_part(Function::cos, v, N, r.cos_input, r.cos_coeffs, r.cos_delays);
    } else {
        require_power_of_two_length(N);
        const bool parhi = v == Variant::parhi_lfsr || v == Variant::parhi_sobol;
        std::vector<int> sin_d = parhi ? std::vector<int>{3, 1, 1, 3} : std::vector<int>{1, 1, 1, 1};
        std::vector<int> cos_d = parhi ? std::vector<int>{4, 1, 1, 1} : std::vector<int>{1, 1, 1, 1};
        if (v == Variant::parhi_sobol) sin_d = {3, 1, 1, 1};
        t.sin_part = sota_spec(Function::sin, v, N, sin_d, v == Variant::parhi_lfsr);
        t.cos_part = sota_spec(Function::cos, v, N, cos_d);
    }
    t.sin_part.function = Function::sin;
    t.cos_part.function = Function::cos;
    return t;
}

std::vector<std::uint32_t> builtin_lengths(Function f, Variant v) {
    if (!is_transc(v)) return {1024, 512, 256, 128, 64};
    if (f == Function::tan) return tan_row(v).lengths;
    for (const VdcEntry& e : vdc_table()) {
        if (e.f != f || e.v != v) continue;
        std::vector<std::uint32_t> out;
        for (const VdcRow& r : e.rows) out.push_back(r.N);
        return out;
    }
    return {};
}

HornerSpec with_trial(HornerSpec spec, unsigned trial) {
    auto reseed = [&](SequenceSource& s) {
        if (s.kind == SourceKind::Lfsr) s.seed = trial_seed(trial, s.m);
    };
    reseed(spec.input_source);
    for (auto& s : spec.coeff_sources) reseed(s);
    return spec;
}

TanSpec with_trial(TanSpec spec, unsigned trial) {
    spec.sin_part = with_trial(std::move(spec.sin_part), trial);
    spec.cos_part = with_trial(std::move(spec.cos_part), trial);
    return spec;
}

std::uint32_t quantize(const Rational& c, std::uint32_t N) {
    const std::int64_t num = c.num * static_cast<std::int64_t>(N);
    return static_cast<std::uint32_t>((2 * num + c.den) / (2 * c.den));
}

Bitstream input_stream(const HornerSpec& spec, std::uint32_t X) {
    if (X > spec.N) throw std::invalid_argument("X=" + std::to_string(X) + " outside [0, N]");
    return encode(X, spec.input_source, spec.input_offset);
}

std::vector<Bitstream> coefficient_streams(const HornerSpec& spec) {
    std::vector<Bitstream> out;
    out.reserve(spec.stages.size());
    for (std::size_t j = 0; j < spec.stages.size(); ++j)
        out.push_back(encode(quantize(spec.stages[j].coeff, spec.N), spec.coeff_sources[j], spec.coeff_offsets[j]));
    return out;
}

CircuitOutput eval_circuit_streams(const HornerSpec& spec, const Bitstream& x, const std::vector<Bitstream>& coeffs) {
    if (coeffs.size() != spec.stages.size()) throw std::invalid_argument("eval_circuit: coefficient count mismatch");
    CircuitOutput out;
    const Bitstream ones(x.size(), true);
    Bitstream sq = x;
    if (spec.uses_square()) {
        Bitstream xd = dff_delay(x, spec.square_delay());
        sq = and2(x, xd);
        out.pairs.push_back({"i1", x, std::move(xd)});
    }
    out.taps.emplace_back("i1", sq);
    Bitstream t = ones;
    for (std::size_t j = 0; j < spec.stages.size(); ++j) {
        const Stage& st = spec.stages[j];
        const Bitstream& base = st.factor == Factor::x2 ? sq : st.factor == Factor::x ? x : ones;
        const int d = spec.factor_delay(j);
        Bitstream f = d ? dff_delay(base, d) : base;
        const int dt = spec.stage_input_delay(j);
        Bitstream gated = j == 0 ? std::move(f) : and2(f, dt ? dff_delay(t, dt) : t);
        if (j == 0 && !spec.uses_square()) out.pairs.push_back({"i1", gated, coeffs[j]});
        std::string tag = "i" + std::to_string(j + 2);
        out.pairs.push_back({tag, coeffs[j], gated});
        t = nand2(gated, coeffs[j]);
        out.taps.emplace_back(std::move(tag), t);
    }
    if (spec.combiner == Combiner::times_x) {
        const int d = spec.output_delay();
        out.output = and2(t, d ? dff_delay(x, d) : x);
    } else {
        out.output = std::move(t);
    }
    return out;
}

CircuitOutput eval_circuit(const HornerSpec& spec, std::uint32_t X) {
    spec.validate();
    return eval_circuit_streams(spec, input_stream(spec, X), coefficient_streams(spec));
}

Bitstream tan_from_streams(const TanSpec& spec, const Bitstream& sin_out, const Bitstream& cos_out) {
    const std::uint32_t depth = spec.correlator_depth ? spec.correlator_depth : static_cast<std::uint32_t>(sin_out.size());
    CorrelatorResult r = correlate_max(sin_out, cos_out, depth);
    return cordiv(r.a, r.b);
}

Bitstream eval_tan_stream(const TanSpec& spec, std::uint32_t X) {
    const std::uint32_t N = spec.sin_part.N;
    if (static_cast<double>(X) > spec.max_x * N)
        throw DomainError("tan: X/N=" + std::to_string(static_cast<double>(X) / N) + " exceeds " +
                          std::to_string(spec.max_x));
    return tan_from_streams(spec, eval_circuit(spec.sin_part, X).output, eval_circuit(spec.cos_part, X).output);
}

Rational eval_tan(Variant v, std::uint32_t N, std::uint32_t X) {
    return decode(eval_tan_stream(builtin_tan_spec(v, N), X));
}

Bitstream poly_power_stream(const Bitstream& x, unsigned k) {
    if (k < 2 || k > 5) throw std::invalid_argument("poly_power: k must be in 2..5");
    Bitstream out = x;
    for (unsigned j = 1; j < k; ++j) out = and2(out, dff_delay(x, j));
    return out;
}

Bitstream poly_power(std::uint32_t X, unsigned k, std::uint32_t N, const SequenceSource& source) {
    if ((1ULL << source.m) != N) throw std::invalid_argument("poly_power: source width does not match N");
    return poly_power_stream(encode(X, source), k);
}

double maclaurin_reference(Function f, double x) {
    const double x2 = x * x, x3 = x2 * x, x4 = x2 * x2, x5 = x4 * x, x6 = x3 * x3, x7 = x6 * x, x8 = x4 * x4;
    switch (f) {
        case Function::sin: return x - x3 / 6 + x5 / 120 - x7 / 5040;
        case Function::cos: return 1 - x2 / 2 + x4 / 24 - x6 / 720 + x8 / 40320;
        case Function::tan: return x + x3 / 3 + 2 * x5 / 15 + 17 * x7 / 315;
        case Function::tanh: return x - x3 / 3 + 2 * x5 / 15 - 17 * x7 / 315;
        case Function::arctan: return x - x3 / 3 + x5 / 5 - x7 / 21;
        case Function::sigmoid: return 0.5 + x / 4 - x3 / 48 + x5 / 480;
        case Function::sinc: return 1 - x2 / 6 + x4 / 120 - x6 / 5040;
        case Function::exp_neg: return 1 - x + x2 / 2 - x3 / 6 + x4 / 24 - x5 / 120;
        case Function::ln1p: return x - x2 / 2 + x3 / 3 - x4 / 4 + x5 / 5;
    }
    return 0;
}

double true_reference(Function f, double x) {
    switch (f) {
        case Function::sin: return std::sin(x);
        case Function::cos: return std::cos(x);
        case Function::tan: return std::tan(x);
        case Function::tanh: return std::tanh(x);
        case Function::arctan: return std::atan(x);
        case Function::sigmoid: return 1.0 / (1.0 + std::exp(-x));
        case Function::sinc: return x == 0 ? 1.0 : std::sin(x) / x;
        case Function::exp_neg: return std::exp(-x);
        case Function::ln1p: return std::log1p(x);
    }
    return 0;
}

double horner_reference(Function f, double x) {
    if (f == Function::tan) return maclaurin_reference(f, x);
    double t = 1.0;
    for (const Stage& s : horner_stages(f)) {
        const double fv = s.factor == Factor::x2 ? x * x : s.factor == Factor::x ? x : 1.0;
        t = 1.0 - s.coeff.value() * fv * t;
    }
    return horner_combiner(f) == Combiner::times_x ? x * t : t;
}

}  // namespace scfn
