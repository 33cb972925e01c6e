#include "scfn/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "scfn/config.hpp"

namespace scfn {

std::string_view name(Reference r) { return r == Reference::maclaurin ? "maclaurin" : "true"; }

Reference parse_reference(std::string_view s) {
    if (s == "maclaurin") return Reference::maclaurin;
    if (s == "true") return Reference::true_function;
    throw std::invalid_argument("unknown reference '" + std::string(s) + "'");
}

namespace {

template <class Fn>
void parallel_for(std::size_t n, unsigned threads, Fn fn) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
    if (threads <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < n; i = next++) fn(i);
        });
    for (auto& th : pool) th.join();
}

bool has_lfsr(const HornerSpec& s) {
    if (s.input_source.kind == SourceKind::Lfsr) return true;
    for (const auto& c : s.coeff_sources)
        if (c.kind == SourceKind::Lfsr) return true;
    return false;
}

double reference_value(Function f, double x, Reference r) {
    return r == Reference::maclaurin ? maclaurin_reference(f, x) : true_reference(f, x);
}

std::vector<Bitstream> input_ladder(const HornerSpec& s) {
    return encode_ladder(s.input_source.values(s.input_offset, s.N));
}

// Evaluates estimate(trial, X) over the full grid and assembles the report.
template <class Prepare>
EvalReport run_sweep(Function f, Variant v, std::uint32_t N, std::uint32_t limit, unsigned trials,
                     const SweepOptions& opt, std::string config, Prepare prepare) {
    EvalReport rep;
    rep.function = f;
    rep.variant = v;
    rep.N = N;
    rep.trials = trials;
    rep.reference = opt.reference;
    rep.config_json = std::move(config);
    const std::size_t per = static_cast<std::size_t>(limit) + 1;
    std::vector<double> est(per * trials);
    if (trials == 1) {
        auto eval = prepare(0u);
        parallel_for(per, opt.threads, [&](std::size_t X) { est[X] = eval(static_cast<std::uint32_t>(X)); });
    } else {
        parallel_for(trials, opt.threads, [&](std::size_t t) {
            auto eval = prepare(static_cast<unsigned>(t));
            for (std::size_t X = 0; X < per; ++X) est[t * per + X] = eval(static_cast<std::uint32_t>(X));
        });
    }
    double acc = 0;
    if (opt.keep_records) rep.records.reserve(est.size());
    for (std::size_t k = 0; k < est.size(); ++k) {
        const std::uint32_t X = static_cast<std::uint32_t>(k % per);
        const double ref = reference_value(f, static_cast<double>(X) / N, opt.reference);
        const double e = est[k] - ref;
        acc += e * e;
        if (opt.keep_records) rep.records.push_back({X, static_cast<unsigned>(k / per), est[k], ref, e * e});
    }
    rep.mse = est.empty() ? 0 : acc / static_cast<double>(est.size());
    return rep;
}

}  // namespace

std::uint32_t sweep_limit(Function f, std::uint32_t N, double tan_max_x) {
    if (f == Function::tan) return static_cast<std::uint32_t>(std::floor(tan_max_x * N));
    return N;
}

EvalReport mse_sweep_spec(const HornerSpec& spec, const SweepOptions& opt) {
    spec.validate();
    const unsigned trials = has_lfsr(spec) ? std::max(1u, opt.trials) : 1u;
    return run_sweep(spec.function, spec.variant, spec.N, spec.N, trials, opt, spec_to_json(spec),
                     [&](unsigned t) {
                         HornerSpec s = trials > 1 ? with_trial(spec, t) : spec;
                         auto ladder = std::make_shared<std::vector<Bitstream>>(input_ladder(s));
                         auto coeffs = std::make_shared<std::vector<Bitstream>>(coefficient_streams(s));
                         return [s, ladder, coeffs](std::uint32_t X) {
                             return decode_value(eval_circuit_streams(s, (*ladder)[X], *coeffs).output);
                         };
                     });
}

EvalReport mse_sweep_tan(const TanSpec& spec, const SweepOptions& opt) {
    spec.sin_part.validate();
    spec.cos_part.validate();
    const std::uint32_t N = spec.sin_part.N;
    const unsigned trials = has_lfsr(spec.sin_part) || has_lfsr(spec.cos_part) ? std::max(1u, opt.trials) : 1u;
    return run_sweep(Function::tan, spec.sin_part.variant, N, sweep_limit(Function::tan, N, spec.max_x), trials, opt,
                     tan_spec_to_json(spec), [&](unsigned t) {
                         TanSpec s = trials > 1 ? with_trial(spec, t) : spec;
                         auto ls = std::make_shared<std::vector<Bitstream>>(input_ladder(s.sin_part));
                         auto lc = std::make_shared<std::vector<Bitstream>>(input_ladder(s.cos_part));
                         auto cs = std::make_shared<std::vector<Bitstream>>(coefficient_streams(s.sin_part));
                         auto cc = std::make_shared<std::vector<Bitstream>>(coefficient_streams(s.cos_part));
                         return [s, ls, lc, cs, cc](std::uint32_t X) {
                             const Bitstream so = eval_circuit_streams(s.sin_part, (*ls)[X], *cs).output;
                             const Bitstream co = eval_circuit_streams(s.cos_part, (*lc)[X], *cc).output;
                             return decode_value(tan_from_streams(s, so, co));
                         };
                     });
}

EvalReport mse_sweep(Function f, Variant v, std::uint32_t N, const SweepOptions& opt) {
    if (f == Function::tan) return mse_sweep_tan(builtin_tan_spec(v, N), opt);
    return mse_sweep_spec(builtin_spec(f, v, N), opt);
}

std::size_t Histogram::mass() const {
    std::size_t m = 0;
    for (std::size_t c : counts) m += c;
    return m;
}

Histogram histogram(const std::vector<double>& values, double lo, double hi, std::size_t bins) {
    Histogram h{lo, hi, std::vector<std::size_t>(bins, 0)};
    for (double v : values) {
        double pos = (v - lo) / (hi - lo) * static_cast<double>(bins);
        std::size_t k = pos <= 0 ? 0 : static_cast<std::size_t>(pos);
        h.counts[std::min(k, bins - 1)]++;
    }
    return h;
}

std::vector<CorrelationProfile> correlation_profile(const HornerSpec& spec, std::size_t max_stages) {
    spec.validate();
    const auto ladder = input_ladder(spec);
    const auto coeffs = coefficient_streams(spec);
    std::vector<CorrelationProfile> prof;
    for (std::uint32_t X = 0; X <= spec.N; ++X) {
        const CircuitOutput out = eval_circuit_streams(spec, ladder[X], coeffs);
        for (std::size_t k = 0; k < out.pairs.size() && k < max_stages; ++k) {
            if (prof.size() <= k) prof.push_back({out.pairs[k].stage, {}, {}, {}, {}, {}});
            const PairCounts pc = pair_counts(out.pairs[k].first, out.pairs[k].second);
            prof[k].X.push_back(X);
            prof[k].scc.push_back(scc(pc));
            prof[k].zce.push_back(zce(pc));
        }
    }
    for (auto& p : prof) {
        p.scc_hist = histogram(p.scc, -1.0, 1.0, 40);
        p.zce_hist = histogram(p.zce, -0.25, 0.25, 50);
    }
    return prof;
}

std::vector<CorrelationProfile> correlation_profile(Function f, Variant v, std::uint32_t N) {
    if (f == Function::tan) throw ConfigNotFound("tan has no single Horner cascade to profile");
    return correlation_profile(builtin_spec(f, v, N));
}

std::vector<HwCostRecord> load_hw_costs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open hardware cost file '" + path + "'");
    std::string line;
    std::getline(in, line);
    if (line != "function,design,N,area_um2,cpl_ns,power_uw,energy_pj")
        throw IoError("unexpected header in '" + path + "'");
    std::vector<HwCostRecord> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) f.push_back(cell);
        if (f.size() != 7) throw IoError("malformed row in '" + path + "': " + line);
        rows.push_back({f[0], f[1], static_cast<std::uint32_t>(std::stoul(f[2])), std::stod(f[3]), std::stod(f[4]),
                        std::stod(f[5]), std::stod(f[6])});
    }
    return rows;
}

std::string hw_design_name(Variant v) {
    switch (v) {
        case Variant::transc_star: return "transc-star";
        case Variant::transc_club: return "transc-club";
        case Variant::parhi_lfsr:
        case Variant::parhi_sobol: return "parhi";
        default: return "chu";
    }
}

const HwCostRecord& find_hw(const std::vector<HwCostRecord>& rows, Function f, Variant v, std::uint32_t N) {
    const std::string design = hw_design_name(v);
    for (const auto& r : rows)
        if (r.function == name(f) && r.design == design && r.N == N) return r;
    throw ConfigNotFound("no hardware cost row for " + std::string(name(f)) + "/" + design + " at N=" +
                         std::to_string(N));
}

double fom(double mse, const HwCostRecord& hw) {
    if (!(mse > 0)) throw std::invalid_argument("fom: mse must be positive");
    return (1.0 / mse) / (hw.area * hw.power * hw.cpl);
}

std::string format_g9(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string report_csv(const EvalReport& r, bool header) {
    std::ostringstream os;
    if (header) os << "function,variant,N,X,estimate,reference,sq_error\n";
    for (const auto& rec : r.records)
        os << name(r.function) << ',' << name(r.variant) << ',' << r.N << ',' << rec.X << ','
           << format_g9(rec.estimate) << ',' << format_g9(rec.reference) << ',' << format_g9(rec.sq_error) << '\n';
    return os.str();
}

namespace {

// Shortest round-trip printing then emits at most 9 significant digits.
double round9(double v) { return std::stod(format_g9(v)); }

}  // namespace

std::string report_json(const EvalReport& r) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["function"] = std::string(name(r.function));
    j["variant"] = std::string(name(r.variant));
    j["N"] = r.N;
    j["trials"] = r.trials;
    j["reference"] = std::string(name(r.reference));
    j["mse"] = round9(r.mse);
    j["config"] = r.config_json.empty() ? ordered_json() : ordered_json::parse(r.config_json);
    ordered_json recs = ordered_json::array();
    for (const auto& rec : r.records)
        recs.push_back({{"X", rec.X},
                        {"trial", rec.trial},
                        {"estimate", round9(rec.estimate)},
                        {"reference", round9(rec.reference)},
                        {"sq_error", round9(rec.sq_error)}});
    j["records"] = recs;
    return j.dump(2) + "\n";
}

void export_report(const EvalReport& report, const std::string& path, ReportFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write report to '" + path + "'");
    out << (format == ReportFormat::csv ? report_csv(report) : report_json(report));
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace scfn
