#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "scfn/apps.hpp"
#include "scfn/config.hpp"
#include "scfn/eval.hpp"
#include "scfn/gates.hpp"

using namespace scfn;

namespace {

constexpr int exit_usage = 2;
constexpr int exit_config = 3;
constexpr int exit_io = 4;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Writes to the named file, or stdout when the path is empty or "-".
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write '" + path + "'");
    out << text;
    if (!out) throw IoError("write failed for '" + path + "'");
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, sep);)
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<Function> functions_from(const std::string& s) {
    if (s == "all") return {all_functions().begin(), all_functions().end()};
    std::vector<Function> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_function(t));
    return out;
}

std::vector<Variant> variants_from(const std::string& s) {
    if (s == "all") return {all_variants().begin(), all_variants().end()};
    std::vector<Variant> out;
    for (const auto& t : split(s, ',')) out.push_back(parse_variant(t));
    return out;
}

std::vector<std::uint32_t> lengths_from(const std::string& s) {
    std::vector<std::uint32_t> out;
    for (const auto& t : split(s, ',')) {
        std::size_t used = 0;
        const unsigned long v = std::stoul(t, &used);
        if (used != t.size()) throw UsageError("bad length '" + t + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    if (out.empty()) throw UsageError("empty --n-list");
    return out;
}

// Resolved command line, defaults included.
std::string echo(const std::vector<const CLI::App*>& chain) {
    std::string line = "#";
    for (const CLI::App* a : chain) {
        line += " " + a->get_name();
        for (const CLI::Option* o : a->get_options()) {
            if (o->get_lnames().empty() || o->get_lnames().front() == "help") continue;
            const std::string flag = " --" + o->get_lnames().front();
            if (o->get_expected_min() == 0) {
                if (o->count() > 0) line += flag;
                continue;
            }
            std::string v;
            if (o->count() > 0) {
                for (const auto& r : o->results()) v += (v.empty() ? "" : ",") + r;
            } else {
                v = o->get_default_str();
            }
            if (!v.empty()) line += flag + " " + v;
        }
    }
    return line + "\n";
}

struct Common {
    unsigned threads = 0;
};

struct GenOpts {
    std::string rng = "vdc";
    unsigned bits = 10;
    unsigned base = 2;
    std::string poly;
    std::uint32_t seed = 1;
    unsigned dim = 1;
    std::uint64_t count = 0;
    std::uint64_t offset = 0;
    long long encode = -1;
    std::string out;
};

SequenceSource source_from(const GenOpts& o) {
    if (o.bits < 1 || o.bits > 31) throw UsageError("--bits must be in 1..31");
    if (o.rng == "counter") return SequenceSource::counter(o.bits);
    if (o.rng == "vdc") {
        if (o.base < 2 || (o.base & (o.base - 1))) throw UsageError("--base must be a power of two >= 2");
        return SequenceSource::vdc(static_cast<unsigned>(std::countr_zero(o.base)), o.bits);
    }
    if (o.rng == "lfsr") {
        std::vector<unsigned> taps;
        if (o.poly.empty()) {
            taps = bundled_lfsr_taps(o.bits, 0);
        } else {
            for (const auto& t : split(o.poly, ',')) taps.push_back(static_cast<unsigned>(std::stoul(t)));
        }
        unsigned width = 0;
        for (unsigned t : taps) width = std::max(width, t);
        if (width != o.bits) throw UsageError("--poly highest exponent must equal --bits");
        if (o.seed == 0 || o.seed >= (1u << o.bits)) throw UsageError("--seed must be nonzero and fit in --bits");
        return SequenceSource::lfsr(taps, o.seed);
    }
    if (o.rng == "sobol") {
        if (o.dim < 1 || o.dim > sobol_max_dimension) throw UsageError("--dim must be in 1..8");
        return SequenceSource::sobol(o.dim, o.bits);
    }
    throw UsageError("unknown --rng '" + o.rng + "'");
}

int run_gen(const GenOpts& o) {
    const SequenceSource src = source_from(o);
    const std::uint64_t count = o.count ? o.count : (1ULL << o.bits);
    std::ostringstream os;
    if (o.encode >= 0) {
        if (o.encode > (1LL << o.bits)) throw UsageError("--encode must lie in [0, 2^bits]");
        std::vector<std::uint32_t> R = src.values(o.offset, count);
        os << encode_values(static_cast<std::uint32_t>(o.encode), R).to_string() << '\n';
    } else {
        for (std::uint32_t v : src.values(o.offset, count)) os << v << '\n';
    }
    emit(o.out, os.str());
    return 0;
}

struct EvalOpts {
    std::string fn = "sin";
    std::string variant = "transc-star";
    std::uint32_t n = 1024;
    double x = -1;
    long long X = -1;
    std::string config;
    std::string reference = "maclaurin";
    unsigned trial = 0;
    bool trace = false;
    std::string out;
};

std::uint32_t resolve_x(const EvalOpts& o, std::uint32_t N) {
    if (o.X >= 0) {
        if (o.X > N) throw UsageError("--X must lie in [0, N]");
        return static_cast<std::uint32_t>(o.X);
    }
    if (o.x < 0) throw UsageError("one of --x or --X is required");
    if (o.x > 1) throw UsageError("--x must lie in [0, 1]");
    return static_cast<std::uint32_t>(std::lround(o.x * N));
}

std::string trace_csv(const std::vector<std::pair<std::string, Bitstream>>& cols) {
    std::ostringstream os;
    os << "cycle";
    for (const auto& c : cols) os << ',' << c.first;
    os << '\n';
    const std::size_t n = cols.empty() ? 0 : cols.front().second.size();
    for (std::size_t i = 0; i < n; ++i) {
        os << i;
        for (const auto& c : cols) os << ',' << int(c.second.get(i));
        os << '\n';
    }
    return os.str();
}

double reference_for(Function f, double x, Reference r) {
    return r == Reference::maclaurin ? maclaurin_reference(f, x) : true_reference(f, x);
}

int run_eval(const EvalOpts& o) {
    const Reference ref = parse_reference(o.reference);
    std::ostringstream os;
    std::string trace;
    Function f;
    Variant v;
    std::uint32_t N, X;
    double estimate;
    if (!o.config.empty() ? config_is_tan(read_file(o.config)) : parse_function(o.fn) == Function::tan) {
        TanSpec t = o.config.empty() ? builtin_tan_spec(parse_variant(o.variant), o.n)
                                     : tan_spec_from_json(read_file(o.config));
        t = with_trial(t, o.trial);
        f = Function::tan;
        v = t.sin_part.variant;
        N = t.sin_part.N;
        X = resolve_x(o, N);
        const Bitstream so = eval_circuit(t.sin_part, X).output;
        const Bitstream co = eval_circuit(t.cos_part, X).output;
        if (static_cast<double>(X) > t.max_x * N)
            throw DomainError("tan: X/N exceeds " + std::to_string(t.max_x));
        const Bitstream q = tan_from_streams(t, so, co);
        estimate = decode_value(q);
        if (o.trace) {
            const std::uint32_t depth = t.correlator_depth ? t.correlator_depth : N;
            const GateTrace corr = correlate_max_trace(so, co, depth);
            const CorrelatorResult cr = correlate_max(so, co, depth);
            const GateTrace div = cordiv_trace(cr.a, cr.b);
            std::ostringstream ts;
            ts << "cycle,sin,cos,corr_state,sin_c,cos_c,cordiv_state,tan\n";
            for (std::size_t i = 0; i < so.size(); ++i)
                ts << i << ',' << so.get(i) << ',' << co.get(i) << ',' << corr.state_log[i] << ',' << cr.a.get(i)
                   << ',' << cr.b.get(i) << ',' << div.state_log[i] << ',' << div.output.get(i) << '\n';
            trace = ts.str();
        }
    } else {
        HornerSpec s = o.config.empty() ? builtin_spec(parse_function(o.fn), parse_variant(o.variant), o.n)
                                        : spec_from_json(read_file(o.config));
        s = with_trial(s, o.trial);
        f = s.function;
        v = s.variant;
        N = s.N;
        X = resolve_x(o, N);
        const Bitstream x = input_stream(s, X);
        const auto coeffs = coefficient_streams(s);
        const CircuitOutput out = eval_circuit_streams(s, x, coeffs);
        estimate = decode_value(out.output);
        if (o.trace) {
            std::vector<std::pair<std::string, Bitstream>> cols{{"x", x}};
            for (std::size_t k = 0; k < coeffs.size(); ++k) cols.emplace_back("c" + std::to_string(k + 1), coeffs[k]);
            for (const auto& t : out.taps) cols.push_back(t);
            cols.emplace_back("out", out.output);
            trace = trace_csv(cols);
        }
    }
    const double xv = static_cast<double>(X) / N;
    const double r = reference_for(f, xv, ref);
    os << "function=" << name(f) << " variant=" << name(v) << " N=" << N << " X=" << X << " x=" << format_g9(xv)
       << " estimate=" << format_g9(estimate) << " reference=" << format_g9(r)
       << " abs_error=" << format_g9(std::abs(estimate - r)) << '\n';
    std::cout << os.str();
    if (o.trace) emit(o.out, trace);
    return 0;
}

struct SweepOpts {
    std::string fn = "sin";
    std::string variant = "transc-star";
    std::string n_list = "1024";
    unsigned trials = 0;
    std::string config;
    std::string reference = "maclaurin";
    std::string format = "csv";
    std::string out;
};

bool variant_has_lfsr(Variant v) { return is_lfsr(v); }

int run_sweep(const SweepOpts& o, const Common& c) {
    const Reference ref = parse_reference(o.reference);
    if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
    std::vector<EvalReport> reports;
    // Deterministic variants in a mixed list run once.
    auto opts_for = [&](bool lfsr) {
        SweepOptions so;
        so.trials = lfsr ? (o.trials ? o.trials : 1000u) : 1u;
        so.reference = ref;
        so.threads = c.threads;
        so.keep_records = !o.out.empty();
        return so;
    };
    if (!o.config.empty()) {
        const std::string text = read_file(o.config);
        if (config_is_tan(text)) {
            const TanSpec t = tan_spec_from_json(text);
            if (o.trials > 1 && !variant_has_lfsr(t.sin_part.variant))
                throw UsageError("--trials > 1 requires an LFSR variant");
            reports.push_back(mse_sweep_tan(t, opts_for(variant_has_lfsr(t.sin_part.variant))));
        } else {
            const HornerSpec s = spec_from_json(text);
            if (o.trials > 1 && !variant_has_lfsr(s.variant)) throw UsageError("--trials > 1 requires an LFSR variant");
            reports.push_back(mse_sweep_spec(s, opts_for(variant_has_lfsr(s.variant))));
        }
    } else {
        const auto fs = functions_from(o.fn);
        const auto vs = variants_from(o.variant);
        const auto ns = lengths_from(o.n_list);
        if (o.trials > 1 && std::none_of(vs.begin(), vs.end(), variant_has_lfsr))
            throw UsageError("--trials > 1 requires an LFSR variant");
        for (Function f : fs)
            for (Variant v : vs)
                for (std::uint32_t N : ns) reports.push_back(mse_sweep(f, v, N, opts_for(variant_has_lfsr(v))));
    }
    std::ostringstream summary;
    summary << "function,variant,N,trials,mse,mse_e4\n";
    for (const auto& r : reports)
        summary << name(r.function) << ',' << name(r.variant) << ',' << r.N << ',' << r.trials << ','
                << format_g9(r.mse) << ',' << format_g9(r.mse * 1e4) << '\n';
    std::cout << summary.str();
    if (!o.out.empty()) {
        std::string text;
        if (o.format == "csv") {
            for (std::size_t k = 0; k < reports.size(); ++k) text += report_csv(reports[k], k == 0);
            if (reports.empty()) text = "function,variant,N,X,estimate,reference,sq_error\n";
        } else if (reports.size() == 1) {
            text = report_json(reports.front());
        } else {
            text = "[\n";
            for (std::size_t k = 0; k < reports.size(); ++k) {
                std::string one = report_json(reports[k]);
                one.pop_back();
                text += one + (k + 1 < reports.size() ? ",\n" : "\n");
            }
            text += "]\n";
        }
        emit(o.out, text);
    }
    return 0;
}

struct CorrOpts {
    std::string fn = "sin";
    std::string variant = "transc-star";
    std::uint32_t n = 1024;
    std::string stage = "all";
    std::string config;
    bool hist = false;
    std::string out;
};

int run_corr(const CorrOpts& o) {
    const HornerSpec s = o.config.empty() ? builtin_spec(parse_function(o.fn), parse_variant(o.variant), o.n)
                                          : spec_from_json(read_file(o.config));
    const auto prof = correlation_profile(s);
    bool found = o.stage == "all";
    std::ostringstream os;
    os << (o.hist ? "stage,metric,bin_lo,bin_hi,count\n" : "stage,X,scc,zce\n");
    for (const auto& p : prof) {
        if (o.stage != "all" && p.stage != o.stage) continue;
        found = true;
        if (!o.hist) {
            for (std::size_t k = 0; k < p.X.size(); ++k)
                os << p.stage << ',' << p.X[k] << ',' << format_g9(p.scc[k]) << ',' << format_g9(p.zce[k]) << '\n';
            continue;
        }
        for (const auto& [metric, h] : {std::pair{"scc", &p.scc_hist}, std::pair{"zce", &p.zce_hist}}) {
            const double w = (h->hi - h->lo) / static_cast<double>(h->counts.size());
            for (std::size_t b = 0; b < h->counts.size(); ++b)
                os << p.stage << ',' << metric << ',' << format_g9(h->lo + b * w) << ','
                   << format_g9(h->lo + (b + 1) * w) << ',' << h->counts[b] << '\n';
        }
    }
    if (!found) throw UsageError("unknown --stage '" + o.stage + "'");
    emit(o.out, os.str());
    return 0;
}

struct FomOpts {
    std::string hw = "data/hw_costs.csv";
    std::string mse;
    double mse_value = 0;
    std::string fn = "sin";
    std::string variant = "transc-star";
    std::uint32_t n = 1024;
    std::string out;
};

struct MseKey {
    std::string function, variant;
    std::uint32_t N;
    auto operator<=>(const MseKey&) const = default;
};

std::map<MseKey, double> mse_from_csv(const std::string& path) {
    std::istringstream in(read_file(path));
    std::string line;
    std::getline(in, line);
    if (line != "function,variant,N,X,estimate,reference,sq_error")
        throw IoError("unexpected header in '" + path + "'");
    std::map<MseKey, std::pair<double, std::size_t>> acc;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split(line, ',');
        if (f.size() != 7) throw IoError("malformed row in '" + path + "': " + line);
        auto& a = acc[{f[0], f[1], static_cast<std::uint32_t>(std::stoul(f[2]))}];
        a.first += std::stod(f[6]);
        a.second++;
    }
    std::map<MseKey, double> out;
    for (const auto& [k, v] : acc) out[k] = v.first / static_cast<double>(v.second);
    return out;
}

int run_fom(const FomOpts& o, const Common& c) {
    const auto hw = load_hw_costs(o.hw);
    std::map<MseKey, double> mse;
    if (!o.mse.empty()) {
        mse = mse_from_csv(o.mse);
    } else if (o.mse_value > 0) {
        mse[{o.fn, o.variant, o.n}] = o.mse_value;
    } else {
        const Function f = parse_function(o.fn);
        const Variant v = parse_variant(o.variant);
        SweepOptions so;
        so.trials = is_lfsr(v) ? 1000 : 1;
        so.threads = c.threads;
        so.keep_records = false;
        mse[{std::string(name(f)), std::string(name(v)), o.n}] = mse_sweep(f, v, o.n, so).mse;
    }
    std::ostringstream os;
    os << "function,variant,N,mse_e4,area_um2,power_uw,cpl_ns,fom\n";
    for (const auto& [k, m] : mse) {
        const HwCostRecord& r = find_hw(hw, parse_function(k.function), parse_variant(k.variant), k.N);
        os << name(parse_function(k.function)) << ',' << name(parse_variant(k.variant)) << ',' << k.N << ','
           << format_g9(m * 1e4) << ',' << format_g9(r.area) << ',' << format_g9(r.power) << ',' << format_g9(r.cpl)
           << ',' << format_g9(fom(m, r)) << '\n';
    }
    emit(o.out, os.str());
    return 0;
}

struct AppOpts {
    std::string variant = "transc-star";
    std::uint32_t n = 1024;
    bool exact = false;
    unsigned grid = 32;
    double l1 = 0.5;
    double l2 = 0.5;
    unsigned steps = 100;
    double alpha = 0.5;
    bool bilinear = false;
    bool inverse = false;
    std::string in;
    std::string pattern = "checkerboard";
    std::uint32_t size = 128;
    std::uint32_t cell = 8;
    std::string out;
};

SinCosProvider provider_for(const AppOpts& o) {
    return o.exact ? SinCosProvider::exact() : SinCosProvider::sc(parse_variant(o.variant), o.n);
}

int run_arm(const AppOpts& o) {
    const PerrReport r = perr_sweep(o.l1, o.l2, o.grid, provider_for(o));
    std::cout << "provider=" << provider_for(o).describe() << " grid=" << o.grid << " points=" << r.rows.size()
              << " mean_perr=" << format_g9(r.mean) << '\n';
    if (!o.out.empty()) emit(o.out, arm_csv(r));
    return 0;
}

int run_angle(const AppOpts& o) {
    const SinCosProvider p = provider_for(o);
    const auto rows = angle_error_sweep(p, o.steps);
    double acc = 0;
    for (const auto& r : rows) acc += r.e_deg;
    std::cout << "provider=" << p.describe() << " steps=" << o.steps
              << " mean_e_deg=" << format_g9(acc / static_cast<double>(rows.size())) << '\n';
    if (!o.out.empty()) emit(o.out, rotation_csv(rows));
    return 0;
}

int run_rotate(const AppOpts& o) {
    if (o.out.empty()) throw UsageError("rotate needs --out");
    const GrayImage img = o.in.empty() ? checkerboard(o.size, o.size, o.cell) : read_pgm(o.in);
    const SinCosProvider p = provider_for(o);
    const GrayImage r = rotate_image(img, o.alpha, p, {o.bilinear, o.inverse});
    write_pgm(r, o.out);
    std::cout << "provider=" << p.describe() << " alpha=" << format_g9(o.alpha)
              << " angle_error_deg=" << format_g9(o.alpha > 0 ? angle_error(o.alpha, p) : 0.0) << '\n';
    return 0;
}

int run_image(const AppOpts& o) {
    if (o.out.empty()) throw UsageError("image needs --out");
    if (o.pattern == "checkerboard") {
        write_pgm(checkerboard(o.size, o.size, o.cell), o.out);
    } else if (o.pattern == "marker") {
        write_pgm(marker_pattern(o.size), o.out);
    } else {
        throw UsageError("unknown --pattern '" + o.pattern + "'");
    }
    return 0;
}

struct ConfigOpts {
    std::string fn = "sin";
    std::string variant = "transc-star";
    std::string n_list = "1024";
    std::string dir;
};

int run_config(const ConfigOpts& o) {
    if (!o.dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(o.dir, ec);
        if (ec) throw IoError("cannot create directory '" + o.dir + "': " + ec.message());
    }
    for (Function f : functions_from(o.fn))
        for (Variant v : variants_from(o.variant))
            for (std::uint32_t N : lengths_from(o.n_list)) {
                const std::string text = (f == Function::tan ? tan_spec_to_json(builtin_tan_spec(v, N))
                                                             : spec_to_json(builtin_spec(f, v, N))) +
                                         "\n";
                if (o.dir.empty()) {
                    std::cout << text;
                } else {
                    emit(o.dir + "/" + std::string(name(f)) + "_" + std::string(name(v)) + "_" + std::to_string(N) +
                             ".json",
                         text);
                }
            }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Stochastic-computing function evaluator", "scfn"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "worker threads (0 = all cores)")->capture_default_str();

    GenOpts gen;
    auto* g = app.add_subcommand("gen", "dump a sequence source");
    g->add_option("--rng", gen.rng, "counter|vdc|lfsr|sobol")->capture_default_str();
    g->add_option("--bits", gen.bits, "precision m")->capture_default_str();
    g->add_option("--base", gen.base, "VDC base 2^n")->capture_default_str();
    g->add_option("--poly", gen.poly, "LFSR tap exponents, comma separated");
    g->add_option("--seed", gen.seed, "LFSR seed")->capture_default_str();
    g->add_option("--dim", gen.dim, "Sobol dimension")->capture_default_str();
    g->add_option("--count", gen.count, "values to print (0 = 2^bits)")->capture_default_str();
    g->add_option("--offset", gen.offset, "first index")->capture_default_str();
    g->add_option("--encode", gen.encode, "print the bitstream of this X instead of values");
    g->add_option("--out", gen.out, "output file");

    EvalOpts ev;
    auto* e = app.add_subcommand("eval", "evaluate one input");
    e->add_option("--fn", ev.fn)->capture_default_str();
    e->add_option("--variant", ev.variant)->capture_default_str();
    e->add_option("--n", ev.n)->capture_default_str();
    e->add_option("--x", ev.x, "input in [0, 1], quantized to round(x N)");
    e->add_option("--X", ev.X, "integer input in [0, N]");
    e->add_option("--config", ev.config, "JSON spec file");
    e->add_option("--reference", ev.reference, "maclaurin|true")->capture_default_str();
    e->add_option("--trial", ev.trial, "LFSR trial index")->capture_default_str();
    e->add_flag("--trace", ev.trace, "per-cycle CSV of streams and sequential state");
    e->add_option("--out", ev.out, "trace output file");

    SweepOpts sw;
    auto* s = app.add_subcommand("sweep", "MSE sweep over X = 0..N");
    s->add_option("--fn", sw.fn, "function list or all")->capture_default_str();
    s->add_option("--variant", sw.variant, "variant list or all")->capture_default_str();
    s->add_option("--n-list", sw.n_list, "comma-separated lengths")->capture_default_str();
    s->add_option("--trials", sw.trials, "LFSR trials (0 = 1000 for LFSR, 1 otherwise)")->capture_default_str();
    s->add_option("--config", sw.config, "JSON spec file");
    s->add_option("--reference", sw.reference, "maclaurin|true")->capture_default_str();
    s->add_option("--format", sw.format, "csv|json")->capture_default_str();
    s->add_option("--out", sw.out, "per-input report file");

    CorrOpts co;
    auto* c = app.add_subcommand("corr", "SCC/ZCE profile of stage inputs");
    c->add_option("--fn", co.fn)->capture_default_str();
    c->add_option("--variant", co.variant)->capture_default_str();
    c->add_option("--n", co.n)->capture_default_str();
    c->add_option("--stage", co.stage, "i1..i4 or all")->capture_default_str();
    c->add_option("--config", co.config, "JSON spec file");
    c->add_flag("--hist", co.hist, "histograms instead of per-X values");
    c->add_option("--out", co.out, "output file");

    FomOpts fo;
    auto* f = app.add_subcommand("fom", "figure of merit from MSE and hardware data");
    f->add_option("--hw", fo.hw, "hardware cost CSV")->capture_default_str();
    f->add_option("--mse", fo.mse, "sweep report CSV");
    f->add_option("--mse-value", fo.mse_value, "MSE value for --fn/--variant/--n");
    f->add_option("--fn", fo.fn)->capture_default_str();
    f->add_option("--variant", fo.variant)->capture_default_str();
    f->add_option("--n", fo.n)->capture_default_str();
    f->add_option("--out", fo.out, "output file");

    AppOpts ap;
    auto* a = app.add_subcommand("app", "use cases");
    a->require_subcommand(1);
    auto provider_opts = [&](CLI::App* sub) {
        sub->add_option("--variant", ap.variant)->capture_default_str();
        sub->add_option("--n", ap.n)->capture_default_str();
        sub->add_flag("--exact", ap.exact, "exact sin/cos provider");
        sub->add_option("--out", ap.out, "output file");
    };
    auto* arm = a->add_subcommand("arm", "two-link arm positioning error");
    provider_opts(arm);
    arm->add_option("--grid", ap.grid)->capture_default_str();
    arm->add_option("--l1", ap.l1)->capture_default_str();
    arm->add_option("--l2", ap.l2)->capture_default_str();
    auto* angle = a->add_subcommand("angle", "rotation angle error sweep");
    provider_opts(angle);
    angle->add_option("--steps", ap.steps)->capture_default_str();
    auto* rot = a->add_subcommand("rotate", "rotate a PGM image");
    provider_opts(rot);
    rot->add_option("--in", ap.in, "input PGM (default: checkerboard)");
    rot->add_option("--alpha", ap.alpha, "radians in [0, 1]")->capture_default_str();
    rot->add_flag("--bilinear", ap.bilinear);
    rot->add_flag("--inverse", ap.inverse, "rotate by -alpha");
    rot->add_option("--size", ap.size)->capture_default_str();
    rot->add_option("--cell", ap.cell)->capture_default_str();
    auto* img = a->add_subcommand("image", "write a synthetic test image");
    img->add_option("--pattern", ap.pattern, "checkerboard|marker")->capture_default_str();
    img->add_option("--size", ap.size)->capture_default_str();
    img->add_option("--cell", ap.cell)->capture_default_str();
    img->add_option("--out", ap.out, "output PGM");

    ConfigOpts cf;
    auto* k = app.add_subcommand("config", "dump bundled JSON specs");
    k->add_option("--fn", cf.fn, "function list or all")->capture_default_str();
    k->add_option("--variant", cf.variant, "variant list or all")->capture_default_str();
    k->add_option("--n-list", cf.n_list)->capture_default_str();
    k->add_option("--dir", cf.dir, "write one file per spec here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& err) {
        return app.exit(err);
    } catch (const CLI::ParseError& err) {
        app.exit(err);
        return exit_usage;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const CLI::App* leaf = sub->get_subcommands().empty() ? sub : sub->get_subcommands().front();
        std::vector<const CLI::App*> chain{&app, sub};
        if (leaf != sub) chain.push_back(leaf);
        std::cerr << echo(chain);
        if (sub == g) return run_gen(gen);
        if (sub == e) return run_eval(ev);
        if (sub == s) return run_sweep(sw, common);
        if (sub == c) return run_corr(co);
        if (sub == f) return run_fom(fo, common);
        if (sub == k) return run_config(cf);
        if (leaf == arm) return run_arm(ap);
        if (leaf == angle) return run_angle(ap);
        if (leaf == rot) return run_rotate(ap);
        if (leaf == img) return run_image(ap);
    } catch (const ConfigNotFound& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_config;
    } catch (const IoError& err) {
        std::cerr << "error: " << err.what() << '\n';
        return exit_io;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n' << app.help();
        return exit_usage;
    }
    return exit_usage;
}
