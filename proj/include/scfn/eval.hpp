#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "scfn/circuits.hpp"

namespace scfn {

enum class Reference { maclaurin, true_function };
std::string_view name(Reference r);
Reference parse_reference(std::string_view s);

struct EvalRecord {
    std::uint32_t X = 0;
    unsigned trial = 0;
    double estimate = 0;
    double reference = 0;
    double sq_error = 0;
};

struct EvalReport {
    Function function = Function::sin;
    Variant variant = Variant::transc_star;
    std::uint32_t N = 0;
    unsigned trials = 1;
    Reference reference = Reference::maclaurin;
    std::vector<EvalRecord> records;
    double mse = 0;
    std::string config_json;
};

struct SweepOptions {
    unsigned trials = 1;  // forced to 1 for deterministic sources
    Reference reference = Reference::maclaurin;
    unsigned threads = 0;  // 0 selects hardware concurrency
    bool keep_records = true;
};

// Largest swept X for a function at length N (tan stops at its CORDIV domain).
std::uint32_t sweep_limit(Function f, std::uint32_t N, double tan_max_x = 0.78);

EvalReport mse_sweep(Function f, Variant v, std::uint32_t N, const SweepOptions& opt = {});
EvalReport mse_sweep_spec(const HornerSpec& spec, const SweepOptions& opt = {});
EvalReport mse_sweep_tan(const TanSpec& spec, const SweepOptions& opt = {});

struct Histogram {
    double lo = 0;
    double hi = 0;
    std::vector<std::size_t> counts;
    std::size_t mass() const;
};

Histogram histogram(const std::vector<double>& values, double lo, double hi, std::size_t bins);

struct CorrelationProfile {
    std::string stage;
    std::vector<std::uint32_t> X;
    std::vector<double> scc;
    std::vector<double> zce;
    Histogram scc_hist;
    Histogram zce_hist;
};

std::vector<CorrelationProfile> correlation_profile(const HornerSpec& spec, std::size_t max_stages = 4);
std::vector<CorrelationProfile> correlation_profile(Function f, Variant v, std::uint32_t N);

struct HwCostRecord {
    std::string function;
    std::string design;
    std::uint32_t N = 0;
    double area = 0;
    double cpl = 0;
    double power = 0;
    double energy = 0;
};

std::vector<HwCostRecord> load_hw_costs(const std::string& path);
std::string hw_design_name(Variant v);
const HwCostRecord& find_hw(const std::vector<HwCostRecord>& rows, Function f, Variant v, std::uint32_t N);

double fom(double mse, const HwCostRecord& hw);

enum class ReportFormat { csv, json };
void export_report(const EvalReport& report, const std::string& path, ReportFormat format);
std::string report_csv(const EvalReport& report, bool header = true);
std::string report_json(const EvalReport& report);
std::string format_g9(double v);

}  // namespace scfn
