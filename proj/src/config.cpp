#include "scfn/config.hpp"

#include <json.hpp>

namespace scfn {

using json = nlohmann::ordered_json;

namespace {

json source_json(const SequenceSource& s) {
    json j;
    switch (s.kind) {
        case SourceKind::Counter: j["kind"] = "counter"; break;
        case SourceKind::Vdc:
            j["kind"] = "vdc";
            j["n"] = s.n;
            break;
        case SourceKind::Lfsr:
            j["kind"] = "lfsr";
            j["taps"] = s.taps;
            j["seed"] = s.seed;
            break;
        case SourceKind::Sobol:
            j["kind"] = "sobol";
            j["dimension"] = s.dimension;
            break;
    }
    j["m"] = s.m;
    return j;
}

SequenceSource source_from(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    const unsigned m = j.value("m", 0u);
    if (kind == "counter") return SequenceSource::counter(m);
    if (kind == "vdc") return SequenceSource::vdc(j.at("n").get<unsigned>(), m);
    if (kind == "lfsr") return SequenceSource::lfsr(j.at("taps").get<std::vector<unsigned>>(), j.at("seed").get<std::uint32_t>());
    if (kind == "sobol") return SequenceSource::sobol(j.at("dimension").get<unsigned>(), m);
    throw std::invalid_argument("unknown source kind '" + kind + "'");
}

Factor parse_factor(const std::string& s) {
    if (s == "const") return Factor::constant;
    if (s == "x") return Factor::x;
    if (s == "x2") return Factor::x2;
    throw std::invalid_argument("unknown factor '" + s + "'");
}

json spec_json(const HornerSpec& s) {
    json j;
    j["function"] = std::string(name(s.function));
    j["variant"] = std::string(name(s.variant));
    j["N"] = s.N;
    j["combiner"] = std::string(name(s.combiner));
    j["delay_plan"] = s.delay_plan;
    j["placement"] = std::string(name(s.placement));
    j["input"] = source_json(s.input_source);
    j["input_offset"] = s.input_offset;
    json stages = json::array();
    for (std::size_t k = 0; k < s.stages.size(); ++k) {
        json st;
        st["factor"] = std::string(name(s.stages[k].factor));
        st["coeff"] = {s.stages[k].coeff.num, s.stages[k].coeff.den};
        st["source"] = source_json(s.coeff_sources[k]);
        st["offset"] = s.coeff_offsets[k];
        stages.push_back(st);
    }
    j["stages"] = stages;
    return j;
}

HornerSpec spec_from(const json& j) {
    HornerSpec s;
    s.function = parse_function(j.at("function").get<std::string>());
    s.variant = parse_variant(j.at("variant").get<std::string>());
    s.N = j.at("N").get<std::uint32_t>();
    s.combiner = j.at("combiner").get<std::string>() == "times_x" ? Combiner::times_x : Combiner::direct;
    s.delay_plan = j.value("delay_plan", std::vector<int>{});
    if (j.contains("placement")) s.placement = parse_placement(j.at("placement").get<std::string>());
    s.input_source = source_from(j.at("input"));
    s.input_offset = j.value("input_offset", std::uint64_t{0});
    for (const json& st : j.at("stages")) {
        const auto c = st.at("coeff").get<std::vector<std::int64_t>>();
        if (c.size() != 2) throw std::invalid_argument("stage coeff must be [numerator, denominator]");
        s.stages.push_back({parse_factor(st.at("factor").get<std::string>()), {c[0], c[1]}});
        s.coeff_sources.push_back(source_from(st.at("source")));
        s.coeff_offsets.push_back(st.value("offset", std::uint64_t{0}));
    }
    s.validate();
    return s;
}

}  // namespace

std::string source_to_json(const SequenceSource& src) { return source_json(src).dump(); }

std::string spec_to_json(const HornerSpec& spec, int indent) { return spec_json(spec).dump(indent); }

HornerSpec spec_from_json(const std::string& text) { return spec_from(json::parse(text)); }

std::string tan_spec_to_json(const TanSpec& spec, int indent) {
    json j;
    j["kind"] = "tan";
    j["correlator_depth"] = spec.correlator_depth;
    j["max_x"] = spec.max_x;
    j["sin"] = spec_json(spec.sin_part);
    j["cos"] = spec_json(spec.cos_part);
    return j.dump(indent);
}

TanSpec tan_spec_from_json(const std::string& text) {
    const json j = json::parse(text);
    TanSpec t;
    t.correlator_depth = j.value("correlator_depth", 0u);
    t.max_x = j.value("max_x", 0.78);
    t.sin_part = spec_from(j.at("sin"));
    t.cos_part = spec_from(j.at("cos"));
    return t;
}

bool config_is_tan(const std::string& text) {
    const json j = json::parse(text);
    return j.value("kind", std::string()) == "tan";
}

}  // namespace scfn
