#include "scfn/gates.hpp"

#include <stdexcept>

namespace scfn {

namespace {

template <class Op>
Bitstream zip(const Bitstream& a, const Bitstream& b, const char* name, Op op) {
    require_same_length(a, b, name);
    Bitstream out(a.size());
    auto& o = out.words();
    const auto& x = a.words();
    const auto& y = b.words();
    for (std::size_t k = 0; k < o.size(); ++k) o[k] = op(x[k], y[k]);
    out.trim();
    return out;
}

}  // namespace

Bitstream and2(const Bitstream& a, const Bitstream& b) {
    return zip(a, b, "and2", [](auto x, auto y) { return x & y; });
}

Bitstream and3(const Bitstream& a, const Bitstream& b, const Bitstream& c) { return and2(and2(a, b), c); }

Bitstream or2(const Bitstream& a, const Bitstream& b) {
    return zip(a, b, "or2", [](auto x, auto y) { return x | y; });
}

Bitstream xor2(const Bitstream& a, const Bitstream& b) {
    return zip(a, b, "xor2", [](auto x, auto y) { return x ^ y; });
}

Bitstream not1(const Bitstream& a) {
    Bitstream out = a;
    for (auto& w : out.words()) w = ~w;
    out.trim();
    return out;
}

Bitstream nand2(const Bitstream& a, const Bitstream& b) {
    return zip(a, b, "nand2", [](auto x, auto y) { return ~(x & y); });
}

Bitstream nand3(const Bitstream& a, const Bitstream& b, const Bitstream& c) { return not1(and3(a, b, c)); }

Bitstream mux_add(const Bitstream& a, const Bitstream& b, const Bitstream& sel) {
    require_same_length(a, sel, "mux_add");
    Bitstream out = zip(a, b, "mux_add", [](auto x, auto y) { return x ^ y; });
    auto& o = out.words();
    const auto& x = a.words();
    const auto& y = b.words();
    const auto& s = sel.words();
    for (std::size_t k = 0; k < o.size(); ++k) o[k] = (s[k] & x[k]) | (~s[k] & y[k]);
    out.trim();
    return out;
}

Bitstream mux_sub(const Bitstream& a, const Bitstream& b, const Bitstream& sel) {
    return mux_add(a, not1(b), sel);
}

Bitstream dff_delay(const Bitstream& s, long long k) { return rotate(s, -k); }

GateTrace jkff_div_trace(const Bitstream& j, const Bitstream& k) {
    require_same_length(j, k, "jkff_div");
    GateTrace t;
    t.inputs = {j, k};
    t.output = Bitstream(j.size());
    t.state_log.resize(j.size());
    bool y = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const bool J = j.get(i), K = k.get(i);
        if (J && K) y = !y;
        else if (J) y = true;
        else if (K) y = false;
        t.output.set(i, y);
        t.state_log[i] = y;
    }
    return t;
}

Bitstream jkff_div(const Bitstream& j, const Bitstream& k) { return jkff_div_trace(j, k).output; }

GateTrace cordiv_trace(const Bitstream& dividend, const Bitstream& divisor) {
    require_same_length(dividend, divisor, "cordiv");
    GateTrace t;
    t.inputs = {dividend, divisor};
    t.output = Bitstream(dividend.size());
    t.state_log.resize(dividend.size());
    bool s = false;
    for (std::size_t i = 0; i < dividend.size(); ++i) {
        if (divisor.get(i)) s = dividend.get(i);
        t.output.set(i, s);
        t.state_log[i] = s;
    }
    return t;
}

Bitstream cordiv(const Bitstream& dividend, const Bitstream& divisor) {
    return cordiv_trace(dividend, divisor).output;
}

GateTrace correlate_max_trace(const Bitstream& a, const Bitstream& b, std::uint32_t depth) {
    require_same_length(a, b, "correlate_max");
    if (depth == 0) throw std::invalid_argument("correlate_max: depth must be >= 1");
    GateTrace t;
    t.inputs = {a, b};
    t.output = Bitstream(a.size());
    t.state_log.resize(a.size());
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const bool ai = a.get(i), bi = b.get(i);
        bool out = ai;
        if (ai && !bi && c < depth) {
            ++c;
            out = false;
        } else if (!ai && bi && c > 0) {
            --c;
            out = true;
        }
        t.output.set(i, out);
        t.state_log[i] = c;
    }
    return t;
}

CorrelatorResult correlate_max(const Bitstream& a, const Bitstream& b, std::uint32_t depth) {
    GateTrace t = correlate_max_trace(a, b, depth);
    CorrelatorResult r;
    r.residual = t.state_log.empty() ? 0 : t.state_log.back();
    r.a = std::move(t.output);
    r.b = b;
    return r;
}

}  // namespace scfn
