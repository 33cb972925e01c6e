#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "scfn/bitstream.hpp"

namespace scfn {

struct GateTrace {
    std::vector<Bitstream> inputs;
    Bitstream output;
    std::vector<std::uint32_t> state_log;  // one entry per cycle, after the update
};

Bitstream and2(const Bitstream& a, const Bitstream& b);
Bitstream and3(const Bitstream& a, const Bitstream& b, const Bitstream& c);
Bitstream or2(const Bitstream& a, const Bitstream& b);
Bitstream xor2(const Bitstream& a, const Bitstream& b);
Bitstream not1(const Bitstream& a);
Bitstream nand2(const Bitstream& a, const Bitstream& b);
Bitstream nand3(const Bitstream& a, const Bitstream& b, const Bitstream& c);

Bitstream mux_add(const Bitstream& a, const Bitstream& b, const Bitstream& sel);
Bitstream mux_sub(const Bitstream& a, const Bitstream& b, const Bitstream& sel);

// k cycles of D-FF delay on the circular stream: out[i] = in[(i - k) mod N].
Bitstream dff_delay(const Bitstream& s, long long k);

Bitstream jkff_div(const Bitstream& j, const Bitstream& k);
GateTrace jkff_div_trace(const Bitstream& j, const Bitstream& k);

Bitstream cordiv(const Bitstream& dividend, const Bitstream& divisor);
GateTrace cordiv_trace(const Bitstream& dividend, const Bitstream& divisor);

struct CorrelatorResult {
    Bitstream a;
    Bitstream b;
    std::uint32_t residual = 0;  // ones still deferred at stream end
};

CorrelatorResult correlate_max(const Bitstream& a, const Bitstream& b, std::uint32_t depth);
GateTrace correlate_max_trace(const Bitstream& a, const Bitstream& b, std::uint32_t depth);

}  // namespace scfn
