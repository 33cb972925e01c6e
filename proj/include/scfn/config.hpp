#pragma once

#include <string>

#include "scfn/circuits.hpp"

namespace scfn {

std::string spec_to_json(const HornerSpec& spec, int indent = 2);
HornerSpec spec_from_json(const std::string& text);

std::string tan_spec_to_json(const TanSpec& spec, int indent = 2);
TanSpec tan_spec_from_json(const std::string& text);

std::string source_to_json(const SequenceSource& src);

// Reads a file holding either a Horner spec or a tan spec ("kind": "tan").
bool config_is_tan(const std::string& text);

}  // namespace scfn
