#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ekrlab/families.hpp"

namespace ekrlab {

// Text formats shared by the CLI and the test fixtures. Whitespace is ignored.
//
//   set     := '{' [ int { ',' int } ] '}'          strictly increasing, positive
//   family  := 'n=' int 'r=' int 'gens=[' set { ';' set } ']'
//
// Parse errors throw std::invalid_argument naming the offending input.

std::vector<int> parse_set(std::string_view text);
GeneratorFamily parse_family(std::string_view text);

// Normalized generators, e.g. "n=11 r=5 gens=[{2,3,4,10,11};{3,4,6,7,11}]".
std::string format_family(const GeneratorFamily& f);
std::string format_generators(const std::vector<RSet>& gens);

}  // namespace ekrlab
