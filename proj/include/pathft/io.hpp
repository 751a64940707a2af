#pragma once

#include <string>

#include "pathft/functionals.hpp"
#include "pathft/report.hpp"

namespace pathft {

// JSON text formats. All parsers throw ParseError on malformed input,
// wrong-length arrays or non-finite numbers.
//
// GridFunction: {"kind":"level1","H":8,"values":[[re,im],...]}
//               ("type1"/"type2" kinds additionally carry "Hp")
// PathFunction: {"H":2,"Hp":2,"variant":"type1","digits":[...]}
// Functional:   {"kind":"dense","space":{...},"values":[[re,im],...]}
//             | {"kind":"product","space":{...},"sites":[[[re,im],...],...]}
//             | {"kind":"builtin","space":{...},"name":"gaussian",
//                "power":2.0,"b":[...]}   (power/b only where applicable)

std::string grid_to_json(const GridFunction& phi);
GridFunction grid_from_json(const std::string& text);

std::string path_to_json(const PathFunction& a);
PathFunction path_from_json(const std::string& text);

std::string functional_to_json(const Functional& f);
Functional functional_from_json(const std::string& text);

std::string report_to_json(const VerificationReport& report);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace pathft
