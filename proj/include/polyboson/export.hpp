#ifndef POLYBOSON_EXPORT_HPP
#define POLYBOSON_EXPORT_HPP

#include <string>

#include "polyboson/realizations.hpp"

namespace polyboson {

// Matrix export document. Schema:
//   {"algebra": {"n": int, "coeffs": ["p/q", ...]},
//    "kind": string, "param": "p/q"|null, "caps": [int,...],
//    "basis_order": "lex_last_fastest",
//    "operators": {"J3"|"J+"|"J-": [[row, col, "p/q"], ...] sorted by (col,row)},
//    "margins": [int,...]}
// Entries are in lowest terms; output is byte-deterministic.
std::string export_realization(const RealizationSet& r);

RealizationSet parse_realization(const std::string& text);

}  // namespace polyboson

#endif
