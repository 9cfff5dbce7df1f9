#pragma once

#include <string>
#include <vector>

#include "prym/derivation.hpp"
#include "prym/picard.hpp"

namespace prym {

enum class OutputFormat { json, csv, latex, plain };

OutputFormat parse_format(const std::string& s);  // throws std::invalid_argument
const char* format_name(OutputFormat f);

// Coefficient tables for one class or an {even, odd} pair (that order).
// json: the schema object, or an array of two;
// csv: "label,<parity>[,<parity>]" header plus one row per basis slot;
// latex: the Theorem-A-style array, one labelled column per parity;
// plain: aligned table, non-integral entries marked with '*'.
// All four are deterministic byte-for-byte.
std::string render_classes(const std::vector<RBarClass>& classes, OutputFormat f);

// derivation trace: equations in solve order, solved tables, match verdict
std::string render_derivation(const DerivationReport& r, OutputFormat f);

std::string latex_escape(const std::string& s);

}  // namespace prym
