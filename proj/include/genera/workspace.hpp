#pragma once

#include "genera/lifting.hpp"

namespace genera {

// All declared symbols and tables, merged from one or more input files.
struct Workspace {
    Registry reg;
    ReducibilityTable table;
    BaseLiftTable lifts;

    // Merges the JSON text into the workspace; unknown top-level keys are left
    // for the datum parsers. Throws ParseError/GeneraError on bad input.
    void merge_json(const std::string& text);
    // Referential integrity, involution checks, table and lift consistency.
    void validate() const;
};

Segment parse_segment_json(const std::string& text, const Workspace& ws);

// Parses a datum file: {"type": "base"|"ds"|"tempered"|"langlands"|"hn"|"param", ...}
struct ParsedInput {
    enum class Kind { Rep, HN, Param } kind = Kind::Rep;
    std::optional<AnyDatum> rep;
    std::optional<HNRepDatum> hn;
    std::optional<WeilParameter> param;
};

ParsedInput parse_input(const std::string& text, const Workspace& ws);

// Mini-syntax "d([0,1]@t) x d([0,0]@t) x base(s0)" for --induced.
std::pair<RElement, BaseState> parse_induced(const std::string& text, const Workspace& ws);

// JSON renderings (canonical: keys sorted, rationals as strings).
std::string segment_to_json(const Segment& s);
std::string grep_to_json(const GRepElement& g, const Registry& reg);
std::string report_to_json(const ValidationReport& rep);
std::string hn_to_json(const HNRepDatum& rho);
std::string rep_to_json(const AnyDatum& d, const Registry& reg);
std::string param_to_json(const WeilParameter& p);

} // namespace genera
