#pragma once

#include <variant>

#include "genera/data.hpp"
#include "genera/mustar.hpp"

namespace genera {

// Validates a discrete-series datum against the declared reducibility table:
// the (DS)/(EDS) membership conditions per kind, half-integrality, and the
// interleaving chain. All violations are collected.
ValidationReport check_ds(const DiscreteSeriesDatum& datum, const ReducibilityTable& table,
                          const Registry& reg);

// Strict (square-integrable) or weak (tempered) Casselman partial-sum test.
bool casselman_check(const std::vector<std::pair<Rational, int>>& word, const Rational& beta,
                     bool strict);
bool casselman_word(const JacquetWord& w, const Rational& beta, bool strict, const Registry& reg);

// check_ds on the core plus balance of the tempered tail at beta; the normal
// form note records the Weyl-conjugation canonical tail.
ValidationReport check_tempered(const TemperedDatum& datum, const ReducibilityTable& table,
                                const Registry& reg);

struct Decision {
    bool irreducible = false;
    std::string witness; // names the first failing condition when reducible
};

// The (G1)-(G8) cascade for a standard module delta(S_1) x ... x| sigma^{(et)}.
Decision irreducible_standard(const LanglandsDatum& datum, const ReducibilityTable& table,
                              const Registry& reg);

using AnyDatum = std::variant<TwistedBase, DiscreteSeriesDatum, TemperedDatum, LanglandsDatum>;

enum class RepClass { Supercuspidal, DiscreteSeries, Tempered, StandardGeneric, Invalid };
const char* rep_class_name(RepClass c);

struct Classification {
    RepClass cls = RepClass::Invalid;
    ValidationReport report;
    std::optional<Decision> decision; // present for Langlands data
};

Classification classify_rep(const AnyDatum& input, const ReducibilityTable& table,
                            const Registry& reg);

} // namespace genera
