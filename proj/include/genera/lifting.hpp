#pragma once

#include "genera/classify.hpp"
#include "genera/params.hpp"

namespace genera {

// Declared liftings l(sigma^{(0)}) = x_{tau in A} tau: base id <-> atom multiset.
struct BaseLiftTable {
    std::map<std::string, std::vector<std::string>> lifts; // base id -> sorted atom ids

    void set(const std::string& base, std::vector<std::string> atoms);
    const std::vector<std::string>& lift_of(const std::string& base) const;
    // Reverse lookup within one family; lexicographically smallest base id wins.
    std::optional<std::string> base_for(const std::vector<std::string>& atoms, Family family,
                                        const Registry& reg) const;
};

// Representation datum on the H_N side.
struct HNRepDatum {
    enum class Level { Discrete, Tempered, Generic };
    Level level = Level::Discrete;
    GroupFamily group;              // the G_n whose lifting image this is
    std::vector<Segment> segments;  // balanced factors, repetition = multiplicity
    std::vector<Segment> std_segs;  // Generic level: the shifted Sigma_i (duals implicit)

    std::string str(const Registry& reg) const;
    // Central character class of the full induced representation.
    CharacterSymbol central_class(const Registry& reg) const;
};

const char* hn_level_name(HNRepDatum::Level l);
HNRepDatum::Level hn_level_from_name(const std::string& s);

// Membership tests for Pi^{(dg)}/Pi^{(tg)}/Pi^{(g)}_eps (all violations collected).
ValidationReport validate_hn(const HNRepDatum& rho, const Registry& reg);

// Sorted pole magnitudes per self-dual atom: M(tau) = {m : delta_m(tau) in rho}.
std::map<std::string, std::vector<Rational>> pole_profile(const HNRepDatum& rho,
                                                          const Registry& reg);

DiscreteSeriesDatum descend_ds(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg);
HNRepDatum lift_ds(const DiscreteSeriesDatum& datum, const BaseLiftTable& lifts,
                   const Registry& reg);

TemperedDatum descend_tempered(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg);
HNRepDatum lift_tempered(const TemperedDatum& datum, const BaseLiftTable& lifts,
                         const Registry& reg);

struct GenericDescent {
    LanglandsDatum datum;
    // clause of the generic-sequence definition satisfied by each std segment
    std::vector<std::string> clauses; // "3a", "3b", "3c"
};

GenericDescent descend_generic(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg);
HNRepDatum lift_generic(const LanglandsDatum& datum, const BaseLiftTable& lifts,
                        const Registry& reg);

// Formal multiset of gamma-factor segments in rewrite normal form.
struct GammaBag {
    std::vector<Segment> segments; // sorted with multiplicity

    friend bool operator==(const GammaBag& a, const GammaBag& b) {
        return a.segments == b.segments;
    }
    std::string str() const;
};

using GDatum = std::variant<DiscreteSeriesDatum, TemperedDatum, LanglandsDatum>;

GammaBag gamma_bag(const HNRepDatum& rho, const Registry& reg);
GammaBag gamma_bag(const GDatum& datum, const BaseLiftTable& lifts, const Registry& reg);

bool check_gamma_identity(const GammaBag& left, const GammaBag& right);

// thm13: Langlands quotient attached to a parameter. The tempered kernel is
// descended through the declared tables; the standard part follows
// Sigma_i = [nu^{-q_i} r(phi_i), nu^{-q_i+w_i} r(phi_i)].
struct ParameterRep {
    std::variant<TemperedDatum, LanglandsDatum> rep;
    bool generic = false;
};

ParameterRep parameter_to_representation(const WeilParameter& p, const BaseLiftTable& lifts,
                                         const Registry& reg);

// Reducibility kinds synthesized from pole types and base-lift membership, for
// data produced by descent (where no user table exists).
ReducibilityTable synthesize_table(const std::vector<std::string>& atoms,
                                   const std::string& base_id, const BaseLiftTable& lifts,
                                   const Registry& reg);

// Most specific class of the parameter; Generic delegates to the descended
// standard module.
ParamClass classify_parameter(const WeilParameter& p, const BaseLiftTable& lifts,
                              const Registry& reg);

} // namespace genera
