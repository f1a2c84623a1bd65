#pragma once

#include "genera/data.hpp"

namespace genera {

// One summand |.|^shift phi (x) S_{sl2_dim} with multiplicity.
struct ParameterSummand {
    std::string atom;
    Rational shift;
    int sl2_dim = 1;
    int mult = 1;

    friend bool operator<(const ParameterSummand& a, const ParameterSummand& b) {
        if (!(a.shift == b.shift)) return b.shift < a.shift; // shift descending
        if (a.atom != b.atom) return a.atom < b.atom;
        return a.sl2_dim < b.sl2_dim;
    }
    friend bool operator==(const ParameterSummand& a, const ParameterSummand& b) {
        return a.atom == b.atom && a.shift == b.shift && a.sl2_dim == b.sl2_dim &&
               a.mult == b.mult;
    }
};

struct WeilParameter {
    GroupFamily group;
    std::vector<ParameterSummand> summands;
    bool c_class_rep = false;

    void normalize(); // merge equal summands, canonical order
    int total_dim(const Registry& reg) const;
    std::string str() const;
};

// Structural validity: liftable family, dimension N(group), det constraint
// (trivial, or eta_eps for SO_even_qs). Throws InvalidParameter.
void validate_parameter(const WeilParameter& p, const Registry& reg);

// Pole type of a tempered summand per the parity crossing rule.
PoleType summand_pole_type(const ParameterSummand& s, const Registry& reg);

enum class ParamClass { SupercuspidalGeneric, Discrete, Tempered, Generic, General };
const char* param_class_name(ParamClass c);

bool is_supercuspidal_generic_param(const WeilParameter& p, const Registry& reg);
bool is_discrete_param(const WeilParameter& p, const Registry& reg);
bool is_tempered_param(const WeilParameter& p, const Registry& reg);

struct DecomposedParameter {
    WeilParameter tempered_part;
    // (atom, q, w) per shifted dual pair, ordered by w/2 - q descending.
    struct Pair {
        std::string atom;
        Rational q;
        int w = 0;
        int mult = 1;
    };
    std::vector<Pair> pairs;
};

// Splits off the bounded part and pairs each shifted summand with its dual at
// the opposite shift; throws UnpairedShiftedSummand when the pairing fails.
DecomposedParameter decompose(const WeilParameter& p, const Registry& reg);

WeilParameter reassemble(const DecomposedParameter& d, const Registry& reg);

// Applies the user-declared c involution on atom ids; the representative is
// the lexicographic minimum of the canonical renderings.
WeilParameter c_canonicalize(const WeilParameter& p, const Registry& reg);
WeilParameter c_conjugate(const WeilParameter& p, const Registry& reg);

} // namespace genera
