#include "genera/groups.hpp"

#include <vector>

namespace genera {

const char* family_name(Family f) {
    switch (f) {
        case Family::SO_odd: return "SO_odd";
        case Family::Sp: return "Sp";
        case Family::SO_even_split: return "SO_even_split";
        case Family::SO_even_qs: return "SO_even_qs";
        case Family::U_odd: return "U_odd";
        case Family::U_even: return "U_even";
        case Family::GSp: return "GSp";
        case Family::GSO_even_split: return "GSO_even_split";
        case Family::GSO_even_qs: return "GSO_even_qs";
        case Family::GU_odd: return "GU_odd";
        case Family::GU_even: return "GU_even";
        case Family::GSpin_odd: return "GSpin_odd";
        case Family::GSpin_even_split: return "GSpin_even_split";
        case Family::GSpin_even_qs: return "GSpin_even_qs";
    }
    return "?";
}

Family family_from_name(const std::string& s) {
    for (Family f : kAllFamilies)
        if (s == family_name(f)) return f;
    throw GeneraError("UnknownFamily", "'" + s + "'");
}

bool has_c_action(Family f) {
    switch (f) {
        case Family::SO_even_split:
        case Family::SO_even_qs:
        case Family::GSO_even_split:
        case Family::GSO_even_qs:
        case Family::GSpin_even_split:
        case Family::GSpin_even_qs: return true;
        default: return false;
    }
}

bool is_similitude(Family f) {
    switch (f) {
        case Family::GSp:
        case Family::GSO_even_split:
        case Family::GSO_even_qs:
        case Family::GU_odd:
        case Family::GU_even:
        case Family::GSpin_odd:
        case Family::GSpin_even_split:
        case Family::GSpin_even_qs: return true;
        default: return false;
    }
}

bool is_general_spin(Family f) {
    return f == Family::GSpin_odd || f == Family::GSpin_even_split ||
           f == Family::GSpin_even_qs;
}

bool is_unitary(Family f) {
    return f == Family::U_odd || f == Family::U_even || f == Family::GU_odd ||
           f == Family::GU_even;
}

bool is_liftable_classical(Family f) {
    switch (f) {
        case Family::SO_odd:
        case Family::Sp:
        case Family::SO_even_split:
        case Family::SO_even_qs:
        case Family::U_odd:
        case Family::U_even: return true;
        default: return false;
    }
}

int lift_target_rank(Family f, int rank) {
    switch (f) {
        case Family::SO_odd:
        case Family::SO_even_split:
        case Family::U_even: return 2 * rank;
        case Family::Sp:
        case Family::U_odd: return 2 * rank + 1;
        case Family::SO_even_qs: return 2 * rank + 2;
        default: throw GeneraError("UnsupportedFamily", "no functorial lift target");
    }
}

const char* pole_type_name(PoleType t) {
    switch (t) {
        case PoleType::R: return "R";
        case PoleType::Rminus: return "R-";
        case PoleType::None: return "none";
    }
    return "?";
}

PoleType pole_type_from_name(const std::string& s) {
    if (s == "R") return PoleType::R;
    if (s == "R-" || s == "Rminus") return PoleType::Rminus;
    if (s == "none" || s.empty()) return PoleType::None;
    throw GeneraError("UnknownPoleType", "'" + s + "'");
}

const CuspidalAtom& Registry::atom(const std::string& id) const {
    auto it = atoms.find(id);
    if (it == atoms.end()) throw GeneraError("UnknownAtom", "'" + id + "'");
    return it->second;
}

const BaseRep& Registry::base(const std::string& id) const {
    auto it = bases.find(id);
    if (it == bases.end()) throw GeneraError("UnknownBase", "'" + id + "'");
    return it->second;
}

const std::string& Registry::dual_atom(const std::string& id) const { return atom(id).dual_id; }

std::string Registry::c_image(const std::string& id) const {
    auto it = c_pairs.find(id);
    return it == c_pairs.end() ? id : it->second;
}

Rational beta_of(Family f, int rank, const Rational& eps) {
    switch (f) {
        case Family::GSpin_odd:
        case Family::GSpin_even_split:
            return rank > 0 ? eps : eps / Rational(2);
        case Family::GSpin_even_qs: return eps;
        default: return Rational(0);
    }
}

Rational beta_of(const BaseRep& base) {
    return beta_of(base.group.family, base.group.rank, base.exponent);
}

std::pair<CharacterSymbol, CharacterSymbol> twist_induced(Family f, const CharacterSymbol& chi,
                                                          int /*gl_rank*/, int base_rank) {
    if (!is_similitude(f))
        throw GeneraError("NotSimilitude", std::string(family_name(f)) + " has no twisting formula");
    switch (f) {
        case Family::GSp:
        case Family::GSO_even_qs:
        case Family::GU_odd:
        case Family::GU_even: return {CharacterSymbol::one(), chi};
        case Family::GSO_even_split:
            if (base_rank == 1)
                throw GeneraError("UnsupportedRankOne", "GSO_even_split twisting at n0=1");
            return {CharacterSymbol::one(), chi};
        case Family::GSpin_odd:
            return base_rank > 0 ? std::make_pair(chi, chi) : std::make_pair(chi, chi.pow(2));
        case Family::GSpin_even_split:
            if (base_rank == 1)
                throw GeneraError("UnsupportedRankOne", "GSpin_even_split twisting at n0=1");
            return base_rank > 1 ? std::make_pair(chi, chi) : std::make_pair(chi, chi.pow(2));
        case Family::GSpin_even_qs: return {chi, chi};
        default: throw GeneraError("NotSimilitude", family_name(f));
    }
}

CharacterSymbol central_character(Family f, const std::vector<CharacterSymbol>& gl_omegas,
                                  const CharacterSymbol& base_omega, int base_rank) {
    if (!is_similitude(f))
        throw GeneraError("NotSimilitude", std::string(family_name(f)) + " has no central-character row");
    if (is_general_spin(f)) return base_omega;
    CharacterSymbol prod;
    for (const auto& w : gl_omegas) prod = prod * w;
    switch (f) {
        case Family::GSp:
        case Family::GSO_even_split:
            return base_rank > 0 ? prod * base_omega : prod * base_omega.pow(2);
        case Family::GSO_even_qs:
        case Family::GU_odd: return prod * base_omega;
        case Family::GU_even: {
            if (base_rank > 0) return prod * base_omega;
            // omega_{pi_0} o N_{E/F}: formal norm marker on each generator.
            CharacterSymbol normed;
            normed.nu = base_omega.nu;
            for (const auto& [g, e] : base_omega.mono) normed.mono["N[" + g + "]"] = e;
            return prod * normed;
        }
        default: throw GeneraError("NotSimilitude", family_name(f));
    }
}

std::pair<TwistedAtom, TwistedBaseSymbol> w0_action(Family f, const CuspidalAtom& tau,
                                                    const BaseRep& base, const Registry& reg) {
    TwistedAtom a{reg.dual_atom(tau.id), CharacterSymbol::one()};
    TwistedBaseSymbol b{base.id, CharacterSymbol::one(), 0};
    int m = tau.gl_rank % 2;
    switch (f) {
        case Family::SO_odd:
        case Family::Sp:
        case Family::U_odd:
        case Family::U_even: break;
        case Family::SO_even_split:
        case Family::SO_even_qs: b.c_power = m; break;
        case Family::GSpin_odd: a.twist = base.omega; break;
        case Family::GSp:
        case Family::GU_odd:
        case Family::GU_even: b.twist = tau.omega; break;
        case Family::GSO_even_split:
        case Family::GSO_even_qs:
            b.twist = tau.omega;
            b.c_power = m;
            break;
        case Family::GSpin_even_split:
        case Family::GSpin_even_qs:
            a.twist = base.omega;
            b.c_power = m;
            break;
    }
    if (base.c_fixed) b.c_power = 0;
    return {a, b};
}

Rational shahidi_point_to_exponent(const GroupFamily& g, int levi_index, const Rational& s) {
    int n = g.rank;
    if (levi_index < 1 || levi_index > n)
        throw GeneraError("InvalidParabolic", "levi index " + std::to_string(levi_index) +
                                                  " out of range for rank " + std::to_string(n));
    bool siegel = false;
    switch (g.family) {
        case Family::Sp:
        case Family::U_even:
        case Family::GSp:
        case Family::GU_even: siegel = false; break;
        case Family::SO_odd:
        case Family::SO_even_qs:
        case Family::U_odd:
        case Family::GSpin_odd:
        case Family::GSpin_even_qs:
        case Family::GSO_even_qs:
        case Family::GU_odd: siegel = (levi_index == n); break;
        case Family::SO_even_split:
        case Family::GSpin_even_split:
        case Family::GSO_even_split: siegel = (levi_index >= n - 1); break;
    }
    return siegel ? s / Rational(2) : s;
}

} // namespace genera
