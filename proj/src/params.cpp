#include "genera/params.hpp"

#include <algorithm>

namespace genera {

void WeilParameter::normalize() {
    std::sort(summands.begin(), summands.end());
    std::vector<ParameterSummand> merged;
    for (const auto& s : summands) {
        if (!merged.empty() && merged.back().atom == s.atom && merged.back().shift == s.shift &&
            merged.back().sl2_dim == s.sl2_dim)
            merged.back().mult += s.mult;
        else
            merged.push_back(s);
    }
    summands = std::move(merged);
}

int WeilParameter::total_dim(const Registry& reg) const {
    int d = 0;
    for (const auto& s : summands) d += reg.atom(s.atom).gl_rank * s.sl2_dim * s.mult;
    return d;
}

std::string WeilParameter::str() const {
    std::string out = group.str() + ":";
    for (const auto& s : summands) {
        out += " ";
        if (s.mult != 1) out += std::to_string(s.mult) + "*";
        if (!s.shift.is_zero()) out += "|.|^{" + s.shift.str() + "}";
        out += s.atom + "(x)S" + std::to_string(s.sl2_dim);
    }
    return out;
}

void validate_parameter(const WeilParameter& p, const Registry& reg) {
    if (!is_liftable_classical(p.group.family))
        throw GeneraError("InvalidParameter",
                          "parameters are modelled for the six quasi-split classical families");
    for (const auto& s : p.summands) {
        if (s.mult < 1 || s.sl2_dim < 1)
            throw GeneraError("InvalidParameter", "summand with nonpositive mult or S-dim");
        reg.atom(s.atom);
    }
    const int want = lift_target_rank(p.group.family, p.group.rank);
    if (p.total_dim(reg) != want)
        throw GeneraError("InvalidParameter",
                          "total dimension " + std::to_string(p.total_dim(reg)) +
                              " differs from N = " + std::to_string(want));
    // determinant constraint
    CharacterSymbol det;
    for (const auto& s : p.summands) {
        CharacterSymbol d = reg.atom(s.atom).det_class.pow(s.sl2_dim * s.mult);
        d.nu += s.shift * Rational(reg.atom(s.atom).gl_rank * s.sl2_dim * s.mult);
        det = det * d;
    }
    Monomial reduced = reg.relations.reduce(det.mono);
    Monomial want_det;
    if (p.group.family == Family::SO_even_qs) want_det = Monomial{{"eta_eps", 1}};
    if (reduced != reg.relations.reduce(want_det) || !det.nu.is_zero())
        throw GeneraError("InvalidParameter", "determinant class is " + det.str() +
                                                  ", violating the family constraint");
}

PoleType summand_pole_type(const ParameterSummand& s, const Registry& reg) {
    if (!s.shift.is_zero())
        throw GeneraError("ShiftedSummand", "pole type is defined for tempered summands only");
    const CuspidalAtom& atom = reg.atom(s.atom);
    if (!atom.self_dual()) return PoleType::None;
    const bool m_integral = s.sl2_dim % 2 == 1; // m = (sl2_dim-1)/2 integral
    switch (atom.pole_type) {
        case PoleType::R: return m_integral ? PoleType::R : PoleType::Rminus;
        case PoleType::Rminus: return m_integral ? PoleType::Rminus : PoleType::R;
        case PoleType::None: return PoleType::None;
    }
    return PoleType::None;
}

const char* param_class_name(ParamClass c) {
    switch (c) {
        case ParamClass::SupercuspidalGeneric: return "SupercuspidalGeneric";
        case ParamClass::Discrete: return "Discrete";
        case ParamClass::Tempered: return "Tempered";
        case ParamClass::Generic: return "Generic";
        case ParamClass::General: return "General";
    }
    return "?";
}

bool is_tempered_param(const WeilParameter& p, const Registry& reg) {
    for (const auto& s : p.summands)
        if (!s.shift.is_zero() || !reg.atom(s.atom).bounded) return false;
    return true;
}

bool is_discrete_param(const WeilParameter& p, const Registry& reg) {
    if (!is_tempered_param(p, reg)) return false;
    for (const auto& s : p.summands) {
        if (s.mult != 1) return false;
        if (summand_pole_type(s, reg) != PoleType::R) return false;
    }
    return true;
}

bool is_supercuspidal_generic_param(const WeilParameter& p, const Registry& reg) {
    if (!is_discrete_param(p, reg)) return false;
    for (const auto& s : p.summands)
        if (s.sl2_dim != 1) return false;
    return true;
}

DecomposedParameter decompose(const WeilParameter& p, const Registry& reg) {
    DecomposedParameter out;
    out.tempered_part.group = p.group;
    std::map<std::tuple<std::string, Rational, int>, int> shifted; // positive shifts
    std::map<std::tuple<std::string, Rational, int>, int> negatives;
    for (const auto& s : p.summands) {
        if (s.shift.is_zero()) {
            if (!reg.atom(s.atom).bounded)
                throw GeneraError("InvalidParameter", "unbounded atom at shift 0: " + s.atom);
            out.tempered_part.summands.push_back(s);
        } else if (s.shift > Rational(0)) {
            shifted[{s.atom, s.shift, s.sl2_dim}] += s.mult;
        } else {
            negatives[{s.atom, -s.shift, s.sl2_dim}] += s.mult;
        }
    }
    out.tempered_part.normalize();
    for (const auto& [key, mult] : shifted) {
        const auto& [atom, shift, dim] = key;
        auto partner = negatives.find({reg.dual_atom(atom), shift, dim});
        if (partner == negatives.end() || partner->second != mult)
            throw GeneraError("UnpairedShiftedSummand",
                              "no dual partner at shift -" + shift.str() + " for " + atom);
        negatives.erase(partner);
        DecomposedParameter::Pair pr;
        pr.atom = atom;
        pr.w = dim - 1;
        pr.q = Rational(pr.w, 2) - shift; // shift = -q + w/2
        pr.mult = mult;
        out.pairs.push_back(pr);
    }
    if (!negatives.empty())
        throw GeneraError("UnpairedShiftedSummand", "negative-shift summands left unpaired");
    // already ordered by shift descending via the map ordering on (atom, shift, dim)?
    std::sort(out.pairs.begin(), out.pairs.end(),
              [](const DecomposedParameter::Pair& a, const DecomposedParameter::Pair& b) {
                  Rational ca = Rational(a.w, 2) - a.q;
                  Rational cb = Rational(b.w, 2) - b.q;
                  if (!(ca == cb)) return cb < ca;
                  if (a.atom != b.atom) return a.atom < b.atom;
                  return a.w < b.w;
              });
    return out;
}

WeilParameter reassemble(const DecomposedParameter& d, const Registry& reg) {
    WeilParameter p = d.tempered_part;
    for (const auto& pr : d.pairs) {
        Rational shift = Rational(pr.w, 2) - pr.q;
        p.summands.push_back({pr.atom, shift, pr.w + 1, pr.mult});
        p.summands.push_back({reg.dual_atom(pr.atom), -shift, pr.w + 1, pr.mult});
    }
    p.normalize();
    return p;
}

WeilParameter c_conjugate(const WeilParameter& p, const Registry& reg) {
    WeilParameter q = p;
    for (auto& s : q.summands) s.atom = reg.c_image(s.atom);
    q.normalize();
    return q;
}

WeilParameter c_canonicalize(const WeilParameter& p, const Registry& reg) {
    if (p.group.family != Family::SO_even_split && p.group.family != Family::SO_even_qs) {
        WeilParameter q = p;
        q.normalize();
        q.c_class_rep = true;
        return q;
    }
    WeilParameter a = p;
    a.normalize();
    WeilParameter b = c_conjugate(a, reg);
    WeilParameter chosen = b.str() < a.str() ? b : a;
    chosen.c_class_rep = true;
    return chosen;
}

} // namespace genera
