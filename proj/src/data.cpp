#include "genera/data.hpp"

namespace genera {

const char* reduc_kind_name(ReducKind k) {
    switch (k) {
        case ReducKind::C0: return "C0";
        case ReducKind::C_half: return "C1/2";
        case ReducKind::C1: return "C1";
        case ReducKind::CN: return "CN";
        case ReducKind::Irr: return "Irr";
    }
    return "?";
}

ReducKind reduc_kind_from_name(const std::string& s) {
    if (s == "C0") return ReducKind::C0;
    if (s == "C1/2" || s == "C_half" || s == "Chalf") return ReducKind::C_half;
    if (s == "C1") return ReducKind::C1;
    if (s == "CN") return ReducKind::CN;
    if (s == "Irr" || s == "irr") return ReducKind::Irr;
    throw GeneraError("UnknownKind", "'" + s + "'");
}

std::optional<Rational> reduc_alpha(ReducKind k) {
    switch (k) {
        case ReducKind::C0: return Rational(0);
        case ReducKind::C_half: return Rational(1, 2);
        case ReducKind::C1: return Rational(1);
        default: return std::nullopt;
    }
}

void validate_table(const ReducibilityTable& table, const Registry& reg) {
    for (const auto& [key, kind] : table.entries) {
        const CuspidalAtom& atom = reg.atom(key.first);
        const BaseRep& base = reg.base(key.second);
        const std::string where = "(" + key.first + ", " + key.second + ")";
        switch (kind) {
            case ReducKind::C0:
            case ReducKind::C1:
            case ReducKind::CN:
                if (atom.pole_type != PoleType::R)
                    throw GeneraError("TableInconsistent",
                                      where + " declared " + reduc_kind_name(kind) +
                                          " needs an atom of pole type R");
                break;
            case ReducKind::C_half:
                if (atom.pole_type != PoleType::Rminus)
                    throw GeneraError("TableInconsistent",
                                      where + " declared C1/2 needs an atom of pole type R-");
                break;
            case ReducKind::Irr: break;
        }
        if (kind == ReducKind::CN) {
            if (base.c_fixed)
                throw GeneraError("TableInconsistent",
                                  where + " declared CN needs a base with c_fixed = false");
            switch (base.group.family) {
                case Family::SO_even_split:
                case Family::SO_even_qs:
                case Family::GSpin_even_split:
                case Family::GSpin_even_qs:
                    if (atom.gl_rank % 2 == 0)
                        throw GeneraError("TableInconsistent",
                                          where + " (CN) needs odd gl_rank for this family");
                    break;
                case Family::GSO_even_split:
                case Family::GSO_even_qs: break;
                default:
                    throw GeneraError("TableInconsistent",
                                      where + " (CN) is unsatisfiable for family " +
                                          family_name(base.group.family));
            }
        }
    }
}

std::string DiscreteSeriesDatum::str(const Registry& reg) const {
    std::string out;
    for (const Segment& s : segments) out += s.str() + " x ";
    out += base.str(reg);
    return out;
}

std::string TemperedDatum::str(const Registry& reg) const {
    std::string out;
    for (const Segment& s : balanced) out += s.str() + " x ";
    return out + "[" + ds.str(reg) + "]";
}

std::string LanglandsDatum::str(const Registry& reg) const {
    std::string out;
    for (const Segment& s : std_segs) out += s.str() + " x ";
    return out + "[" + temp.str(reg) + "]";
}

std::string ValidationReport::str() const {
    if (ok()) return "valid";
    std::string out;
    for (const auto& v : violations) {
        if (!out.empty()) out += "; ";
        out += v.code + ": " + v.detail;
    }
    return out;
}

} // namespace genera
