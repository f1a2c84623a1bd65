#include "genera/segments.hpp"

#include <algorithm>

namespace genera {

std::string Segment::str() const {
    std::string at = atom;
    if (!twist.mono.empty()) at = "(" + twist.str() + ")" + atom;
    return "d([" + low.str() + "," + high().str() + "]@" + at + ")";
}

CharacterSymbol segment_omega(const Segment& s, const Registry& reg) {
    const CuspidalAtom& a = reg.atom(s.atom);
    int copies = s.len + 1;
    CharacterSymbol w = (a.omega * s.twist).pow(copies);
    w.nu += s.center() * Rational(copies) * Rational(a.gl_rank);
    return w;
}

Segment check_dual(const Segment& s, const Registry& reg) {
    Segment r;
    r.atom = reg.dual_atom(s.atom);
    r.twist = s.twist.inverse();
    r.low = -s.high();
    r.len = s.len;
    return r;
}

Segment twist_segment(const Segment& s, const CharacterSymbol& chi) {
    Segment r = s;
    r.twist = CharacterSymbol(mono_mul(r.twist.mono, chi.mono));
    r.low += chi.nu;
    return r;
}

bool linked(const Segment& a, const Segment& b) {
    if (!a.same_line(b)) return false;
    if (!(b.low - a.low).is_integer()) return false;
    // union must be an unbroken progression
    if (a.low > b.high() + Rational(1) || b.low > a.high() + Rational(1)) return false;
    // neither contains the other
    bool a_in_b = b.low <= a.low && a.high() <= b.high();
    bool b_in_a = a.low <= b.low && b.high() <= a.high();
    return !a_in_b && !b_in_a;
}

bool gl_product_irreducible(const Segment& a, const Segment& b) { return !linked(a, b); }

void Multisegment::normalize() { std::sort(segs.begin(), segs.end()); }

bool operator<(const Multisegment& a, const Multisegment& b) {
    return std::lexicographical_compare(a.segs.begin(), a.segs.end(), b.segs.begin(),
                                        b.segs.end());
}

std::string Multisegment::str() const {
    std::string out = "{";
    for (size_t i = 0; i < segs.size(); ++i) {
        if (i) out += " , ";
        out += segs[i].str();
    }
    return out + "}";
}

Multisegment resolve_dual_pair(const Segment& d, const Segment& dv, const Registry& reg) {
    if (dv != check_dual(d, reg))
        throw GeneraError("NotDualPair", "second segment is not the dual of the first");
    if (!linked(d, dv))
        throw GeneraError("NotDualPair", "dual pair is unlinked (already irreducible)");
    std::vector<Segment> out;
    const Rational ilo = std::max(d.low, dv.low);
    const Rational ihi = std::min(d.high(), dv.high());
    if (ilo <= ihi) {
        Segment inter = d;
        inter.low = ilo;
        inter.len = static_cast<int>((ihi - ilo).num());
        out.push_back(inter);
    }
    Segment uni = d;
    uni.low = std::min(d.low, dv.low);
    uni.len = static_cast<int>((std::max(d.high(), dv.high()) - uni.low).num());
    out.push_back(uni);
    return Multisegment(std::move(out));
}

} // namespace genera
