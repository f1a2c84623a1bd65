#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genera/groups.hpp"

namespace genera {

// Zelevinsky segment [nu^low (chi tau), ..., nu^{low+len} (chi tau)]: a closed
// interval on the nu-exponent lattice of one (possibly character-twisted) atom.
struct Segment {
    std::string atom;
    CharacterSymbol twist; // pure monomial; any nu part is absorbed into low
    Rational low;
    int len = 0;

    Segment() = default;
    Segment(std::string a, Rational lo, int l, CharacterSymbol tw = CharacterSymbol::one())
        : atom(std::move(a)), twist(std::move(tw)), low(lo), len(l) {
        if (len < 0) throw GeneraError("InvalidSegment", "negative length");
        low += twist.nu;
        twist.nu = Rational(0);
    }

    Rational high() const { return low + Rational(len); }
    Rational center() const { return low + Rational(len, 2); }
    int rank(const Registry& reg) const { return (len + 1) * reg.atom(atom).gl_rank; }
    bool balanced() const { return center().is_zero(); }

    // Same twisted atom (used by linking and dual-pair resolution).
    bool same_line(const Segment& o) const { return atom == o.atom && twist.mono == o.twist.mono; }

    friend bool operator==(const Segment& a, const Segment& b) {
        return a.atom == b.atom && a.twist == b.twist && a.low == b.low && a.len == b.len;
    }
    friend bool operator!=(const Segment& a, const Segment& b) { return !(a == b); }
    // Canonical order: atom id, then center descending, then length, then twist.
    friend bool operator<(const Segment& a, const Segment& b) {
        if (a.atom != b.atom) return a.atom < b.atom;
        if (a.center() != b.center()) return b.center() < a.center();
        if (a.len != b.len) return a.len < b.len;
        return a.twist < b.twist;
    }

    std::string str() const;
};

// Central character of delta(segment) as a symbol.
CharacterSymbol segment_omega(const Segment& s, const Registry& reg);

// [nu^a xi, nu^b xi] -> [nu^{-b} xi~, nu^{-a} xi~]; twists invert.
Segment check_dual(const Segment& s, const Registry& reg);

// Twist a segment by a character (monomial goes to the twist, nu to the ends).
Segment twist_segment(const Segment& s, const CharacterSymbol& chi);

bool linked(const Segment& a, const Segment& b);
bool gl_product_irreducible(const Segment& a, const Segment& b);

// Multiset of segments in canonical order.
struct Multisegment {
    std::vector<Segment> segs;

    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> v) : segs(std::move(v)) { normalize(); }

    void add(const Segment& s) {
        segs.push_back(s);
        normalize();
    }
    bool empty() const { return segs.empty(); }
    int rank(const Registry& reg) const {
        int r = 0;
        for (const auto& s : segs) r += s.rank(reg);
        return r;
    }

    static Multisegment merged(const Multisegment& a, const Multisegment& b) {
        std::vector<Segment> v = a.segs;
        v.insert(v.end(), b.segs.begin(), b.segs.end());
        return Multisegment(std::move(v));
    }

    friend bool operator==(const Multisegment& a, const Multisegment& b) { return a.segs == b.segs; }
    friend bool operator<(const Multisegment& a, const Multisegment& b);

    std::string str() const;

  private:
    void normalize();
};

// Generic constituent {D n Dv, D u Dv} of delta(D) x delta(Dv) for a linked
// dual pair; the empty intersection is dropped.
Multisegment resolve_dual_pair(const Segment& d, const Segment& dv, const Registry& reg);

} // namespace genera
