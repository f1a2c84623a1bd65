#pragma once

#include "genera/data.hpp"
#include "genera/glring.hpp"

namespace genera {

// One term key of N*: three multisegment slots plus the sign-change marker.
struct NKey {
    Multisegment first, second, third;
    int sign = 0; // 0 = e, 1 = c

    friend bool operator<(const NKey& a, const NKey& b) {
        if (!(a.first == b.first)) return a.first < b.first;
        if (!(a.second == b.second)) return a.second < b.second;
        if (!(a.third == b.third)) return a.third < b.third;
        return a.sign < b.sign;
    }
    friend bool operator==(const NKey& a, const NKey& b) {
        return a.first == b.first && a.second == b.second && a.third == b.third &&
               a.sign == b.sign;
    }
};

struct NStarElement {
    std::map<NKey, std::int64_t> terms;

    void add(const NKey& k, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(k, 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    friend bool operator==(const NStarElement& a, const NStarElement& b) {
        return a.terms == b.terms;
    }
    std::string str() const;
};

// N* = (dual (x) m*)_D o s o m*, multiplicative over products and linear.
NStarElement n_star(const RElement& x, const Registry& reg);
NStarElement n_star_segment(const Segment& s, const Registry& reg);

// The base position of a Jacquet-module term. Bottom: supercuspidal sigma;
// Small: the rank-one chi x| (chi' (x) e) representation of SO_2/GSO_2/GSpin_2;
// Steinberg: a generalized Steinberg ladder delta([nu^alpha tau, nu^b tau]; sigma).
struct SteinbergCore {
    Segment ladder;
    ReducKind kind = ReducKind::C1;
    int sign = +1; // +-1, meaningful for (C0) only

    friend bool operator<(const SteinbergCore& a, const SteinbergCore& b) {
        if (!(a.ladder == b.ladder)) return a.ladder < b.ladder;
        if (a.kind != b.kind) return a.kind < b.kind;
        return a.sign < b.sign;
    }
    friend bool operator==(const SteinbergCore& a, const SteinbergCore& b) {
        return a.ladder == b.ladder && a.kind == b.kind && a.sign == b.sign;
    }
};

struct BaseState {
    enum class Tag { Bottom, Small, Steinberg };
    Tag tag = Tag::Bottom;
    TwistedBase bottom;
    std::optional<Segment> small_gl;     // Tag::Small
    std::optional<SteinbergCore> stein;  // Tag::Steinberg

    static BaseState make_bottom(TwistedBase tb) {
        BaseState s;
        s.bottom = std::move(tb);
        return s;
    }
    static BaseState make_small(Segment gl1, TwistedBase tb);
    static BaseState make_steinberg(SteinbergCore core, TwistedBase tb) {
        BaseState s;
        s.tag = Tag::Steinberg;
        s.stein = std::move(core);
        s.bottom = std::move(tb);
        return s;
    }

    int rank(const Registry& reg) const;

    friend bool operator<(const BaseState& a, const BaseState& b);
    friend bool operator==(const BaseState& a, const BaseState& b);

    std::string str(const Registry& reg) const;
};

// Class of an induced representation [inner x| base] in R[G]; induction in
// stages is baked in by keeping inner flat.
struct InducedSymbol {
    Multisegment inner;
    BaseState base;

    friend bool operator<(const InducedSymbol& a, const InducedSymbol& b) {
        if (!(a.inner == b.inner)) return a.inner < b.inner;
        return a.base < b.base;
    }
    friend bool operator==(const InducedSymbol& a, const InducedSymbol& b) {
        return a.inner == b.inner && a.base == b.base;
    }
    std::string str(const Registry& reg) const;
};

// Element of R (x) R[G]: the full semisimplified Jacquet ledger.
struct GRepElement {
    std::map<std::pair<Multisegment, InducedSymbol>, std::int64_t> terms;

    void add(const Multisegment& gl, const InducedSymbol& base, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(std::make_pair(gl, base), 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    friend GRepElement operator+(const GRepElement& a, const GRepElement& b) {
        GRepElement r = a;
        for (const auto& [k, c] : b.terms) r.add(k.first, k.second, c);
        return r;
    }
    friend bool operator==(const GRepElement& a, const GRepElement& b) {
        return a.terms == b.terms;
    }
    std::string str(const Registry& reg) const;
};

// Family-dependent pairing with the group's mu* module structure.
GRepElement tilde_rtimes(Family f, const NStarElement& nx, const GRepElement& gx,
                         const Registry& reg);

// Jacquet ledger of the base state itself (1 (x) sigma for supercuspidal bases,
// the explicit three-term formulas for SO_2/GSO_2/GSpin_2, the ladder expansion
// for Steinberg symbols).
GRepElement mu_star_base(const BaseState& pi, Family f, const Registry& reg);

// mu*(lambda x| pi) = N*(lambda) tilde-x| mu*(pi).
GRepElement mu_star(const RElement& lambda, const BaseState& pi, Family f, const Registry& reg);

enum class Slice { SGL, SM };
// SGL keeps the terms whose base slot is fully reduced; SM keeps GL rank m.
GRepElement extract(const GRepElement& g, Slice slice, int m, const Registry& reg);

// Apply the w0 substitution segmentwise inside every inner multisegment,
// choosing the canonically smaller representative; makes ledgers comparable
// across the Grothendieck-group identities.
GRepElement w0_canonicalize(Family f, const GRepElement& g, const Registry& reg);

// A fully refined Jacquet word: single nu^x(chi tau) letters over a bottom base.
struct JacquetWord {
    std::vector<Segment> letters; // each with len = 0
    TwistedBase base;

    friend bool operator<(const JacquetWord& a, const JacquetWord& b) {
        if (!(a.letters == b.letters)) return a.letters < b.letters;
        return a.base < b.base;
    }
    friend bool operator==(const JacquetWord& a, const JacquetWord& b) {
        return a.letters == b.letters && a.base == b.base;
    }
};

// Minimal (supercuspidal-support) Jacquet words with multiplicities, obtained
// by shuffling the descending words of the fully GL slices.
std::map<JacquetWord, std::int64_t> minimal_words(const GRepElement& g, const Registry& reg);

// The iterated s_(m) word of a generalized Steinberg symbol:
// nu^b tau (x) ... (x) nu^alpha tau (x) chi_0 sigma.
JacquetWord steinberg_jacquet(ReducKind kind, const Segment& ladder, const TwistedBase& chi0base,
                              const Registry& reg);

// Support bound for the GL Jacquet modules of a discrete-series datum
// (coefficient normalized to 1; base emitted untwisted).
GRepElement tadic_bound(const DiscreteSeriesDatum& datum, const Registry& reg);

} // namespace genera
