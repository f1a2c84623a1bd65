#pragma once

#include <cstdint>
#include <map>

#include "genera/segments.hpp"

namespace genera {

// Integer combination of multisegments: the delta-basis slice of the ring R.
struct RElement {
    std::map<Multisegment, std::int64_t> terms;

    static RElement one() {
        RElement r;
        r.terms[Multisegment()] = 1;
        return r;
    }
    static RElement basis(const Multisegment& m) {
        RElement r;
        r.terms[m] = 1;
        return r;
    }
    static RElement basis(const Segment& s) { return basis(Multisegment({s})); }

    void add(const Multisegment& m, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(m, 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }

    friend RElement operator+(const RElement& a, const RElement& b) {
        RElement r = a;
        for (const auto& [m, c] : b.terms) r.add(m, c);
        return r;
    }
    friend RElement operator*(const RElement& a, const RElement& b) {
        RElement r;
        for (const auto& [ma, ca] : a.terms)
            for (const auto& [mb, cb] : b.terms) r.add(Multisegment::merged(ma, mb), ca * cb);
        return r;
    }
    friend bool operator==(const RElement& a, const RElement& b) { return a.terms == b.terms; }

    std::string str() const;
};

// Element of R (x) R.
struct RTensor {
    std::map<std::pair<Multisegment, Multisegment>, std::int64_t> terms;

    static RTensor one() {
        RTensor t;
        t.terms[{Multisegment(), Multisegment()}] = 1;
        return t;
    }
    void add(const Multisegment& l, const Multisegment& r, std::int64_t c) {
        if (c == 0) return;
        auto [it, fresh] = terms.emplace(std::make_pair(l, r), 0);
        it->second += c;
        if (it->second == 0) terms.erase(it);
    }
    friend RTensor operator+(const RTensor& a, const RTensor& b) {
        RTensor r = a;
        for (const auto& [k, c] : b.terms) r.add(k.first, k.second, c);
        return r;
    }
    friend RTensor operator*(const RTensor& a, const RTensor& b) {
        RTensor r;
        for (const auto& [ka, ca] : a.terms)
            for (const auto& [kb, cb] : b.terms)
                r.add(Multisegment::merged(ka.first, kb.first),
                      Multisegment::merged(ka.second, kb.second), ca * cb);
        return r;
    }
    friend bool operator==(const RTensor& a, const RTensor& b) { return a.terms == b.terms; }

    std::string str() const;
};

// m*(delta(Sigma)) = sum_i delta(top part) (x) delta(bottom part), with the
// empty range contributing the identity in its slot.
RTensor m_star_segment(const Segment& s);

// Ring-homomorphic, linear extension to all of R.
RTensor m_star(const RElement& x);

} // namespace genera
