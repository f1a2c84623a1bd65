#pragma once

#include <map>
#include <string>
#include <vector>

#include "genera/rational.hpp"

namespace genera {

// Map generator -> integer exponent. Keys are generator tokens
// such as w[tau1], chi0, eta_eps; exponent 0 entries are dropped.
using Monomial = std::map<std::string, int>;

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_inv(const Monomial& a);
Monomial mono_pow(const Monomial& a, int k);
bool mono_trivial(const Monomial& a);

// Declared finite orders of generators: comparisons reduce exponents mod order.
struct Relations {
    std::map<std::string, int> order;

    Monomial reduce(const Monomial& m) const;
};

// Element of the free abelian group of character symbols times a nu-power:
// monomial * nu^{nu_shift}. The identity has empty monomial and zero shift.
struct CharacterSymbol {
    Monomial mono;
    Rational nu;

    CharacterSymbol() = default;
    explicit CharacterSymbol(Monomial m, Rational shift = Rational(0))
        : mono(std::move(m)), nu(shift) {}

    static CharacterSymbol one() { return CharacterSymbol(); }
    static CharacterSymbol generator(const std::string& g, int e = 1) {
        Monomial m;
        if (e != 0) m[g] = e;
        return CharacterSymbol(std::move(m));
    }
    static CharacterSymbol nu_power(const Rational& x) { return CharacterSymbol(Monomial{}, x); }

    bool is_one() const { return mono.empty() && nu.is_zero(); }

    CharacterSymbol operator*(const CharacterSymbol& o) const {
        return CharacterSymbol(mono_mul(mono, o.mono), nu + o.nu);
    }
    CharacterSymbol inverse() const { return CharacterSymbol(mono_inv(mono), -nu); }
    CharacterSymbol pow(int k) const { return CharacterSymbol(mono_pow(mono, k), nu * Rational(k)); }
    // Monomial part only (the unitary direction), shift dropped.
    CharacterSymbol monomial_part() const { return CharacterSymbol(mono); }

    CharacterSymbol reduced(const Relations& rel) const {
        return CharacterSymbol(rel.reduce(mono), nu);
    }

    friend bool operator==(const CharacterSymbol& a, const CharacterSymbol& b) {
        return a.nu == b.nu && a.mono == b.mono;
    }
    friend bool operator!=(const CharacterSymbol& a, const CharacterSymbol& b) { return !(a == b); }
    friend bool operator<(const CharacterSymbol& a, const CharacterSymbol& b) {
        if (a.mono != b.mono) return a.mono < b.mono;
        return a.nu < b.nu;
    }

    // Canonical rendering: "w[tau1]^2 * nu^{3/2}", identity renders as "1".
    std::string str() const;

    // Parses the rendering above (also bare "1", "nu^{x}", "gen", "gen^-2").
    static CharacterSymbol parse(const std::string& s);
};

bool chars_equal(const CharacterSymbol& a, const CharacterSymbol& b, const Relations& rel);

} // namespace genera
