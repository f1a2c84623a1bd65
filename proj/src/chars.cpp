#include "genera/chars.hpp"

#include <stdexcept>

namespace genera {

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [g, e] : b) {
        int v = (r.count(g) ? r[g] : 0) + e;
        if (v == 0)
            r.erase(g);
        else
            r[g] = v;
    }
    return r;
}

Monomial mono_inv(const Monomial& a) {
    Monomial r;
    for (const auto& [g, e] : a) r[g] = -e;
    return r;
}

Monomial mono_pow(const Monomial& a, int k) {
    Monomial r;
    if (k == 0) return r;
    for (const auto& [g, e] : a) r[g] = e * k;
    return r;
}

bool mono_trivial(const Monomial& a) { return a.empty(); }

Monomial Relations::reduce(const Monomial& m) const {
    Monomial r;
    for (const auto& [g, e] : m) {
        auto it = order.find(g);
        int v = e;
        if (it != order.end() && it->second > 0) {
            v = e % it->second;
            if (v < 0) v += it->second;
        }
        if (v != 0) r[g] = v;
    }
    return r;
}

bool chars_equal(const CharacterSymbol& a, const CharacterSymbol& b, const Relations& rel) {
    return a.nu == b.nu && rel.reduce(a.mono) == rel.reduce(b.mono);
}

std::string CharacterSymbol::str() const {
    std::string out;
    for (const auto& [g, e] : mono) {
        if (!out.empty()) out += " * ";
        out += g;
        if (e != 1) out += "^" + std::to_string(e);
    }
    if (!nu.is_zero()) {
        if (!out.empty()) out += " * ";
        out += "nu^{" + nu.str() + "}";
    }
    return out.empty() ? "1" : out;
}

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

} // namespace

CharacterSymbol CharacterSymbol::parse(const std::string& input) {
    CharacterSymbol out;
    std::string s = strip(input);
    if (s.empty() || s == "1") return out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t star = s.find('*', pos);
        std::string tok = strip(star == std::string::npos ? s.substr(pos)
                                                          : s.substr(pos, star - pos));
        pos = star == std::string::npos ? s.size() : star + 1;
        if (tok.empty()) continue;
        if (tok.rfind("nu^{", 0) == 0) {
            size_t close = tok.find('}');
            if (close == std::string::npos)
                throw std::invalid_argument("bad character factor: '" + tok + "'");
            out.nu += Rational::parse(tok.substr(4, close - 4));
            continue;
        }
        if (tok == "nu") {
            out.nu += Rational(1);
            continue;
        }
        // generator name runs until a '^' that is outside brackets
        int depth = 0;
        size_t caret = std::string::npos;
        for (size_t i = 0; i < tok.size(); ++i) {
            if (tok[i] == '[') ++depth;
            else if (tok[i] == ']') --depth;
            else if (tok[i] == '^' && depth == 0) { caret = i; break; }
        }
        std::string gen = caret == std::string::npos ? tok : strip(tok.substr(0, caret));
        int e = 1;
        if (caret != std::string::npos) {
            try {
                e = std::stoi(strip(tok.substr(caret + 1)));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad generator power: '" + tok + "'");
            }
        }
        if (gen.empty()) throw std::invalid_argument("bad character factor: '" + tok + "'");
        out.mono = mono_mul(out.mono, mono_pow(Monomial{{gen, 1}}, e));
    }
    return out;
}

} // namespace genera
