#include "genera/glring.hpp"

namespace genera {

namespace {

std::string coeff_prefix(std::int64_t c) {
    if (c == 1) return "";
    if (c == -1) return "-";
    return std::to_string(c) + "·";
}

} // namespace

std::string RElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms) {
        if (!out.empty()) out += " + ";
        out += coeff_prefix(c) + m.str();
    }
    return out;
}

std::string RTensor::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        out += coeff_prefix(c) + k.first.str() + "⊗" + k.second.str();
    }
    return out;
}

RTensor m_star_segment(const Segment& s) {
    RTensor out;
    // i runs over low-1 .. high; top = [i+1, high], bottom = [low, i]
    for (int k = -1; k <= s.len; ++k) {
        Multisegment top, bottom;
        if (k < s.len) {
            Segment t = s;
            t.low = s.low + Rational(k + 1);
            t.len = s.len - k - 1;
            top.add(t);
        }
        if (k >= 0) {
            Segment b = s;
            b.len = k;
            bottom.add(b);
        }
        out.add(top, bottom, 1);
    }
    return out;
}

RTensor m_star(const RElement& x) {
    RTensor out;
    for (const auto& [m, c] : x.terms) {
        RTensor prod = RTensor::one();
        for (const Segment& s : m.segs) prod = prod * m_star_segment(s);
        for (const auto& [k, pc] : prod.terms) out.add(k.first, k.second, pc * c);
    }
    return out;
}

} // namespace genera
