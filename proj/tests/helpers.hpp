#pragma once

#include "genera/selftest.hpp"

namespace genera::testing {

inline const Workspace& fixture() {
    static Workspace ws = standard_fixture();
    return ws;
}

inline Segment seg(const std::string& atom, const std::string& low, int len,
                   const std::string& twist = "") {
    CharacterSymbol tw =
        twist.empty() ? CharacterSymbol::one() : CharacterSymbol::parse(twist);
    return Segment(atom, Rational::parse(low), len, tw);
}

inline TwistedBase tb(const std::string& base, const std::string& twist = "", int c = 0) {
    return TwistedBase{base,
                       twist.empty() ? CharacterSymbol::one() : CharacterSymbol::parse(twist), c};
}

inline BaseState bottom(const std::string& base, const std::string& twist = "", int c = 0) {
    return BaseState::make_bottom(tb(base, twist, c));
}

} // namespace genera::testing
