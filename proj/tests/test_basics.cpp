#include <doctest.h>

#include "helpers.hpp"

using namespace genera;
using namespace genera::testing;

TEST_CASE("rational arithmetic is exact and reduced") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 2) < Rational(2, 3));
    CHECK(Rational::parse("-7/2").str() == "-7/2");
    CHECK(Rational::parse("4").is_integer());
    CHECK(Rational(3, 2).is_half_integer());
    CHECK(!Rational(1, 3).is_half_integer());
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("character symbols form a free abelian group") {
    CharacterSymbol a = CharacterSymbol::parse("w[tau1]^2 * nu^{3/2}");
    CHECK(a.str() == "w[tau1]^2 * nu^{3/2}");
    CHECK((a * a.inverse()).is_one());
    CHECK(CharacterSymbol::parse("1").is_one());
    CharacterSymbol b = CharacterSymbol::parse("w[tau1]^-2 * chi0");
    CHECK((a * b).str() == "chi0 * nu^{3/2}");

    Relations rel;
    rel.order["w[tau1]"] = 2;
    CHECK(chars_equal(CharacterSymbol::parse("w[tau1]^2"), CharacterSymbol::one(), rel));
    CHECK(!chars_equal(CharacterSymbol::parse("w[tau1]"), CharacterSymbol::one(), rel));
}

TEST_CASE("beta depends only on family, rank-zero flag and exponent") {
    CHECK(beta_of(Family::Sp, 3, Rational(5)) == Rational(0));
    CHECK(beta_of(Family::GSpin_odd, 2, Rational(1)) == Rational(1));
    CHECK(beta_of(Family::GSpin_even_split, 0, Rational(3)) == Rational(3, 2));
    CHECK(beta_of(Family::GSpin_even_qs, 0, Rational(3)) == Rational(3));
}

TEST_CASE("twisting distributes over maximal parabolic induction") {
    CharacterSymbol chi = CharacterSymbol::generator("x");
    auto [gl, base] = twist_induced(Family::GSp, chi, 2, 1);
    CHECK(gl.is_one());
    CHECK(base == chi);
    auto [gl2, base2] = twist_induced(Family::GSpin_odd, chi, 2, 0);
    CHECK(gl2 == chi);
    CHECK(base2 == chi.pow(2));
    CHECK_THROWS_WITH_AS(twist_induced(Family::Sp, chi, 1, 1), doctest::Contains("NotSimilitude"),
                         GeneraError);
    CHECK_THROWS_AS(twist_induced(Family::GSpin_even_split, chi, 1, 1), GeneraError);
}

TEST_CASE("central character table") {
    CharacterSymbol w1 = CharacterSymbol::generator("w1");
    CharacterSymbol w2 = CharacterSymbol::generator("w2");
    CharacterSymbol ws = CharacterSymbol::generator("ws");
    CHECK(central_character(Family::GSpin_odd, {w1, w2}, ws, 2) == ws);
    CHECK(central_character(Family::GSp, {w1}, ws, 0) == w1 * ws.pow(2));
    CHECK(central_character(Family::GSO_even_qs, {}, ws, 3) == ws);
    CHECK(central_character(Family::GU_even, {w1}, ws, 0).mono.count("N[ws]") == 1);
    // multiplicative in the GL factors
    CHECK(central_character(Family::GSp, {w1, w2}, ws, 1) ==
          central_character(Family::GSp, {w1 * w2}, ws, 1));
}

TEST_CASE("w0 action per family") {
    const Workspace& ws = fixture();
    const CuspidalAtom& u = ws.reg.atom("u");
    const CuspidalAtom& a = ws.reg.atom("a");
    const BaseRep& sp = ws.reg.base("s_sp");
    const BaseRep& gspin = ws.reg.base("s_gspin_odd");
    const BaseRep& sos = ws.reg.base("s_sos");

    auto [ta, tb1] = w0_action(Family::Sp, u, sp, ws.reg);
    CHECK(ta.atom == "u^");
    CHECK(ta.twist.is_one());
    CHECK(tb1.twist.is_one());
    CHECK(tb1.c_power == 0);

    auto [ta2, tb2] = w0_action(Family::GSpin_odd, u, gspin, ws.reg);
    CHECK(ta2.twist == gspin.omega);
    CHECK(tb2.twist.is_one());

    auto [ta3, tb3] = w0_action(Family::SO_even_split, a, sos, ws.reg);
    CHECK(ta3.atom == "a");
    CHECK(tb3.c_power == 1); // odd gl_rank moves the base by c
}

TEST_CASE("shahidi reducibility-point normalization") {
    CHECK(shahidi_point_to_exponent(GroupFamily(Family::Sp, 3), 1, Rational(1)) == Rational(1));
    CHECK(shahidi_point_to_exponent(GroupFamily(Family::SO_odd, 3), 3, Rational(1)) ==
          Rational(1, 2));
    CHECK(shahidi_point_to_exponent(GroupFamily(Family::GSpin_even_qs, 2), 2, Rational(2)) ==
          Rational(1));
    CHECK(shahidi_point_to_exponent(GroupFamily(Family::SO_even_split, 4), 3, Rational(1)) ==
          Rational(1, 2));
    CHECK_THROWS_AS(shahidi_point_to_exponent(GroupFamily(Family::Sp, 2), 5, Rational(1)),
                    GeneraError);
}

TEST_CASE("registry invariants from the fixture") {
    const Workspace& ws = fixture();
    for (const auto& [id, atom] : ws.reg.atoms) {
        CHECK(ws.reg.dual_atom(ws.reg.dual_atom(id)) == id);
        if (atom.pole_type != PoleType::None) CHECK(atom.self_dual());
    }
}
