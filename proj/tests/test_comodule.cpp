#include <doctest.h>

#include <tuple>

#include "helpers.hpp"

using namespace genera;
using namespace genera::testing;

namespace {

// (m* (x) id) o mu*  ==  (id (x) mu*) o mu*: the two-step restriction ledgers
// agree whichever factor is refined first.
using TripleKey = std::tuple<Multisegment, Multisegment, InducedSymbol>;

std::map<TripleKey, std::int64_t> refine_gl(const GRepElement& g, const Registry& reg) {
    (void)reg;
    std::map<TripleKey, std::int64_t> out;
    for (const auto& [k, c] : g.terms) {
        RTensor split = m_star(RElement::basis(k.first));
        for (const auto& [sk, sc] : split.terms)
            out[{sk.first, sk.second, k.second}] += c * sc;
    }
    return out;
}

std::map<TripleKey, std::int64_t> refine_base(const GRepElement& g, Family f,
                                              const Registry& reg) {
    std::map<TripleKey, std::int64_t> out;
    for (const auto& [k, c] : g.terms) {
        GRepElement inner = mu_star(RElement::basis(k.second.inner), k.second.base, f, reg);
        for (const auto& [ik, ic] : inner.terms)
            out[{k.first, ik.first, ik.second}] += c * ic;
    }
    return out;
}

bool comodule_coassociative(const RElement& lambda, const BaseState& pi, Family f,
                            const Registry& reg) {
    GRepElement g = mu_star(lambda, pi, f, reg);
    return refine_gl(g, reg) == refine_base(g, f, reg);
}

} // namespace

TEST_CASE("two-step restriction agrees whichever slot is refined first") {
    const Registry& reg = fixture().reg;
    std::vector<Segment> grid;
    for (const std::string atom : {"a", "u", "e2"})
        for (int num = -3; num <= 1; num += 2)
            for (int len = 0; len <= 2; ++len) grid.push_back(seg(atom, Rational(num, 2).str(), len));

    for (const char* base_id :
         {"s_so_odd", "s_sp", "s_sos", "s_soq", "s_uo", "s_ue", "s_gsp", "s_gsos", "s_gsoq",
          "s_guo", "s_gue", "s_gspin_odd", "s_gspins", "s_gspinq", "s_beta_half", "s_beta_one"}) {
        Family f = reg.base(base_id).group.family;
        BaseState pi = bottom(base_id);
        for (const Segment& s : grid)
            CHECK(comodule_coassociative(RElement::basis(s), pi, f, reg));
        // one two-segment case per base
        Multisegment both({grid[1], grid[8]});
        CHECK(comodule_coassociative(RElement::basis(both), pi, f, reg));
    }
}

TEST_CASE("two-step restriction over Steinberg and small-rank bases") {
    const Registry& reg = fixture().reg;
    SUBCASE("steinberg ladders") {
        SteinbergCore core;
        core.ladder = seg("a", "1", 1);
        core.kind = ReducKind::C1;
        BaseState st = BaseState::make_steinberg(core, tb("s_sp"));
        CHECK(comodule_coassociative(RElement::basis(seg("a", "0", 1)), st, Family::Sp, reg));
        SteinbergCore cn;
        cn.ladder = seg("a", "0", 1);
        cn.kind = ReducKind::CN;
        BaseState stn = BaseState::make_steinberg(cn, tb("s_sos"));
        CHECK(comodule_coassociative(RElement::basis(seg("a", "1", 0)), stn,
                                     Family::SO_even_split, reg));
    }
    SUBCASE("small-rank bases") {
        for (const char* base_id : {"s_sos", "s_gsos", "s_gspins"}) {
            Family f = reg.base(base_id).group.family;
            BaseState small = BaseState::make_small(seg("u", "1", 0), tb(base_id));
            CHECK(comodule_coassociative(RElement::basis(seg("a", "-1", 2)), small, f, reg));
            CHECK(comodule_coassociative(RElement::one(), small, f, reg));
        }
    }
}
