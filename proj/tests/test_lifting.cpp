#include <doctest.h>

#include "helpers.hpp"

using namespace genera;
using namespace genera::testing;

namespace {

HNRepDatum hn(Family f, int rank, std::vector<Segment> segs,
              HNRepDatum::Level level = HNRepDatum::Level::Discrete) {
    HNRepDatum rho;
    rho.level = level;
    rho.group = GroupFamily(f, rank);
    rho.segments = std::move(segs);
    std::sort(rho.segments.begin(), rho.segments.end());
    return rho;
}

Segment ball(const std::string& atom, const std::string& m) {
    Rational r = Rational::parse(m);
    return Segment(atom, -r, static_cast<int>((r * Rational(2)).num()));
}

} // namespace

TEST_CASE("descend_ds partitions by pole type and parity") {
    const Workspace& ws = fixture();
    SUBCASE("B-case: type R, even profile") {
        // M(e2) = {1, 2} over SO_odd; N = 2(3+5) = 16... use rank per lift sum
        HNRepDatum rho = hn(Family::SO_odd, 8, {ball("e2", "1"), ball("e2", "2")});
        DiscreteSeriesDatum d = descend_ds(rho, ws.lifts, ws.reg);
        REQUIRE(d.segments.size() == 1);
        CHECK(d.segments[0] == seg("e2", "-1", 3)); // [-1,2]
        CHECK(d.base.base_id == "L_so0");
    }
    SUBCASE("A1-case: m1 = 0 sends the atom to the base") {
        // M(a) = {0,1,2} over Sp: N = 1+3+5 = 9, rank 4
        HNRepDatum rho = hn(Family::Sp, 4, {ball("a", "0"), ball("a", "1"), ball("a", "2")});
        DiscreteSeriesDatum d = descend_ds(rho, ws.lifts, ws.reg);
        REQUIRE(d.segments.size() == 1);
        CHECK(d.segments[0] == seg("a", "-1", 3));
        CHECK(d.base.base_id == "L_sp0"); // lift {a}
    }
    SUBCASE("C-odd: half-integral single pole") {
        // M(b) = {3/2} over Sp with the trivial-base atom a: N = 4 + 1
        HNRepDatum rho = hn(Family::Sp, 2, {ball("b", "3/2"), ball("a", "0")});
        DiscreteSeriesDatum d = descend_ds(rho, ws.lifts, ws.reg);
        REQUIRE(d.segments.size() == 1);
        CHECK(d.segments[0] == seg("b", "1/2", 1)); // [1/2, 3/2]
        CHECK(d.base.base_id == "L_sp0");
    }
    SUBCASE("descended data always pass check_ds") {
        HNRepDatum rho = hn(Family::Sp, 9, {ball("a", "0"), ball("e2", "1"), ball("e2", "2"),
                                            ball("b", "1/2")});
        DiscreteSeriesDatum d = descend_ds(rho, ws.lifts, ws.reg);
        CHECK(check_ds(d, ws.table, ws.reg).ok());
    }
    SUBCASE("malformed input") {
        HNRepDatum bad = hn(Family::Sp, 1, {seg("a", "0", 1)}); // unbalanced
        CHECK_THROWS_AS(descend_ds(bad, ws.lifts, ws.reg), GeneraError);
    }
}

TEST_CASE("lift_ds emits balanced pairs and absorbs the C1 Steinberg") {
    const Workspace& ws = fixture();
    SUBCASE("a = -1 consumes the base atom") {
        DiscreteSeriesDatum d;
        d.base = tb("L_sp0");
        d.beta = Rational(0);
        d.segments = {seg("a", "1", 1)}; // [1,2]: a=-1, b=2
        HNRepDatum rho = lift_ds(d, ws.lifts, ws.reg);
        REQUIRE(rho.segments.size() == 1);
        CHECK(rho.segments[0] == ball("a", "2"));
        CHECK(validate_hn(rho, ws.reg).ok());
    }
    SUBCASE("a = 1 emits both balls") {
        DiscreteSeriesDatum d;
        d.base = tb("L_so0");
        d.beta = Rational(0);
        d.segments = {seg("e2", "-1", 3)}; // a=1, b=2
        HNRepDatum rho = lift_ds(d, ws.lifts, ws.reg);
        REQUIRE(rho.segments.size() == 2);
        CHECK(rho.segments[0] == ball("e2", "1"));
        CHECK(rho.segments[1] == ball("e2", "2"));
    }
    SUBCASE("empty datum passes the base lifting through") {
        DiscreteSeriesDatum d;
        d.base = tb("L_sp0");
        d.beta = Rational(0);
        HNRepDatum rho = lift_ds(d, ws.lifts, ws.reg);
        REQUIRE(rho.segments.size() == 1);
        CHECK(rho.segments[0] == ball("a", "0"));
    }
    SUBCASE("missing base atom is an error") {
        DiscreteSeriesDatum d;
        d.base = tb("L_so0"); // empty lift
        d.beta = Rational(0);
        d.segments = {seg("e2", "1", 1)}; // a = -1 needs e2 in the lifting
        CHECK_THROWS_AS(lift_ds(d, ws.lifts, ws.reg), GeneraError);
    }
}

TEST_CASE("ds round trips") {
    const Workspace& ws = fixture();
    Rng rng(20240809);
    DsGenOptions opt;
    opt.lifting_only = true;
    for (int t = 0; t < 60; ++t) {
        DiscreteSeriesDatum d = random_ds_datum(ws, rng, opt);
        HNRepDatum rho = lift_ds(d, ws.lifts, ws.reg);
        CHECK(validate_hn(rho, ws.reg).ok());
        DiscreteSeriesDatum back = descend_ds(rho, ws.lifts, ws.reg);
        CHECK(back.segments == d.segments);
        CHECK(back.base == d.base);
        CHECK(check_ds(back, ws.table, ws.reg).ok());
    }
}

TEST_CASE("tempered descent rules") {
    const Workspace& ws = fixture();
    SUBCASE("S2: even multiplicity halves into the tail") {
        HNRepDatum rho = hn(Family::SO_odd, 6, {ball("e2", "1"), ball("e2", "1")},
                            HNRepDatum::Level::Tempered);
        TemperedDatum t = descend_tempered(rho, ws.lifts, ws.reg);
        CHECK(t.ds.segments.empty());
        REQUIRE(t.balanced.size() == 1);
        CHECK(t.balanced[0] == ball("e2", "1"));
    }
    SUBCASE("N: non-self-dual pairs go whole to the tail") {
        HNRepDatum rho = hn(Family::SO_odd, 1, {ball("u", "0"), ball("u^", "0")},
                            HNRepDatum::Level::Tempered);
        TemperedDatum t = descend_tempered(rho, ws.lifts, ws.reg);
        CHECK(t.ds.segments.empty());
        REQUIRE(t.balanced.size() == 1);
        CHECK((t.balanced[0].atom == "u" || t.balanced[0].atom == "u^"));
        // odd unpaired copies violate the parity conditions
        HNRepDatum bad = hn(Family::SO_odd, 1, {ball("u", "0")}, HNRepDatum::Level::Tempered);
        CHECK_THROWS_AS(descend_tempered(bad, ws.lifts, ws.reg), GeneraError);
    }
    SUBCASE("W: parity mismatch requires even multiplicity") {
        // e2 is type R; half-integral balls are parity-mismatched
        HNRepDatum rho = hn(Family::SO_odd, 4, {ball("e2", "1/2"), ball("e2", "1/2")},
                            HNRepDatum::Level::Tempered);
        TemperedDatum t = descend_tempered(rho, ws.lifts, ws.reg);
        REQUIRE(t.balanced.size() == 1);
        HNRepDatum bad = hn(Family::SO_odd, 2, {ball("e2", "1/2")},
                            HNRepDatum::Level::Tempered);
        CHECK_THROWS_AS(descend_tempered(bad, ws.lifts, ws.reg), GeneraError);
    }
    SUBCASE("S1: the odd copy feeds the discrete core") {
        HNRepDatum rho = hn(Family::Sp, 9, {ball("a", "0"), ball("e2", "1"), ball("e2", "1"),
                                            ball("e2", "1")},
                            HNRepDatum::Level::Tempered);
        TemperedDatum t = descend_tempered(rho, ws.lifts, ws.reg);
        REQUIRE(t.balanced.size() == 1);
        CHECK(t.balanced[0] == ball("e2", "1"));
        REQUIRE(t.ds.segments.size() == 1);
        CHECK(t.ds.segments[0] == seg("e2", "1", 0)); // A2 ladder [nu e2, nu e2]
        CHECK(t.ds.base.base_id == "L_sp1");
    }
}

TEST_CASE("tempered round trips") {
    const Workspace& ws = fixture();
    Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        TemperedDatum td = random_tempered_datum(ws, rng, 2);
        HNRepDatum rho = lift_tempered(td, ws.lifts, ws.reg);
        CHECK(validate_hn(rho, ws.reg).ok());
        TemperedDatum back = descend_tempered(rho, ws.lifts, ws.reg);
        CHECK(back.balanced == td.balanced);
        CHECK(back.ds.segments == td.ds.segments);
        CHECK(back.ds.base == td.ds.base);
    }
}

TEST_CASE("generic descent clauses") {
    const Workspace& ws = fixture();
    SUBCASE("(3a): non-self-dual standard atom") {
        HNRepDatum rho = hn(Family::SO_odd, 1, {}, HNRepDatum::Level::Generic);
        rho.std_segs = {seg("u", "1", 0)};
        GenericDescent d = descend_generic(rho, ws.lifts, ws.reg);
        REQUIRE(d.clauses.size() == 1);
        CHECK(d.clauses[0] == "3a");
        CHECK(d.datum.std_segs == rho.std_segs);
    }
    SUBCASE("(3b): C1 Steinberg point with a dominating core segment") {
        HNRepDatum rho = hn(Family::Sp, 2, {ball("a", "1")}, HNRepDatum::Level::Generic);
        rho.std_segs = {seg("a", "1", 0)}; // q=-1, w=0
        GenericDescent d = descend_generic(rho, ws.lifts, ws.reg);
        REQUIRE(d.clauses.size() == 1);
        CHECK(d.clauses[0] == "3b"); // core Delta_0 = [1,1] dominates
    }
    SUBCASE("(3c): reducibility point avoided") {
        HNRepDatum rho = hn(Family::Sp, 2, {ball("a", "0")}, HNRepDatum::Level::Generic);
        rho.std_segs = {seg("a", "3", 1)}; // (C1), set {3,4}
        GenericDescent d = descend_generic(rho, ws.lifts, ws.reg);
        REQUIRE(d.clauses.size() == 1);
        CHECK(d.clauses[0] == "3c");
    }
    SUBCASE("violations are named") {
        HNRepDatum rho = hn(Family::Sp, 2, {ball("a", "0")}, HNRepDatum::Level::Generic);
        rho.std_segs = {seg("a", "1", 1)}; // q=-1 with no dominating segment
        CHECK_THROWS_WITH_AS(descend_generic(rho, ws.lifts, ws.reg),
                             doctest::Contains("GenericSequenceViolation"), GeneraError);
    }
}

TEST_CASE("generic round trips") {
    const Workspace& ws = fixture();
    Rng rng(404);
    int done = 0;
    for (int t = 0; t < 300 && done < 40; ++t) {
        LanglandsDatum d = random_langlands_datum(ws, rng, true);
        HNRepDatum rho;
        try {
            rho = lift_generic(d, ws.lifts, ws.reg);
            if (!validate_hn(rho, ws.reg).ok()) continue;
            GenericDescent back = descend_generic(rho, ws.lifts, ws.reg);
            CHECK(back.datum.std_segs == d.std_segs);
            CHECK(back.datum.temp.balanced == d.temp.balanced);
            CHECK(back.datum.temp.ds.segments == d.temp.ds.segments);
            ++done;
        } catch (const GeneraError&) {
            continue; // candidate outside Pi^{(g)}
        }
    }
    CHECK(done >= 20);
}

TEST_CASE("gamma bags") {
    const Workspace& ws = fixture();
    SUBCASE("an HN datum is its own bag") {
        HNRepDatum rho = hn(Family::SO_odd, 8, {ball("e2", "1"), ball("e2", "2")});
        GammaBag bag = gamma_bag(rho, ws.reg);
        CHECK(bag.segments == rho.segments);
    }
    SUBCASE("B-case dual pair rewrites to the balanced pair") {
        DiscreteSeriesDatum d;
        d.base = tb("L_so0");
        d.beta = Rational(0);
        d.segments = {seg("e2", "-1", 3)}; // [-1,2]
        GammaBag bag = gamma_bag(GDatum(d), ws.lifts, ws.reg);
        std::vector<Segment> want = {ball("e2", "1"), ball("e2", "2")};
        std::sort(want.begin(), want.end());
        CHECK(bag.segments == want);
    }
    SUBCASE("A2-case absorbs the base atom") {
        DiscreteSeriesDatum d;
        d.base = tb("L_sp0");
        d.beta = Rational(0);
        d.segments = {seg("a", "1", 1)}; // Delta_0 = [1,2]
        GammaBag bag = gamma_bag(GDatum(d), ws.lifts, ws.reg);
        std::vector<Segment> want = {ball("a", "2")};
        CHECK(bag.segments == want);
    }
    SUBCASE("identity against the lift, and sensitivity to a pole flip") {
        Rng rng(5);
        for (int t = 0; t < 40; ++t) {
            TemperedDatum td = random_tempered_datum(ws, rng, 2);
            HNRepDatum rho = lift_tempered(td, ws.lifts, ws.reg);
            GammaBag left = gamma_bag(GDatum(descend_tempered(rho, ws.lifts, ws.reg)), ws.lifts,
                                      ws.reg);
            CHECK(check_gamma_identity(left, gamma_bag(rho, ws.reg)));
            if (!rho.segments.empty()) {
                HNRepDatum mut = rho;
                mut.segments[0].low -= Rational(1);
                mut.segments[0].len += 2;
                CHECK(!check_gamma_identity(left, gamma_bag(mut, ws.reg)));
            }
        }
    }
}

TEST_CASE("parameters map to representation data") {
    const Workspace& ws = fixture();
    SUBCASE("tempered parameter gives a tempered datum") {
        WeilParameter p;
        p.group = GroupFamily(Family::SO_odd, 1);
        p.summands = {{"a", Rational(0), 1, 2}};
        ParameterRep rep = parameter_to_representation(p, ws.lifts, ws.reg);
        CHECK(std::holds_alternative<TemperedDatum>(rep.rep));
        CHECK(rep.generic);
    }
    SUBCASE("a shifted pair becomes the standard segment of equrp5") {
        WeilParameter p;
        p.group = GroupFamily(Family::SO_odd, 2);
        p.summands = {{"u", Rational(1, 2), 2, 1}, {"u^", Rational(-1, 2), 2, 1}};
        ParameterRep rep = parameter_to_representation(p, ws.lifts, ws.reg);
        REQUIRE(std::holds_alternative<LanglandsDatum>(rep.rep));
        const LanglandsDatum& d = std::get<LanglandsDatum>(rep.rep);
        REQUIRE(d.std_segs.size() == 1);
        // shift 1/2 with w = 1 solves q = w/2 - shift = 0: Sigma = [u, nu u]
        CHECK(d.std_segs[0] == seg("u", "0", 1));
        CHECK(rep.generic);
    }
    SUBCASE("classification and the representation flag agree") {
        Rng rng(99);
        for (int t = 0; t < 60; ++t) {
            WeilParameter p = random_parameter(ws, rng);
            ParamClass cls = classify_parameter(p, ws.lifts, ws.reg);
            ParameterRep rep = parameter_to_representation(p, ws.lifts, ws.reg);
            CHECK((cls != ParamClass::General) == rep.generic);
        }
    }
}
