// Acceptance suite: runs every acceptance criterion at full scale and prints
// one pass/fail line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "genera/selftest.hpp"

#ifndef GENERA_GOLDEN_DIR
#define GENERA_GOLDEN_DIR "tests/golden"
#endif

using namespace genera;

namespace {

struct Runner {
    int failures = 0;

    template <class F>
    void criterion(int number, const std::string& name, F&& body) {
        auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            detail = body();
            ok = true;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << number << ": " << name
                  << " (" << detail << ", " << ms << " ms)" << std::endl;
        if (!ok) ++failures;
    }
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

using Triple = std::tuple<Multisegment, Multisegment, Multisegment>;

std::map<Triple, std::int64_t> expand(const RTensor& t, bool left) {
    std::map<Triple, std::int64_t> out;
    for (const auto& [k, c] : t.terms) {
        RTensor inner = m_star(RElement::basis(left ? k.first : k.second));
        for (const auto& [ik, ic] : inner.terms) {
            if (left)
                out[{ik.first, ik.second, k.second}] += ic * c;
            else
                out[{k.first, ik.first, ik.second}] += ic * c;
        }
    }
    return out;
}

void check_hopf(const RElement& x) {
    RTensor t = m_star(x);
    require(expand(t, true) == expand(t, false), "coassociativity failed");
    RElement left, right;
    for (const auto& [k, c] : t.terms) {
        if (k.first.empty()) right.add(k.second, c);
        if (k.second.empty()) left.add(k.first, c);
    }
    require(left == x && right == x, "counit failed");
}

} // namespace

int main() {
    Workspace ws = standard_fixture();
    const Registry& reg = ws.reg;
    Runner r;

    // 1. Hopf laws: all single segments (len <= 5, low in {-5..5}/2) over 3
    //    atoms, and all 2-segment multisegments with len <= 3.
    r.criterion(1, "m* coassociativity and counit", [&] {
        std::vector<Segment> singles;
        for (const std::string atom : {"a", "u", "e2"})
            for (int num = -5; num <= 5; ++num)
                for (int len = 0; len <= 5; ++len)
                    singles.push_back(Segment(atom, Rational(num, 2), len));
        for (const Segment& s : singles) check_hopf(RElement::basis(s));
        std::vector<Segment> shorts;
        for (const Segment& s : singles)
            if (s.len <= 3) shorts.push_back(s);
        int pairs = 0;
        for (size_t i = 0; i < shorts.size(); ++i)
            for (size_t j = i; j < shorts.size(); ++j) {
                Multisegment m;
                m.add(shorts[i]);
                m.add(shorts[j]);
                check_hopf(RElement::basis(m));
                ++pairs;
            }
        return std::to_string(singles.size()) + " segments, " + std::to_string(pairs) + " pairs";
    });

    // 2. induction in stages for all 14 families, endpoints in {-2..2}
    r.criterion(2, "induction in stages", [&] {
        std::vector<std::string> bases = {"s_so_odd", "s_sp",    "s_sos",    "s_soq",
                                          "s_uo",     "s_ue",    "s_gsp",    "s_gsos",
                                          "s_gsoq",   "s_guo",   "s_gue",    "s_gspin_odd",
                                          "s_gspins", "s_gspinq", "s_beta_half", "s_beta_one"};
        std::vector<Segment> segs;
        for (const std::string atom : {"a", "u"})
            for (int lo = -2; lo <= 2; ++lo)
                for (int len = 0; len <= 2 && lo + len <= 2; ++len)
                    segs.push_back(Segment(atom, Rational(lo), len));
        int cases = 0;
        for (const std::string& base_id : bases) {
            Family f = reg.base(base_id).group.family;
            BaseState pi = BaseState::make_bottom(TwistedBase{base_id, CharacterSymbol::one(), 0});
            for (size_t i = 0; i < segs.size(); ++i)
                for (size_t j = 0; j < segs.size(); ++j) {
                    Multisegment both;
                    both.add(segs[i]);
                    both.add(segs[j]);
                    GRepElement lhs = mu_star(RElement::basis(both), pi, f, reg);
                    GRepElement rhs = tilde_rtimes(
                        f, n_star(RElement::basis(segs[i]), reg),
                        mu_star(RElement::basis(segs[j]), pi, f, reg), reg);
                    require(lhs == rhs, "stages mismatch over " + base_id);
                    ++cases;
                }
        }
        return std::to_string(cases) + " pairs across 14 families";
    });

    // 3. the two reference Jacquet formulas, golden-file comparison
    r.criterion(3, "reference Jacquet formulas", [&] {
        auto golden = [](const std::string& name) {
            std::ifstream f(std::string(GENERA_GOLDEN_DIR) + "/" + name);
            require(bool(f), "missing golden file " + name);
            std::ostringstream ss;
            ss << f.rdbuf();
            std::string s = ss.str();
            while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
            return s;
        };
        GRepElement g = mu_star(RElement::basis(Segment("a", Rational(0), 1)),
                                BaseState::make_bottom(TwistedBase{"s_sp", {}, 0}), Family::Sp,
                                reg);
        std::string sm = extract(g, Slice::SM, 1, reg).str(reg);
        require(sm == golden("jacquet_sm.txt"), "s_(m) golden mismatch: " + sm);
        SteinbergCore core;
        core.ladder = Segment("a", Rational(1), 0);
        core.kind = ReducKind::C1;
        GRepElement g2 =
            mu_star(RElement::basis(Segment("a", Rational(1), 0)),
                    BaseState::make_steinberg(core, TwistedBase{"s_gsp", {}, 0}), Family::GSp, reg);
        std::string sgl = extract(g2, Slice::SGL, 0, reg).str(reg);
        require(sgl == golden("jacquet_sgl.txt"), "s_GL golden mismatch: " + sgl);
        return std::string("two golden ledgers matched");
    });

    // 4. DS soundness on 500 random data
    r.criterion(4, "discrete-series soundness", [&] {
        Rng rng(20260809);
        int done = 0;
        while (done < 500) {
            DsGenOptions opt;
            DiscreteSeriesDatum d = random_ds_datum(ws, rng, opt);
            if (d.segments.empty()) continue;
            require(check_ds(d, ws.table, reg).ok(), "generated datum invalid");
            require(tadic_strictly_positive(d, reg), "a tadic word failed Casselman");
            DiscreteSeriesDatum flipped = d;
            std::string code = flip_ds_condition(flipped, ws, rng);
            require(check_ds(flipped, ws.table, reg).has(code),
                    "flip did not produce " + code);
            ++done;
        }
        return std::to_string(done) + " data over beta in {0, 1/2, 1}";
    });

    // 5. cascade invariance on 500 random Langlands data + worked (G8) cases
    r.criterion(5, "irreducibility cascade invariance", [&] {
        Rng rng(31337);
        int done = 0;
        while (done < 500) {
            LanglandsDatum d = random_langlands_datum(ws, rng, false);
            Decision base_dec;
            try {
                base_dec = irreducible_standard(d, ws.table, reg);
            } catch (const GeneraError&) {
                continue;
            }
            std::vector<size_t> idxs;
            for (size_t i = 0; i < d.std_segs.size(); ++i)
                if (rng.coin()) idxs.push_back(i);
            LanglandsDatum sub = dual_substituted(d, idxs, ws);
            require(irreducible_standard(sub, ws.table, reg).irreducible ==
                        base_dec.irreducible,
                    "dual substitution changed the decision");
            LanglandsDatum perm = d;
            std::stable_sort(perm.std_segs.begin(), perm.std_segs.end(),
                             [](const Segment& x, const Segment& y) {
                                 if (!(x.center() == y.center())) return y.center() < x.center();
                                 return y < x;
                             });
            require(irreducible_standard(perm, ws.table, reg).irreducible ==
                        base_dec.irreducible,
                    "equal-center permutation changed the decision");
            ++done;
        }
        // worked cases of the (G8) note
        LanglandsDatum w1;
        w1.temp.ds.base = TwistedBase{"s_sp", {}, 0};
        w1.std_segs = {Segment("u", Rational(1), 1)};
        require(irreducible_standard(w1, ws.table, reg).irreducible, "(G7) case");
        LanglandsDatum w2 = w1;
        w2.std_segs = {Segment("a", Rational(-1), 3)};
        require(!irreducible_standard(w2, ws.table, reg).irreducible, "(G8) failing case");
        LanglandsDatum w3 = w1;
        w3.std_segs = {Segment("a", Rational(3), 1)};
        require(irreducible_standard(w3, ws.table, reg).irreducible, "(G8) holding case");
        return std::to_string(done) + " data plus the three worked cases";
    });

    // 6. exact lift/descent round trips
    r.criterion(6, "lift/descent round trip", [&] {
        Rng rng(271828);
        int ds_done = 0, t_done = 0, g_done = 0;
        while (ds_done < 500) {
            DsGenOptions opt;
            opt.lifting_only = true;
            DiscreteSeriesDatum d = random_ds_datum(ws, rng, opt);
            HNRepDatum rho = lift_ds(d, ws.lifts, reg);
            require(validate_hn(rho, reg).ok(), "lift not in Pi^{(dg)}");
            DiscreteSeriesDatum back = descend_ds(rho, ws.lifts, reg);
            require(back.segments == d.segments && back.base == d.base, "ds round trip");
            require(check_ds(back, ws.table, reg).ok(), "descended datum invalid");
            ++ds_done;
        }
        while (t_done < 300) {
            TemperedDatum td = random_tempered_datum(ws, rng, 2);
            HNRepDatum rho = lift_tempered(td, ws.lifts, reg);
            TemperedDatum back = descend_tempered(rho, ws.lifts, reg);
            require(back.balanced == td.balanced && back.ds.segments == td.ds.segments &&
                        back.ds.base == td.ds.base,
                    "tempered round trip");
            ++t_done;
        }
        int attempts = 0;
        while (g_done < 200 && attempts < 20000) {
            ++attempts;
            LanglandsDatum d = random_langlands_datum(ws, rng, true);
            try {
                HNRepDatum rho = lift_generic(d, ws.lifts, reg);
                if (!validate_hn(rho, reg).ok()) continue;
                GenericDescent back = descend_generic(rho, ws.lifts, reg);
                require(back.datum.std_segs == d.std_segs &&
                            back.datum.temp.balanced == d.temp.balanced &&
                            back.datum.temp.ds.segments == d.temp.ds.segments,
                        "generic round trip");
                ++g_done;
            } catch (const GeneraError&) {
                continue;
            }
        }
        require(g_done >= 200, "not enough generic samples");
        return std::to_string(ds_done) + " ds, " + std::to_string(t_done) + " tempered, " +
               std::to_string(g_done) + " generic";
    });

    // 7. gamma identity with mutation sensitivity
    r.criterion(7, "gamma-factor bag identity", [&] {
        Rng rng(161803);
        int done = 0, mutated = 0;
        while (done < 300) {
            TemperedDatum td = random_tempered_datum(ws, rng, 2);
            HNRepDatum rho = lift_tempered(td, ws.lifts, reg);
            GDatum descended(descend_tempered(rho, ws.lifts, reg));
            GammaBag left = gamma_bag(descended, ws.lifts, reg);
            require(check_gamma_identity(left, gamma_bag(rho, reg)), "gamma identity");
            if (!rho.segments.empty()) {
                HNRepDatum mut = rho;
                size_t pick = static_cast<size_t>(
                    rng.uniform(0, static_cast<int>(mut.segments.size()) - 1));
                mut.segments[pick].low -= Rational(1);
                mut.segments[pick].len += 2;
                require(!check_gamma_identity(left, gamma_bag(mut, reg)),
                        "mutation not detected");
                ++mutated;
            }
            ++done;
        }
        return std::to_string(done) + " identities, " + std::to_string(mutated) + " mutations";
    });

    // 8. parameter pipeline on 500 random parameters
    r.criterion(8, "parameter pipeline", [&] {
        Rng rng(141421);
        int done = 0;
        while (done < 500) {
            WeilParameter p = random_parameter(ws, rng);
            validate_parameter(p, reg);
            ParamClass cls = classify_parameter(p, ws.lifts, reg);
            ParameterRep rep = parameter_to_representation(p, ws.lifts, reg);
            require((cls != ParamClass::General) == rep.generic, "genericity disagreement");
            require(reassemble(decompose(p, reg), reg).summands == p.summands,
                    "decompose/reassemble not the identity");
            WeilParameter canon = c_canonicalize(p, reg);
            require(c_canonicalize(canon, reg).summands == canon.summands,
                    "canonicalization not idempotent");
            require(c_canonicalize(c_conjugate(p, reg), reg).summands == canon.summands ||
                        (p.group.family != Family::SO_even_split &&
                         p.group.family != Family::SO_even_qs),
                    "canonicalization not class-constant");
            ++done;
        }
        return std::to_string(done) + " parameters";
    });

    // 9. determinism of the selftest under a fixed seed
    r.criterion(9, "selftest determinism", [&] {
        std::ostringstream first, second;
        int rc1 = run_selftest(12345, true, first);
        int rc2 = run_selftest(12345, true, second);
        require(rc1 == 0 && rc2 == 0, "selftest failed");
        require(first.str() == second.str(), "outputs differ");
        return std::string("byte-identical outputs, ") + std::to_string(first.str().size()) +
               " bytes";
    });

    std::cout << (r.failures == 0 ? "acceptance: all criteria passed"
                                  : "acceptance: " + std::to_string(r.failures) + " FAILED")
              << std::endl;
    return r.failures == 0 ? 0 : 1;
}
