#include "genera/selftest.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <sstream>

namespace genera {

namespace {

void add_atom(Workspace& ws, const std::string& id, int rank, const std::string& dual,
              PoleType pole, const std::string& omega, const std::string& det = "1") {
    CuspidalAtom a;
    a.id = id;
    a.gl_rank = rank;
    a.dual_id = dual;
    a.pole_type = pole;
    a.omega = CharacterSymbol::parse(omega);
    a.det_class = CharacterSymbol::parse(det);
    ws.reg.atoms[id] = a;
}

void add_base(Workspace& ws, const std::string& id, Family f, int rank, bool c_fixed = true,
              const Rational& eps = Rational(0)) {
    BaseRep b;
    b.id = id;
    b.group = GroupFamily(f, rank);
    b.omega = CharacterSymbol::generator("w[" + id + "]");
    b.c_fixed = has_c_action(f) ? c_fixed : true;
    b.generic = true;
    b.exponent = eps;
    ws.reg.bases[id] = b;
}

} // namespace

Workspace standard_fixture() {
    Workspace ws;
    // self-dual rank-1 atoms of both pole types, a second R atom, a dual pair,
    // rank-2 atoms, the c-swapped pair, and the eta_eps-determinant atom
    add_atom(ws, "a", 1, "a", PoleType::R, "w[a]");
    add_atom(ws, "g", 1, "g", PoleType::R, "w[g]");
    add_atom(ws, "b", 1, "b", PoleType::Rminus, "w[b]");
    add_atom(ws, "u", 1, "u^", PoleType::None, "w[u]");
    add_atom(ws, "u^", 1, "u", PoleType::None, "w[u]^-1");
    add_atom(ws, "e2", 2, "e2", PoleType::R, "w[e2]");
    add_atom(ws, "f2", 2, "f2", PoleType::Rminus, "w[f2]");
    add_atom(ws, "cA", 2, "cA", PoleType::R, "w[cA]");
    add_atom(ws, "cB", 2, "cB", PoleType::R, "w[cB]");
    add_atom(ws, "qe", 2, "qe", PoleType::R, "w[qe]", "eta_eps");
    for (const char* gen : {"w[a]", "w[g]", "w[b]", "w[e2]", "w[f2]", "w[cA]", "w[cB]",
                            "w[qe]", "eta_eps"})
        ws.reg.relations.order[gen] = 2;
    ws.reg.c_pairs["cA"] = "cB";
    ws.reg.c_pairs["cB"] = "cA";

    // one base per family for the mu* and classification suites
    add_base(ws, "s_so_odd", Family::SO_odd, 0);
    add_base(ws, "s_sp", Family::Sp, 0);
    add_base(ws, "s_sos", Family::SO_even_split, 0, false);
    add_base(ws, "s_soq", Family::SO_even_qs, 0, false);
    add_base(ws, "s_uo", Family::U_odd, 0);
    add_base(ws, "s_ue", Family::U_even, 0);
    add_base(ws, "s_gsp", Family::GSp, 1);
    add_base(ws, "s_gsos", Family::GSO_even_split, 0, false);
    add_base(ws, "s_gsoq", Family::GSO_even_qs, 0, false);
    add_base(ws, "s_guo", Family::GU_odd, 0);
    add_base(ws, "s_gue", Family::GU_even, 1);
    add_base(ws, "s_gspin_odd", Family::GSpin_odd, 1);
    add_base(ws, "s_gspins", Family::GSpin_even_split, 0, false);
    add_base(ws, "s_gspinq", Family::GSpin_even_qs, 0, false);
    // beta-shifted general spin bases
    add_base(ws, "s_beta_half", Family::GSpin_odd, 1, true, Rational(1, 2));
    add_base(ws, "s_beta_one", Family::GSpin_even_qs, 0, false, Rational(1));

    // table entries for the classification bases
    for (const auto& [id, base] : ws.reg.bases) {
        Family f = base.group.family;
        bool dcn = has_c_action(f) && !base.c_fixed;
        ws.table.set("a", id, dcn ? ReducKind::CN : ReducKind::C1);
        ws.table.set("g", id, ReducKind::C0);
        ws.table.set("b", id, ReducKind::C_half);
        ws.table.set("e2", id, ReducKind::C1);
        ws.table.set("f2", id, ReducKind::C_half);
        ws.table.set("u", id, ReducKind::Irr);
        ws.table.set("u^", id, ReducKind::Irr);
        ws.table.set("cA", id, ReducKind::C0);
        ws.table.set("cB", id, ReducKind::C0);
        ws.table.set("qe", id, ReducKind::C0);
    }

    // lifting bases with declared descents l(sigma^{(0)})
    struct LiftSpec {
        const char* id;
        Family family;
        int rank;
        std::vector<std::string> atoms;
        bool c_fixed;
    };
    const std::vector<LiftSpec> lift_specs = {
        {"L_so0", Family::SO_odd, 0, {}, true},
        {"L_so1", Family::SO_odd, 1, {"e2"}, true},
        {"L_so2", Family::SO_odd, 2, {"e2", "cA"}, true},
        {"L_sp0", Family::Sp, 0, {"a"}, true},
        {"L_sp1", Family::Sp, 1, {"a", "e2"}, true},
        {"L_sos0", Family::SO_even_split, 0, {}, false},
        {"L_sos2", Family::SO_even_split, 2, {"e2", "cA"}, false},
        {"L_soq0", Family::SO_even_qs, 0, {"qe"}, false},
        {"L_uo0", Family::U_odd, 0, {"a"}, true},
        {"L_ue0", Family::U_even, 0, {}, true},
        {"L_ue1", Family::U_even, 1, {"e2"}, true},
    };
    for (const auto& spec : lift_specs) {
        add_base(ws, spec.id, spec.family, spec.rank, spec.c_fixed);
        ws.lifts.set(spec.id, spec.atoms);
        ws.table = [&] {
            ReducibilityTable t = ws.table;
            for (const char* atom : {"a", "g", "b", "u", "u^", "e2", "f2", "cA", "cB", "qe"}) {
                ReducibilityTable synth =
                    synthesize_table({atom}, spec.id, ws.lifts, ws.reg);
                t.set(atom, spec.id, *synth.lookup(atom, spec.id));
            }
            return t;
        }();
    }
    ws.validate();
    return ws;
}

// ---- random data ------------------------------------------------------------------

namespace {

std::vector<std::string> lifting_base_pool() {
    return {"L_so0", "L_so1", "L_so2", "L_sp0", "L_sp1", "L_sos0",
            "L_sos2", "L_soq0", "L_uo0", "L_ue0", "L_ue1"};
}

std::vector<std::string> classification_base_pool() {
    return {"s_so_odd", "s_sp",      "s_sos",       "s_soq",    "s_uo",
            "s_ue",     "s_gsp",     "s_gsos",      "s_gsoq",   "s_guo",
            "s_gue",    "s_gspin_odd", "s_gspins",  "s_gspinq", "s_beta_half",
            "s_beta_one"};
}

// i-th element of the admissible a-set for a kind, shifted by beta
Rational kind_a_element(ReducKind kind, const Rational& beta, int i) {
    switch (kind) {
        case ReducKind::C1: return i == 0 ? beta - Rational(1) : beta + Rational(i);
        case ReducKind::C0:
        case ReducKind::CN:
        case ReducKind::Irr: return beta + Rational(i);
        case ReducKind::C_half: return beta - Rational(1, 2) + Rational(i);
    }
    return beta;
}

} // namespace

DiscreteSeriesDatum random_ds_datum(const Workspace& ws, Rng& rng, const DsGenOptions& opt) {
    DiscreteSeriesDatum out;
    const std::string base_id = opt.lifting_only ? rng.pick(lifting_base_pool())
                                                 : rng.pick(classification_base_pool());
    out.base = TwistedBase{base_id, CharacterSymbol::one(), 0};
    out.beta = out.base.beta(ws.reg);
    const Rational cap = Rational(opt.max_endpoint) + out.beta;

    std::vector<std::string> pool;
    for (const char* atom : {"a", "g", "b", "e2", "f2"}) {
        auto kind = ws.table.lookup(atom, base_id);
        if (kind && *kind != ReducKind::Irr) pool.push_back(atom);
    }
    const int natoms = rng.uniform(1, std::min<int>(opt.max_atoms, static_cast<int>(pool.size())));
    std::vector<std::string> chosen;
    while (static_cast<int>(chosen.size()) < natoms) {
        std::string cand = rng.pick(pool);
        if (std::find(chosen.begin(), chosen.end(), cand) == chosen.end())
            chosen.push_back(cand);
    }
    for (const std::string& atom : chosen) {
        ReducKind kind = *ws.table.lookup(atom, base_id);
        int nseg = rng.uniform(1, opt.max_segments_per_atom);
        int idx = rng.uniform(0, 1);
        Rational prev_b;
        bool have_prev = false;
        for (int s = 0; s < nseg; ++s) {
            Rational a = kind_a_element(kind, out.beta, idx);
            while (have_prev && !(prev_b < a)) a = kind_a_element(kind, out.beta, ++idx);
            Rational min_b = a + Rational(1);
            if (min_b < -a) min_b = -a; // keep the segment nonempty
            Rational bval = min_b + Rational(rng.uniform(0, 1));
            if (bval > cap) break;
            Segment seg;
            seg.atom = atom;
            seg.low = -a;
            seg.len = static_cast<int>((bval + a).num());
            out.segments.push_back(seg);
            prev_b = bval;
            have_prev = true;
            idx += rng.uniform(1, 2);
        }
    }
    std::sort(out.segments.begin(), out.segments.end());
    return out;
}

std::string flip_ds_condition(DiscreteSeriesDatum& datum, const Workspace& ws, Rng& rng) {
    if (datum.segments.empty()) throw GeneraError("Internal", "empty datum in flip");
    size_t pick = static_cast<size_t>(rng.uniform(0, static_cast<int>(datum.segments.size()) - 1));
    Segment& seg = datum.segments[pick];
    ReducKind kind = *ws.table.lookup(seg.atom, datum.base.base_id);
    const Rational beta = datum.beta;
    const Rational b = seg.high();
    Rational bad_a;
    std::string code;
    switch (kind) {
        case ReducKind::C1:
            bad_a = beta; // excluded from beta+(N u {-1})
            code = "DS1";
            break;
        case ReducKind::C0:
            bad_a = beta - Rational(1);
            code = "DS2";
            break;
        case ReducKind::C_half:
            bad_a = beta - Rational(3, 2);
            code = "DS3";
            break;
        case ReducKind::CN:
            bad_a = beta - Rational(1);
            code = "DS4";
            break;
        case ReducKind::Irr: throw GeneraError("Internal", "Irr kind in generated datum");
    }
    Rational new_b = b;
    while (new_b + bad_a < Rational(0)) new_b += Rational(1);
    seg.low = -bad_a;
    seg.len = static_cast<int>((new_b + bad_a).num());
    std::sort(datum.segments.begin(), datum.segments.end());
    return code;
}

TemperedDatum random_tempered_datum(const Workspace& ws, Rng& rng, int max_tail) {
    TemperedDatum out;
    DsGenOptions opt;
    opt.lifting_only = true;
    opt.max_segments_per_atom = 2;
    out.ds = random_ds_datum(ws, rng, opt);
    const int ntail = rng.uniform(0, max_tail);
    std::vector<std::string> pool = {"a", "g", "b", "e2", "f2", "u"};
    for (int i = 0; i < ntail; ++i) {
        const std::string atom = rng.pick(pool);
        int twice_e = rng.uniform(0, 3); // e in {0, 1/2, 1, 3/2}
        Segment psi;
        psi.atom = atom;
        psi.low = -Rational(twice_e, 2);
        psi.len = twice_e;
        if (!ws.reg.atom(atom).self_dual()) {
            Segment dual = check_dual(psi, ws.reg);
            if (dual < psi) psi = dual; // canonical representative of the pair
        }
        out.balanced.push_back(psi);
        if (rng.coin()) out.balanced.push_back(psi);
    }
    std::sort(out.balanced.begin(), out.balanced.end());
    return out;
}

LanglandsDatum random_langlands_datum(const Workspace& ws, Rng& rng, bool lifting_only) {
    LanglandsDatum out;
    if (lifting_only) {
        out.temp = random_tempered_datum(ws, rng, 2);
    } else {
        DsGenOptions opt;
        opt.max_segments_per_atom = 2;
        out.temp.ds = random_ds_datum(ws, rng, opt);
        const int ntail = rng.uniform(0, 2);
        std::vector<std::string> pool = {"a", "g", "b", "e2", "u"};
        for (int i = 0; i < ntail; ++i) {
            const std::string atom = rng.pick(pool);
            int twice_e = rng.uniform(0, 2);
            Segment psi;
            psi.atom = atom;
            psi.low = out.temp.ds.beta - Rational(twice_e, 2);
            psi.len = twice_e;
            out.temp.balanced.push_back(psi);
        }
        std::sort(out.temp.balanced.begin(), out.temp.balanced.end());
    }
    const Rational beta = out.temp.ds.beta;
    const int nstd = rng.uniform(1, 3);
    std::vector<std::string> pool = {"a", "g", "b", "e2", "u", "u^"};
    for (int i = 0; i < nstd; ++i) {
        Segment sigma;
        sigma.atom = rng.pick(pool);
        int w = rng.uniform(0, 2);
        // center = beta + positive half-integer
        Rational center = beta + Rational(rng.uniform(1, 4), 2);
        sigma.len = w;
        sigma.low = center - Rational(w, 2);
        out.std_segs.push_back(sigma);
    }
    std::stable_sort(out.std_segs.begin(), out.std_segs.end(),
                     [](const Segment& a, const Segment& b) { return b.center() < a.center(); });
    return out;
}

LanglandsDatum dual_substituted(const LanglandsDatum& d, const std::vector<size_t>& indices,
                                const Workspace& ws) {
    LanglandsDatum out = d;
    const BaseRep& base = ws.reg.base(d.temp.ds.base.base_id);
    const Family f = base.group.family;
    CharacterSymbol wp = is_general_spin(f) ? base_omega(d.temp.ds.base, ws.reg)
                                            : CharacterSymbol::one();
    for (size_t idx : indices) {
        Segment& s = out.std_segs.at(idx);
        Segment subst = twist_segment(check_dual(s, ws.reg), wp);
        if (is_similitude(f) && !is_general_spin(f))
            out.temp.ds.base.twist = out.temp.ds.base.twist * segment_omega(s, ws.reg);
        if (has_c_action(f)) out.temp.ds.base.c_power += s.rank(ws.reg);
        s = subst;
    }
    out.temp.ds.base = out.temp.ds.base.normalized(ws.reg);
    return out;
}

WeilParameter random_parameter(const Workspace& ws, Rng& rng) {
    TemperedDatum t = random_tempered_datum(ws, rng, 2);
    HNRepDatum rho = lift_tempered(t, ws.lifts, ws.reg);
    WeilParameter p;
    p.group = rho.group;
    for (const Segment& s : rho.segments)
        p.summands.push_back({s.atom, Rational(0), s.len + 1, 1});
    const int npairs = rng.uniform(0, 2);
    std::vector<std::string> pool = {"a", "g", "e2", "u"};
    for (int i = 0; i < npairs; ++i) {
        const std::string atom = rng.pick(pool);
        int w = rng.uniform(0, 2);
        Rational shift = Rational(rng.uniform(1, 4), 2); // w/2 - q > 0
        p.summands.push_back({atom, shift, w + 1, 1});
        p.summands.push_back({ws.reg.dual_atom(atom), -shift, w + 1, 1});
        p.group.rank += (w + 1) * ws.reg.atom(atom).gl_rank;
    }
    p.normalize();
    return p;
}

// ---- suites -----------------------------------------------------------------------

namespace {

struct Suite {
    std::ostream& out;
    int failures = 0;

    void report(const std::string& name, bool ok, const std::string& detail) {
        out << (ok ? "[ok]   " : "[FAIL] ") << name;
        if (!detail.empty()) out << " (" << detail << ")";
        out << "\n";
        if (!ok) ++failures;
    }
};

// triple tensor for the coassociativity test
using Triple = std::tuple<Multisegment, Multisegment, Multisegment>;

std::map<Triple, std::int64_t> expand_left(const RTensor& t) {
    std::map<Triple, std::int64_t> out;
    for (const auto& [k, c] : t.terms) {
        RTensor inner = m_star(RElement::basis(k.first));
        for (const auto& [ik, ic] : inner.terms)
            out[{ik.first, ik.second, k.second}] += ic * c;
    }
    return out;
}

std::map<Triple, std::int64_t> expand_right(const RTensor& t) {
    std::map<Triple, std::int64_t> out;
    for (const auto& [k, c] : t.terms) {
        RTensor inner = m_star(RElement::basis(k.second));
        for (const auto& [ik, ic] : inner.terms)
            out[{k.first, ik.first, ik.second}] += ic * c;
    }
    return out;
}

bool coassociative(const RElement& x) {
    RTensor t = m_star(x);
    return expand_left(t) == expand_right(t);
}

bool counit_ok(const RElement& x) {
    RTensor t = m_star(x);
    RElement left, right;
    for (const auto& [k, c] : t.terms) {
        if (k.first.empty()) right.add(k.second, c);
        if (k.second.empty()) left.add(k.first, c);
    }
    return left == x && right == x;
}

} // namespace

// Every minimal word of every tadic_bound term passes the strict Casselman
// test iff every segment's descending word does: a shuffle prefix is a sum of
// per-list prefixes, and per-list prefixes are themselves reachable prefixes.
bool tadic_strictly_positive(const DiscreteSeriesDatum& d, const Registry& reg) {
    GRepElement bound = tadic_bound(d, reg);
    std::set<Segment> seen;
    for (const auto& [k, c] : bound.terms)
        for (const Segment& s : k.first.segs) seen.insert(s);
    for (const Segment& s : seen) {
        Rational partial(0);
        const Rational rank(reg.atom(s.atom).gl_rank);
        for (int i = s.len; i >= 0; --i) {
            partial += ((s.low + Rational(i)) - d.beta) * rank;
            if (!(partial > Rational(0))) return false;
        }
    }
    return true;
}

namespace {

std::vector<Segment> grid_segments(const std::vector<std::string>& atoms, int max_len,
                                   const Rational& lo, const Rational& hi) {
    std::vector<Segment> out;
    for (const std::string& atom : atoms) {
        for (Rational low = lo; low <= hi; low += Rational(1, 2)) {
            for (int len = 0; len <= max_len; ++len) {
                Segment s;
                s.atom = atom;
                s.low = low;
                s.len = len;
                out.push_back(s);
            }
        }
    }
    return out;
}

} // namespace

int run_selftest(std::uint64_t seed, bool quick, std::ostream& out) {
    Workspace ws = standard_fixture();
    const Registry& reg = ws.reg;
    Suite suite{out};
    out << "genera selftest, seed " << seed << "\n";

    // 1. Hopf laws for m*
    {
        int checked = 0;
        bool ok = true;
        auto segs = grid_segments({"a", "u"}, quick ? 2 : 3, Rational(-2), Rational(2));
        for (const Segment& s : segs) {
            RElement x = RElement::basis(s);
            ok = ok && coassociative(x) && counit_ok(x);
            ++checked;
        }
        for (size_t i = 0; i < segs.size() && ok; i += 7)
            for (size_t j = i; j < segs.size(); j += 11) {
                Multisegment m;
                m.add(segs[i]);
                m.add(segs[j]);
                RElement x = RElement::basis(m);
                ok = ok && coassociative(x) && counit_ok(x);
                ++checked;
            }
        suite.report("hopf-laws", ok, std::to_string(checked) + " elements");
    }

    // 2. induction in stages across all families
    {
        Rng rng(seed + 1);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 40 : 160;
        std::vector<std::string> atoms = {"a", "u", "b"};
        for (int t = 0; t < trials && ok; ++t) {
            const std::string base_id = rng.pick(classification_base_pool());
            const BaseRep& base = reg.base(base_id);
            BaseState pi = BaseState::make_bottom(TwistedBase{base_id, CharacterSymbol::one(), 0});
            auto rand_seg = [&]() {
                Segment s;
                s.atom = rng.pick(atoms);
                s.low = Rational(rng.uniform(-4, 2), 2);
                s.len = rng.uniform(0, 2);
                return s;
            };
            Segment s1 = rand_seg(), s2 = rand_seg();
            Multisegment both;
            both.add(s1);
            both.add(s2);
            GRepElement lhs = mu_star(RElement::basis(both), pi, base.group.family, reg);
            GRepElement inner = mu_star(RElement::basis(s2), pi, base.group.family, reg);
            GRepElement rhs = tilde_rtimes(base.group.family, n_star(RElement::basis(s1), reg),
                                           inner, reg);
            ok = lhs == rhs;
            ++checked;
        }
        suite.report("induction-in-stages", ok, std::to_string(checked) + " cases");
    }

    // 3. w0 self-duality of the ledger
    {
        Rng rng(seed + 2);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 30 : 100;
        for (int t = 0; t < trials && ok; ++t) {
            const std::string base_id = rng.pick(classification_base_pool());
            const BaseRep& base = reg.base(base_id);
            const Family f = base.group.family;
            TwistedBase tb{base_id, CharacterSymbol::one(), 0};
            Segment s;
            s.atom = rng.pick(std::vector<std::string>{"a", "u", "e2"});
            s.low = Rational(rng.uniform(-3, 1), 2);
            s.len = rng.uniform(0, 2);
            BaseState pi = BaseState::make_bottom(tb);
            GRepElement left =
                w0_canonicalize(f, mu_star(RElement::basis(s), pi, f, reg), reg);
            // substituted input
            CharacterSymbol wp =
                is_general_spin(f) ? base_omega(tb, reg) : CharacterSymbol::one();
            Segment subst = twist_segment(check_dual(s, reg), wp);
            TwistedBase tb2 = tb;
            if (is_similitude(f) && !is_general_spin(f))
                tb2.twist = tb2.twist * segment_omega(s, reg);
            if (has_c_action(f)) tb2.c_power += s.rank(reg);
            GRepElement right = w0_canonicalize(
                f, mu_star(RElement::basis(subst), BaseState::make_bottom(tb2), f, reg), reg);
            ok = left == right;
            ++checked;
        }
        suite.report("w0-self-duality", ok, std::to_string(checked) + " cases");
    }

    // 4. discrete-series soundness: tadic words pass strict Casselman
    {
        Rng rng(seed + 3);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 60 : 200;
        for (int t = 0; t < trials && ok; ++t) {
            DsGenOptions opt;
            DiscreteSeriesDatum d = random_ds_datum(ws, rng, opt);
            if (d.segments.empty()) continue;
            if (!check_ds(d, ws.table, reg).ok()) {
                ok = false;
                break;
            }
            if (!tadic_strictly_positive(d, reg)) ok = false;
            std::string code = flip_ds_condition(d, ws, rng);
            if (!check_ds(d, ws.table, reg).has(code)) ok = false;
            ++checked;
        }
        suite.report("ds-soundness", ok, std::to_string(checked) + " data");
    }

    // 5. cascade invariance
    {
        Rng rng(seed + 4);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 60 : 200;
        for (int t = 0; t < trials && ok; ++t) {
            LanglandsDatum d = random_langlands_datum(ws, rng, false);
            Decision base_decision;
            try {
                base_decision = irreducible_standard(d, ws.table, reg);
            } catch (const GeneraError&) {
                continue;
            }
            std::vector<size_t> idxs;
            for (size_t i = 0; i < d.std_segs.size(); ++i)
                if (rng.coin()) idxs.push_back(i);
            LanglandsDatum sub = dual_substituted(d, idxs, ws);
            Decision sub_decision = irreducible_standard(sub, ws.table, reg);
            if (sub_decision.irreducible != base_decision.irreducible) ok = false;
            // equal-center permutation: reverse a maximal equal-center run
            LanglandsDatum perm = d;
            std::stable_sort(perm.std_segs.begin(), perm.std_segs.end(),
                             [](const Segment& x, const Segment& y) {
                                 if (!(x.center() == y.center())) return y.center() < x.center();
                                 return y < x;
                             });
            Decision perm_decision = irreducible_standard(perm, ws.table, reg);
            if (perm_decision.irreducible != base_decision.irreducible) ok = false;
            ++checked;
        }
        suite.report("cascade-invariance", ok, std::to_string(checked) + " data");
    }

    // 6. lift/descent round trips
    {
        Rng rng(seed + 5);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 50 : 150;
        for (int t = 0; t < trials && ok; ++t) {
            DsGenOptions opt;
            opt.lifting_only = true;
            DiscreteSeriesDatum d = random_ds_datum(ws, rng, opt);
            HNRepDatum rho = lift_ds(d, ws.lifts, reg);
            if (!validate_hn(rho, reg).ok()) {
                ok = false;
                break;
            }
            DiscreteSeriesDatum back = descend_ds(rho, ws.lifts, reg);
            if (!(back.segments == d.segments && back.base == d.base)) ok = false;
            if (!check_ds(back, ws.table, reg).ok()) ok = false;

            TemperedDatum td = random_tempered_datum(ws, rng, 2);
            HNRepDatum rho_t = lift_tempered(td, ws.lifts, reg);
            TemperedDatum back_t = descend_tempered(rho_t, ws.lifts, reg);
            if (!(back_t.balanced == td.balanced && back_t.ds.segments == td.ds.segments &&
                  back_t.ds.base == td.ds.base))
                ok = false;
            ++checked;
        }
        suite.report("lift-descent-roundtrip", ok, std::to_string(checked) + " data");
    }

    // 7. gamma identities
    {
        Rng rng(seed + 6);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 50 : 150;
        for (int t = 0; t < trials && ok; ++t) {
            TemperedDatum td = random_tempered_datum(ws, rng, 2);
            HNRepDatum rho = lift_tempered(td, ws.lifts, reg);
            TemperedDatum sd = descend_tempered(rho, ws.lifts, reg);
            GammaBag left = gamma_bag(GDatum(sd), ws.lifts, reg);
            GammaBag right = gamma_bag(rho, reg);
            if (!check_gamma_identity(left, right)) ok = false;
            if (!rho.segments.empty()) {
                HNRepDatum mut = rho;
                size_t pick =
                    static_cast<size_t>(rng.uniform(0, static_cast<int>(mut.segments.size()) - 1));
                mut.segments[pick].low -= Rational(1);
                mut.segments[pick].len += 2;
                if (check_gamma_identity(left, gamma_bag(mut, reg))) ok = false;
            }
            ++checked;
        }
        suite.report("gamma-identity", ok, std::to_string(checked) + " data");
    }

    // 8. parameter pipeline
    {
        Rng rng(seed + 7);
        bool ok = true;
        int checked = 0;
        const int trials = quick ? 50 : 150;
        for (int t = 0; t < trials && ok; ++t) {
            WeilParameter p = random_parameter(ws, rng);
            validate_parameter(p, reg);
            ParamClass cls = classify_parameter(p, ws.lifts, reg);
            ParameterRep rep = parameter_to_representation(p, ws.lifts, reg);
            const bool classified_generic = cls != ParamClass::General;
            if (classified_generic != rep.generic) ok = false;
            WeilParameter round = reassemble(decompose(p, reg), reg);
            if (!(round.summands == p.summands)) ok = false;
            WeilParameter canon = c_canonicalize(p, reg);
            WeilParameter canon2 = c_canonicalize(canon, reg);
            if (!(canon.summands == canon2.summands)) ok = false;
            WeilParameter conj_canon = c_canonicalize(c_conjugate(p, reg), reg);
            if (p.group.family == Family::SO_even_split || p.group.family == Family::SO_even_qs)
                if (!(conj_canon.summands == canon.summands)) ok = false;
            ++checked;
        }
        suite.report("parameter-pipeline", ok, std::to_string(checked) + " parameters");
    }

    out << (suite.failures == 0 ? "selftest: all suites passed\n"
                                : "selftest: " + std::to_string(suite.failures) +
                                      " suite(s) FAILED\n");
    return suite.failures;
}

} // namespace genera
