#include "genera/lifting.hpp"

#include <algorithm>

namespace genera {

void BaseLiftTable::set(const std::string& base, std::vector<std::string> atoms) {
    std::sort(atoms.begin(), atoms.end());
    lifts[base] = std::move(atoms);
}

const std::vector<std::string>& BaseLiftTable::lift_of(const std::string& base) const {
    auto it = lifts.find(base);
    if (it == lifts.end())
        throw GeneraError("MissingBaseLift", "no declared lifting for base '" + base + "'");
    return it->second;
}

std::optional<std::string> BaseLiftTable::base_for(const std::vector<std::string>& atoms,
                                                   Family family, const Registry& reg) const {
    std::vector<std::string> key = atoms;
    std::sort(key.begin(), key.end());
    for (const auto& [base, lift] : lifts)
        if (lift == key && reg.base(base).group.family == family) return base;
    return std::nullopt;
}

const char* hn_level_name(HNRepDatum::Level l) {
    switch (l) {
        case HNRepDatum::Level::Discrete: return "ds";
        case HNRepDatum::Level::Tempered: return "tempered";
        case HNRepDatum::Level::Generic: return "generic";
    }
    return "?";
}

HNRepDatum::Level hn_level_from_name(const std::string& s) {
    if (s == "ds" || s == "discrete") return HNRepDatum::Level::Discrete;
    if (s == "tempered") return HNRepDatum::Level::Tempered;
    if (s == "generic") return HNRepDatum::Level::Generic;
    throw GeneraError("UnknownLevel", "'" + s + "'");
}

std::string HNRepDatum::str(const Registry& reg) const {
    (void)reg;
    std::string out;
    for (const Segment& s : std_segs) out += s.str() + " x ";
    for (const Segment& s : segments) out += s.str() + " x ";
    for (auto it = std_segs.rbegin(); it != std_segs.rend(); ++it) out += "dual:" + it->str() + " x ";
    if (!out.empty()) out.erase(out.size() - 3);
    return out.empty() ? "1" : out;
}

CharacterSymbol HNRepDatum::central_class(const Registry& reg) const {
    CharacterSymbol w;
    for (const Segment& s : segments) w = w * segment_omega(s, reg);
    for (const Segment& s : std_segs)
        w = w * segment_omega(s, reg) * segment_omega(check_dual(s, reg), reg);
    return w;
}

namespace {

int lift_rank(const HNRepDatum& rho, const Registry& reg) {
    int r = 0;
    for (const Segment& s : rho.segments) r += s.rank(reg);
    for (const Segment& s : rho.std_segs) r += 2 * s.rank(reg);
    return r;
}

bool is_parity_matched(const CuspidalAtom& atom, const Segment& s) {
    // S-set parity: (R pole, m integral) or (R- pole, m in 1/2+Z)
    const Rational m = s.high();
    if (atom.pole_type == PoleType::R) return m.is_integer();
    if (atom.pole_type == PoleType::Rminus) return !m.is_integer() && m.is_half_integer();
    return false;
}

} // namespace

ValidationReport validate_hn(const HNRepDatum& rho, const Registry& reg) {
    ValidationReport rep;
    if (!is_liftable_classical(rho.group.family)) {
        rep.add("UnsupportedFamily", std::string(family_name(rho.group.family)) +
                                         " is not a lifting target family");
        return rep;
    }
    if (lift_rank(rho, reg) != lift_target_rank(rho.group.family, rho.group.rank))
        rep.add("RANK", "total H-rank differs from N(G_n)");
    for (const Segment& s : rho.segments) {
        if (!s.balanced()) rep.add("BALANCE", "factor not centered at 0: " + s.str());
        if (!s.twist.mono.empty()) rep.add("TWIST", "twisted factor: " + s.str());
    }
    std::map<Segment, int> mult;
    for (const Segment& s : rho.segments) mult[s] += 1;

    if (rho.level == HNRepDatum::Level::Discrete) {
        if (!rho.std_segs.empty()) rep.add("LEVEL", "discrete datum carries a standard part");
        for (const auto& [s, m] : mult) {
            const CuspidalAtom& atom = reg.atom(s.atom);
            if (m != 1) rep.add("DISTINCT", "repeated factor: " + s.str());
            if (!atom.self_dual()) rep.add("SELFDUAL", "non-self-dual factor: " + s.str());
            // conditions (1)(2): parity of m against the pole type
            if (atom.self_dual() && !is_parity_matched(atom, s))
                rep.add("PARITY", "pole parity mismatch: " + s.str());
        }
        return rep;
    }

    // tempered conditions (1)-(3)
    for (const auto& [s, m] : mult) {
        const CuspidalAtom& atom = reg.atom(s.atom);
        if (!atom.self_dual()) {
            Segment dual = check_dual(s, reg);
            int dual_mult = mult.count(dual) ? mult.at(dual) : 0;
            if (dual_mult != m)
                rep.add("N-PAIR", "dual multiplicities differ for " + s.str());
        } else if (!is_parity_matched(atom, s)) {
            if (m % 2 != 0)
                rep.add("W-PARITY", "parity-mismatched factor needs even multiplicity: " + s.str());
        }
    }
    if (rho.level == HNRepDatum::Level::Tempered && !rho.std_segs.empty())
        rep.add("LEVEL", "tempered datum carries a standard part");

    if (rho.level == HNRepDatum::Level::Generic) {
        for (size_t i = 0; i < rho.std_segs.size(); ++i) {
            const Segment& s = rho.std_segs[i];
            if (!(s.center() > Rational(0)))
                rep.add("ORDER", "standard segment center must be positive: " + s.str());
            if (i + 1 < rho.std_segs.size() &&
                rho.std_segs[i].center() < rho.std_segs[i + 1].center())
                rep.add("ORDER", "standard segments out of order");
            for (size_t j = 0; j < rho.std_segs.size(); ++j) {
                if (i == j) continue;
                if (linked(s, rho.std_segs[j]) ||
                    linked(s, check_dual(rho.std_segs[j], reg)))
                    rep.add("LINKED", "standard segments linked: " + s.str());
            }
            for (const Segment& t : rho.segments) {
                if (linked(s, t) || linked(check_dual(s, reg), t))
                    rep.add("LINKED", "standard segment linked to tempered factor: " + s.str());
            }
        }
    }
    return rep;
}

std::map<std::string, std::vector<Rational>> pole_profile(const HNRepDatum& rho,
                                                          const Registry& reg) {
    std::map<std::string, std::vector<Rational>> out;
    for (const Segment& s : rho.segments) {
        if (!reg.atom(s.atom).self_dual()) continue;
        if (!s.balanced()) continue;
        out[s.atom].push_back(s.high());
    }
    for (auto& [atom, ms] : out) std::sort(ms.begin(), ms.end());
    return out;
}

DiscreteSeriesDatum descend_ds(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg) {
    ValidationReport rep = validate_hn(rho, reg);
    if (!rep.ok()) throw GeneraError("InvalidProfile", rep.str());

    auto profile = pole_profile(rho, reg);
    std::vector<std::string> base_atoms;
    DiscreteSeriesDatum out;
    out.beta = Rational(0);

    for (const auto& [atom_id, ms] : profile) {
        const CuspidalAtom& atom = reg.atom(atom_id);
        const int d = static_cast<int>(ms.size());
        const bool type_r = atom.pole_type == PoleType::R;
        auto seg = [&](const Rational& lo, const Rational& hi) {
            Segment s;
            s.atom = atom_id;
            s.low = lo;
            s.len = static_cast<int>((hi - lo).num());
            return s;
        };
        if (type_r && d % 2 == 1) {
            // A-cases: atom joins the base support
            base_atoms.push_back(atom_id);
            if (ms[0] > Rational(0)) {
                // A2: Delta_0 = [nu, nu^{m_1}]
                out.segments.push_back(seg(Rational(1), ms[0]));
            }
            // Delta_i = [-m_{2i}, m_{2i+1}] (pairs after the first entry)
            for (int i = 1; i + 1 < d; i += 2) out.segments.push_back(seg(-ms[i], ms[i + 1]));
        } else if (type_r) {
            for (int i = 0; i + 1 < d; i += 2) out.segments.push_back(seg(-ms[i], ms[i + 1]));
        } else {
            // C-cases
            if (d % 2 == 1) {
                out.segments.push_back(seg(Rational(1, 2), ms[0]));
                for (int i = 1; i + 1 < d; i += 2) out.segments.push_back(seg(-ms[i], ms[i + 1]));
            } else {
                for (int i = 0; i + 1 < d; i += 2) out.segments.push_back(seg(-ms[i], ms[i + 1]));
            }
        }
    }

    auto base_id = lifts.base_for(base_atoms, rho.group.family, reg);
    if (!base_id) {
        std::string key;
        for (const auto& a : base_atoms) key += (key.empty() ? "" : ",") + a;
        throw GeneraError("MissingBaseLift", "no declared base with lifting {" + key + "}");
    }
    out.base = TwistedBase{*base_id, CharacterSymbol::one(), 0};
    std::sort(out.segments.begin(), out.segments.end());
    return out;
}

HNRepDatum lift_ds(const DiscreteSeriesDatum& datum, const BaseLiftTable& lifts,
                   const Registry& reg) {
    const BaseRep& base = reg.base(datum.base.base_id);
    if (!is_liftable_classical(base.group.family))
        throw GeneraError("UnsupportedFamily",
                          "lifting is defined for the six quasi-split classical families");
    std::vector<std::string> remaining = lifts.lift_of(datum.base.base_id);
    HNRepDatum out;
    out.level = HNRepDatum::Level::Discrete;
    auto ball = [&](const Segment& d, const Rational& m) {
        Segment s;
        s.atom = d.atom;
        s.low = -m;
        s.len = static_cast<int>((m * Rational(2)).num());
        return s;
    };
    for (const Segment& d : datum.segments) {
        const Rational a = -d.low;
        const Rational b = d.high();
        if (a == Rational(-1)) {
            auto it = std::find(remaining.begin(), remaining.end(), d.atom);
            if (it == remaining.end())
                throw GeneraError("BaseLiftMismatch",
                                  "segment " + d.str() + " needs " + d.atom +
                                      " in the base lifting");
            remaining.erase(it);
            out.segments.push_back(ball(d, b));
        } else if (a == Rational(-1, 2)) {
            out.segments.push_back(ball(d, b));
        } else if (a.is_zero()) {
            out.segments.push_back(ball(d, Rational(0)));
            out.segments.push_back(ball(d, b));
        } else if (a > Rational(0)) {
            out.segments.push_back(ball(d, a));
            out.segments.push_back(ball(d, b));
        } else {
            throw GeneraError("InvalidDatum", "segment outside the (DS) range: " + d.str());
        }
    }
    for (const std::string& atom : remaining) {
        Segment s;
        s.atom = atom;
        s.low = Rational(0);
        s.len = 0;
        out.segments.push_back(s);
    }
    std::sort(out.segments.begin(), out.segments.end());
    // the lift target: G_n with n = base rank + sum of segment group ranks
    int n = base.group.rank;
    for (const Segment& d : datum.segments) n += d.rank(reg);
    out.group = GroupFamily(base.group.family, n);
    return out;
}

TemperedDatum descend_tempered(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg) {
    ValidationReport rep = validate_hn(rho, reg);
    if (!rep.ok()) throw GeneraError("ParityViolation", rep.str());

    std::map<Segment, int> mult;
    for (const Segment& s : rho.segments) mult[s] += 1;

    TemperedDatum out;
    HNRepDatum core;
    core.level = HNRepDatum::Level::Discrete;
    core.group = rho.group; // rank fixed after descent

    std::map<Segment, bool> consumed;
    for (const auto& [s, m] : mult) {
        if (consumed[s]) continue;
        const CuspidalAtom& atom = reg.atom(s.atom);
        if (!atom.self_dual()) {
            // N: keep one representative of the dual pair with full multiplicity
            Segment dual = check_dual(s, reg);
            consumed[dual] = true;
            const Segment& repseg = s < dual ? s : dual;
            for (int i = 0; i < m; ++i) out.balanced.push_back(repseg);
        } else if (!is_parity_matched(atom, s)) {
            // W: halved multiplicity
            for (int i = 0; i < m / 2; ++i) out.balanced.push_back(s);
        } else if (m % 2 == 1) {
            // S1: one copy to the discrete core, the rest halved to the tail
            core.segments.push_back(s);
            for (int i = 0; i < m / 2; ++i) out.balanced.push_back(s);
        } else {
            // S2: halved
            for (int i = 0; i < m / 2; ++i) out.balanced.push_back(s);
        }
        consumed[s] = true;
    }
    int core_rank = 0;
    for (const Segment& s : core.segments) core_rank += s.rank(reg);
    // solve N(core group) = core_rank for the core's rank
    int n = core_rank;
    switch (rho.group.family) {
        case Family::Sp:
        case Family::U_odd: n = (core_rank - 1) / 2; break;
        case Family::SO_even_qs: n = (core_rank - 2) / 2; break;
        default: n = core_rank / 2; break;
    }
    core.group = GroupFamily(rho.group.family, std::max(n, 0));
    out.ds = descend_ds(core, lifts, reg);
    std::sort(out.balanced.begin(), out.balanced.end());
    return out;
}

HNRepDatum lift_tempered(const TemperedDatum& datum, const BaseLiftTable& lifts,
                         const Registry& reg) {
    HNRepDatum out = lift_ds(datum.ds, lifts, reg);
    out.level = HNRepDatum::Level::Tempered;
    int extra = 0;
    for (const Segment& psi : datum.balanced) {
        if (!psi.center().is_zero())
            throw GeneraError("UnsupportedFamily",
                              "tempered tails with beta != 0 have no lifting model");
        out.segments.push_back(psi);
        out.segments.push_back(check_dual(psi, reg));
        extra += psi.rank(reg);
    }
    std::sort(out.segments.begin(), out.segments.end());
    out.group.rank += extra;
    return out;
}

namespace {

// Reducibility kind of (atom, descended base) from the declared oracle.
ReducKind oracle_kind(const std::string& atom_id, const std::string& base_id,
                      const BaseLiftTable& lifts, const Registry& reg) {
    const CuspidalAtom& atom = reg.atom(atom_id);
    const BaseRep& base = reg.base(base_id);
    const auto& support = lifts.lift_of(base_id);
    if (atom.self_dual() &&
        std::find(support.begin(), support.end(), atom_id) != support.end())
        return ReducKind::C1;
    if (atom.pole_type == PoleType::Rminus) return ReducKind::C_half;
    if (atom.pole_type == PoleType::R) {
        bool cn = has_c_action(base.group.family) && !base.c_fixed && atom.gl_rank % 2 == 1;
        return cn ? ReducKind::CN : ReducKind::C0;
    }
    return ReducKind::Irr;
}

} // namespace

ReducibilityTable synthesize_table(const std::vector<std::string>& atoms,
                                   const std::string& base_id, const BaseLiftTable& lifts,
                                   const Registry& reg) {
    ReducibilityTable t;
    for (const auto& a : atoms) t.set(a, base_id, oracle_kind(a, base_id, lifts, reg));
    return t;
}

GenericDescent descend_generic(const HNRepDatum& rho, const BaseLiftTable& lifts,
                               const Registry& reg) {
    ValidationReport rep = validate_hn(rho, reg);
    if (!rep.ok()) throw GeneraError("GenericSequenceViolation", rep.str());

    HNRepDatum kernel = rho;
    kernel.level = HNRepDatum::Level::Tempered;
    kernel.std_segs.clear();
    {
        int kr = lift_rank(kernel, reg);
        int n = kr;
        switch (rho.group.family) {
            case Family::Sp:
            case Family::U_odd: n = (kr - 1) / 2; break;
            case Family::SO_even_qs: n = (kr - 2) / 2; break;
            default: n = kr / 2; break;
        }
        kernel.group = GroupFamily(rho.group.family, std::max(n, 0));
    }

    GenericDescent out;
    out.datum.temp = descend_tempered(kernel, lifts, reg);
    out.datum.std_segs = rho.std_segs;

    const std::string base_id = out.datum.temp.ds.base.base_id;
    for (const Segment& sigma : rho.std_segs) {
        const CuspidalAtom& xi = reg.atom(sigma.atom);
        const Rational q = -sigma.low;
        const int w = sigma.len;
        if (!xi.self_dual()) {
            out.clauses.push_back("3a");
            continue;
        }
        ReducKind kind = oracle_kind(sigma.atom, base_id, lifts, reg);
        if (kind == ReducKind::C1 && q == Rational(-1)) {
            bool dominated = false;
            for (const Segment& delta : out.datum.temp.ds.segments)
                if (delta.atom == sigma.atom && delta.low == Rational(1) &&
                    delta.high() >= Rational(1 + w))
                    dominated = true;
            if (dominated) {
                out.clauses.push_back("3b");
                continue;
            }
            throw GeneraError("GenericSequenceViolation",
                              "clause (3b) fails: no dominating segment for " + sigma.str());
        }
        // clause (3c): the reducibility point avoids the exponent ladder
        Rational set_lo = -q;
        bool ok;
        if (auto alpha = reduc_alpha(kind)) {
            auto member = [&](const Rational& x) {
                Rational dd = x - set_lo;
                return dd.is_integer() && dd >= Rational(0) && dd <= Rational(w);
            };
            ok = !member(*alpha) && !member(-*alpha);
        } else if (kind == ReducKind::CN) {
            ok = !(q.is_integer() && q >= Rational(0));
        } else {
            Rational dd = Rational(0) - set_lo;
            ok = !(dd.is_integer() && dd >= Rational(0) && dd <= Rational(w));
        }
        if (!ok)
            throw GeneraError("GenericSequenceViolation",
                              "clause (3c) fails for " + sigma.str() + " (kind " +
                                  reduc_kind_name(kind) + ")");
        out.clauses.push_back("3c");
    }
    return out;
}

HNRepDatum lift_generic(const LanglandsDatum& datum, const BaseLiftTable& lifts,
                        const Registry& reg) {
    HNRepDatum out = lift_tempered(datum.temp, lifts, reg);
    out.level = HNRepDatum::Level::Generic;
    out.std_segs = datum.std_segs;
    int extra = 0;
    for (const Segment& s : datum.std_segs) extra += 2 * s.rank(reg);
    out.group.rank += extra / 2;
    return out;
}

// ---- gamma bags -------------------------------------------------------------------

std::string GammaBag::str() const {
    std::string out = "{";
    for (size_t i = 0; i < segments.size(); ++i) {
        if (i) out += " , ";
        out += segments[i].str();
    }
    return out + "}";
}

namespace {

GammaBag normalize_bag(std::vector<Segment> segs, const Registry& reg) {
    // rewrite until no linked dual pair and no Steinberg triple remains
    bool changed = true;
    while (changed) {
        changed = false;
        std::sort(segs.begin(), segs.end());
        // R1: {S, dual(S)} linked -> balanced pair
        for (size_t i = 0; i < segs.size() && !changed; ++i) {
            if (segs[i].balanced()) continue;
            Segment dual = check_dual(segs[i], reg);
            for (size_t j = 0; j < segs.size(); ++j) {
                if (j == i) continue;
                if (segs[j] == dual && linked(segs[i], dual)) {
                    Multisegment both = resolve_dual_pair(segs[i], dual, reg);
                    std::vector<Segment> next;
                    for (size_t k = 0; k < segs.size(); ++k)
                        if (k != i && k != j) next.push_back(segs[k]);
                    next.insert(next.end(), both.segs.begin(), both.segs.end());
                    segs = std::move(next);
                    changed = true;
                    break;
                }
            }
        }
        if (changed) continue;
        // R2: {tau, [1,m]tau, [-m,-1]tau} -> {[-m,m]tau}
        for (size_t i = 0; i < segs.size() && !changed; ++i) {
            const Segment& s = segs[i];
            if (!(s.low == Rational(1)) || !s.twist.mono.empty()) continue;
            const Rational m = s.high();
            Segment unit;
            unit.atom = s.atom;
            unit.low = Rational(0);
            unit.len = 0;
            Segment mirror = check_dual(s, reg);
            auto iu = std::find(segs.begin(), segs.end(), unit);
            auto im = std::find(segs.begin(), segs.end(), mirror);
            if (iu == segs.end() || im == segs.end()) continue;
            std::vector<Segment> next;
            for (size_t k = 0; k < segs.size(); ++k) {
                if (k == i) continue;
                if (iu != segs.end() && k == static_cast<size_t>(iu - segs.begin())) continue;
                if (im != segs.end() && k == static_cast<size_t>(im - segs.begin())) continue;
                next.push_back(segs[k]);
            }
            Segment ball;
            ball.atom = s.atom;
            ball.low = -m;
            ball.len = static_cast<int>((m * Rational(2)).num());
            next.push_back(ball);
            segs = std::move(next);
            changed = true;
        }
    }
    std::sort(segs.begin(), segs.end());
    return GammaBag{std::move(segs)};
}

} // namespace

GammaBag gamma_bag(const HNRepDatum& rho, const Registry& reg) {
    std::vector<Segment> segs = rho.segments;
    for (const Segment& s : rho.std_segs) {
        segs.push_back(s);
        segs.push_back(check_dual(s, reg));
    }
    return normalize_bag(std::move(segs), reg);
}

GammaBag gamma_bag(const GDatum& datum, const BaseLiftTable& lifts, const Registry& reg) {
    std::vector<Segment> segs;
    const DiscreteSeriesDatum* ds = nullptr;
    const TemperedDatum* temp = nullptr;
    const LanglandsDatum* lang = nullptr;
    if (std::holds_alternative<DiscreteSeriesDatum>(datum))
        ds = &std::get<DiscreteSeriesDatum>(datum);
    else if (std::holds_alternative<TemperedDatum>(datum)) {
        temp = &std::get<TemperedDatum>(datum);
        ds = &temp->ds;
    } else {
        lang = &std::get<LanglandsDatum>(datum);
        temp = &lang->temp;
        ds = &temp->ds;
    }
    for (const Segment& d : ds->segments) {
        segs.push_back(d);
        segs.push_back(check_dual(d, reg));
    }
    for (const std::string& atom : lifts.lift_of(ds->base.base_id)) {
        Segment s;
        s.atom = atom;
        s.low = Rational(0);
        s.len = 0;
        segs.push_back(s);
    }
    if (temp)
        for (const Segment& psi : temp->balanced) {
            segs.push_back(psi);
            segs.push_back(check_dual(psi, reg));
        }
    if (lang)
        for (const Segment& s : lang->std_segs) {
            segs.push_back(s);
            segs.push_back(check_dual(s, reg));
        }
    return normalize_bag(std::move(segs), reg);
}

bool check_gamma_identity(const GammaBag& left, const GammaBag& right) { return left == right; }

// ---- parameters -> representations ------------------------------------------------

ParameterRep parameter_to_representation(const WeilParameter& p, const BaseLiftTable& lifts,
                                         const Registry& reg) {
    validate_parameter(p, reg);
    DecomposedParameter dec = decompose(p, reg);

    // tempered kernel as an H_N datum
    HNRepDatum kernel;
    kernel.level = HNRepDatum::Level::Tempered;
    int kr = 0;
    for (const auto& s : dec.tempered_part.summands) {
        for (int i = 0; i < s.mult; ++i) {
            Segment seg;
            seg.atom = s.atom;
            seg.low = -Rational(s.sl2_dim - 1, 2);
            seg.len = s.sl2_dim - 1;
            kernel.segments.push_back(seg);
            kr += seg.rank(reg);
        }
    }
    std::sort(kernel.segments.begin(), kernel.segments.end());
    int n = kr;
    switch (p.group.family) {
        case Family::Sp:
        case Family::U_odd: n = (kr - 1) / 2; break;
        case Family::SO_even_qs: n = (kr - 2) / 2; break;
        default: n = kr / 2; break;
    }
    kernel.group = GroupFamily(p.group.family, std::max(n, 0));

    TemperedDatum temp = descend_tempered(kernel, lifts, reg);
    if (dec.pairs.empty()) {
        ParameterRep out;
        out.rep = temp;
        out.generic = true;
        return out;
    }
    LanglandsDatum lang;
    lang.temp = std::move(temp);
    for (const auto& pr : dec.pairs) {
        for (int i = 0; i < pr.mult; ++i) {
            Segment sigma;
            sigma.atom = pr.atom;
            sigma.low = -pr.q;
            sigma.len = pr.w;
            lang.std_segs.push_back(sigma);
        }
    }
    std::vector<std::string> atoms;
    for (const Segment& s : lang.std_segs) atoms.push_back(s.atom);
    ReducibilityTable table =
        synthesize_table(atoms, lang.temp.ds.base.base_id, lifts, reg);
    ParameterRep out;
    Decision d = irreducible_standard(lang, table, reg);
    out.generic = d.irreducible;
    out.rep = std::move(lang);
    return out;
}

ParamClass classify_parameter(const WeilParameter& p, const BaseLiftTable& lifts,
                              const Registry& reg) {
    validate_parameter(p, reg);
    if (is_supercuspidal_generic_param(p, reg)) return ParamClass::SupercuspidalGeneric;
    if (is_discrete_param(p, reg)) return ParamClass::Discrete;
    if (is_tempered_param(p, reg)) return ParamClass::Tempered;
    ParameterRep rep = parameter_to_representation(p, lifts, reg);
    return rep.generic ? ParamClass::Generic : ParamClass::General;
}

} // namespace genera
