#include "genera/classify.hpp"

#include <algorithm>

namespace genera {

namespace {

// omega'_{sigma}: the base central character for general spin families
// (carrying the nu^{2 beta} shift), trivial otherwise.
CharacterSymbol omega_prime(const TwistedBase& base, const Registry& reg) {
    const BaseRep& b = reg.base(base.base_id);
    if (!is_general_spin(b.group.family)) return CharacterSymbol::one();
    return base_omega(base, reg);
}

bool membership(const Rational& x, const Rational& lo, int steps) {
    // x in {lo, lo+1, ..., lo+steps}
    Rational d = x - lo;
    return d.is_integer() && d >= Rational(0) && d <= Rational(steps);
}

// The family-specific case-(4) duality asymmetry, evaluated symbolically from
// declared attributes.
bool irr_condition_holds(Family f, const CuspidalAtom& tau, const BaseRep& base,
                         const Registry& reg) {
    const bool self_dual = tau.self_dual();
    const bool c_moves = has_c_action(f) && !base.c_fixed;
    const bool odd = tau.gl_rank % 2 == 1;
    const bool omega_tau_nontrivial = !reg.relations.reduce(tau.omega.mono).empty();
    switch (f) {
        case Family::SO_odd:
        case Family::Sp:
        case Family::U_odd:
        case Family::U_even:
        case Family::GSpin_odd: return false; // this case does not occur
        case Family::SO_even_split:
        case Family::SO_even_qs: return self_dual && c_moves && odd;
        case Family::GSp:
        case Family::GU_odd:
        case Family::GU_even: return self_dual && omega_tau_nontrivial;
        case Family::GSO_even_split:
        case Family::GSO_even_qs:
            return self_dual && ((c_moves && odd) || omega_tau_nontrivial);
        case Family::GSpin_even_split:
        case Family::GSpin_even_qs: {
            bool twisted_dual =
                self_dual && reg.relations.reduce(reg.base(base.id).omega.mono).empty();
            return twisted_dual && c_moves && odd;
        }
    }
    return false;
}

} // namespace

ValidationReport check_ds(const DiscreteSeriesDatum& datum, const ReducibilityTable& table,
                          const Registry& reg) {
    ValidationReport rep;
    const BaseRep& base = reg.base(datum.base.base_id);
    const Family f = base.group.family;
    const Rational beta = datum.beta;
    if (datum.base.beta(reg) != beta)
        rep.add("BETA", "declared beta " + beta.str() + " differs from the base's " +
                            datum.base.beta(reg).str());

    for (const Segment& d : datum.segments) {
        const Rational a = -d.low;
        const Rational b = d.high();
        const std::string where = d.str();
        if (!(a * Rational(2)).is_integer() || !(b * Rational(2)).is_integer())
            rep.add("HALF", "segment ends are not half-integers: " + where);
        auto kind = table.lookup(d.atom, datum.base.base_id);
        if (!kind)
            throw GeneraError("MissingTableEntry",
                              "no reducibility entry for (" + d.atom + ", " +
                                  datum.base.base_id + ")");
        const Rational rel = a - beta;
        switch (*kind) {
            case ReducKind::C1:
                if (!(rel == Rational(-1) || (rel.is_integer() && rel >= Rational(1))))
                    rep.add("DS1", "a = " + a.str() + " not in beta+(N u {-1}): " + where);
                break;
            case ReducKind::C0:
                if (!(rel.is_integer() && rel >= Rational(0)))
                    rep.add("DS2", "a = " + a.str() + " not in beta+Z>=0: " + where);
                break;
            case ReducKind::C_half:
                if (!((rel + Rational(1, 2)).is_integer() && rel >= Rational(-1, 2)))
                    rep.add("DS3", "a = " + a.str() + " not in beta-1/2+Z>=0: " + where);
                break;
            case ReducKind::CN:
                if (!(rel.is_integer() && rel >= Rational(0)))
                    rep.add("DS4", "a = " + a.str() + " not in beta+Z>=0: " + where);
                break;
            case ReducKind::Irr: {
                if (!irr_condition_holds(f, reg.atom(d.atom), base, reg))
                    rep.add("DS-IRR",
                            "pair (" + d.atom + ", " + datum.base.base_id +
                                ") admits no square-integrable segments");
                else if (!(rel.is_integer() && rel >= Rational(0)))
                    rep.add("DS-IRR", "a = " + a.str() + " not in beta+Z>=0: " + where);
                break;
            }
        }
    }

    // interleaving chain per twisted atom line: a_1 < b_1 < a_2 < b_2 < ...
    std::map<std::pair<std::string, Monomial>, std::vector<Segment>> lines;
    for (const Segment& d : datum.segments) lines[{d.atom, d.twist.mono}].push_back(d);
    for (auto& [line, segs] : lines) {
        std::sort(segs.begin(), segs.end(),
                  [](const Segment& x, const Segment& y) { return -x.low < -y.low; });
        Rational prev_b;
        bool have_prev = false;
        for (const Segment& d : segs) {
            const Rational a = -d.low;
            const Rational b = d.high();
            if (!(a < b)) {
                rep.add("CHAIN", "segment needs a < b: " + d.str());
                continue;
            }
            if (have_prev && !(prev_b < a))
                rep.add("CHAIN", "interleaving a_1<b_1<a_2<b_2<... broken at " + d.str());
            prev_b = b;
            have_prev = true;
        }
    }
    return rep;
}

bool casselman_check(const std::vector<std::pair<Rational, int>>& word, const Rational& beta,
                     bool strict) {
    Rational partial(0);
    for (const auto& [eps, n] : word) {
        partial += (eps - beta) * Rational(n);
        if (strict ? !(partial > Rational(0)) : partial < Rational(0)) return false;
    }
    return true;
}

bool casselman_word(const JacquetWord& w, const Rational& beta, bool strict, const Registry& reg) {
    std::vector<std::pair<Rational, int>> word;
    word.reserve(w.letters.size());
    for (const Segment& s : w.letters) word.push_back({s.low, reg.atom(s.atom).gl_rank});
    return casselman_check(word, beta, strict);
}

ValidationReport check_tempered(const TemperedDatum& datum, const ReducibilityTable& table,
                                const Registry& reg) {
    ValidationReport rep = check_ds(datum.ds, table, reg);
    const Family f = reg.base(datum.ds.base.base_id).group.family;
    CharacterSymbol wp = omega_prime(datum.ds.base, reg);
    std::vector<Segment> canonical;
    TwistedBase effect = datum.ds.base;
    for (const Segment& psi : datum.balanced) {
        if (psi.center() != datum.ds.beta)
            rep.add("TEMP-CENTER",
                    "tail segment not centered at beta = " + datum.ds.beta.str() + ": " +
                        psi.str());
        Segment swapped = twist_segment(check_dual(psi, reg), wp);
        if (swapped < psi) {
            if (!is_general_spin(f) && is_similitude(f))
                effect.twist = effect.twist * segment_omega(psi, reg);
            if (has_c_action(f)) effect.c_power += psi.rank(reg);
            canonical.push_back(swapped);
        } else {
            canonical.push_back(psi);
        }
    }
    std::sort(canonical.begin(), canonical.end());
    std::string note = "normal-form tail:";
    for (const Segment& s : canonical) note += " " + s.str();
    note += " over " + effect.normalized(reg).str(reg);
    rep.notes.push_back(note);
    return rep;
}

Decision irreducible_standard(const LanglandsDatum& datum, const ReducibilityTable& table,
                              const Registry& reg) {
    const Rational beta = datum.temp.ds.beta;
    const Family fam = reg.base(datum.temp.ds.base.base_id).group.family;

    // Segments handed over in subrepresentation form (center below beta) are
    // rewritten through the w0 identity first; the decision lives on the
    // Grothendieck-group class, not the presentation.
    LanglandsDatum work = datum;
    {
        CharacterSymbol wsub = omega_prime(work.temp.ds.base, reg);
        for (Segment& s : work.std_segs) {
            if (s.center() < beta) {
                Segment subst = twist_segment(check_dual(s, reg), wsub);
                if (is_similitude(fam) && !is_general_spin(fam))
                    work.temp.ds.base.twist =
                        work.temp.ds.base.twist * segment_omega(s, reg);
                if (has_c_action(fam)) work.temp.ds.base.c_power += s.rank(reg);
                s = subst;
            }
        }
        work.temp.ds.base = work.temp.ds.base.normalized(reg);
    }
    const std::vector<Segment>& stds = work.std_segs;
    for (size_t i = 0; i + 1 < stds.size(); ++i)
        if (stds[i].center() < stds[i + 1].center())
            throw GeneraError("OrderViolation", "standard segments out of Langlands order");
    for (const Segment& s : stds) {
        if (s.center() == beta)
            throw GeneraError("BoundaryCase",
                              "center(Sigma) = beta is outside the classified range: " + s.str());
    }

    CharacterSymbol wp = omega_prime(work.temp.ds.base, reg);

    // (G1)
    for (size_t i = 0; i < stds.size(); ++i) {
        for (size_t j = 0; j < stds.size(); ++j) {
            if (i == j) continue;
            if (i < j && linked(stds[i], stds[j]))
                return {false, "G1: " + stds[i].str() + " linked to " + stds[j].str()};
            Segment tw = twist_segment(check_dual(stds[j], reg), wp);
            if (linked(stds[i], tw))
                return {false, "G1: " + stds[i].str() + " linked to twisted dual of " +
                                   stds[j].str()};
        }
    }

    for (const Segment& sigma : stds) {
        const Segment dual_tw = twist_segment(check_dual(sigma, reg), wp);
        // (G3)
        for (const Segment& psi : work.temp.balanced) {
            if (linked(sigma, psi))
                return {false, "G3: " + sigma.str() + " linked to " + psi.str()};
            if (linked(dual_tw, psi))
                return {false, "G3: twisted dual of " + sigma.str() + " linked to " + psi.str()};
        }
        // (G5)
        for (const Segment& delta : work.temp.ds.segments) {
            if (linked(sigma, delta))
                return {false, "G5: " + sigma.str() + " linked to " + delta.str()};
            if (linked(dual_tw, delta))
                return {false, "G5: twisted dual of " + sigma.str() + " linked to " + delta.str()};
        }
        // (G6): cuspidal level
        const CuspidalAtom& xi = reg.atom(sigma.atom);
        Monomial lhs = reg.relations.reduce(sigma.twist.mono);
        Monomial rhs = reg.relations.reduce(
            mono_mul(mono_inv(sigma.twist.mono), omega_prime(work.temp.ds.base, reg).mono));
        const bool g7 = !(xi.self_dual() && lhs == rhs);
        if (g7) continue;
        auto kind = table.lookup(sigma.atom, work.temp.ds.base.base_id);
        if (!kind)
            throw GeneraError("MissingTableEntry", "no reducibility entry for (" + sigma.atom +
                                                       ", " + work.temp.ds.base.base_id + ")");
        const Rational q = -sigma.low;
        const int w = sigma.len;
        const Rational set_lo = -q - beta; // {set_lo, set_lo+1, ..., set_lo+w}
        bool g8;
        if (auto alpha = reduc_alpha(*kind))
            g8 = !membership(*alpha, set_lo, w) && !membership(-*alpha, set_lo, w);
        else
            g8 = !membership(Rational(0), set_lo, w);
        if (g8) continue;
        // (G6)(b): the q = beta-1 Steinberg exception with a dominating Delta
        if (*kind == ReducKind::C1 && q == beta - Rational(1)) {
            bool dominated = false;
            for (const Segment& delta : work.temp.ds.segments)
                if (delta.atom == sigma.atom && delta.twist.mono == sigma.twist.mono &&
                    delta.low == sigma.low && delta.high() >= sigma.high())
                    dominated = true;
            if (dominated) continue;
        }
        return {false, "G8: reducibility point meets " + sigma.str() + " (kind " +
                           reduc_kind_name(*kind) + ")"};
    }
    return {true, ""};
}

const char* rep_class_name(RepClass c) {
    switch (c) {
        case RepClass::Supercuspidal: return "Supercuspidal";
        case RepClass::DiscreteSeries: return "DiscreteSeries";
        case RepClass::Tempered: return "Tempered";
        case RepClass::StandardGeneric: return "StandardGeneric";
        case RepClass::Invalid: return "Invalid";
    }
    return "?";
}

Classification classify_rep(const AnyDatum& input, const ReducibilityTable& table,
                            const Registry& reg) {
    Classification out;
    if (std::holds_alternative<TwistedBase>(input)) {
        const TwistedBase& tb = std::get<TwistedBase>(input);
        if (!reg.base(tb.base_id).generic)
            out.report.add("NONGENERIC", "base " + tb.base_id + " is not generic");
        out.cls = out.report.ok() ? RepClass::Supercuspidal : RepClass::Invalid;
        return out;
    }
    if (std::holds_alternative<DiscreteSeriesDatum>(input)) {
        out.report = check_ds(std::get<DiscreteSeriesDatum>(input), table, reg);
        out.cls = out.report.ok() ? RepClass::DiscreteSeries : RepClass::Invalid;
        return out;
    }
    if (std::holds_alternative<TemperedDatum>(input)) {
        out.report = check_tempered(std::get<TemperedDatum>(input), table, reg);
        out.cls = out.report.ok() ? RepClass::Tempered : RepClass::Invalid;
        return out;
    }
    const LanglandsDatum& ld = std::get<LanglandsDatum>(input);
    out.report = check_tempered(ld.temp, table, reg);
    if (!out.report.ok()) {
        out.cls = RepClass::Invalid;
        return out;
    }
    Decision d = irreducible_standard(ld, table, reg);
    out.decision = d;
    if (!d.irreducible) out.report.add("REDUCIBLE", d.witness);
    out.cls = d.irreducible ? RepClass::StandardGeneric : RepClass::Invalid;
    return out;
}

} // namespace genera
