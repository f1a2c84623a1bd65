#include "genera/workspace.hpp"

#include <algorithm>

#include <json.hpp>

namespace genera {

using nlohmann::json;

namespace {

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw GeneraError("ParseError", "expected integer or \"p/q\" string, got " + j.dump());
}

CharacterSymbol char_from_json(const json& j) {
    if (j.is_string()) return CharacterSymbol::parse(j.get<std::string>());
    throw GeneraError("ParseError", "expected a character string, got " + j.dump());
}

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw GeneraError("ParseError", e.what());
    }
}

Segment segment_from_json(const json& j) {
    if (!j.is_object() || !j.contains("atom") || !j.contains("low"))
        throw GeneraError("ParseError", "segment needs {atom, low, len}: " + j.dump());
    CharacterSymbol twist;
    if (j.contains("twist")) twist = char_from_json(j.at("twist"));
    return Segment(j.at("atom").get<std::string>(), rational_from_json(j.at("low")),
                   j.value("len", 0), twist);
}

std::vector<Segment> segments_from_json(const json& j) {
    std::vector<Segment> out;
    for (const auto& item : j) out.push_back(segment_from_json(item));
    return out;
}

TwistedBase base_from_json(const json& j, const Workspace& ws) {
    TwistedBase tb;
    if (j.is_string()) {
        tb.base_id = j.get<std::string>();
    } else {
        tb.base_id = j.at("base").get<std::string>();
        if (j.contains("twist")) tb.twist = char_from_json(j.at("twist"));
        tb.c_power = j.value("c", 0);
    }
    ws.reg.base(tb.base_id);
    return tb;
}

} // namespace

void Workspace::merge_json(const std::string& text) {
    json j = parse_text(text);
    if (!j.is_object()) throw GeneraError("ParseError", "workspace file must be a JSON object");
    for (const auto& a : j.value("atoms", json::array())) {
        CuspidalAtom atom;
        atom.id = a.at("id").get<std::string>();
        atom.gl_rank = a.value("gl_rank", 1);
        atom.dual_id = a.value("dual", atom.id);
        atom.pole_type = pole_type_from_name(a.value("pole_type", "none"));
        if (a.contains("omega"))
            atom.omega = char_from_json(a.at("omega"));
        else
            atom.omega = CharacterSymbol::generator("w[" + atom.id + "]");
        atom.bounded = a.value("bounded", true);
        if (a.contains("det")) atom.det_class = char_from_json(a.at("det"));
        reg.atoms[atom.id] = atom;
    }
    for (const auto& b : j.value("bases", json::array())) {
        BaseRep base;
        base.id = b.at("id").get<std::string>();
        base.group = GroupFamily(family_from_name(b.at("family").get<std::string>()),
                                 b.value("rank", 0));
        if (b.contains("omega"))
            base.omega = char_from_json(b.at("omega"));
        else
            base.omega = CharacterSymbol::generator("w[" + base.id + "]");
        base.c_fixed = b.value("c_fixed", true);
        base.c_mark = b.value("c_mark", 0);
        base.generic = b.value("generic", true);
        if (b.contains("exponent")) base.exponent = rational_from_json(b.at("exponent"));
        reg.bases[base.id] = base;
    }
    for (const auto& r : j.value("character_relations", json::array()))
        reg.relations.order[r.at("gen").get<std::string>()] = r.at("order").get<int>();
    for (const auto& e : j.value("reducibility", json::array()))
        table.set(e.at("atom").get<std::string>(), e.at("base").get<std::string>(),
                  reduc_kind_from_name(e.at("kind").get<std::string>()));
    for (const auto& e : j.value("base_lifts", json::array())) {
        std::vector<std::string> atoms;
        for (const auto& a : e.at("atoms")) atoms.push_back(a.get<std::string>());
        lifts.set(e.at("base").get<std::string>(), std::move(atoms));
    }
    for (const auto& e : j.value("c_pairs", json::array())) {
        std::string a = e.at(0).get<std::string>();
        std::string b = e.at(1).get<std::string>();
        reg.c_pairs[a] = b;
        reg.c_pairs[b] = a;
    }
}

void Workspace::validate() const {
    for (const auto& [id, atom] : reg.atoms) {
        const CuspidalAtom& dual = reg.atom(atom.dual_id);
        if (dual.dual_id != id)
            throw GeneraError("Inconsistent", "duality is not an involution at '" + id + "'");
        if (dual.gl_rank != atom.gl_rank)
            throw GeneraError("Inconsistent", "dual atoms must share gl_rank: '" + id + "'");
        if (atom.pole_type != PoleType::None && !atom.self_dual())
            throw GeneraError("Inconsistent",
                              "pole type on a non-self-dual atom: '" + id + "'");
        if (atom.gl_rank < 1)
            throw GeneraError("Inconsistent", "gl_rank must be positive: '" + id + "'");
    }
    for (const auto& [id, base] : reg.bases) {
        Family f = base.group.family;
        if ((f == Family::GSO_even_split || f == Family::GSpin_even_split) &&
            base.group.rank == 1)
            throw GeneraError("Inconsistent",
                              "the G_0 convention forbids rank-one bases for " +
                                  std::string(family_name(f)));
        if (!has_c_action(f) && (!base.c_fixed || base.c_mark != 0))
            throw GeneraError("Inconsistent",
                              "base '" + id + "' declares c data but " + family_name(f) +
                                  " has no c-action");
    }
    for (const auto& [a, b] : reg.c_pairs) {
        reg.atom(a);
        if (reg.c_image(b) != a)
            throw GeneraError("Inconsistent", "c_pairs is not an involution at '" + a + "'");
    }
    validate_table(table, reg);
    for (const auto& [base_id, atoms] : lifts.lifts) {
        const BaseRep& base = reg.base(base_id);
        if (!is_liftable_classical(base.group.family)) continue;
        int total = 0;
        for (const auto& a : atoms) {
            const CuspidalAtom& atom = reg.atom(a);
            total += atom.gl_rank;
            if (!atom.self_dual() || atom.pole_type != PoleType::R)
                throw GeneraError("Inconsistent",
                                  "lift of '" + base_id +
                                      "' must consist of distinct self-dual type-R atoms");
        }
        if (total != lift_target_rank(base.group.family, base.group.rank))
            throw GeneraError("Inconsistent",
                              "lift of '" + base_id + "' has the wrong total rank");
        for (size_t i = 0; i + 1 < atoms.size(); ++i)
            if (atoms[i] == atoms[i + 1])
                throw GeneraError("Inconsistent",
                                  "lift of '" + base_id + "' repeats atom '" + atoms[i] + "'");
    }
}

Segment parse_segment_json(const std::string& text, const Workspace& ws) {
    Segment s = segment_from_json(parse_text(text));
    ws.reg.atom(s.atom);
    return s;
}

namespace {

DiscreteSeriesDatum ds_from_json(const json& j, const Workspace& ws) {
    DiscreteSeriesDatum d;
    d.base = base_from_json(j.at("base"), ws);
    if (j.contains("chi0")) d.base.twist = d.base.twist * char_from_json(j.at("chi0"));
    d.segments = segments_from_json(j.value("segments", json::array()));
    for (const Segment& s : d.segments) ws.reg.atom(s.atom);
    d.beta = j.contains("beta") ? rational_from_json(j.at("beta")) : d.base.beta(ws.reg);
    std::sort(d.segments.begin(), d.segments.end());
    return d;
}

TemperedDatum tempered_from_json(const json& j, const Workspace& ws) {
    TemperedDatum t;
    t.ds = ds_from_json(j, ws);
    t.balanced = segments_from_json(j.value("balanced", json::array()));
    for (const Segment& s : t.balanced) ws.reg.atom(s.atom);
    std::sort(t.balanced.begin(), t.balanced.end());
    return t;
}

LanglandsDatum langlands_from_json(const json& j, const Workspace& ws) {
    LanglandsDatum l;
    l.temp = tempered_from_json(j, ws);
    l.std_segs = segments_from_json(j.value("std", json::array()));
    for (const Segment& s : l.std_segs) ws.reg.atom(s.atom);
    std::stable_sort(l.std_segs.begin(), l.std_segs.end(),
                     [](const Segment& a, const Segment& b) { return b.center() < a.center(); });
    return l;
}

} // namespace

ParsedInput parse_input(const std::string& text, const Workspace& ws) {
    json j = parse_text(text);
    ParsedInput out;
    std::string type = j.value("type", "ds");
    if (type == "base") {
        out.rep = AnyDatum(base_from_json(j.contains("base") ? j.at("base") : j, ws));
    } else if (type == "ds") {
        out.rep = AnyDatum(ds_from_json(j, ws));
    } else if (type == "tempered") {
        out.rep = AnyDatum(tempered_from_json(j, ws));
    } else if (type == "langlands") {
        out.rep = AnyDatum(langlands_from_json(j, ws));
    } else if (type == "hn") {
        HNRepDatum rho;
        rho.level = hn_level_from_name(j.value("level", "ds"));
        rho.group = GroupFamily(family_from_name(j.at("family").get<std::string>()),
                                j.value("rank", 0));
        rho.segments = segments_from_json(j.value("segments", json::array()));
        rho.std_segs = segments_from_json(j.value("std", json::array()));
        for (const Segment& s : rho.segments) ws.reg.atom(s.atom);
        for (const Segment& s : rho.std_segs) ws.reg.atom(s.atom);
        std::sort(rho.segments.begin(), rho.segments.end());
        std::stable_sort(rho.std_segs.begin(), rho.std_segs.end(),
                         [](const Segment& a, const Segment& b) { return b.center() < a.center(); });
        out.kind = ParsedInput::Kind::HN;
        out.hn = rho;
    } else if (type == "param") {
        WeilParameter p;
        p.group = GroupFamily(family_from_name(j.at("family").get<std::string>()),
                              j.value("rank", 0));
        for (const auto& s : j.value("summands", json::array())) {
            ParameterSummand ps;
            ps.atom = s.at("atom").get<std::string>();
            ws.reg.atom(ps.atom);
            if (s.contains("shift")) ps.shift = rational_from_json(s.at("shift"));
            ps.sl2_dim = s.value("sl2", 1);
            ps.mult = s.value("mult", 1);
            p.summands.push_back(ps);
        }
        p.normalize();
        out.kind = ParsedInput::Kind::Param;
        out.param = p;
    } else {
        throw GeneraError("ParseError", "unknown input type '" + type + "'");
    }
    return out;
}

namespace {

std::string strip_ws(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// "d([a,b]@atom)" or "d([a,b]@(chi)atom)"
Segment parse_segment_text(const std::string& tok, const Workspace& ws) {
    if (tok.rfind("d([", 0) != 0 || tok.back() != ')')
        throw GeneraError("ParseError", "bad segment '" + tok + "'");
    std::string body = tok.substr(3, tok.size() - 4); // a,b]@...
    size_t comma = body.find(',');
    size_t close = body.find(']');
    if (comma == std::string::npos || close == std::string::npos || body[close + 1] != '@')
        throw GeneraError("ParseError", "bad segment '" + tok + "'");
    Rational lo = Rational::parse(strip_ws(body.substr(0, comma)));
    Rational hi = Rational::parse(strip_ws(body.substr(comma + 1, close - comma - 1)));
    std::string atom = body.substr(close + 2);
    CharacterSymbol twist;
    if (!atom.empty() && atom.front() == '(') {
        size_t endp = atom.find(')');
        if (endp == std::string::npos) throw GeneraError("ParseError", "bad twist in '" + tok + "'");
        twist = CharacterSymbol::parse(atom.substr(1, endp - 1));
        atom = atom.substr(endp + 1);
    }
    ws.reg.atom(atom);
    Rational len = hi - lo;
    if (!len.is_integer() || len < Rational(0))
        throw GeneraError("ParseError", "segment ends must differ by a nonnegative integer");
    return Segment(atom, lo, static_cast<int>(len.num()), twist);
}

} // namespace

std::pair<RElement, BaseState> parse_induced(const std::string& text, const Workspace& ws) {
    std::vector<std::string> factors;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t next = text.find(" x ", pos);
        factors.push_back(strip_ws(next == std::string::npos ? text.substr(pos)
                                                             : text.substr(pos, next - pos)));
        pos = next == std::string::npos ? text.size() : next + 3;
    }
    if (factors.empty()) throw GeneraError("ParseError", "empty induced expression");
    Multisegment gl;
    std::optional<BaseState> base;
    for (size_t i = 0; i < factors.size(); ++i) {
        const std::string& tok = factors[i];
        if (tok.rfind("d([", 0) == 0) {
            gl.add(parse_segment_text(tok, ws));
            continue;
        }
        // [chi*][c:]base(id)
        std::string rest = tok;
        CharacterSymbol twist;
        int c_power = 0;
        if (!rest.empty() && rest.front() == '(') {
            size_t endp = rest.find(')');
            twist = CharacterSymbol::parse(rest.substr(1, endp - 1));
            rest = rest.substr(endp + 1);
        }
        if (rest.rfind("c:", 0) == 0) {
            c_power = 1;
            rest = rest.substr(2);
        }
        if (rest.rfind("base(", 0) != 0 || rest.back() != ')')
            throw GeneraError("ParseError", "bad base factor '" + tok + "'");
        std::string id = rest.substr(5, rest.size() - 6);
        ws.reg.base(id);
        if (i + 1 != factors.size())
            throw GeneraError("ParseError", "the base must be the last factor");
        base = BaseState::make_bottom(TwistedBase{id, twist, c_power});
    }
    if (!base) throw GeneraError("ParseError", "missing base(...) factor");
    return {RElement::basis(gl), *base};
}

// ---- JSON rendering ---------------------------------------------------------------

namespace {

json segment_json(const Segment& s) {
    json j;
    j["atom"] = s.atom;
    j["low"] = s.low.str();
    j["len"] = s.len;
    if (!s.twist.mono.empty()) j["twist"] = s.twist.str();
    return j;
}

} // namespace

std::string segment_to_json(const Segment& s) { return segment_json(s).dump(); }

std::string grep_to_json(const GRepElement& g, const Registry& reg) {
    json arr = json::array();
    for (const auto& [k, c] : g.terms) {
        json term;
        term["coeff"] = c;
        json gl = json::array();
        for (const Segment& s : k.first.segs) gl.push_back(segment_json(s));
        term["gl"] = gl;
        term["base"] = k.second.str(reg);
        arr.push_back(term);
    }
    return arr.dump();
}

std::string report_to_json(const ValidationReport& rep) {
    json j;
    j["valid"] = rep.ok();
    json v = json::array();
    for (const auto& viol : rep.violations) v.push_back({{"code", viol.code}, {"detail", viol.detail}});
    j["violations"] = v;
    if (!rep.notes.empty()) j["notes"] = rep.notes;
    return j.dump();
}

std::string hn_to_json(const HNRepDatum& rho) {
    json j;
    j["type"] = "hn";
    j["level"] = hn_level_name(rho.level);
    j["family"] = family_name(rho.group.family);
    j["rank"] = rho.group.rank;
    json segs = json::array();
    for (const Segment& s : rho.segments) segs.push_back(segment_json(s));
    j["segments"] = segs;
    if (!rho.std_segs.empty()) {
        json stds = json::array();
        for (const Segment& s : rho.std_segs) stds.push_back(segment_json(s));
        j["std"] = stds;
    }
    return j.dump();
}

std::string rep_to_json(const AnyDatum& d, const Registry& reg) {
    json j;
    if (std::holds_alternative<TwistedBase>(d)) {
        const auto& tb = std::get<TwistedBase>(d);
        j["type"] = "base";
        j["base"] = tb.base_id;
        if (!tb.twist.is_one()) j["twist"] = tb.twist.str();
        if (tb.c_power) j["c"] = tb.c_power;
        return j.dump();
    }
    const DiscreteSeriesDatum* ds = nullptr;
    const TemperedDatum* temp = nullptr;
    const LanglandsDatum* lang = nullptr;
    if (std::holds_alternative<DiscreteSeriesDatum>(d)) {
        ds = &std::get<DiscreteSeriesDatum>(d);
        j["type"] = "ds";
    } else if (std::holds_alternative<TemperedDatum>(d)) {
        temp = &std::get<TemperedDatum>(d);
        ds = &temp->ds;
        j["type"] = "tempered";
    } else {
        lang = &std::get<LanglandsDatum>(d);
        temp = &lang->temp;
        ds = &temp->ds;
        j["type"] = "langlands";
    }
    j["base"] = ds->base.base_id;
    if (!ds->base.twist.is_one()) j["twist"] = ds->base.twist.str();
    if (ds->base.c_power) j["c"] = ds->base.c_power;
    j["beta"] = ds->beta.str();
    json segs = json::array();
    for (const Segment& s : ds->segments) segs.push_back(segment_json(s));
    j["segments"] = segs;
    if (temp) {
        json bal = json::array();
        for (const Segment& s : temp->balanced) bal.push_back(segment_json(s));
        j["balanced"] = bal;
    }
    if (lang) {
        json stds = json::array();
        for (const Segment& s : lang->std_segs) stds.push_back(segment_json(s));
        j["std"] = stds;
    }
    (void)reg;
    return j.dump();
}

std::string param_to_json(const WeilParameter& p) {
    json j;
    j["type"] = "param";
    j["family"] = family_name(p.group.family);
    j["rank"] = p.group.rank;
    json arr = json::array();
    for (const auto& s : p.summands) {
        json sj;
        sj["atom"] = s.atom;
        if (!s.shift.is_zero()) sj["shift"] = s.shift.str();
        sj["sl2"] = s.sl2_dim;
        if (s.mult != 1) sj["mult"] = s.mult;
        arr.push_back(sj);
    }
    j["summands"] = arr;
    return j.dump();
}

} // namespace genera
