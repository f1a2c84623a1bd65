#include "genera/mustar.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace genera {

std::string NStarElement::str() const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "·";
        out += k.first.str() + "⊗" + k.second.str() + "⊗" + k.third.str() +
               "⊗" + (k.sign ? "c" : "e");
    }
    return out;
}

NStarElement n_star_segment(const Segment& s, const Registry& reg) {
    NStarElement out;
    const int k = reg.atom(s.atom).gl_rank;
    const Segment dual = check_dual(s, reg);
    // i, j run over low-1 <= i <= j <= high in unit steps
    for (int di = -1; di <= s.len; ++di) {
        for (int dj = di; dj <= s.len; ++dj) {
            NKey key;
            if (di >= 0) {
                // dual of the bottom piece [low .. low+di]
                Segment first = dual;
                first.low = dual.high() - Rational(di);
                first.len = di;
                key.first.add(first);
            }
            if (dj < s.len) {
                Segment second = s;
                second.low = s.low + Rational(dj + 1);
                second.len = s.len - dj - 1;
                key.second.add(second);
            }
            if (di < dj) {
                Segment third = s;
                third.low = s.low + Rational(di + 1);
                third.len = dj - di - 1;
                key.third.add(third);
            }
            key.sign = ((di + 1) * k) % 2;
            out.add(key, 1);
        }
    }
    return out;
}

namespace {

NStarElement n_star_mult(const NStarElement& a, const NStarElement& b) {
    NStarElement r;
    for (const auto& [ka, ca] : a.terms)
        for (const auto& [kb, cb] : b.terms) {
            NKey k;
            k.first = Multisegment::merged(ka.first, kb.first);
            k.second = Multisegment::merged(ka.second, kb.second);
            k.third = Multisegment::merged(ka.third, kb.third);
            k.sign = (ka.sign + kb.sign) % 2;
            r.add(k, ca * cb);
        }
    return r;
}

NStarElement n_star_one() {
    NStarElement r;
    r.add(NKey{}, 1);
    return r;
}

} // namespace

NStarElement n_star(const RElement& x, const Registry& reg) {
    NStarElement out;
    for (const auto& [m, c] : x.terms) {
        NStarElement prod = n_star_one();
        for (const Segment& s : m.segs) prod = n_star_mult(prod, n_star_segment(s, reg));
        for (const auto& [k, pc] : prod.terms) out.add(k, pc * c);
    }
    return out;
}

// ---- base states ------------------------------------------------------------------

namespace {

// Character of a rank-one GL factor seen as a segment of length 0 over a
// gl_rank-1 atom: the atom's central character times twist and nu^low.
CharacterSymbol gl1_char(const Segment& s, const Registry& reg) {
    CharacterSymbol chi = reg.atom(s.atom).omega * s.twist;
    chi.nu += s.low;
    return chi;
}

// The inverse character rendered as a segment over the dual atom. Exact when
// the dual atom's declared omega is the inverse of the atom's.
Segment gl1_inverse(const Segment& s, const Registry& reg) {
    Segment r;
    r.atom = reg.dual_atom(s.atom);
    r.twist = s.twist.inverse();
    r.low = -s.low;
    r.len = 0;
    return r;
}

Segment gl1_twist(const Segment& s, const CharacterSymbol& chi) { return twist_segment(s, chi); }

// Rewrites a c-marked rank-one representation of SO_2/GSO_2/GSpin_2 to its
// e-marked form via the family identification.
void canonicalize_small(Family f, Segment& gl1, TwistedBase& b0, const Registry& reg) {
    b0 = b0.normalized(reg);
    const BaseRep& base = reg.base(b0.base_id);
    if ((base.c_mark + b0.c_power) % 2 == 0) return;
    CharacterSymbol chi = gl1_char(gl1, reg);
    CharacterSymbol chi_prime = base.omega * b0.twist;
    chi_prime.nu += base.exponent;
    switch (f) {
        case Family::SO_even_split:
            gl1 = gl1_inverse(gl1, reg);
            break;
        case Family::GSO_even_split:
            gl1 = gl1_inverse(gl1, reg);
            b0.twist = b0.twist * chi;
            break;
        case Family::GSpin_even_split:
            gl1 = gl1_twist(gl1_inverse(gl1, reg), chi_prime);
            break;
        default:
            throw GeneraError("UnknownFamilyRow", "small-rank base outside SO2/GSO2/GSpin2");
    }
    b0.c_power += 1;
    b0 = b0.normalized(reg);
}

} // namespace

BaseState BaseState::make_small(Segment gl1, TwistedBase tb) {
    BaseState s;
    s.tag = Tag::Small;
    s.small_gl = std::move(gl1);
    s.bottom = std::move(tb);
    return s;
}

int BaseState::rank(const Registry& reg) const {
    int r = reg.base(bottom.base_id).group.rank;
    if (small_gl) r += small_gl->rank(reg);
    if (stein) r += stein->ladder.rank(reg);
    return r;
}

bool operator<(const BaseState& a, const BaseState& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    if (!(a.bottom == b.bottom)) return a.bottom < b.bottom;
    if (a.small_gl.has_value() != b.small_gl.has_value()) return b.small_gl.has_value();
    if (a.small_gl && !(*a.small_gl == *b.small_gl)) return *a.small_gl < *b.small_gl;
    if (a.stein.has_value() != b.stein.has_value()) return b.stein.has_value();
    if (a.stein && !(*a.stein == *b.stein)) return *a.stein < *b.stein;
    return false;
}

bool operator==(const BaseState& a, const BaseState& b) {
    return !(a < b) && !(b < a);
}

std::string TwistedBase::str(const Registry& reg) const {
    const BaseRep& b = reg.base(base_id);
    std::string out;
    if (!twist.is_one()) out += "(" + twist.str() + ")";
    out += "base(" + base_id;
    if (has_c_action(b.group.family) && !b.c_fixed)
        out += (b.c_mark + c_power) % 2 ? "⊗c" : "⊗e";
    out += ")";
    return out;
}

std::string BaseState::str(const Registry& reg) const {
    switch (tag) {
        case Tag::Bottom: return bottom.str(reg);
        case Tag::Small: return small_gl->str() + " x| " + bottom.str(reg);
        case Tag::Steinberg: {
            std::string prefix = stein->kind == ReducKind::C0
                                     ? std::string("st") + (stein->sign > 0 ? "+" : "-")
                                     : std::string("st");
            return prefix + "(" + stein->ladder.str() + "; " + bottom.str(reg) + ")";
        }
    }
    return "?";
}

std::string InducedSymbol::str(const Registry& reg) const {
    if (inner.empty()) return base.str(reg);
    std::string out;
    for (const auto& s : inner.segs) out += s.str() + " x ";
    return out + base.str(reg);
}

std::string GRepElement::str(const Registry& reg) const {
    if (terms.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : terms) {
        if (!out.empty()) out += " + ";
        if (c != 1) out += std::to_string(c) + "·";
        out += k.first.str() + "⊗{" + k.second.str(reg) + "}";
    }
    return out;
}

namespace {

Segment reduced_segment(Segment s, const Registry& reg) {
    s.twist.mono = reg.relations.reduce(s.twist.mono);
    return s;
}

Multisegment reduced_mseg(const Multisegment& m, const Registry& reg) {
    std::vector<Segment> v;
    v.reserve(m.segs.size());
    for (const Segment& s : m.segs) v.push_back(reduced_segment(s, reg));
    return Multisegment(std::move(v));
}

InducedSymbol normalize_induced(InducedSymbol is, const Registry& reg) {
    is.base.bottom = is.base.bottom.normalized(reg);
    is.base.bottom.twist.mono = reg.relations.reduce(is.base.bottom.twist.mono);
    is.inner = reduced_mseg(is.inner, reg);
    if (is.base.small_gl) *is.base.small_gl = reduced_segment(*is.base.small_gl, reg);
    if (is.base.stein) is.base.stein->ladder = reduced_segment(is.base.stein->ladder, reg);
    if (is.base.tag == BaseState::Tag::Steinberg && is.base.stein->kind == ReducKind::CN &&
        is.base.stein->ladder.len == 0 && is.base.stein->ladder.low.is_zero()) {
        // the CN ladder at b = 0 is the full (irreducible) induced tau x| sigma
        is.inner.add(is.base.stein->ladder);
        is.base.stein.reset();
        is.base.tag = BaseState::Tag::Bottom;
    }
    if (is.base.tag == BaseState::Tag::Small) {
        Family f = reg.base(is.base.bottom.base_id).group.family;
        canonicalize_small(f, *is.base.small_gl, is.base.bottom, reg);
    }
    return is;
}

} // namespace

GRepElement mu_star_base(const BaseState& pi, Family f, const Registry& reg) {
    GRepElement out;
    switch (pi.tag) {
        case BaseState::Tag::Bottom: {
            InducedSymbol is{Multisegment(), pi};
            out.add(Multisegment(), normalize_induced(is, reg), 1);
            return out;
        }
        case BaseState::Tag::Small: {
            const Segment& gl1 = *pi.small_gl;
            const TwistedBase& b0 = pi.bottom;
            // 1 (x) (chi x| chi' (x) e)
            out.add(Multisegment(), normalize_induced(InducedSymbol{Multisegment(), pi}, reg), 1);
            // chi (x) (chi' (x) e)
            out.add(reduced_mseg(Multisegment({gl1}), reg),
                    normalize_induced(InducedSymbol{Multisegment(), BaseState::make_bottom(b0)}, reg),
                    1);
            // third term: family-dependent inverse factor with the c mark flipped
            Segment third = gl1_inverse(gl1, reg);
            TwistedBase flipped = b0;
            flipped.c_power += 1;
            switch (f) {
                case Family::SO_even_split:
                case Family::GSO_even_split: break;
                case Family::GSpin_even_split: {
                    CharacterSymbol chi_prime = reg.base(b0.base_id).omega * b0.twist;
                    chi_prime.nu += reg.base(b0.base_id).exponent;
                    third = gl1_twist(third, chi_prime);
                    break;
                }
                default:
                    throw GeneraError("UnknownFamilyRow", "small-rank base outside SO2/GSO2/GSpin2");
            }
            if (f == Family::GSO_even_split) flipped.twist = flipped.twist * gl1_char(gl1, reg);
            out.add(reduced_mseg(Multisegment({third}), reg),
                    normalize_induced(InducedSymbol{Multisegment(), BaseState::make_bottom(flipped)},
                                      reg),
                    1);
            return out;
        }
        case BaseState::Tag::Steinberg: {
            const SteinbergCore& core = *pi.stein;
            const Segment& lad = core.ladder;
            // slices with a shortened ladder
            for (int x = 0; x <= lad.len; ++x) {
                Multisegment gl;
                if (x < lad.len) {
                    Segment top = lad;
                    top.low = lad.low + Rational(x + 1);
                    top.len = lad.len - x - 1;
                    gl.add(top);
                }
                SteinbergCore lower = core;
                lower.ladder.len = x;
                InducedSymbol is{Multisegment(),
                                 BaseState::make_steinberg(lower, pi.bottom)};
                out.add(reduced_mseg(gl, reg), normalize_induced(is, reg), 1);
            }
            // terminal fully-GL slices
            Multisegment full;
            full.add(reduced_segment(lad, reg));
            out.add(full,
                    normalize_induced(
                        InducedSymbol{Multisegment(), BaseState::make_bottom(pi.bottom)}, reg),
                    1);
            if (core.kind == ReducKind::CN) {
                const CuspidalAtom& tau = reg.atom(lad.atom);
                const BaseRep& b = reg.base(pi.bottom.base_id);
                auto [wa, wb] = w0_action(f, tau, b, reg);
                TwistedBase partner = pi.bottom;
                partner.twist = partner.twist * wb.twist;
                partner.c_power += wb.c_power;
                out.add(full,
                        normalize_induced(
                            InducedSymbol{Multisegment(), BaseState::make_bottom(partner)}, reg),
                        1);
            }
            return out;
        }
    }
    return out;
}

// ---- the fourteen pairings --------------------------------------------------------

namespace {

enum class OmegaRule { None, SigmaOnFirst, DualFirstOnBase };
enum class SignRule { Trivial, ActsOnBase };

void family_rules(Family f, OmegaRule& omega, SignRule& sign) {
    switch (f) {
        case Family::SO_odd:
        case Family::Sp:
        case Family::U_odd:
        case Family::U_even:
            omega = OmegaRule::None;
            sign = SignRule::Trivial;
            break;
        case Family::GSpin_odd:
            omega = OmegaRule::SigmaOnFirst;
            sign = SignRule::Trivial;
            break;
        case Family::GSp:
        case Family::GU_odd:
        case Family::GU_even:
            omega = OmegaRule::DualFirstOnBase;
            sign = SignRule::Trivial;
            break;
        case Family::SO_even_qs:
        case Family::SO_even_split:
            omega = OmegaRule::None;
            sign = SignRule::ActsOnBase;
            break;
        case Family::GSO_even_qs:
        case Family::GSO_even_split:
            omega = OmegaRule::DualFirstOnBase;
            sign = SignRule::ActsOnBase;
            break;
        case Family::GSpin_even_qs:
        case Family::GSpin_even_split:
            omega = OmegaRule::SigmaOnFirst;
            sign = SignRule::ActsOnBase;
            break;
    }
}

Multisegment twist_multisegment(const Multisegment& m, const CharacterSymbol& chi) {
    if (chi.is_one()) return m;
    std::vector<Segment> v;
    v.reserve(m.segs.size());
    for (const auto& s : m.segs) v.push_back(twist_segment(s, chi));
    return Multisegment(std::move(v));
}

CharacterSymbol dual_multisegment_omega(const Multisegment& m, const Registry& reg) {
    CharacterSymbol w;
    for (const auto& s : m.segs) w = w * segment_omega(check_dual(s, reg), reg);
    return w;
}

} // namespace

CharacterSymbol base_omega(const TwistedBase& tb, const Registry& reg) {
    const BaseRep& b = reg.base(tb.base_id);
    if (is_general_spin(b.group.family)) {
        bool doubled = b.group.rank > 0 || b.group.family == Family::GSpin_even_qs;
        int k = doubled ? 2 : 1;
        CharacterSymbol w = b.omega * tb.twist.pow(k);
        w.nu += b.exponent * Rational(k);
        return w;
    }
    return b.omega * tb.twist;
}

GRepElement tilde_rtimes(Family f, const NStarElement& nx, const GRepElement& gx,
                         const Registry& reg) {
    OmegaRule omega;
    SignRule sign;
    family_rules(f, omega, sign);
    GRepElement out;
    for (const auto& [nk, nc] : nx.terms) {
        for (const auto& [gk, gc] : gx.terms) {
            const Multisegment& rho = gk.first;
            const InducedSymbol& sg = gk.second;

            Multisegment first = nk.first;
            if (omega == OmegaRule::SigmaOnFirst && !first.empty())
                first = twist_multisegment(first, base_omega(sg.base.bottom, reg));

            Multisegment gl = Multisegment::merged(Multisegment::merged(first, nk.second), rho);

            InducedSymbol nb = sg;
            nb.inner = Multisegment::merged(nb.inner, nk.third);
            if (omega == OmegaRule::DualFirstOnBase && !nk.first.empty())
                nb.base.bottom.twist =
                    nb.base.bottom.twist * dual_multisegment_omega(nk.first, reg);
            if (sign == SignRule::ActsOnBase && nk.sign) nb.base.bottom.c_power += 1;

            out.add(reduced_mseg(gl, reg), normalize_induced(nb, reg), nc * gc);
        }
    }
    return out;
}

GRepElement mu_star(const RElement& lambda, const BaseState& pi, Family f, const Registry& reg) {
    return tilde_rtimes(f, n_star(lambda, reg), mu_star_base(pi, f, reg), reg);
}

GRepElement extract(const GRepElement& g, Slice slice, int m, const Registry& reg) {
    GRepElement out;
    for (const auto& [k, c] : g.terms) {
        if (slice == Slice::SGL) {
            if (k.second.inner.empty() && k.second.base.tag == BaseState::Tag::Bottom)
                out.add(k.first, k.second, c);
        } else {
            if (k.first.rank(reg) == m) out.add(k.first, k.second, c);
        }
    }
    return out;
}

GRepElement w0_canonicalize(Family f, const GRepElement& g, const Registry& reg) {
    OmegaRule omega;
    SignRule sign;
    family_rules(f, omega, sign);
    GRepElement out;
    for (const auto& [k, c] : g.terms) {
        InducedSymbol is = k.second;
        CharacterSymbol omega_sigma = omega == OmegaRule::SigmaOnFirst
                                          ? base_omega(is.base.bottom, reg)
                                          : CharacterSymbol::one();
        std::vector<Segment> inner;
        // base toggles left by substitution-fixed segments: (twist, c parity)
        std::set<std::pair<Monomial, int>> toggles;
        for (const Segment& s : is.inner.segs) {
            Segment subst = reduced_segment(twist_segment(check_dual(s, reg), omega_sigma), reg);
            if (subst < s) {
                if (omega == OmegaRule::DualFirstOnBase)
                    is.base.bottom.twist = is.base.bottom.twist * segment_omega(s, reg);
                if (sign == SignRule::ActsOnBase) is.base.bottom.c_power += s.rank(reg);
                inner.push_back(subst);
            } else {
                if (subst == s) {
                    Monomial tw = omega == OmegaRule::DualFirstOnBase
                                      ? reg.relations.reduce(segment_omega(s, reg).mono)
                                      : Monomial{};
                    int cp = sign == SignRule::ActsOnBase ? s.rank(reg) % 2 : 0;
                    if (!tw.empty() || cp) toggles.insert({tw, cp});
                }
                inner.push_back(s);
            }
        }
        is.inner = Multisegment(std::move(inner));
        is = normalize_induced(is, reg);
        // quotient by the free toggles: lexicographic minimum over the subgroup
        std::vector<std::pair<Monomial, int>> tog(toggles.begin(), toggles.end());
        if (!tog.empty() && tog.size() <= 12) {
            TwistedBase best = is.base.bottom;
            for (std::uint32_t mask = 1; mask < (1u << tog.size()); ++mask) {
                TwistedBase cand = is.base.bottom;
                for (size_t i = 0; i < tog.size(); ++i) {
                    if (!(mask & (1u << i))) continue;
                    cand.twist.mono = reg.relations.reduce(mono_mul(cand.twist.mono, tog[i].first));
                    cand.c_power += tog[i].second;
                }
                cand = cand.normalized(reg);
                if (cand < best) best = cand;
            }
            is.base.bottom = best;
        }
        out.add(k.first, is, c);
    }
    return out;
}

// ---- words ------------------------------------------------------------------------

namespace {

std::vector<Segment> descending_letters(const Segment& s) {
    std::vector<Segment> out;
    for (int i = s.len; i >= 0; --i) {
        Segment letter = s;
        letter.low = s.low + Rational(i);
        letter.len = 0;
        out.push_back(letter);
    }
    return out;
}

void shuffles(std::vector<std::vector<Segment>>& lists, std::vector<size_t>& pos,
              std::vector<Segment>& acc, size_t remaining,
              const std::function<void(const std::vector<Segment>&)>& emit) {
    if (remaining == 0) {
        emit(acc);
        return;
    }
    for (size_t i = 0; i < lists.size(); ++i) {
        if (pos[i] < lists[i].size()) {
            acc.push_back(lists[i][pos[i]]);
            ++pos[i];
            shuffles(lists, pos, acc, remaining - 1, emit);
            --pos[i];
            acc.pop_back();
        }
    }
}

} // namespace

std::map<JacquetWord, std::int64_t> minimal_words(const GRepElement& g, const Registry& reg) {
    std::map<JacquetWord, std::int64_t> out;
    GRepElement full = extract(g, Slice::SGL, 0, reg);
    for (const auto& [k, c] : full.terms) {
        std::vector<std::vector<Segment>> lists;
        size_t total = 0;
        for (const Segment& s : k.first.segs) {
            lists.push_back(descending_letters(s));
            total += lists.back().size();
        }
        std::vector<size_t> pos(lists.size(), 0);
        std::vector<Segment> acc;
        const std::int64_t coeff = c;
        const TwistedBase base = k.second.base.bottom;
        shuffles(lists, pos, acc, total, [&](const std::vector<Segment>& word) {
            out[JacquetWord{word, base}] += coeff;
        });
    }
    return out;
}

JacquetWord steinberg_jacquet(ReducKind kind, const Segment& ladder, const TwistedBase& chi0base,
                              const Registry& reg) {
    (void)reg;
    if (kind == ReducKind::Irr)
        throw GeneraError("InvalidSteinbergRange", "no Steinberg ladder for an Irr pair");
    if (kind == ReducKind::CN) {
        if (!ladder.low.is_zero())
            throw GeneraError("InvalidSteinbergRange", "(CN) ladder must start at 0");
    } else {
        Rational alpha = *reduc_alpha(kind);
        if (ladder.low != alpha)
            throw GeneraError("InvalidSteinbergRange",
                              "ladder must start at the reducibility point " + alpha.str());
    }
    JacquetWord w;
    w.letters = descending_letters(ladder);
    w.base = chi0base;
    return w;
}

GRepElement tadic_bound(const DiscreteSeriesDatum& datum, const Registry& reg) {
    const Rational beta = datum.beta;
    struct Choice {
        std::vector<std::pair<Multisegment, int>> alternatives; // (segments, dummy)
    };
    // per datum segment, enumerate the index range of the unitarized bound
    std::vector<std::vector<Multisegment>> per_segment;
    for (const Segment& d : datum.segments) {
        Rational a = -d.low - beta; // shadow left magnitude per the (EDS) sets
        Rational b = d.high() - beta;
        if (!(a * Rational(2)).is_integer() || !(b * Rational(2)).is_integer())
            throw GeneraError("InvalidDatum", "segment ends are not half-integral against beta");
        Rational abs_a = a < Rational(0) ? -a : a;
        std::vector<Multisegment> alts;
        for (Rational i = -a; i <= abs_a; i += Rational(1)) {
            Multisegment ms;
            // left piece [ -i+1 .. a ], shifted back by beta
            if (-i + Rational(1) <= a) {
                Segment left = d;
                left.low = -i + Rational(1) + beta;
                left.len = static_cast<int>((a - (-i + Rational(1))).num());
                ms.add(left);
            }
            // right piece [ i .. b ], shifted back by beta
            if (i <= b) {
                Segment right = d;
                right.low = i + beta;
                right.len = static_cast<int>((b - i).num());
                ms.add(right);
            }
            alts.push_back(ms);
        }
        per_segment.push_back(std::move(alts));
    }
    GRepElement out;
    InducedSymbol bottom{Multisegment(), BaseState::make_bottom(datum.base)};
    bottom = normalize_induced(bottom, reg);
    std::vector<size_t> idx(per_segment.size(), 0);
    while (true) {
        Multisegment gl;
        for (size_t j = 0; j < per_segment.size(); ++j)
            gl = Multisegment::merged(gl, per_segment[j][idx[j]]);
        out.add(reduced_mseg(gl, reg), bottom, 1);
        size_t j = 0;
        for (; j < per_segment.size(); ++j) {
            if (++idx[j] < per_segment[j].size()) break;
            idx[j] = 0;
        }
        if (j == per_segment.size()) break;
    }
    return out;
}

} // namespace genera
