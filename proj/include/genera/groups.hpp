#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genera/chars.hpp"
#include "genera/rational.hpp"

namespace genera {

// Error with a stable machine-readable code (mirrored in CLI reports).
class GeneraError : public std::runtime_error {
  public:
    GeneraError(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

enum class Family {
    SO_odd,
    Sp,
    SO_even_split,
    SO_even_qs,
    U_odd,
    U_even,
    GSp,
    GSO_even_split,
    GSO_even_qs,
    GU_odd,
    GU_even,
    GSpin_odd,
    GSpin_even_split,
    GSpin_even_qs,
};

constexpr Family kAllFamilies[] = {
    Family::SO_odd,        Family::Sp,           Family::SO_even_split,
    Family::SO_even_qs,    Family::U_odd,        Family::U_even,
    Family::GSp,           Family::GSO_even_split, Family::GSO_even_qs,
    Family::GU_odd,        Family::GU_even,      Family::GSpin_odd,
    Family::GSpin_even_split, Family::GSpin_even_qs,
};

const char* family_name(Family f);
Family family_from_name(const std::string& s);

bool has_c_action(Family f);
bool is_similitude(Family f);   // similitude or general spin
bool is_general_spin(Family f);
bool is_unitary(Family f);      // gl kind RESTRICTED (Res_{E/F} GL)
// The six quasi-split classical families with a functorial lift to H_N.
bool is_liftable_classical(Family f);
// H_N rank for a liftable family of rank n (2n, 2n+1 or 2n+2).
int lift_target_rank(Family f, int rank);

struct GroupFamily {
    Family family = Family::Sp;
    int rank = 0;

    GroupFamily() = default;
    GroupFamily(Family f, int n) : family(f), rank(n) {
        if (n < 0) throw GeneraError("InvalidRank", "rank must be nonnegative");
    }

    bool operator==(const GroupFamily& o) const {
        return family == o.family && rank == o.rank;
    }
    std::string str() const { return std::string(family_name(family)) + "_" + std::to_string(rank); }
};

enum class PoleType { R, Rminus, None };
const char* pole_type_name(PoleType t);
PoleType pole_type_from_name(const std::string& s);

// Opaque unitary supercuspidal symbol for H_k. The same record carries the
// Galois-side attributes of its Weil-group counterpart under the reciprocity
// bridge (dim = gl_rank, shared duality and pole type).
struct CuspidalAtom {
    std::string id;
    int gl_rank = 1;
    std::string dual_id;      // atom representing the (conjugate) contragredient
    PoleType pole_type = PoleType::None;
    CharacterSymbol omega;    // central character, a pure monomial for unitary atoms
    bool bounded = true;      // Galois side: phi(W_F) bounded
    CharacterSymbol det_class; // Galois side: class of det(phi)

    bool self_dual() const { return dual_id == id; }
};

// Opaque supercuspidal base symbol sigma^{(e0)} for G_{n0}.
struct BaseRep {
    std::string id;
    GroupFamily group;            // family plus the base rank n0
    CharacterSymbol omega;        // central character of the unitary part
    bool c_fixed = true;          // whether c.sigma ~ sigma
    int c_mark = 0;               // declared artifice mark: 0 = e, 1 = c
    bool generic = true;
    Rational exponent;            // epsilon(sigma): sigma = nu^eps sigma_0
};

// Registry of declared symbols; every structural operation resolves ids here.
struct Registry {
    std::map<std::string, CuspidalAtom> atoms;
    std::map<std::string, BaseRep> bases;
    Relations relations;
    std::map<std::string, std::string> c_pairs; // involution on atom ids modelling c.phi

    const CuspidalAtom& atom(const std::string& id) const;
    const BaseRep& base(const std::string& id) const;
    const std::string& dual_atom(const std::string& id) const;
    std::string c_image(const std::string& id) const; // identity if undeclared
};

// ---- group-dependent conventions -------------------------------------------------

// beta(pi): the exponent offset entering the Casselman criterion and the
// Langlands ordering; nonzero only for general spin families.
Rational beta_of(Family f, int rank, const Rational& eps);
Rational beta_of(const BaseRep& base);

// Distribution of a character twist chi over a maximal parabolic induction:
// returns (twist on the GL factor, twist on the base).
std::pair<CharacterSymbol, CharacterSymbol> twist_induced(Family f, const CharacterSymbol& chi,
                                                          int gl_rank, int base_rank);

// Central character of pi_1 x ... x pi_k x| sigma per the similitude table.
CharacterSymbol central_character(Family f, const std::vector<CharacterSymbol>& gl_omegas,
                                  const CharacterSymbol& base_omega, int base_rank);

struct TwistedAtom {
    std::string atom;
    CharacterSymbol twist;
};

struct TwistedBaseSymbol {
    std::string base;
    CharacterSymbol twist;
    int c_power = 0; // additional c applications on top of the declared mark
};

// w0-conjugate of tau (x) sigma in the maximal-parabolic configuration.
std::pair<TwistedAtom, TwistedBaseSymbol> w0_action(Family f, const CuspidalAtom& tau,
                                                    const BaseRep& base,
                                                    const Registry& reg);

// Exponent x with I(s alpha~, tau (x) sigma) = nu^x tau x| sigma (global
// similitude twists on the base are dropped).
Rational shahidi_point_to_exponent(const GroupFamily& g, int levi_index, const Rational& s);

} // namespace genera
