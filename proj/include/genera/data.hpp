#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genera/segments.hpp"

namespace genera {

// sigma^{(e0)} symbol with an accumulated character twist and c applications.
struct TwistedBase {
    std::string base_id;
    CharacterSymbol twist;
    int c_power = 0;

    // Effective nu-exponent epsilon of the twisted base.
    Rational effective_exponent(const Registry& reg) const {
        return reg.base(base_id).exponent + twist.nu;
    }
    Rational beta(const Registry& reg) const {
        const BaseRep& b = reg.base(base_id);
        return beta_of(b.group.family, b.group.rank, effective_exponent(reg));
    }
    // Rendering mark: declared artifice mark plus dynamic c applications.
    int effective_mark(const Registry& reg) const {
        return (reg.base(base_id).c_mark + c_power) % 2;
    }
    // c_power reduced mod 2, and dropped entirely when c acts trivially.
    TwistedBase normalized(const Registry& reg) const {
        TwistedBase t = *this;
        const BaseRep& b = reg.base(base_id);
        t.c_power = (b.c_fixed || !has_c_action(b.group.family)) ? 0 : ((c_power % 2 + 2) % 2);
        return t;
    }

    friend bool operator==(const TwistedBase& a, const TwistedBase& b) {
        return a.base_id == b.base_id && a.twist == b.twist && a.c_power == b.c_power;
    }
    friend bool operator<(const TwistedBase& a, const TwistedBase& b) {
        if (a.base_id != b.base_id) return a.base_id < b.base_id;
        if (!(a.twist == b.twist)) return a.twist < b.twist;
        return a.c_power < b.c_power;
    }

    std::string str(const Registry& reg) const;
};

// Central character of the twisted base as a symbol (per the similitude table
// conventions; for classical families this is just the declared omega).
CharacterSymbol base_omega(const TwistedBase& tb, const Registry& reg);

enum class ReducKind { C0, C_half, C1, CN, Irr };
const char* reduc_kind_name(ReducKind k);
ReducKind reduc_kind_from_name(const std::string& s);
// Reducibility exponent alpha for the (C alpha) kinds.
std::optional<Rational> reduc_alpha(ReducKind k);

// User-declared semantic axioms: the (C alpha)/(CN)/irreducible type of each
// supercuspidal pair (tau, sigma^{(0)}).
struct ReducibilityTable {
    std::map<std::pair<std::string, std::string>, ReducKind> entries;

    void set(const std::string& atom, const std::string& base, ReducKind k) {
        entries[{atom, base}] = k;
    }
    std::optional<ReducKind> lookup(const std::string& atom, const std::string& base) const {
        auto it = entries.find({atom, base});
        if (it == entries.end()) return std::nullopt;
        return it->second;
    }
};

// Validates table entries against atom/base attributes (pole types, c-fixedness,
// family rows); throws on the first inconsistency.
void validate_table(const ReducibilityTable& table, const Registry& reg);

struct DiscreteSeriesDatum {
    TwistedBase base;              // sigma^{(e0)} including the chi_0 twist
    std::vector<Segment> segments; // the Delta_i over all atoms
    Rational beta;

    std::string str(const Registry& reg) const;
};

struct TemperedDatum {
    DiscreteSeriesDatum ds;
    std::vector<Segment> balanced; // the Psi_i, centered at beta

    std::string str(const Registry& reg) const;
};

struct LanglandsDatum {
    std::vector<Segment> std_segs; // the Sigma_i, centers strictly above beta
    TemperedDatum temp;

    std::string str(const Registry& reg) const;
};

struct Violation {
    std::string code;   // e.g. "DS1", "CHAIN", "TEMP-CENTER", "G1"
    std::string detail;
};

struct ValidationReport {
    std::vector<Violation> violations;
    std::vector<std::string> notes;

    bool ok() const { return violations.empty(); }
    void add(const std::string& code, const std::string& detail) {
        violations.push_back({code, detail});
    }
    bool has(const std::string& code) const {
        for (const auto& v : violations)
            if (v.code == code) return true;
        return false;
    }
    std::string str() const;
};

} // namespace genera
