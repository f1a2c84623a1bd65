#pragma once

#include <iosfwd>
#include <random>

#include "genera/workspace.hpp"

namespace genera {

// A representative symbol set covering every family, every table kind, the
// beta shifts, c pairs, and declared liftings. Shared by the selftest runner,
// the unit tests, and the acceptance suite.
Workspace standard_fixture();

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    int uniform(int lo, int hi) { // inclusive
        return std::uniform_int_distribution<int>(lo, hi)(eng_);
    }
    bool coin() { return uniform(0, 1) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<size_t>(uniform(0, static_cast<int>(v.size()) - 1))];
    }

  private:
    std::mt19937_64 eng_;
};

struct DsGenOptions {
    bool lifting_only = false; // restrict to the six classical lifting bases
    int max_atoms = 3;
    int max_segments_per_atom = 3;
    int max_endpoint = 3;
};

DiscreteSeriesDatum random_ds_datum(const Workspace& ws, Rng& rng, const DsGenOptions& opt);
// Mutates one segment so that its (DS) kind condition fails; returns the
// violated condition code ("DS1".."DS4").
std::string flip_ds_condition(DiscreteSeriesDatum& datum, const Workspace& ws, Rng& rng);

TemperedDatum random_tempered_datum(const Workspace& ws, Rng& rng, int max_tail);
LanglandsDatum random_langlands_datum(const Workspace& ws, Rng& rng, bool lifting_only);
WeilParameter random_parameter(const Workspace& ws, Rng& rng);

// The Grothendieck-group dual substitution applied to the chosen standard
// segments (with base side effects).
LanglandsDatum dual_substituted(const LanglandsDatum& d, const std::vector<size_t>& indices,
                                const Workspace& ws);

// True iff every minimal word of every tadic_bound term passes the strict
// Casselman test (checked per segment; equivalent to full word enumeration).
bool tadic_strictly_positive(const DiscreteSeriesDatum& d, const Registry& reg);

// Runs the invariant suites; returns the number of failing suites and prints
// one deterministic line per suite.
int run_selftest(std::uint64_t seed, bool quick, std::ostream& out);

} // namespace genera
