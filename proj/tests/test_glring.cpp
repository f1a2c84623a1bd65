#include <doctest.h>

#include "helpers.hpp"

using namespace genera;
using namespace genera::testing;

TEST_CASE("m* of a single segment") {
    Segment rank1 = seg("a", "0", 0);
    RTensor t = m_star_segment(rank1);
    CHECK(t.terms.size() == 2); // delta (x) 1 + 1 (x) delta
    CHECK(t.terms.count({Multisegment({rank1}), Multisegment()}) == 1);
    CHECK(t.terms.count({Multisegment(), Multisegment({rank1})}) == 1);

    RTensor t2 = m_star_segment(seg("a", "0", 1));
    RTensor want;
    want.add(Multisegment({seg("a", "0", 1)}), Multisegment(), 1);
    want.add(Multisegment({seg("a", "1", 0)}), Multisegment({seg("a", "0", 0)}), 1);
    want.add(Multisegment(), Multisegment({seg("a", "0", 1)}), 1);
    CHECK(t2 == want);

    for (int len = 0; len <= 5; ++len)
        CHECK(m_star_segment(seg("a", "-1", len)).terms.size() == static_cast<size_t>(len + 2));
}

TEST_CASE("m* is a ring homomorphism") {
    Segment s = seg("a", "0", 0);
    Multisegment sq({s, s});
    RTensor t = m_star(RElement::basis(sq));
    // delta delta (x) 1 + 2 delta (x) delta + 1 (x) delta delta
    CHECK(t.terms.at({sq, Multisegment()}) == 1);
    CHECK(t.terms.at({Multisegment({s}), Multisegment({s})}) == 2);
    CHECK(t.terms.at({Multisegment(), sq}) == 1);

    RElement x = RElement::basis(seg("a", "-1", 1)) + RElement::basis(seg("u", "0", 2));
    RElement y = RElement::basis(seg("a", "1/2", 1));
    CHECK(m_star(x * y) == m_star(x) * m_star(y));
}

TEST_CASE("grading: both slots sum to the input weight") {
    const Registry& reg = fixture().reg;
    RElement x = RElement::basis(Multisegment({seg("e2", "0", 1), seg("a", "-1", 2)}));
    int weight = 2 * 2 + 3;
    for (const auto& [k, c] : m_star(x).terms)
        CHECK(k.first.rank(reg) + k.second.rank(reg) == weight);
}

TEST_CASE("empty multisegment is the unit") {
    RTensor t = m_star(RElement::one());
    CHECK(t == RTensor::one());
}
