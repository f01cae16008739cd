#include "doctest.h"
#include "properties.hpp"

using namespace latmut;
using namespace latmut::testing;

namespace {

void expect(const PropertyRun& r) {
    INFO(r.name << ": " << r.first_failure);
    CHECK(r.cases >= 200);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("generated triples are mutable") {
    std::mt19937 rng(80);
    int n = 0;
    while (n < 200) {
        auto t = random_mutable(rng);
        if (!t) continue;
        CHECK(is_mg_mutable(t->f, t->m, t->g));
        ++n;
    }
}

TEST_CASE("involution") {
    std::mt19937 rng(81);
    expect(prop_involution(rng, 200));
}

TEST_CASE("psi round trip") {
    std::mt19937 rng(82);
    expect(prop_psi_round_trip(rng, 200));
}

TEST_CASE("mutability transport") {
    std::mt19937 rng(83);
    expect(prop_transport(rng, 200));
}

TEST_CASE("newton polygon of a mutation") {
    std::mt19937 rng(84);
    expect(prop_newton_compat(rng, 200));
}

TEST_CASE("eta additivity") {
    std::mt19937 rng(85);
    expect(prop_eta_additivity(rng, 200));
}

TEST_CASE("binomial twist divisibility") {
    std::mt19937 rng(86);
    expect(prop_divisibility(rng, 200));
}

TEST_CASE("minkowski re-summation") {
    std::mt19937 rng(87);
    expect(prop_minkowski(rng, 200));
}

TEST_CASE("homogeneity") {
    std::mt19937 rng(88);
    expect(prop_homogeneity(rng, 200));
}
