#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace latmut;
using latmut::testing::random_polygon;

namespace {

Polygon tri(long a, long b) { return Polygon::hull({{0, 0}, {a, 0}, {0, b}}); }

const ExtDualVec sE{0, 1, 0}, sF{1, 0, 0}, sG{-5, -4, 20};

ExtDualVec deg(long n, long k, const ExtDualVec& s) { return R_STAR * Int(n) - s * Int(k); }

// degrees listed in the worked example, cut to n <= 5, k <= 3, kR* <= 2
std::set<ExtDualVec> example_degrees() {
    std::set<ExtDualVec> out;
    for (long n = 1; n <= 4; ++n)
        for (long k = 1; k <= 3; ++k) {
            out.insert(deg(n, k, sE));
            out.insert(deg(n, k, sF));
        }
    for (long k = 2; k <= 3; ++k) out.insert(deg(5, k, sF));
    for (long k = 1; k <= 3; ++k) out.insert(deg(1, k, sG));
    out.insert(R_STAR);
    return out;
}

// level-by-level check with its own edge intersection, independent of slice()
bool mutable_by_levels(const Polygon& P, const ExtDualVec& m) {
    LatticeVec d = kernel_direction(m.pi_M());
    const auto& vs = P.vertices();
    Int top = max_phi(P, m);
    for (Int i = 1; i <= top; ++i) {
        std::vector<Rat> ts;
        for (std::size_t j = 0; j < vs.size(); ++j) {
            const auto& p = vs[j];
            const auto& q = vs[(j + 1) % vs.size()];
            Int fp = phi(m, p) - i, fq = phi(m, q) - i;
            if (fp == 0) ts.push_back(Rat(d.x * p.x + d.y * p.y));
            if ((fp < 0 && fq > 0) || (fp > 0 && fq < 0)) {
                Rat lam = make_rat(-fp, fq - fp);
                Rat x = Rat(p.x) + lam * Rat(q.x - p.x), y = Rat(p.y) + lam * Rat(q.y - p.y);
                ts.push_back(x * Rat(d.x) + y * Rat(d.y));
            }
        }
        if (ts.empty()) continue;
        auto [lo, hi] = std::minmax_element(ts.begin(), ts.end());
        Rat len = (*hi - *lo) / Rat(d.x * d.x + d.y * d.y);
        if (len < Rat(i)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("pair dimensions on the triangle conv{(0,0),(4,0),(0,5)}") {
    Polygon P = tri(4, 5);
    CHECK(t1_pair(P, deg(2, 1, sF)) == 1);
    CHECK(t1_pair(P, deg(5, 1, sF)) == 0);
    CHECK(t1_pair(P, deg(5, 2, sF)) == 1);
    CHECK(t1_pair(P, {0, 1, -1}) == 0);
    CHECK_THROWS_AS(t1_pair(P, R_STAR), PreconditionError);
    CHECK(t1_pair_radial(P, 1) == 1);
    CHECK(t1_pair_radial(P, 6) == 0);
    CHECK(t1_pair_radial(Polygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}), 1) == 2);
    CHECK(t1_X_radial(P, 1) == 0);
    CHECK(t1_X(P, deg(1, 1, sE)) == 0);
    CHECK(t1_pair(P, deg(1, 1, sE)) == 1);
    CHECK(t1_X(P, deg(2, 1, sE)) == 1);
    CHECK(edges_at_least(P, 2) == 2);
}

TEST_CASE("bounded degree table of the worked example") {
    Polygon P = tri(4, 5);
    auto table = t1_degrees(P, 5, 3, 2);
    std::set<ExtDualVec> got;
    for (const auto& r : table) {
        got.insert(r.degree);
        CHECK(r.dim_pair == 1);
        CHECK(r.dim_pair >= r.dim_X);
    }
    CHECK(table.size() == 30);
    CHECK(got == example_degrees());
    CHECK(t1_degrees(P, 0, 0, 0).empty());

    // unit triangle: every R* - k s_E has top level 1 on a primitive edge
    auto smooth = t1_degrees(tri(1, 1), 3, 3, 3);
    REQUIRE(smooth.size() == 10);
    for (const auto& r : smooth) {
        CHECK(r.dim_X == 0);
        if (!r.radial) CHECK(r.n == 1);
    }
    CHECK(smooth.back().radial);
    CHECK(smooth.back().k == 1);
}

TEST_CASE("X dimensions vanish exactly where the top level is 1") {
    Polygon P = tri(4, 5);
    for (const auto& r : t1_degrees(P, 5, 3, 2)) {
        if (r.radial) {
            CHECK(r.dim_X == std::max(edges_at_least(P, r.k) - (r.k == 1 ? 3 : 2), 0L));
            continue;
        }
        bool low = max_phi(P, r.degree) == 1;
        CHECK(r.dim_X == (low ? 0 : 1));
        CHECK(r.dim_pair - r.dim_X == (low ? 1 : 0));
    }
}

TEST_CASE("edge enumeration agrees with a box scan") {
    std::mt19937 rng(53);
    const long B = 8;
    for (int it = 0; it < 5; ++it) {
        Polygon P = random_polygon(rng, 5, 4);
        long reach = 0;
        for (const auto& e : edge_data(P)) reach = std::max(reach, to_long(e.s.h));
        auto table = t1_degrees(P, B + B * (reach + 8), B, 0);
        std::set<ExtDualVec> listed;
        for (const auto& r : table)
            if (abs(r.degree.a) <= B && abs(r.degree.b) <= B && abs(r.degree.h) <= B) listed.insert(r.degree);
        std::set<ExtDualVec> scanned;
        for (long a = -B; a <= B; ++a)
            for (long b = -B; b <= B; ++b)
                for (long h = -B; h <= B; ++h) {
                    ExtDualVec m{a, b, h};
                    if (m.pi_M().is_zero()) continue;
                    if (max_phi(P, m) >= 1 && mutable_by_levels(P, m)) scanned.insert(m);
                }
        CHECK(listed == scanned);
    }
}

TEST_CASE("pair dimension is monotone in n") {
    std::mt19937 rng(54);
    int cases = 0;
    while (cases < 200) {
        Polygon P = random_polygon(rng);
        for (const auto& E : edge_data(P))
            for (long k = 1; k <= 2; ++k) {
                long prev = 1;
                for (long n = 1; n <= 6; ++n) {
                    long p = t1_pair(P, deg(n, k, E.s));
                    CHECK(p <= prev);
                    prev = p;
                }
                ++cases;
            }
    }
}
