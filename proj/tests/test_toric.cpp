#include "doctest.h"
#include "support.hpp"

#include <set>

using namespace latmut;
using latmut::testing::random_polygon;

namespace {

Polygon tri(long a, long b) { return Polygon::hull({{0, 0}, {a, 0}, {0, b}}); }
Polygon p29() { return Polygon::hull({{0, 0}, {0, 2}, {1, 2}}); }

const std::vector<ExtDualVec> S_GENS{{-2, -3, 6}, {-1, -1, 3}, {0, 1, 0}, {-1, -2, 4}, {0, -1, 2}, {1, 0, 0}};
const std::vector<ExtDualVec> Z_GENS{{-2, 1, 0}, {-1, 1, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 2}, {1, 0, 0}};

std::set<ExtDualVec> as_set(const std::vector<ExtDualVec>& v) { return {v.begin(), v.end()}; }

bool in_cone(const Polygon& P, const ExtDualVec& s) {
    for (const auto& v : P.vertices())
        if (phi(s, v) < 0) return false;
    return true;
}

// elements with all vertex pairings in [0, B], by a plain scan of coordinates
std::vector<ExtDualVec> scan_box(const Polygon& P, long B) {
    long W = 7 * B;
    LatticeVec v0 = P.vertices()[0];
    std::vector<ExtDualVec> out;
    for (long a = -W; a <= W; ++a)
        for (long b = -W; b <= W; ++b) {
            Int base = pair({a, b}, v0);
            for (long p = 0; p <= B; ++p) {
                ExtDualVec s{a, b, Int(p) - base};
                bool ok = true;
                for (const auto& v : P.vertices()) {
                    Int x = phi(s, v);
                    if (x < 0 || x > B) ok = false;
                }
                if (ok) out.push_back(s);
            }
        }
    return out;
}

Int weight(const Polygon& P, const ExtDualVec& s) {
    Int w = 0;
    for (const auto& v : P.vertices()) w += phi(s, v);
    return w;
}

// every scanned element is a sum of generators and R*
bool generates(const Polygon& P, const std::vector<ExtDualVec>& gens, long B) {
    auto box = scan_box(P, B);
    std::sort(box.begin(), box.end(), [&](const auto& x, const auto& y) { return weight(P, x) < weight(P, y); });
    std::set<ExtDualVec> ok{{0, 0, 0}};
    auto all = gens;
    all.push_back(R_STAR);
    for (const auto& s : box) {
        if (s == ExtDualVec{0, 0, 0}) continue;
        bool hit = false;
        for (const auto& g : all)
            if (ok.count(s - g)) hit = true;
        if (!hit) return false;
        ok.insert(s);
    }
    return true;
}

bool irreducible(const Polygon& P, const ExtDualVec& g, long B) {
    for (const auto& s : scan_box(P, B)) {
        if (s == ExtDualVec{0, 0, 0} || s == g) continue;
        if (in_cone(P, g - s)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("hilbert bases of the worked examples") {
    auto H = MonoidData::hilbert_basis(p29());
    CHECK(as_set(H.generators()) == as_set({{-2, 1, 0}, {-1, 0, 1}, {0, -1, 2}, {1, 0, 0}}));
    auto H2 = MonoidData::hilbert_basis(tri(3, 2));
    CHECK(as_set(H2.generators()) == as_set(S_GENS));
    auto sq = MonoidData::hilbert_basis(Polygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}}));
    CHECK(as_set(sq.generators()) == as_set({{1, 0, 0}, {0, 1, 0}, {-1, 0, 1}, {0, -1, 1}}));
}

TEST_CASE("generating sets") {
    auto Z = MonoidData::with_generating_set(p29(), Z_GENS);
    CHECK(Z.rank() == 6);
    auto H = MonoidData::hilbert_basis(p29());
    auto same = MonoidData::with_generating_set(p29(), H.generators());
    CHECK(same.generators() == H.generators());
    CHECK_THROWS_AS(MonoidData::with_generating_set(p29(), {{-2, 1, 0}, {1, 0, 0}}), PreconditionError);
    CHECK_THROWS_AS(MonoidData::with_generating_set(p29(), {{-2, 1, 1}, {-1, 0, 1}, {0, -1, 2}, {1, 0, 0}}),
                    PreconditionError);
}

TEST_CASE("transport of the generating set") {
    auto Z = MonoidData::with_generating_set(p29(), Z_GENS);
    Polygon Q = Polygon::segment({0, 0}, {1, 0});
    auto S = xi_transport(Z, {0, 2, -3}, Q);
    CHECK(S.polygon() == tri(3, 2));
    CHECK(S.generators() == S_GENS);
    auto back = xi_transport(S, {0, -2, 3}, Q);
    CHECK(back.generators() == Z_GENS);
    CHECK(xi_transport(Z, {0, 2, -3}, Polygon::point({0, 0})).generators() == Z_GENS);
    CHECK_FALSE(transport_compatibility_failure(Z, S, {0, 2, -3}, Q));
}

TEST_CASE("boundary decomposition and tuples") {
    auto md = MonoidData::with_generating_set(tri(3, 2), S_GENS);
    MultiIndex k{0, 1, 0, 0, 0, 1}, a{0, 0, 0, 1, 0, 1};
    auto d = md.boundary_decompose(md.degree(k));
    CHECK(d.boundary == ExtDualVec{0, -1, 2});
    CHECK(d.height == 1);
    auto e = md.boundary_decompose(S_GENS[2]);
    CHECK(e.boundary == S_GENS[2]);
    CHECK(e.height == 0);
    auto r = md.boundary_decompose(R_STAR * Int(3));
    CHECK(r.boundary == ExtDualVec{0, 0, 0});
    CHECK(r.height == 3);
    CHECK_THROWS_AS(md.boundary_decompose({0, -1, 0}), PreconditionError);

    CHECK(partial(md, k) == MultiIndex{0, 0, 0, 0, 1, 0});
    CHECK(partial(md, add(a, k)) == MultiIndex{0, 0, 0, 0, 3, 0});
    CHECK(partial(md, add(partial(md, k), a)) == MultiIndex{0, 0, 0, 0, 3, 0});
    for (std::size_t j = 0; j < 6; ++j) {
        MultiIndex u(6, 0);
        u[j] = 1;
        CHECK(md.rep(S_GENS[j]) == u);
        CHECK(eta_vec(md, md.polygon(), u) == 0);
    }
    CHECK(eta_vec(md, md.polygon(), k) == 1);
    ExtDualVec bd = md.boundary_decompose(md.degree(add(a, k))).boundary;
    CHECK(md.rep(bd) == md.rep(bd));
    CHECK_THROWS_AS(md.rep(md.degree(add(a, k))), PreconditionError);
}

TEST_CASE("chi monomials") {
    auto md = MonoidData::with_generating_set(tri(3, 2), S_GENS);
    auto c = chi(md, R_STAR);
    CHECK(c.x == MultiIndex(6, 0));
    CHECK(c.u == 1);
    ExtDualVec m{0, -2, 3};
    auto c1 = chi(md, md.degree({0, 1, 0, 0, 0, 1}) - m);
    CHECK(c1.x == MultiIndex{0, 0, 1, 0, 0, 0});
    CHECK(c1.u == 0);
    auto c2 = chi(md, md.degree({0, 1, 0, 1, 0, 2}) - m);
    CHECK(c2.x == MultiIndex{0, 0, 0, 0, 1, 0});
    CHECK(c2.u == 2);
}

TEST_CASE("ideal generators and relations") {
    auto md = MonoidData::with_generating_set(tri(3, 2), S_GENS);
    MultiIndex k{0, 1, 0, 0, 0, 1}, a{0, 0, 0, 1, 0, 1};
    CHECK(f_k(md, k).str() == "x2*x6 - u*x5");
    CHECK(f_k(md, add(a, k)).str() == "x2*x4*x6^2 - u*x5^3");
    CHECK(f_k(md, add(partial(md, k), a)).str() == "x4*x5*x6 - x5^3");
    CHECK(f_k(md, {0, 0, 1, 0, 0, 0}).is_zero());
    auto r = r_ak(md, a, k);
    CHECK(r.valid());
    REQUIRE(r.combination.size() == 3);
    CHECK(r.combination[1].coeff.str() == "-x4*x6");
    CHECK(r.combination[2].coeff.str() == "-u");
    CHECK(r_ak(md, MultiIndex(6, 0), k).valid());
    CHECK(f_k(md, k).homogeneous_degree() == to_degree(md.degree(k)));
}

TEST_CASE("relations vanish on the corpus") {
    std::vector<MonoidData> corpus{MonoidData::hilbert_basis(p29()), MonoidData::hilbert_basis(tri(3, 2)),
                                   MonoidData::hilbert_basis(tri(4, 5))};
    for (const auto& md : corpus) {
        auto idx = multi_indices(md.rank(), 2);
        for (const auto& a : idx)
            for (const auto& k : idx) {
                auto r = r_ak(md, a, k);
                CHECK(r.valid());
                CHECK(r.expansion.is_zero());
            }
    }
}

TEST_CASE("multi-index enumeration") {
    CHECK(multi_indices(3, 0).size() == 1);
    CHECK(multi_indices(3, 2).size() == 10);
    CHECK(multi_indices(6, 3).size() == 84);
}

TEST_CASE("hilbert basis completeness and minimality against a scan") {
    std::mt19937 rng(5);
    std::vector<Polygon> polys{p29(), tri(3, 2), tri(4, 5), Polygon::hull({{0, 0}, {1, 0}, {1, 1}, {0, 1}})};
    while (polys.size() < 24) polys.push_back(random_polygon(rng, 5, 4));
    for (const auto& P : polys) {
        auto H = MonoidData::hilbert_basis(P);
        const long B = 6;
        CHECK(generates(P, H.generators(), B));
        for (const auto& g : H.generators()) {
            CHECK(H.on_boundary(g));
            long reach = 0;
            for (const auto& v : P.vertices()) reach = std::max(reach, to_long(phi(g, v)));
            CHECK(irreducible(P, g, reach));
        }
        CHECK(monoid_box(P, B).size() == scan_box(P, B).size());
    }
}

TEST_CASE("rep tuples share the minimizing vertex") {
    std::mt19937 rng(6);
    for (int it = 0; it < 200; ++it) {
        Polygon P = random_polygon(rng, 6, 5);
        auto H = MonoidData::hilbert_basis(P);
        auto box = monoid_box(P, 5);
        std::uniform_int_distribution<std::size_t> pick(0, box.size() - 1);
        ExtDualVec s = H.boundary_decompose(box[pick(rng)]).boundary;
        MultiIndex b = H.rep(s);
        CHECK(H.degree(b) == s);
        CHECK(H.rep(s) == b);
        CHECK(eta_vec(H, P, b) == 0);
    }
}

TEST_CASE("refined generating sets") {
    auto H = MonoidData::hilbert_basis(tri(4, 5));
    auto R = H.refined({{0, 1}, {0, -1}});
    REQUIRE(R.rank() >= H.rank());
    for (std::size_t j = 0; j < H.rank(); ++j) CHECK(R.generators()[j] == H.generators()[j]);
    auto extra = std::vector<ExtDualVec>(R.generators().begin() + static_cast<long>(H.rank()), R.generators().end());
    CHECK(std::find(extra.begin(), extra.end(), ExtDualVec{0, -1, 5}) != extra.end());
    for (const auto& g : R.generators()) CHECK(R.on_boundary(g));
    CHECK(generates(R.polygon(), R.generators(), 6));

    auto same = H.refined({});
    CHECK(same.generators() == H.generators());
}
