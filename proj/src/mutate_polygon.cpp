#include "latmut/geometry.hpp"
#include "latmut/laurent.hpp"

#include <map>

namespace latmut {

namespace {

// Witness polynomial: on every level line the lattice points of P carry the
// coefficients of a shifted power of (1 + chi^d).
std::optional<LaurentPoly> witness(const Polygon& P, const ExtDualVec& m, const LatticeVec& d, const Int& qlen) {
    std::map<Int, std::pair<LatticeVec, LatticeVec>> rows;
    auto param = [&](const LatticeVec& p) { return p.x * d.x + p.y * d.y; };
    for (const auto& p : P.lattice_points()) {
        Int i = phi(m, p);
        auto it = rows.find(i);
        if (it == rows.end()) {
            rows.emplace(i, std::make_pair(p, p));
            continue;
        }
        if (param(p) < param(it->second.first)) it->second.first = p;
        if (param(p) > param(it->second.second)) it->second.second = p;
    }
    LaurentPoly f;
    Int dd = d.x * d.x + d.y * d.y;
    for (const auto& [i, ends] : rows) {
        Int L = (param(ends.second) - param(ends.first)) / dd;
        if (i > 0 && L < i * qlen) return std::nullopt;
        f += LaurentPoly::binomial(d).pow(to_long(L)).shifted(ends.first);
    }
    return f;
}

// Direct shear of the two boundary chains.
Polygon shear(const Polygon& P, const ExtDualVec& m, const LatticeVec& q0, const LatticeVec& d, const Int& qlen) {
    std::vector<LatticeVec> pts;
    auto param = [&](const LatticeVec& p) { return p.x * d.x + p.y * d.y; };
    for (const auto& v : P.vertices()) {
        Int i = phi(m, v);
        auto s = slice(P, m, i);
        bool left = !s->direction || Rat(param(v)) <= s->p.x * Rat(d.x) + s->p.y * Rat(d.y);
        bool right = !s->direction || Rat(param(v)) >= s->q.x * Rat(d.x) + s->q.y * Rat(d.y);
        if (left) pts.push_back(v - q0 * i);
        if (right) pts.push_back(v - (q0 + d * qlen) * i);
    }
    return Polygon::hull(pts);
}

}  // namespace

Polygon mutate_polygon(const Polygon& P, const ExtDualVec& m, const Polygon& Q) {
    if (P.empty()) throw PreconditionError("mutation of an empty polygon");
    if (!is_deformation_pair(P, m, Q)) throw PreconditionError("not a deformation pair");
    LatticeVec q0 = Q.vertices().front();
    if (m.pi_M().is_zero()) return P.translated(-q0 * m.h);
    LatticeVec d = kernel_direction(m.pi_M());
    Int qlen = lattice_length(Q);
    auto f = witness(P, m, d, qlen);
    if (!f) return shear(P, m, q0, d, qlen);
    LaurentPoly g = LaurentPoly::monomial(q0);
    if (qlen > 0) g = LaurentPoly::binomial(d).pow(to_long(qlen)).shifted(q0);
    return newton(mutate(*f, m, g));
}

}  // namespace latmut
