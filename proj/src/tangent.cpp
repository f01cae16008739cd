#include "latmut/tangent.hpp"

namespace latmut {

namespace {

void require_nonradial(const ExtDualVec& m) {
    if (m.pi_M().is_zero()) throw PreconditionError("degree is a multiple of R*; use the radial formula");
}

}  // namespace

bool polygon_m_mutable(const Polygon& P, const ExtDualVec& m) {
    require_nonradial(m);
    return is_deformation_pair(P, m, canonical_segment(m));
}

long t1_pair(const Polygon& P, const ExtDualVec& m) {
    require_nonradial(m);
    if (max_phi(P, m) < 1) return 0;
    return polygon_m_mutable(P, m) ? 1 : 0;
}

long t1_X(const Polygon& P, const ExtDualVec& m) {
    require_nonradial(m);
    if (max_phi(P, m) < 2) return 0;
    return polygon_m_mutable(P, m) ? 1 : 0;
}

long edges_at_least(const Polygon& P, long k) {
    long c = 0;
    for (const auto& E : edge_data(P))
        if (E.length >= k) ++c;
    return c;
}

long t1_pair_radial(const Polygon& P, long k) {
    if (k < 1) throw PreconditionError("radial degree needs k >= 1");
    return std::max(edges_at_least(P, k) - 2, 0L);
}

long t1_X_radial(const Polygon& P, long k) {
    if (k < 1) throw PreconditionError("radial degree needs k >= 1");
    long l = edges_at_least(P, k);
    return std::max(k == 1 ? l - 3 : l - 2, 0L);
}

std::vector<T1Report> t1_degrees(const Polygon& P, long n_max, long k_max, long kR_max) {
    std::vector<T1Report> out;
    if (P.dim() < 2) throw PreconditionError("T1 tables need a two-dimensional polygon");
    for (const auto& E : edge_data(P)) {
        for (long n = 1; n <= n_max; ++n) {
            for (long k = 1; k <= k_max; ++k) {
                ExtDualVec m = R_STAR * Int(n) - E.s * Int(k);
                long p = t1_pair(P, m);
                if (p == 0) continue;
                T1Report r;
                r.degree = m;
                r.edge = E.index;
                r.n = n;
                r.k = k;
                r.dim_pair = p;
                r.dim_X = t1_X(P, m);
                out.push_back(r);
            }
        }
    }
    for (long k = 1; k <= kR_max; ++k) {
        long p = t1_pair_radial(P, k);
        if (p == 0) continue;
        T1Report r;
        r.degree = R_STAR * Int(k);
        r.radial = true;
        r.k = k;
        r.dim_pair = p;
        r.dim_X = t1_X_radial(P, k);
        out.push_back(r);
    }
    return out;
}

}  // namespace latmut
