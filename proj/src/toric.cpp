#include "latmut/toric.hpp"
#include "latmut/laurent.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace latmut {

Degree to_degree(const ExtDualVec& s) {
    return {s.a, s.b, s.h};
}

namespace {

struct Vec3 {
    Int v[3];
};

Int det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a.v[0] * (b.v[1] * c.v[2] - b.v[2] * c.v[1]) - a.v[1] * (b.v[0] * c.v[2] - b.v[2] * c.v[0]) +
           a.v[2] * (b.v[0] * c.v[1] - b.v[1] * c.v[0]);
}

Vec3 cross3(const Vec3& a, const Vec3& b) {
    return {{a.v[1] * b.v[2] - a.v[2] * b.v[1], a.v[2] * b.v[0] - a.v[0] * b.v[2], a.v[0] * b.v[1] - a.v[1] * b.v[0]}};
}

Int dot3(const Vec3& a, const Vec3& b) {
    return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2];
}

Vec3 as3(const ExtDualVec& s) {
    return {{s.a, s.b, s.h}};
}

// Lattice points of the half-open parallelepiped spanned by u1, u2, u3.
std::vector<ExtDualVec> parallelepiped(Vec3 u1, Vec3 u2, Vec3 u3) {
    Int D = det3(u1, u2, u3);
    if (D < 0) {
        std::swap(u2, u3);
        D = -D;
    }
    // rows of the adjugate: lambda_i * D = <row_i, p>
    Vec3 r1 = cross3(u2, u3), r2 = cross3(u3, u1), r3 = cross3(u1, u2);
    Int lo[3], hi[3];
    for (int c = 0; c < 3; ++c) {
        lo[c] = hi[c] = 0;
        for (int mask = 1; mask < 8; ++mask) {
            Int s = 0;
            if (mask & 1) s += u1.v[c];
            if (mask & 2) s += u2.v[c];
            if (mask & 4) s += u3.v[c];
            lo[c] = std::min(lo[c], s);
            hi[c] = std::max(hi[c], s);
        }
    }
    std::vector<ExtDualVec> out;
    for (Int a = lo[0]; a <= hi[0]; ++a)
        for (Int b = lo[1]; b <= hi[1]; ++b)
            for (Int h = lo[2]; h <= hi[2]; ++h) {
                Vec3 p{{a, b, h}};
                Int l1 = dot3(r1, p), l2 = dot3(r2, p), l3 = dot3(r3, p);
                if (l1 >= 0 && l1 < D && l2 >= 0 && l2 < D && l3 >= 0 && l3 < D) out.push_back({a, b, h});
            }
    return out;
}

}  // namespace

bool MonoidData::contains(const ExtDualVec& s) const {
    for (const auto& v : P_.vertices())
        if (phi(s, v) < 0) return false;
    return true;
}

bool MonoidData::on_boundary(const ExtDualVec& s) const {
    return s.h == eta(P_, s.pi_M());
}

BoundaryDecomp MonoidData::boundary_decompose(const ExtDualVec& s) const {
    if (!contains(s)) {
        std::ostringstream os;
        os << s << " is not in the dual monoid";
        throw PreconditionError(os.str());
    }
    Int e = eta(P_, s.pi_M());
    return {ext(s.pi_M(), e), s.h - e};
}

ExtDualVec MonoidData::degree(const MultiIndex& k) const {
    if (k.size() != gens_.size()) throw PreconditionError("multi-index length does not match the generators");
    ExtDualVec s{0, 0, 0};
    for (std::size_t j = 0; j < k.size(); ++j)
        if (k[j]) s = s + gens_[j] * Int(k[j]);
    return s;
}

MultiIndex MonoidData::rep(const ExtDualVec& s) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->map.find(s);
        if (it != cache_->map.end()) return it->second;
    }
    MultiIndex b = compute_rep(s);
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->map.emplace(s, b).first->second;
}

MultiIndex MonoidData::compute_rep(const ExtDualVec& s) const {
    std::size_t r = gens_.size();
    MultiIndex b(r, 0);
    if (!contains(s) || !on_boundary(s)) {
        std::ostringstream os;
        os << s << " is not on the boundary of the dual monoid";
        throw PreconditionError(os.str());
    }
    DualVec c = s.pi_M();
    if (c.is_zero()) return b;

    // first minimizing vertex in CCW order
    const auto& vs = P_.vertices();
    LatticeVec v = vs[0];
    for (const auto& w : vs)
        if (pair(c, w) < pair(c, v)) v = w;

    std::vector<std::size_t> cand;
    for (std::size_t j = 0; j < r; ++j)
        if (phi(gens_[j], v) == 0 && !gens_[j].pi_M().is_zero()) cand.push_back(j);

    for (auto j : cand) {
        DualVec cj = gens_[j].pi_M();
        if (cross(cj, c) != 0) continue;
        Int num = cj.a != 0 ? c.a : c.b, den = cj.a != 0 ? cj.a : cj.b;
        if (num % den == 0 && num / den > 0) {
            b[j] = to_long(num / den);
            return b;
        }
    }

    std::vector<std::size_t> sorted = cand;
    std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t i, std::size_t j) {
        return cross(gens_[i].pi_M(), gens_[j].pi_M()) > 0;
    });
    for (std::size_t t = 0; t + 1 < sorted.size(); ++t) {
        DualVec ci = gens_[sorted[t]].pi_M(), cj = gens_[sorted[t + 1]].pi_M();
        Int D = cross(ci, cj);
        if (D <= 0) continue;
        if (cross(ci, c) < 0 || cross(c, cj) < 0) continue;
        Int bi = cross(c, cj), bj = cross(ci, c);
        if (bi % D != 0 || bj % D != 0) continue;
        b[sorted[t]] = to_long(bi / D);
        b[sorted[t + 1]] += to_long(bj / D);
        return b;
    }

    // exhaustive search in generator order, largest multiples first
    std::function<bool(std::size_t, const ExtDualVec&)> dfs = [&](std::size_t idx, const ExtDualVec& rem) {
        if (rem == ExtDualVec{0, 0, 0}) return true;
        if (idx == cand.size()) return false;
        const auto& g = gens_[cand[idx]];
        long top = 0;
        while (contains(rem - g * Int(top + 1))) ++top;
        for (long k = top; k >= 0; --k) {
            b[cand[idx]] = k;
            if (dfs(idx + 1, rem - g * Int(k))) return true;
        }
        b[cand[idx]] = 0;
        return false;
    };
    if (!dfs(0, s)) {
        std::ostringstream os;
        os << "no representation of " << s << " by the generators";
        throw PreconditionError(os.str());
    }
    return b;
}

RingPtr MonoidData::ring(const std::vector<GradedParam>& params, const std::string& x) const {
    auto R = std::make_shared<Ring>();
    std::size_t r = gens_.size();
    for (std::size_t j = 0; j < r; ++j) {
        R->names.push_back(x + std::to_string(j + 1));
        R->degrees.push_back(to_degree(gens_[j]));
    }
    R->names.push_back("u");
    R->degrees.push_back(to_degree(R_STAR));
    for (const auto& p : params) {
        if (R->index(p.name)) throw PreconditionError("duplicate variable name '" + p.name + "'");
        R->names.push_back(p.name);
        R->degrees.push_back(to_degree(p.degree));
    }
    for (std::size_t i = r + 1; i < R->names.size(); ++i) R->print_order.push_back(i);
    R->print_order.push_back(r);
    for (std::size_t j = 0; j < r; ++j) R->print_order.push_back(j);
    return R;
}

MonoidData MonoidData::hilbert_basis(const Polygon& P) {
    if (P.dim() != 2) throw PreconditionError("Hilbert basis needs a 2-dimensional polygon");
    MonoidData md;
    md.P_ = P;
    md.facets_ = edge_data(P);
    std::vector<Vec3> rays;
    for (const auto& E : md.facets_) rays.push_back(as3(E.s));

    std::set<ExtDualVec> cands;
    for (const auto& E : md.facets_) cands.insert(E.s);
    cands.insert(R_STAR);
    for (std::size_t i = 1; i + 1 < rays.size(); ++i)
        for (const auto& p : parallelepiped(rays[0], rays[i], rays[i + 1]))
            if (!(p == ExtDualVec{0, 0, 0})) cands.insert(p);

    for (const auto& x : cands) {
        if (x == R_STAR) continue;
        bool reducible = false;
        for (const auto& y : cands) {
            if (y == x) continue;
            ExtDualVec d = x - y;
            if (!(d == ExtDualVec{0, 0, 0}) && md.contains(d)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) md.gens_.push_back(x);
    }
    return md;
}

namespace {

// 0 for the half plane starting at angle 0 (inclusive), 1 for the other.
int half(const DualVec& c) {
    return (c.b > 0 || (c.b == 0 && c.a > 0)) ? 0 : 1;
}

bool angle_less(const DualVec& x, const DualVec& y) {
    int hx = half(x), hy = half(y);
    if (hx != hy) return hx < hy;
    return cross(x, y) > 0;
}

DualVec primitive_dual(const DualVec& c) {
    Int g = boost::multiprecision::gcd(c.a, c.b);
    if (g < 0) g = -g;
    return {c.a / g, c.b / g};
}

// Hilbert basis of the lattice cone spanned by primitive u, w with cross(u, w) > 0.
std::vector<DualVec> sector_basis(const DualVec& u, const DualVec& w) {
    Int D = cross(u, w);
    Int xs[4] = {0, u.a, w.a, u.a + w.a}, ys[4] = {0, u.b, w.b, u.b + w.b};
    Int x0 = *std::min_element(xs, xs + 4), x1 = *std::max_element(xs, xs + 4);
    Int y0 = *std::min_element(ys, ys + 4), y1 = *std::max_element(ys, ys + 4);
    auto in_cone = [&](const DualVec& c) { return cross(u, c) >= 0 && cross(c, w) >= 0; };
    std::vector<DualVec> pts;
    for (Int a = x0; a <= x1; ++a)
        for (Int b = y0; b <= y1; ++b) {
            DualVec c{a, b};
            if (c.is_zero() || !in_cone(c)) continue;
            if (cross(c, w) <= D && cross(u, c) <= D) pts.push_back(c);
        }
    std::vector<DualVec> out;
    for (const auto& x : pts) {
        bool reducible = false;
        for (const auto& y : pts) {
            DualVec d{x.a - y.a, x.b - y.b};
            if (!d.is_zero() && !(y == x) && in_cone(d)) {
                reducible = true;
                break;
            }
        }
        if (!reducible) out.push_back(x);
    }
    return out;
}

}  // namespace

MonoidData MonoidData::refined(const std::vector<DualVec>& rays) const {
    std::vector<DualVec> all;
    for (const auto& E : facets_) all.push_back(primitive_dual(E.normal));
    for (const auto& r : rays)
        if (!r.is_zero()) all.push_back(primitive_dual(r));
    std::sort(all.begin(), all.end(), angle_less);
    all.erase(std::unique(all.begin(), all.end()), all.end());

    MonoidData md = *this;
    md.cache_ = std::make_shared<RepCache>();
    std::set<ExtDualVec> have(gens_.begin(), gens_.end());
    for (std::size_t i = 0; i < all.size(); ++i) {
        const DualVec& u = all[i];
        const DualVec& w = all[(i + 1) % all.size()];
        for (const auto& c : sector_basis(u, w)) {
            ExtDualVec s = ext(c, eta(P_, c));
            if (have.insert(s).second) md.gens_.push_back(s);
        }
    }
    return md;
}

std::vector<ExtDualVec> monoid_box(const Polygon& P, long box) {
    if (P.dim() != 2) throw PreconditionError("monoid box needs a 2-dimensional polygon");
    const auto& vs = P.vertices();
    LatticeVec v0 = vs[0], e1 = vs[1] - v0, e2 = vs.back() - v0;
    Int det = e1.x * e2.y - e1.y * e2.x;
    std::vector<ExtDualVec> out;
    for (long al = -box; al <= box; ++al) {
        for (long be = -box; be <= box; ++be) {
            Int na = Int(al) * e2.y - Int(be) * e1.y;
            Int nb = Int(be) * e1.x - Int(al) * e2.x;
            if (na % det != 0 || nb % det != 0) continue;
            DualVec c{na / det, nb / det};
            for (long p0 = 0; p0 <= box; ++p0) {
                ExtDualVec s = ext(c, Int(p0) - pair(c, v0));
                bool ok = true;
                for (const auto& v : vs) {
                    Int val = phi(s, v);
                    if (val < 0 || val > box) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

MonoidData MonoidData::with_generating_set(const Polygon& P, std::vector<ExtDualVec> gens, long box) {
    if (P.dim() != 2) throw PreconditionError("generating sets need a 2-dimensional polygon");
    MonoidData md;
    md.P_ = P;
    md.facets_ = edge_data(P);
    for (const auto& g : gens) {
        if (!md.contains(g) || !md.on_boundary(g) || g == ExtDualVec{0, 0, 0}) {
            std::ostringstream os;
            os << "generator " << g << " is not a nonzero boundary element of the dual monoid";
            throw PreconditionError(os.str());
        }
    }
    md.gens_ = std::move(gens);

    std::vector<ExtDualVec> all = md.gens_;
    all.push_back(R_STAR);
    std::map<ExtDualVec, bool> memo;
    std::function<bool(const ExtDualVec&)> generated = [&](const ExtDualVec& s) -> bool {
        if (s == ExtDualVec{0, 0, 0}) return true;
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        bool ok = false;
        for (const auto& g : all) {
            ExtDualVec r = s - g;
            if (md.contains(r) && generated(r)) {
                ok = true;
                break;
            }
        }
        memo[s] = ok;
        return ok;
    };
    for (const auto& s : monoid_box(P, box)) {
        if (!generated(s)) {
            std::ostringstream os;
            os << "generators do not generate " << s << " (box " << box << ")";
            throw PreconditionError(os.str());
        }
    }
    return md;
}

Int eta_vec(const MonoidData& md, const Polygon& Q, const MultiIndex& k) {
    const auto& g = md.generators();
    if (k.size() != g.size()) throw PreconditionError("multi-index length does not match the generators");
    Int total = 0;
    DualVec sum{0, 0};
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (!k[j]) continue;
        DualVec c = g[j].pi_M() * Int(k[j]);
        total += eta(Q, c);
        sum = sum + c;
    }
    return total - eta(Q, sum);
}

ChiMonomial chi(const MonoidData& md, const ExtDualVec& s) {
    auto d = md.boundary_decompose(s);
    return {md.rep(d.boundary), d.height};
}

GradedPoly x_power(const RingPtr& ring, const MultiIndex& k) {
    Monomial e(ring->size(), 0);
    for (std::size_t j = 0; j < k.size(); ++j) e[j] = static_cast<int>(k[j]);
    return GradedPoly::monomial(ring, e);
}

GradedPoly chi_poly(const MonoidData& md, const RingPtr& ring, const ExtDualVec& s) {
    auto c = chi(md, s);
    Monomial e(ring->size(), 0);
    for (std::size_t j = 0; j < c.x.size(); ++j) e[j] = static_cast<int>(c.x[j]);
    e[md.rank()] = static_cast<int>(to_long(c.u));
    return GradedPoly::monomial(ring, e);
}

MultiIndex add(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw PreconditionError("multi-index lengths differ");
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

MultiIndex partial(const MonoidData& md, const MultiIndex& k) {
    return md.rep(md.boundary_decompose(md.degree(k)).boundary);
}

GradedPoly f_k(const MonoidData& md, const MultiIndex& k, const RingPtr& ring) {
    return x_power(ring, k) - chi_poly(md, ring, md.degree(k));
}

GradedPoly f_k(const MonoidData& md, const MultiIndex& k) {
    return f_k(md, k, md.ring());
}

RelationCert r_ak(const MonoidData& md, const MultiIndex& a, const MultiIndex& k) {
    RingPtr R = md.ring();
    MultiIndex ak = add(a, k);
    MultiIndex dka = add(partial(md, k), a);
    Int h = eta_vec(md, md.polygon(), k);
    GradedPoly one = GradedPoly::constant(R, 1);
    std::vector<RelationTerm> comb;
    comb.push_back({one, ak, "e" + index_str(ak), f_k(md, ak, R)});
    comb.push_back({-x_power(R, a), k, "e" + index_str(k), f_k(md, k, R)});
    comb.push_back({-GradedPoly::variable(R, md.rank(), static_cast<int>(to_long(h))), dka, "e" + index_str(dka),
                    f_k(md, dka, R)});
    return certify(a, k, std::move(comb));
}

MonoidData xi_transport(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, long box) {
    Polygon Pm = mutate_polygon(md.polygon(), m, Q);
    std::vector<ExtDualVec> gens;
    for (const auto& s : md.generators()) gens.push_back(xi(m, Q, s));
    return MonoidData::with_generating_set(Pm, gens, box);
}

std::optional<ExtDualVec> transport_compatibility_failure(const MonoidData& md, const MonoidData& mutated,
                                                          const ExtDualVec& m, const Polygon& Q, long box) {
    for (const auto& s : monoid_box(md.polygon(), box)) {
        MultiIndex b = md.rep(md.boundary_decompose(s).boundary);
        ExtDualVec image = xi(m, Q, s);
        if (!mutated.contains(image)) return s;
        ExtDualVec lhs = mutated.boundary_decompose(image).boundary;
        if (!(lhs == mutated.degree(b))) return s;
    }
    return std::nullopt;
}

std::vector<MultiIndex> multi_indices(std::size_t r, long total) {
    std::vector<MultiIndex> out;
    MultiIndex k(r, 0);
    std::function<void(std::size_t, long)> rec = [&](std::size_t i, long left) {
        if (i == r) {
            out.push_back(k);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            k[i] = v;
            rec(i + 1, left - v);
        }
        k[i] = 0;
    };
    rec(0, total);
    return out;
}

}  // namespace latmut
