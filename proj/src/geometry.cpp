#include "latmut/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace latmut {

std::ostream& operator<<(std::ostream& os, const LatticeVec& v) {
    return os << "(" << v.x << "," << v.y << ")";
}

std::ostream& operator<<(std::ostream& os, const DualVec& v) {
    return os << "(" << v.a << "," << v.b << ")";
}

std::ostream& operator<<(std::ostream& os, const ExtDualVec& v) {
    return os << "(" << v.a << "," << v.b << "," << v.h << ")";
}

std::ostream& operator<<(std::ostream& os, const Polygon& p) {
    os << "conv{";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p.vertices()[i];
    return os << "}";
}

Polygon Polygon::hull(std::vector<LatticeVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    Polygon P;
    if (pts.size() <= 1) {
        P.vs_ = pts;
        return P;
    }
    // Andrew's monotone chain, dropping collinear points.
    std::vector<LatticeVec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    P.vs_ = h;
    return P;
}

Polygon Polygon::from_vertices(std::vector<LatticeVec> vs) {
    if (vs.empty()) throw PreconditionError("polygon needs at least one vertex");
    Polygon H = hull(vs);
    if (H.size() != vs.size())
        throw PreconditionError("vertices are not in strictly convex position");
    auto it = std::find(vs.begin(), vs.end(), H.vs_.front());
    std::rotate(vs.begin(), it, vs.end());
    if (vs != H.vs_) throw PreconditionError("vertices are not in counter-clockwise order");
    return H;
}

int Polygon::dim() const {
    if (vs_.empty()) return -1;
    if (vs_.size() == 1) return 0;
    if (vs_.size() == 2) return 1;
    return 2;
}

Polygon Polygon::translated(const LatticeVec& t) const {
    Polygon P;
    P.vs_.reserve(vs_.size());
    for (const auto& v : vs_) P.vs_.push_back(v + t);
    return P;
}

Polygon Polygon::normalized() const {
    if (vs_.empty()) return *this;
    return translated(-vs_.front());
}

bool Polygon::contains(const LatticeVec& p) const {
    if (vs_.empty()) return false;
    if (vs_.size() == 1) return p == vs_[0];
    if (vs_.size() == 2) {
        const auto &a = vs_[0], &b = vs_[1];
        if (cross(b - a, p - a) != 0) return false;
        return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
               std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
    }
    for (std::size_t i = 0; i < vs_.size(); ++i) {
        const auto& a = vs_[i];
        const auto& b = vs_[(i + 1) % vs_.size()];
        if (cross(b - a, p - a) < 0) return false;
    }
    return true;
}

std::vector<LatticeVec> Polygon::lattice_points() const {
    std::vector<LatticeVec> out;
    if (vs_.empty()) return out;
    Int x0 = vs_[0].x, x1 = vs_[0].x, y0 = vs_[0].y, y1 = vs_[0].y;
    for (const auto& v : vs_) {
        x0 = std::min(x0, v.x);
        x1 = std::max(x1, v.x);
        y0 = std::min(y0, v.y);
        y1 = std::max(y1, v.y);
    }
    for (Int x = x0; x <= x1; ++x)
        for (Int y = y0; y <= y1; ++y)
            if (contains({x, y})) out.push_back({x, y});
    return out;
}

bool Polygon::operator<(const Polygon& o) const {
    return std::lexicographical_compare(vs_.begin(), vs_.end(), o.vs_.begin(), o.vs_.end());
}

Int eta(const Polygon& Q, const DualVec& c) {
    if (Q.empty()) throw PreconditionError("eta of an empty polygon");
    Int lo = pair(c, Q.vertices()[0]);
    for (const auto& v : Q.vertices()) lo = std::min(lo, pair(c, v));
    return -lo;
}

Int phi(const ExtDualVec& m, const LatticeVec& n) {
    return pair(m.pi_M(), n) + m.h;
}

Int max_phi(const Polygon& P, const ExtDualVec& m) {
    return eta(P, -m.pi_M()) + m.h;
}

Int min_phi(const Polygon& P, const ExtDualVec& m) {
    return -eta(P, m.pi_M()) + m.h;
}

LatticeVec primitive(const LatticeVec& v) {
    Int g = gcd(v.x, v.y);
    if (g == 0) return v;
    return {v.x / g, v.y / g};
}

LatticeVec kernel_direction(const DualVec& c) {
    if (c.is_zero()) throw PreconditionError("kernel direction of the zero functional");
    LatticeVec d = primitive({-c.b, c.a});
    if (d.x < 0 || (d.x == 0 && d.y < 0)) d = -d;
    return d;
}

Polygon canonical_segment(const ExtDualVec& m) {
    return Polygon::segment({0, 0}, kernel_direction(m.pi_M()));
}

static EdgeData make_edge(std::size_t idx, const LatticeVec& a, const LatticeVec& b) {
    EdgeData e;
    e.index = idx;
    e.from = a;
    e.to = b;
    LatticeVec v = b - a;
    e.length = gcd(v.x, v.y);
    e.direction = {v.x / e.length, v.y / e.length};
    e.normal = {-e.direction.y, e.direction.x};
    e.s = ext(e.normal, -pair(e.normal, a));
    e.a = {e.direction.x, e.direction.y, 0};
    return e;
}

std::vector<EdgeData> edge_data(const Polygon& P) {
    if (P.dim() != 2) throw PreconditionError("edge data needs a 2-dimensional polygon");
    return boundary_edges(P);
}

std::vector<EdgeData> boundary_edges(const Polygon& P) {
    std::vector<EdgeData> out;
    const auto& vs = P.vertices();
    if (vs.size() < 2) return out;
    if (vs.size() == 2) {
        out.push_back(make_edge(0, vs[0], vs[1]));
        out.push_back(make_edge(1, vs[1], vs[0]));
        return out;
    }
    for (std::size_t i = 0; i < vs.size(); ++i) out.push_back(make_edge(i, vs[i], vs[(i + 1) % vs.size()]));
    return out;
}

std::optional<RationalSegment> slice(const Polygon& P, const ExtDualVec& m, const Int& i) {
    DualVec c = m.pi_M();
    if (c.is_zero()) throw PreconditionError("slice along a functional with zero linear part");
    if (P.empty()) return std::nullopt;
    Int t = i - m.h;
    const auto& vs = P.vertices();
    std::vector<RatPoint> pts;
    for (std::size_t k = 0; k < vs.size(); ++k) {
        Int wk = pair(c, vs[k]);
        if (wk == t) pts.push_back({Rat(vs[k].x), Rat(vs[k].y)});
        if (vs.size() == 1 || (vs.size() == 2 && k == 1)) continue;
        const auto& nb = vs[(k + 1) % vs.size()];
        Int wn = pair(c, nb);
        if ((wk - t) * (wn - t) < 0) {
            Rat lam = make_rat(t - wk, wn - wk);
            pts.push_back({Rat(vs[k].x) + lam * Rat(nb.x - vs[k].x), Rat(vs[k].y) + lam * Rat(nb.y - vs[k].y)});
        }
    }
    if (pts.empty()) return std::nullopt;
    LatticeVec d = kernel_direction(c);
    auto param = [&](const RatPoint& p) { return p.x * Rat(d.x) + p.y * Rat(d.y); };
    auto lo = pts[0], hi = pts[0];
    for (const auto& p : pts) {
        if (param(p) < param(lo)) lo = p;
        if (param(p) > param(hi)) hi = p;
    }
    RationalSegment s{lo, hi, std::nullopt};
    if (!(lo == hi)) s.direction = d;
    return s;
}

Rat lattice_length(const RationalSegment& s) {
    if (!s.direction) return 0;
    const auto& d = *s.direction;
    Rat dd = Rat(d.x * d.x + d.y * d.y);
    return ((s.q.x - s.p.x) * Rat(d.x) + (s.q.y - s.p.y) * Rat(d.y)) / dd;
}

Int lattice_length(const Polygon& seg) {
    if (seg.dim() == 0) return 0;
    if (seg.dim() != 1) throw PreconditionError("lattice length of a non-segment");
    LatticeVec v = seg.vertices()[1] - seg.vertices()[0];
    return gcd(v.x, v.y);
}

bool is_deformation_pair(const Polygon& P, const ExtDualVec& m, const Polygon& Q) {
    if (Q.dim() < 0 || Q.dim() > 1) throw PreconditionError("Q must be a lattice point or segment");
    DualVec c = m.pi_M();
    for (const auto& q : Q.vertices())
        if (pair(c, q) != 0) throw PreconditionError("Q is not contained in the kernel of pi_M(m)");
    if (Q.dim() == 0) return true;
    if (c.is_zero()) throw PreconditionError("segment pairs need a degree with nonzero linear part");
    Int qlen = lattice_length(Q);
    Int top = max_phi(P, m);
    for (Int i = 1; i <= top; ++i) {
        auto s = slice(P, m, i);
        if (!s) continue;
        if (!s->direction) return false;
        if (lattice_length(*s) < Rat(i * qlen)) return false;
    }
    return true;
}

Polygon minkowski_sum(const Polygon& A, const Polygon& B) {
    std::vector<LatticeVec> pts;
    for (const auto& a : A.vertices())
        for (const auto& b : B.vertices()) pts.push_back(a + b);
    return Polygon::hull(pts);
}

bool equal_up_to_translation(const Polygon& A, const Polygon& B) {
    return A.normalized() == B.normalized();
}

std::vector<std::vector<Polygon>> minkowski_decompositions(const Polygon& P, int parts) {
    if (parts < 1) throw PreconditionError("parts must be positive");
    std::vector<std::vector<Polygon>> out;
    Polygon origin = Polygon::point({0, 0});
    if (parts == 1 || P.dim() == 0) {
        std::vector<Polygon> t{P.normalized()};
        for (int j = 1; j < parts; ++j) t.push_back(origin);
        out.push_back(t);
        return out;
    }
    auto edges = boundary_edges(P);
    std::size_t ne = edges.size();
    std::vector<long> len(ne);
    for (std::size_t e = 0; e < ne; ++e) len[e] = to_long(edges[e].length);

    auto build = [&](const std::vector<long>& n) {
        std::vector<LatticeVec> pts{{0, 0}};
        LatticeVec cur{0, 0};
        for (std::size_t e = 0; e < ne; ++e) {
            cur = cur + edges[e].direction * Int(n[e]);
            pts.push_back(cur);
        }
        return Polygon::hull(pts).normalized();
    };
    auto closes = [&](const std::vector<long>& n) {
        LatticeVec sum{0, 0};
        for (std::size_t e = 0; e < ne; ++e) sum = sum + edges[e].direction * Int(n[e]);
        return sum == LatticeVec{0, 0};
    };

    std::set<std::vector<Polygon>> seen;
    std::vector<std::vector<long>> chosen;
    std::vector<long> remaining = len;
    std::function<void(int)> rec = [&](int j) {
        if (j == parts - 1) {
            std::vector<Polygon> tuple;
            for (const auto& n : chosen) tuple.push_back(build(n));
            tuple.push_back(build(remaining));
            std::sort(tuple.begin(), tuple.end());
            if (seen.insert(tuple).second) out.push_back(tuple);
            return;
        }
        std::vector<long> n(ne, 0);
        std::function<void(std::size_t)> pick = [&](std::size_t e) {
            if (e == ne) {
                if (!closes(n)) return;
                chosen.push_back(n);
                for (std::size_t k = 0; k < ne; ++k) remaining[k] -= n[k];
                rec(j + 1);
                for (std::size_t k = 0; k < ne; ++k) remaining[k] += n[k];
                chosen.pop_back();
                return;
            }
            for (long v = 0; v <= remaining[e]; ++v) {
                n[e] = v;
                pick(e + 1);
            }
            n[e] = 0;
        };
        pick(0);
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace latmut
