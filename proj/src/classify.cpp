#include "latmut/classify.hpp"

#include "latmut/tangent.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace latmut {

long perimeter(const Polygon& P) {
    long s = 0;
    for (const auto& E : boundary_edges(P)) s += to_long(E.length);
    return s;
}

const char* outcome_name(Outcome o) {
    switch (o) {
        case Outcome::Point: return "Point";
        case Outcome::Witness: return "Witness";
        case Outcome::BoundExceeded: return "BoundExceeded";
    }
    return "?";
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

void replay(const MutationTrace& trace) {
    LaurentPoly cur = trace.start;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        if (!is_mg_mutable(cur, s.m, s.g) || mutate(cur, s.m, s.g) != s.result)
            throw PreconditionError("trace step " + std::to_string(i) + " does not replay");
        cur = s.result;
    }
}

namespace {

long max_edge_length(const Polygon& P) {
    long best = 0;
    for (const auto& E : boundary_edges(P)) best = std::max(best, to_long(E.length));
    return best;
}

struct Move {
    ExtDualVec m;
    LaurentPoly g;
    LaurentPoly result;
};

std::vector<Move> moves(const LaurentPoly& f, long n_max, long k_max, bool both_signs) {
    Polygon P = newton(f);
    long cap = max_edge_length(P);
    if (n_max <= 0) n_max = cap;
    if (k_max <= 0) k_max = cap;
    std::vector<Move> out;
    for (const auto& d : mutable_degrees(f, n_max, k_max).degrees) {
        out.push_back({d.m, d.g, mutate(f, d.m, d.g)});
        if (both_signs) {
            LaurentPoly g2 = LaurentPoly::binomial(-kernel_direction(d.m.pi_M()));
            out.push_back({d.m, g2, mutate(f, d.m, g2)});
        }
    }
    return out;
}

// For every edge and every k <= k_max, the mutation at the largest mutable n.
std::vector<Move> edge_moves(const LaurentPoly& f, long k_max) {
    long cap = max_edge_length(newton(f));
    std::map<std::pair<std::size_t, long>, MutableDegree> top;
    for (const auto& d : mutable_degrees(f, cap, k_max).degrees) top[{d.edge->index, to_long(d.k)}] = d;
    std::vector<Move> out;
    for (const auto& [key, d] : top) out.push_back({d.m, d.g, mutate(f, d.m, d.g)});
    return out;
}

LaurentPoly key_of(const LaurentPoly& f) { return f.normalized_translate(); }

LatticeVec anchor(const LaurentPoly& f) { return newton(f).vertices().front(); }

struct SearchHit {
    std::vector<TraceStep> path;
    long perimeter;
};

// Breadth-first search over compositions of the moves m^E = n_E R* - s_E for one that lowers the perimeter.
std::optional<SearchHit> composition_search(const LaurentPoly& start, long depth, long node_budget,
                                            bool& truncated) {
    long p0 = perimeter(newton(start));
    std::set<LaurentPoly> seen{key_of(start)};
    std::vector<std::pair<LaurentPoly, std::vector<TraceStep>>> frontier{{start, {}}};
    for (long level = 1; level <= depth; ++level) {
        std::vector<std::pair<LaurentPoly, std::vector<TraceStep>>> next;
        std::optional<SearchHit> best;
        for (const auto& [poly, path] : frontier) {
            for (auto& mv : edge_moves(poly, 1)) {
                if (!seen.insert(key_of(mv.result)).second) continue;
                if (static_cast<long>(seen.size()) > node_budget) {
                    truncated = true;
                    return best;
                }
                auto p = path;
                p.push_back({mv.m, mv.g, mv.result});
                long per = perimeter(newton(mv.result));
                if (per < p0 && (!best || per < best->perimeter)) best = SearchHit{p, per};
                next.push_back({mv.result, std::move(p)});
            }
        }
        if (best) return best;
        frontier = std::move(next);
    }
    return std::nullopt;
}

}  // namespace

MutableDegreeSet witness_degrees(const LaurentPoly& g, long k_cap) {
    long cap = max_edge_length(newton(g));
    if (k_cap <= 0) k_cap = cap;
    return mutable_degrees(g, cap, k_cap);
}

std::optional<LatticeVec> witness_point(const LaurentPoly& g, long k_cap) {
    if (!is_normalized(g)) throw PreconditionError("witness search needs a normalized polynomial");
    auto degs = witness_degrees(g, k_cap).degrees;
    for (const auto& v : newton(g).lattice_points()) {
        bool ok = std::all_of(degs.begin(), degs.end(), [&](const MutableDegree& d) { return phi(d.m, v) <= 0; });
        if (ok) return v;
    }
    return std::nullopt;
}

MutationTrace reduce(const LaurentPoly& f, const ReduceOptions& opt) {
    if (!is_normalized(f)) throw PreconditionError("reduce needs a normalized polynomial");
    MutationTrace tr;
    tr.start = f;
    LaurentPoly cur = f;
    while (true) {
        Polygon P = newton(cur);
        long cap = opt.k_cap > 0 ? opt.k_cap : max_edge_length(P);
        tr.k_cap = std::max(tr.k_cap, cap);
        if (P.size() == 1) {
            tr.outcome = Outcome::Point;
            return tr;
        }
        if ((tr.witness = witness_point(cur, cap))) {
            tr.outcome = Outcome::Witness;
            return tr;
        }
        if (static_cast<long>(tr.steps.size()) >= opt.step_budget) {
            tr.outcome = Outcome::BoundExceeded;
            return tr;
        }
        long p0 = perimeter(P);
        std::optional<Move> best;
        long best_per = p0;
        for (auto& mv : edge_moves(cur, cap)) {
            long per = perimeter(newton(mv.result));
            if (per < best_per) {
                best_per = per;
                best = mv;
            }
        }
        if (best) {
            tr.steps.push_back({best->m, best->g, best->result});
            cur = best->result;
            continue;
        }
        bool truncated = false;
        auto hit = opt.depth >= 2 ? composition_search(cur, opt.depth, opt.node_budget, truncated) : std::nullopt;
        if (hit) {
            for (auto& s : hit->path) tr.steps.push_back(s);
            cur = tr.steps.back().result;
            continue;
        }
        tr.outcome = Outcome::BoundExceeded;
        return tr;
    }
}

ZeroMutableResult is_zero_mutable(const LaurentPoly& f, const ReduceOptions& opt) {
    ZeroMutableResult r;
    r.trace = reduce(f, opt);
    switch (r.trace.outcome) {
        case Outcome::Point: r.verdict = Verdict::Yes; break;
        case Outcome::Witness: r.verdict = Verdict::No; break;
        case Outcome::BoundExceeded: r.verdict = Verdict::Unknown; break;
    }
    return r;
}

FeasibilityProblem::FeasibilityProblem(Polygon P) : P_(std::move(P)), pts_(P_.lattice_points()) {}

void FeasibilityProblem::require_mutable(const ExtDualVec& m) {
    if (m.pi_M().is_zero()) throw PreconditionError("m-mutability is undefined for multiples of R*");
    LatticeVec d = kernel_direction(m.pi_M());
    Int dd = d.x * d.x + d.y * d.y;
    std::map<Int, std::vector<std::size_t>> levels;
    for (std::size_t i = 0; i < pts_.size(); ++i) {
        Int l = phi(m, pts_[i]);
        if (l > 0) levels[l].push_back(i);
    }
    for (const auto& [lvl, idx] : levels) {
        auto dot = [&](std::size_t i) { return pts_[i].x * d.x + pts_[i].y * d.y; };
        Int base = dot(idx.front());
        for (auto i : idx) base = std::min(base, dot(i));
        long power = to_long(lvl);
        // h^(j)(-1) = 0 for j < power
        for (long j = 0; j < power; ++j) {
            std::vector<Rat> row(pts_.size(), Rat(0));
            for (auto i : idx) {
                Int p = (dot(i) - base) / dd;
                Int fall = 1;
                for (long t = 0; t < j; ++t) fall *= (p - t);
                row[i] = Rat(p % 2 == 0 ? fall : Int(-fall));
            }
            rows_.push_back(std::move(row));
        }
    }
}

std::optional<LaurentPoly> FeasibilityProblem::solve() const {
    std::vector<bool> is_vertex(pts_.size(), false);
    for (const auto& v : P_.vertices())
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (pts_[i] == v) is_vertex[i] = true;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (!is_vertex[i]) cols.push_back(i);

    std::vector<std::vector<Rat>> a;
    for (const auto& r : rows_) {
        std::vector<Rat> row;
        Rat rhs = 0;
        for (auto c : cols) row.push_back(r[c]);
        for (std::size_t i = 0; i < pts_.size(); ++i)
            if (is_vertex[i]) rhs -= r[i];
        row.push_back(rhs);
        a.push_back(std::move(row));
    }
    std::size_t n = cols.size();
    std::vector<long> pivot_of(n, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < n && rank < a.size(); ++c) {
        std::size_t p = rank;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[rank]);
        Rat inv = Rat(1) / a[rank][c];
        for (auto& x : a[rank]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            Rat fct = a[r][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= fct * a[rank][k];
        }
        pivot_of[c] = static_cast<long>(rank);
        ++rank;
    }
    for (std::size_t r = rank; r < a.size(); ++r)
        if (a[r][n] != 0) return std::nullopt;
    LaurentPoly g;
    for (std::size_t i = 0; i < pts_.size(); ++i)
        if (is_vertex[i]) g.add_term(pts_[i], 1);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of[c] >= 0) g.add_term(pts_[cols[c]], a[pivot_of[c]][n]);
    return g;
}

MaxMutableResult is_maximally_mutable(const LaurentPoly& f, long n_max, long k_max) {
    if (!is_normalized(f)) throw PreconditionError("maximal mutability needs a normalized polynomial");
    MaxMutableResult res;
    res.n_max = n_max;
    res.k_max = k_max;
    Polygon P = newton(f);
    for (const auto& d : mutable_degrees(f, n_max, k_max).degrees) res.degrees.push_back(d.m);
    if (P.dim() < 2) return res;
    std::set<ExtDualVec> have(res.degrees.begin(), res.degrees.end());
    for (const auto& E : edge_data(P))
        for (long n = 1; n <= n_max; ++n)
            for (long k = 1; k <= k_max; ++k) {
                ExtDualVec m = R_STAR * Int(n) - E.s * Int(k);
                if (!have.count(m) && polygon_m_mutable(P, m)) res.candidates.push_back(m);
            }
    for (const auto& m : res.candidates) {
        FeasibilityProblem fp(P);
        for (const auto& r : res.degrees) fp.require_mutable(r);
        fp.require_mutable(m);
        auto g = fp.solve();
        if (!g) continue;
        for (const auto& r : res.degrees)
            if (!is_m_mutable(*g, r)) throw std::logic_error("feasibility certificate fails to replay");
        if (!is_m_mutable(*g, m) || newton(*g) != P || !is_normalized(*g))
            throw std::logic_error("feasibility certificate fails to replay");
        res.maximal = false;
        res.extra = m;
        res.certificate = *g;
        return res;
    }
    return res;
}

PersistenceReport check_degree_persistence(const Polygon& P, const std::vector<ExtDualVec>& M,
                                           const std::vector<PolygonStep>& steps) {
    PersistenceReport rep;
    Polygon cur = P;
    std::vector<ExtDualVec> degs = M;
    auto check = [&](std::size_t stage) {
        rep.polygons.push_back(cur);
        rep.degrees.push_back(degs);
        if (!rep.consistent) return;
        for (const auto& m : degs) {
            if (m.pi_M().is_zero()) continue;
            if (!polygon_m_mutable(cur, m)) {
                rep.consistent = false;
                rep.failing_stage = stage;
                rep.failing_degree = m;
                return;
            }
        }
    };
    check(0);
    for (std::size_t i = 0; i < steps.size(); ++i) {
        const auto& s = steps[i];
        if (s.Q.dim() != 1 || lattice_length(s.Q) != 1 || !is_deformation_pair(cur, s.m, s.Q))
            throw PreconditionError("step " + std::to_string(i) + " is not a polygon mutation");
        cur = mutate_polygon(cur, s.m, s.Q);
        for (auto& r : degs) r = psi_ext(s.m, s.Q, r);
        check(i + 1);
    }
    return rep;
}

ExtDualVec translate_degree(const ExtDualVec& m, const LatticeVec& t) {
    return {m.a, m.b, m.h - pair(m.pi_M(), t)};
}

std::optional<std::vector<TraceStep>> mutation_equivalent(const LaurentPoly& f, const LaurentPoly& g,
                                                          const EquivalenceOptions& opt) {
    if (!is_normalized(f) || !is_normalized(g)) throw PreconditionError("equivalence search needs normalized polynomials");
    struct Node {
        LaurentPoly poly;
        std::optional<LaurentPoly> parent;  // key
        ExtDualVec m{};
        LaurentPoly g;
        long depth = 0;
    };
    using Side = std::map<LaurentPoly, Node>;
    Side sides[2];
    std::vector<LaurentPoly> frontier[2];
    for (int s = 0; s < 2; ++s) {
        const LaurentPoly& p = s == 0 ? f : g;
        sides[s][key_of(p)] = Node{p, std::nullopt, {}, {}, 0};
        frontier[s].push_back(key_of(p));
    }

    // Path from the root of a side to key, as steps on actual polynomials.
    auto path_to = [&](int s, const LaurentPoly& key) {
        std::vector<const Node*> chain;
        for (const Node* n = &sides[s].at(key); n; n = n->parent ? &sides[s].at(*n->parent) : nullptr)
            chain.push_back(n);
        std::reverse(chain.begin(), chain.end());
        return chain;
    };

    auto join = [&](const LaurentPoly& key) {
        std::vector<TraceStep> out;
        auto a = path_to(0, key);
        for (std::size_t i = 1; i < a.size(); ++i) out.push_back({a[i]->m, a[i]->g, a[i]->poly});
        auto b = path_to(1, key);
        LaurentPoly cur = a.back()->poly;
        LatticeVec t = anchor(cur) - anchor(b.back()->poly);
        for (std::size_t i = b.size() - 1; i >= 1; --i) {
            ExtDualVec m = translate_degree(-b[i]->m, t);
            LaurentPoly nxt = mutate(cur, m, b[i]->g);
            out.push_back({m, b[i]->g, nxt});
            cur = nxt;
        }
        if (key_of(cur) != key_of(g)) throw std::logic_error("equivalence trace does not reach the target");
        return out;
    };

    if (sides[1].count(key_of(f))) return join(key_of(f));
    long per_cap = opt.max_perimeter > 0 ? opt.max_perimeter
                                         : std::max(perimeter(newton(f)), perimeter(newton(g)));
    long total = 2;
    long depth[2] = {0, 0};
    while (depth[0] + depth[1] < opt.max_depth) {
        int s = frontier[0].size() <= frontier[1].size() ? 0 : 1;
        if (frontier[s].empty()) s = 1 - s;
        if (frontier[s].empty()) return std::nullopt;
        std::vector<LaurentPoly> next;
        for (const auto& key : frontier[s]) {
            Node cur = sides[s].at(key);
            for (auto& mv : moves(cur.poly, opt.n_max, opt.k_max, true)) {
                LaurentPoly k2 = key_of(mv.result);
                if (sides[s].count(k2) || perimeter(newton(mv.result)) > per_cap) continue;
                sides[s][k2] = Node{mv.result, key, mv.m, mv.g, cur.depth + 1};
                if (++total > opt.max_nodes) return std::nullopt;
                if (sides[1 - s].count(k2)) return join(k2);
                next.push_back(k2);
            }
        }
        frontier[s] = std::move(next);
        ++depth[s];
    }
    return std::nullopt;
}

}  // namespace latmut
