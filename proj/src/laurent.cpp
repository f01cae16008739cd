#include "latmut/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace latmut {

LaurentPoly LaurentPoly::monomial(const LatticeVec& e, const Rat& c) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::binomial(const LatticeVec& d) {
    LaurentPoly p(1);
    p.add_term(d, 1);
    return p;
}

Rat LaurentPoly::coeff(const LatticeVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

std::vector<LatticeVec> LaurentPoly::support() const {
    std::vector<LatticeVec> out;
    out.reserve(terms_.size());
    for (const auto& [e, c] : terms_) out.push_back(e);
    return out;
}

void LaurentPoly::add_term(const LatticeVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
    LaurentPoly r;
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(long k) const {
    if (k < 0) throw PreconditionError("negative power of a Laurent polynomial");
    LaurentPoly r(1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

LaurentPoly LaurentPoly::shifted(const LatticeVec& t) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + t, c);
    return r;
}

LaurentPoly LaurentPoly::normalized_translate() const {
    if (terms_.empty()) return *this;
    return shifted(-terms_.begin()->first);
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    return std::lexicographical_compare(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                        [](const auto& a, const auto& b) {
                                            if (a.first != b.first) return a.first < b.first;
                                            return a.second < b.second;
                                        });
}

static void put_var(std::ostream& os, const char* name, const Int& e, bool& first) {
    if (e == 0) return;
    if (!first) os << "*";
    os << name;
    if (e != 1) os << "^" << e;
    first = false;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<LatticeVec, Rat>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        if (a.first.y != b.first.y) return a.first.y < b.first.y;
        return a.first.x < b.first.x;
    });
    std::ostringstream os;
    bool lead = true;
    for (const auto& [e, c] : ts) {
        Rat a = c;
        if (lead) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        if (a < 0) a = -a;
        bool constant = e.x == 0 && e.y == 0;
        bool first = true;
        if (a != 1 || constant) {
            os << to_string(a);
            first = false;
        }
        put_var(os, "x", e.x, first);
        put_var(os, "y", e.y, first);
        lead = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f) {
    return os << f.str();
}

Polygon newton(const LaurentPoly& f) {
    if (f.is_zero()) throw PreconditionError("Newton polygon of the zero polynomial");
    return Polygon::hull(f.support());
}

bool is_normalized(const LaurentPoly& f) {
    if (f.is_zero()) return false;
    Polygon P = newton(f);
    for (const auto& v : P.vertices())
        if (f.coeff(v) != 1) return false;
    return true;
}

std::map<Int, LaurentPoly> slices(const LaurentPoly& f, const ExtDualVec& m) {
    std::map<Int, LaurentPoly> out;
    for (const auto& [e, c] : f.terms()) out[phi(m, e)].add_term(e, c);
    return out;
}

namespace {

using Uni = std::vector<Rat>;  // coefficients in increasing degree

// Splits h into univariate pieces along d: each piece is (lowest point, coefficients).
std::vector<std::pair<LatticeVec, Uni>> along_lines(const LaurentPoly& h, const LatticeVec& d) {
    std::map<Int, std::vector<std::pair<LatticeVec, Rat>>> lines;
    for (const auto& [e, c] : h.terms()) lines[cross(d, e)].push_back({e, c});
    Int dd = d.x * d.x + d.y * d.y;
    std::vector<std::pair<LatticeVec, Uni>> out;
    for (auto& [key, pts] : lines) {
        auto dot = [&](const LatticeVec& p) { return p.x * d.x + p.y * d.y; };
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return dot(a.first) < dot(b.first); });
        LatticeVec base = pts.front().first;
        Int top = (dot(pts.back().first) - dot(base)) / dd;
        Uni u(to_long(top) + 1, Rat(0));
        for (const auto& [e, c] : pts) u[to_long((dot(e) - dot(base)) / dd)] = c;
        out.push_back({base, u});
    }
    return out;
}

std::optional<Uni> uni_divide(const Uni& num, const Uni& den) {
    if (num.size() < den.size()) return std::nullopt;
    Uni r = num;
    Uni q(num.size() - den.size() + 1, Rat(0));
    const Rat& lead = den.back();
    for (std::size_t k = q.size(); k-- > 0;) {
        Rat c = r[k + den.size() - 1] / lead;
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < den.size(); ++j) r[k + j] -= c * den[j];
    }
    for (const auto& c : r)
        if (c != 0) return std::nullopt;
    return q;
}

Uni uni_mul(const Uni& a, const Uni& b) {
    Uni r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

}  // namespace

std::optional<LaurentPoly> divides_power(const LaurentPoly& h, const LaurentPoly& g, long i) {
    if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
    if (i < 0) throw PreconditionError("negative exponent in divides_power");
    if (i == 0 || h.is_zero()) return h;
    Polygon G = newton(g);
    if (G.dim() == 2) throw PreconditionError("divisor must be supported on a line");
    if (G.dim() == 0) {
        const auto& [e, c] = *g.terms().begin();
        LaurentPoly q;
        Rat ci = 1;
        for (long k = 0; k < i; ++k) ci *= c;
        for (const auto& [he, hc] : h.terms()) q.add_term(he - e * Int(i), hc / ci);
        return q;
    }
    LatticeVec d = primitive(G.vertices()[1] - G.vertices()[0]);
    auto gl = along_lines(g, d);
    const auto& [gbase, gu] = gl.front();
    Uni gpow{Rat(1)};
    for (long k = 0; k < i; ++k) gpow = uni_mul(gpow, gu);
    LaurentPoly q;
    for (const auto& [base, u] : along_lines(h, d)) {
        auto qu = uni_divide(u, gpow);
        if (!qu) return std::nullopt;
        LatticeVec start = base - gbase * Int(i);
        for (std::size_t k = 0; k < qu->size(); ++k) q.add_term(start + d * Int(k), (*qu)[k]);
    }
    return q;
}

static void check_witness_line(const ExtDualVec& m, const LaurentPoly& g) {
    if (g.is_zero()) throw PreconditionError("witness polynomial is zero");
    for (const auto& e : g.support())
        if (pair(m.pi_M(), e) != 0)
            throw PreconditionError("Newton polygon of g is not contained in the kernel of pi_M(m)");
}

bool is_mg_mutable(const LaurentPoly& f, const ExtDualVec& m, const LaurentPoly& g) {
    check_witness_line(m, g);
    for (const auto& [i, fi] : slices(f, m)) {
        if (i < 1) continue;
        if (!divides_power(fi, g, to_long(i))) return false;
    }
    return true;
}

LaurentPoly mutate(const LaurentPoly& f, const ExtDualVec& m, const LaurentPoly& g) {
    check_witness_line(m, g);
    LaurentPoly out;
    for (const auto& [i, fi] : slices(f, m)) {
        long k = to_long(i);
        if (k > 0) {
            auto q = divides_power(fi, g, k);
            if (!q) throw PreconditionError("polynomial is not mutable: slice " + std::to_string(k) + " is not divisible");
            out += *q;
        } else if (k < 0) {
            out += fi * g.pow(-k);
        } else {
            out += fi;
        }
    }
    if (is_normalized(f) && !is_normalized(out))
        throw std::logic_error("mutation of a normalized polynomial is not normalized");
    return out;
}

LaurentPoly canonical_witness(const ExtDualVec& m) {
    return LaurentPoly::binomial(kernel_direction(m.pi_M()));
}

std::optional<MutableDegree> is_m_mutable(const LaurentPoly& f, const ExtDualVec& m) {
    if (m.pi_M().is_zero()) throw PreconditionError("m-mutability is undefined for multiples of R*");
    LaurentPoly g = canonical_witness(m);
    if (!is_mg_mutable(f, m, g)) return std::nullopt;
    MutableDegree md;
    md.m = m;
    md.g = g;
    return md;
}

ExtDualVec psi(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& r) {
    if (cross(r.pi_M(), m.pi_M()) != 0) return r + m * eta(Q, -r.pi_M());
    return r - m;
}

ExtDualVec psi(const ExtDualVec& m, const LaurentPoly& g, const ExtDualVec& r) {
    Polygon Q = newton(g);
    if (Q.dim() != 1 || lattice_length(Q) != 1)
        throw PreconditionError("psi needs a witness whose Newton polygon is a segment of length 1");
    check_witness_line(m, g);
    return psi(m, Q, r);
}

ExtDualVec psi_ext(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& r) {
    if (r == m) return -m;
    return psi(m, Q, r);
}

ExtDualVec xi(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& h) {
    return h - m * eta(Q, h.pi_M());
}

MutableDegreeSet mutable_degrees(const LaurentPoly& f, long n_max, long k_max) {
    MutableDegreeSet out;
    out.n_max = n_max;
    out.k_max = k_max;
    if (f.is_zero()) return out;
    for (const auto& E : boundary_edges(newton(f))) {
        for (long k = 1; k <= k_max; ++k) {
            for (long n = 1; n <= n_max; ++n) {
                ExtDualVec m = R_STAR * Int(n) - E.s * Int(k);
                auto rec = is_m_mutable(f, m);
                // divisibility by g^(i+1) implies divisibility by g^i, so mutability is monotone in n
                if (!rec) break;
                rec->edge = E;
                rec->n = n;
                rec->k = k;
                out.degrees.push_back(*rec);
            }
        }
    }
    std::stable_sort(out.degrees.begin(), out.degrees.end(), [](const auto& a, const auto& b) {
        if (a.edge->index != b.edge->index) return a.edge->index < b.edge->index;
        if (a.n != b.n) return a.n < b.n;
        return a.k < b.k;
    });
    return out;
}

long n_E(const LaurentPoly& f, const EdgeData& E, long n_cap) {
    if (n_cap < 0) n_cap = to_long(E.length);
    long best = 0;
    for (long n = 1; n <= n_cap; ++n) {
        if (!is_m_mutable(f, R_STAR * Int(n) - E.s)) break;
        best = n;
    }
    return best;
}

std::pair<LaurentPoly, std::vector<TraceStep>> compose_mutations(const LaurentPoly& f,
                                                                 const std::vector<MutationStep>& steps) {
    std::vector<TraceStep> trace;
    std::vector<ExtDualVec> pending;
    for (const auto& s : steps) pending.push_back(s.m);
    LaurentPoly cur = f;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        ExtDualVec m = pending[j];
        LaurentPoly g = steps[j].g ? *steps[j].g : canonical_witness(m);
        if (!is_mg_mutable(cur, m, g)) {
            std::ostringstream os;
            os << "step " << j << ": polynomial is not mutable at degree " << m;
            throw PreconditionError(os.str());
        }
        cur = mutate(cur, m, g);
        trace.push_back({m, g, cur});
        Polygon Q = newton(g);
        for (std::size_t k = j + 1; k < steps.size(); ++k) {
            if (Q.dim() == 1 && lattice_length(Q) == 1)
                pending[k] = psi_ext(m, Q, pending[k]);
        }
    }
    return {cur, trace};
}

}  // namespace latmut
