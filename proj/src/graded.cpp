#include "latmut/graded.hpp"
#include "latmut/expr_parser.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace latmut {

std::optional<std::size_t> Ring::index(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return i;
    return std::nullopt;
}

GradedPoly GradedPoly::constant(RingPtr ring, const Rat& c) {
    GradedPoly p(ring);
    p.add_term(Monomial(ring->size(), 0), c);
    return p;
}

GradedPoly GradedPoly::variable(RingPtr ring, std::size_t i, int power) {
    if (i >= ring->size()) throw PreconditionError("variable index out of range");
    Monomial e(ring->size(), 0);
    e[i] = power;
    return monomial(ring, e);
}

GradedPoly GradedPoly::variable(RingPtr ring, const std::string& name, int power) {
    auto i = ring->index(name);
    if (!i) throw PreconditionError("unknown variable '" + name + "'");
    return variable(ring, *i, power);
}

GradedPoly GradedPoly::monomial(RingPtr ring, const Monomial& e, const Rat& c) {
    if (e.size() != ring->size()) throw PreconditionError("monomial length does not match the ring");
    GradedPoly p(ring);
    p.add_term(e, c);
    return p;
}

Rat GradedPoly::coeff(const Monomial& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

void GradedPoly::add_term(const Monomial& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void GradedPoly::check_ring(const GradedPoly& o) const {
    if (!ring_ || !o.ring_) return;
    if (ring_ != o.ring_ && !(*ring_ == *o.ring_)) throw PreconditionError("polynomials live in different rings");
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    check_ring(o);
    if (!ring_) ring_ = o.ring_;
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

GradedPoly GradedPoly::operator+(const GradedPoly& o) const {
    GradedPoly r = *this;
    r += o;
    return r;
}

GradedPoly GradedPoly::operator-(const GradedPoly& o) const {
    GradedPoly r = *this;
    r -= o;
    return r;
}

GradedPoly GradedPoly::operator-() const {
    GradedPoly r(ring_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

GradedPoly GradedPoly::operator*(const GradedPoly& o) const {
    check_ring(o);
    GradedPoly r(ring_ ? ring_ : o.ring_);
    Monomial e;
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    }
    return r;
}

GradedPoly GradedPoly::operator*(const Rat& c) const {
    GradedPoly r(ring_);
    if (c == 0) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

GradedPoly GradedPoly::pow(long k) const {
    if (k < 0) throw PreconditionError("negative power of a polynomial");
    GradedPoly r = constant(ring_, 1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Degree GradedPoly::degree_of(const Monomial& e) const {
    Degree d(ring_->degree_rank(), Int(0));
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        for (std::size_t j = 0; j < d.size(); ++j) d[j] += ring_->degrees[i][j] * e[i];
    }
    return d;
}

std::optional<Degree> GradedPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    Degree d = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_)
        if (degree_of(e) != d) return std::nullopt;
    return d;
}

bool GradedPoly::is_homogeneous_of(const Degree& d) const {
    for (const auto& [e, c] : terms_)
        if (degree_of(e) != d) return false;
    return true;
}

GradedPoly GradedPoly::substitute(std::size_t i, const GradedPoly& value) const {
    check_ring(value);
    GradedPoly r(ring_);
    std::map<int, GradedPoly> powers;
    for (const auto& [e, c] : terms_) {
        Monomial rest = e;
        int k = rest[i];
        rest[i] = 0;
        GradedPoly term = monomial(ring_, rest, c);
        if (k != 0) {
            auto it = powers.find(k);
            if (it == powers.end()) it = powers.emplace(k, value.pow(k)).first;
            term = term * it->second;
        }
        r += term;
    }
    return r;
}

GradedPoly GradedPoly::restrict_zero(const std::vector<std::size_t>& vars) const {
    GradedPoly r(ring_);
    for (const auto& [e, c] : terms_) {
        bool keep = true;
        for (auto v : vars)
            if (e[v] != 0) keep = false;
        if (keep) r.add_term(e, c);
    }
    return r;
}

bool GradedPoly::operator==(const GradedPoly& o) const {
    if (terms_ != o.terms_) return false;
    if (terms_.empty() || !ring_ || !o.ring_) return true;
    return ring_ == o.ring_ || *ring_ == *o.ring_;
}

std::string monomial_str(const Ring& ring, const Monomial& e) {
    std::vector<std::size_t> order = ring.print_order;
    if (order.empty()) {
        order.resize(ring.size());
        std::iota(order.begin(), order.end(), 0);
    }
    std::ostringstream os;
    bool first = true;
    for (auto i : order) {
        if (e[i] == 0) continue;
        if (!first) os << "*";
        os << ring.names[i];
        if (e[i] != 1) os << "^" << e[i];
        first = false;
    }
    return os.str();
}

std::string GradedPoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Monomial, Rat>> ts(terms_.begin(), terms_.end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
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
        std::string m = monomial_str(*ring_, e);
        if (m.empty()) os << to_string(a);
        else if (a == 1) os << m;
        else os << to_string(a) << "*" << m;
        lead = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const GradedPoly& p) {
    return os << p.str();
}

std::string degree_str(const Degree& d) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
    return os.str() + ")";
}

GradedPoly parse_graded(const std::string& text, RingPtr ring) {
    ExprParser<GradedPoly>::Hooks hooks{
        [ring](const std::string& n) {
            auto i = ring->index(n);
            if (!i) throw ParseError("unknown variable '" + n + "'");
            return GradedPoly::variable(ring, *i);
        },
        [ring](const Rat& c) { return GradedPoly::constant(ring, c); },
        [](const GradedPoly& b, long k) {
            if (k < 0) throw ParseError("negative exponent in a polynomial");
            return b.pow(k);
        }};
    return ExprParser<GradedPoly>(text, hooks).parse();
}

std::string index_str(const std::vector<long>& k) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
    return os.str() + ")";
}

RelationCert certify(std::vector<long> a, std::vector<long> k, std::vector<RelationTerm> combination) {
    RelationCert c;
    c.a = std::move(a);
    c.k = std::move(k);
    c.combination = std::move(combination);
    for (const auto& t : c.combination) c.expansion += t.coeff * t.value;
    return c;
}

std::optional<std::string> RelationCert::first_nonzero() const {
    if (expansion.is_zero()) return std::nullopt;
    const auto& [e, c] = *expansion.terms().begin();
    std::ostringstream os;
    os << to_string(c) << "*" << monomial_str(*expansion.ring(), e) << " of degree "
       << degree_str(expansion.degree_of(e));
    return os.str();
}

std::string RelationCert::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < combination.size(); ++i) {
        const auto& t = combination[i];
        std::string coeff = t.coeff.str();
        bool simple = t.coeff.size() == 1;
        if (i == 0) {
            if (coeff != "1") os << (simple ? coeff : "(" + coeff + ")") << "*";
        } else if (simple && coeff[0] == '-') {
            std::string body = coeff.substr(1);
            os << " - " << (body == "1" ? "" : body + "*");
        } else {
            os << " + " << (coeff == "1" ? "" : (simple ? coeff : "(" + coeff + ")") + "*");
        }
        os << (t.label.empty() ? "F" + index_str(t.index) : t.label);
    }
    return os.str();
}

}  // namespace latmut
