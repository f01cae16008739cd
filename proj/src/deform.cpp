#include "latmut/deform.hpp"
#include "latmut/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace latmut {

namespace {

ExtDualVec from_degree(const Degree& d) {
    if (d.size() != 3) throw PreconditionError("expected a degree in M + Z");
    return {d[0], d[1], d[2]};
}

Degree sub(const Degree& a, const Degree& b) {
    Degree c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

GradedPoly monomial_with(const RingPtr& R, std::size_t var, long power) {
    return GradedPoly::variable(R, var, static_cast<int>(power));
}

}  // namespace

MonoidData adapted_monoid(const MonoidData& md, const Polygon& Q) {
    std::vector<DualVec> walls;
    for (const auto& E : boundary_edges(Q)) walls.push_back(E.normal);
    return walls.empty() ? md : md.refined(walls);
}

OneParamFamily::OneParamFamily(MonoidData md, ExtDualVec m, Polygon Q, std::string param)
    : md_(std::move(md)), m_(m), Q_(std::move(Q)) {
    if (!is_deformation_pair(md_.polygon(), m_, Q_)) {
        std::ostringstream os;
        os << "(" << m_ << ", " << Q_ << ") is not a deformation pair of " << md_.polygon();
        throw PreconditionError(os.str());
    }
    ring_ = md_.ring({{param, m_}});
}

GradedPoly OneParamFamily::F(const MultiIndex& k) const {
    {
        std::lock_guard<std::mutex> lock(cache_->mu);
        auto it = cache_->F.find(k);
        if (it != cache_->F.end()) return it->second;
    }
    Int eq = eta_vec(md_, Q_, k);
    long n = to_long(eq);
    ExtDualVec sk = md_.degree(k);
    GradedPoly out = x_power(ring_, k);
    for (long i = 0; i <= n; ++i) {
        ExtDualVec s = sk - m_ * Int(i);
        if (!md_.contains(s)) {
            std::ostringstream os;
            os << "s_k - " << i << "m = " << s << " left the dual cone";
            throw std::logic_error(os.str());
        }
        GradedPoly term = chi_poly(md_, ring_, s) * monomial_with(ring_, param_index(), i) * Rat(binom(eq, i));
        out -= term;
    }
    std::lock_guard<std::mutex> lock(cache_->mu);
    return cache_->F.emplace(k, out).first->second;
}

MultiIndex OneParamFamily::k_j(const MultiIndex& k, long j) const {
    Int eq = eta_vec(md_, Q_, k);
    if (j < 1 || Int(j) > eq) throw PreconditionError("j must lie between 1 and eta_Q(k)");
    return md_.rep(md_.boundary_decompose(md_.degree(k) - m_ * Int(j)).boundary);
}

RelationCert OneParamFamily::R(const MultiIndex& a, const MultiIndex& k) const {
    const RingPtr& Rg = ring_;
    std::size_t r = md_.rank();
    MultiIndex ak = add(a, k);
    MultiIndex dka = add(partial(md_, k), a);
    Int eq = eta_vec(md_, Q_, k);
    Int ep = eta_vec(md_, md_.polygon(), k);
    std::vector<RelationTerm> comb;
    comb.push_back({GradedPoly::constant(Rg, 1), ak, "", F(ak)});
    comb.push_back({-x_power(Rg, a), k, "", F(k)});
    comb.push_back({-monomial_with(Rg, r, to_long(ep)), dka, "", F(dka)});
    ExtDualVec sk = md_.degree(k);
    for (long j = 1; j <= to_long(eq); ++j) {
        auto dec = md_.boundary_decompose(sk - m_ * Int(j));
        MultiIndex kj = add(md_.rep(dec.boundary), a);
        GradedPoly c = monomial_with(Rg, r, to_long(dec.height)) * monomial_with(Rg, param_index(), j) *
                       Rat(-binom(eq, j));
        comb.push_back({c, kj, "", F(kj)});
    }
    return certify(a, k, std::move(comb));
}

GradedPoly one_param_F(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, const MultiIndex& k) {
    return OneParamFamily(md, m, Q).F(k);
}

RelationCert one_param_R(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, const MultiIndex& a,
                         const MultiIndex& k) {
    return OneParamFamily(md, m, Q).R(a, k);
}

void require_valid(const RelationCert& cert) {
    if (cert.valid()) return;
    throw CertificationError("relation R_{a,k} with a = " + index_str(cert.a) + ", k = " + index_str(cert.k) +
                             " does not vanish; first term " + *cert.first_nonzero());
}

bool t_mutable(const GradedPoly& F, const MultiIndex& k, std::size_t param, const Polygon& Q, const MonoidData& md) {
    const Ring& R = *F.ring();
    std::size_t r = md.rank();
    if (param <= r || param >= R.size()) throw PreconditionError("parameter index out of range");
    DualVec mu = from_degree(R.degrees[param]).pi_M();
    const auto& gens = md.generators();
    Int base = 0;
    for (std::size_t j = 0; j < r; ++j) base += eta(Q, gens[j].pi_M() * Int(k[j]));
    for (const auto& [e, c] : F.terms()) {
        Int rhs = base;
        for (std::size_t j = 0; j < r; ++j) rhs -= eta(Q, gens[j].pi_M() * Int(e[j]));
        for (std::size_t q = r + 1; q < R.size(); ++q) {
            if (q == param || e[q] == 0) continue;
            DualVec cr = from_degree(R.degrees[q]).pi_M();
            if (cross(cr, mu) == 0) rhs -= e[q];
            else rhs += eta(Q, -cr * Int(e[q]));
        }
        if (Int(e[param]) > rhs) return false;
    }
    return true;
}

RingPtr mutated_ring(const RingPtr& ring, std::size_t param, const Polygon& Q, const MonoidData& transported,
                     const std::string& new_param, const std::string& y) {
    std::size_t r = transported.rank();
    if (param <= r || param >= ring->size()) throw PreconditionError("parameter index out of range");
    ExtDualVec mu = from_degree(ring->degrees[param]);
    std::vector<GradedParam> params;
    for (std::size_t q = r + 1; q < ring->size(); ++q) {
        if (q == param) continue;
        params.push_back({ring->names[q], psi_ext(mu, Q, from_degree(ring->degrees[q]))});
    }
    params.push_back({new_param, -mu});
    return transported.ring(params, y);
}

GradedPoly mutate_to_degree(const GradedPoly& F, std::size_t param, const RingPtr& target_ring, const Degree& target) {
    const Ring& src = *F.ring();
    const Ring& dst = *target_ring;
    if (dst.size() != src.size()) throw PreconditionError("target ring does not match the family");
    std::size_t tnew = dst.size() - 1;
    const Degree& w = dst.degrees[tnew];
    std::size_t wc = 0;
    while (wc < w.size() && w[wc] == 0) ++wc;
    if (wc == w.size()) throw PreconditionError("mutation degree is zero");
    GradedPoly out(target_ring);
    for (const auto& [e, c] : F.terms()) {
        Monomial ne(dst.size(), 0);
        for (std::size_t i = 0; i < src.size(); ++i) {
            if (i == param) continue;
            ne[i < param ? i : i - 1] = e[i];
        }
        Degree diff = sub(target, out.degree_of(ne));
        if (diff[wc] % w[wc] != 0) throw PreconditionError("term " + monomial_str(src, e) + " cannot be homogenized");
        Int i = diff[wc] / w[wc];
        for (std::size_t j = 0; j < w.size(); ++j)
            if (diff[j] != w[j] * i) throw PreconditionError("term " + monomial_str(src, e) + " cannot be homogenized");
        if (i < 0)
            throw PreconditionError("term " + monomial_str(src, e) + " needs a negative power of " + dst.names[tnew]);
        ne[tnew] = static_cast<int>(to_long(i));
        out.add_term(ne, c);
    }
    return out;
}

GradedPoly mutate_family(const GradedPoly& F, const MultiIndex& k, std::size_t param, const MonoidData& transported,
                         const RingPtr& target_ring) {
    return mutate_to_degree(F, param, target_ring, to_degree(transported.degree(k)));
}

RelationCert mutate_relation(const RelationCert& cert, std::size_t param, const MonoidData& transported,
                             const RingPtr& target_ring) {
    Degree top = to_degree(transported.degree(add(cert.a, cert.k)));
    std::vector<RelationTerm> comb;
    for (const auto& t : cert.combination) {
        Degree d = to_degree(transported.degree(t.index));
        GradedPoly value = mutate_family(t.value, t.index, param, transported, target_ring);
        GradedPoly coeff = mutate_to_degree(t.coeff, param, target_ring, sub(top, d));
        comb.push_back({coeff, t.index, t.label, value});
    }
    return certify(cert.a, cert.k, std::move(comb));
}

OriginFamily::OriginFamily(std::vector<DualVec> gens, std::vector<Param> params, std::size_t distinguished)
    : gens_(std::move(gens)), params_(std::move(params)), m_(distinguished) {
    if (m_ >= params_.size()) throw PreconditionError("distinguished parameter out of range");
    for (const auto& g : gens_)
        if (g.is_zero()) throw PreconditionError("zero generator");
    for (const auto& p : params_)
        if (p.degree.is_zero()) throw PreconditionError("parameter degree must be nonzero");
    cyclic_.resize(gens_.size());
    for (std::size_t i = 0; i < gens_.size(); ++i) cyclic_[i] = i;
    auto half = [](const DualVec& c) { return (c.b > 0 || (c.b == 0 && c.a > 0)) ? 0 : 1; };
    std::stable_sort(cyclic_.begin(), cyclic_.end(), [&](std::size_t i, std::size_t j) {
        int hi = half(gens_[i]), hj = half(gens_[j]);
        if (hi != hj) return hi < hj;
        return cross(gens_[i], gens_[j]) > 0;
    });
    auto R = std::make_shared<Ring>();
    for (std::size_t j = 0; j < gens_.size(); ++j) {
        R->names.push_back("z" + std::to_string(j + 1));
        R->degrees.push_back({gens_[j].a, gens_[j].b, Int(0)});
    }
    for (const auto& p : params_) {
        if (R->index(p.name)) throw PreconditionError("duplicate variable name '" + p.name + "'");
        R->names.push_back(p.name);
        R->degrees.push_back({p.degree.a, p.degree.b, Int(0)});
    }
    for (std::size_t i = gens_.size(); i < R->names.size(); ++i) R->print_order.push_back(i);
    for (std::size_t j = 0; j < gens_.size(); ++j) R->print_order.push_back(j);
    ring_ = R;
}

MultiIndex OriginFamily::fan_rep(const DualVec& c) const {
    std::size_t r = gens_.size();
    MultiIndex b(r, 0);
    if (c.is_zero()) return b;
    for (std::size_t j = 0; j < r; ++j) {
        const auto& g = gens_[j];
        if (cross(g, c) != 0) continue;
        Int num = g.a != 0 ? c.a : c.b, den = g.a != 0 ? g.a : g.b;
        if (num % den == 0 && num / den > 0) {
            b[j] = to_long(num / den);
            return b;
        }
    }
    for (std::size_t t = 0; t < r; ++t) {
        std::size_t i = cyclic_[t], j = cyclic_[(t + 1) % r];
        const auto &ci = gens_[i], &cj = gens_[j];
        Int D = cross(ci, cj);
        if (D <= 0) continue;
        if (cross(ci, c) < 0 || cross(c, cj) < 0) continue;
        Int bi = cross(c, cj), bj = cross(ci, c);
        if (bi % D != 0 || bj % D != 0) continue;
        b[i] = to_long(bi / D);
        b[j] += to_long(bj / D);
        return b;
    }
    std::ostringstream os;
    os << "no fan representation of " << c;
    throw PreconditionError(os.str());
}

MultiIndex OriginFamily::partial(const MultiIndex& k) const {
    DualVec s{0, 0};
    for (std::size_t j = 0; j < k.size(); ++j) s = s + gens_[j] * Int(k[j]);
    return fan_rep(s);
}

GradedPoly OriginFamily::chi(const DualVec& c) const {
    return x_power(ring_, fan_rep(c));
}

namespace {

Int eta_index(const std::vector<DualVec>& gens, const Polygon& Q, const MultiIndex& k) {
    Int total = 0;
    DualVec sum{0, 0};
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (!k[j]) continue;
        DualVec c = gens[j] * Int(k[j]);
        total += eta(Q, c);
        sum = sum + c;
    }
    return total - eta(Q, sum);
}

}  // namespace

GradedPoly OriginFamily::factor(const MultiIndex& k) const {
    std::size_t r = gens_.size();
    DualVec mu = params_[m_].degree;
    Polygon Q = canonical_segment(ext(mu, 0));
    GradedPoly one = GradedPoly::constant(ring_, 1);
    GradedPoly collinear = one;
    GradedPoly out = one;
    for (std::size_t p = 0; p < params_.size(); ++p) {
        const DualVec& rv = params_[p].degree;
        GradedPoly term = chi(-rv) * GradedPoly::variable(ring_, r + p);
        if (cross(rv, mu) == 0) {
            collinear += term;
        } else {
            Polygon Qr = canonical_segment(ext(rv, 0));
            out = out * (one + term).pow(to_long(eta_index(gens_, Qr, k)));
        }
    }
    return collinear.pow(to_long(eta_index(gens_, Q, k))) * out;
}

GradedPoly OriginFamily::f(const MultiIndex& k) const {
    return x_power(ring_, k) - x_power(ring_, partial(k));
}

GradedPoly OriginFamily::F(const MultiIndex& k) const {
    return x_power(ring_, k) - x_power(ring_, partial(k)) * factor(k);
}

RelationCert OriginFamily::R(const MultiIndex& a, const MultiIndex& k) const {
    MultiIndex ak = add(a, k);
    MultiIndex adk = add(a, partial(k));
    std::vector<RelationTerm> comb;
    comb.push_back({GradedPoly::constant(ring_, 1), ak, "", F(ak)});
    comb.push_back({-x_power(ring_, a), k, "", F(k)});
    comb.push_back({-factor(k), adk, "", F(adk)});
    return certify(a, k, std::move(comb));
}

CayleyFamily::CayleyFamily(std::vector<Polygon> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw PreconditionError("Cayley family needs at least one part");
    Polygon P = parts_[0];
    for (std::size_t i = 1; i < parts_.size(); ++i) P = minkowski_sum(P, parts_[i]);
    if (P.dim() != 2) throw PreconditionError("the Minkowski sum of the parts must be 2-dimensional");
    md_ = MonoidData::hilbert_basis(P);
    std::size_t r = md_.rank(), m = parts_.size();

    auto A = std::make_shared<Ring>();
    for (std::size_t j = 0; j < r; ++j) {
        const auto& s = md_.generators()[j];
        Degree d{s.a, s.b};
        for (std::size_t i = 0; i < m; ++i) d.push_back(eta(parts_[i], s.pi_M()));
        A->names.push_back("x" + std::to_string(j + 1));
        A->degrees.push_back(d);
    }
    for (std::size_t i = 0; i < m; ++i) {
        Degree d(2 + m, Int(0));
        d[2 + i] = 1;
        A->names.push_back("z" + std::to_string(i + 1));
        A->degrees.push_back(d);
    }
    for (std::size_t i = r; i < r + m; ++i) A->print_order.push_back(i);
    for (std::size_t j = 0; j < r; ++j) A->print_order.push_back(j);
    ring_ = A;

    std::vector<GradedParam> Z;
    for (std::size_t i = 0; i < m; ++i) Z.push_back({"Z" + std::to_string(i + 1), R_STAR});
    sub_ring_ = md_.ring(Z);
}

Int CayleyFamily::eta_i(std::size_t i, const MultiIndex& k) const {
    return eta_vec(md_, parts_.at(i), k);
}

GradedPoly CayleyFamily::F(const MultiIndex& k) const {
    std::size_t r = md_.rank();
    GradedPoly zs = GradedPoly::constant(ring_, 1);
    for (std::size_t i = 0; i < parts_.size(); ++i) zs = zs * monomial_with(ring_, r + i, to_long(eta_i(i, k)));
    return x_power(ring_, k) - x_power(ring_, partial(md_, k)) * zs;
}

RelationCert CayleyFamily::R(const MultiIndex& a, const MultiIndex& k) const {
    std::size_t r = md_.rank();
    MultiIndex ak = add(a, k);
    MultiIndex adk = add(a, partial(md_, k));
    GradedPoly zs = GradedPoly::constant(ring_, 1);
    for (std::size_t i = 0; i < parts_.size(); ++i) zs = zs * monomial_with(ring_, r + i, to_long(eta_i(i, k)));
    std::vector<RelationTerm> comb;
    comb.push_back({GradedPoly::constant(ring_, 1), ak, "", F(ak)});
    comb.push_back({-x_power(ring_, a), k, "", F(k)});
    comb.push_back({-zs, adk, "", F(adk)});
    return certify(a, k, std::move(comb));
}

GradedPoly CayleyFamily::substitute(const GradedPoly& F) const {
    std::size_t r = md_.rank(), m = parts_.size();
    GradedPoly u = GradedPoly::variable(sub_ring_, r);
    std::vector<GradedPoly> lin;
    for (std::size_t i = 0; i < m; ++i) lin.push_back(u + GradedPoly::variable(sub_ring_, r + 1 + i));
    GradedPoly out(sub_ring_);
    for (const auto& [e, c] : F.terms()) {
        Monomial ne(sub_ring_->size(), 0);
        for (std::size_t j = 0; j < r; ++j) ne[j] = e[j];
        GradedPoly term = GradedPoly::monomial(sub_ring_, ne, c);
        for (std::size_t i = 0; i < m; ++i)
            if (e[r + i]) term = term * lin[i].pow(e[r + i]);
        out += term;
    }
    return out;
}

RelationCert CayleyFamily::substitute(const RelationCert& cert) const {
    std::vector<RelationTerm> comb;
    for (const auto& t : cert.combination) comb.push_back({substitute(t.coeff), t.index, t.label, substitute(t.value)});
    return certify(cert.a, cert.k, std::move(comb));
}

}  // namespace latmut
