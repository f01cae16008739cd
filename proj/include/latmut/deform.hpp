#pragma once

#include "latmut/toric.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace latmut {

// Generating set whose boundary tuples respect the normal fan of Q as well as that of P.
// Equal to md when every wall of Q already carries a generator.
MonoidData adapted_monoid(const MonoidData& md, const Polygon& Q);

// One-parameter family attached to a deformation pair (m, Q) of the polygon of md.
class OneParamFamily {
public:
    OneParamFamily(MonoidData md, ExtDualVec m, Polygon Q, std::string param = "t");

    const MonoidData& monoid() const { return md_; }
    const ExtDualVec& degree() const { return m_; }
    const Polygon& segment() const { return Q_; }
    const RingPtr& ring() const { return ring_; }
    std::size_t param_index() const { return md_.rank() + 1; }

    GradedPoly F(const MultiIndex& k) const;
    // Boundary tuple of s_k - j m.
    MultiIndex k_j(const MultiIndex& k, long j) const;
    RelationCert R(const MultiIndex& a, const MultiIndex& k) const;

private:
    MonoidData md_;
    ExtDualVec m_;
    Polygon Q_;
    RingPtr ring_;
    struct Cache {
        std::mutex mu;
        std::map<MultiIndex, GradedPoly> F;
    };
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

GradedPoly one_param_F(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, const MultiIndex& k);
RelationCert one_param_R(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, const MultiIndex& a,
                         const MultiIndex& k);

// Throws CertificationError with the first nonzero term when the expansion does not vanish.
void require_valid(const RelationCert& cert);

// Sufficient criterion for t_mutability of F_k with respect to the parameter at index param.
// The first rank() variables of F's ring are x1..xr with degrees the generators of md, then u.
bool t_mutable(const GradedPoly& F, const MultiIndex& k, std::size_t param, const Polygon& Q, const MonoidData& md);

// Ring of the mutated family: y1..yr graded by the transported generators, u, the old
// parameters r != m regraded by psi_m, then a new parameter of degree -m.
RingPtr mutated_ring(const RingPtr& ring, std::size_t param, const Polygon& Q, const MonoidData& transported,
                     const std::string& new_param, const std::string& y = "y");

// Substitutes and homogenizes every term to the target degree by powers of the new parameter.
GradedPoly mutate_to_degree(const GradedPoly& F, std::size_t param, const RingPtr& target_ring, const Degree& target);

GradedPoly mutate_family(const GradedPoly& F, const MultiIndex& k, std::size_t param, const MonoidData& transported,
                         const RingPtr& target_ring);

// Mutates a certified relation term by term; the result is certified again.
RelationCert mutate_relation(const RelationCert& cert, std::size_t param, const MonoidData& transported,
                             const RingPtr& target_ring);

// Family of Construction-type over a lattice point: generators of M, graded parameters and a
// distinguished parameter m.
class OriginFamily {
public:
    struct Param {
        std::string name;
        DualVec degree;
    };

    OriginFamily(std::vector<DualVec> gens, std::vector<Param> params, std::size_t distinguished);

    const RingPtr& ring() const { return ring_; }
    const std::vector<DualVec>& generators() const { return gens_; }
    // Multi-index of a representation of c through a cone of consecutive generators.
    MultiIndex fan_rep(const DualVec& c) const;
    MultiIndex partial(const MultiIndex& k) const;
    GradedPoly chi(const DualVec& c) const;
    GradedPoly factor(const MultiIndex& k) const;
    GradedPoly f(const MultiIndex& k) const;
    GradedPoly F(const MultiIndex& k) const;
    RelationCert R(const MultiIndex& a, const MultiIndex& k) const;

private:
    std::vector<DualVec> gens_;
    std::vector<Param> params_;
    std::size_t m_;
    std::vector<std::size_t> cyclic_;
    RingPtr ring_;
};

// Equations of the Cayley cone of a Minkowski decomposition.
class CayleyFamily {
public:
    explicit CayleyFamily(std::vector<Polygon> parts);

    const MonoidData& monoid() const { return md_; }
    const std::vector<Polygon>& parts() const { return parts_; }
    // x1..xr, z1..zm graded by M + Z^m.
    const RingPtr& ring() const { return ring_; }
    // x1..xr, u, Z1..Zm graded by M + Z.
    const RingPtr& substituted_ring() const { return sub_ring_; }

    Int eta_i(std::size_t i, const MultiIndex& k) const;
    GradedPoly F(const MultiIndex& k) const;
    RelationCert R(const MultiIndex& a, const MultiIndex& k) const;
    GradedPoly substitute(const GradedPoly& F) const;
    RelationCert substitute(const RelationCert& cert) const;

private:
    std::vector<Polygon> parts_;
    MonoidData md_;
    RingPtr ring_, sub_ring_;
};

}  // namespace latmut
