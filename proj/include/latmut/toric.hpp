#pragma once

#include "latmut/geometry.hpp"
#include "latmut/graded.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace latmut {

using MultiIndex = std::vector<long>;

struct BoundaryDecomp {
    ExtDualVec boundary;
    Int height;
};

struct GradedParam {
    std::string name;
    ExtDualVec degree;
};

Degree to_degree(const ExtDualVec& s);

// Generators s_1..s_r of the dual monoid S_P (R* is kept apart), with a memoized
// representation map on the boundary.
class MonoidData {
public:
    static MonoidData hilbert_basis(const Polygon& P);
    // Checks boundary membership of every generator and generation of all elements
    // whose pairings with the vertices are at most box.
    static MonoidData with_generating_set(const Polygon& P, std::vector<ExtDualVec> gens, long box = 12);
    // Appends the irreducible boundary elements of every sector cut out by the given rays,
    // so that boundary tuples never straddle a ray. Existing generators keep their indices.
    MonoidData refined(const std::vector<DualVec>& rays) const;

    const Polygon& polygon() const { return P_; }
    const std::vector<ExtDualVec>& generators() const { return gens_; }
    const std::vector<EdgeData>& facets() const { return facets_; }
    std::size_t rank() const { return gens_.size(); }

    bool contains(const ExtDualVec& s) const;
    bool on_boundary(const ExtDualVec& s) const;
    BoundaryDecomp boundary_decompose(const ExtDualVec& s) const;
    // Deterministic b with sum b_j s_j = s for s on the boundary.
    MultiIndex rep(const ExtDualVec& s) const;
    ExtDualVec degree(const MultiIndex& k) const;

    // Variables x1..xr, u, then the parameters.
    RingPtr ring(const std::vector<GradedParam>& params = {}, const std::string& x = "x") const;

private:
    struct RepCache {
        std::mutex mu;
        std::map<ExtDualVec, MultiIndex> map;
    };

    MultiIndex compute_rep(const ExtDualVec& s) const;

    Polygon P_;
    std::vector<ExtDualVec> gens_;
    std::vector<EdgeData> facets_;
    std::shared_ptr<RepCache> cache_ = std::make_shared<RepCache>();
};

// All elements of S_P whose pairings with every vertex lie in [0, box].
std::vector<ExtDualVec> monoid_box(const Polygon& P, long box);

Int eta_vec(const MonoidData& md, const Polygon& Q, const MultiIndex& k);

struct ChiMonomial {
    MultiIndex x;
    Int u;
};

ChiMonomial chi(const MonoidData& md, const ExtDualVec& s);
// chi^s as a monomial of ring, whose first r + 1 variables are x1..xr, u.
GradedPoly chi_poly(const MonoidData& md, const RingPtr& ring, const ExtDualVec& s);
GradedPoly x_power(const RingPtr& ring, const MultiIndex& k);

MultiIndex add(const MultiIndex& a, const MultiIndex& b);
// Boundary tuple of k.
MultiIndex partial(const MonoidData& md, const MultiIndex& k);

GradedPoly f_k(const MonoidData& md, const MultiIndex& k, const RingPtr& ring);
GradedPoly f_k(const MonoidData& md, const MultiIndex& k);
RelationCert r_ak(const MonoidData& md, const MultiIndex& a, const MultiIndex& k);

MonoidData xi_transport(const MonoidData& md, const ExtDualVec& m, const Polygon& Q, long box = 12);

// Compatibility of boundary tuples under xi on the box; the first failing element, if any.
std::optional<ExtDualVec> transport_compatibility_failure(const MonoidData& md, const MonoidData& mutated,
                                                          const ExtDualVec& m, const Polygon& Q, long box = 12);

// All multi-indices of length r with entry sum at most total.
std::vector<MultiIndex> multi_indices(std::size_t r, long total);

}  // namespace latmut
