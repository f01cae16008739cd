#pragma once

#include "latmut/geometry.hpp"

#include <optional>
#include <vector>

namespace latmut {

struct T1Report {
    ExtDualVec degree;
    bool radial = false;  // degree = k R*
    long k = 0;
    std::optional<std::size_t> edge;  // m = n R* - k s_E
    long n = 0;
    long dim_pair = 0;
    long dim_X = 0;
};

// Polygon-level m-mutability with the canonical segment of length 1.
bool polygon_m_mutable(const Polygon& P, const ExtDualVec& m);

long t1_pair(const Polygon& P, const ExtDualVec& m);
long t1_pair_radial(const Polygon& P, long k);
long t1_X(const Polygon& P, const ExtDualVec& m);
long t1_X_radial(const Polygon& P, long k);

// Number of edges of lattice length at least k.
long edges_at_least(const Polygon& P, long k);

// Ordered by edge index, n, k; radial degrees last.
std::vector<T1Report> t1_degrees(const Polygon& P, long n_max, long k_max, long kR_max);

}  // namespace latmut
