#pragma once

#include "latmut/io.hpp"

#include <random>
#include <string>

#ifndef LATMUT_DATA_DIR
#define LATMUT_DATA_DIR "data"
#endif

namespace latmut::testing {

inline std::string data(const std::string& name) {
    return std::string(LATMUT_DATA_DIR) + "/" + name;
}

inline LaurentPoly P(const std::string& text) {
    return parse_laurent(text);
}

// Random lattice polygon with at most max_vertices vertices and coordinates in [0, coord].
inline Polygon random_polygon(std::mt19937& rng, int max_vertices = 7, int coord = 6, int min_dim = 2) {
    std::uniform_int_distribution<int> c(0, coord), n(3, 9);
    while (true) {
        std::vector<LatticeVec> pts;
        int count = n(rng);
        for (int i = 0; i < count; ++i) pts.push_back({c(rng), c(rng)});
        Polygon Q = Polygon::hull(pts);
        if (Q.dim() >= min_dim && static_cast<int>(Q.size()) <= max_vertices) return Q;
    }
}

}  // namespace latmut::testing
