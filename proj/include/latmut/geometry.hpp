#pragma once

#include "latmut/numeric.hpp"

#include <optional>
#include <ostream>
#include <vector>

namespace latmut {

// Point of N = Z^2.
struct LatticeVec {
    Int x, y;

    LatticeVec operator+(const LatticeVec& o) const { return {x + o.x, y + o.y}; }
    LatticeVec operator-(const LatticeVec& o) const { return {x - o.x, y - o.y}; }
    LatticeVec operator-() const { return {-x, -y}; }
    LatticeVec operator*(const Int& k) const { return {x * k, y * k}; }
    bool operator==(const LatticeVec& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticeVec& o) const { return !(*this == o); }
    bool operator<(const LatticeVec& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Point of the dual lattice M = Hom(N, Z).
struct DualVec {
    Int a, b;

    DualVec operator+(const DualVec& o) const { return {a + o.a, b + o.b}; }
    DualVec operator-(const DualVec& o) const { return {a - o.a, b - o.b}; }
    DualVec operator-() const { return {-a, -b}; }
    DualVec operator*(const Int& k) const { return {a * k, b * k}; }
    bool operator==(const DualVec& o) const { return a == o.a && b == o.b; }
    bool operator!=(const DualVec& o) const { return !(*this == o); }
    bool operator<(const DualVec& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool is_zero() const { return a == 0 && b == 0; }
};

// Point of M~ = M + Z.
struct ExtDualVec {
    Int a, b, h;

    DualVec pi_M() const { return {a, b}; }
    const Int& pi_Z() const { return h; }

    ExtDualVec operator+(const ExtDualVec& o) const { return {a + o.a, b + o.b, h + o.h}; }
    ExtDualVec operator-(const ExtDualVec& o) const { return {a - o.a, b - o.b, h - o.h}; }
    ExtDualVec operator-() const { return {-a, -b, -h}; }
    ExtDualVec operator*(const Int& k) const { return {a * k, b * k, h * k}; }
    bool operator==(const ExtDualVec& o) const { return a == o.a && b == o.b && h == o.h; }
    bool operator!=(const ExtDualVec& o) const { return !(*this == o); }
    bool operator<(const ExtDualVec& o) const {
        if (a != o.a) return a < o.a;
        if (b != o.b) return b < o.b;
        return h < o.h;
    }
};

inline ExtDualVec ext(const DualVec& c, const Int& h) { return {c.a, c.b, h}; }
inline const ExtDualVec R_STAR{0, 0, 1};

inline Int pair(const DualVec& c, const LatticeVec& n) { return c.a * n.x + c.b * n.y; }
inline Int cross(const LatticeVec& u, const LatticeVec& v) { return u.x * v.y - u.y * v.x; }
inline Int cross(const DualVec& u, const DualVec& v) { return u.a * v.b - u.b * v.a; }

std::ostream& operator<<(std::ostream& os, const LatticeVec& v);
std::ostream& operator<<(std::ostream& os, const DualVec& v);
std::ostream& operator<<(std::ostream& os, const ExtDualVec& v);

struct RatPoint {
    Rat x, y;
    bool operator==(const RatPoint& o) const { return x == o.x && y == o.y; }
};

// Lattice polygon with CCW vertices starting at the lexicographically smallest one.
// Points (one vertex) and segments (two vertices) are allowed.
class Polygon {
public:
    Polygon() = default;

    // Validates strict convexity and CCW order; the list may start at any vertex.
    static Polygon from_vertices(std::vector<LatticeVec> vs);
    static Polygon hull(std::vector<LatticeVec> pts);
    static Polygon point(const LatticeVec& p) { return hull({p}); }
    static Polygon segment(const LatticeVec& p, const LatticeVec& q) { return hull({p, q}); }

    const std::vector<LatticeVec>& vertices() const { return vs_; }
    std::size_t size() const { return vs_.size(); }
    bool empty() const { return vs_.empty(); }
    int dim() const;

    Polygon translated(const LatticeVec& t) const;
    // Translate so that the first (lexicographically smallest) vertex is the origin.
    Polygon normalized() const;

    bool contains(const LatticeVec& p) const;
    std::vector<LatticeVec> lattice_points() const;

    bool operator==(const Polygon& o) const { return vs_ == o.vs_; }
    bool operator!=(const Polygon& o) const { return !(*this == o); }
    bool operator<(const Polygon& o) const;

private:
    std::vector<LatticeVec> vs_;
};

std::ostream& operator<<(std::ostream& os, const Polygon& p);

// Slice of a polygon by a level line of an affine functional.
struct RationalSegment {
    RatPoint p, q;
    std::optional<LatticeVec> direction;  // none for a point
};

struct EdgeData {
    std::size_t index = 0;
    LatticeVec from, to;
    DualVec normal;      // c_E, primitive and inward
    ExtDualVec s;        // (c_E, eta_P(c_E))
    Int length;          // lattice length
    LatticeVec direction;  // d_E
    ExtDualVec a;        // a_E in N~ = N + Z, equal to (d_E, 0)
};

Int eta(const Polygon& Q, const DualVec& c);
Int phi(const ExtDualVec& m, const LatticeVec& n);
Int max_phi(const Polygon& P, const ExtDualVec& m);
Int min_phi(const Polygon& P, const ExtDualVec& m);

// Primitive vector spanning the kernel line of c, oriented lexicographically positive.
LatticeVec kernel_direction(const DualVec& c);
// Segment {0, d} with d = kernel_direction(pi_M(m)).
Polygon canonical_segment(const ExtDualVec& m);
LatticeVec primitive(const LatticeVec& v);

std::vector<EdgeData> edge_data(const Polygon& P);
// Like edge_data, but a segment yields its two opposite sides and a point yields nothing.
std::vector<EdgeData> boundary_edges(const Polygon& P);

std::optional<RationalSegment> slice(const Polygon& P, const ExtDualVec& m, const Int& i);
Rat lattice_length(const RationalSegment& s);
Int lattice_length(const Polygon& segment);

bool is_deformation_pair(const Polygon& P, const ExtDualVec& m, const Polygon& Q);
// P_(m,Q); implemented by mutating a witness polynomial.
Polygon mutate_polygon(const Polygon& P, const ExtDualVec& m, const Polygon& Q);

Polygon minkowski_sum(const Polygon& A, const Polygon& B);
bool equal_up_to_translation(const Polygon& A, const Polygon& B);
std::vector<std::vector<Polygon>> minkowski_decompositions(const Polygon& P, int parts);

}  // namespace latmut
