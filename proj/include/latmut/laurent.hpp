#pragma once

#include "latmut/geometry.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace latmut {

// Laurent polynomial in x, y over Q; zero coefficients are never stored.
class LaurentPoly {
public:
    using Terms = std::map<LatticeVec, Rat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const Rat& c) { add_term({0, 0}, c); }
    static LaurentPoly monomial(const LatticeVec& e, const Rat& c = 1);
    // 1 + chi^d
    static LaurentPoly binomial(const LatticeVec& d);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rat coeff(const LatticeVec& e) const;
    std::vector<LatticeVec> support() const;

    void add_term(const LatticeVec& e, const Rat& c);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator*(const Rat& c) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly pow(long k) const;
    LaurentPoly shifted(const LatticeVec& t) const;
    // Shift so that the lexicographically smallest vertex of the Newton polygon is the origin.
    LaurentPoly normalized_translate() const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const;

    // Human syntax, e.g. "1 + 3*x + x^2*y".
    std::string str() const;

private:
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& f);

struct MutableDegree {
    ExtDualVec m;
    LaurentPoly g;  // 1 + chi^d
    std::optional<EdgeData> edge;
    Int n = 0, k = 0;  // m = n R* - k s_E when edge is set
};

struct MutableDegreeSet {
    std::vector<MutableDegree> degrees;
    long n_max = 0, k_max = 0;
};

struct TraceStep {
    ExtDualVec m;
    LaurentPoly g;
    LaurentPoly result;
};

struct MutationStep {
    ExtDualVec m;
    std::optional<LaurentPoly> g;  // canonical 1 + chi^d when absent
};

Polygon newton(const LaurentPoly& f);
bool is_normalized(const LaurentPoly& f);
std::map<Int, LaurentPoly> slices(const LaurentPoly& f, const ExtDualVec& m);

// Returns q with h = q * g^i, or nothing. g must be supported on a line.
std::optional<LaurentPoly> divides_power(const LaurentPoly& h, const LaurentPoly& g, long i);

bool is_mg_mutable(const LaurentPoly& f, const ExtDualVec& m, const LaurentPoly& g);
LaurentPoly mutate(const LaurentPoly& f, const ExtDualVec& m, const LaurentPoly& g);
LaurentPoly canonical_witness(const ExtDualVec& m);
std::optional<MutableDegree> is_m_mutable(const LaurentPoly& f, const ExtDualVec& m);

ExtDualVec psi(const ExtDualVec& m, const LaurentPoly& g, const ExtDualVec& r);
ExtDualVec psi(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& r);
// psi_m with psi_m(m) = -m.
ExtDualVec psi_ext(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& r);
ExtDualVec xi(const ExtDualVec& m, const Polygon& Q, const ExtDualVec& h);

MutableDegreeSet mutable_degrees(const LaurentPoly& f, long n_max, long k_max);
long n_E(const LaurentPoly& f, const EdgeData& E, long n_cap = -1);

// Steps are given in the coordinates of f; each later degree is pushed through psi of
// the steps already applied.
std::pair<LaurentPoly, std::vector<TraceStep>> compose_mutations(const LaurentPoly& f,
                                                                 const std::vector<MutationStep>& steps);

}  // namespace latmut
