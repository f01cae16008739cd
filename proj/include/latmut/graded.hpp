#pragma once

#include "latmut/numeric.hpp"

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace latmut {

using Degree = std::vector<Int>;

// Polynomial ring with named variables, each carrying a degree vector.
struct Ring {
    std::vector<std::string> names;
    std::vector<Degree> degrees;
    // Display order of variables inside a monomial; ring order when empty.
    std::vector<std::size_t> print_order;

    std::size_t size() const { return names.size(); }
    std::optional<std::size_t> index(const std::string& name) const;
    std::size_t degree_rank() const { return degrees.empty() ? 0 : degrees.front().size(); }
    bool operator==(const Ring& o) const { return names == o.names && degrees == o.degrees; }
};

using RingPtr = std::shared_ptr<const Ring>;
using Monomial = std::vector<int>;

class GradedPoly {
public:
    using Terms = std::map<Monomial, Rat>;

    GradedPoly() = default;
    explicit GradedPoly(RingPtr ring) : ring_(std::move(ring)) {}
    static GradedPoly constant(RingPtr ring, const Rat& c);
    static GradedPoly variable(RingPtr ring, std::size_t i, int power = 1);
    static GradedPoly variable(RingPtr ring, const std::string& name, int power = 1);
    static GradedPoly monomial(RingPtr ring, const Monomial& e, const Rat& c = 1);

    const RingPtr& ring() const { return ring_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Rat coeff(const Monomial& e) const;

    void add_term(const Monomial& e, const Rat& c);

    GradedPoly operator+(const GradedPoly& o) const;
    GradedPoly operator-(const GradedPoly& o) const;
    GradedPoly operator-() const;
    GradedPoly operator*(const GradedPoly& o) const;
    GradedPoly operator*(const Rat& c) const;
    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    GradedPoly pow(long k) const;

    Degree degree_of(const Monomial& e) const;
    // Common degree of all terms, or nothing when inhomogeneous or zero.
    std::optional<Degree> homogeneous_degree() const;
    bool is_homogeneous_of(const Degree& d) const;

    // Replace variable i by a polynomial of the same ring.
    GradedPoly substitute(std::size_t i, const GradedPoly& value) const;
    // Set the listed variables to zero.
    GradedPoly restrict_zero(const std::vector<std::size_t>& vars) const;

    bool operator==(const GradedPoly& o) const;
    bool operator!=(const GradedPoly& o) const { return !(*this == o); }

    // e.g. "x2*x6 - u*x5 - t*x3"
    std::string str() const;

private:
    void check_ring(const GradedPoly& o) const;

    RingPtr ring_;
    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const GradedPoly& p);
std::string monomial_str(const Ring& ring, const Monomial& e);
std::string degree_str(const Degree& d);

GradedPoly parse_graded(const std::string& text, RingPtr ring);

// Formal combination sum coeff_i * F_{index_i} and its expansion.
struct RelationTerm {
    GradedPoly coeff;
    std::vector<long> index;
    std::string label;
    GradedPoly value;  // the polynomial F_index
};

struct RelationCert {
    std::vector<long> a, k;
    std::vector<RelationTerm> combination;
    GradedPoly expansion;

    bool valid() const { return expansion.is_zero(); }
    // First term of a nonzero expansion, with its degree in the named variables.
    std::optional<std::string> first_nonzero() const;
    std::string str() const;
};

RelationCert certify(std::vector<long> a, std::vector<long> k, std::vector<RelationTerm> combination);

std::string index_str(const std::vector<long>& k);

}  // namespace latmut
