#pragma once

#include "latmut/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace latmut {

// Sum of lattice lengths of the edges; 0 for a point and twice the length for a segment.
long perimeter(const Polygon& P);

enum class Outcome { Point, Witness, BoundExceeded };
const char* outcome_name(Outcome o);

struct MutationTrace {
    LaurentPoly start;
    std::vector<TraceStep> steps;
    Outcome outcome = Outcome::BoundExceeded;
    std::optional<LatticeVec> witness;
    long k_cap = 0;

    const LaurentPoly& final_poly() const { return steps.empty() ? start : steps.back().result; }
};

// Checks every step against mutate; throws PreconditionError on the first mismatch.
void replay(const MutationTrace& trace);

struct ReduceOptions {
    long depth = 3;
    long step_budget = 64;
    long k_cap = 0;         // 0: largest edge length of the current polygon
    long node_budget = 20000;  // nodes visited by one composition search
};

MutationTrace reduce(const LaurentPoly& f, const ReduceOptions& opt = {});

// Bounded mutable degrees of g used by the witness test.
MutableDegreeSet witness_degrees(const LaurentPoly& g, long k_cap = 0);
std::optional<LatticeVec> witness_point(const LaurentPoly& g, long k_cap = 0);

enum class Verdict { Yes, No, Unknown };
const char* verdict_name(Verdict v);

struct ZeroMutableResult {
    Verdict verdict = Verdict::Unknown;
    MutationTrace trace;
};

ZeroMutableResult is_zero_mutable(const LaurentPoly& f, const ReduceOptions& opt = {});

// Coefficients on the lattice points of a polygon subject to divisibility constraints.
class FeasibilityProblem {
public:
    explicit FeasibilityProblem(Polygon P);

    const Polygon& polygon() const { return P_; }
    const std::vector<LatticeVec>& points() const { return pts_; }
    std::size_t constraint_count() const { return rows_.size(); }

    // Positive slices of phi_m must be divisible by the matching powers of 1 + chi^d.
    void require_mutable(const ExtDualVec& m);
    // Vertex coefficients are 1; returns a solution with free unknowns set to 0.
    std::optional<LaurentPoly> solve() const;

private:
    Polygon P_;
    std::vector<LatticeVec> pts_;
    std::vector<std::vector<Rat>> rows_;
};

struct MaxMutableResult {
    bool maximal = true;
    long n_max = 0, k_max = 0;
    std::vector<ExtDualVec> degrees;     // bounded M(f)
    std::vector<ExtDualVec> candidates;  // polygon-mutable degrees missing from M(f)
    std::optional<ExtDualVec> extra;
    std::optional<LaurentPoly> certificate;
};

MaxMutableResult is_maximally_mutable(const LaurentPoly& f, long n_max, long k_max);

struct PolygonStep {
    ExtDualVec m;
    Polygon Q;
};

struct PersistenceReport {
    bool consistent = true;
    std::optional<std::size_t> failing_stage;  // 0 is the initial polygon
    std::optional<ExtDualVec> failing_degree;
    std::vector<Polygon> polygons;
    std::vector<std::vector<ExtDualVec>> degrees;
};

PersistenceReport check_degree_persistence(const Polygon& P, const std::vector<ExtDualVec>& M,
                                           const std::vector<PolygonStep>& steps);

struct EquivalenceOptions {
    long max_depth = 4;
    long max_nodes = 20000;
    long n_max = 0;  // 0: largest edge length
    long k_max = 0;  // 0: largest edge length
    long max_perimeter = 0;  // 0: the larger perimeter of the two ends
};

// Steps lead from f to a translate of g.
std::optional<std::vector<TraceStep>> mutation_equivalent(const LaurentPoly& f, const LaurentPoly& g,
                                                          const EquivalenceOptions& opt = {});

// Degree of the same mutation after translating the polynomial by t.
ExtDualVec translate_degree(const ExtDualVec& m, const LatticeVec& t);

}  // namespace latmut
