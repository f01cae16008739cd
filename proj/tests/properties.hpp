#pragma once

#include "support.hpp"

#include "latmut/deform.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace latmut::testing {

struct PropertyRun {
    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void record(bool ok, const std::function<std::string()>& what) {
        ++cases;
        if (ok) return;
        if (failures++ == 0) first_failure = what();
    }
};

template <class T>
std::string show(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

struct MutableTriple {
    LaurentPoly f;
    ExtDualVec m;
    LaurentPoly g;
};

inline Rat random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<int> c(1, 4), s(0, 1);
    return Rat(s(rng) ? c(rng) : -c(rng));
}

// Random (m,g)-mutable polynomial supported on a random polygon, with m = n R* - k s_E for an edge E.
inline std::optional<MutableTriple> random_mutable(std::mt19937& rng) {
    Polygon P = random_polygon(rng);
    auto es = edge_data(P);
    std::uniform_int_distribution<std::size_t> pe(0, es.size() - 1);
    std::uniform_int_distribution<int> pn(1, 4), pk(1, 2);
    const auto& E = es[pe(rng)];
    ExtDualVec m = R_STAR * Int(pn(rng)) - E.s * Int(pk(rng));
    LatticeVec d = kernel_direction(m.pi_M());
    LaurentPoly g = LaurentPoly::binomial(d);

    std::map<Int, std::vector<LatticeVec>> levels;
    for (const auto& p : P.lattice_points()) levels[phi(m, p)].push_back(p);
    LaurentPoly f;
    for (auto& [i, pts] : levels) {
        std::sort(pts.begin(), pts.end(), [&](const auto& a, const auto& b) { return d.x * a.x + d.y * a.y < d.x * b.x + d.y * b.y; });
        long n = static_cast<long>(pts.size());
        long need = i > 0 ? to_long(i) : 0;
        if (n - 1 < need) continue;
        LaurentPoly r;
        for (long j = 0; j <= n - 1 - need; ++j) r.add_term(d * Int(j), random_coeff(rng));
        f += LaurentPoly::monomial(pts.front()) * g.pow(need) * r;
    }
    if (f.is_zero()) return std::nullopt;
    return MutableTriple{f, m, g};
}

inline PropertyRun prop_involution(std::mt19937& rng, long n) {
    PropertyRun run{"mutation involutivity"};
    while (run.cases < n) {
        auto t = random_mutable(rng);
        if (!t) continue;
        LaurentPoly h = mutate(t->f, t->m, t->g);
        bool ok = is_mg_mutable(h, -t->m, t->g) && mutate(h, -t->m, t->g) == t->f;
        run.record(ok, [&] { return t->f.str() + " at " + show(t->m); });
    }
    return run;
}

inline PropertyRun prop_psi_round_trip(std::mt19937& rng, long n) {
    PropertyRun run{"psi round trip"};
    std::uniform_int_distribution<int> c(-4, 4);
    while (run.cases < n) {
        ExtDualVec m{c(rng), c(rng), c(rng)};
        if (m.pi_M().is_zero()) continue;
        LaurentPoly g = canonical_witness(m);
        bool ok = true;
        for (int a = -3; a <= 3; ++a)
            for (int b = -3; b <= 3; ++b)
                for (int h = -3; h <= 3; ++h) {
                    ExtDualVec r{a, b, h};
                    if (psi(-m, g, psi(m, g, r)) != r) ok = false;
                }
        run.record(ok, [&] { return show(m); });
    }
    return run;
}

// f is r-mutable exactly when mut f is psi(r)-mutable, over a box of degrees r.
inline PropertyRun prop_transport(std::mt19937& rng, long n) {
    PropertyRun run{"mutability transport"};
    while (run.cases < n) {
        auto t = random_mutable(rng);
        if (!t) continue;
        LaurentPoly h = mutate(t->f, t->m, t->g);
        bool ok = true;
        std::string bad;
        for (int a = -2; a <= 2; ++a)
            for (int b = -2; b <= 2; ++b)
                for (int hh = -4; hh <= 6; ++hh) {
                    ExtDualVec r{a, b, hh};
                    if (r.pi_M().is_zero()) continue;
                    ExtDualVec r2 = psi(t->m, t->g, r);
                    if (r2.pi_M().is_zero()) continue;
                    if (static_cast<bool>(is_m_mutable(t->f, r)) != static_cast<bool>(is_m_mutable(h, r2))) {
                        ok = false;
                        bad = show(r);
                    }
                }
        run.record(ok, [&] { return t->f.str() + " at " + show(t->m) + " r = " + bad; });
    }
    return run;
}

inline PropertyRun prop_newton_compat(std::mt19937& rng, long n) {
    PropertyRun run{"newton polygon of a mutation"};
    while (run.cases < n) {
        auto t = random_mutable(rng);
        if (!t) continue;
        Polygon Pf = newton(t->f), Q = newton(t->g);
        bool pair_ok = is_deformation_pair(Pf, t->m, Q);
        bool ok = pair_ok && newton(mutate(t->f, t->m, t->g)) == mutate_polygon(Pf, t->m, Q);
        run.record(ok, [&] { return t->f.str() + " at " + show(t->m); });
    }
    return run;
}

inline Polygon random_small(std::mt19937& rng) {
    std::uniform_int_distribution<int> dim(0, 2);
    return random_polygon(rng, 5, 3, dim(rng));
}

// Support values add under Minkowski sum, and the tuple identity for eta_Q.
inline PropertyRun prop_eta_additivity(std::mt19937& rng, long n) {
    PropertyRun run{"eta additivity"};
    std::uniform_int_distribution<int> c(-5, 5);
    while (run.cases < n) {
        Polygon P = random_polygon(rng);
        Polygon Q = random_small(rng), G = random_small(rng);
        auto decs = minkowski_decompositions(P, 2);
        if (!decs.empty()) {
            std::uniform_int_distribution<std::size_t> pick(0, decs.size() - 1);
            const auto& dcm = decs[pick(rng)];
            Q = dcm[0];
            G = dcm[1];
        }
        Polygon QG = minkowski_sum(Q, G);
        bool ok = true;
        for (int it = 0; it < 10; ++it) {
            DualVec v{c(rng), c(rng)};
            if (eta(QG, v) != eta(Q, v) + eta(G, v)) ok = false;
        }
        auto H = MonoidData::hilbert_basis(P);
        std::uniform_int_distribution<long> e(0, 2);
        MultiIndex k(H.rank()), a(H.rank());
        for (auto& x : k) x = e(rng);
        for (auto& x : a) x = e(rng);
        for (const auto& S : {Q, G, QG, P}) {
            if (eta_vec(H, S, add(a, k)) != eta_vec(H, S, k) + eta_vec(H, S, add(partial(H, k), a))) ok = false;
        }
        if (eta_vec(H, QG, k) != eta_vec(H, Q, k) + eta_vec(H, G, k)) ok = false;
        run.record(ok, [&] { return show(P) + " Q = " + show(Q) + " G = " + show(G); });
    }
    return run;
}

inline PropertyRun prop_minkowski(std::mt19937& rng, long n) {
    PropertyRun run{"minkowski re-summation"};
    while (run.cases < n) {
        Polygon A = random_small(rng), B = random_small(rng);
        Polygon P = minkowski_sum(A, B);
        if (P.dim() < 2 || P.size() > 7) continue;
        bool ok = true;
        bool seen = false;
        for (int parts : {2, 3})
            for (const auto& dcm : minkowski_decompositions(P, parts)) {
                Polygon sum = dcm[0];
                for (std::size_t i = 1; i < dcm.size(); ++i) sum = minkowski_sum(sum, dcm[i]);
                if (!equal_up_to_translation(sum, P)) ok = false;
                if (parts == 2 && ((equal_up_to_translation(dcm[0], A) && equal_up_to_translation(dcm[1], B)) ||
                                   (equal_up_to_translation(dcm[0], B) && equal_up_to_translation(dcm[1], A))))
                    seen = true;
            }
        if (A.dim() > 0 && B.dim() > 0 && !seen) ok = false;
        run.record(ok, [&] { return show(A) + " + " + show(B); });
    }
    return run;
}

inline bool homogeneous(const GradedPoly& F) { return F.is_zero() || F.homogeneous_degree().has_value(); }

// Every binomial, one-parameter equation and relation polynomial is homogeneous.
inline PropertyRun prop_homogeneity(std::mt19937& rng, long n) {
    PropertyRun run{"homogeneity"};
    std::uniform_int_distribution<long> e(0, 2);
    while (run.cases < n) {
        Polygon P = random_polygon(rng, 5, 4);
        auto H = MonoidData::hilbert_basis(P);
        MultiIndex k(H.rank()), a(H.rank());
        for (auto& x : k) x = e(rng);
        for (auto& x : a) x = e(rng);
        bool ok = homogeneous(f_k(H, k));
        if (!f_k(H, k).is_zero()) ok = ok && f_k(H, k).homogeneous_degree() == to_degree(H.degree(k));
        auto r = r_ak(H, a, k);
        for (const auto& term : r.combination) ok = ok && homogeneous(term.coeff);

        auto es = edge_data(P);
        ExtDualVec m = R_STAR - es[0].s;
        Polygon Q = canonical_segment(m);
        if (is_deformation_pair(P, m, Q)) {
            auto md = adapted_monoid(H, Q);
            MultiIndex k2 = k, a2 = a;
            k2.resize(md.rank(), 0);
            a2.resize(md.rank(), 0);
            OneParamFamily fam(md, m, Q);
            ok = ok && homogeneous(fam.F(k2)) && homogeneous(fam.F(add(a2, k2)));
            auto R = fam.R(a2, k2);
            for (const auto& term : R.combination) ok = ok && homogeneous(term.coeff);
            ok = ok && R.valid();
        }
        run.record(ok, [&] { return show(P); });
    }
    return run;
}

// Binomial-coefficient twists of a multiple of (1+x)^m stay divisible by (1+x)^(m-k).
inline PropertyRun prop_divisibility(std::mt19937& rng, long n) {
    PropertyRun run{"binomial twist divisibility"};
    std::uniform_int_distribution<int> coef(-4, 4), z(-3, 3), mult(1, 4), deg(0, 3);
    LaurentPoly g = LaurentPoly::binomial({1, 0});
    while (run.cases < n) {
        long mm = mult(rng);
        LaurentPoly q;
        int d = deg(rng);
        for (int i = 0; i <= d; ++i) q.add_term({i, 0}, coef(rng));
        q.add_term({d + 1, 0}, 1);
        LaurentPoly h = q * g.pow(mm);
        long z1 = z(rng), z2 = z(rng);
        for (long k = 0; k <= mm; ++k) {
            LaurentPoly s;
            for (const auto& [ex, a] : h.terms()) s.add_term(ex, Rat(binom(Int(z1) + Int(z2) * ex.x, k)) * a);
            if (s.is_zero()) continue;
            run.record(static_cast<bool>(divides_power(s, g, mm - k)), [&] { return h.str(); });
        }
    }
    return run;
}

inline std::vector<PropertyRun> all_properties(unsigned seed, long n) {
    std::mt19937 rng(seed);
    return {prop_involution(rng, n),     prop_psi_round_trip(rng, n), prop_transport(rng, n),
            prop_newton_compat(rng, n),  prop_eta_additivity(rng, n), prop_divisibility(rng, n),
            prop_minkowski(rng, n),      prop_homogeneity(rng, n)};
}

}  // namespace latmut::testing
