#include "latmut/deform.hpp"
#include "latmut/io.hpp"
#include "latmut/render.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace latmut;

namespace {

constexpr int EXIT_NO = 1;
constexpr int EXIT_UNKNOWN = 2;
constexpr int EXIT_PARSE = 64;
constexpr int EXIT_PRECONDITION = 65;
constexpr int EXIT_CERT = 70;

struct Bounds {
    long n = 5, k = 3, kR = 2;
};

Bounds default_bounds() {
    Bounds b;
    if (const char* env = std::getenv("LATMUT_DEFAULT_BOUNDS")) {
        auto v = parse_index(env);
        if (v.size() > 0) b.n = v[0];
        if (v.size() > 1) b.k = v[1];
        if (v.size() > 2) b.kR = v[2];
    }
    return b;
}

Bounds bounds_from(const std::string& s) {
    Bounds b = default_bounds();
    if (s.empty()) return b;
    auto v = parse_index(s);
    if (v.empty() || v.size() > 3) throw ParseError("bounds must be n[,k[,kR]]");
    for (long x : v)
        if (x < 0) throw PreconditionError("bounds must be non-negative");
    b.n = v[0];
    if (v.size() > 1) b.k = v[1];
    if (v.size() > 2) b.kR = v[2];
    return b;
}

struct Common {
    std::string format = "text";
    std::string out;
};

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(c.out);
    if (!f) throw ParseError("cannot write " + c.out);
    f << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

LaurentPoly load_poly(const std::string& file, const std::string& expr) {
    if (!expr.empty()) return parse_laurent(expr);
    if (!file.empty()) return read_laurent_file(file);
    throw ParseError("a polynomial is required (--poly FILE or --expr TEXT)");
}

Polygon load_polygon(const std::string& file, const std::string& poly, const std::string& expr) {
    if (!file.empty()) return read_polygon_file(file);
    return newton(load_poly(poly, expr));
}

Polygon parse_segment(const std::string& s, const ExtDualVec& m) {
    if (s.empty()) return canonical_segment(m);
    auto v = parse_index(s);
    if (v.size() != 4) throw ParseError("segment must be x1,y1,x2,y2");
    return Polygon::segment({v[0], v[1]}, {v[2], v[3]});
}

MultiIndex index_for(const std::string& s, std::size_t r, const char* what) {
    MultiIndex k = s.empty() ? MultiIndex{} : parse_index(s);
    // missing trailing entries are zero
    if (k.size() > r) throw PreconditionError(std::string(what) + " has more than " + std::to_string(r) + " entries");
    k.resize(r, 0);
    for (long x : k)
        if (x < 0) throw PreconditionError(std::string(what) + " entries must be non-negative");
    return k;
}

std::string gens_text(const MonoidData& md) {
    std::ostringstream os;
    for (std::size_t i = 0; i < md.rank(); ++i) os << "s" << i + 1 << " = " << md.generators()[i] << "\n";
    os << "R* = " << R_STAR << "\n";
    return os.str();
}

std::string cert_text(const RelationCert& c) {
    std::ostringstream os;
    os << c.str() << "\n";
    os << (c.valid() ? "relation certified: zero" : "relation NOT certified: " + c.first_nonzero().value_or("")) << "\n";
    return os.str();
}

std::vector<ExtDualVec> parse_degree_list(const std::string& s) {
    std::vector<ExtDualVec> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ';'))
        if (tok.find_first_not_of(" ") != std::string::npos) out.push_back(parse_ext(tok));
    return out;
}

MonoidData load_monoid(const Polygon& P, const std::string& gens) {
    if (gens.empty()) return MonoidData::hilbert_basis(P);
    return MonoidData::with_generating_set(P, parse_degree_list(gens));
}

std::string trace_text(const MutationTrace& t) {
    std::ostringstream os;
    os << "start: " << t.start << "\n";
    for (std::size_t i = 0; i < t.steps.size(); ++i)
        os << "step " << i + 1 << ": m = " << t.steps[i].m << ", g = " << t.steps[i].g << "\n  -> "
           << t.steps[i].result << "\n";
    os << "outcome: " << outcome_name(t.outcome);
    if (t.witness) os << " " << *t.witness;
    os << "\n";
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"latmut: mutations, deformations and classification of Laurent polynomials in two variables"};
    app.require_subcommand(1);
    Common common;
    auto add_common = [&](CLI::App* s) {
        s->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json", "svg", "tikz"}));
        s->add_option("-o,--out", common.out, "output file (default stdout)");
    };
    std::string poly, expr, polygon, target, target_expr, m_s, g_s, q_s, k_s, a_s, bounds_s, degrees_s, steps_s,
        parts_s, trace_s, gens_s, labels = "coeffs", param = "t";
    long sweep = -1, depth = 3, budget = 64;
    bool origin = false, literal = false;

    auto* hilbert = app.add_subcommand("hilbert", "Hilbert basis of the dual monoid");
    auto* ideal = app.add_subcommand("ideal", "toric ideal generators f_k and relations r_{a,k}");
    auto* deform = app.add_subcommand("deform", "one-parameter deformation equations F_k");
    auto* verify = app.add_subcommand("verify", "certify relations R_{a,k}");
    auto* mutate_c = app.add_subcommand("mutate", "mutate a Laurent polynomial");
    auto* degrees = app.add_subcommand("degrees", "bounded list of mutable degrees");
    auto* t1 = app.add_subcommand("t1", "tangent space dimensions");
    auto* classify = app.add_subcommand("classify", "mutation search and classification");
    auto* cayley = app.add_subcommand("cayley", "Cayley deformation equations");
    auto* render = app.add_subcommand("render", "draw polygons and polynomials as SVG or TikZ");
    classify->require_subcommand(1);
    auto* c_reduce = classify->add_subcommand("reduce", "perimeter reduction trace");
    auto* c_zero = classify->add_subcommand("zero-mutable", "0-mutability verdict");
    auto* c_max = classify->add_subcommand("max-mutable", "maximal mutability within bounds");
    auto* c_equiv = classify->add_subcommand("equivalent", "bounded search for a mutation sequence");
    auto* c_pers = classify->add_subcommand("persistence", "degree persistence along polygon mutations");

    for (auto* s : {hilbert, ideal, deform, verify, mutate_c, degrees, t1, c_reduce, c_zero, c_max, c_equiv, c_pers, render}) {
        add_common(s);
        s->add_option("--poly", poly, "polynomial file (JSON or human syntax)");
        s->add_option("--expr", expr, "polynomial in human syntax");
    }
    add_common(cayley);
    for (auto* s : {hilbert, ideal, deform, verify, t1, c_pers, render})
        s->add_option("--polygon", polygon, "polygon file {\"vertices\": ...}");
    for (auto* s : {deform, verify, mutate_c}) s->add_option("--m", m_s, "degree a,b,h");
    for (auto* s : {hilbert, ideal, deform, verify})
        s->add_option("--gens", gens_s, "generating set a,b,h;... fixing the order of x1..xr (default: Hilbert basis)");
    for (auto* s : {deform, verify}) {
        s->add_option("--q,--Q", q_s, "segment x1,y1,x2,y2 (default: canonical)");
        s->add_option("--param", param, "parameter name");
        s->add_flag("--literal", literal, "keep the generating set even when its tuples straddle a wall of Q");
    }
    for (auto* s : {ideal, deform, verify, cayley}) {
        s->add_option("--k", k_s, "multi-index");
        s->add_option("--a", a_s, "multi-index");
        s->add_option("--sweep", sweep, "certify all a, k with entry sum at most N");
    }
    mutate_c->add_option("--g", g_s, "witness polynomial (default 1 + chi^d)");
    for (auto* s : {degrees, t1, c_max}) s->add_option("--bounds", bounds_s, "n[,k[,kR]] (env LATMUT_DEFAULT_BOUNDS)");
    for (auto* s : {c_reduce, c_zero}) {
        s->add_option("--depth", depth, "composition depth");
        s->add_option("--budget", budget, "step budget");
    }
    c_equiv->add_option("--target", target, "target polynomial file");
    c_equiv->add_option("--target-expr", target_expr, "target polynomial in human syntax");
    c_equiv->add_option("--depth", depth, "total search depth")->default_val(4);
    c_pers->add_option("--degrees", degrees_s, "degrees a,b,h separated by ';' (default: mutable degrees of --poly)");
    c_pers->add_option("--steps", steps_s, "step degrees a,b,h separated by ';' (canonical segments)");
    cayley->add_option("--parts", parts_s, "JSON file {\"parts\": [polygon, ...]}")->required();
    render->add_option("--trace", trace_s, "trace JSON from classify reduce");
    render->add_option("--labels", labels, "coeffs or none")->check(CLI::IsMember({"coeffs", "none"}));
    render->add_flag("--origin", origin, "mark the origin");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : EXIT_PARSE;
    }

    bool json = common.format == "json";
    try {
        if (*hilbert) {
            MonoidData md = load_monoid(load_polygon(polygon, poly, expr), gens_s);
            emit(common, json ? dump(to_json(md)) : gens_text(md));
            return 0;
        }
        if (*ideal) {
            MonoidData md = load_monoid(load_polygon(polygon, poly, expr), gens_s);
            Json j = Json::object();
            std::ostringstream os;
            bool ok = true;
            if (sweep >= 0) {
                long count = 0;
                for (const auto& a : multi_indices(md.rank(), sweep))
                    for (const auto& k : multi_indices(md.rank(), sweep)) {
                        auto c = r_ak(md, a, k);
                        ++count;
                        if (!c.valid()) {
                            ok = false;
                            os << "failed: a = " << index_str(a) << ", k = " << index_str(k) << "\n";
                        }
                    }
                os << count << " relations checked, " << (ok ? "all certified" : "FAILURES") << "\n";
                j["checked"] = count;
                j["all_certified"] = ok;
            } else {
                MultiIndex k = index_for(k_s, md.rank(), "--k");
                auto f = f_k(md, k);
                os << "f_k = " << f << "\nboundary tuple = " << index_str(partial(md, k)) << "\n";
                j["k"] = k;
                j["f_k"] = to_json(f);
                j["boundary"] = partial(md, k);
                if (!a_s.empty()) {
                    auto c = r_ak(md, index_for(a_s, md.rank(), "--a"), k);
                    os << cert_text(c);
                    j["relation"] = to_json(c);
                    ok = c.valid();
                }
            }
            emit(common, json ? dump(j) : os.str());
            return ok ? 0 : EXIT_CERT;
        }
        if (*deform || *verify) {
            MonoidData base = load_monoid(load_polygon(polygon, poly, expr), gens_s);
            ExtDualVec m = parse_ext(m_s);
            Polygon Q = parse_segment(q_s, m);
            MonoidData md = literal ? base : adapted_monoid(base, Q);
            OneParamFamily fam(md, m, Q, param);
            Json j = Json::object();
            std::ostringstream os;
            bool ok = true;
            if (md.rank() != base.rank()) {
                os << "generators appended for the walls of Q:";
                for (std::size_t i = base.rank(); i < md.rank(); ++i) os << " x" << i + 1 << " = " << md.generators()[i];
                os << "\n";
                j["appended_generators"] = Json::array();
                for (std::size_t i = base.rank(); i < md.rank(); ++i) j["appended_generators"].push_back(to_json(md.generators()[i]));
            }
            if (sweep >= 0) {
                long count = 0;
                for (const auto& a : multi_indices(md.rank(), sweep))
                    for (const auto& k : multi_indices(md.rank(), sweep)) {
                        ++count;
                        auto c = fam.R(a, k);
                        if (!c.valid()) {
                            ok = false;
                            os << "failed: a = " << index_str(a) << ", k = " << index_str(k) << "\n";
                        }
                    }
                os << count << " relations checked, " << (ok ? "all certified" : "FAILURES") << "\n";
                j["checked"] = count;
                j["all_certified"] = ok;
            } else {
                MultiIndex k = index_for(k_s, md.rank(), "--k");
                if (*deform) {
                    auto F = fam.F(k);
                    os << "F_k = " << F << "\n";
                    j["k"] = k;
                    j["F"] = to_json(F);
                }
                if (!a_s.empty() || *verify) {
                    auto c = fam.R(index_for(a_s, md.rank(), "--a"), k);
                    os << cert_text(c);
                    j["relation"] = to_json(c);
                    ok = c.valid();
                }
            }
            emit(common, json ? dump(j) : os.str());
            return ok ? 0 : EXIT_CERT;
        }
        if (*mutate_c) {
            LaurentPoly f = load_poly(poly, expr);
            ExtDualVec m = parse_ext(m_s);
            LaurentPoly g = g_s.empty() ? canonical_witness(m) : parse_laurent(g_s);
            if (!is_mg_mutable(f, m, g)) throw PreconditionError("polynomial is not (m, g)-mutable");
            LaurentPoly r = mutate(f, m, g);
            emit(common, json ? dump(to_json(r)) : r.str());
            return 0;
        }
        if (*degrees) {
            LaurentPoly f = load_poly(poly, expr);
            Bounds b = bounds_from(bounds_s);
            auto set = mutable_degrees(f, b.n, b.k);
            Json arr = Json::array();
            std::ostringstream os;
            for (const auto& d : set.degrees) {
                arr.push_back(Json{{"m", to_json(d.m)}, {"edge", d.edge->index}, {"n", to_long(d.n)},
                                   {"k", to_long(d.k)}, {"g", d.g.str()}});
                os << d.m << "  edge " << d.edge->index << "  n=" << d.n << " k=" << d.k << "  g = " << d.g << "\n";
            }
            os << set.degrees.size() << " degrees (n <= " << set.n_max << ", k <= " << set.k_max << ")\n";
            emit(common, json ? dump(Json{{"bounds", {{"n_max", set.n_max}, {"k_max", set.k_max}}}, {"degrees", arr}})
                              : os.str());
            return 0;
        }
        if (*t1) {
            Polygon P = load_polygon(polygon, poly, expr);
            Bounds b = bounds_from(bounds_s);
            auto rows = t1_degrees(P, b.n, b.k, b.kR);
            Json arr = Json::array();
            std::ostringstream os;
            auto pad = [](std::string t, std::size_t w) { return t.size() < w ? t + std::string(w - t.size(), ' ') : t + " "; };
            os << pad("degree", 34) << pad("dim_pair", 10) << "dim_X\n";
            for (const auto& r : rows) {
                arr.push_back(to_json(r));
                std::ostringstream d;
                if (r.radial) d << r.k << "R* = " << r.degree;
                else d << r.n << "R* - " << r.k << "s_E" << *r.edge << " = " << r.degree;
                os << pad(d.str(), 34) << pad(std::to_string(r.dim_pair), 10) << r.dim_X << "\n";
            }
            emit(common, json ? dump(Json{{"bounds", {{"n_max", b.n}, {"k_max", b.k}, {"kR_max", b.kR}}},
                                          {"degrees", arr}})
                              : os.str());
            return 0;
        }
        if (*classify) {
            if (*c_reduce || *c_zero) {
                LaurentPoly f = load_poly(poly, expr);
                ReduceOptions opt;
                opt.depth = depth;
                opt.step_budget = budget;
                auto z = is_zero_mutable(f, opt);
                Json j = to_json(z.trace);
                if (*c_zero) j["zero_mutable"] = verdict_name(z.verdict);
                std::string text = trace_text(z.trace);
                if (*c_zero) text += std::string("0-mutable: ") + verdict_name(z.verdict) + "\n";
                emit(common, json ? dump(j) : text);
                if (*c_reduce) return 0;
                return z.verdict == Verdict::Yes ? 0 : z.verdict == Verdict::No ? EXIT_NO : EXIT_UNKNOWN;
            }
            if (*c_max) {
                LaurentPoly f = load_poly(poly, expr);
                Bounds b = bounds_from(bounds_s);
                auto r = is_maximally_mutable(f, b.n, b.k);
                std::ostringstream os;
                os << "maximally mutable (n <= " << b.n << ", k <= " << b.k << "): " << (r.maximal ? "Yes" : "No") << "\n";
                if (r.certificate) os << "extra degree " << *r.extra << " realized by " << *r.certificate << "\n";
                emit(common, json ? dump(to_json(r)) : os.str());
                return r.maximal ? 0 : EXIT_NO;
            }
            if (*c_equiv) {
                LaurentPoly f = load_poly(poly, expr);
                LaurentPoly g = load_poly(target, target_expr);
                EquivalenceOptions opt;
                opt.max_depth = depth;
                auto tr = mutation_equivalent(f, g, opt);
                if (!tr) {
                    emit(common, json ? dump(Json{{"found", false}}) : "no mutation sequence found within budgets\n");
                    return EXIT_UNKNOWN;
                }
                MutationTrace t;
                t.start = f;
                t.steps = *tr;
                Json j = to_json(t);
                j.erase("outcome");
                j["found"] = true;
                emit(common, json ? dump(j) : trace_text(t).substr(0, trace_text(t).rfind("outcome")));
                return 0;
            }
            if (*c_pers) {
                std::vector<ExtDualVec> M;
                Polygon P;
                if (!poly.empty() || !expr.empty()) {
                    LaurentPoly f = load_poly(poly, expr);
                    P = newton(f);
                    if (degrees_s.empty()) {
                        Bounds b = default_bounds();
                        for (const auto& d : mutable_degrees(f, b.n, b.k).degrees) M.push_back(d.m);
                    }
                } else {
                    P = load_polygon(polygon, "", "");
                }
                if (!degrees_s.empty()) M = parse_degree_list(degrees_s);
                std::vector<PolygonStep> steps;
                for (const auto& m : parse_degree_list(steps_s)) steps.push_back({m, canonical_segment(m)});
                auto r = check_degree_persistence(P, M, steps);
                std::ostringstream os;
                if (r.consistent) os << "consistent: every degree stays polygon-mutable\n";
                else os << "failure at stage " << *r.failing_stage << ": degree " << *r.failing_degree << "\n";
                emit(common, json ? dump(to_json(r)) : os.str());
                return r.consistent ? 0 : EXIT_NO;
            }
        }
        if (*cayley) {
            Json pj = read_json_file(parts_s);
            if (!pj.contains("parts")) throw ParseError("expected {\"parts\": [...]}");
            std::vector<Polygon> parts;
            for (const auto& p : pj["parts"]) parts.push_back(polygon_from_json(p));
            CayleyFamily fam(parts);
            std::size_t r = fam.monoid().rank();
            Json j = Json::object();
            std::ostringstream os;
            bool ok = true;
            if (sweep >= 0) {
                long count = 0;
                for (const auto& a : multi_indices(r, sweep))
                    for (const auto& k : multi_indices(r, sweep)) {
                        auto c = fam.R(a, k);
                        auto s = fam.substitute(c);
                        count += 2;
                        if (!c.valid() || !s.valid()) {
                            ok = false;
                            os << "failed: a = " << index_str(a) << ", k = " << index_str(k) << "\n";
                        }
                    }
                os << count << " relations checked, " << (ok ? "all certified" : "FAILURES") << "\n";
                j["checked"] = count;
                j["all_certified"] = ok;
            } else if (!k_s.empty()) {
                MultiIndex k = index_for(k_s, r, "--k");
                auto F = fam.F(k);
                auto S = fam.substitute(F);
                os << "F_k = " << F << "\nsubstituted = " << S << "\n";
                j["F"] = to_json(F);
                j["substituted"] = to_json(S);
                if (!a_s.empty()) {
                    auto c = fam.R(index_for(a_s, r, "--a"), k);
                    auto s = fam.substitute(c);
                    os << cert_text(c) << cert_text(s);
                    j["relation"] = to_json(c);
                    j["substituted_relation"] = to_json(s);
                    ok = c.valid() && s.valid();
                }
            } else {
                os << gens_text(fam.monoid());
                j = to_json(fam.monoid());
            }
            emit(common, json ? dump(j) : os.str());
            return ok ? 0 : EXIT_CERT;
        }
        if (*render) {
            std::vector<Panel> panels;
            if (!trace_s.empty()) panels = panels_of(trace_from_json(read_json_file(trace_s)));
            else if (!poly.empty() || !expr.empty()) panels.push_back(panel_of(load_poly(poly, expr)));
            else if (!polygon.empty()) panels.push_back(panel_of(read_polygon_file(polygon)));
            else throw ParseError("render needs --poly, --expr, --polygon or --trace");
            RenderOptions opt;
            opt.labels = labels == "coeffs";
            opt.origin = origin;
            emit(common, common.format == "tikz" ? render_tikz(panels, opt) : render_svg(panels, opt));
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return EXIT_PRECONDITION;
    } catch (const CertificationError& e) {
        std::cerr << "certification failed: " << e.what() << "\n";
        return EXIT_CERT;
    }
    return 0;
}
