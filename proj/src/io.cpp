#include "latmut/io.hpp"

#include "latmut/expr_parser.hpp"

#include <fstream>
#include <sstream>

namespace latmut {

LaurentPoly parse_laurent(const std::string& text) {
    ExprParser<LaurentPoly>::Hooks h;
    h.variable = [](const std::string& v) {
        if (v == "x") return LaurentPoly::monomial({1, 0});
        if (v == "y") return LaurentPoly::monomial({0, 1});
        throw ParseError("unknown variable '" + v + "' (only x and y are allowed)");
    };
    h.constant = [](const Rat& c) { return LaurentPoly(c); };
    h.power = [](const LaurentPoly& b, long e) {
        if (e >= 0) return b.pow(e);
        if (b.size() != 1) throw ParseError("negative exponent on a polynomial with several terms");
        const auto& [v, c] = *b.terms().begin();
        Rat inv = Rat(1) / c;
        Rat cp = 1;
        for (long i = 0; i < -e; ++i) cp *= inv;
        return LaurentPoly::monomial(v * Int(e), cp);
    };
    return ExprParser<LaurentPoly>(text, h).parse();
}

namespace {

std::vector<Int> parse_ints(std::string s) {
    for (char& c : s)
        if (c == '[' || c == ']' || c == '(' || c == ')') c = ' ';
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        auto b = tok.find_first_not_of(" \t");
        auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in integer list '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
        if (i == tok.size()) throw ParseError("bad integer '" + tok + "'");
        for (std::size_t k = i; k < tok.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw ParseError("bad integer '" + tok + "'");
        out.push_back(Int(tok[0] == '+' ? tok.substr(1) : tok));
    }
    return out;
}

Int json_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        auto v = parse_ints(j.get<std::string>());
        if (v.size() == 1) return v[0];
    }
    throw ParseError("expected an integer, got " + j.dump());
}

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return Json(static_cast<long long>(v));
    return Json(to_string(v));
}

}  // namespace

ExtDualVec parse_ext(const std::string& text) {
    auto v = parse_ints(text);
    if (v.size() != 3) throw ParseError("degree needs three integers: '" + text + "'");
    return {v[0], v[1], v[2]};
}

LatticeVec parse_lattice(const std::string& text) {
    auto v = parse_ints(text);
    if (v.size() != 2) throw ParseError("lattice point needs two integers: '" + text + "'");
    return {v[0], v[1]};
}

std::vector<long> parse_index(const std::string& text) {
    std::vector<long> out;
    for (const auto& v : parse_ints(text)) out.push_back(to_long(v));
    return out;
}

Json to_json(const LatticeVec& v) { return Json::array({int_json(v.x), int_json(v.y)}); }

Json to_json(const ExtDualVec& v) { return Json::array({int_json(v.a), int_json(v.b), int_json(v.h)}); }

Json to_json(const Polygon& P) {
    Json vs = Json::array();
    for (const auto& v : P.vertices()) vs.push_back(to_json(v));
    return Json{{"vertices", vs}};
}

Json to_json(const LaurentPoly& f) {
    Json ts = Json::array();
    for (const auto& [e, c] : f.terms()) ts.push_back(Json{{"exp", to_json(e)}, {"coeff", to_string(c)}});
    return Json{{"terms", ts}};
}

Json to_json(const GradedPoly& p) {
    Json ts = Json::array();
    const Ring& r = *p.ring();
    for (const auto& [e, c] : p.terms()) {
        Json mono = Json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) mono[r.names[i]] = e[i];
        ts.push_back(Json{{"monomial", mono}, {"coeff", to_string(c)}});
    }
    Json out{{"text", p.str()}, {"terms", ts}};
    if (auto d = p.homogeneous_degree()) {
        Json dj = Json::array();
        for (const auto& x : *d) dj.push_back(int_json(x));
        out["degree"] = dj;
    }
    return out;
}

Json to_json(const RelationCert& c) {
    Json comb = Json::array();
    for (const auto& t : c.combination)
        comb.push_back(Json{{"coeff", t.coeff.str()}, {"label", t.label}, {"index", t.index}, {"F", t.value.str()}});
    Json out{{"a", c.a}, {"k", c.k}, {"combination", comb}, {"expansion_zero", c.valid()}};
    if (auto bad = c.first_nonzero()) out["first_nonzero_term"] = *bad;
    return out;
}

Json to_json(const MonoidData& md) {
    Json gens = Json::array();
    for (const auto& s : md.generators()) gens.push_back(to_json(s));
    return Json{{"polygon", to_json(md.polygon())}, {"generators", gens}, {"gorenstein", to_json(R_STAR)}};
}

Json to_json(const TraceStep& s) {
    return Json{{"m", to_json(s.m)}, {"g", to_json(s.g)}, {"g_text", s.g.str()}, {"result", to_json(s.result)},
                {"result_text", s.result.str()}};
}

Json to_json(const MutationTrace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back(to_json(s));
    Json out{{"start", to_json(t.start)}, {"start_text", t.start.str()}, {"steps", steps},
             {"outcome", outcome_name(t.outcome)}, {"k_cap", t.k_cap}};
    if (t.witness) out["witness"] = to_json(*t.witness);
    return out;
}

Json to_json(const T1Report& r) {
    Json out{{"degree", to_json(r.degree)}};
    if (r.radial) {
        out["radial"] = true;
        out["k"] = r.k;
    } else {
        out["edge"] = *r.edge;
        out["n"] = r.n;
        out["k"] = r.k;
    }
    out["dim_pair"] = r.dim_pair;
    out["dim_X"] = r.dim_X;
    return out;
}

Json to_json(const MaxMutableResult& r) {
    Json degs = Json::array(), cands = Json::array();
    for (const auto& m : r.degrees) degs.push_back(to_json(m));
    for (const auto& m : r.candidates) cands.push_back(to_json(m));
    Json out{{"maximal", r.maximal}, {"bounds", {{"n_max", r.n_max}, {"k_max", r.k_max}}}, {"degrees", degs},
             {"candidates", cands}};
    if (r.extra) out["extra_degree"] = to_json(*r.extra);
    if (r.certificate) {
        out["certificate"] = to_json(*r.certificate);
        out["certificate_text"] = r.certificate->str();
    }
    return out;
}

Json to_json(const PersistenceReport& r) {
    Json stages = Json::array();
    for (std::size_t i = 0; i < r.polygons.size(); ++i) {
        Json degs = Json::array();
        for (const auto& m : r.degrees[i]) degs.push_back(to_json(m));
        stages.push_back(Json{{"polygon", to_json(r.polygons[i])}, {"degrees", degs}});
    }
    Json out{{"consistent", r.consistent}, {"stages", stages}};
    if (r.failing_stage) {
        out["failing_stage"] = *r.failing_stage;
        out["failing_degree"] = to_json(*r.failing_degree);
    }
    return out;
}

LatticeVec lattice_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw ParseError("lattice point must be [x,y], got " + j.dump());
    return {json_int(j[0]), json_int(j[1])};
}

ExtDualVec ext_from_json(const Json& j) {
    if (j.is_string()) return parse_ext(j.get<std::string>());
    if (!j.is_array() || j.size() != 3) throw ParseError("degree must be [a,b,h], got " + j.dump());
    return {json_int(j[0]), json_int(j[1]), json_int(j[2])};
}

Polygon polygon_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("polygon must be {\"vertices\": [[x,y], ...]}");
    std::vector<LatticeVec> vs;
    for (const auto& v : j["vertices"]) vs.push_back(lattice_from_json(v));
    if (vs.empty()) throw ParseError("polygon has no vertices");
    // vertices may be listed in either orientation
    Polygon P = Polygon::hull(vs);
    if (P.size() != vs.size()) throw ParseError("invalid polygon: vertices are not in strictly convex position");
    return P;
}

LaurentPoly laurent_from_json(const Json& j) {
    if (j.is_string()) return parse_laurent(j.get<std::string>());
    if (j.is_object() && j.contains("poly")) return parse_laurent(j["poly"].get<std::string>());
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial must be {\"terms\": [...]} or {\"poly\": \"...\"}");
    LaurentPoly f;
    for (const auto& t : j["terms"]) {
        if (!t.contains("exp") || !t.contains("coeff")) throw ParseError("term needs exp and coeff: " + t.dump());
        const auto& c = t["coeff"];
        Rat q = c.is_string() ? parse_rat(c.get<std::string>()) : Rat(json_int(c));
        f.add_term(lattice_from_json(t["exp"]), q);
    }
    return f;
}

MutationTrace trace_from_json(const Json& j) {
    MutationTrace t;
    t.start = laurent_from_json(j.at("start"));
    for (const auto& s : j.at("steps"))
        t.steps.push_back({ext_from_json(s.at("m")), laurent_from_json(s.at("g")), laurent_from_json(s.at("result"))});
    std::string o = j.value("outcome", "BoundExceeded");
    t.outcome = o == "Point" ? Outcome::Point : o == "Witness" ? Outcome::Witness : Outcome::BoundExceeded;
    if (j.contains("witness")) t.witness = lattice_from_json(j["witness"]);
    t.k_cap = j.value("k_cap", 0L);
    return t;
}

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool looks_like_json(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    return b != std::string::npos && (s[b] == '{' || s[b] == '[' || s[b] == '"');
}

}  // namespace

Json read_json_file(const std::string& path) {
    std::string s = slurp(path);
    try {
        return Json::parse(s);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

LaurentPoly read_laurent_file(const std::string& path) {
    std::string s = slurp(path);
    if (!looks_like_json(s)) return parse_laurent(s);
    try {
        return laurent_from_json(Json::parse(s));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

Polygon read_polygon_file(const std::string& path) {
    std::string s = slurp(path);
    if (!looks_like_json(s)) return newton(parse_laurent(s));
    try {
        Json j = Json::parse(s);
        if (j.is_object() && j.contains("vertices")) return polygon_from_json(j);
        return newton(laurent_from_json(j));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace latmut
