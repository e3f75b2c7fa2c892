#include "mutkit/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace mutkit {

namespace {

Int json_to_int(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s.empty()) throw Error(errc::parse_error, "empty integer literal");
        std::size_t k = s[0] == '-' ? 1 : 0;
        if (k == s.size()) throw Error(errc::parse_error, "bad integer literal: " + s);
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw Error(errc::parse_error, "bad integer literal: " + s);
        return Int(s);
    }
    throw Error(errc::parse_error, "expected an integer");
}

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

int rank_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rank") || !j["rank"].is_number_integer())
        throw Error(errc::parse_error, "missing integer field \"rank\"");
    int rank = j["rank"].get<int>();
    if (rank < 1) throw Error(errc::parse_error, "rank must be positive");
    return rank;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    auto is_int = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t k = allow_sign && s[0] == '-' ? 1 : 0;
        if (k == s.size()) return false;
        for (; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
        return true;
    };
    if (!is_int(num, true) || !is_int(den, false))
        throw Error(errc::parse_error, "bad rational literal: " + text);
    Rat r{Int(num), Int(den)};
    if (r.get_den() == 0) throw Error(errc::parse_error, "zero denominator: " + text);
    r.canonicalize();
    return r;
}

json poly_to_json(const LaurentPoly& f) {
    json j;
    j["rank"] = f.rank();
    json terms = json::array();
    for (const auto& [e, c] : f.terms()) {
        json t;
        t["c"] = rat_str(c);
        json ev = json::array();
        for (const Int& x : e) ev.push_back(int_to_json(x));
        t["e"] = std::move(ev);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

LaurentPoly poly_from_json(const json& j) {
    int rank = rank_from_json(j);
    if (!j.contains("terms") || !j["terms"].is_array())
        throw Error(errc::parse_error, "missing array field \"terms\"");
    LaurentPoly f(rank);
    for (const json& t : j["terms"]) {
        if (!t.is_object() || !t.contains("c") || !t.contains("e"))
            throw Error(errc::parse_error, "each term needs \"c\" and \"e\"");
        if (!t["c"].is_string())
            throw Error(errc::parse_error, "coefficients are strings (\"5\" or \"p/q\")");
        Rat c = parse_rational(t["c"].get<std::string>());
        if (c == 0) throw Error(errc::parse_error, "zero coefficient in term list");
        if (!t["e"].is_array() || static_cast<int>(t["e"].size()) != rank)
            throw Error(errc::parse_error, "exponent length does not match rank");
        Exponent e;
        for (const json& x : t["e"]) e.push_back(json_to_int(x));
        if (f.coeff(e) != 0) throw Error(errc::parse_error, "duplicate exponent in term list");
        f.add_term(e, c);
    }
    return f;
}

json polytope_to_json(const LatticePolytope& p) {
    json j;
    j["rank"] = p.rank();
    json verts = json::array();
    for (const IntVec& v : p.vertices()) {
        json row = json::array();
        for (const Int& x : v) row.push_back(int_to_json(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

json polytope_to_json(const RationalPolytope& p) {
    json j;
    j["rank"] = p.rank();
    json verts = json::array();
    for (const RatVec& v : p.vertices()) {
        json row = json::array();
        for (const Rat& x : v) row.push_back(rat_str(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    return j;
}

LatticePolytope lattice_polytope_from_json(const json& j) {
    int rank = rank_from_json(j);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error(errc::parse_error, "missing array field \"vertices\"");
    std::vector<IntVec> pts;
    for (const json& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw Error(errc::parse_error, "vertex length does not match rank");
        IntVec v;
        for (const json& x : row) v.push_back(json_to_int(x));
        pts.push_back(std::move(v));
    }
    if (pts.empty()) return LatticePolytope::empty(rank);
    return LatticePolytope::from_points(rank, pts);
}

RationalPolytope rational_polytope_from_json(const json& j) {
    int rank = rank_from_json(j);
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw Error(errc::parse_error, "missing array field \"vertices\"");
    std::vector<RatVec> pts;
    for (const json& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != rank)
            throw Error(errc::parse_error, "vertex length does not match rank");
        RatVec v;
        for (const json& x : row) {
            if (x.is_string())
                v.push_back(parse_rational(x.get<std::string>()));
            else
                v.push_back(Rat(json_to_int(x)));
        }
        pts.push_back(std::move(v));
    }
    if (pts.empty()) return RationalPolytope::empty(rank);
    return RationalPolytope::from_points(rank, pts);
}

json mutation_spec_to_json(const MutationSpec& spec) {
    json j;
    json w = json::array();
    for (const Int& x : spec.w.vec()) w.push_back(int_to_json(x));
    j["w"] = std::move(w);
    j["factor"] = polytope_to_json(spec.factor);
    json wit;
    for (const auto& [h, g] : spec.witnesses) wit[h.get_str()] = polytope_to_json(g);
    j["witnesses"] = std::move(wit);
    return j;
}

namespace {

json matrix_to_json(const IntMat& m) {
    json rows = json::array();
    for (const IntVec& r : m) {
        json row = json::array();
        for (const Int& x : r) row.push_back(int_to_json(x));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

json lift_result_to_json(const LiftResult& lift) {
    json j;
    j["lifted"] = poly_to_json(lift.lifted);
    j["basis"] = matrix_to_json(lift.basis);
    j["index"] = int_to_json(lift.index);
    j["full_rank"] = lift.full_rank;
    json v = json::array();
    for (const Int& x : lift.base_exponent) v.push_back(int_to_json(x));
    j["base_monomial"] = std::move(v);
    return j;
}

json pipeline_node_to_json(const NodeArtifacts& node) {
    json j;
    j["triple"] = json::array({int_to_json(node.triple.a()), int_to_json(node.triple.b()),
                               int_to_json(node.triple.c())});
    j["n"] = node.n;
    j["variant"] = node.exotic ? "exotic" : "lift";
    if (node.width) {
        json w = json::array();
        for (const Int& x : node.width->vec()) w.push_back(int_to_json(x));
        j["w"] = std::move(w);
    }
    json steps = json::array();
    for (const PipelineStep& s : node.steps) {
        json sj;
        sj["from"] = s.from.str();
        sj["to"] = s.to.str();
        json w = json::array();
        for (const Int& x : s.w.vec()) w.push_back(int_to_json(x));
        sj["w"] = std::move(w);
        sj["factor"] = polytope_to_json(s.factor);
        if (s.basis_change) sj["basis_change"] = matrix_to_json(*s.basis_change);
        sj["algebraic"] = s.algebraic;
        steps.push_back(std::move(sj));
    }
    j["steps"] = std::move(steps);
    if (node.basis_change) j["basis_change"] = matrix_to_json(*node.basis_change);
    if (node.factor_potential) j["factor_potential"] = poly_to_json(*node.factor_potential);
    if (node.base_monomial) {
        json v = json::array();
        for (const Int& x : *node.base_monomial) v.push_back(int_to_json(x));
        j["base_monomial"] = std::move(v);
    }
    if (node.augmentation_index) j["augmentation_index"] = int_to_json(*node.augmentation_index);
    j["augmentation_checked"] = node.augmentation_checked;
    return j;
}

std::string fingerprint_csv_header() {
    return "rank,vertex_count,normalized_volume,edge_lengths,points_P,points_2P,interior_points";
}

namespace {

std::string join_lengths(const std::vector<Int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ";";
        out += xs[i].get_str();
    }
    return out;
}

}  // namespace

std::string fingerprint_csv_row(const Fingerprint& fp) {
    std::ostringstream os;
    os << fp.rank << "," << fp.vertex_count << "," << fp.normalized_volume.get_str() << ","
       << join_lengths(fp.edge_lengths) << "," << fp.points_p.get_str() << ","
       << fp.points_2p.get_str() << "," << fp.interior_points.get_str();
    return os.str();
}

std::string family_report_csv(const FamilyReport& report) {
    std::ostringstream os;
    os << "triple,variant,n," << fingerprint_csv_header() << ",distinct_from_all\n";
    for (const FamilyRow& row : report.rows) {
        os << row.triple.a().get_str() << ";" << row.triple.b().get_str() << ";"
           << row.triple.c().get_str() << "," << row.variant << "," << row.n << ",";
        if (row.ok && row.fp)
            os << fingerprint_csv_row(*row.fp);
        else
            os << "error:" << (row.error.empty() ? "unavailable" : "pipeline") << ",,,,,,";
        os << "," << (row.distinct_from_all ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(errc::parse_error, "cannot open " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw Error(errc::parse_error, "invalid JSON in " + path);
    return j;
}

LaurentPoly load_poly(const std::string& path) { return poly_from_json(load_json_file(path)); }

LatticePolytope load_lattice_polytope(const std::string& path) {
    return lattice_polytope_from_json(load_json_file(path));
}

}  // namespace mutkit
