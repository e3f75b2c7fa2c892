#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mutkit/io.hpp"
#include "mutkit/markov.hpp"
#include "mutkit/mutation.hpp"
#include "mutkit/svg.hpp"

namespace mutkit::cli {

namespace {

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw Error(errc::invalid_argument, "cannot write " + out_path);
    out << content;
}

IntVec parse_int_list(const std::string& text) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw Error(errc::parse_error, "empty entry in list: " + text);
        std::size_t k = item[0] == '-' ? 1 : 0;
        if (k == item.size()) throw Error(errc::parse_error, "bad integer: " + item);
        for (; k < item.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(item[k])))
                throw Error(errc::parse_error, "bad integer: " + item);
        out.emplace_back(item);
    }
    if (out.empty()) throw Error(errc::parse_error, "empty list");
    return out;
}

MarkovTriple parse_triple(const std::string& text) {
    IntVec v = parse_int_list(text);
    if (v.size() != 3) throw Error(errc::parse_error, "a triple needs three entries");
    return MarkovTriple(v[0], v[1], v[2]);
}

IntMat parse_projection(const std::string& text) {
    if (text == "xy" || text == "xz" || text == "yz") return named_projection(text);
    std::size_t semi = text.find(';');
    if (semi == std::string::npos)
        throw Error(errc::parse_error, "projection is \"r1;r2\" or a plane name");
    return {parse_int_list(text.substr(0, semi)), parse_int_list(text.substr(semi + 1))};
}

struct Options {
    std::string potential, factor, polytope, a, b, out, width, projection, triple;
    int axis = -1;
    int dim = 3;
    int depth = 2;
    long scale = 24;
    bool no_grid = false;
    bool pretty = false;
    bool potential_track = false;
    std::string spec_out;
};

int dispatch(const std::string& verb, const Options& o) {
    if (verb == "bsp") {
        LaurentPoly w = load_poly(o.potential);
        LaurentPoly f = load_poly(o.factor);
        auto [result, outcome] = bsp_transform(w, o.axis, f);
        if (o.pretty)
            write_output(o.out, pretty(result) + "\n");
        else
            write_output(o.out, dump_canonical(poly_to_json(result)));
        if (!o.spec_out.empty())
            write_output(o.spec_out, dump_canonical(mutation_spec_to_json(outcome.spec)));
        return 0;
    }
    if (verb == "mutate") {
        LatticePolytope p = load_lattice_polytope(o.polytope);
        WidthVector w(parse_int_list(o.width));
        LatticePolytope f = load_lattice_polytope(o.factor);
        MutationOutcome mo = mutate_polytope(p, w, f);
        write_output(o.out, dump_canonical(polytope_to_json(mo.polytope)));
        if (!o.spec_out.empty())
            write_output(o.spec_out, dump_canonical(mutation_spec_to_json(mo.spec)));
        return 0;
    }
    if (verb == "newton") {
        LaurentPoly f = load_poly(o.potential);
        write_output(o.out, dump_canonical(polytope_to_json(newton(f))));
        return 0;
    }
    if (verb == "lift" || verb == "exotic") {
        MarkovTriple t = parse_triple(o.triple);
        Pipeline pipe;
        const NodeArtifacts& node =
            verb == "lift" ? pipe.lifted(t, o.dim) : pipe.exotic(t, o.dim);
        if (o.potential_track && !node.potential)
            throw Error(errc::potential_unavailable,
                        "no potential track for " + t.str() + " at dimension " +
                            std::to_string(o.dim));
        json j;
        j["triple"] = json::array({node.triple.a().get_si(), node.triple.b().get_si(),
                                   node.triple.c().get_si()});
        j["n"] = node.n;
        j["variant"] = node.exotic ? "exotic" : "lift";
        j["polytope"] = polytope_to_json(node.polytope);
        j["potential"] = node.potential ? poly_to_json(*node.potential) : json(nullptr);
        j["provenance"] = pipeline_node_to_json(node);
        write_output(o.out, dump_canonical(j));
        return 0;
    }
    if (verb == "markov") {
        json arr = json::array();
        for (const MarkovNode& node : enumerate_tree(o.depth)) {
            json nj;
            nj["triple"] = json::array({node.triple.a().get_si(), node.triple.b().get_si(),
                                        node.triple.c().get_si()});
            nj["depth"] = node.depth;
            nj["parent"] = node.parent
                               ? json(json::array({node.parent->a().get_si(),
                                                   node.parent->b().get_si(),
                                                   node.parent->c().get_si()}))
                               : json(nullptr);
            arr.push_back(std::move(nj));
        }
        write_output(o.out, dump_canonical(arr));
        return 0;
    }
    if (verb == "invariants") {
        LatticePolytope p = load_lattice_polytope(o.polytope);
        Fingerprint fp = fingerprint(p);
        write_output(o.out, fingerprint_csv_header() + "\n" + fingerprint_csv_row(fp) + "\n");
        return 0;
    }
    if (verb == "equiv") {
        LatticePolytope pa = load_lattice_polytope(o.a);
        LatticePolytope pb = load_lattice_polytope(o.b);
        json j;
        j["equivalent"] = are_equivalent(pa, pb);
        write_output(o.out, dump_canonical(j));
        return 0;
    }
    if (verb == "render") {
        LatticePolytope p = load_lattice_polytope(o.polytope);
        std::optional<LaurentPoly> f;
        if (!o.potential.empty()) f = load_poly(o.potential);
        RenderConfig cfg;
        cfg.grid = !o.no_grid;
        cfg.scale = o.scale;
        if (!o.projection.empty()) cfg.projection = parse_projection(o.projection);
        write_output(o.out, render_svg(p, f, cfg));
        return 0;
    }
    if (verb == "report") {
        FamilyReport rep = family_report(o.depth, o.dim);
        write_output(o.out, family_report_csv(rep));
        return 0;
    }
    throw Error(errc::parse_error, "unknown command: " + verb);
}

}  // namespace

int run(const std::vector<std::string>& args) {
    CLI::App app{"exact wall-crossing calculus for disk potentials and Newton polytopes"};
    app.require_subcommand(1);
    Options o;
    long seed = 0;  // reserved; all algorithms are deterministic

    auto* bsp = app.add_subcommand("bsp", "substitute z -> z*factor on an axis");
    bsp->add_option("--potential", o.potential, "potential JSON file")->required();
    bsp->add_option("--axis", o.axis, "0-based axis index")->required();
    bsp->add_option("--factor", o.factor, "factor potential JSON file")->required();

    auto* mut = app.add_subcommand("mutate", "combinatorial mutation of a polytope");
    mut->add_option("--polytope", o.polytope, "polytope JSON file")->required();
    mut->add_option("--width", o.width, "width vector w1,...,wn")->required();
    mut->add_option("--factor", o.factor, "factor polytope JSON file")->required();

    auto* newt = app.add_subcommand("newton", "Newton polytope of a potential");
    newt->add_option("--potential", o.potential, "potential JSON file")->required();

    auto* lift = app.add_subcommand("lift", "lifted torus data for a Markov triple");
    lift->add_option("--triple", o.triple, "Markov triple a,b,c")->required();
    lift->add_option("--dim", o.dim, "ambient dimension n")->required();
    lift->add_flag("--potential-track", o.potential_track, "fail unless a potential is found");

    auto* exo = app.add_subcommand("exotic", "surgered lift data for a Markov triple");
    exo->add_option("--triple", o.triple, "Markov triple a,b,c")->required();
    exo->add_option("--dim", o.dim, "ambient dimension n")->required();
    exo->add_flag("--potential-track", o.potential_track, "fail unless a potential is found");

    auto* mk = app.add_subcommand("markov", "enumerate the Markov tree");
    mk->add_option("--depth", o.depth, "tree depth")->required();

    auto* inv = app.add_subcommand("invariants", "fingerprint CSV of a polytope");
    inv->add_option("--polytope", o.polytope, "polytope JSON file")->required();

    auto* eq = app.add_subcommand("equiv", "affine-unimodular equivalence of two polytopes");
    eq->add_option("--a", o.a, "polytope JSON file")->required();
    eq->add_option("--b", o.b, "polytope JSON file")->required();

    auto* ren = app.add_subcommand("render", "SVG picture of a polytope");
    ren->add_option("--polytope", o.polytope, "polytope JSON file")->required();
    ren->add_option("--potential", o.potential, "potential JSON file (marks support)");
    ren->add_option("--projection", o.projection, "rank-3 projection: xy|xz|yz or \"r1;r2\"");
    ren->add_option("--scale", o.scale, "pixels per lattice unit");
    ren->add_flag("--no-grid", o.no_grid, "omit the lattice grid");

    auto* rep = app.add_subcommand("report", "distinctness report over the Markov family");
    rep->add_option("--depth", o.depth, "tree depth")->required();
    rep->add_option("--dim", o.dim, "ambient dimension n")->required();

    for (auto* sub : {bsp, mut, newt, lift, exo, mk, inv, eq, ren, rep}) {
        sub->add_option("--out", o.out, "output file (default: stdout)");
        sub->add_option("--seed", seed, "reserved, no effect");
        sub->add_flag("--pretty", o.pretty, "human-readable output where supported");
    }
    bsp->add_option("--spec-out", o.spec_out, "also write the mutation spec JSON");
    mut->add_option("--spec-out", o.spec_out, "also write the mutation spec JSON");

    std::vector<std::string> argv_r(args.rbegin(), args.rend());
    try {
        app.parse(argv_r);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help() << "\n";
        return 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == errc::parse_error ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace mutkit::cli
