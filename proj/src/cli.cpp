#include "hstar/cli.hpp"

#include "hstar/classify.hpp"
#include "hstar/deltaprops.hpp"
#include "hstar/ehrhart.hpp"
#include "hstar/families.hpp"
#include "hstar/io.hpp"
#include "hstar/polytope.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace hstar::cli {

namespace {

using io::OrderedJson;

struct Options {
    std::string input;
    std::string output;
    std::string method = "both";
    bool pretty = false;
    std::string family;
    long d = -1, e = -1, m = -1, h1 = -1, k = -1, l = -1;
    long volume = -1, dmax = -1;
    unsigned long long budget = classify::kDefaultSearchBudget;
    std::string delta_csv;
};

void emit(const OrderedJson& doc, const Options& opt, std::ostream& out) {
    std::ostream* sink = &out;
    std::ofstream file;
    if (!opt.output.empty()) {
        file.open(opt.output);
        if (!file)
            throw Error(ErrorKind::Format, "cannot open output file: " + opt.output);
        sink = &file;
    }
    *sink << (opt.pretty ? doc.dump(2) : doc.dump()) << '\n';
}

IntVec parse_delta_csv(const std::string& csv) {
    IntVec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.emplace_back(Int(item));
        } catch (const std::exception&) {
            throw Error(ErrorKind::Format, "malformed delta sequence: " + csv);
        }
    }
    if (out.empty())
        throw Error(ErrorKind::Format, "empty delta sequence");
    return out;
}

long require_param(long value, const char* name) {
    if (value < 0)
        throw Error(ErrorKind::Domain,
                    std::string("missing required parameter --") + name);
    return value;
}

OrderedJson facet_list_json(const poly::LatticePolytope& p,
                            const std::vector<poly::FacetDescription>& facets) {
    OrderedJson arr = OrderedJson::array();
    const std::size_t d = p.ambient_dim();
    for (const auto& f : facets) {
        OrderedJson fd;
        fd["vertices"] = f.vertex_indices;
        OrderedJson normal = OrderedJson::array();
        for (const auto& x : f.normal) normal.push_back(x.convert_to<std::int64_t>());
        fd["normal"] = std::move(normal);
        fd["offset"] = f.offset.convert_to<std::int64_t>();
        // Normalized volume of the facet within its affine lattice.
        Int vol = 1;
        if (d >= 2) {
            exactla::IntMatrix edges(d - 1, d);
            for (std::size_t i = 1; i < f.vertex_indices.size(); ++i)
                for (std::size_t j = 0; j < d; ++j)
                    edges(i - 1, j) = p.vertex(f.vertex_indices[i])[j] -
                                      p.vertex(f.vertex_indices[0])[j];
            vol = exactla::minor_gcd(edges, d - 1);
        }
        fd["volume"] = vol.convert_to<std::int64_t>();
        arr.push_back(std::move(fd));
    }
    return arr;
}

int cmd_delta(const Options& opt, std::ostream& out) {
    auto p = io::read_polytope_file(opt.input);
    poly::require_vertex_minimal(p);
    OrderedJson doc;
    doc["input"] = opt.input;
    if (p.name()) doc["name"] = *p.name();
    doc["dimension"] = poly::dimension(p);
    doc["method"] = opt.method;

    const bool is_simplex = p.vertex_count() == p.ambient_dim() + 1 &&
                            poly::dimension(p) == p.ambient_dim();
    std::optional<ehrhart::DeltaVector> delta;
    if (opt.method == "box" || opt.method == "both") {
        if (!is_simplex)
            throw Error(ErrorKind::Domain,
                        "box enumeration needs a full-dimensional simplex; "
                        "use --method count");
        delta = ehrhart::delta_from_box(poly::Simplex(p));
    }
    if (opt.method == "count" || opt.method == "both") {
        auto counted = ehrhart::delta_from_counts(p);
        if (delta && !(counted == *delta))
            throw Error(ErrorKind::Domain,
                        "engine disagreement between box enumeration and "
                        "counting transform");
        delta = std::move(counted);
    }
    if (!delta)
        throw Error(ErrorKind::Format, "unknown method: " + opt.method);
    doc["delta"] = io::delta_to_json(*delta);
    doc["volume"] = delta->sum().convert_to<std::int64_t>();
    emit(doc, opt, out);
    return 0;
}

int cmd_facets(const Options& opt, std::ostream& out) {
    auto p = io::read_polytope_file(opt.input);
    poly::require_vertex_minimal(p);
    auto facets = poly::facet_enumeration(p);
    OrderedJson doc;
    doc["input"] = opt.input;
    if (p.name()) doc["name"] = *p.name();
    doc["dimension"] = poly::dimension(p);
    doc["facets"] = facet_list_json(p, facets);
    emit(doc, opt, out);
    return 0;
}

int cmd_hvector(const Options& opt, std::ostream& out) {
    auto p = io::read_polytope_file(opt.input);
    poly::require_vertex_minimal(p);
    auto rep = props::h_vector(p);
    OrderedJson doc;
    doc["input"] = opt.input;
    if (p.name()) doc["name"] = *p.name();
    doc["dimension"] = poly::dimension(p);
    OrderedJson f = OrderedJson::array(), h = OrderedJson::array();
    for (const auto& x : rep.f) f.push_back(x.convert_to<std::int64_t>());
    for (const auto& x : rep.h.entries) h.push_back(x.convert_to<std::int64_t>());
    doc["f_vector"] = std::move(f);
    doc["h_vector"] = std::move(h);
    doc["lower_bound_met"] = rep.lower_bound_met;
    emit(doc, opt, out);
    return 0;
}

int cmd_check(const Options& opt, std::ostream& out) {
    auto p = io::read_polytope_file(opt.input);
    poly::require_vertex_minimal(p);
    OrderedJson doc;
    doc["input"] = opt.input;
    if (p.name()) doc["name"] = *p.name();
    const std::size_t dim = poly::dimension(p);
    doc["dimension"] = dim;

    const bool is_simplex =
        p.vertex_count() == p.ambient_dim() + 1 && dim == p.ambient_dim();
    ehrhart::DeltaVector delta =
        is_simplex ? ehrhart::delta_from_box(poly::Simplex(p))
                   : ehrhart::delta_from_counts(p);
    doc["delta"] = io::delta_to_json(delta);
    doc["volume"] = delta.sum().convert_to<std::int64_t>();

    OrderedJson properties;
    properties["shifted_symmetric"] = props::is_shifted_symmetric(delta);
    properties["symmetric"] = props::is_symmetric(delta);
    properties["stanley"] = props::stanley_holds(delta);
    properties["hibi"] = props::hibi_holds(delta);
    doc["properties"] = std::move(properties);

    if (is_simplex) {
        poly::Simplex s(p);
        auto tri = props::shifted_symmetry_report(s);
        OrderedJson t;
        t["shifted_symmetric"] = tri.shifted_symmetric;
        t["all_facets_unimodular"] = tri.all_facets_unimodular;
        t["box_strictly_interior"] = tri.box_strictly_interior;
        t["consistent"] = tri.consistent();
        if (tri.facet_witness) {
            t["facet_witness"] =
                OrderedJson{{"omitted_vertex", tri.facet_witness->first},
                            {"volume",
                             tri.facet_witness->second.convert_to<std::int64_t>()}};
        }
        if (tri.box_witness) {
            OrderedJson pt = OrderedJson::array();
            for (const auto& x : tri.box_witness->first.point)
                pt.push_back(x.convert_to<std::int64_t>());
            t["box_witness"] = OrderedJson{
                {"point", std::move(pt)},
                {"zero_coefficient_index", tri.box_witness->second}};
        }
        doc["unimodular_facet_equivalence"] = std::move(t);

        auto pv = props::prime_volume_criterion(s);
        OrderedJson pvj;
        pvj["status"] = pv.status == props::PrimeVolumeStatus::Holds ? "holds"
                        : pv.status == props::PrimeVolumeStatus::Violation
                            ? "violation"
                            : "inapplicable";
        if (!pv.reason.empty()) pvj["reason"] = pv.reason;
        doc["prime_volume_criterion"] = std::move(pvj);

        if (dim <= 16) {
            auto deg = ehrhart::degree_identity_report(s);
            doc["degree_identity"] =
                OrderedJson{{"top_index", deg.top_index},
                            {"first_interior_dilation", deg.first_interior_dilation},
                            {"holds", deg.holds}};
        }
    } else {
        doc["unimodular_facet_equivalence"] =
            OrderedJson{{"applicable", false}, {"reason", "not a simplex"}};
        doc["prime_volume_criterion"] =
            OrderedJson{{"status", "inapplicable"}, {"reason", "not a simplex"}};
    }
    emit(doc, opt, out);
    return 0;
}

int cmd_generate(const Options& opt, std::ostream& out) {
    fam::FamilyInstance inst = [&]() {
        if (opt.family == "shifted_standard")
            return fam::shifted_standard(require_param(opt.d, "d"),
                                         require_param(opt.e, "e"));
        if (opt.family == "augmented_standard")
            return fam::augmented_standard(require_param(opt.d, "d"),
                                           require_param(opt.e, "e"));
        if (opt.family == "circulant")
            return fam::circulant(require_param(opt.d, "d"),
                                  require_param(opt.m, "m"));
        if (opt.family == "simplicial_lb")
            return fam::simplicial_lower_bound(require_param(opt.d, "d"),
                                               require_param(opt.h1, "h1"));
        if (opt.family == "vol4")
            return fam::volume4_family(require_param(opt.k, "k"),
                                       require_param(opt.l, "l"));
        if (opt.family == "vol5a" || opt.family == "vol5b" ||
            opt.family == "vol5c") {
            auto variant = opt.family == "vol5a"   ? fam::Vol5Variant::A
                           : opt.family == "vol5b" ? fam::Vol5Variant::B
                                                   : fam::Vol5Variant::C;
            return fam::volume5_family(require_param(opt.k, "k"),
                                       require_param(opt.l, "l"), variant);
        }
        throw Error(ErrorKind::Domain, "unknown family: " + opt.family);
    }();
    emit(io::family_to_json(inst), opt, out);
    return 0;
}

int cmd_classify(const Options& opt, std::ostream& out) {
    auto rep = classify::classification_report(require_param(opt.dmax, "dmax"),
                                               require_param(opt.volume, "volume"),
                                               opt.budget);
    emit(io::classification_to_json(rep), opt, out);
    return 0;
}

int cmd_search_realize(const Options& opt, std::ostream& out) {
    auto target = classify::candidate_from_delta(parse_delta_csv(opt.delta_csv));
    auto res = classify::search_realization(target, opt.budget);
    emit(io::realization_to_json(res), opt, out);
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"Exact Ehrhart delta-vector toolkit"};
    app.require_subcommand(1);
    Options opt;

    auto add_io = [&](CLI::App* cmd, bool needs_input) {
        if (needs_input)
            cmd->add_option("--input", opt.input, "vertex file (JSON)")
                ->required();
        cmd->add_option("--output", opt.output, "write the report to a file");
        cmd->add_flag("--pretty", opt.pretty, "indented human-readable JSON");
    };

    auto* delta = app.add_subcommand("delta", "compute a delta-vector");
    add_io(delta, true);
    delta->add_option("--method", opt.method, "box | count | both")
        ->check(CLI::IsMember({"box", "count", "both"}));

    auto* facets = app.add_subcommand("facets", "enumerate facets");
    add_io(facets, true);

    auto* hvector =
        app.add_subcommand("hvector", "boundary-complex f- and h-vectors");
    add_io(hvector, true);

    auto* check = app.add_subcommand("check", "delta-vector property report");
    add_io(check, true);

    auto* generate = app.add_subcommand("generate", "emit a family instance");
    add_io(generate, false);
    generate->add_option("--family", opt.family,
                         "shifted_standard | augmented_standard | circulant | "
                         "simplicial_lb | vol4 | vol5a | vol5b | vol5c")
        ->required();
    generate->add_option("--d", opt.d, "dimension parameter");
    generate->add_option("--e", opt.e, "shift parameter");
    generate->add_option("--m", opt.m, "circulant width");
    generate->add_option("--h1", opt.h1, "target h_1");
    generate->add_option("--k", opt.k, "gap parameter k");
    generate->add_option("--l", opt.l, "gap parameter l");

    auto* classify_cmd =
        app.add_subcommand("classify", "classify shifted-symmetric (0,1) "
                                       "delta-vectors of bounded volume");
    add_io(classify_cmd, false);
    classify_cmd->add_option("--volume", opt.volume, "target volume (<= 5)")
        ->required();
    classify_cmd->add_option("--dmax", opt.dmax, "largest dimension")
        ->required();
    classify_cmd->add_option("--budget", opt.budget,
                             "search budget (simplices per candidate)");

    auto* search = app.add_subcommand(
        "search-realize", "brute-force search for a realizing simplex");
    add_io(search, false);
    search->add_option("--delta", opt.delta_csv, "comma-separated target, e.g. 1,0,1,0")
        ->required();
    search->add_option("--budget", opt.budget, "search budget");

    try {
        std::vector<const char*> argv;
        argv.push_back("hstar");
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        OrderedJson rec;
        rec["error"] = OrderedJson{{"kind", "usage"}, {"message", e.what()}};
        err << rec.dump() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(delta)) return cmd_delta(opt, out);
        if (app.got_subcommand(facets)) return cmd_facets(opt, out);
        if (app.got_subcommand(hvector)) return cmd_hvector(opt, out);
        if (app.got_subcommand(check)) return cmd_check(opt, out);
        if (app.got_subcommand(generate)) return cmd_generate(opt, out);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(opt, out);
        if (app.got_subcommand(search)) return cmd_search_realize(opt, out);
        throw Error(ErrorKind::Format, "no subcommand given");
    } catch (const Error& e) {
        OrderedJson rec;
        rec["error"] = OrderedJson{{"kind", e.kind_name()}, {"message", e.what()}};
        err << rec.dump() << '\n';
        return 1;
    } catch (const std::exception& e) {
        OrderedJson rec;
        rec["error"] = OrderedJson{{"kind", "internal"}, {"message", e.what()}};
        err << rec.dump() << '\n';
        return 1;
    }
}

} // namespace hstar::cli
