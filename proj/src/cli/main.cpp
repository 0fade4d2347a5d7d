#include "mapforge/embed.hpp"
#include "mapforge/errors.hpp"
#include "mapforge/forms.hpp"
#include "mapforge/graph.hpp"
#include "mapforge/json_io.hpp"
#include "mapforge/map.hpp"
#include "mapforge/poly.hpp"
#include "mapforge/smanifold.hpp"
#include "mapforge/voltage.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <iostream>
#include <sstream>
#include <string>

namespace mf = mapforge;
using mf::json;

namespace {

struct Options {
    std::string graph, map_file, group_file;
    std::string cls = "O", relation = "iso", variant, allowed = "5,6,7";
    long long budget = mf::EnumLimits{}.budget;
    int workers = 1;
    int max_faces = 14;
    long long seed = 0;  // accepted for reproducible scheduling; results never depend on it
    bool pretty = false;
};

mf::EnumLimits limits_of(const Options& o) {
    return {o.budget, o.workers};
}

mf::MultiGraph resolve_graph(const std::string& value) {
    if (value.empty()) throw mf::input_error("a graph is required (--graph <name|file>)");
    if (std::filesystem::exists(value))
        return mf::graph_from_json(mf::load_json_file(value));
    return mf::graph_from_name(value);
}

mf::CombMap resolve_map(const std::string& value) {
    if (value.empty()) throw mf::input_error("a map file is required (--map <file>)");
    return mf::map_from_json(mf::load_json_file(value));
}

void emit(const json& j, const Options& o) {
    std::cout << mf::dump_json(j, o.pretty);
}

json poly_triple(const mf::GenusPolys& p) {
    return json{{"orientable", mf::laurent_to_json(p.orientable)},
                {"nonorientable", mf::laurent_to_json(p.nonorientable)},
                {"total", mf::laurent_to_json(p.total)},
                {"display", mf::laurent_str(p.total)}};
}

std::vector<int> parse_allowed(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw mf::input_error("bad --allowed entry: \"" + item + "\"");
        }
    }
    if (out.empty()) throw mf::input_error("--allowed must list at least one valency");
    return out;
}

int parse_suffix(const std::string& name, const std::string& prefix, const char* what) {
    if (name.rfind(prefix, 0) == 0) {
        try {
            return std::stoi(name.substr(prefix.size()));
        } catch (const std::exception&) {
        }
    }
    throw mf::input_error(std::string(what) + " expects --graph " + prefix + "<n>");
}

int run_validate(const Options& o) {
    std::vector<std::string> errors;
    if (!o.map_file.empty()) {
        try {
            errors = mf::validate(mf::map_from_json_unchecked(mf::load_json_file(o.map_file)));
        } catch (const mf::input_error& e) {
            errors = {e.what()};
        }
    } else if (!o.graph.empty()) {
        try {
            resolve_graph(o.graph);
        } catch (const mf::input_error& e) {
            errors = {e.what()};
        }
    } else {
        throw CLI::ValidationError("validate needs --map or --graph");
    }
    emit(json{{"valid", errors.empty()}, {"errors", errors}}, o);
    return errors.empty() ? 0 : 1;
}

int run_census(const Options& o) {
    auto entries = mf::smanifold_census(o.max_faces, parse_allowed(o.allowed));
    for (const auto& e : entries) {
        json line{{"class", mf::to_string(e.cls)}};
        line.update(mf::invariants_to_json(e.inv));
        line["map"] = mf::map_to_json(e.map);
        std::cout << line.dump() << "\n";
    }
    return 0;
}

int dispatch(const std::string& verb, const Options& o) {
    if (verb == "validate") return run_validate(o);
    if (verb == "invariants") {
        emit(mf::invariants_to_json(mf::invariants(resolve_map(o.map_file))), o);
        return 0;
    }
    if (verb == "dual") {
        emit(mf::map_to_json(mf::dual(resolve_map(o.map_file))), o);
        return 0;
    }
    if (verb == "auts") {
        mf::CombMap M = resolve_map(o.map_file);
        auto auts = mf::automorphism_group(M);
        emit(json{{"order", auts.size()},
                  {"orientation_preserving", mf::orientation_preserving_auts(M).size()}},
             o);
        return 0;
    }
    if (verb == "embed-count") {
        mf::MultiGraph g = resolve_graph(o.graph);
        mf::EmbClass cls = mf::emb_class_from_string(o.cls);
        emit(json{{"class", mf::to_string(cls)},
                  {"count", mf::bigint_to_json(mf::count_embeddings(g, cls))}},
             o);
        return 0;
    }
    if (verb == "enumerate") {
        mf::MultiGraph g = resolve_graph(o.graph);
        mf::EmbClass cls = mf::emb_class_from_string(o.cls);
        mf::Relation rel = mf::relation_from_string(o.relation);
        auto reps = mf::orbit_partition(g, cls, rel, limits_of(o));
        json by_genus = json::object();
        std::map<long long, long long> tally;
        for (const auto& M : reps) {
            auto inv = mf::invariants(M);
            tally[inv.orientable ? inv.genus : -inv.genus] += 1;
        }
        for (const auto& [k, v] : tally) by_genus[std::to_string(k)] = v;
        json rep_list = json::array();
        for (const auto& M : reps) rep_list.push_back(mf::map_to_json(M));
        emit(json{{"class", mf::to_string(cls)},
                  {"relation", mf::to_string(rel)},
                  {"count", reps.size()},
                  {"by_genus", std::move(by_genus)},
                  {"representatives", std::move(rep_list)}},
             o);
        return 0;
    }
    if (verb == "burnside") {
        mf::MultiGraph g = resolve_graph(o.graph);
        mf::BigInt n = mf::burnside_count(g, mf::emb_class_from_string(o.cls),
                                          mf::relation_from_string(o.relation), limits_of(o));
        emit(json{{"count", mf::bigint_to_json(n)}}, o);
        return 0;
    }
    if (verb == "genus-poly") {
        emit(poly_triple(mf::genus_poly(resolve_graph(o.graph), limits_of(o))), o);
        return 0;
    }
    if (verb == "rooted-poly") {
        emit(poly_triple(mf::rooted_poly(resolve_graph(o.graph), limits_of(o))), o);
        return 0;
    }
    if (verb == "kn-count") {
        int n = parse_suffix(o.graph, "K", "kn-count");
        std::string variant = o.variant.empty() ? "statement" : o.variant;
        mf::KnVariant v;
        if (variant == "statement")
            v = mf::KnVariant::Statement;
        else if (variant == "proof")
            v = mf::KnVariant::Proof;
        else
            throw CLI::ValidationError("--variant must be statement or proof");
        auto counts = mf::kn_closed_forms(n, v);
        emit(json{{"variant", variant},
                  {"n_orientable", mf::bigrat_to_json(counts.n_orientable)},
                  {"n_locally", mf::bigrat_to_json(counts.n_locally)},
                  {"n_nonorientable", mf::bigrat_to_json(counts.n_nonorientable)}},
             o);
        return 0;
    }
    if (verb == "bouquet-count") {
        int n = parse_suffix(o.graph, "B", "bouquet-count");
        std::string variant = o.variant.empty() ? "burnside" : o.variant;
        if (variant == "burnside") {
            auto counts = mf::bouquet_counts(n);
            emit(json{{"variant", variant},
                      {"n_orientable", mf::bigint_to_json(counts.n_orientable)},
                      {"n_locally", mf::bigint_to_json(counts.n_locally)},
                      {"n_nonorientable", mf::bigint_to_json(counts.n_nonorientable)}},
                 o);
        } else if (variant == "printed") {
            emit(json{{"variant", variant},
                      {"n_orientable", mf::bigrat_to_json(mf::bouquet_orientable_printed(n))},
                      {"n_nonorientable",
                       mf::bigrat_to_json(mf::bouquet_nonorientable_printed(n))}},
                 o);
        } else {
            throw CLI::ValidationError("--variant must be burnside or printed");
        }
        return 0;
    }
    if (verb == "voltage-lift") {
        mf::CombMap M = resolve_map(o.map_file);
        if (o.group_file.empty())
            throw CLI::ValidationError("voltage-lift needs --group <voltage file>");
        auto [G, theta] = mf::voltage_from_json(mf::load_json_file(o.group_file));
        auto lifted = mf::lift(M, G, theta);
        emit(json{{"map", mf::map_to_json(lifted.map)},
                  {"invariants", mf::invariants_to_json(mf::invariants(lifted.map))}},
             o);
        return 0;
    }
    if (verb == "quotient") {
        mf::CombMap M = resolve_map(o.map_file);
        if (o.group_file.empty())
            throw CLI::ValidationError("quotient needs --group <automorphism file>");
        json gj = mf::load_json_file(o.group_file);
        if (!gj.is_object() || !gj.contains("perms") || !gj.at("perms").is_array())
            throw mf::input_error("quotient group file needs a \"perms\" array");
        std::vector<mf::Perm> subgroup;
        for (const json& pj : gj.at("perms")) {
            if (!pj.is_array()) throw mf::input_error("each entry of \"perms\" must be an array");
            subgroup.push_back(pj.get<mf::Perm>());
        }
        auto q = mf::quotient_map(M, subgroup);
        json out{{"map", mf::map_to_json(q.map)},
                 {"invariants", mf::invariants_to_json(mf::invariants(q.map))}};
        out["theta"] = q.theta ? mf::voltage_to_json(q.group, *q.theta) : json(nullptr);
        emit(out, o);
        return 0;
    }
    if (verb == "bounds") {
        mf::CombMap M = resolve_map(o.map_file);
        auto inv = mf::invariants(M);
        auto auts = mf::automorphism_group(M);
        long long aut_order = (long long)auts.size();
        long long plus_order = (long long)mf::orientation_preserving_auts(M).size();
        long long max_order = 1;
        for (const auto& a : auts) max_order = std::max(max_order, mf::perm_order(a));
        bool in_range = (inv.orientable && inv.genus >= 2) || (!inv.orientable && inv.genus >= 3);
        json out{{"chi", inv.chi},
                 {"orientable", inv.orientable},
                 {"genus", inv.genus},
                 {"aut_order", aut_order},
                 {"aut_plus_order", plus_order},
                 {"max_element_order", max_order}};
        if (in_range) {
            auto [plus_bound, full_bound] = mf::hurwitz_bounds(inv.genus, inv.orientable);
            mf::BigInt order_bound = mf::max_automorphism_order(inv.genus, inv.orientable);
            out["aut_bound"] = mf::bigint_to_json(full_bound);
            out["aut_plus_bound"] = mf::bigint_to_json(plus_bound);
            out["element_order_bound"] = mf::bigint_to_json(order_bound);
            out["satisfied"] = mf::BigInt(aut_order) <= full_bound &&
                               mf::BigInt(plus_order) <= plus_bound &&
                               mf::BigInt(max_order) <= order_bound;
        } else {
            out["aut_bound"] = nullptr;
            out["aut_plus_bound"] = nullptr;
            out["element_order_bound"] = nullptr;
            out["satisfied"] = true;
        }
        emit(out, o);
        return 0;
    }
    if (verb == "smanifold-classify") {
        emit(json{{"class", mf::to_string(mf::classify(resolve_map(o.map_file)))}}, o);
        return 0;
    }
    if (verb == "smanifold-census") return run_census(o);
    if (verb == "subdivide") {
        emit(mf::map_to_json(mf::midpoint_subdivision(resolve_map(o.map_file))), o);
        return 0;
    }
    throw CLI::ValidationError("unknown verb: " + verb);
}

} // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"combinatorial map engine: embeddings, map groups, censuses"};
    app.require_subcommand(1);
    app.set_config("--config");
    app.add_flag("--pretty", o.pretty, "indent JSON output for reading");
    app.add_option("--workers", o.workers, "worker threads for enumeration verbs")
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", o.budget, "work budget for enumeration verbs")
        ->envname("MAPFORGE_BUDGET")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", o.seed, "scheduling seed; never changes results");

    const std::vector<std::string> verbs = {
        "validate",   "invariants",  "dual",          "auts",
        "embed-count", "enumerate",  "burnside",      "genus-poly",
        "rooted-poly", "kn-count",   "bouquet-count", "voltage-lift",
        "quotient",    "bounds",     "smanifold-classify", "smanifold-census",
        "subdivide"};
    for (const auto& v : verbs) {
        CLI::App* sub = app.add_subcommand(v);
        sub->fallthrough();  // global flags (--pretty, --workers, ...) work after the verb
        sub->add_option("--graph", o.graph, "graph name (K<n>, K<m>,<n>, B<n>, Dp<n>) or JSON file");
        sub->add_option("--map", o.map_file, "map JSON file");
        sub->add_option("--group", o.group_file, "group / voltage JSON file");
        sub->add_option("--class", o.cls, "embedding class")->check(CLI::IsMember({"O", "N", "L"}));
        sub->add_option("--relation", o.relation, "orbit relation")
            ->check(CLI::IsMember({"iso", "equiv"}));
        sub->add_option("--variant", o.variant, "formula variant where applicable");
        if (v == "smanifold-census") {
            sub->add_option("--max-faces", o.max_faces, "face cap")->check(CLI::PositiveNumber);
            sub->add_option("--allowed", o.allowed, "comma-separated valency list");
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return dispatch(app.get_subcommands().front()->get_name(), o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const mf::budget_error& e) {
        std::cout << mf::dump_json(json{{"error",
                                         json{{"type", "budget"},
                                              {"message", e.what()},
                                              {"needed", e.needed},
                                              {"limit", e.limit}}}},
                                   o.pretty);
        return 1;
    } catch (const mf::input_error& e) {
        std::cout << mf::dump_json(
            json{{"error", json{{"type", "input"}, {"message", e.what()}}}}, o.pretty);
        return 1;
    }
}
