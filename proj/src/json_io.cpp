#include "mapforge/json_io.hpp"
#include "mapforge/errors.hpp"

#include <cstdint>
#include <fstream>
#include <limits>

namespace mapforge {

namespace {

const json& need(const json& j, const char* key, const char* what) {
    if (!j.is_object() || !j.contains(key))
        throw input_error(std::string(what) + " needs a \"" + key + "\" field");
    return j.at(key);
}

long long int_field(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw input_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

} // namespace

json graph_to_json(const MultiGraph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    return json{{"vertices", g.nv}, {"edges", std::move(edges)}};
}

MultiGraph graph_from_json(const json& j) {
    MultiGraph g;
    g.nv = (int)int_field(need(j, "vertices", "graph"), "\"vertices\"");
    const json& edges = need(j, "edges", "graph");
    if (!edges.is_array()) throw input_error("graph \"edges\" must be an array");
    for (const json& e : edges) {
        if (!e.is_array() || e.size() != 2)
            throw input_error("each graph edge must be a pair [u, v]");
        g.edges.emplace_back((int)int_field(e[0], "edge endpoint"),
                             (int)int_field(e[1], "edge endpoint"));
    }
    validate_graph(g);
    return g;
}

json map_to_json(const CombMap& M) {
    return json{{"edges", M.m}, {"P", M.P}};
}

CombMap map_from_json_unchecked(const json& j) {
    CombMap M;
    M.m = (int)int_field(need(j, "edges", "map"), "\"edges\"");
    const json& P = need(j, "P", "map");
    if (!P.is_array()) throw input_error("map \"P\" must be an array");
    for (const json& x : P) M.P.push_back((int)int_field(x, "cell image"));
    return M;
}

CombMap map_from_json(const json& j) {
    CombMap M = map_from_json_unchecked(j);
    require_valid(M);
    return M;
}

json group_to_json(const FinGroupTable& G) {
    return json{{"order", G.n}, {"table", G.mul}};
}

FinGroupTable group_from_json(const json& j) {
    if (j.is_object() && j.contains("cyclic"))
        return FinGroupTable::cyclic((int)int_field(j.at("cyclic"), "\"cyclic\""));
    long long n = int_field(need(j, "order", "group"), "\"order\"");
    const json& table = need(j, "table", "group");
    if (!table.is_array()) throw input_error("group \"table\" must be an array of rows");
    std::vector<std::vector<int>> mul;
    for (const json& row : table) {
        if (!row.is_array()) throw input_error("group \"table\" must be an array of rows");
        std::vector<int> r;
        for (const json& x : row) r.push_back((int)int_field(x, "table entry"));
        mul.push_back(std::move(r));
    }
    if ((long long)mul.size() != n)
        throw input_error("group \"table\" must have \"order\" rows");
    return FinGroupTable::from_table(std::move(mul));
}

json voltage_to_json(const FinGroupTable& G, const VoltageAssignment& theta) {
    return json{{"group", group_to_json(G)}, {"theta", theta}};
}

std::pair<FinGroupTable, VoltageAssignment> voltage_from_json(const json& j) {
    FinGroupTable G = group_from_json(need(j, "group", "voltage assignment"));
    const json& th = need(j, "theta", "voltage assignment");
    if (!th.is_array()) throw input_error("voltage \"theta\" must be an array");
    VoltageAssignment theta;
    for (const json& x : th) theta.push_back((int)int_field(x, "voltage"));
    return {std::move(G), std::move(theta)};
}

json invariants_to_json(const MapInvariants& inv) {
    return json{{"v", inv.v},     {"e", inv.e},
                {"f", inv.f},     {"chi", inv.chi},
                {"orientable", inv.orientable}, {"genus", inv.genus}};
}

json bigint_to_json(const BigInt& v) {
    static const BigInt lo = std::numeric_limits<std::int64_t>::min();
    static const BigInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return to_string(v);
}

json bigrat_to_json(const BigRat& q) {
    if (is_integer(q)) return bigint_to_json(to_integer(q));
    return to_string(q);
}

BigInt bigint_from_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    if (j.is_string()) {
        try {
            return BigInt(j.get<std::string>());
        } catch (const std::exception&) {
            throw input_error("not an integer: \"" + j.get<std::string>() + "\"");
        }
    }
    throw input_error("expected an integer (number or decimal string)");
}

json laurent_to_json(const LaurentPoly& p) {
    json coeffs = json::object();
    for (const auto& [exp, c] : p) coeffs[std::to_string(exp)] = bigint_to_json(c);
    return json{{"coeffs", std::move(coeffs)}};
}

LaurentPoly laurent_from_json(const json& j) {
    const json& coeffs = need(j, "coeffs", "polynomial");
    if (!coeffs.is_object()) throw input_error("polynomial \"coeffs\" must be an object");
    LaurentPoly p;
    for (const auto& [key, val] : coeffs.items()) {
        int exp;
        try {
            exp = std::stoi(key);
        } catch (const std::exception&) {
            throw input_error("polynomial exponent is not an integer: \"" + key + "\"");
        }
        BigInt c = bigint_from_json(val);
        if (c != 0) p[exp] = c;
    }
    return p;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j, bool pretty) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write " + path);
    out << dump_json(j, pretty);
}

std::string dump_json(const json& j, bool pretty) {
    return pretty ? j.dump(2) + "\n" : j.dump() + "\n";
}

} // namespace mapforge
