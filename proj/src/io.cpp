#include "coarsekit/io.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace coarsekit {

namespace {

[[noreturn]] void bad(const std::string& msg) { fail(ErrorCode::malformed_file, msg); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::string str_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_string()) bad(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

std::vector<std::string> id_list(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const json& v : j) {
        if (!v.is_string()) bad(std::string(what) + " entries must be strings");
        out.push_back(v.get<std::string>());
    }
    return out;
}

std::int64_t small_int(const json& j, const char* what) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
        bad(std::string(what) + " must be an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
        bad(std::string(what) + " is out of range");
    return j.get<std::int64_t>();
}

} // namespace

void Workspace::put(SpacePtr X) {
    if (!X) fail(ErrorCode::internal, "workspace: null space");
    spaces[X->label()] = std::move(X);
}

SpacePtr Workspace::resolve(const std::string& label) const {
    auto it = spaces.find(label);
    if (it == spaces.end())
        fail(ErrorCode::unresolved_label, "no space registered under label \"" + label + "\"");
    return it->second;
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

json load_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

FileKind sniff_kind(const json& j) {
    if (!j.is_object()) bad("input file must hold a JSON object");
    if (j.contains("backend")) return FileKind::space;
    if (j.contains("table")) return FileKind::map;
    if (j.contains("degree")) return FileKind::chain;
    if (j.contains("entries")) return FileKind::band;
    if (j.contains("pairs")) return FileKind::entourage;
    bad("unrecognized file kind (no backend/table/degree/entries/pairs key)");
}

SpacePtr space_from_json(const json& j) {
    std::string label = str_field(j, "label");
    std::string backend = str_field(j, "backend");
    std::vector<std::string> points = id_list(field(j, "points"), "\"points\"");
    const json& data = field(j, "data");

    if (backend == "matrix") {
        if (!data.is_array()) bad("matrix data must be an array");
        std::vector<Dist> m;
        if (!data.empty() && data[0].is_array()) {
            for (const json& row : data) {
                if (!row.is_array()) bad("matrix rows must all be arrays");
                for (const json& v : row) m.push_back(small_int(v, "matrix entry"));
            }
        } else {
            for (const json& v : data) m.push_back(small_int(v, "matrix entry"));
        }
        return MetricSpace::from_matrix(std::move(label), std::move(points), std::move(m));
    }
    if (backend == "graph") {
        if (!data.is_array()) bad("graph data must be an edge array");
        std::vector<std::pair<std::string, std::string>> edges;
        for (const json& e : data) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
                bad("graph edges must be [id, id] pairs");
            edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return MetricSpace::from_graph(std::move(label), std::move(points), edges);
    }
    if (backend == "lattice") {
        if (!data.is_array()) bad("lattice data must be a coordinate array");
        std::vector<std::vector<std::int64_t>> coords;
        for (const json& c : data) {
            if (!c.is_array()) bad("lattice coordinates must be arrays");
            std::vector<std::int64_t> tuple;
            for (const json& v : c) tuple.push_back(small_int(v, "coordinate"));
            coords.push_back(std::move(tuple));
        }
        return MetricSpace::from_lattice(std::move(label), std::move(points), coords);
    }
    bad("unknown backend \"" + backend + "\"");
}

CoarseMap map_from_json(const json& j, const Workspace& ws) {
    SpacePtr source = ws.resolve(str_field(j, "source"));
    SpacePtr target = ws.resolve(str_field(j, "target"));
    const json& table = field(j, "table");
    if (!table.is_object()) bad("map table must be an object of src_id: tgt_id");
    std::vector<int> t(static_cast<size_t>(source->size()), -1);
    for (const auto& [src_id, tgt_id] : table.items()) {
        if (!tgt_id.is_string()) bad("map table values must be point ids");
        t[static_cast<size_t>(source->index_of(src_id))] =
            target->index_of(tgt_id.get<std::string>());
    }
    for (int v : t)
        if (v < 0) bad("map table is not total on the source");
    std::string label = j.contains("label") ? str_field(j, "label") : "";
    return make_coarse_map(std::move(source), std::move(target), std::move(t), std::move(label));
}

UFChain chain_from_json(const json& j, const Workspace& ws) {
    SpacePtr X = ws.resolve(str_field(j, "space"));
    const std::int64_t degree = small_int(field(j, "degree"), "\"degree\"");
    if (degree < 0 || degree > 2)
        fail(ErrorCode::param_out_of_range, "chain degree must be 0, 1 or 2");
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) bad("chain coeffs must be an array of [tuple, coefficient]");
    UFChain c(X, static_cast<int>(degree));
    for (const json& e : coeffs) {
        if (!e.is_array() || e.size() != 2) bad("chain coeff entries must be [tuple, coefficient]");
        Tuple t;
        for (const std::string& id : id_list(e[0], "chain tuple")) t.push_back(X->index_of(id));
        if (static_cast<std::int64_t>(t.size()) != degree + 1)
            bad("chain tuple arity does not match the degree");
        c.add(t, int_from_json(e[1]));
    }
    return c;
}

Entourage entourage_from_json(const json& j, const Workspace& ws) {
    SpacePtr left, right;
    if (j.contains("space")) {
        left = right = ws.resolve(str_field(j, "space"));
    } else {
        left = ws.resolve(str_field(j, "left"));
        right = ws.resolve(str_field(j, "right"));
    }
    const json& pairs = field(j, "pairs");
    if (!pairs.is_array()) bad("entourage pairs must be an array");
    std::vector<std::pair<int, int>> ps;
    for (const json& p : pairs) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            bad("entourage pairs must be [target_id, source_id]");
        ps.emplace_back(left->index_of(p[0].get<std::string>()),
                        right->index_of(p[1].get<std::string>()));
    }
    return make_entourage(std::move(left), std::move(right), std::move(ps));
}

BandOperator operator_from_json(const json& j, const Workspace& ws) {
    SpacePtr rows = ws.resolve(str_field(j, "rows"));
    SpacePtr cols = ws.resolve(str_field(j, "cols"));
    const json& fd = field(j, "fiber_dim");
    int rf = 1, cf = 1;
    if (fd.is_array()) {
        if (fd.size() != 2) bad("fiber_dim must be an integer or [rows, cols]");
        rf = static_cast<int>(small_int(fd[0], "fiber_dim"));
        cf = static_cast<int>(small_int(fd[1], "fiber_dim"));
    } else {
        rf = cf = static_cast<int>(small_int(fd, "fiber_dim"));
    }
    const json& entries = field(j, "entries");
    if (!entries.is_array()) bad("operator entries must be an array");
    std::map<EntryKey, Scalar> table;
    for (const json& e : entries) {
        if (!e.is_array() || e.size() != 6 || !e[0].is_string() || !e[2].is_string() ||
            !e[4].is_number() || !e[5].is_number())
            bad("operator entries must be [row_id, rf, col_id, cf, re, im]");
        EntryKey k{rows->index_of(e[0].get<std::string>()),
                   static_cast<int>(small_int(e[1], "row fiber index")),
                   cols->index_of(e[2].get<std::string>()),
                   static_cast<int>(small_int(e[3], "col fiber index"))};
        table[k] += Scalar(e[4].get<double>(), e[5].get<double>());
    }
    return make_band_operator(std::move(rows), std::move(cols), rf, cf, std::move(table));
}

HeightFunction height_from_chain(const UFChain& c) {
    if (c.degree() != 0)
        fail(ErrorCode::param_out_of_range, "height functions are degree-0 chains");
    std::vector<std::int64_t> values;
    values.reserve(static_cast<size_t>(c.space()->size()));
    for (int x = 0; x < c.space()->size(); ++x) {
        Int v = c.at({x});
        if (v < 1) fail(ErrorCode::param_out_of_range,
                        "height must be >= 1 at every point, offending point " +
                            c.space()->point_id(x));
        if (v > std::numeric_limits<std::int64_t>::max())
            fail(ErrorCode::param_out_of_range, "height value too large");
        values.push_back(v.convert_to<std::int64_t>());
    }
    return make_height(c.space(), std::move(values));
}

json space_to_json(const MetricSpace& X) {
    json data = json::array();
    for (int i = 0; i < X.size(); ++i) {
        json row = json::array();
        for (int j2 = 0; j2 < X.size(); ++j2) row.push_back(X.dist(i, j2));
        data.push_back(std::move(row));
    }
    return {{"label", X.label()},
            {"backend", "matrix"},
            {"points", X.points()},
            {"data", std::move(data)}};
}

json map_to_json(const CoarseMap& f) {
    json table = json::object();
    for (int x = 0; x < f.source->size(); ++x)
        table[f.source->point_id(x)] = f.target->point_id(f.apply(x));
    json out = {{"source", f.source->label()},
                {"target", f.target->label()},
                {"table", std::move(table)}};
    if (!f.label.empty()) out["label"] = f.label;
    return out;
}

json chain_to_json(const UFChain& c) {
    json coeffs = json::array();
    for (const auto& [t, v] : c.coeffs()) {
        json ids = json::array();
        for (int p : t) ids.push_back(c.space()->point_id(p));
        coeffs.push_back(json::array({std::move(ids), int_to_json(v)}));
    }
    return {{"space", c.space()->label()}, {"degree", c.degree()}, {"coeffs", std::move(coeffs)}};
}

json entourage_to_json(const Entourage& E) {
    json pairs = json::array();
    for (auto [a, b] : E.pairs)
        pairs.push_back(json::array({E.left->point_id(a), E.right->point_id(b)}));
    if (E.same_sides()) return {{"space", E.left->label()}, {"pairs", std::move(pairs)}};
    return {{"left", E.left->label()}, {"right", E.right->label()}, {"pairs", std::move(pairs)}};
}

json operator_to_json(const BandOperator& A) {
    json entries = json::array();
    for (const auto& [k, v] : A.entries)
        entries.push_back(json::array({A.rows->point_id(k.row_pt), k.row_f,
                                       A.cols->point_id(k.col_pt), k.col_f, v.real(), v.imag()}));
    json fd = A.row_fiber == A.col_fiber ? json(A.row_fiber)
                                         : json::array({A.row_fiber, A.col_fiber});
    return {{"rows", A.rows->label()},
            {"cols", A.cols->label()},
            {"fiber_dim", std::move(fd)},
            {"entries", std::move(entries)}};
}

json translation_to_json(const PartialTranslation& t) {
    json table = json::object();
    for (auto [x, tx] : t.table) table[t.space->point_id(x)] = t.space->point_id(tx);
    return {{"space", t.space->label()},
            {"table", std::move(table)},
            {"displacement", t.displacement()}};
}

json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            bad("coefficient string is not a decimal integer");
        }
    }
    bad("coefficients must be integers or decimal strings");
}

std::uint64_t fnv1a(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hash_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(bytes)));
    return buf;
}

} // namespace coarsekit
