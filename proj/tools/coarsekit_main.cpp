// Batch front door: load spaces, maps, chains, entourages and operators
// from JSON files, run one operation, and emit a JSON report with content
// hashes, parameters, results and wall time.
//
// Exit codes: 0 ok; 1 internal; 2 unresolved label; 3 malformed file;
// 4 parameter out of range; 5 nonconformable operands; 10 no bijection at
// the requested scale; 11 degree-0 classes differ. Codes 10 and 11 are
// computed outcomes, not failures: the report is still written.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "coarsekit/io.hpp"

using namespace coarsekit;

namespace {

constexpr int kExitNoBijection = 10;
constexpr int kExitClassesDiffer = 11;

bool log_on() {
    static const bool on = [] {
        const char* v = std::getenv("COARSEKIT_LOG");
        return v != nullptr && *v != '\0';
    }();
    return on;
}

void log_line(const std::string& msg) {
    if (log_on()) std::cerr << "coarsekit: " << msg << '\n';
}

struct Params {
    std::optional<std::int64_t> scale;
    std::optional<std::int64_t> src_scale;
    std::optional<double> delta;
    std::optional<int> fiber;
    std::optional<std::int64_t> radius;
    std::uint64_t seed = 0;
    std::string out;
    std::string csv;
    std::string artifact_out;
};

json params_to_json(const Params& p) {
    json out = json::object();
    if (p.scale) out["scale"] = *p.scale;
    if (p.src_scale) out["src_scale"] = *p.src_scale;
    if (p.delta) out["delta"] = *p.delta;
    if (p.fiber) out["fiber"] = *p.fiber;
    if (p.radius) out["radius"] = *p.radius;
    out["seed"] = p.seed;
    return out;
}

struct Inputs {
    Workspace ws;
    json meta = json::array();
    std::vector<SpacePtr> spaces;
    std::vector<CoarseMap> maps;
    std::vector<UFChain> chains;
    std::vector<Entourage> entourages;
    std::vector<BandOperator> bands;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(ErrorCode::malformed_file, "cannot read file \"" + path + "\"");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void load_input(Inputs& in, const std::string& path) {
    const std::string bytes = read_file(path);
    in.meta.push_back({{"path", path}, {"hash", hash_hex(bytes)}});
    const json j = parse_json(bytes);
    switch (sniff_kind(j)) {
    case FileKind::space: {
        SpacePtr X = space_from_json(j);
        log_line("space \"" + X->label() + "\" (" + std::to_string(X->size()) + " points) from " + path);
        in.ws.put(X);
        in.spaces.push_back(std::move(X));
        break;
    }
    case FileKind::map:
        in.maps.push_back(map_from_json(j, in.ws));
        log_line("map from " + path);
        break;
    case FileKind::chain:
        in.chains.push_back(chain_from_json(j, in.ws));
        log_line("chain from " + path);
        break;
    case FileKind::entourage:
        in.entourages.push_back(entourage_from_json(j, in.ws));
        log_line("entourage from " + path);
        break;
    case FileKind::band:
        in.bands.push_back(operator_from_json(j, in.ws));
        log_line("operator from " + path);
        break;
    }
}

const SpacePtr& need_space(const Inputs& in, size_t i = 0) {
    if (in.spaces.size() <= i)
        fail(ErrorCode::param_out_of_range, "this command needs a space input file");
    return in.spaces[i];
}

const CoarseMap& need_map(const Inputs& in, size_t i = 0) {
    if (in.maps.size() <= i)
        fail(ErrorCode::param_out_of_range, "this command needs a map input file");
    return in.maps[i];
}

const UFChain& need_chain(const Inputs& in, size_t i = 0) {
    if (in.chains.size() <= i)
        fail(ErrorCode::param_out_of_range, "this command needs a chain input file");
    return in.chains[i];
}

const Entourage& need_entourage(const Inputs& in, size_t i = 0) {
    if (in.entourages.size() <= i)
        fail(ErrorCode::param_out_of_range, "this command needs an entourage input file");
    return in.entourages[i];
}

const BandOperator& need_band(const Inputs& in, size_t i = 0) {
    if (in.bands.size() <= i)
        fail(ErrorCode::param_out_of_range, "this command needs an operator input file");
    return in.bands[i];
}

json sums_to_json(const SpacePtr& X, const std::map<int, Int>& sums) {
    json out = json::object();
    for (const auto& [root, v] : sums) out[X->point_id(root)] = int_to_json(v);
    return out;
}

json certificate_to_json(const CoarseMap& f, const HallCertificate& cert) {
    const SpacePtr& side = cert.side == "X" ? f.source : f.target;
    json ids = json::array();
    for (int v : cert.set) ids.push_back(side->point_id(v));
    return {{"side", cert.side},
            {"set", std::move(ids)},
            {"set_size", static_cast<std::int64_t>(cert.set.size())},
            {"neighborhood_size", cert.neighborhood_size}};
}

struct Outcome {
    json result;
    std::string status = "ok";
    int code = 0;
    json artifact; // standalone loadable object for --artifact-out
    std::string csv_text;
};

Outcome do_space(const Inputs& in, const Params& p) {
    need_space(in);
    const Dist R = p.scale.value_or(1);
    json spaces = json::array();
    for (const SpacePtr& X : in.spaces) {
        Components comps = components_at_scale(*X, R);
        json classes = json::array();
        for (const auto& cls : comps.classes()) {
            json ids = json::array();
            for (int v : cls) ids.push_back(X->point_id(v));
            classes.push_back(std::move(ids));
        }
        spaces.push_back({{"label", X->label()},
                          {"size", X->size()},
                          {"diameter", X->diameter()},
                          {"scale", R},
                          {"growth", growth_profile(*X, R)},
                          {"components", comps.count},
                          {"classes", std::move(classes)}});
    }
    Outcome out;
    out.result = {{"spaces", std::move(spaces)}};
    out.artifact = space_to_json(*in.spaces[0]);
    return out;
}

Outcome do_map(const Inputs& in, const Params& p) {
    need_map(in);
    const Dist R = p.scale.value_or(1);
    json maps = json::array();
    for (const CoarseMap& f : in.maps) {
        json m = {{"source", f.source->label()},
                  {"target", f.target->label()},
                  {"max_fiber", max_fiber(f)},
                  {"scale", R},
                  {"expansion", expansion_modulus(f, R)}};
        if (!f.label.empty()) m["label"] = f.label;
        maps.push_back(std::move(m));
    }
    json result = {{"maps", std::move(maps)}};
    if (in.maps.size() >= 2) {
        const CoarseMap& f = in.maps[0];
        const CoarseMap& g = in.maps[1];
        if (same_space(*f.source, *g.source) && same_space(*f.target, *g.target))
            result["closeness"] = closeness(f, g);
        else if (same_space(*f.source, *g.target) && same_space(*f.target, *g.source)) {
            EquivalenceDefect d = equivalence_defect(f, g);
            result["equivalence_defect"] = {{"fg_vs_id", d.fg_vs_id}, {"gf_vs_id", d.gf_vs_id}};
        }
    }
    Outcome out;
    out.result = std::move(result);
    out.artifact = map_to_json(in.maps[0]);
    return out;
}

Outcome do_chain(const Inputs& in, const Params& p) {
    need_chain(in);
    json chains = json::array();
    for (const UFChain& c : in.chains) {
        json e = {{"space", c.space()->label()},
                  {"degree", c.degree()},
                  {"support_size", c.support_size()},
                  {"propagation", c.propagation()},
                  {"zero", c.is_zero()}};
        if (c.degree() == 0 && p.scale) {
            H0Class cls = h0_class(c, *p.scale);
            e["class"] = sums_to_json(c.space(), cls.component_sums);
        }
        chains.push_back(std::move(e));
    }
    Outcome out;
    out.result = {{"chains", std::move(chains)}};
    out.artifact = chain_to_json(in.chains[0]);
    return out;
}

Outcome do_decompose(const Inputs& in, const Params&) {
    need_entourage(in);
    json all = json::array();
    for (const Entourage& E : in.entourages) {
        std::vector<PartialTranslation> parts = decompose(E);
        json ts = json::array();
        Entourage glued = make_entourage(E.left, E.right, {});
        std::int64_t total = 0;
        Dist max_disp = 0;
        for (const PartialTranslation& t : parts) {
            ts.push_back(translation_to_json(t));
            glued = entourage_union(glued, t.graph());
            total += t.size();
            max_disp = std::max(max_disp, t.displacement());
        }
        const bool disjoint = total == E.size();
        all.push_back({{"space", E.left->label()},
                       {"pairs", E.size()},
                       {"width", E.width()},
                       {"max_degree", max_degree(E)},
                       {"count", static_cast<std::int64_t>(parts.size())},
                       {"translations", std::move(ts)},
                       {"union_matches", glued.pairs == E.pairs},
                       {"disjoint", disjoint},
                       {"max_displacement", max_disp}});
    }
    Outcome out;
    out.result = {{"decompositions", std::move(all)}};
    return out;
}

Outcome do_boundary(const Inputs& in, const Params&) {
    const UFChain& c = need_chain(in);
    UFChain b = boundary(c);
    Outcome out;
    out.result = {{"input", {{"degree", c.degree()}, {"support_size", c.support_size()},
                             {"propagation", c.propagation()}}},
                  {"boundary", chain_to_json(b)},
                  {"propagation", b.propagation()},
                  {"zero", b.is_zero()}};
    out.artifact = chain_to_json(b);
    return out;
}

Outcome do_h0(const Inputs& in, const Params& p) {
    const UFChain& c = need_chain(in);
    const Dist R = p.scale.value_or(0);
    H0Class cls = h0_class(c, R);
    bool zero = true;
    for (const auto& [root, v] : cls.component_sums) zero = zero && v == 0;
    Outcome out;
    out.result = {{"scale", R},
                  {"class", sums_to_json(c.space(), cls.component_sums)},
                  {"zero_class", zero}};
    return out;
}

Outcome do_witness(const Inputs& in, const Params& p) {
    const UFChain& c = need_chain(in);
    const Dist R = p.scale.value_or(0);
    std::optional<UFChain> w = class_witness(c, R);
    Outcome out;
    if (w) {
        const bool verified = boundary(*w) == c;
        out.result = {{"scale", R},
                      {"witness", chain_to_json(*w)},
                      {"propagation", w->propagation()},
                      {"verified", verified}};
        out.artifact = chain_to_json(*w);
    } else {
        H0Class cls = h0_class(c, R);
        out.result = {{"scale", R},
                      {"witness", nullptr},
                      {"class", sums_to_json(c.space(), cls.component_sums)}};
    }
    return out;
}

Outcome do_bijectivize(const Inputs& in, const Params& p) {
    const CoarseMap& f = need_map(in);
    const Dist S = p.scale.value_or(0);
    BijectivizeResult r = bijectivize(f, S, p.seed);
    Outcome out;
    if (r.bijection) {
        out.result = {{"scale", S},
                      {"bijection", map_to_json(*r.bijection)},
                      {"displacement", closeness(f, *r.bijection)}};
        out.artifact = map_to_json(*r.bijection);
    } else {
        out.result = {{"scale", S}, {"certificate", certificate_to_json(f, *r.certificate)}};
        out.status = "no-bijection";
        out.code = kExitNoBijection;
    }
    return out;
}

Outcome do_cover(const Inputs& in, const Params& p) {
    const CoarseMap& f = need_map(in);
    const int N = max_fiber(f);
    const int D = p.fiber.value_or(N);
    UniformCoverPlan plan = make_uniform_cover_plan(f, D);
    BandOperator S = uniform_cover(plan);
    const bool isometry = multiply(adjoint_op(S), S) == identity_operator(f.source, D);
    Entourage supp = support(S);
    Entourage graph = graph_of(f);
    Outcome out;
    out.result = {{"cover", operator_to_json(S)},
                  {"max_fiber", N},
                  {"fiber_in", D},
                  {"fiber_out", N * D},
                  {"isometry_exact", isometry},
                  {"support_equals_graph", supp.pairs == graph.pairs}};
    out.artifact = operator_to_json(S);
    return out;
}

Outcome do_conjugate(const Inputs& in, const Params& p) {
    const BandOperator& S = need_band(in, 0);
    const BandOperator& T = need_band(in, 1);
    BandOperator C = conjugate(S, T);
    Outcome out;
    out.result = {{"conjugated", operator_to_json(C)}, {"propagation", propagation(C)}};
    if (!in.maps.empty()) {
        std::optional<Dist> r1;
        if (p.radius) r1 = *p.radius;
        ConjugationBound b = check_conjugation_bound(S, T, in.maps[0], r1);
        out.result["bound_check"] = {{"prop_t", b.prop_t},
                                     {"cover_radius", b.cover_radius},
                                     {"bound", b.bound},
                                     {"prop_result", b.prop_result},
                                     {"covered", b.covered},
                                     {"ok", b.ok}};
    }
    out.artifact = operator_to_json(C);
    return out;
}

Outcome do_extract(const Inputs& in, const Params& p) {
    const BandOperator& U = need_band(in);
    if (!p.delta) fail(ErrorCode::param_out_of_range, "extract needs --delta");
    const Dist R = p.scale.value_or(0);
    const Dist r = p.src_scale.value_or(R);
    Entourage E = extract_coarse_relation(U, *p.delta, R, r);
    Outcome out;
    out.result = {{"delta", *p.delta},
                  {"R", R},
                  {"r", r},
                  {"relation", entourage_to_json(E)},
                  {"pair_count", E.size()}};
    out.artifact = entourage_to_json(E);
    return out;
}

Outcome do_alpha0(const Inputs& in, const Params& p) {
    const UFChain& c = need_chain(in);
    const Dist R = p.scale.value_or(0);
    Alpha0Result a = alpha0(c, R);
    json comps = json::array();
    json ranks = json::array();
    for (size_t i = 0; i < a.roots.size(); ++i) {
        comps.push_back(a.space->point_id(a.roots[i]));
        ranks.push_back(int_to_json(a.values[i]));
    }
    Outcome out;
    out.result = {{"scale", R}, {"components", std::move(comps)}, {"ranks", std::move(ranks)}};
    return out;
}

Outcome do_alpha0_check(const Inputs& in, const Params& p) {
    const SpacePtr& X = need_space(in);
    const Dist R = p.scale.value_or(0);
    Alpha0Check c = alpha0_injectivity_check(*X, R);
    json divisors = json::array();
    for (const Int& d : c.divisors) divisors.push_back(int_to_json(d));
    Outcome out;
    out.result = {{"scale", R},
                  {"space", X->label()},
                  {"rank", c.h0_rank},
                  {"matrix_rank", c.matrix_rank},
                  {"components", c.component_count},
                  {"divisors", std::move(divisors)},
                  {"divisors_all_one", c.divisors_all_one},
                  {"ranks_agree", c.ranks_agree},
                  {"pass", c.pass}};
    return out;
}

Outcome do_theorem_a(const Inputs& in, const Params& p) {
    HeightFunction h1 = height_from_chain(need_chain(in, 0));
    HeightFunction h2 = height_from_chain(need_chain(in, 1));
    const Dist R = p.scale.value_or(0);
    TheoremAResult r = pipeline_theorem_a(h1, h2, R, p.seed);

    Outcome out;
    out.result = {{"scale", R},
                  {"classes_equal", r.classes_equal},
                  {"class1", sums_to_json(h1.base, r.class1.component_sums)},
                  {"class2", sums_to_json(h2.base, r.class2.component_sums)},
                  {"sizes", {r.hs1.space->size(), r.hs2.space->size()}}};
    if (!r.classes_equal) {
        json disc = json::array();
        for (const auto& [root, v1] : r.class1.component_sums) {
            const Int& v2 = r.class2.component_sums.at(root);
            if (v1 != v2)
                disc.push_back({{"component", h1.base->point_id(root)},
                                {"first", int_to_json(v1)},
                                {"second", int_to_json(v2)}});
        }
        out.result["discrepancy"] = std::move(disc);
        out.status = "classes-differ";
        out.code = kExitClassesDiffer;
        return out;
    }
    if (!r.bijection || !r.cycle)
        fail(ErrorCode::internal, "equal classes but the scale sweep found no bijection");
    json sweep = json::array();
    std::ostringstream csv;
    csv << "scale,matched\n";
    for (auto [s, matched] : r.sweep) {
        sweep.push_back({s, matched});
        csv << s << "," << matched << "\n";
    }
    out.result["minimal_scale"] = *r.minimal_scale;
    out.result["bijection"] = map_to_json(*r.bijection);
    out.result["bijection_displacement"] = closeness(r.nearest_base, *r.bijection);
    out.result["cycle"] = chain_to_json(*r.cycle);
    out.result["cycle_propagation"] = r.cycle->propagation();
    out.result["cycle_verified"] = r.cycle_verified;
    out.result["sweep"] = std::move(sweep);
    out.artifact = chain_to_json(*r.cycle);
    out.csv_text = csv.str();
    return out;
}

using Handler = std::function<Outcome(const Inputs&, const Params&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"space", do_space},           {"map", do_map},
        {"chain", do_chain},           {"decompose", do_decompose},
        {"boundary", do_boundary},     {"h0", do_h0},
        {"witness", do_witness},       {"bijectivize", do_bijectivize},
        {"cover", do_cover},           {"conjugate", do_conjugate},
        {"extract", do_extract},       {"alpha0", do_alpha0},
        {"alpha0-check", do_alpha0_check}, {"theorem-a", do_theorem_a},
    };
    return table;
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::internal, "cannot write \"" + path + "\"");
    out << text;
}

const char* kind_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::internal: return "internal";
    case ErrorCode::unresolved_label: return "unresolved-label";
    case ErrorCode::malformed_file: return "malformed-file";
    case ErrorCode::param_out_of_range: return "param-out-of-range";
    case ErrorCode::nonconformable: return "nonconformable";
    }
    return "internal";
}

void emit(const json& report, const std::string& out_path) {
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text(out_path, text);
        log_line("report written to " + out_path);
    }
}

int run_command(const std::string& verb, const std::vector<std::string>& files, const Params& p) {
    Inputs in;
    json report = {{"command", verb}};
    try {
        const auto t0 = std::chrono::steady_clock::now();
        for (const std::string& f : files) load_input(in, f);
        report["inputs"] = in.meta;
        report["params"] = params_to_json(p);
        Outcome o = handlers().at(verb)(in, p);
        const auto t1 = std::chrono::steady_clock::now();
        report["result"] = std::move(o.result);
        report["status"] = o.status;
        report["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        if (!p.artifact_out.empty() && !o.artifact.is_null()) {
            write_text(p.artifact_out, o.artifact.dump(2) + "\n");
            log_line("artifact written to " + p.artifact_out);
        }
        if (!p.csv.empty() && !o.csv_text.empty()) {
            write_text(p.csv, o.csv_text);
            log_line("csv written to " + p.csv);
        }
        emit(report, p.out);
        return o.code;
    } catch (const Error& e) {
        report["inputs"] = in.meta;
        report["status"] = "error";
        report["error"] = {{"code", static_cast<int>(e.code())},
                           {"kind", kind_name(e.code())},
                           {"message", e.what()}};
        emit(report, p.out);
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        report["inputs"] = in.meta;
        report["status"] = "error";
        report["error"] = {{"code", 1}, {"kind", "internal"}, {"message", e.what()}};
        emit(report, p.out);
        return 1;
    }
}

// Config mode: one JSON file naming the command, its inputs and parameters.
// Relative paths resolve against the config file's directory so bundles can
// be moved wholesale.
int run_config(const std::string& config_path) {
    namespace fs = std::filesystem;
    json cfg;
    fs::path dir;
    Params p;
    std::vector<std::string> files;
    std::string verb;
    try {
        cfg = load_json_file(config_path);
        dir = fs::path(config_path).parent_path();
        if (!cfg.is_object()) fail(ErrorCode::malformed_file, "config must be a JSON object");
        if (!cfg.contains("command") || !cfg["command"].is_string())
            fail(ErrorCode::malformed_file, "config needs a \"command\" string");
        verb = cfg["command"].get<std::string>();
        if (!handlers().count(verb))
            fail(ErrorCode::param_out_of_range, "unknown command \"" + verb + "\"");
        auto resolve = [&dir](const std::string& s) {
            fs::path q(s);
            return q.is_absolute() ? s : (dir / q).string();
        };
        if (cfg.contains("inputs")) {
            if (!cfg["inputs"].is_array())
                fail(ErrorCode::malformed_file, "config \"inputs\" must be an array of paths");
            for (const json& f : cfg["inputs"]) {
                if (!f.is_string())
                    fail(ErrorCode::malformed_file, "config input paths must be strings");
                files.push_back(resolve(f.get<std::string>()));
            }
        }
        if (cfg.contains("params")) {
            const json& q = cfg["params"];
            if (!q.is_object()) fail(ErrorCode::malformed_file, "config \"params\" must be an object");
            for (const auto& [k, v] : q.items()) {
                if (k == "scale") p.scale = v.get<std::int64_t>();
                else if (k == "src_scale") p.src_scale = v.get<std::int64_t>();
                else if (k == "delta") p.delta = v.get<double>();
                else if (k == "fiber") p.fiber = v.get<int>();
                else if (k == "radius") p.radius = v.get<std::int64_t>();
                else if (k == "seed") p.seed = v.get<std::uint64_t>();
                else fail(ErrorCode::param_out_of_range, "unknown config parameter \"" + k + "\"");
            }
        }
        if (cfg.contains("output")) p.out = resolve(cfg["output"].get<std::string>());
        if (cfg.contains("csv")) p.csv = resolve(cfg["csv"].get<std::string>());
        if (cfg.contains("artifact_out"))
            p.artifact_out = resolve(cfg["artifact_out"].get<std::string>());
    } catch (const Error& e) {
        json report = {{"command", "run"},
                       {"status", "error"},
                       {"error", {{"code", static_cast<int>(e.code())},
                                  {"kind", kind_name(e.code())},
                                  {"message", e.what()}}}};
        emit(report, "");
        return static_cast<int>(e.code());
    } catch (const std::exception& e) {
        json report = {{"command", "run"},
                       {"status", "error"},
                       {"error", {{"code", 3}, {"kind", "malformed-file"}, {"message", e.what()}}}};
        emit(report, "");
        return 3;
    }
    log_line("config " + config_path + " -> " + verb);
    return run_command(verb, files, p);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-scale coarse geometry toolkit: metric spaces, entourages, "
                 "uniformly finite homology and band operators"};
    app.require_subcommand(1);

    Params p;
    std::vector<std::string> files;
    std::string config_path;

    const std::vector<std::pair<std::string, std::string>> verbs = {
        {"space", "inspect spaces: growth, diameter, scale components"},
        {"map", "inspect maps: expansion modulus, fibers, closeness"},
        {"chain", "inspect chains: support, propagation, degree-0 class"},
        {"decompose", "split an entourage into graphs of partial translations"},
        {"boundary", "apply the boundary operator to a chain"},
        {"h0", "degree-0 class of a chain at a scale"},
        {"witness", "degree-1 chain bounding a zero-class degree-0 chain"},
        {"bijectivize", "bounded-displacement bijection or Hall certificate"},
        {"cover", "covering isometry of a finite-to-one map"},
        {"conjugate", "conjugate an operator by an isometry, with band bound"},
        {"extract", "threshold an operator into a coarse relation"},
        {"alpha0", "component rank vector of a degree-0 chain"},
        {"alpha0-check", "exact homology cross-check of the rank map"},
        {"theorem-a", "equal classes to bounded bijection to bounding cycle"},
    };
    for (const auto& [name, help] : verbs) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("files", files, "input JSON files (spaces first)");
        sub->add_option("--scale", p.scale, "scale parameter R");
        sub->add_option("--src-scale", p.src_scale, "source-side scale r (extract)");
        sub->add_option("--delta", p.delta, "threshold in (0,1) (extract)");
        sub->add_option("--fiber", p.fiber, "fiber dimension D (cover)");
        sub->add_option("--radius", p.radius, "cover radius for the conjugation bound");
        sub->add_option("--seed", p.seed, "seed for matching tie-breaks");
        sub->add_option("--out", p.out, "write the JSON report here instead of stdout");
        sub->add_option("--csv", p.csv, "write the sweep table as CSV (theorem-a)");
        sub->add_option("--artifact-out", p.artifact_out,
                        "also write the result object as a loadable JSON file");
    }
    CLI::App* run_sub = app.add_subcommand("run", "execute a JSON experiment config");
    run_sub->add_option("config", config_path, "config file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ErrorCode::param_out_of_range);
    }

    if (run_sub->parsed()) return run_config(config_path);
    for (const auto& [name, help] : verbs)
        if (app.got_subcommand(name)) return run_command(name, files, p);
    return static_cast<int>(ErrorCode::internal);
}
