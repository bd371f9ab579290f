// hocolim: command-line front end for the colimit engine.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hocolim/coslice.hpp"
#include "hocolim/errors.hpp"
#include "hocolim/io.hpp"
#include "hocolim/setmodel.hpp"
#include "support/suites.hpp"

using namespace hocolim;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct RunConfig {
    std::uint64_t seed = 42;
    std::size_t max_set = 3;
    std::size_t max_vertices = 4;
    std::size_t enum_cap = 1000000;
    std::string construction = "both";
    std::string format = "text";
    bool serial = false;
};

Json config_json(const RunConfig& c)
{
    return {{"seed", c.seed},
            {"max_set", c.max_set},
            {"max_vertices", c.max_vertices},
            {"enum_cap", c.enum_cap},
            {"construction", c.construction},
            {"format", c.format}};
}

struct Input {
    std::string path;
    std::string text;
    Json json;
};

Input load(const std::string& path)
{
    Input in{path, {}, {}};
    if (path == "-") {
        in.text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream f(path);
        if (!f)
            throw ValidationError(path + ": cannot open file");
        in.text.assign(std::istreambuf_iterator<char>(f), {});
    }
    try {
        in.json = Json::parse(in.text);
    } catch (const Json::parse_error& err) {
        throw ValidationError(path + ": " + err.what());
    }
    return in;
}

// One report: the JSON envelope, plus the lines printed in text mode.
struct Report {
    std::string command;
    Json inputs = Json::object();
    Json verdicts = Json::object();
    Json data = Json::object();
    std::vector<std::string> text;
    bool failed = false;

    void input(const Input& in) { inputs[in.path] = digest(in.text); }
    void verdict(const std::string& name, bool ok)
    {
        verdicts[name] = ok;
        failed = failed || !ok;
    }
};

int emit(const Report& r, const RunConfig& cfg)
{
    if (cfg.format == "json") {
        Json env;
        env["command"] = r.command;
        env["config"] = config_json(cfg);
        env["inputs"] = r.inputs;
        env["verdicts"] = r.verdicts;
        env["data"] = r.data;
        std::cout << env.dump(2) << "\n";
    } else {
        for (const auto& line : r.text)
            std::cout << line << "\n";
    }
    return r.failed ? kCheckFailed : kOk;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// set diagrams list their objects' elements; complex diagrams nest a "complex"
bool is_set_level(const Json& j)
{
    return j.contains("objects") && j["objects"].is_object() && !j["objects"].empty() &&
           j["objects"].begin()->is_array();
}

std::string invariants_line(const std::string& label, const ComplexInvariants& inv)
{
    std::ostringstream s;
    s << label << ": pi0 = " << inv.pi0 << ", H1 = " << inv.h1.to_string() << ", euler = " << inv.full_euler
      << ", cells =";
    for (auto c : inv.cells)
        s << " " << c;
    return s.str();
}

// -- commands ---------------------------------------------------------------

void cmd_realize(Report& r, const Input& in)
{
    auto x = realize(graph_from_json(in.json));
    r.data["complex"] = complex_to_json(x);
    r.text.push_back(complex_to_json(x).dump());
}

void cmd_is_tree(Report& r, const Input& in)
{
    Graph g = graph_from_json(in.json);
    bool t = is_tree(g);
    r.data["is_tree"] = t;
    r.text.push_back(yes_no(t));
}

void cmd_colim(Report& r, const Input& in)
{
    if (is_set_level(in.json)) {
        auto d = set_diagram_from_json(in.json);
        auto c = colim_set(d);
        r.data["carrier"] = c.carrier.elements;
        Json inj = Json::object();
        for (std::size_t i = 0; i < c.injections.size(); ++i) {
            Json m = Json::object();
            for (std::size_t x = 0; x < c.injections[i].dom(); ++x)
                m[d.objects[i].elements[x]] = c.carrier.elements[c.injections[i](x)];
            inj[d.shape.vertex_id(i)] = m;
        }
        r.data["injections"] = inj;
        std::string line = "colimit: {";
        for (std::size_t k = 0; k < c.carrier.size(); ++k)
            line += (k ? ", " : "") + c.carrier.elements[k];
        r.text.push_back(line + "}");
        return;
    }
    auto c = colim_cx(diagram_cx_from_json(in.json));
    auto inv = invariants(*c.complex);
    r.data["complex"] = complex_to_json(*c.complex);
    r.data["invariants"] = invariants_to_json(inv);
    r.text.push_back(invariants_line("colimit", inv));
}

void cmd_coslice_colim(Report& r, const Input& in, const RunConfig& cfg)
{
    if (in.json.contains("base") && in.json["base"].is_array()) {
        auto d = coslice_set_diagram_from_json(in.json);
        auto c = coslice_colim_set(d);
        r.data["carrier"] = c.tip.carrier.elements;
        Json bp = Json::object();
        for (std::size_t a = 0; a < d.base.size(); ++a)
            bp[d.base.elements[a]] = c.tip.carrier.elements[c.tip.basepoint(a)];
        r.data["basepoint"] = bp;
        std::string line = "coslice colimit: {";
        for (std::size_t k = 0; k < c.tip.carrier.size(); ++k)
            line += (k ? ", " : "") + c.tip.carrier.elements[k];
        r.text.push_back(line + "}");
        return;
    }
    auto d = adiagram_from_json(in.json);
    if (cfg.construction != "2") {
        auto one = construction_one(d);
        auto inv = invariants(*one.result.total);
        r.data["construction_one"] = {{"complex", complex_to_json(*one.result.total)},
                                      {"invariants", invariants_to_json(inv)}};
        r.text.push_back(invariants_line("construction 1", inv));
    }
    if (cfg.construction != "1") {
        auto two = construction_two(d);
        auto inv = invariants(*two.result.total);
        r.data["construction_two"] = {{"complex", complex_to_json(*two.result.total)},
                                      {"invariants", invariants_to_json(inv)}};
        r.text.push_back(invariants_line("construction 2", inv));
    }
    if (cfg.construction == "both") {
        auto c = compare_constructions(d);
        r.data["comparison"] = map_check_to_json(c.comparison);
        r.verdict("constructions_agree", c.passed());
        r.text.push_back("constructions agree: " + yes_no(c.passed()));
    }
}

void cmd_invariants(Report& r, const Input& in, const RunConfig& cfg)
{
    const Json& j = in.json;
    // a coslice-colim report: invariants of every construction it carries
    if (j.contains("command") && j.contains("data")) {
        for (const char* key : {"construction_one", "construction_two"}) {
            if (!j["data"].contains(key))
                continue;
            auto x = complex_from_json(j["data"][key]["complex"]);
            auto inv = invariants(x);
            r.data[key] = invariants_to_json(inv);
            r.text.push_back(invariants_line(key, inv));
        }
        if (r.data.empty())
            throw ValidationError(in.path + ": report carries no complexes");
        return;
    }
    if (j.contains("shape")) {
        auto d = adiagram_from_json(j);
        std::vector<std::pair<const char*, ComplexPtr>> xs;
        if (cfg.construction != "2")
            xs.push_back({"construction_one", construction_one(d).result.total});
        if (cfg.construction != "1")
            xs.push_back({"construction_two", construction_two(d).result.total});
        for (const auto& [key, x] : xs) {
            auto inv = invariants(*x);
            r.data[key] = invariants_to_json(inv);
            r.text.push_back(invariants_line(key, inv));
        }
        return;
    }
    auto inv = invariants(complex_from_json(j));
    r.data["invariants"] = invariants_to_json(inv);
    r.text.push_back(invariants_line("complex", inv));
}

void cmd_check_tree_creation(Report& r, const Input& in)
{
    auto d = adiagram_from_json(in.json);
    auto m = check_tree_creation(d);
    r.data["comparison"] = map_check_to_json(m);
    r.verdict("pi0_bijective", m.pi0_bijective);
    r.verdict("H1_isomorphism", m.h1.isomorphism);
    r.text.push_back("colim F -> construction 1: pi0 bijective " + yes_no(m.pi0_bijective) + ", H1 " +
                     m.h1.source.to_string() + " -> " + m.h1.target.to_string() + " isomorphism " +
                     yes_no(m.h1.isomorphism));
}

void cmd_check_universality(Report& r, const Input& in)
{
    const Json& j = in.json;
    UniversalityReport u;
    if (j.contains("diagram") && j["diagram"].contains("base")) {
        auto d = coslice_set_diagram_from_json(j["diagram"]);
        auto c = coslice_colim_set(d);
        UnderSet v = under_set_from_json(j.value("V", Json::object()), d.base);
        UnderSet y = under_set_from_json(j.value("Y", Json::object()), d.base);
        FinFun f = finfun_from_json(j.value("f", Json::object()), c.tip.carrier, v.carrier);
        FinFun h = finfun_from_json(j.value("h", Json::object()), y.carrier, v.carrier);
        u = check_universality(d, v, f, y, h);
    } else {
        if (!j.contains("diagram"))
            throw ValidationError(in.path + ": missing field 'diagram'");
        auto d = set_diagram_from_json(j["diagram"]);
        auto c = colim_set(d);
        FinSet v{j.value("V", std::vector<std::string>{})};
        FinSet y{j.value("Y", std::vector<std::string>{})};
        FinFun f = finfun_from_json(j.value("f", Json::object()), c.carrier, v);
        FinFun h = finfun_from_json(j.value("h", Json::object()), y, v);
        u = check_universality(d, v.size(), f, h);
    }
    r.data["colim_of_pullbacks"] = u.colim_of_pullbacks;
    r.data["pullback_of_colim"] = u.pullback_of_colim;
    r.verdict("bijective", u.bijective);
    r.text.push_back("colim of pullbacks: " + std::to_string(u.colim_of_pullbacks) +
                     ", pullback of colim: " + std::to_string(u.pullback_of_colim) + ", bijective " +
                     yes_no(u.bijective));
}

void cmd_check_universal_property(Report& r, const Input& in, const RunConfig& cfg)
{
    const Json& j = in.json;
    if (!j.contains("diagram") || !j.contains("tip"))
        throw ValidationError(in.path + ": expected fields 'diagram' and 'tip'");
    auto d = coslice_set_diagram_from_json(j["diagram"]);
    auto t = under_set_from_json(j["tip"], d.base);
    auto u = verify_universal_property(d, t, cfg.enum_cap);
    r.data["amaps"] = u.amaps;
    r.data["cocones"] = u.cocones;
    r.verdict("bijective", u.bijective());
    r.text.push_back("A-maps: " + std::to_string(u.amaps) + ", cocones: " + std::to_string(u.cocones) +
                     ", bijective " + yes_no(u.bijective()));
}

FinSet set_field(const Json& j, const char* key, const std::string& where)
{
    if (!j.contains(key) || !j[key].is_array())
        throw ValidationError(where + ": expected an array '" + key + "'");
    return FinSet{j[key].get<std::vector<std::string>>()};
}

void cmd_check_ofs(Report& r, const Input& in, const RunConfig& cfg)
{
    const Json& j = in.json;
    bool any = false;
    if (j.contains("function")) {
        any = true;
        const Json& fj = j["function"];
        FinSet dom = set_field(fj, "dom", "function"), cod = set_field(fj, "cod", "function");
        FinFun f = finfun_from_json(fj.value("map", Json::object()), dom, cod);
        auto fac = factorize(f);
        bool ok = compose(fac.injection, fac.surjection) == f && fac.surjection.is_surjective() &&
                  fac.injection.is_injective();
        r.data["image_size"] = fac.image_size;
        r.verdict("factorization", ok);
        r.text.push_back("image size " + std::to_string(fac.image_size) + ", factorization valid " + yes_no(ok));
    }
    if (j.contains("square")) {
        any = true;
        const Json& s = j["square"];
        FinSet a = set_field(s, "A", "square"), b = set_field(s, "B", "square");
        FinSet c = set_field(s, "C", "square"), d = set_field(s, "D", "square");
        FinFun l = finfun_from_json(s.value("l", Json::object()), a, b);
        FinFun rr = finfun_from_json(s.value("r", Json::object()), c, d);
        FinFun top = finfun_from_json(s.value("top", Json::object()), a, c);
        FinFun bottom = finfun_from_json(s.value("bottom", Json::object()), b, d);
        if (compose(rr, top) != compose(bottom, l))
            throw ValidationError(in.path + ": square: the square does not commute");
        std::size_t n = count_fillers(l, rr, top, bottom);
        bool orth = orthogonal(l, rr, cfg.enum_cap);
        r.data["fillers"] = n;
        r.data["orthogonal"] = orth;
        r.verdict("unique_filler", n == 1);
        r.text.push_back("fillers: " + std::to_string(n) + ", l orthogonal to r " + yes_no(orth));
    }
    if (!any)
        throw ValidationError(in.path + ": expected 'function' and/or 'square'");
}

void cmd_check_weak_limit(Report& r, const Input& in)
{
    auto d = adiagram_from_json(in.json);
    auto w = weak_limit_check(d);
    r.data["colimit_cohomology"] = group_to_json(w.colimit_cohomology);
    Json objs = Json::array();
    for (const auto& g : w.object_cohomology)
        objs.push_back(group_to_json(g));
    r.data["object_cohomology"] = objs;
    r.data["image_rank"] = w.image_rank;
    r.data["kernel_rank"] = w.kernel_rank;
    r.verdict("exact", w.exact);
    r.verdict("ranks_consistent", w.ranks_consistent);
    r.text.push_back("H^1(colim) = " + w.colimit_cohomology.to_string() + ", image rank " +
                     std::to_string(w.image_rank) + ", kernel rank " + std::to_string(w.kernel_rank) + ", exact " +
                     yes_no(w.exact));
}

suites::SuiteConfig suite_config(const RunConfig& cfg)
{
    suites::SuiteConfig s;
    s.seed = cfg.seed;
    s.parallel = !cfg.serial;
    s.enum_cap = cfg.enum_cap;
    s.bounds.max_set = cfg.max_set;
    s.bounds.max_vertices = cfg.max_vertices;
    return s;
}

// Timings stay out of the report so it is byte-identical across runs.
void add_suite(Report& r, const suites::CriterionResult& c)
{
    bool ok = c.failures == 0;
    r.data["criteria"].push_back({{"id", c.id},
                                  {"name", c.name},
                                  {"cases", c.cases},
                                  {"failures", c.failures},
                                  {"detail", c.detail}});
    r.verdict(std::to_string(c.id), ok);
    r.text.push_back(std::string(ok ? "[PASS] " : "[FAIL] ") + std::to_string(c.id) + " " + c.name + ": " +
                     std::to_string(c.cases) + " cases, " + std::to_string(c.failures) + " failures - " + c.detail);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Finite colimit engine for pointed and coslice homotopy colimits"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--seed", cfg.seed, "Seed for randomized sweeps")->envname("HOCOLIM_SEED");
    app.add_option("--max-set", cfg.max_set, "Largest random set size")->check(CLI::PositiveNumber);
    app.add_option("--max-vertices", cfg.max_vertices, "Largest random shape")->check(CLI::PositiveNumber);
    app.add_option("--enum-cap", cfg.enum_cap, "Largest enumeration before giving up")->check(CLI::PositiveNumber);
    app.add_option("--construction", cfg.construction, "1, 2 or both")->check(CLI::IsMember({"1", "2", "both"}));
    app.add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    std::string file;
    auto sub = [&](const char* name, const char* help, bool needs_file) {
        auto* s = app.add_subcommand(name, help);
        s->fallthrough();
        auto* opt = s->add_option("file", file, "JSON input ('-' for stdin)");
        if (needs_file)
            opt->required();
        return s;
    };
    auto* realize_cmd = sub("realize", "Realize a graph as a 1-complex", true);
    auto* tree_cmd = sub("is-tree", "Is the graph a tree", true);
    auto* colim_cmd = sub("colim", "Plain colimit of a set or complex diagram", true);
    auto* coslice_cmd = sub("coslice-colim", "Coslice colimit of a set or complex A-diagram", true);
    auto* inv_cmd = sub("invariants", "pi0, Euler characteristic and (co)homology", true);
    auto* c3 = sub("check-tree-creation", "Creation of colimits over trees (suite without a file)", false);
    auto* c6 = sub("check-universality", "Pullback stability of colimits (suite without a file)", false);
    auto* c2 = sub("check-universal-property", "Universal property by enumeration (suite without a file)", false);
    auto* c7 = sub("check-ofs", "Surjection/injection factorization system (suite without a file)", false);
    auto* c9 = sub("check-weak-limit", "Exactness at H^1 (suite without a file)", false);
    auto* self = app.add_subcommand("selftest", "Run every acceptance suite");
    self->fallthrough();
    self->add_flag("--serial", cfg.serial, "Run cases on one thread");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kInputError;
    }

    Report r;
    try {
        auto* used = app.get_subcommands().front();
        r.command = used->get_name();
        Input in;
        if (!file.empty()) {
            in = load(file);
            r.input(in);
        }
        auto suite = suite_config(cfg);
        if (used == realize_cmd)
            cmd_realize(r, in);
        else if (used == tree_cmd)
            cmd_is_tree(r, in);
        else if (used == colim_cmd)
            cmd_colim(r, in);
        else if (used == coslice_cmd)
            cmd_coslice_colim(r, in, cfg);
        else if (used == inv_cmd)
            cmd_invariants(r, in, cfg);
        else if (used == c3)
            file.empty() ? add_suite(r, suites::tree_creation(suite)) : cmd_check_tree_creation(r, in);
        else if (used == c6)
            file.empty() ? add_suite(r, suites::universality(suite)) : cmd_check_universality(r, in);
        else if (used == c2)
            file.empty() ? add_suite(r, suites::universal_property(suite)) : cmd_check_universal_property(r, in, cfg);
        else if (used == c7)
            file.empty() ? add_suite(r, suites::factorization_system(suite)) : cmd_check_ofs(r, in, cfg);
        else if (used == c9)
            file.empty() ? add_suite(r, suites::weak_limit(suite)) : cmd_check_weak_limit(r, in);
        else if (used == self)
            for (const auto& c : suites::run_all(suite))
                add_suite(r, c);
    } catch (const ValidationError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return kInputError;
    } catch (const SizeError& e) {
        std::cerr << "too large: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    }
    return emit(r, cfg);
}
