#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "colorlab/certify.hpp"
#include "colorlab/choosability.hpp"
#include "colorlab/constructions.hpp"
#include "colorlab/covers.hpp"
#include "colorlab/error.hpp"
#include "colorlab/io.hpp"
#include "colorlab/paintability.hpp"
#include "colorlab/scripts.hpp"

using namespace colorlab;
using nlohmann::json;

namespace {

enum Exit { completed = 0, failed = 1, usage = 2, over_budget = 3, refused = 4 };

struct Common {
    std::string output;
    bool deterministic = false;
    int threads = 1;
    std::uint64_t seed = 0;
};

struct Params {
    std::string kind;
    int t = 1;
    int k = 2;
    std::string graph;
    std::optional<int> tokens;
    std::string tokens_file;
    std::optional<int> cap;
    std::optional<std::uint64_t> max_nodes;
    std::string lists;
    bool trace = false;
};

std::string slurp(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json(const std::string& path)
{
    try {
        return json::parse(slurp(path));
    } catch (const json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

// text format, or inline JSON when the file starts with '{'
Graph load_graph(const std::string& path)
{
    auto text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return graph_from_json(parse_json(path));
    return read_graph(text);
}

std::optional<TokenAssignment> load_tokens(const Graph& g, const Params& p)
{
    if (p.tokens) {
        if (*p.tokens < 0)
            throw InputError("--tokens must be nonnegative");
        return TokenAssignment(g.order(), *p.tokens);
    }
    if (!p.tokens_file.empty())
        return tokens_from_json(g, parse_json(p.tokens_file));
    return std::nullopt;
}

int verdict_exit(Verdict v) { return v == Verdict::budget_exceeded ? over_budget : completed; }

json size_refusal(const SizeBudgetError& e)
{
    return {{"error", "size_budget"}, {"message", e.what()}, {"required_vertices", e.required_vertices()}};
}

int construct(const Params& p, json& out)
{
    out["construction"] = p.kind;
    out["t"] = p.t;
    out["k"] = p.k;
    try {
        if (p.kind == "badlist") {
            auto b = bad_list_for_bipartite(p.t, p.k);
            out["graph"] = graph_to_json(b.graph);
            out["lists"] = lists_to_json(b.lists)["lists"];
            out["tokens"] = tokens_to_json(b.g)["tokens"];
        } else if (p.kind == "gadget-h") {
            auto h = gadget_H(p.t, p.k);
            out["graph"] = graph_to_json(h.graph);
            out["labeling"] = to_json(h.labeling);
        } else {
            auto g = graph_G(p.t, p.k);
            out["graph"] = graph_to_json(g.graph);
            out["labeling"] = to_json(g.labeling);
        }
    } catch (const SizeBudgetError& e) {
        out.update(size_refusal(e));
        return refused;
    }
    return completed;
}

int solve(const Params& p, json& out)
{
    const Graph g = load_graph(p.graph);
    const auto f = load_tokens(g, p);
    if (!f && !p.cap)
        throw CLI::ValidationError("solve needs --tokens, --tokens-file or --cap");
    out["problem"] = p.kind;
    out["n"] = g.order();
    int code = completed;
    auto merge = [&](int c) {
        if (c != completed)
            code = c;
    };

    if (p.kind == "choosable") {
        ChoosabilityOptions options;
        if (p.max_nodes)
            options.max_assignments = *p.max_nodes;
        if (f) {
            auto r = is_f_choosable(g, *f, options);
            out["verdict"] = to_string(r.verdict);
            out["assignments"] = r.assignments;
            if (r.witness)
                out["witness_lists"] = lists_to_json(*r.witness)["lists"];
            merge(verdict_exit(r.verdict));
        }
        if (p.cap) {
            auto r = list_chromatic_number(g, *p.cap, options);
            out["value"] = r.value ? json(*r.value) : json(nullptr);
            if (r.budget_exceeded)
                merge(over_budget);
        }
    } else if (p.kind == "dp") {
        if (f) {
            auto r = is_dp_f_colorable(g, *f);
            out["verdict"] = r.colorable ? "yes" : "no";
            out["covers_checked"] = r.covers_checked;
            out["witness_cover"] = r.witness ? cover_to_json(*r.witness) : json(nullptr);
        }
        if (p.cap) {
            auto v = dp_chromatic_number(g, *p.cap);
            out["value"] = v ? json(*v) : json(nullptr);
        }
    } else {
        const bool dp = p.kind == "dp-paint";
        GameSolveOptions options;
        if (p.max_nodes)
            options.max_nodes = *p.max_nodes;
        if (f) {
            auto r = dp ? is_dp_f_paintable(g, *f, options) : is_f_paintable(g, *f, options);
            out["verdict"] = to_string(r.verdict);
            out["nodes"] = r.nodes;
            merge(verdict_exit(r.verdict));
        }
        if (p.cap) {
            auto r = dp ? dp_paint_number(g, *p.cap, options) : paint_number(g, *p.cap, options);
            out["value"] = r.value ? json(*r.value) : json(nullptr);
            out["value_nodes"] = r.nodes;
            if (r.budget_exceeded)
                merge(over_budget);
        }
    }
    return code;
}

int certify(const Params& p, const Common& common, json& out)
{
    out["script"] = p.kind;
    out["t"] = p.t;
    out["k"] = p.k;
    CertifyOptions options;
    options.threads = common.threads;
    options.record_trace = p.trace;
    if (p.max_nodes)
        options.max_nodes = *p.max_nodes;

    Graph g;
    TokenAssignment tokens;
    std::unique_ptr<ListListerScript> script;
    try {
        if (p.kind == "h-lister") {
            auto h = gadget_H(p.t, p.k);
            g = h.graph;
            tokens = h.labeling.h;
            for (int& x : tokens)
                x += p.t - 1;
            script = h_lister_script(p.t, p.k);
        } else if (p.kind == "g-lister") {
            auto c = graph_G(p.t, p.k);
            g = c.graph;
            tokens.assign(g.order(), p.k);
            script = g_lister_script(p.t, p.k);
        } else {
            auto b = bad_list_for_bipartite(p.t, p.k);
            g = b.graph;
            tokens = b.g;
            script = bad_assignment_endgame_script(b.graph, b.lists, b.g);
        }
    } catch (const SizeBudgetError& e) {
        out.update(size_refusal(e));
        return refused;
    }
    out["n"] = g.order();
    out["tokens"] = tokens_to_json(tokens)["tokens"];
    auto cert = certify_lister_strategy(g, tokens, *script, options);
    out.update(to_json(cert));
    return cert.verdict == CertificateVerdict::budget_exceeded ? over_budget : completed;
}

int reduce(const Params& p, json& out)
{
    const Graph g = load_graph(p.graph);
    auto named = lists_from_json(g, parse_json(p.lists));
    out["cover"] = cover_to_json(lists_to_cover(g, named.lists, named.names));
    return completed;
}

void emit(const json& doc, const Common& common)
{
    const auto text = doc.dump(2) + "\n";
    if (common.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(common.output);
    if (!file)
        throw InputError("cannot write " + common.output);
    file << text;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact solvers and strategy certificates for list, DP and online coloring"};
    app.require_subcommand(1);
    Common common;
    Params p;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("-o,--output", common.output, "Write the JSON document to FILE");
        sub->add_flag("--deterministic", common.deterministic, "Omit the wall_ms field");
        sub->add_option("--threads", common.threads, "Worker threads for certification")->check(CLI::Range(1, 256));
        sub->add_option("--seed", common.seed, "Reserved; every algorithm is deterministic");
    };
    auto add_tk = [&](CLI::App* sub) {
        sub->add_option("--t", p.t)->required()->check(CLI::Range(1, 64));
        sub->add_option("--k", p.k)->required()->check(CLI::Range(1, 1 << 20));
    };

    auto* construct_cmd = app.add_subcommand("construct", "Build a construction as JSON");
    construct_cmd->add_option("kind", p.kind)->required()->check(CLI::IsMember({"badlist", "gadget-h", "graph-g"}));
    add_tk(construct_cmd);
    add_common(construct_cmd);

    auto* solve_cmd = app.add_subcommand("solve", "Run an exhaustive solver on a graph");
    solve_cmd->add_option("kind", p.kind)->required()->check(CLI::IsMember({"choosable", "dp", "paint", "dp-paint"}));
    solve_cmd->add_option("--graph", p.graph)->required();
    auto* constant = solve_cmd->add_option("--tokens", p.tokens, "Constant token count");
    auto* file = solve_cmd->add_option("--tokens-file", p.tokens_file, "JSON token assignment");
    constant->excludes(file);
    solve_cmd->add_option("--cap", p.cap, "Also compute the least qualifying k up to N")->check(CLI::Range(1, 64));
    solve_cmd->add_option("--max-nodes", p.max_nodes, "Search budget");
    add_common(solve_cmd);

    auto* certify_cmd = app.add_subcommand("certify", "Verify a Lister script against every Painter reply");
    certify_cmd->add_option("kind", p.kind)->required()->check(CLI::IsMember({"h-lister", "g-lister", "endgame"}));
    add_tk(certify_cmd);
    certify_cmd->add_option("--max-nodes", p.max_nodes, "Search budget per root reply");
    certify_cmd->add_flag("--trace", p.trace, "Include the full strategy tree");
    add_common(certify_cmd);

    auto* reduce_cmd = app.add_subcommand("reduce", "Translate a list assignment into a cover");
    reduce_cmd->add_option("kind", p.kind)->required()->check(CLI::IsMember({"lists-to-cover"}));
    reduce_cmd->add_option("--graph", p.graph)->required();
    reduce_cmd->add_option("--lists", p.lists)->required();
    add_common(reduce_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? completed : usage;
    }

    json out;
    const auto start = std::chrono::steady_clock::now();
    int code = completed;
    try {
        auto* sub = app.get_subcommands().front();
        out["command"] = sub->get_name();
        if (sub == construct_cmd)
            code = construct(p, out);
        else if (sub == solve_cmd)
            code = solve(p, out);
        else if (sub == certify_cmd)
            code = certify(p, common, out);
        else
            code = reduce(p, out);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "colorlab: " << e.what() << "\n";
        return usage;
    } catch (const InputError& e) {
        std::cerr << "colorlab: " << e.what() << "\n";
        return usage;
    } catch (const Error& e) {
        out["error"] = "failed";
        out["message"] = e.what();
        code = failed;
    }
    if (!common.deterministic)
        out["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    try {
        emit(out, common);
    } catch (const Error& e) {
        std::cerr << "colorlab: " << e.what() << "\n";
        return failed;
    }
    return code;
}
