#include "colorlab/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "colorlab/error.hpp"

namespace colorlab {

namespace {

int parse_vertex_key(const std::string& key, int n)
{
    std::size_t used = 0;
    int v = 0;
    try {
        v = std::stoi(key, &used);
    } catch (const std::exception&) {
        throw InputError("vertex key is not an integer: " + key);
    }
    if (used != key.size() || v < 1 || v > n)
        throw InputError("vertex key out of range: " + key);
    return v - 1;
}

}  // namespace

Graph read_graph(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string line;
    int n = -1;
    long long declared_edges = -1;
    std::vector<Edge> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::string tag;
        if (!(tokens >> tag) || tag[0] == '#')
            continue;
        auto where = " on line " + std::to_string(line_no);
        if (tag == "p") {
            if (n >= 0)
                throw InputError("duplicate header" + where);
            if (!(tokens >> n >> declared_edges) || n < 0 || declared_edges < 0)
                throw InputError("malformed header" + where);
        } else if (tag == "e") {
            if (n < 0)
                throw InputError("edge before header" + where);
            int u = 0, v = 0;
            if (!(tokens >> u >> v))
                throw InputError("malformed edge" + where);
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("edge endpoint out of range" + where);
            edges.emplace_back(u - 1, v - 1);
        } else {
            throw InputError("unknown line tag '" + tag + "'" + where);
        }
        std::string rest;
        if (tokens >> rest)
            throw InputError("trailing data" + where);
    }
    if (n < 0)
        throw InputError("missing header");
    if (static_cast<long long>(edges.size()) != declared_edges)
        throw InputError("header declares " + std::to_string(declared_edges) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(n, edges);
}

std::string write_graph(const Graph& g)
{
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

Graph read_graph_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open graph file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return read_graph(buffer.str());
}

nlohmann::json graph_to_json(const Graph& g)
{
    auto edges = nlohmann::json::array();
    for (auto [u, v] : g.edges())
        edges.push_back({u + 1, v + 1});
    return {{"n", g.order()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j)
{
    try {
        int n = j.at("n").get<int>();
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError("edge endpoint out of range");
            edges.emplace_back(u - 1, v - 1);
        }
        return Graph(n, edges);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed graph JSON: ") + e.what());
    }
}

TokenAssignment tokens_from_json(const Graph& g, const nlohmann::json& j)
{
    if (!j.contains("tokens") || !j["tokens"].is_object())
        throw InputError("expected an object under \"tokens\"");
    TokenAssignment f(static_cast<std::size_t>(g.order()), -1);
    for (const auto& [key, value] : j["tokens"].items()) {
        int v = parse_vertex_key(key, g.order());
        if (!value.is_number_integer() || value.get<int>() < 0)
            throw InputError("token count must be a nonnegative integer at vertex " + key);
        f[static_cast<std::size_t>(v)] = value.get<int>();
    }
    for (std::size_t v = 0; v < f.size(); ++v)
        if (f[v] < 0)
            throw InputError("no token count for vertex " + std::to_string(v + 1));
    return f;
}

nlohmann::json tokens_to_json(const TokenAssignment& f)
{
    nlohmann::json tokens = nlohmann::json::object();
    for (std::size_t v = 0; v < f.size(); ++v)
        tokens[std::to_string(v + 1)] = f[v];
    return {{"tokens", tokens}};
}

NamedLists lists_from_json(const Graph& g, const nlohmann::json& j)
{
    if (!j.contains("lists") || !j["lists"].is_object())
        throw InputError("expected an object under \"lists\"");
    NamedLists out;
    out.lists.assign(static_cast<std::size_t>(g.order()), {});
    std::vector<bool> present(static_cast<std::size_t>(g.order()), false);
    std::map<std::string, Color> ids;
    // Visit vertices in id order so color ids do not depend on key order.
    std::map<int, const nlohmann::json*> by_vertex;
    for (const auto& [key, value] : j["lists"].items())
        by_vertex[parse_vertex_key(key, g.order())] = &value;
    for (const auto& [v, value] : by_vertex) {
        if (!value->is_array())
            throw InputError("list must be an array at vertex " + std::to_string(v + 1));
        present[static_cast<std::size_t>(v)] = true;
        auto& list = out.lists[static_cast<std::size_t>(v)];
        for (const auto& c : *value) {
            std::string name = c.is_string() ? c.get<std::string>() : c.dump();
            auto [it, inserted] = ids.emplace(name, static_cast<Color>(out.names.size()));
            if (inserted)
                out.names.push_back(name);
            if (std::find(list.begin(), list.end(), it->second) != list.end())
                throw InputError("duplicate color in list at vertex " + std::to_string(v + 1));
            list.push_back(it->second);
        }
    }
    for (std::size_t v = 0; v < present.size(); ++v)
        if (!present[v])
            throw InputError("no list for vertex " + std::to_string(v + 1));
    return out;
}

nlohmann::json lists_to_json(const ListAssignment& lists, const std::vector<std::string>& names)
{
    nlohmann::json out = nlohmann::json::object();
    for (std::size_t v = 0; v < lists.size(); ++v) {
        auto list = nlohmann::json::array();
        for (Color c : lists[v])
            list.push_back(static_cast<std::size_t>(c) < names.size() ? names[static_cast<std::size_t>(c)]
                                                                       : color_name(c));
        out[std::to_string(v + 1)] = list;
    }
    return {{"lists", out}};
}

std::string color_name(Color c)
{
    std::string name;
    long long x = c;
    do {
        name.insert(name.begin(), static_cast<char>('a' + x % 26));
        x = x / 26 - 1;
    } while (x >= 0);
    return name;
}

}  // namespace colorlab
