#include "plumbline/plumbing.hpp"

#include <json.hpp>

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace plumbline {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

WeightedGraph::WeightedGraph(std::vector<std::string> ids, std::vector<long> weights,
                             std::vector<std::pair<std::size_t, std::size_t>> edges)
    : ids_(std::move(ids)), weights_(std::move(weights)), edges_(std::move(edges)),
      degree_(ids_.size(), 0)
{
    if (ids_.size() != weights_.size())
        throw GraphError("vertex and weight counts differ");
    std::set<std::string> seen_ids;
    for (const auto& id : ids_)
        if (!seen_ids.insert(id).second)
            throw GraphError("duplicate vertex '" + id + "'");

    std::vector<std::size_t> parent(size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (auto [a, b] : edges_) {
        if (a >= size() || b >= size())
            throw GraphError("edge references an unknown vertex");
        if (a == b)
            throw GraphError("self-loop at '" + ids_[a] + "'");
        if (!seen.insert(std::minmax(a, b)).second)
            throw GraphError("duplicate edge " + ids_[a] + "-" + ids_[b]);
        const auto ra = find(a), rb = find(b);
        if (ra == rb)
            throw GraphError("cycle through edge " + ids_[a] + "-" + ids_[b]);
        parent[ra] = rb;
        ++degree_[a];
        ++degree_[b];
    }
}

std::size_t WeightedGraph::index_of(const std::string& id) const
{
    for (std::size_t i = 0; i < ids_.size(); ++i)
        if (ids_[i] == id)
            return i;
    throw GraphError("unknown vertex '" + id + "'");
}

WeightedGraph parse_graph(const std::string& text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw GraphError(std::string("graph file: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw GraphError("graph file: missing \"vertices\" array");

    std::vector<std::string> ids;
    std::vector<long> weights;
    for (const auto& v : j["vertices"]) {
        if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
            throw GraphError("graph file: vertex without string id");
        if (!v.contains("weight") || !v["weight"].is_number_integer())
            throw GraphError("graph file: non-integer weight for '" + v["id"].get<std::string>() + "'");
        ids.push_back(v["id"].get<std::string>());
        weights.push_back(v["weight"].get<long>());
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges;
    if (j.contains("edges")) {
        if (!j["edges"].is_array())
            throw GraphError("graph file: \"edges\" must be an array");
        auto lookup = [&](const nlohmann::json& x) -> std::size_t {
            if (!x.is_string())
                throw GraphError("graph file: edge endpoints must be vertex ids");
            const auto id = x.get<std::string>();
            for (std::size_t i = 0; i < ids.size(); ++i)
                if (ids[i] == id)
                    return i;
            throw GraphError("graph file: unknown vertex '" + id + "' in edge");
        };
        for (const auto& e : j["edges"]) {
            if (!e.is_array() || e.size() != 2)
                throw GraphError("graph file: edge must be a pair");
            edges.emplace_back(lookup(e[0]), lookup(e[1]));
        }
    }
    return WeightedGraph(std::move(ids), std::move(weights), std::move(edges));
}

WeightedGraph load_graph(const std::string& path)
{
    return parse_graph(read_file(path));
}

IntMatrix intersection_form(const WeightedGraph& g)
{
    IntMatrix q(g.size(), g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
        q(v, v) = g.weight(v);
    for (auto [a, b] : g.edges())
        q(a, b) = q(b, a) = 1;
    return q;
}

std::vector<std::size_t> bad_vertices(const WeightedGraph& g)
{
    std::vector<std::size_t> bad;
    for (std::size_t v = 0; v < g.size(); ++v)
        if (g.weight(v) > -static_cast<long>(g.degree(v)))
            bad.push_back(v);
    return bad;
}

Integer h1_order(const WeightedGraph& g)
{
    const Integer d = det_exact(intersection_form(g));
    if (d == 0)
        throw SingularMatrixError("intersection form is degenerate");
    return abs(d);
}

} // namespace plumbline
