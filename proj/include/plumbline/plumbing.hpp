#pragma once

// Weighted plumbing forests and their intersection forms.

#include "plumbline/linalg.hpp"

#include <string>
#include <utility>
#include <vector>

namespace plumbline {

class GraphError : public Error {
public:
    using Error::Error;
};

/// A forest with integer vertex weights. Vertex order is the coordinate
/// order of every vector and matrix derived from the graph.
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// Throws GraphError if the edges do not form a forest.
    WeightedGraph(std::vector<std::string> ids, std::vector<long> weights,
                  std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t size() const noexcept { return ids_.size(); }
    const std::vector<std::string>& ids() const noexcept { return ids_; }
    const std::vector<long>& weights() const noexcept { return weights_; }
    long weight(std::size_t v) const { return weights_.at(v); }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
    std::size_t degree(std::size_t v) const { return degree_.at(v); }
    std::size_t index_of(const std::string& id) const;

private:
    std::vector<std::string> ids_;
    std::vector<long> weights_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> degree_;
};

/// Parses `{"vertices":[{"id":..,"weight":..}],"edges":[[a,b],..]}`.
WeightedGraph parse_graph(const std::string& text);
WeightedGraph load_graph(const std::string& path);

IntMatrix intersection_form(const WeightedGraph& g);

/// Vertices with m(v) > -deg(v).
std::vector<std::size_t> bad_vertices(const WeightedGraph& g);

/// |det Q|, the order of H_1 of the boundary. Throws on a degenerate form.
Integer h1_order(const WeightedGraph& g);

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::string& path);

} // namespace plumbline
