#pragma once

#include "arqkit/int_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace arqkit {

struct UndirectedGraph;

/// Presentation of an algebra: vertices, arrows and formal relations.
class Quiver {
public:
    struct Vertex {
        std::string id;
        std::string label;
    };
    struct Arrow {
        std::string id;
        int src = 0;
        int dst = 0;
        std::string label;
    };
    struct Term {
        Int coeff;
        std::vector<int> path; // arrow indices, applied right to left
    };
    struct Relation {
        std::string text;
        std::vector<Term> terms;
    };

    int add_vertex(const std::string& id, const std::string& label = {});
    int add_arrow(const std::string& id, const std::string& src, const std::string& dst,
                  const std::string& label = {});
    void add_relation(Relation r);

    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Arrow>& arrows() const { return arrows_; }
    const std::vector<Relation>& relations() const { return relations_; }

    std::optional<int> find_vertex(std::string_view id) const;
    std::optional<int> find_arrow(std::string_view id) const;
    int vertex_index(std::string_view id) const;

    bool has_loop() const;
    bool acyclic() const;
    std::vector<int> topological_order() const;

    /// Entry (i, j) counts paths from vertex i to vertex j, the trivial path included.
    IntMatrix path_counts() const;

    /// Number of arrows i -> j.
    IntMatrix arrow_counts() const;

    UndirectedGraph underlying_graph() const;
    Quiver opposite() const;

    std::string to_string() const;

private:
    std::vector<Vertex> vertices_;
    std::vector<Arrow> arrows_;
    std::vector<Relation> relations_;
    std::map<std::string, int, std::less<>> vertex_index_;
    std::map<std::string, int, std::less<>> arrow_index_;
};

/// Parses `vertices <id>[:<label>] ...; arrows <id>:<src>-><dst> ...; relations <expr> ...`.
Quiver parse_quiver(std::string_view text);

} // namespace arqkit
