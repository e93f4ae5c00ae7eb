#pragma once

#include "arqkit/diagrams.hpp"
#include "arqkit/translation_quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arqkit {

/// Directed graph with no loops, multiple arrows or cycles, connected as a tree.
struct DirectedTree {
    std::vector<std::string> vertices;
    std::vector<std::pair<int, int>> arrows;
    /// Set when the tree was cut off by a cap or window boundary.
    bool truncated = false;

    int add_vertex(std::string id);
    void add_arrow(int src, int dst);
    /// Throws unless the underlying graph is a tree without loops or multiple edges.
    void check() const;
    UndirectedGraph underlying() const;
};

/// Tree for a Dynkin diagram with arrows pointing from higher to lower vertex numbers along each arm.
DirectedTree dynkin_tree(const DiagramType& t);

/// Window of ZB on the slices lo..hi.
TranslationQuiver zb_window(const DirectedTree& b, int lo, int hi);

/// ZB modulo tau^k.
TranslationQuiver zb_quotient(const DirectedTree& b, int k);

struct TreeType {
    DirectedTree tree;
    UndirectedGraph graph;
    DiagramType type;
};

TreeType tree_type(const TranslationQuiver& window, int base, std::size_t cap = 64);

/// Mouth dims, if given, are the dimension vectors of the r quasi-simples.
TranslationQuiver stable_tube(int rank, int height, const std::vector<IntVec>& mouth_dims = {});

/// Vertices of the coray ending at x, in order x_1 = x, x_2, ...; throws if x is not a coray vertex.
std::vector<int> coray_of(const TranslationQuiver& g, int x);
bool is_coray_vertex(const TranslationQuiver& g, int x);

TranslationQuiver coray_insertion(const TranslationQuiver& g, int x, int n);
TranslationQuiver ray_insertion(const TranslationQuiver& g, int x, int n);

struct TubeParams {
    int rank = 0;
    std::vector<int> insertions;
    bool operator==(const TubeParams&) const = default;
};

std::optional<TubeParams> recognize_tube(const TranslationQuiver& window);

} // namespace arqkit
