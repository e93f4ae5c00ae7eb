#pragma once

#include "arqkit/int_matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arqkit {

/// Finite undirected multigraph.
struct UndirectedGraph {
    struct Edge {
        int a = 0;
        int b = 0;
        int mult = 1;
    };

    std::vector<std::string> vertices;
    std::vector<Edge> edges;

    int add_vertex(std::string id);
    /// Adds to the multiplicity of an existing edge between a and b.
    void add_edge(int a, int b, int mult = 1);
    int multiplicity(int a, int b) const;
    std::size_t size() const { return vertices.size(); }
    std::vector<int> neighbors(int v) const;
    bool has_loop() const;
    bool connected() const;
    std::vector<std::vector<int>> components() const;
    UndirectedGraph induced(const std::vector<int>& keep) const;
    std::string to_string() const;
};

/// `vertices a b c; edges a-b b-c a-b:2`
UndirectedGraph parse_graph(std::string_view text);

struct DiagramType {
    enum class Family { A, D, E, ATilde, DTilde, ETilde, AInf, DInf, AInfInf, Other };

    Family family = Family::Other;
    int n = 0;
    /// Set only by window-aware callers: the diagram may continue past the window.
    bool boundary_open = false;

    bool dynkin() const { return family == Family::A || family == Family::D || family == Family::E; }
    bool euclidean() const
    {
        return family == Family::ATilde || family == Family::DTilde || family == Family::ETilde;
    }
    bool infinite() const
    {
        return family == Family::AInf || family == Family::DInf || family == Family::AInfInf;
    }
    bool same_tag(const DiagramType& o) const { return family == o.family && n == o.n; }
    bool operator==(const DiagramType& o) const = default;

    std::string name() const;
    /// name() plus a boundary qualifier.
    std::string describe() const;
};

DiagramType classify(const UndirectedGraph& g);

struct EuclideanWitness {
    bool found = false;
    std::vector<int> vertices;
    DiagramType type;
};

/// Finds an induced Euclidean subdiagram; throws on loops.
EuclideanWitness contains_euclidean(const UndirectedGraph& g);

IntMatrix cartan(const UndirectedGraph& g);

struct SubadditiveCheck {
    std::vector<Rational> slack;
    bool subadditive = false;
    bool additive = false;
};

SubadditiveCheck check_subadditive(const UndirectedGraph& g, const std::vector<Rational>& n);

struct AdditiveVerdict {
    bool has_subadditive_non_additive = false;
    /// Dynkin case: C^-1 applied to the all-ones vector.
    std::vector<Rational> witness;
    /// Non-Dynkin case: Euclidean subdiagram and its additive radical function.
    std::vector<int> certificate_vertices;
    DiagramType certificate_type;
    IntVec radical;
};

AdditiveVerdict additive_dynkin_verdict(const UndirectedGraph& g);

/// Positive primitive generator of the Cartan null space of a Euclidean diagram.
IntVec radical_generator(const UndirectedGraph& g);

bool positive_definite(const IntMatrix& m);
bool positive_semidefinite(const IntMatrix& m);

UndirectedGraph make_diagram(const DiagramType& t);
/// All Dynkin and Euclidean diagrams with at most max_vertices vertices.
std::vector<std::pair<DiagramType, UndirectedGraph>> diagram_catalog(int max_vertices);

} // namespace arqkit
