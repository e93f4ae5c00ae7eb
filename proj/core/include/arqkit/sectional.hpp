#pragma once

#include "arqkit/diagrams.hpp"
#include "arqkit/translation_quiver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace arqkit {

/// Throws unless consecutive vertices are joined by an arrow of the window.
void check_path(const TranslationQuiver& w, const std::vector<int>& path);

bool is_sectional(const TranslationQuiver& w, const std::vector<int>& path);
bool is_presectional(const TranslationQuiver& w, const std::vector<int>& path);

/// Predecessors of v are all in the window.
bool pred_complete(const TranslationQuiver& w, int v);
/// Successors of v are all in the window.
bool succ_complete(const TranslationQuiver& w, int v);

enum class OrbitClass { Periodic, Finite, LeftStableOnly, RightStableOnly, StableNonperiodic, WindowUndetermined };

std::string to_string(OrbitClass c);

struct Orbit {
    /// Starts at the vertex without tau-inverse (any member for periodic orbits) and follows tau.
    std::vector<int> members;
    OrbitClass cls = OrbitClass::WindowUndetermined;
    int period = 0;
};

struct OrbitGraph {
    std::vector<Orbit> orbits;
    std::vector<int> orbit_of;
    std::vector<std::pair<int, int>> adjacency;

    std::string to_string(const TranslationQuiver& w) const;
};

OrbitGraph tau_orbits(const TranslationQuiver& w);

/// tau^n defined for all n >= 0 as far as the window shows: periodic, or the orbit runs off the left edge.
std::vector<bool> left_stable_in_window(const TranslationQuiver& w);
std::vector<bool> right_stable_in_window(const TranslationQuiver& w);

struct SectionalSubgraph {
    std::vector<int> vertices;
    /// Indices into the window's arrow list.
    std::vector<int> arrows;
    bool full = false;
    /// Members whose neighbourhood is cut by the window edge.
    std::vector<int> open;

    bool boundary_open() const { return !open.empty(); }
};

bool is_sectional_subgraph(const TranslationQuiver& w, const std::vector<int>& arrows);

/// Grows {seed} arrow by arrow (predecessor arrows first, smallest id first) until maximal.
/// When `allowed` is given, growth stays inside it.
SectionalSubgraph full_sectional_subgraph(const TranslationQuiver& w, int seed,
                                          const std::vector<bool>* allowed = nullptr);

UndirectedGraph sectional_graph(const TranslationQuiver& w, const SectionalSubgraph& s);

/// Catalog type of the underlying graph, edge multiplicity = valuation; boundary_open propagated.
DiagramType subgraph_type(const TranslationQuiver& w, const SectionalSubgraph& s);

/// Reads an open end as the diagram continuing: A(n) -> A∞ or A∞∞, D(n) -> D∞.
DiagramType window_semantic_type(const TranslationQuiver& w, const SectionalSubgraph& s);

struct LeftSubgraphType {
    DiagramType type;
    bool helical = false;
    SectionalSubgraph sigma;
};

/// `component` lists left-stable vertices of one component of the left-stable part.
LeftSubgraphType left_subgraph_type(const TranslationQuiver& w, const std::vector<int>& component);
/// Over all left-stable vertices of the window, which must form one component.
LeftSubgraphType left_subgraph_type(const TranslationQuiver& w);

bool is_helical(const TranslationQuiver& w, const std::vector<int>& component);

/// Vertex sets of the connected components of the subquiver on the masked vertices.
std::vector<std::vector<int>> masked_components(const TranslationQuiver& w, const std::vector<bool>& mask);

struct TauShiftedPath {
    int n = 0;
    std::vector<int> path;
    bool sectional = false;
};

/// Path from x to tau^n(y) with minimal |n| (positive first), then minimal length.
std::optional<TauShiftedPath> find_tau_shifted_path(const TranslationQuiver& w, int x, int y);

/// z_path = Z_0..Z_{k+l}; y_path = Y_0..Y_{k+l}, or empty for the l = 0 case.
bool is_large_between(const TranslationQuiver& w, int x, int y, const std::vector<int>& z_path,
                      const std::vector<int>& y_path);
std::vector<int> inner_modules(const TranslationQuiver& w, int x, int y, const std::vector<int>& z_path,
                               const std::vector<int>& y_path);

enum class Verdict { Finite, Infinite, Undetermined };

std::string to_string(Verdict v);

struct PartVerdict {
    std::string side;
    std::vector<int> vertices;
    Verdict verdict = Verdict::Undetermined;
    std::string rule;
    std::string detail;
};

struct ComponentVerdict {
    std::vector<int> vertices;
    Verdict verdict = Verdict::Undetermined;
    std::string rule;
    std::vector<PartVerdict> parts;
};

std::vector<ComponentVerdict> finiteness_verdict(const TranslationQuiver& w);
std::string verdict_report(const std::vector<ComponentVerdict>& vs);

} // namespace arqkit
