#pragma once

#include "arqkit/int_matrix.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arqkit {

struct TqVertex {
    std::string id;
    std::string label;
    std::optional<IntVec> dim;
    std::optional<Int> length;
    bool projective = false;
    bool ext_injective = false;
    bool mesh_complete = false;
    /// Declared: the tau-orbit continues forever to the left of the window.
    bool left_infinite = false;
    /// Declared: the tau-orbit continues forever to the right of the window.
    bool right_infinite = false;
};

struct TqArrow {
    int src = 0;
    int dst = 0;
    int val = 1;
};

/// A finite window of a translation quiver: valued 1-arrows plus a partial injective translation.
class TranslationQuiver {
public:
    int add_vertex(TqVertex v);
    void add_arrow(int src, int dst, int val = 1);
    void add_arrow(std::string_view src, std::string_view dst, int val = 1);
    /// Adds val to an existing arrow or creates it.
    void bump_arrow(int src, int dst, int val = 1);
    void remove_arrow(int src, int dst);
    void set_tau(int z, int tz);
    void set_tau(std::string_view z, std::string_view tz);
    void clear_tau(int z);

    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }
    const std::vector<TqVertex>& vertices() const { return vertices_; }
    const TqVertex& vertex(int v) const { return vertices_.at(v); }
    TqVertex& vertex(int v) { return vertices_.at(v); }
    const std::vector<TqArrow>& arrows() const { return arrows_; }

    std::optional<int> find(std::string_view id) const;
    int index(std::string_view id) const;

    /// -1 when undefined.
    int tau(int v) const { return tau_.at(v); }
    int tau_inv(int v) const { return tau_inv_.at(v); }

    int valuation(int src, int dst) const;
    /// (vertex, valuation) pairs in arrow insertion order.
    std::vector<std::pair<int, int>> preds(int v) const;
    std::vector<std::pair<int, int>> succs(int v) const;
    const std::vector<int>& in_arrows(int v) const { return in_.at(v); }
    const std::vector<int>& out_arrows(int v) const { return out_.at(v); }

    std::vector<std::pair<int, int>> tau_pairs() const;

    /// Subwindow on the given vertices (kept in the given order); tau kept where both ends survive.
    TranslationQuiver induced(const std::vector<int>& keep) const;

    /// Reverses arrows and exchanges tau with its inverse, projective with Ext-injective.
    TranslationQuiver opposite() const;

    std::vector<std::string> ids(const std::vector<int>& vs) const;

private:
    void rebuild_adjacency();

    std::vector<TqVertex> vertices_;
    std::vector<TqArrow> arrows_;
    std::vector<int> tau_;
    std::vector<int> tau_inv_;
    std::vector<std::vector<int>> in_;
    std::vector<std::vector<int>> out_;
    std::map<std::string, int, std::less<>> index_;
    std::map<std::pair<int, int>, int> arrow_index_;
};

enum class Severity { Error, Warning };

struct Finding {
    Severity severity = Severity::Error;
    std::string rule;
    std::vector<std::string> ids;
    std::string message;
};

struct ValidationReport {
    std::vector<Finding> findings;

    bool empty() const { return findings.empty(); }
    std::size_t errors() const;
    std::size_t warnings() const;
    std::size_t count(std::string_view rule) const;
    std::string to_string() const;
};

struct ValidateOptions {
    std::size_t sectional_cycle_cap = 16;
    std::size_t max_cycle_reports = 64;
};

ValidationReport validate(const TranslationQuiver& tq, const ValidateOptions& opts = {});

TranslationQuiver parse_ar_quiver(std::string_view text);
std::string export_ar_quiver(const TranslationQuiver& tq);
std::string export_dot(const TranslationQuiver& tq);

/// Vertex index sets of the connected components, each sorted, ordered by smallest member.
std::vector<std::vector<int>> component_indices(const TranslationQuiver& tq);
std::vector<TranslationQuiver> connected_components(const TranslationQuiver& tq);

struct IsoOptions {
    bool match_labels = false;
    bool match_dims = false;
    bool match_mesh_flags = true;
};

/// Vertex bijection a -> b preserving valued arrows, tau and P/I flags; nullopt if none exists.
std::optional<std::vector<int>> find_isomorphism(const TranslationQuiver& a, const TranslationQuiver& b,
                                                 const IsoOptions& opts = {});

} // namespace arqkit
