#pragma once

#include "arqkit/int_matrix.hpp"
#include "arqkit/quiver.hpp"
#include "arqkit/translation_quiver.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace arqkit {

struct MeshResult {
    IntVec dim;
    /// Some entry is negative or the result is zero: the mesh does not continue.
    bool closes = false;
};

/// The missing end of a mesh: sum of valued middle terms minus the known end.
MeshResult complete_mesh(const IntVec& known, const std::vector<std::pair<int, IntVec>>& middles);

enum class KnitDirection { Right, Left };

/// Default number of tau-steps per orbit.
inline constexpr int default_slice_cap = 64;

/// Knits the preprojective (Right) or preinjective (Left) component of an acyclic quiver.
TranslationQuiver knit_hereditary(const Quiver& q, KnitDirection dir, int slice_cap = default_slice_cap);

/// Labels P{j}, I{j}, S{j} by dimension vector, else tau^-k(Pj) / tau^k(Ij) along the orbit,
/// trying the projective end first for Right.
void label_by_dims(TranslationQuiver& w, const Quiver& q, KnitDirection prefer = KnitDirection::Right);

struct ScheduleEntry {
    enum class Kind { Project, Inject, Name };

    int step = 0;
    Kind kind = Kind::Project;
    std::string id;
    IntVec dim;
    /// Project: radical summands, repeated for multiplicity. Name: the vertex whose tau-inverse gets `id`.
    std::vector<std::string> refs;
};

struct Seeds {
    TranslationQuiver window;
    std::vector<ScheduleEntry> schedule;
};

/// Interchange text, optionally followed by a `schedule` line and entries
/// `step <k> project <id> <dims> <radical ids...>`, `step <k> inject <id>`, `name <x> <id>`.
Seeds parse_seeds(std::string_view text);

/// Rightward closure of all derivable meshes; cap counts slices with the seeds as the first.
TranslationQuiver knit_from_seeds(const Seeds& seeds, int cap = default_slice_cap);

/// 2^n - 1.
Int harada_sai_bound(int n);

struct Bounds {
    Int m;
    Int s;

    Int p() const { return s * (1 + m * m) - 1; }
};

Bounds make_bounds(const Int& m, const Int& s);

/// [max(1, l - l p), l (1 + p)].
std::pair<Int, Int> length_bounds(const Bounds& b, const Int& l_y);

enum class Growth { Bounded, Growing, Undetermined };

std::string to_string(Growth g);

struct OrbitTrend {
    std::vector<int> members;
    /// Lengths from the leftmost member rightwards; absent lengths are skipped.
    std::vector<Int> lengths;
    std::string trend;
};

struct GrowthReport {
    Growth growth = Growth::Undetermined;
    std::string rule;
    std::vector<OrbitTrend> trends;

    std::string to_string(const TranslationQuiver& w) const;
};

GrowthReport growth_analysis(const TranslationQuiver& w);

/// length field, else the sum of the dimension vector; nullopt if neither is present.
std::optional<Int> vertex_length(const TqVertex& v);

} // namespace arqkit
