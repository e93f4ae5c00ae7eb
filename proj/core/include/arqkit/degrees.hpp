#pragma once

#include "arqkit/translation_quiver.hpp"

#include <string>
#include <vector>

namespace arqkit {

enum class Side { Left, Right };

struct DegreeBound {
    enum class Kind { ExactlyOne, AtLeast, Infinite, Unknown };

    Kind kind = Kind::Unknown;
    int n = 0;
    Side side = Side::Left;
    /// R1, R2, R3-cycle, R3-tube, global-merge, global-fold; empty when nothing fires.
    std::string rule;
    /// Witness path X_n, ..., X_1, Y (left side) in window indices.
    std::vector<int> witness;

    bool infinite() const { return kind == Kind::Infinite; }
    std::string to_string() const;
    std::string certificate(const TranslationQuiver& w) const;
};

DegreeBound infer_left_degree(const TranslationQuiver& w, int src, int dst);
DegreeBound infer_right_degree(const TranslationQuiver& w, int src, int dst);

/// Minimum of left degrees over tau-shifts of the arrow.
DegreeBound infer_global_left_degree(const TranslationQuiver& w, int src, int dst);

/// One bound per arrow of the window, in arrow order.
std::vector<DegreeBound> all_left_degrees(const TranslationQuiver& w);
std::vector<DegreeBound> all_right_degrees(const TranslationQuiver& w);

/// Oriented cycles (up to cycle_cap arrows) all of whose arrows have certified infinite
/// left degree, or all certified infinite right degree.
std::vector<Finding> cycle_degree_consistency(const TranslationQuiver& w, std::size_t cycle_cap = 12);

} // namespace arqkit
