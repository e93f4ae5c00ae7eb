#include "arqkit/error.hpp"
#include "arqkit/sectional.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace arqkit {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Finite:
        return "finite";
    case Verdict::Infinite:
        return "infinite";
    case Verdict::Undetermined:
        return "undetermined-at-window";
    }
    return "?";
}

namespace {

bool euclidean_inside(const DiagramType& t, const UndirectedGraph& g)
{
    if (t.euclidean())
        return true;
    if (t.family != DiagramType::Family::Other || g.has_loop())
        return false;
    return contains_euclidean(g).found;
}

std::vector<bool> reach_from_injectives(const TranslationQuiver& w)
{
    std::vector<bool> seen(w.size(), false);
    std::deque<int> q;
    for (std::size_t v = 0; v < w.size(); ++v)
        if (w.vertex(v).ext_injective) {
            seen[v] = true;
            q.push_back(static_cast<int>(v));
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int ai : w.out_arrows(v)) {
            int u = w.arrows()[ai].dst;
            if (!seen[u]) {
                seen[u] = true;
                q.push_back(u);
            }
        }
    }
    return seen;
}

PartVerdict judge(const TranslationQuiver& w, const std::vector<int>& part, const std::string& side)
{
    PartVerdict pv;
    pv.side = side;
    pv.vertices = part;
    std::vector<bool> in(w.size(), false);
    for (int v : part)
        in[v] = true;
    for (const auto& a : w.arrows())
        if (in[a.src] && in[a.dst] && a.val >= 2) {
            pv.verdict = Verdict::Infinite;
            pv.rule = "multiple-arrows";
            pv.detail = "arrow " + w.vertex(a.src).id + " -> " + w.vertex(a.dst).id + " has valuation " +
                        std::to_string(a.val);
            return pv;
        }
    if (is_helical(w, part)) {
        pv.verdict = Verdict::Infinite;
        pv.rule = "coray-tube";
        pv.detail = "helical: every interior vertex lies on a path from an Ext-injective vertex";
        return pv;
    }
    try {
        LeftSubgraphType lt = left_subgraph_type(w, part);
        UndirectedGraph g = sectional_graph(w, lt.sigma);
        pv.detail = "subgraph type " + lt.type.describe();
        if (euclidean_inside(lt.type, g)) {
            pv.verdict = Verdict::Infinite;
            pv.rule = "euclidean-sectional";
        } else if (lt.type.dynkin() && !lt.type.boundary_open) {
            pv.verdict = Verdict::Finite;
            pv.rule = "dynkin-left-subgraph-type";
        }
        return pv;
    } catch (const Error& e) {
        pv.detail = e.what();
    }
    auto reach = reach_from_injectives(w);
    std::vector<int> seeds;
    for (int v : part)
        if (!reach[v])
            seeds.push_back(v);
    std::sort(seeds.begin(), seeds.end(), [&](int a, int b) { return w.vertex(a).id < w.vertex(b).id; });
    for (int s : seeds) {
        SectionalSubgraph sigma = full_sectional_subgraph(w, s, &in);
        if (!std::all_of(sigma.vertices.begin(), sigma.vertices.end(), [&](int v) { return !reach[v]; }))
            continue;
        DiagramType t = window_semantic_type(w, sigma);
        if (t.family == DiagramType::Family::AInfInf) {
            pv.verdict = Verdict::Infinite;
            pv.rule = "a-infinity-infinity";
            pv.detail = "subgraph type " + t.describe();
        } else if (euclidean_inside(t, sectional_graph(w, sigma))) {
            pv.verdict = Verdict::Infinite;
            pv.rule = "euclidean-sectional";
            pv.detail = "subgraph type " + t.describe();
        }
        break;
    }
    return pv;
}

std::vector<PartVerdict> judge_side(const TranslationQuiver& w, const std::vector<bool>& comp, const std::string& side)
{
    std::vector<bool> mask = left_stable_in_window(w);
    for (std::size_t v = 0; v < mask.size(); ++v)
        mask[v] = mask[v] && comp[v];
    std::vector<PartVerdict> out;
    for (const auto& part : masked_components(w, mask))
        out.push_back(judge(w, part, side));
    return out;
}

} // namespace

std::vector<ComponentVerdict> finiteness_verdict(const TranslationQuiver& w)
{
    std::vector<ComponentVerdict> out;
    const TranslationQuiver op = w.opposite();
    for (const auto& comp : component_indices(w)) {
        ComponentVerdict cv;
        cv.vertices = comp;
        std::vector<bool> in(w.size(), false);
        for (int v : comp)
            in[v] = true;
        cv.parts = judge_side(w, in, "left");
        for (auto& p : judge_side(op, in, "right"))
            cv.parts.push_back(std::move(p));
        bool closed = std::all_of(comp.begin(), comp.end(),
                                  [&](int v) { return pred_complete(w, v) && succ_complete(w, v); });
        bool all_finite = std::all_of(cv.parts.begin(), cv.parts.end(),
                                      [](const PartVerdict& p) { return p.verdict == Verdict::Finite; });
        if (closed) {
            cv.verdict = Verdict::Finite;
            cv.rule = !cv.parts.empty() && all_finite ? cv.parts.front().rule : "closed-component";
            out.push_back(std::move(cv));
            continue;
        }
        auto inf = std::find_if(cv.parts.begin(), cv.parts.end(),
                                [](const PartVerdict& p) { return p.verdict == Verdict::Infinite; });
        if (inf != cv.parts.end()) {
            cv.verdict = Verdict::Infinite;
            cv.rule = inf->rule;
        } else if (all_finite && !cv.parts.empty()) {
            cv.verdict = Verdict::Finite;
            cv.rule = cv.parts.front().rule;
        }
        out.push_back(std::move(cv));
    }
    return out;
}

std::string verdict_report(const std::vector<ComponentVerdict>& vs)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& cv = vs[i];
        os << "component " << i << " (" << cv.vertices.size() << " vertices): " << to_string(cv.verdict);
        if (!cv.rule.empty())
            os << " [" << cv.rule << ']';
        os << '\n';
        for (const auto& p : cv.parts) {
            os << "  " << p.side << " part of " << p.vertices.size() << ": " << to_string(p.verdict);
            if (!p.rule.empty())
                os << " [" << p.rule << ']';
            if (!p.detail.empty())
                os << ' ' << p.detail;
            os << '\n';
        }
    }
    return os.str();
}

} // namespace arqkit
