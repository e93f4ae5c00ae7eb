#include "arqkit/error.hpp"
#include "arqkit/knitting.hpp"
#include "arqkit/sectional.hpp"
#include "arqkit/tubes.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace arqkit;
using namespace arqkit::testing;
using Family = DiagramType::Family;

namespace {

DiagramType tag(Family f, int n)
{
    DiagramType t;
    t.family = f;
    t.n = n;
    return t;
}

std::vector<int> ids_to_path(const TranslationQuiver& w, std::initializer_list<const char*> ids)
{
    std::vector<int> p;
    for (const char* id : ids)
        p.push_back(w.index(id));
    return p;
}

/// Definition check: no i with tau(X_{i+2}) = X_i.
bool oracle_sectional(const TranslationQuiver& w, const std::vector<int>& p)
{
    for (std::size_t i = 0; i + 2 < p.size(); ++i)
        if (w.tau(p[i + 2]) == p[i])
            return false;
    return true;
}

std::string grid_id(int r, int c) { return "r" + std::to_string(r) + "c" + std::to_string(c); }

/// ZA_8 drawn on a grid: rows 0..7, columns 0..8, vertices with r + c even,
/// arrows (r,c) -> (r +- 1, c + 1), tau(r,c) = (r,c-2).
TranslationQuiver za8_grid()
{
    TranslationQuiver w;
    for (int c = 0; c <= 8; ++c)
        for (int r = 0; r <= 7; ++r)
            if ((r + c) % 2 == 0) {
                TqVertex v;
                v.id = grid_id(r, c);
                v.mesh_complete = c >= 1;
                w.add_vertex(v);
            }
    for (int c = 0; c < 8; ++c)
        for (int r = 0; r <= 7; ++r)
            if ((r + c) % 2 == 0) {
                if (r > 0)
                    w.add_arrow(grid_id(r, c), grid_id(r - 1, c + 1));
                if (r < 7)
                    w.add_arrow(grid_id(r, c), grid_id(r + 1, c + 1));
            }
    for (int c = 2; c <= 8; ++c)
        for (int r = 0; r <= 7; ++r)
            if ((r + c) % 2 == 0)
                w.set_tau(grid_id(r, c), grid_id(r, c - 2));
    return w;
}

std::vector<int> grid_path(const TranslationQuiver& w, const std::vector<std::pair<int, int>>& cells)
{
    std::vector<int> p;
    for (auto [r, c] : cells)
        p.push_back(w.index(grid_id(r, c)));
    return p;
}

} // namespace

TEST(SectionalPaths, Basics)
{
    TranslationQuiver w = load_ar("a3.arq");
    EXPECT_TRUE(is_sectional(w, ids_to_path(w, {"P3", "P2"})));
    EXPECT_TRUE(is_presectional(w, ids_to_path(w, {"P3", "P2"})));
    EXPECT_TRUE(is_sectional(w, ids_to_path(w, {"P3", "P2", "P1"})));
    auto mesh = ids_to_path(w, {"P3", "P2", "S2"});
    EXPECT_FALSE(is_sectional(w, mesh));
    EXPECT_FALSE(is_presectional(w, mesh));
    EXPECT_THROW(check_path(w, ids_to_path(w, {"P3", "P1"})), Error);
}

TEST(SectionalPaths, DoubleArrowMeshIsPresectional)
{
    TranslationQuiver w = parse_ar_quiver("arq 1\nvertex x \"x\" - - -\nvertex y \"y\" - - M\nvertex z \"z\" - - M\n"
                                          "arrow x y 2\narrow y z 2\ntau z x\n");
    auto p = ids_to_path(w, {"x", "y", "z"});
    EXPECT_FALSE(is_sectional(w, p));
    EXPECT_TRUE(is_presectional(w, p));
}

TEST(SectionalPaths, CorayInRankTwoTube)
{
    TranslationQuiver t = stable_tube(2, 6);
    auto p = ids_to_path(t, {"(0,5)", "(1,4)", "(0,3)", "(1,2)", "(0,1)"});
    EXPECT_TRUE(oracle_sectional(t, p));
    EXPECT_TRUE(is_sectional(t, p));
}

TEST(SectionalPaths, SectionalImpliesPresectionalOnRandomWalks)
{
    Rng rng(5);
    std::vector<TranslationQuiver> windows = {stable_tube(3, 7), load_ar("standard.arq"), load_ar("d5.arq"),
                                              coray_insertion(stable_tube(2, 8), 0, 2)};
    for (const auto& w : windows)
        for (int t = 0; t < 200; ++t) {
            std::vector<int> p = {rng.below(static_cast<int>(w.size()))};
            int len = rng.between(1, 6);
            for (int s = 0; s < len; ++s) {
                auto out = w.succs(p.back());
                if (out.empty())
                    break;
                p.push_back(out[rng.below(static_cast<int>(out.size()))].first);
            }
            EXPECT_EQ(is_sectional(w, p), oracle_sectional(w, p));
            if (is_sectional(w, p))
                EXPECT_TRUE(is_presectional(w, p));
        }
}

TEST(Orbits, ThreeVertexLinear)
{
    TranslationQuiver w = load_ar("a3.arq");
    OrbitGraph g = tau_orbits(w);
    ASSERT_EQ(g.orbits.size(), 3u);
    for (const auto& o : g.orbits)
        EXPECT_EQ(o.cls, OrbitClass::Finite);
    std::set<std::vector<std::string>> got;
    for (const auto& o : g.orbits)
        got.insert(w.ids(o.members));
    EXPECT_TRUE(got.count({"I1", "S2", "P3"}));
    EXPECT_TRUE(got.count({"I2", "P2"}));
    EXPECT_TRUE(got.count({"P1"}));
}

TEST(Orbits, TubeMouthPeriodic)
{
    TranslationQuiver t = stable_tube(3, 4);
    EXPECT_EQ(t.size(), 12u);
    OrbitGraph g = tau_orbits(t);
    ASSERT_EQ(g.orbits.size(), 4u);
    for (const auto& o : g.orbits) {
        EXPECT_EQ(o.cls, OrbitClass::Periodic);
        EXPECT_EQ(o.period, 3);
    }
}

TEST(Orbits, SingleProjective)
{
    TranslationQuiver w = parse_ar_quiver("arq 1\nvertex p \"P\" 1 - PIM\n");
    OrbitGraph g = tau_orbits(w);
    ASSERT_EQ(g.orbits.size(), 1u);
    EXPECT_EQ(g.orbits[0].cls, OrbitClass::Finite);
}

TEST(Orbits, WindowEdgeIsNeverFinite)
{
    TranslationQuiver t = zb_window(dynkin_tree(tag(Family::A, 2)), 0, 3);
    for (const auto& o : tau_orbits(t).orbits)
        EXPECT_NE(o.cls, OrbitClass::Finite);
}

TEST(FullSectionalSubgraph, IsolatedVertex)
{
    TranslationQuiver w = parse_ar_quiver("arq 1\nvertex v \"V\" - - -\n");
    SectionalSubgraph s = full_sectional_subgraph(w, 0);
    EXPECT_EQ(s.vertices, std::vector<int>{0});
    EXPECT_EQ(subgraph_type(w, s).name(), "A(1)");
}

TEST(FullSectionalSubgraph, TubeMouthGivesCoray)
{
    const int H = 6;
    TranslationQuiver t = stable_tube(3, H);
    SectionalSubgraph s = full_sectional_subgraph(t, t.index("(0,1)"));
    EXPECT_EQ(s.vertices.size(), static_cast<std::size_t>(H));
    EXPECT_TRUE(s.boundary_open());
    DiagramType d = subgraph_type(t, s);
    EXPECT_EQ(d.name(), "A(6)");
    EXPECT_TRUE(d.boundary_open);
    EXPECT_EQ(window_semantic_type(t, s).family, Family::AInf);
}

TEST(FullSectionalSubgraph, MaximalByOneStepExtension)
{
    for (const char* name : {"a3.arq", "standard.arq", "d5.arq"}) {
        TranslationQuiver w = load_ar(name);
        for (std::size_t seed = 0; seed < w.size(); ++seed) {
            SectionalSubgraph s = full_sectional_subgraph(w, static_cast<int>(seed));
            ASSERT_TRUE(is_sectional_subgraph(w, s.arrows)) << name;
            std::set<int> in(s.vertices.begin(), s.vertices.end());
            for (std::size_t a = 0; a < w.arrows().size(); ++a) {
                if (std::count(s.arrows.begin(), s.arrows.end(), static_cast<int>(a)))
                    continue;
                const auto& arr = w.arrows()[a];
                if (!in.count(arr.src) && !in.count(arr.dst))
                    continue;
                if (in.count(arr.src) && in.count(arr.dst))
                    continue;
                auto bigger = s.arrows;
                bigger.push_back(static_cast<int>(a));
                EXPECT_FALSE(is_sectional_subgraph(w, bigger))
                    << name << " seed " << w.vertex(static_cast<int>(seed)).id << " extends by "
                    << w.vertex(arr.src).id << "->" << w.vertex(arr.dst).id;
            }
        }
    }
}

TEST(SubgraphType, SameTypeFromEverySeedOfStableQuotients)
{
    for (auto t : {tag(Family::A, 5), tag(Family::D, 5), tag(Family::E, 6)}) {
        TranslationQuiver w = zb_quotient(dynkin_tree(t), 7);
        for (std::size_t seed = 0; seed < w.size(); ++seed) {
            SectionalSubgraph s = full_sectional_subgraph(w, static_cast<int>(seed));
            EXPECT_TRUE(subgraph_type(w, s).same_tag(t)) << t.name() << " seed " << seed;
        }
    }
}

TEST(LeftSubgraphType, Examples)
{
    TranslationQuiver za5 = zb_quotient(dynkin_tree(tag(Family::A, 5)), 5);
    LeftSubgraphType a = left_subgraph_type(za5);
    EXPECT_EQ(a.type.name(), "A(5)");
    EXPECT_FALSE(a.helical);

    LeftSubgraphType h = left_subgraph_type(coray_insertion(stable_tube(2, 8), 0, 1));
    EXPECT_TRUE(h.helical);
    EXPECT_EQ(h.type.family, Family::AInf);

    TranslationQuiver k = knit_hereditary(load_quiver("kronecker.qv"), KnitDirection::Left, 4);
    EXPECT_EQ(left_subgraph_type(k).type.name(), "Ã(1)");
}

TEST(LeftSubgraphType, WindowTooSmall)
{
    TranslationQuiver w = parse_ar_quiver("arq 1\nvertex a \"a\" - - L\n");
    EXPECT_THROW(left_subgraph_type(w), Error);
}

TEST(Helical, CorayTubesAreHelicalStableTubesAreNot)
{
    for (int r = 1; r <= 3; ++r) {
        TranslationQuiver t = stable_tube(r, 8);
        std::vector<int> all(t.size());
        for (std::size_t i = 0; i < t.size(); ++i)
            all[i] = static_cast<int>(i);
        EXPECT_FALSE(is_helical(t, all));
        TranslationQuiver c = coray_insertion(t, 0, 1);
        std::vector<int> call(c.size());
        for (std::size_t i = 0; i < c.size(); ++i)
            call[i] = static_cast<int>(i);
        EXPECT_TRUE(is_helical(c, call)) << r;
    }
}

TEST(Largeness, FiveTwoIllustration)
{
    TranslationQuiver w = za8_grid();
    auto z = grid_path(w, {{5, 1}, {6, 2}, {7, 3}, {6, 4}, {5, 5}, {4, 6}, {3, 7}, {2, 8}});
    auto y = grid_path(w, {{5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}, {0, 6}, {1, 7}, {2, 8}});
    int x = w.index(grid_id(4, 0)), target = w.index(grid_id(2, 8));
    EXPECT_TRUE(is_large_between(w, x, target, z, y));

    std::set<std::string> marked = {
        grid_id(4, 2), grid_id(3, 3), grid_id(2, 4), grid_id(1, 5), grid_id(0, 6), grid_id(1, 7), // Y1..Y6
        grid_id(2, 8), grid_id(2, 6),                                                              // Y, tau Y
        grid_id(3, 7), grid_id(3, 5), grid_id(4, 6), grid_id(4, 4), grid_id(5, 5), grid_id(5, 3), // Z6, Z5, Z4
        grid_id(6, 4)};                                                                            // Z3
    ASSERT_EQ(marked.size(), 15u);
    auto inner = inner_modules(w, x, target, z, y);
    std::set<std::string> got;
    for (int v : inner)
        got.insert(w.vertex(v).id);
    std::set<std::string> expect = marked;
    expect.insert(grid_id(5, 1));
    EXPECT_EQ(got, expect);
}

TEST(Largeness, DegenerateSectionalCase)
{
    TranslationQuiver w = za8_grid();
    auto z = grid_path(w, {{5, 1}, {4, 2}, {3, 3}, {2, 4}});
    int x = w.index(grid_id(4, 0)), target = w.index(grid_id(2, 4));
    EXPECT_TRUE(is_large_between(w, x, target, z, {}));
    auto inner = inner_modules(w, x, target, z, {});
    EXPECT_EQ(inner, std::vector<int>(z.begin() + 1, z.end()));
}

TEST(Largeness, HookInWrongPlace)
{
    TranslationQuiver w = za8_grid();
    auto z = grid_path(w, {{5, 1}, {6, 2}, {5, 3}, {4, 4}, {3, 5}, {2, 6}, {1, 7}, {2, 8}});
    auto y = grid_path(w, {{5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}, {0, 6}, {1, 7}, {2, 8}});
    EXPECT_FALSE(is_large_between(w, w.index(grid_id(4, 0)), w.index(grid_id(2, 8)), z, y));
}

TEST(TauShiftedPath, Examples)
{
    TranslationQuiver t = stable_tube(2, 6);
    int x = t.index("(1,1)"), tx = t.tau(x);
    auto same = find_tau_shifted_path(t, tx, x);
    ASSERT_TRUE(same);
    EXPECT_EQ(same->n, 0);
    EXPECT_EQ(same->path.size(), 3u);
    auto self = find_tau_shifted_path(t, x, x);
    ASSERT_TRUE(self);
    EXPECT_EQ(self->path.size(), 1u);

    auto up = find_tau_shifted_path(t, t.index("(0,1)"), t.index("(0,3)"));
    ASSERT_TRUE(up);
    EXPECT_EQ(up->path.size(), 3u);
    EXPECT_TRUE(up->sectional);
    EXPECT_EQ(up->path.front(), t.index("(0,1)"));

    TranslationQuiver two = load_ar("add_p1_i4.arq");
    EXPECT_FALSE(find_tau_shifted_path(two, 0, 1));
}

TEST(Verdict, Examples)
{
    auto za5 = finiteness_verdict(zb_quotient(dynkin_tree(tag(Family::A, 5)), 5));
    ASSERT_EQ(za5.size(), 1u);
    EXPECT_EQ(za5[0].verdict, Verdict::Finite);

    auto kr = finiteness_verdict(knit_hereditary(load_quiver("kronecker.qv"), KnitDirection::Right, 4));
    ASSERT_EQ(kr.size(), 1u);
    EXPECT_EQ(kr[0].verdict, Verdict::Infinite);
    EXPECT_EQ(kr[0].rule, "multiple-arrows");

    std::vector<IntVec> mouth = {{1, 0}, {0, 1}};
    auto ct = finiteness_verdict(coray_insertion(stable_tube(2, 8, mouth), 0, 1));
    ASSERT_EQ(ct.size(), 1u);
    EXPECT_EQ(ct[0].verdict, Verdict::Infinite);
    EXPECT_EQ(ct[0].rule, "coray-tube");
}

TEST(Verdict, Fixtures)
{
    for (const char* name : {"a3.arq", "twisted.arq", "standard.arq", "d5.arq", "fdelta.arq"})
        for (const auto& cv : finiteness_verdict(load_ar(name)))
            EXPECT_EQ(cv.verdict, Verdict::Finite) << name;
    auto h = finiteness_verdict(load_ar("helical.arq"));
    ASSERT_EQ(h.size(), 1u);
    EXPECT_EQ(h[0].rule, "coray-tube");
    EXPECT_NE(verdict_report(h).find("infinite [coray-tube]"), std::string::npos);
}

TEST(Verdict, EuclideanKnitIsInfinite)
{
    Quiver q = parse_quiver("vertices 1 2 3 4 5; arrows a:1->5 b:2->5 c:3->5 d:4->5");
    auto v = finiteness_verdict(knit_hereditary(q, KnitDirection::Left, 6));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].verdict, Verdict::Infinite);
    EXPECT_EQ(v[0].rule, "euclidean-sectional");
}

TEST(Verdict, StableTubeUndetermined)
{
    auto v = finiteness_verdict(stable_tube(3, 8));
    ASSERT_EQ(v.size(), 1u);
    EXPECT_EQ(v[0].verdict, Verdict::Undetermined);
}
