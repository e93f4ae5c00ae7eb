#include "arqkit/degrees.hpp"
#include "arqkit/error.hpp"
#include "arqkit/sectional.hpp"
#include "arqkit/tubes.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdio>

using namespace arqkit;
using namespace arqkit::testing;
using Kind = DegreeBound::Kind;

namespace {

std::pair<int, int> coords(const std::string& id)
{
    int i = 0, j = 0;
    std::sscanf(id.c_str(), "(%d,%d)", &i, &j);
    return {i, j};
}

int rank_of(const DegreeBound& b)
{
    switch (b.kind) {
    case Kind::Unknown:
        return 0;
    case Kind::AtLeast:
        return b.n;
    case Kind::ExactlyOne:
        return 1;
    case Kind::Infinite:
        return 1 << 20;
    }
    return 0;
}

} // namespace

TEST(LeftDegree, TubeUpArrowsAreInfinite)
{
    TranslationQuiver t = stable_tube(3, 8);
    auto bounds = all_left_degrees(t);
    ASSERT_EQ(bounds.size(), t.arrows().size());
    int up = 0;
    for (std::size_t a = 0; a < t.arrows().size(); ++a) {
        auto [si, sj] = coords(t.vertex(t.arrows()[a].src).id);
        auto [di, dj] = coords(t.vertex(t.arrows()[a].dst).id);
        if (si == di && dj == sj + 1) {
            ++up;
            EXPECT_TRUE(bounds[a].infinite()) << t.vertex(t.arrows()[a].src).id;
            EXPECT_EQ(bounds[a].rule, "R3-tube");
        }
    }
    EXPECT_EQ(up, 21);
}

TEST(LeftDegree, SingleMiddleTermMesh)
{
    TranslationQuiver w = parse_ar_quiver("arq 1\nvertex x \"X\" - 1 -\nvertex y \"Y\" - 2 M\nvertex z \"Z\" - 1 M\n"
                                          "arrow x y 1\narrow y z 1\ntau z x\n");
    DegreeBound b = infer_left_degree(w, w.index("y"), w.index("z"));
    EXPECT_EQ(b.kind, Kind::ExactlyOne);
    EXPECT_EQ(b.rule, "R1");
    EXPECT_EQ(b.to_string(), "exactly_one");

    // R1 needs the middle term longer than the end term
    w.vertex(w.index("y")).length = 1;
    EXPECT_NE(infer_left_degree(w, w.index("y"), w.index("z")).kind, Kind::ExactlyOne);
}

TEST(LeftDegree, LinearFixtureLowerBound)
{
    TranslationQuiver w = load_ar("a3.arq");
    DegreeBound b = infer_left_degree(w, w.index("P1"), w.index("I2"));
    ASSERT_EQ(b.kind, Kind::AtLeast) << b.certificate(w);
    EXPECT_EQ(b.rule, "R2");
    ASSERT_GE(b.witness.size(), 2u);
    EXPECT_EQ(b.witness.back(), w.index("I2"));
    EXPECT_TRUE(is_presectional(w, b.witness));
    EXPECT_EQ(b.n, static_cast<int>(b.witness.size()));
}

TEST(LeftDegree, ArrowMustExist)
{
    TranslationQuiver w = load_ar("a3.arq");
    EXPECT_THROW(infer_left_degree(w, w.index("P1"), w.index("P3")), Error);
}

TEST(LeftDegree, EnlargingTheWindowNeverWeakens)
{
    TranslationQuiver small = stable_tube(2, 6), big = stable_tube(2, 9);
    for (const auto& a : small.arrows()) {
        const std::string s = small.vertex(a.src).id, d = small.vertex(a.dst).id;
        DegreeBound x = infer_left_degree(small, a.src, a.dst);
        DegreeBound y = infer_left_degree(big, big.index(s), big.index(d));
        EXPECT_LE(rank_of(x), rank_of(y)) << s << "->" << d;
    }
}

TEST(RightDegree, DualOfLeft)
{
    TranslationQuiver t = stable_tube(2, 7);
    TranslationQuiver op = t.opposite();
    for (const auto& a : t.arrows()) {
        DegreeBound r = infer_right_degree(t, a.src, a.dst);
        DegreeBound l = infer_left_degree(op, a.dst, a.src);
        EXPECT_EQ(r.kind, l.kind);
        EXPECT_EQ(r.side, Side::Right);
    }
}

TEST(GlobalDegree, TubeArrows)
{
    TranslationQuiver t = stable_tube(2, 8);
    int up = t.index("(0,2)"), src = t.index("(0,1)");
    DegreeBound g = infer_global_left_degree(t, src, up);
    EXPECT_TRUE(g.infinite());
    EXPECT_TRUE(g.rule == "global-merge" || g.rule == "global-fold");
}

TEST(GlobalDegree, NeedsLeftStableEndpoints)
{
    TranslationQuiver w = load_ar("a3.arq");
    EXPECT_THROW(infer_global_left_degree(w, w.index("P3"), w.index("P2")), Error);
}

TEST(CycleConsistency, Examples)
{
    EXPECT_EQ(cycle_degree_consistency(coray_insertion(stable_tube(2, 8), 0, 1)).size(), 0u);
    EXPECT_EQ(cycle_degree_consistency(stable_tube(3, 8)).size(), 0u);
    auto bad = cycle_degree_consistency(load_ar("corrupted_cycle.arq"));
    ASSERT_EQ(bad.size(), 1u);
    EXPECT_EQ(bad[0].rule, "cycle-degree");
    EXPECT_TRUE(cycle_degree_consistency(load_ar("a3.arq")).empty());
}

TEST(Certificates, Text)
{
    TranslationQuiver t = stable_tube(2, 6);
    DegreeBound b = infer_left_degree(t, t.index("(0,1)"), t.index("(0,2)"));
    EXPECT_EQ(b.to_string(), "infinite");
    EXPECT_EQ(b.certificate(t).rfind("R3-tube", 0), 0u);
    EXPECT_EQ(DegreeBound{}.certificate(t), "none");
}
