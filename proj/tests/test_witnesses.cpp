#include <gtest/gtest.h>

#include <functional>

#include "kpan/conditions.hpp"
#include "kpan/cycle_search.hpp"
#include "kpan/thresholds.hpp"
#include "kpan/witnesses.hpp"

using namespace kpan;

namespace {

int posa_failure(const KGraph& g) {
    const ConditionReport r = check_posa(g);
    if (r.satisfied) return 0;
    return std::get<PosaWitness>(*r.witness).r;
}

}  // namespace

TEST(Tightness, SpecExamples) {
    const KGraph a = tightness_witness({2, 2, 2});
    EXPECT_EQ(a.edge_count(), 9);
    int degree_one = 0;
    for (Vertex v = 0; v < a.order(); ++v) degree_one += a.degree(v) == 1;
    EXPECT_EQ(degree_one, 1);
    EXPECT_EQ(tightness_witness({5, 3, 2}).edge_count(), 27);
    const KGraph tiny = tightness_witness({1, 1, 1});
    EXPECT_EQ(tiny.edge_count(), 2);
    EXPECT_THROW(tightness_witness({1, 1}), std::invalid_argument);
}

TEST(Tightness, AllAdmissibleProfilesUpToOrder12) {
    std::vector<int> cur;
    int checked = 0;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            const PartProfile prof(cur);
            if (prof.k() < 2 || classify_case(prof) == CaseTag::Inadmissible || max_deletions(prof) < 0) return;
            const KGraph g = tightness_witness(prof);
            EXPECT_EQ(g.edge_count(), chorded_threshold(prof) - 1) << prof.to_string();
            EXPECT_EQ(find_hamiltonian_cycle(g).status, SearchStatus::Absent) << prof.to_string();
            ++checked;
            return;
        }
        for (int s = std::min(left, cap); s >= 1; --s) {
            cur.push_back(s);
            rec(left - s, s);
            cur.pop_back();
        }
    };
    for (int p = 3; p <= 12; ++p) rec(p, p);
    EXPECT_GT(checked, 50);
}

TEST(Remark1, SpecExamples) {
    const KGraph g = remark_family_1(5);
    EXPECT_EQ(g.profile().parts(), (std::vector<int>{5, 3, 2}));
    EXPECT_EQ(g.edge_count(), 28);
    EXPECT_EQ(posa_failure(g), 4);
    int deg4 = 0;
    for (Vertex v = 0; v < g.order(); ++v) deg4 += g.degree(v) == 4;
    EXPECT_EQ(deg4, 4);
    EXPECT_TRUE(find_hamiltonian_cycle(g).found());
    EXPECT_EQ(posa_failure(remark_family_1(6)), 5);
    EXPECT_EQ(remark_family_1(6).profile().parts(), (std::vector<int>{6, 4, 2}));
    EXPECT_THROW(remark_family_1(4), std::invalid_argument);
}

TEST(Remark2, SpecExamples) {
    const KGraph g = remark_family_2(3);
    EXPECT_EQ(g.profile().parts(), (std::vector<int>{3, 2, 2}));
    EXPECT_EQ(classify_case(g.profile()), CaseTag::OddHalf);
    EXPECT_TRUE(find_hamiltonian_cycle(g).found());
    EXPECT_EQ(posa_failure(remark_family_2(4)), 4);
    EXPECT_THROW(remark_family_2(2), std::invalid_argument);
}

TEST(Remark3, SpecExamples) {
    const KGraph g = remark_family_3(1);
    EXPECT_EQ(g.profile().parts(), (std::vector<int>{4, 4, 2}));
    EXPECT_EQ(complete_edge_count(g.profile()) - g.edge_count(), 4);
    EXPECT_TRUE(find_hamiltonian_cycle(g).found());
    EXPECT_EQ(posa_failure(g), 4);
    const KGraph g2 = remark_family_3(2);
    EXPECT_EQ(g2.profile().parts(), (std::vector<int>{8, 8, 2}));
    EXPECT_EQ(complete_edge_count(g2.profile()) - g2.edge_count(), 8);
    EXPECT_THROW(remark_family_3(0), std::invalid_argument);
}

TEST(Remark3, DeletionCountEqualsBudget) {
    for (int a = 1; a <= 6; ++a) {
        const PartProfile prof{4 * a, 4 * a, 2};
        EXPECT_EQ(max_deletions(prof), 4 * a);
        EXPECT_EQ(remark_family_3(a).edge_count(), chorded_threshold(prof));
    }
}

TEST(RemarkFamilies, DeclaredPropertiesHold) {
    const std::vector<std::pair<WitnessFamily, int>> grid{
        {WitnessFamily::Remark1, 5}, {WitnessFamily::Remark1, 6}, {WitnessFamily::Remark1, 7},
        {WitnessFamily::Remark2, 3}, {WitnessFamily::Remark2, 4}, {WitnessFamily::Remark2, 5},
        {WitnessFamily::Remark3, 1}, {WitnessFamily::Remark3, 2}};
    for (const auto& [family, a] : grid) {
        const WitnessSpec spec = witness_spec(family, a);
        const KGraph g = build_witness(spec);
        EXPECT_EQ(g.edge_count(), spec.expected.edge_count);
        EXPECT_GE(g.edge_count(), chorded_threshold(g.profile()));
        ASSERT_TRUE(spec.expected.posa_failure_r.has_value());
        EXPECT_EQ(posa_failure(g), *spec.expected.posa_failure_r) << to_string(family) << " a=" << a;
        EXPECT_LT(2 * *spec.expected.posa_failure_r, g.order());
        EXPECT_EQ(find_hamiltonian_cycle(g).found(), spec.expected.hamiltonian);
    }
}

TEST(WitnessSpec, ParameterKindChecked) {
    EXPECT_THROW(witness_spec(WitnessFamily::Tightness, 3), std::invalid_argument);
    EXPECT_THROW(witness_spec(WitnessFamily::Remark1, PartProfile{2, 2, 2}), std::invalid_argument);
    const WitnessSpec t = witness_spec(WitnessFamily::Tightness, PartProfile{2, 2, 2});
    EXPECT_EQ(t.expected.edge_count, 9);
    EXPECT_FALSE(t.expected.hamiltonian);
    EXPECT_EQ(build_witness(t), tightness_witness({2, 2, 2}));
}
