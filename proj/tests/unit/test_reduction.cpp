// Copyright 2026 The isingbench Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "isingbench/errors.hpp"
#include "isingbench/instances.hpp"
#include "isingbench/reduction.hpp"
#include "oracles.hpp"

namespace ib = isingbench;

namespace {

// Exactness by direct enumeration, independent of verify_gadget.
bool exact_by_enumeration(const ib::GadgetSpec &g) {
    for (int x = 0; x < 8; ++x) {
        const int a = (x & 1) ? -1 : 1, b = (x & 2) ? -1 : 1, c = (x & 4) ? -1 : 1;
        double best = 1e300;
        for (int aux : {-1, 1}) {
            const std::array<int, 4> s{a, b, c, aux};
            double q = 0.0;
            for (int r = 0; r < 4; ++r) q += g.linear[r] * s[r];
            for (std::size_t p = 0; p < 6; ++p) q += g.quadratic[p] * s[ib::kGadgetPairs[p][0]] * s[ib::kGadgetPairs[p][1]];
            best = std::min(best, q);
        }
        if (std::abs(best - (g.target_coeff * a * b * c + g.offset)) > 1e-12) return false;
    }
    return true;
}

TEST(Gadget, SynthesizedGadgetsAreExact) {
    for (double d : {-1.0, 1.0}) {
        const auto g = ib::synthesize_gadget(d);
        EXPECT_EQ(g.target_coeff, d);
        EXPECT_TRUE(ib::verify_gadget(g).exact);
        EXPECT_TRUE(exact_by_enumeration(g));
        EXPECT_LE(g.max_abs_coefficient(), 2.0);
    }
}

TEST(Gadget, NoExactGadgetBelowCoefficientTwo) {
    EXPECT_THROW(ib::synthesize_gadget(1.0, 1.0), ib::SynthesisError);
    try {
        ib::synthesize_gadget(-1.0, 1.5);
        FAIL() << "expected a synthesis failure";
    } catch (const ib::SynthesisError &e) {
        EXPECT_EQ(e.bound, 1.5);
    }
}

TEST(Gadget, ZeroFormIsNotExact) {
    ib::GadgetSpec zero;
    for (double d : {-1.0, 1.0}) {
        zero.target_coeff = d;
        const auto check = ib::verify_gadget(zero);
        EXPECT_FALSE(check.exact);
        EXPECT_TRUE(check.witness.has_value());
    }
}

TEST(Gadget, PerturbedCoefficientIsCaught) {
    const auto g = ib::synthesize_gadget(1.0);
    for (std::size_t p = 0; p < 6; ++p) {
        auto bad = g;
        bad.quadratic[p] += 1.0;
        const auto check = ib::verify_gadget(bad);
        EXPECT_FALSE(check.exact);
        ASSERT_TRUE(check.witness);
        EXPECT_FALSE(exact_by_enumeration(bad));
    }
    auto shifted = g;
    shifted.offset += 0.5;
    EXPECT_FALSE(ib::verify_gadget(shifted).exact);
}

TEST(Gadget, ScalingPreservesExactness) {
    const auto g = ib::synthesize_gadget(-1.0).scaled(2.5);
    EXPECT_EQ(g.target_coeff, -2.5);
    EXPECT_TRUE(exact_by_enumeration(g));
}

TEST(Gadget, RoleCReversalFlipsTarget) {
    const auto plus = ib::synthesize_gadget(1.0);
    const auto minus = plus.reversed(ib::kRoleC);
    EXPECT_EQ(minus.target_coeff, -1.0);
    EXPECT_TRUE(exact_by_enumeration(minus));
    EXPECT_EQ(minus.max_abs_coefficient(), plus.max_abs_coefficient());
    EXPECT_EQ(plus.reversed(ib::kRoleAux).target_coeff, 1.0);
    EXPECT_TRUE(exact_by_enumeration(plus.reversed(ib::kRoleAux)));
}

TEST(Gadget, BetterSetDerivesFromPlusGadget) {
    const auto base = ib::baseline_gadget_set();
    const auto better = ib::better_gadget_set(base);
    EXPECT_EQ(better.at(1), base.at(1));
    EXPECT_EQ(better.at(-1), base.at(1).reversed(ib::kRoleC));
    EXPECT_TRUE(exact_by_enumeration(better.at(-1)));
    EXPECT_THROW(ib::better_gadget_set({{-1, base.at(-1)}}), std::invalid_argument);
}

TEST(Gadget, LibraryFileRoundTrip) {
    const auto set = ib::better_gadget_set(ib::baseline_gadget_set());
    EXPECT_EQ(ib::gadget_set_from_text(ib::gadget_set_to_text(set)), set);
}

TEST(Gadget, LibraryFileRejectsInexactGadget) {
    const std::string text = R"({"format_version": 1, "kind": "gadget_set", "gadgets": [
        {"target": 1, "offset": 0, "linear": [[3, 1.0]], "quadratic": [[0, 3, 1.0]]}]})";
    try {
        ib::gadget_set_from_text(text);
        FAIL() << "expected a parse error";
    } catch (const ib::ParseError &e) {
        EXPECT_EQ(e.field, "gadgets[0]");
    }
    const std::string bad_role = R"({"format_version": 1, "kind": "gadget_set", "gadgets": [
        {"target": 1, "offset": 0, "linear": [[4, 1.0]], "quadratic": []}]})";
    EXPECT_THROW(ib::gadget_set_from_text(bad_role), ib::ParseError);
}

TEST(Reduce, NoCubicTermsIsIdentity) {
    std::mt19937_64 rng(1);
    const auto p = oracle::random_problem(rng, 8, 10, 0, true, 1.0);
    const auto r = ib::reduce_cubic(p, ib::baseline_gadget_set());
    EXPECT_EQ(r.problem, p);
    EXPECT_TRUE(r.map.aux.empty());
}

TEST(Reduce, AuxiliaryIndicesAreFreshAndRanked) {
    std::mt19937_64 rng(2);
    const auto p = oracle::random_problem(rng, 10, 10, 6, true);
    const auto r = ib::reduce_cubic(p, ib::baseline_gadget_set());
    EXPECT_FALSE(r.problem.has_cubic());
    EXPECT_EQ(r.problem.num_spins(), p.num_spins() + p.cubic().size());
    ASSERT_EQ(r.map.aux.size(), p.cubic().size());
    for (std::size_t k = 0; k < r.map.aux.size(); ++k) {
        EXPECT_EQ(r.map.aux[k].aux, p.num_spins() + k);
        EXPECT_EQ(r.map.aux[k].term, p.cubic()[k]);
    }
}

TEST(Reduce, MissingGadget) {
    ib::IsingProblem p(3, {}, {}, {{0, 1, 2, -2.0}});
    const auto base = ib::baseline_gadget_set();
    EXPECT_THROW(ib::reduce_cubic(p, {{1, base.at(1)}}), ib::MissingGadgetError);
}

TEST(Reduce, SoundnessAgainstBruteForce) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 4 + trial % 7;
        const auto p = oracle::random_problem(rng, n, n, 1 + trial % 4, trial % 3 != 0, 0.25);
        for (const auto &gadgets : {ib::baseline_gadget_set(), ib::better_gadget_set(ib::baseline_gadget_set())}) {
            const auto r = ib::reduce_cubic(p, gadgets);
            // min over aux of the reduced energy equals the original energy, for every config.
            const auto reduced = oracle::all_energies(r.problem);
            const std::size_t m = r.problem.num_spins();
            std::vector<double> min_over_aux(std::size_t{1} << n, 1e300);
            for (std::uint64_t x = 0; x < reduced.size(); ++x) {
                auto &slot = min_over_aux[x & ((std::uint64_t{1} << n) - 1)];
                slot = std::min(slot, reduced[x]);
            }
            const auto original = oracle::all_energies(p);
            for (std::uint64_t x = 0; x < original.size(); ++x) {
                ASSERT_NEAR(min_over_aux[x], original[x], 1e-9) << "trial " << trial;
            }
            EXPECT_EQ(m, n + p.cubic().size());
        }
    }
}

TEST(Reduce, LiftConfigAttainsOriginalEnergy) {
    std::mt19937_64 rng(4);
    const auto p = oracle::random_problem(rng, 10, 12, 4, false, -0.5);
    const auto r = ib::reduce_cubic(p, ib::baseline_gadget_set());
    for (int k = 0; k < 30; ++k) {
        const auto c = oracle::random_config(rng, 10);
        const auto lifted = ib::lift_config(r, c);
        EXPECT_NEAR(ib::energy(r.problem, lifted), ib::energy(p, c), 1e-9);
        EXPECT_EQ(r.map.project(lifted), c);
    }
}

TEST(Reduce, SlackCountOnHeavyHexInstance) {
    const auto inst = ib::gen_hoso_instance(ib::gen_heavy_hex("eagle127"), 0);
    const auto r = ib::reduce_cubic(inst.problem, ib::baseline_gadget_set());
    EXPECT_EQ(r.problem.num_spins(), 127 + inst.problem.cubic().size());
}

TEST(Gauge, EmptyFlipSetIsIdentity) {
    std::mt19937_64 rng(5);
    const auto p = oracle::random_problem(rng, 8, 10, 3, false, 0.5);
    EXPECT_EQ(ib::apply_gauge(p, {}), p);
}

TEST(Gauge, SingleEdge) {
    ib::IsingProblem p(2, {}, {{0, 1, 1.0}});
    const ib::GaugeTransform g{{1}, 1.0};
    const auto q = ib::apply_gauge(p, g);
    ASSERT_EQ(q.quadratic().size(), 1u);
    EXPECT_EQ(q.quadratic()[0].coeff, -1.0);
    const auto gs = ib::SpinConfig::from_string("+-");
    EXPECT_EQ(ib::energy(q, ib::apply_gauge(gs, g)), ib::energy(p, gs));
    EXPECT_EQ(ib::apply_gauge(gs, g).to_string(), "++");
}

TEST(Gauge, CoefficientSignRules) {
    ib::IsingProblem p(4, {{0, 1.0}, {1, 1.0}}, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}},
                       {{0, 1, 2, 1.0}, {1, 2, 3, 1.0}});
    const auto q = ib::apply_gauge(p, {{0, 1}, 3.0});
    EXPECT_EQ(q.linear()[0].coeff, -3.0);
    EXPECT_EQ(q.linear()[1].coeff, -3.0);
    EXPECT_EQ(q.quadratic()[0].coeff, 3.0);   // both endpoints flipped
    EXPECT_EQ(q.quadratic()[1].coeff, -3.0);  // one endpoint flipped
    EXPECT_EQ(q.quadratic()[2].coeff, 3.0);
    EXPECT_EQ(q.cubic()[0].coeff, 3.0);   // two members flipped
    EXPECT_EQ(q.cubic()[1].coeff, -3.0);  // one member flipped
}

TEST(Gauge, SpectrumInvariantAndInvolution) {
    std::mt19937_64 rng(6);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 5; ++trial) {
        const auto p = oracle::random_problem(rng, 12, 18, 6, trial % 2 == 0, 0.75);
        auto ref = oracle::all_energies(p);
        std::sort(ref.begin(), ref.end());
        for (int k = 0; k < 4; ++k) {
            ib::GaugeTransform g;
            for (ib::SpinIndex i = 0; i < 12; ++i) {
                if (coin(rng)) g.flip_set.insert(i);
            }
            const auto q = ib::apply_gauge(p, g);
            auto e = oracle::all_energies(q);
            std::sort(e.begin(), e.end());
            ASSERT_EQ(e, ref);
            EXPECT_EQ(ib::apply_gauge(q, g), p);
        }
    }
}

TEST(Gauge, IndexOutOfRange) {
    ib::IsingProblem p(2, {}, {{0, 1, 1.0}});
    EXPECT_THROW(ib::apply_gauge(p, {{2}, 1.0}), ib::IndexError);
}

TEST(Compression, PathExample) {
    // Making 0-1 negative flips node 1; keeping 1-2 negative then flips node 2.
    ib::IsingProblem p(3, {}, {{0, 1, 0.9}, {1, 2, -0.7}});
    const auto c = ib::compress_couplings(p);
    EXPECT_EQ(c.gauge.flip_set, (std::set<ib::SpinIndex>{1, 2}));
    EXPECT_EQ(c.gauge.scale, 2.0);
    const auto unscaled = ib::apply_gauge(p, {c.gauge.flip_set, 1.0});
    EXPECT_DOUBLE_EQ(unscaled.quadratic()[0].coeff, -0.9);
    EXPECT_DOUBLE_EQ(unscaled.quadratic()[1].coeff, -0.7);
    EXPECT_DOUBLE_EQ(c.problem.quadratic()[0].coeff, -1.8);
    EXPECT_DOUBLE_EQ(c.problem.quadratic()[1].coeff, -1.4);
}

TEST(Compression, WeakCouplingsNeedNoFlips) {
    ib::IsingProblem p(3, {}, {{0, 1, 0.5}, {1, 2, -0.3}, {0, 2, 0.2}});
    const auto c = ib::compress_couplings(p);
    EXPECT_TRUE(c.gauge.flip_set.empty());
}

TEST(Compression, FrustratedTriangleNamesCycle) {
    ib::IsingProblem p(4, {}, {{0, 1, 0.9}, {1, 2, 0.9}, {0, 2, 0.9}, {2, 3, 0.1}});
    try {
        ib::compress_couplings(p);
        FAIL() << "expected a compression failure";
    } catch (const ib::CompressionError &e) {
        auto cycle = e.cycle;
        std::sort(cycle.begin(), cycle.end());
        EXPECT_EQ(cycle, (std::vector<std::uint32_t>{0, 1, 2}));
        EXPECT_NE(std::string(e.what()).find("frustrated strong cycle"), std::string::npos);
    }
}

TEST(Compression, ConsistentStrongCycleIsAccepted) {
    // A 4-cycle with an even number of positive couplings is unfrustrated.
    ib::IsingProblem p(4, {}, {{0, 1, 0.9}, {1, 2, 0.9}, {2, 3, -0.8}, {0, 3, -0.6}});
    const auto c = ib::compress_couplings(p);
    for (const auto &t : c.problem.quadratic()) EXPECT_LT(t.coeff, 0.0);
}

TEST(Compression, RandomPlanarPostconditions) {
    const auto topo = ib::gen_heavy_hex("3x3");
    int accepted = 0;
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const auto p = ib::gen_planar_spin_glass(topo, seed);
        ib::Compression c;
        try {
            c = ib::compress_couplings(p);
        } catch (const ib::CompressionError &) {
            continue;
        }
        ++accepted;
        const auto unscaled = ib::apply_gauge(p, {c.gauge.flip_set, 1.0});
        std::vector<double> before, after;
        for (const auto &t : unscaled.quadratic()) {
            EXPECT_GE(t.coeff, -1.0);
            EXPECT_LE(t.coeff, 0.5);
            after.push_back(std::abs(t.coeff));
        }
        for (const auto &t : p.quadratic()) before.push_back(std::abs(t.coeff));
        EXPECT_EQ(before, after);
        for (const auto &t : c.problem.quadratic()) {
            EXPECT_GE(t.coeff, -2.0);
            EXPECT_LE(t.coeff, 1.0);
        }
    }
    EXPECT_GT(accepted, 0);
}

TEST(Compression, RejectsInvalidInput) {
    EXPECT_THROW(ib::compress_couplings(ib::IsingProblem(2, {{0, 1.0}}, {{0, 1, 0.2}})), std::invalid_argument);
    EXPECT_THROW(ib::compress_couplings(ib::IsingProblem(2, {}, {{0, 1, 1.5}})), std::invalid_argument);
}

TEST(EnergyScale, SingleCoupler) {
    EXPECT_EQ(ib::energy_scale(ib::IsingProblem(2, {}, {{0, 1, -1.0}})), 2.0);
    EXPECT_EQ(ib::energy_scale(ib::IsingProblem(2, {}, {{0, 1, 1.0}})), 1.0);
    EXPECT_EQ(ib::energy_scale(ib::IsingProblem(2, {{0, 0.5}}, {{0, 1, -0.25}})), 2.0);
}

TEST(EnergyScale, UndefinedAndCubic) {
    EXPECT_THROW(ib::energy_scale(ib::IsingProblem(2, {}, {})), ib::UndefinedError);
    EXPECT_THROW(ib::energy_scale(ib::IsingProblem(3, {}, {}, {{0, 1, 2, 1.0}})), std::invalid_argument);
}

TEST(EnergyScale, InvariantUnderRelabeling) {
    ib::IsingProblem a(3, {}, {{0, 1, 0.7}, {1, 2, -0.9}});
    ib::IsingProblem b(3, {}, {{2, 1, 0.7}, {1, 0, -0.9}});
    EXPECT_EQ(ib::energy_scale(a), ib::energy_scale(b));
}

}  // namespace
