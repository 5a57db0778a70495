#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "revid/error.hpp"
#include "revid/generators.hpp"
#include "revid/reducer.hpp"
#include "revid/semantics.hpp"
#include "revid/text.hpp"
#include "support.hpp"

using namespace revid;

TEST(GenRandomCircuit, EmptyAndDeterministic) {
    GeneratorConfig cfg;
    EXPECT_TRUE(genRandomCircuit(cfg).empty());
    cfg.gates = 30;
    cfg.seed = 99;
    EXPECT_EQ(genRandomCircuit(cfg), genRandomCircuit(cfg));
    cfg.seed = 100;
    const Circuit other = genRandomCircuit(cfg);
    cfg.seed = 99;
    EXPECT_NE(genRandomCircuit(cfg), other);
}

TEST(GenRandomCircuit, WellFormedWithoutAdjacentDuplicates) {
    GeneratorConfig cfg;
    cfg.width = 4;
    cfg.gates = 20;
    std::vector<std::size_t> control_hist(4);
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        cfg.seed = seed;
        const Circuit c = genRandomCircuit(cfg);
        ASSERT_EQ(c.size(), 20u);
        for (std::size_t i = 0; i < c.size(); ++i) {
            EXPECT_LE(c[i].controlCount(), 3u);
            EXPECT_LE(c[i].span(), 4u);
            if (i) EXPECT_NE(c[i], c[i - 1]);
            ++control_hist[c[i].controlCount()];
        }
    }
    // Control counts are drawn uniformly from 0..3.
    for (std::size_t n : control_hist) EXPECT_NEAR(static_cast<double>(n) / 20000.0, 0.25, 0.02);
}

TEST(GenRandomCircuit, RejectsBadConfig) {
    GeneratorConfig cfg;
    cfg.width = 1;
    EXPECT_THROW(genRandomCircuit(cfg), InvalidCircuit);
    cfg.width = 3;
    cfg.max_controls = 3;
    EXPECT_THROW(genRandomCircuit(cfg), InvalidCircuit);
}

TEST(SynthesizeInverse, Identity) {
    EXPECT_TRUE(synthesizeInverse(Specification::identity(4)).empty());
}

TEST(SynthesizeInverse, SelfInverseSwap) {
    const Specification sigma({0, 1, 3, 2});
    const Circuit c = synthesizeInverse(sigma);
    EXPECT_EQ(oracle::bruteForceImage(c), (std::vector<std::uint32_t>{0, 1, 3, 2}));
}

TEST(SynthesizeInverse, RandomPermutations) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t width = 1 + trial % 5;
        std::vector<std::uint32_t> image(std::size_t{1} << width);
        std::iota(image.begin(), image.end(), 0u);
        std::shuffle(image.begin(), image.end(), rng);
        const Specification sigma(image);
        const Circuit inv = synthesizeInverse(sigma);
        const auto got = oracle::bruteForceImage(inv);
        for (std::size_t x = 0; x < image.size(); ++x) EXPECT_EQ(got[image[x]], x);
    }
}

TEST(SynthesizeInverse, UndoesRandomCircuits) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const Circuit c = oracle::sampleCircuit(rng, 2 + trial % 4, trial % 20);
        const Circuit undo = synthesizeInverse(simulate(c));
        EXPECT_TRUE(oracle::isIdentityImage(oracle::bruteForceImage(concat(c, undo))));
    }
}

TEST(GenRandomNtri, Contract) {
    GeneratorConfig cfg;
    cfg.width = 4;
    cfg.min_length = 8;
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        cfg.seed = seed;
        const Circuit ntri = genRandomNtri(cfg);
        ASSERT_GE(ntri.size(), 8u);
        EXPECT_TRUE(oracle::isIdentityImage(oracle::bruteForceImage(ntri)));
        EXPECT_TRUE(isInteriorIrreducible(ntri));
        for (std::size_t i = 1; i < ntri.size(); ++i) EXPECT_NE(ntri[i], ntri[i - 1]);
        const ReductionResult r = eliminateNtris(ntri);
        EXPECT_TRUE(r.circuit.empty());
        ASSERT_EQ(r.report.removals.size(), 1u);
        EXPECT_EQ(r.report.removals[0].start_gap, 0u);
        EXPECT_EQ(r.report.removals[0].end_index, ntri.size());
    }
    cfg.seed = 3;
    EXPECT_EQ(genRandomNtri(cfg), genRandomNtri(cfg));
}

TEST(GenRandomNtri, InjectionPreservesSpecification) {
    GeneratorConfig cfg;
    cfg.width = 5;
    cfg.min_length = 6;
    cfg.gates = 15;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        cfg.seed = seed;
        const Circuit host = genRandomCircuit(cfg);
        const Circuit bugged = insertSegment(host, genRandomNtri(cfg), seed % (host.size() + 1));
        EXPECT_TRUE(equivalent(host, bugged));
    }
}

TEST(GenRandomNtri, ShortAndWideConfigs) {
    GeneratorConfig cfg;
    for (std::size_t width : {2u, 3u, 6u}) {
        cfg.width = width;
        cfg.max_controls = width - 1;
        cfg.min_length = 0;
        const Circuit ntri = genRandomNtri(cfg);
        EXPECT_GE(ntri.size(), 3u);
        EXPECT_TRUE(isInteriorIrreducible(ntri));
    }
}

TEST(GenRandomNtri, BudgetExhaustion) {
    GeneratorConfig cfg;
    cfg.width = 2;
    cfg.max_controls = 0;  // NOT gates reach 4 permutations, so no such identity is longer than 4
    cfg.min_length = 6;
    cfg.attempt_budget = 20;
    EXPECT_THROW(genRandomNtri(cfg), GeneratorExhausted);
}

TEST(InteriorIrreducible, Predicate) {
    EXPECT_TRUE(isInteriorIrreducible(parseCircuit("wires: a b c d\nCNOT(d, c) TOF(b, c, a) TOF(b, d, a) CNOT(d, c) TOF(b, c, a)")));
    EXPECT_FALSE(isInteriorIrreducible(parseCircuit("NOT(a) NOT(a) NOT(a) NOT(a)")));
    EXPECT_FALSE(isInteriorIrreducible(parseCircuit("NOT(a) CNOT(a, b)")));
}
