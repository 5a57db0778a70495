#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "revid/corpus.hpp"
#include "revid/error.hpp"
#include "revid/semantics.hpp"
#include "revid/text.hpp"
#include "support.hpp"

using namespace revid;

namespace {

std::vector<std::uint32_t> image(const Specification& s) { return {s.image().begin(), s.image().end()}; }

}  // namespace

TEST(GatePermutation, Not) {
    EXPECT_EQ(image(gatePermutation(Gate::notGate(wire(0)), 1)), (std::vector<std::uint32_t>{1, 0}));
}

TEST(GatePermutation, CnotMatchesEnumeration) {
    // CNOT(a, b) on 2 wires, a = bit 0: inputs 1 (a=1,b=0) and 3 swap.
    const Gate g({wire(0)}, wire(1));
    const std::vector<std::uint32_t> expected{0, 3, 2, 1};
    EXPECT_EQ(image(gatePermutation(g, 2)), expected);
    EXPECT_EQ(oracle::bruteForceImage(Circuit(2, {g})), expected);
}

TEST(GatePermutation, ToffoliSwapsOnlyTheAllOnesPair) {
    const Gate g({wire(0), wire(1)}, wire(2));
    const Specification s = gatePermutation(g, 3);
    EXPECT_EQ(s[3], 7u);
    EXPECT_EQ(s[7], 3u);
    for (std::uint32_t x : {0u, 1u, 2u, 4u, 5u, 6u}) EXPECT_EQ(s[x], x);
    EXPECT_EQ(image(s), oracle::bruteForceImage(Circuit(3, {g})));
}

TEST(GatePermutation, EveryGateIsANonIdentityInvolution) {
    for (std::size_t width = 1; width <= 5; ++width) {
        for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
            for (std::size_t t = 0; t < width; ++t) {
                if (mask >> t & 1u) continue;
                std::vector<Wire> controls;
                for (std::size_t w = 0; w < width; ++w) {
                    if (mask >> w & 1u) controls.push_back(wire(w));
                }
                const Specification s = gatePermutation(Gate(controls, wire(t)), width);
                EXPECT_FALSE(s.isIdentity());
                EXPECT_TRUE(Specification::compose(s, s).isIdentity());
            }
        }
    }
}

TEST(Simulate, EmptyIsIdentity) {
    EXPECT_TRUE(simulate(Circuit(4)).isIdentity());
    EXPECT_EQ(simulate(Circuit(4)).size(), 16u);
}

TEST(Simulate, TableSpecificationOrientation) {
    EXPECT_EQ(simulate(corpusCircuit("APP2.1")).toString(), "[12,7,2,5,0,15,14,11,6,3,10,1,8,9,4,13]");
    EXPECT_EQ(simulate(corpusCircuit("APP2.8")).toString(), "[12,15,5,8,3,2,1,10,7,14,13,6,11,0,9,4]");
}

TEST(Simulate, AgreesWithBruteForce) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const Circuit c = oracle::sampleCircuit(rng, 1 + trial % 4, trial % 30);
        EXPECT_EQ(image(simulate(c)), oracle::bruteForceImage(c));
    }
}

TEST(Simulate, ConcatComposesPointwise) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t w = 2 + trial % 4;
        const Circuit x = oracle::sampleCircuit(rng, w, trial % 11);
        const Circuit y = oracle::sampleCircuit(rng, w, trial % 7);
        const Specification sx = simulate(x), sy = simulate(y), sxy = simulate(concat(x, y));
        for (std::size_t i = 0; i < sxy.size(); ++i) EXPECT_EQ(sxy[i], sy[sx[i]]);
        EXPECT_EQ(simulate(inverse(x)), sx.inverse());
    }
}

TEST(Simulate, WidthCap) {
    EXPECT_THROW(simulate(Circuit(17)), WidthLimitExceeded);
    EXPECT_EQ(simulate(Circuit(17), {17}).size(), std::size_t{1} << 17);
}

TEST(PrefixTrace, Basics) {
    EXPECT_EQ(prefixTrace(Circuit(2)).specs.size(), 1u);
    const auto trace = prefixTrace(parseCircuit("NOT(a) NOT(a)"));
    ASSERT_EQ(trace.specs.size(), 3u);
    EXPECT_EQ(image(trace.specs[0]), (std::vector<std::uint32_t>{0, 1}));
    EXPECT_EQ(image(trace.specs[1]), (std::vector<std::uint32_t>{1, 0}));
    EXPECT_EQ(image(trace.specs[2]), (std::vector<std::uint32_t>{0, 1}));
}

TEST(PrefixTrace, App2_3BracketEndpointsMatch) {
    const Circuit c = corpusCircuit("APP2.3");
    const auto trace = prefixTrace(c);
    EXPECT_EQ(trace.specs[5], trace.specs[16]);
    EXPECT_EQ(trace.specs.back(), simulate(c));
    const auto brute = oracle::bruteForcePrefixes(c);
    for (std::size_t i = 0; i < brute.size(); ++i) EXPECT_EQ(image(trace.specs[i]), brute[i]);
}

TEST(IsIdentity, CorpusIdentities) {
    EXPECT_TRUE(isIdentity(corpusCircuit("fig2a.rev")));
    EXPECT_TRUE(isIdentity(corpusCircuit("fig2b.rev")));
    EXPECT_TRUE(isIdentity(corpusCircuit("APP1.2.b")));
    EXPECT_TRUE(isIdentity(corpusCircuit("APP1.13.b")));
    EXPECT_FALSE(isIdentity(parseCircuit("TOF(a, b, c)")));
}

TEST(Equivalent, Basics) {
    const Circuit c = corpusCircuit("APP1.4.a");
    EXPECT_TRUE(equivalent(c, c));
    EXPECT_FALSE(equivalent(parseCircuit("NOT(a)"), parseCircuit("")));
    const Circuit bugged = insertSegment(c, corpusCircuit("APP1.4.b"), *c.markers().insertion_point);
    EXPECT_TRUE(equivalent(bugged, c));
    EXPECT_THROW(equivalent(c, Circuit(3)), WidthMismatch);
}

TEST(Specification, StringRoundTripAndValidation) {
    const Specification s = simulate(corpusCircuit("APP2.5"));
    EXPECT_EQ(Specification::fromString(s.toString()), s);
    EXPECT_EQ(Specification::fromString(" [ 1, 0 ] "), gatePermutation(Gate::notGate(wire(0)), 1));
    EXPECT_THROW(Specification::fromString("[0,0]"), InvalidCircuit);
    EXPECT_THROW(Specification::fromString("[0,1,2]"), InvalidCircuit);
    EXPECT_THROW(Specification::fromString("0,1"), ParseError);
}
