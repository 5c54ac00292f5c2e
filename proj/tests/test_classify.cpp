#include <gtest/gtest.h>

#include <set>

#include "brute.hpp"
#include "generators.hpp"
#include "slinf/classify.hpp"

using namespace slinf;

namespace {

FiniteWeight W(std::initializer_list<std::int64_t> c) { return FiniteWeight(std::vector<std::int64_t>(c)); }

const OrderSpec right{OrderKind::RightInfinite};
const OrderSpec left{OrderKind::LeftInfinite};
const OrderSpec two{OrderKind::TwoSided};

ModuleDescriptor worked(FiniteWeight mu) { return ModuleDescriptor(VPDatum{right, {{}, {{W({0, -2}), mu}}, -4}, {}}); }

Block same(FiniteWeight w) { return {w, w}; }

/// Values of λ^(k) and μ^(k) built straight from the blocks.
std::pair<brute::Weight, brute::Weight> truncation(const VPDatum& d, std::size_t k) {
    brute::Weight lam, mu;
    for (std::size_t i = 1; i <= k; ++i) {
        const Block r = d.blocks.block(i);
        if (d.order.kind() == OrderKind::LeftInfinite) {
            lam.insert(lam.begin(), r.lam.coords.begin(), r.lam.coords.end());
            mu.insert(mu.begin(), r.mu.coords.begin(), r.mu.coords.end());
        } else {
            lam.insert(lam.end(), r.lam.coords.begin(), r.lam.coords.end());
            mu.insert(mu.end(), r.mu.coords.begin(), r.mu.coords.end());
        }
        if (d.order.kind() == OrderKind::TwoSided) {
            const Block l = d.left_blocks.block(i);
            lam.insert(lam.begin(), l.lam.coords.begin(), l.lam.coords.end());
            mu.insert(mu.begin(), l.mu.coords.begin(), l.mu.coords.end());
        }
    }
    return {lam, mu};
}

/// Least k0 ≤ K with some ν ∈ W·λ^(k0) such that (ν, μ^{k0+1}, ..., μ^{k0+n})
/// lies in W·λ^(k0+n) for n = 1..N, found by listing the candidates ν.
std::optional<std::size_t> highest_weight_by_enumeration(const VPDatum& d, std::size_t K, std::size_t N) {
    auto right_size = [&](std::size_t k) {
        std::size_t r = 0;
        for (std::size_t i = 1; i <= k; ++i) r += d.blocks.size_of(i);
        return r;
    };
    for (std::size_t k0 = 0; k0 <= K; ++k0) {
        const auto inner = truncation(d, k0);
        struct Stage {
            brute::Weight lam, mu;
            std::size_t off;
        };
        std::vector<Stage> stages;
        for (std::size_t n = 1; n <= N; ++n) {
            auto [lam, mu] = truncation(d, k0 + n);
            std::size_t off = 0;
            if (d.order.kind() == OrderKind::LeftInfinite) off = mu.size() - inner.second.size();
            if (d.order.kind() == OrderKind::TwoSided)
                off = (mu.size() - right_size(k0 + n)) - (inner.second.size() - right_size(k0));
            stages.push_back({lam, mu, off});
        }
        for (const auto& nu : brute::permutations(inner.first)) {
            bool ok = true;
            for (const auto& st : stages) {
                brute::Weight word = st.mu;
                std::copy(nu.begin(), nu.end(), word.begin() + static_cast<std::ptrdiff_t>(st.off));
                if (!brute::same_multiset(word, st.lam)) {
                    ok = false;
                    break;
                }
            }
            if (ok) return k0;
        }
    }
    return std::nullopt;
}

/// Boundedness read off raw values far out on both sides.
bool bounded_by_values(const ModuleDescriptor& d) {
    const WeightProfile lam = limit_weight(d);
    const std::int64_t M = 60;  // a multiple of every period the generators produce
    auto at = [&](std::int64_t x) { return lam.value_at_slot(x); };
    switch (lam.kind()) {
    case OrderKind::RightInfinite: return at(M) == at(2 * M);
    case OrderKind::LeftInfinite: return at(-M) == at(-2 * M);
    case OrderKind::TwoSided: {
        if (at(M) != at(2 * M) || at(-M) != at(-2 * M)) return false;
        std::set<std::int64_t> values;
        for (std::int64_t x = -2 * M; x <= 2 * M; ++x) values.insert(at(x));
        if (values.size() == 1) return true;
        return values.size() == 2 && *values.rbegin() - *values.begin() == 1 && at(-M) > at(M) &&
               [&] {
                   for (std::int64_t x = -2 * M; x < 2 * M; ++x)
                       if (at(x) < at(x + 1)) return false;
                   return true;
               }();
    }
    }
    return false;
}

}  // namespace

TEST(Classify, IsomorphismExamples) {
    const auto mu = worked(W({-1, -1}));
    VPDatum two_blocks = mu.vp();
    two_blocks.blocks = gen::unrolled(two_blocks.blocks, 2);
    two_blocks.blocks.prefix[0].mu = W({0, -2});
    two_blocks.blocks.prefix[1].mu = W({-6, -4});
    EXPECT_TRUE(is_isomorphic(mu, ModuleDescriptor(two_blocks)));
    const auto no = is_isomorphic(mu, worked(W({-2, 0})));
    EXPECT_FALSE(no);
    EXPECT_EQ(no.note, "mu differs in infinitely many places");
    EXPECT_TRUE(is_isomorphic(mu, mu));
    const ModuleDescriptor other(VPDatum{right, {{}, {same(W({0, -2}))}, -3}, {}});
    const auto diff = is_isomorphic(mu, other);
    EXPECT_FALSE(diff);
    EXPECT_EQ(diff.note, "different lambda");
    EXPECT_FALSE(is_isomorphic(mu, ModuleDescriptor(SymLimitSequence{{}, 1, 1})));
}

TEST(Classify, SymLimitIsomorphism) {
    const ModuleDescriptor a(SymLimitSequence{{1, 3}, 4, 1});
    EXPECT_TRUE(is_isomorphic(a, ModuleDescriptor(SymLimitSequence{{2}, 3, 1})));
    EXPECT_TRUE(is_isomorphic(a, ModuleDescriptor(SymLimitSequence{{}, 2, 1})));
    EXPECT_FALSE(is_isomorphic(a, ModuleDescriptor(SymLimitSequence{{}, 1, 1})));
    EXPECT_FALSE(is_isomorphic(a, ModuleDescriptor(SymLimitSequence{{}, 1, 2})));
}

TEST(Classify, AnnihilatorNonzeroExamples) {
    EXPECT_FALSE(annihilator_nonzero(worked(W({-1, -1}))));
    const ModuleDescriptor ones(VPDatum{right, {{same(W({1})), same(W({1}))}, {same(W({0}))}, 0}, {}});
    ASSERT_TRUE(validate(ones).ok());
    EXPECT_TRUE(annihilator_nonzero(ones));
    EXPECT_TRUE(annihilator_nonzero(ModuleDescriptor(SymLimitSequence{{}, 1, 1})));
}

TEST(Classify, HighestWeightExamples) {
    const auto mu = is_highest_weight(worked(W({-1, -1})));
    EXPECT_FALSE(mu);
    EXPECT_EQ(mu.counterexample, 1u);
    const auto eta = is_highest_weight(worked(W({-2, 0})));
    EXPECT_TRUE(eta);
    EXPECT_EQ(eta.k0, 0u);
    const auto top = is_highest_weight(worked(W({0, -2})));
    EXPECT_TRUE(top);
    EXPECT_EQ(top.k0, 0u);
    // a bad prefix moves k0
    VPDatum late = worked(W({0, -2})).vp();
    late.blocks = gen::unrolled(late.blocks, 3);
    late.blocks.prefix[1].mu = W({-5, -5});
    const auto l = is_highest_weight(ModuleDescriptor(late));
    EXPECT_TRUE(l);
    EXPECT_EQ(l.k0, 2u);
    EXPECT_THROW(is_highest_weight(ModuleDescriptor(SymLimitSequence{{}, 1, 1})), DomainError);
}

TEST(Classify, BoundedExamples) {
    EXPECT_FALSE(is_bounded(worked(W({-1, -1}))));
    const ModuleDescriptor r(VPDatum{right, {{same(W({3, 1}))}, {same(W({0}))}, 0}, {}});
    const auto b = is_bounded(r);
    EXPECT_TRUE(b);
    EXPECT_EQ(b.which, BoundedCase::LeftEnd);
    EXPECT_EQ(b.partition, (Partition{3, 1}));
    const ModuleDescriptor l(VPDatum{left, {{same(W({-1, -1}))}, {same(W({0}))}, 0}, {}});
    EXPECT_EQ(is_bounded(l).which, BoundedCase::RightEnd);
    EXPECT_EQ(is_bounded(l).partition, (Partition{1, 1}));
    const ModuleDescriptor eps(VPDatum{two, {{}, {same(W({0}))}, 0}, {{}, {same(W({1}))}, 0}});
    EXPECT_EQ(is_bounded(eps).which, BoundedCase::SemiInfinite);
    const ModuleDescriptor wide(VPDatum{two, {{}, {same(W({0}))}, 0}, {{}, {same(W({2}))}, 0}});
    EXPECT_FALSE(is_bounded(wide));
    const ModuleDescriptor bump(VPDatum{two, {{same(W({1}))}, {same(W({0}))}, 0}, {{}, {same(W({1}))}, 0}});
    EXPECT_EQ(is_bounded(bump).which, BoundedCase::SemiInfinite);
    const ModuleDescriptor step_in(VPDatum{two, {{same(W({1, 0}))}, {same(W({0}))}, 0}, {{}, {same(W({2}))}, 0}});
    EXPECT_FALSE(is_bounded(step_in));
    const ModuleDescriptor flat(VPDatum{two, {{}, {same(W({4}))}, 0}, {{}, {same(W({4}))}, 0}});
    EXPECT_EQ(is_bounded(flat).which, BoundedCase::Trivial);
    EXPECT_THROW(is_bounded(ModuleDescriptor(SymLimitSequence{{}, 1, 1})), DomainError);
}

TEST(Classify, TagExamples) {
    const auto sym = annihilator_tag(ModuleDescriptor(SymLimitSequence{{}, 1, 1}));
    EXPECT_FALSE(sym.zero);
    EXPECT_EQ(sym.which, TagCase::SymLimit);
    EXPECT_EQ(sym.to_string(), "I(1,0,(),())");
    EXPECT_EQ(sym.recipe, "default");
    EXPECT_TRUE(annihilator_tag(worked(W({-1, -1}))).zero);
    const ModuleDescriptor eps(VPDatum{two, {{}, {same(W({0}))}, 0}, {{}, {same(W({1}))}, 0}});
    const auto t = annihilator_tag(eps);
    EXPECT_EQ(t, AnnihilatorTag::quad(TagCase::TwoSided, 0, 1, {}, {}, "default"));
    const ModuleDescriptor r(VPDatum{right, {{same(W({3, 1}))}, {same(W({0}))}, 0}, {}});
    EXPECT_EQ(annihilator_tag(r), AnnihilatorTag::quad(TagCase::RightInfinite, 2, 0, {3, 1}, {}, "default"));
    const ModuleDescriptor l(VPDatum{left, {{same(W({-1, -3}))}, {same(W({0}))}, 0}, {}});
    EXPECT_EQ(annihilator_tag(l), AnnihilatorTag::quad(TagCase::LeftInfinite, 2, 0, {}, {3, 1}, "default"));
}

namespace {

struct FixedRecipe {
    static constexpr std::string_view name = "fixed";
    std::int64_t r(const WeightProfile&) const { return 7; }
    std::int64_t g(const WeightProfile&) const { return 0; }
    Partition x(const WeightProfile&) const { return {2}; }
    Partition y(const WeightProfile&) const { return {1}; }
};

}  // namespace

TEST(Classify, RecipeIsPluggable) {
    static_assert(TagRecipe<DefaultRecipe>);
    static_assert(TagRecipe<FixedRecipe>);
    const ModuleDescriptor r(VPDatum{right, {{same(W({3, 1}))}, {same(W({0}))}, 0}, {}});
    EXPECT_EQ(annihilator_tag(r, FixedRecipe{}), AnnihilatorTag::quad(TagCase::RightInfinite, 7, 0, {2}, {}, "fixed"));
    EXPECT_TRUE(annihilator_tag(worked(W({-1, -1})), FixedRecipe{}).zero);
}

TEST(ClassifyProperty, IsomorphicModulesShareTags) {
    gen::Rng rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const VPDatum d = gen::random_vp(rng);
        const VPDatum p = gen::perturb_mu_prefix(rng, d);
        ASSERT_TRUE(is_isomorphic(ModuleDescriptor(d), ModuleDescriptor(p)));
        EXPECT_EQ(annihilator_tag(ModuleDescriptor(d)), annihilator_tag(ModuleDescriptor(p)));
    }
}

TEST(ClassifyProperty, TagDependsOnlyOnLambda) {
    gen::Rng rng(52);
    for (int trial = 0; trial < 200; ++trial) {
        const ModuleDescriptor d(gen::random_vp(rng));
        const auto tag = annihilator_tag(d);
        EXPECT_TRUE(tag.shape_ok()) << tag.to_string();
        const WeightProfile lam = limit_weight(d);
        EXPECT_EQ(annihilator_tag(ModuleDescriptor(with_highest_mu(decompose_blocks(lam)))), tag);
        EXPECT_EQ(annihilator_tag(ModuleDescriptor(with_highest_mu(decompose_blocks(lam, DecompositionStrategy::fixed(1))))),
                  tag);
        EXPECT_EQ(annihilator_tag(ModuleDescriptor(gen::shifted(d.vp(), rng.uniform(-9, 9)))), tag);
        VPDatum relabeled = d.vp();
        relabeled.order = gen::random_order(rng, relabeled.order.kind());
        EXPECT_EQ(annihilator_tag(ModuleDescriptor(relabeled)), tag);
        EXPECT_EQ(tag.zero, !annihilator_nonzero(d));
        EXPECT_EQ(tag.zero, !image_is_finite(lam).finite);
    }
}

TEST(ClassifyProperty, HighestWeightMatchesEnumeration) {
    gen::Rng rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        const auto kind = gen::random_kind(rng);
        // keeps λ^(k0) short enough to list its orbit
        const gen::Limits small = kind == OrderKind::TwoSided ? gen::Limits{1, 1, 2, 2} : gen::Limits{2, 2, 2, 2};
        const VPDatum d = gen::random_vp(rng, kind, small);
        const auto hw = is_highest_weight(ModuleDescriptor(d));
        std::size_t start = d.blocks.prefix.size(), period = d.blocks.period.size();
        if (d.order.kind() == OrderKind::TwoSided) {
            start = std::max(start, d.left_blocks.prefix.size());
            period = std::lcm(period, d.left_blocks.period.size());
        }
        const auto found = highest_weight_by_enumeration(d, start + period, std::max(2 * period, start + period) + 1);
        EXPECT_EQ(hw.highest, found.has_value());
        if (found) {
            EXPECT_EQ(hw.k0, *found);
        }
    }
}

TEST(ClassifyProperty, BoundedMatchesValues) {
    gen::Rng rng(54);
    for (int trial = 0; trial < 300; ++trial) {
        const ModuleDescriptor d(gen::random_vp(rng));
        EXPECT_EQ(is_bounded(d).bounded, bounded_by_values(d)) << limit_weight(d).to_string();
    }
}

TEST(ClassifyProperty, VerdictsIgnoreFinitePrefixes) {
    gen::Rng rng(55);
    for (int trial = 0; trial < 200; ++trial) {
        const ModuleDescriptor d(gen::random_vp(rng));
        const ModuleDescriptor p(gen::perturb_mu_prefix(rng, d.vp()));
        EXPECT_EQ(is_highest_weight(d).highest, is_highest_weight(p).highest);
        EXPECT_EQ(is_bounded(d).bounded, is_bounded(p).bounded);
        EXPECT_EQ(is_bounded(d).which, is_bounded(p).which);
    }
}
