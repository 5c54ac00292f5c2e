#pragma once

#include <concepts>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/modmodel.hpp"
#include "slinf/weights.hpp"

namespace slinf {

struct IsomorphismResult {
    bool isomorphic = false;
    std::string note;
    explicit operator bool() const noexcept { return isomorphic; }
};

/// Two simple modules with the same λ are isomorphic iff their μ agree in all
/// but finitely many positions. Different λ are reported as non-isomorphic
/// with a note; that case is not decided here.
inline IsomorphismResult is_isomorphic(const ModuleDescriptor& a, const ModuleDescriptor& b) {
    if (a.is_symlimit() != b.is_symlimit()) return {false, "different descriptor kinds"};
    if (a.is_symlimit()) {
        const auto &x = a.symlimit(), &y = b.symlimit();
        if (x.tail_step != y.tail_step) return {false, "sequences differ in infinitely many places"};
        // both tails are arithmetic with the same step; compare far out
        const std::size_t n = std::max(x.prefix.size(), y.prefix.size()) + 1;
        return x.at(n) == y.at(n) ? IsomorphismResult{true, ""}
                                  : IsomorphismResult{false, "sequences differ in infinitely many places"};
    }
    if (a.vp().order != b.vp().order) return {false, "different order"};
    if (limit_weight(a) != limit_weight(b)) return {false, "different lambda"};
    return tail_equivalent(limit_mu(a), limit_mu(b)) ? IsomorphismResult{true, ""}
                                                      : IsomorphismResult{false, "mu differs in infinitely many places"};
}

/// Ann M ≠ 0 iff λ takes finitely many values; always true for S_A^∞V.
inline bool annihilator_nonzero(const ModuleDescriptor& d) {
    if (d.is_symlimit()) return true;
    return image_is_finite(limit_weight(d)).finite;
}

struct HighestWeightResult {
    bool highest = false;
    std::size_t k0 = 0;                            ///< least k_0 when highest
    std::optional<std::size_t> counterexample;      ///< a periodic step where μ^k ∉ W·λ^k
    explicit operator bool() const noexcept { return highest; }
};

namespace detail {

/// μ-step k is in the Weyl orbit of λ-step k (both sides for two-sided orders).
inline bool step_in_orbit(const VPDatum& vp, std::size_t k) {
    auto mu = vp.blocks.block(k).mu, lam = vp.blocks.block(k).lam;
    if (vp.order.kind() == OrderKind::TwoSided) {
        mu = concat(vp.left_blocks.block(k).mu, mu);
        lam = concat(vp.left_blocks.block(k).lam, lam);
    }
    return orbit_equivalent(mu, lam);
}

inline std::pair<std::size_t, std::size_t> step_periodicity(const VPDatum& vp) {
    std::size_t start = vp.blocks.prefix.size(), period = vp.blocks.period.size();
    if (vp.order.kind() == OrderKind::TwoSided) {
        start = std::max(start, vp.left_blocks.prefix.size());
        period = std::lcm(period, vp.left_blocks.period.size());
    }
    return {start, period};
}

}  // namespace detail

/// M is a highest weight module for some Borel iff μ^k ∈ W·λ^k for all but
/// finitely many k.
///
/// Taking ν^(k_0) = λ^(k_0) gives one direction. Conversely, if
/// ν^(k_0) ∈ W·λ^(k_0) and (ν^(k_0), μ^{k_0+1}, ..., μ^{k_0+n}) ∈ W·λ^(k_0+n)
/// for every n, comparing multisets for consecutive n shows that each μ^k
/// with k > k_0 has the multiset of λ^k. Orbit membership of a step is
/// unchanged by the per-period offset, so the steps after the prefixes repeat
/// with the common period and one period decides the tail.
inline HighestWeightResult is_highest_weight(const ModuleDescriptor& d) {
    if (d.is_symlimit()) throw DomainError("unsupported variant: highest weight analysis needs a parabolic datum");
    const auto& vp = d.vp();
    const auto [start, period] = detail::step_periodicity(vp);
    for (std::size_t k = start + 1; k <= start + period; ++k)
        if (!detail::step_in_orbit(vp, k)) return {false, 0, k};
    std::size_t k0 = 0;
    for (std::size_t k = 1; k <= start; ++k)
        if (!detail::step_in_orbit(vp, k)) k0 = k;
    return {true, k0, std::nullopt};
}

enum class BoundedCase { None, LeftEnd, RightEnd, SemiInfinite, Trivial };

inline std::string to_string(BoundedCase c) {
    switch (c) {
    case BoundedCase::None: return "none";
    case BoundedCase::LeftEnd: return "1";
    case BoundedCase::RightEnd: return "2";
    case BoundedCase::SemiInfinite: return "3";
    case BoundedCase::Trivial: return "trivial";
    }
    return "?";
}

struct BoundedResult {
    bool bounded = false;
    BoundedCase which = BoundedCase::None;
    Partition partition;  ///< the Young diagram of cases 1 and 2
    explicit operator bool() const noexcept { return bounded; }
};

/// Boundedness of a parabolic datum, read off the shift-normalized λ:
/// (1) right-infinite order, a partition followed by 0^∞;
/// (2) left-infinite order, 0^∞ followed by a negated partition;
/// (3) two-sided order, 1^∞ followed by 0^∞.
/// A constant λ on a two-sided order gives the one-dimensional module, which
/// is reported as Trivial.
inline BoundedResult is_bounded(const ModuleDescriptor& d) {
    if (d.is_symlimit()) throw DomainError("boundedness of a symmetric-power limit is not decided");
    const WeightProfile lam = limit_weight(d);
    if (!image_is_finite(lam).finite) return {};
    switch (lam.kind()) {
    case OrderKind::RightInfinite: return {true, BoundedCase::LeftEnd, discrepancy_partition(lam)};
    case OrderKind::LeftInfinite: return {true, BoundedCase::RightEnd, discrepancy_partition(lam)};
    case OrderKind::TwoSided: {
        const WeightProfile n = normalize_shift(lam);
        if (n.is_bi_infinite()) return {true, BoundedCase::Trivial, {}};
        if (n.body().empty() && *n.head() == QuasiPeriodic::constant(1) && *n.tail() == QuasiPeriodic::constant(0))
            return {true, BoundedCase::SemiInfinite, {}};
        return {};
    }
    }
    return {};
}

enum class TagCase { LeftInfinite, RightInfinite, TwoSided, SymLimit };

inline std::string to_string(TagCase c) {
    switch (c) {
    case TagCase::LeftInfinite: return "left-infinite";
    case TagCase::RightInfinite: return "right-infinite";
    case TagCase::TwoSided: return "two-sided";
    case TagCase::SymLimit: return "symlimit";
    }
    return "?";
}

inline TagCase tag_case_from_string(std::string_view s) {
    if (s == "left-infinite") return TagCase::LeftInfinite;
    if (s == "right-infinite") return TagCase::RightInfinite;
    if (s == "two-sided") return TagCase::TwoSided;
    if (s == "symlimit") return TagCase::SymLimit;
    throw DomainError("unknown tag case '" + std::string(s) + "'");
}

/// The zero ideal, or the primitive ideal I(r, g, X, Y).
struct AnnihilatorTag {
    bool zero = true;
    TagCase which = TagCase::SymLimit;
    std::int64_t r = 0;
    std::int64_t g = 0;
    Partition x;
    Partition y;
    std::string recipe;

    static AnnihilatorTag zero_ideal() { return {}; }
    static AnnihilatorTag quad(TagCase c, std::int64_t r, std::int64_t g, Partition x, Partition y,
                               std::string recipe) {
        return {false, c, r, g, std::move(x), std::move(y), std::move(recipe)};
    }

    /// Vanishing pattern of each case.
    bool shape_ok() const {
        if (zero) return true;
        if (r < 0 || g < 0) return false;
        switch (which) {
        case TagCase::LeftInfinite: return g == 0 && x.empty();
        case TagCase::RightInfinite: return g == 0 && y.empty();
        case TagCase::TwoSided: return x.empty() && y.empty();
        case TagCase::SymLimit: return r == 1 && g == 0 && x.empty() && y.empty();
        }
        return false;
    }

    std::string to_string() const {
        if (zero) return "zero";
        return "I(" + std::to_string(r) + "," + std::to_string(g) + "," + x.to_string() + "," + y.to_string() + ")";
    }

    friend bool operator==(const AnnihilatorTag& a, const AnnihilatorTag& b) {
        if (a.zero || b.zero) return a.zero == b.zero;
        return a.which == b.which && a.r == b.r && a.g == b.g && a.x == b.x && a.y == b.y && a.recipe == b.recipe;
    }
};

/// Extracts (r, g, X, Y) from a dominant finite-image λ.
template <class R>
concept TagRecipe = requires(const R& recipe, const WeightProfile& lam) {
    { R::name } -> std::convertible_to<std::string_view>;
    { recipe.r(lam) } -> std::convertible_to<std::int64_t>;
    { recipe.g(lam) } -> std::convertible_to<std::int64_t>;
    { recipe.x(lam) } -> std::convertible_to<Partition>;
    { recipe.y(lam) } -> std::convertible_to<Partition>;
};

/// r: number of values taken at finitely many positions; g: value of the
/// left end minus value of the right end; X, Y: the finite discrepancy from
/// the constant end, as a Young diagram.
struct DefaultRecipe {
    static constexpr std::string_view name = "default";

    std::int64_t r(const WeightProfile& lam) const {
        std::set<std::int64_t> values;
        for (const auto& run : lam.body()) values.insert(run.value);
        for (const auto& end : {lam.head(), lam.tail()})
            if (end)
                for (auto v : end->pattern()) values.erase(v);
        return static_cast<std::int64_t>(values.size());
    }
    std::int64_t g(const WeightProfile& lam) const {
        if (lam.kind() != OrderKind::TwoSided) return 0;
        const WeightProfile n = normalize_shift(lam);
        return n.value_at_slot(n.body_start() - 1) - n.value_at_slot(n.tail_start());
    }
    Partition x(const WeightProfile& lam) const { return discrepancy_partition(lam); }
    Partition y(const WeightProfile& lam) const { return discrepancy_partition(lam); }
};

template <TagRecipe Recipe = DefaultRecipe>
AnnihilatorTag annihilator_tag(const ModuleDescriptor& d, const Recipe& recipe = {}) {
    const std::string name(Recipe::name);
    if (d.is_symlimit()) return AnnihilatorTag::quad(TagCase::SymLimit, 1, 0, {}, {}, name);
    const WeightProfile lam = limit_weight(d);
    if (!image_is_finite(lam).finite) return AnnihilatorTag::zero_ideal();
    switch (lam.kind()) {
    case OrderKind::LeftInfinite:
        return AnnihilatorTag::quad(TagCase::LeftInfinite, recipe.r(lam), 0, {}, recipe.y(lam), name);
    case OrderKind::RightInfinite: {
        const WeightProfile s = star(lam);
        return AnnihilatorTag::quad(TagCase::RightInfinite, recipe.r(s), 0, recipe.x(s), {}, name);
    }
    case OrderKind::TwoSided:
        return AnnihilatorTag::quad(TagCase::TwoSided, recipe.r(lam), recipe.g(lam), {}, {}, name);
    }
    throw DomainError("order is not of Dynkin type");
}

}  // namespace slinf
