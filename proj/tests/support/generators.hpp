#pragma once

// Seeded random descriptors for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "slinf/slinf.hpp"

namespace gen {

using namespace slinf;

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(eng_); }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(v.size()) - 1))];
    }

private:
    std::mt19937_64 eng_;
};

struct Limits {
    std::size_t max_block = 3;
    std::size_t max_prefix = 2;
    std::size_t max_period = 2;
    std::int64_t max_gap = 2;
};

/// A multiplicity-free dominant block starting at value `top`.
inline FiniteWeight mf_block(Rng& rng, std::int64_t top, std::size_t max_size, std::int64_t max_gap) {
    const auto s = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_size)));
    std::vector<std::int64_t> c(s, top);
    if (s == 2) {
        c[1] = top - rng.uniform(0, max_gap + 1);
    } else if (s >= 3) {
        switch (rng.uniform(0, 2)) {
        case 0: {  // a·ω_1
            const std::int64_t a = rng.uniform(0, max_gap + 1);
            for (std::size_t i = 1; i < s; ++i) c[i] = top - a;
            break;
        }
        case 1: {  // a·ω_{n-1}
            const std::int64_t a = rng.uniform(0, max_gap + 1);
            c[s - 1] = top - a;
            break;
        }
        default: {  // ω_i
            const auto i = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(s)));
            for (std::size_t j = i; j < s; ++j) c[j] = top - 1;
        }
        }
    }
    return FiniteWeight(c);
}

inline FiniteWeight random_support_weight(Rng& rng, const FiniteWeight& lam) {
    const auto table = default_character_cache().get(lam);
    std::vector<FiniteWeight> ws;
    for (const auto& [w, m] : table->entries) ws.push_back(w);
    return rng.pick(ws);
}

/// Blocks running away from the cut with non-increasing values.
inline BlockSequence outward_sequence(Rng& rng, std::int64_t top, bool finite_image, const Limits& lim) {
    BlockSequence s;
    std::int64_t v = top;
    auto block = [&](std::int64_t start) {
        FiniteWeight lam = mf_block(rng, start, lim.max_block, lim.max_gap);
        return Block{lam, random_support_weight(rng, lam)};
    };
    const auto prefix = rng.uniform(0, static_cast<std::int64_t>(lim.max_prefix));
    for (std::int64_t i = 0; i < prefix; ++i) {
        s.prefix.push_back(block(v));
        v = s.prefix.back().lam.coords.back() - rng.uniform(0, lim.max_gap);
    }
    const auto period = rng.uniform(1, static_cast<std::int64_t>(lim.max_period));
    if (finite_image) {
        for (std::int64_t i = 0; i < period; ++i) {
            const auto size = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(lim.max_block)));
            const FiniteWeight lam(std::vector<std::int64_t>(size, v));
            s.period.push_back({lam, lam});
        }
        return s;
    }
    const std::int64_t first = v;
    for (std::int64_t i = 0; i < period; ++i) {
        s.period.push_back(block(v));
        v = s.period.back().lam.coords.back() - rng.uniform(0, lim.max_gap);
    }
    const std::int64_t drop = first - s.period.back().lam.coords.back();
    s.offset = -(drop + rng.uniform(drop == 0 ? 1 : 0, lim.max_gap));
    return s;
}

/// The dual sequence: values negated, each block reversed.
inline BlockSequence mirrored(const BlockSequence& s) {
    auto flip = [](const FiniteWeight& w) {
        std::vector<std::int64_t> c(w.coords.rbegin(), w.coords.rend());
        for (auto& x : c) x = -x;
        return FiniteWeight(c);
    };
    BlockSequence out;
    for (const auto& b : s.prefix) out.prefix.push_back({flip(b.lam), flip(b.mu)});
    for (const auto& b : s.period) out.period.push_back({flip(b.lam), flip(b.mu)});
    out.offset = -s.offset;
    return out;
}

inline BlockSequence shifted(const BlockSequence& s, std::int64_t c) {
    BlockSequence out = s;
    for (auto& b : out.prefix) b = b.shifted(c);
    for (auto& b : out.period) b = b.shifted(c);
    return out;
}

inline OrderSpec random_order(Rng& rng, OrderKind kind) {
    std::vector<OrderSpec::Transposition> rel;
    std::vector<std::int64_t> used;
    const auto count = rng.uniform(0, 2);
    for (std::int64_t i = 0; i < count; ++i) {
        auto position = [&] {
            switch (kind) {
            case OrderKind::RightInfinite: return rng.uniform(1, 8);
            case OrderKind::LeftInfinite: return rng.uniform(-8, -1);
            default: return rng.uniform(-4, 4);
            }
        };
        const auto a = position(), b = position();
        if (a == b || std::find(used.begin(), used.end(), a) != used.end() ||
            std::find(used.begin(), used.end(), b) != used.end())
            continue;
        used.push_back(a);
        used.push_back(b);
        rel.emplace_back(a, b);
    }
    return OrderSpec(kind, rel);
}

inline OrderKind random_kind(Rng& rng) {
    switch (rng.uniform(0, 2)) {
    case 0: return OrderKind::RightInfinite;
    case 1: return OrderKind::LeftInfinite;
    default: return OrderKind::TwoSided;
    }
}

inline VPDatum random_vp(Rng& rng, OrderKind kind, const Limits& lim = {}) {
    VPDatum d;
    d.order = random_order(rng, kind);
    const std::int64_t top = rng.uniform(-3, 3);
    switch (kind) {
    case OrderKind::RightInfinite: d.blocks = outward_sequence(rng, top, rng.coin(), lim); break;
    case OrderKind::LeftInfinite: d.blocks = mirrored(outward_sequence(rng, top, rng.coin(), lim)); break;
    case OrderKind::TwoSided: {
        d.blocks = outward_sequence(rng, top, rng.coin(), lim);
        BlockSequence left = mirrored(outward_sequence(rng, 0, rng.coin(), lim));
        const std::int64_t at_cut = left.block(1).lam.coords.back();
        const std::int64_t right_first = d.blocks.block(1).lam.coords.front();
        d.left_blocks = shifted(left, right_first - at_cut + rng.uniform(0, lim.max_gap));
        break;
    }
    }
    return d;
}

inline VPDatum random_vp(Rng& rng, const Limits& lim = {}) { return random_vp(rng, random_kind(rng), lim); }

/// Moves `reps` periods into the prefix without changing the module.
inline BlockSequence unrolled(const BlockSequence& s, std::size_t reps) {
    BlockSequence out;
    const std::size_t moved = reps * s.period.size();
    for (std::size_t k = 1; k <= s.prefix.size() + moved; ++k) out.prefix.push_back(s.block(k));
    for (std::size_t k = 1; k <= s.period.size(); ++k) out.period.push_back(s.block(s.prefix.size() + moved + k));
    out.offset = s.offset;
    return out;
}

/// Same λ, μ changed in finitely many blocks.
inline VPDatum perturb_mu_prefix(Rng& rng, VPDatum d) {
    auto touch = [&](BlockSequence& s) {
        s = unrolled(s, static_cast<std::size_t>(rng.uniform(0, 2)));
        for (auto& b : s.prefix)
            if (rng.coin(0.7)) b.mu = random_support_weight(rng, b.lam);
    };
    touch(d.blocks);
    if (d.order.kind() == OrderKind::TwoSided) touch(d.left_blocks);
    return d;
}

inline VPDatum shifted(VPDatum d, std::int64_t c) {
    d.blocks = shifted(d.blocks, c);
    if (d.order.kind() == OrderKind::TwoSided) d.left_blocks = shifted(d.left_blocks, c);
    return d;
}

}  // namespace gen
