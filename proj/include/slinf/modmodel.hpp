#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/orders.hpp"
#include "slinf/weights.hpp"

namespace slinf {

/// One sl(n_k) block: its highest weight λ^k and the chosen support weight μ^k
/// (empty when unset), both listed along the order.
struct Block {
    FiniteWeight lam;
    FiniteWeight mu;

    std::size_t size() const noexcept { return lam.size(); }
    Block shifted(std::int64_t c) const { return {lam.shifted(c), mu.size() ? mu.shifted(c) : mu}; }

    friend bool operator==(const Block&, const Block&) = default;
};

/// Eventually periodic block data: the prefix, then the period repeated
/// forever, the j-th repetition (j = 0, 1, ...) shifted by j * offset.
struct BlockSequence {
    std::vector<Block> prefix;
    std::vector<Block> period;
    std::int64_t offset = 0;

    /// 1-based k-th block with its offset applied.
    Block block(std::size_t k) const {
        if (k == 0) throw DomainError("blocks are numbered from 1");
        if (k <= prefix.size()) return prefix[k - 1];
        if (period.empty()) throw DomainError("block sequence has an empty period");
        const std::size_t t = k - prefix.size() - 1;
        const auto rep = static_cast<std::int64_t>(t / period.size());
        return period[t % period.size()].shifted(rep * offset);
    }

    std::size_t size_of(std::size_t k) const { return block(k).size(); }

    friend bool operator==(const BlockSequence&, const BlockSequence&) = default;
};

/// V_p(L_{b_l}((λ),(μ))) data. `blocks` run away from the finite end of the
/// order: rightward from slot 1 (RightInfinite, TwoSided) or leftward from
/// slot -1 (LeftInfinite). For TwoSided, `left_blocks` run leftward from slot 0.
struct VPDatum {
    OrderSpec order;
    BlockSequence blocks;
    BlockSequence left_blocks;

    friend bool operator==(const VPDatum&, const VPDatum&) = default;
};

/// Strictly increasing positive sequence a_1 < a_2 < ...: explicit prefix,
/// then tail_start, tail_start + tail_step, ...
struct SymLimitSequence {
    std::vector<std::int64_t> prefix;
    std::int64_t tail_start = 1;
    std::int64_t tail_step = 1;

    std::int64_t at(std::size_t n) const {
        if (n == 0) throw DomainError("sequence is indexed from 1");
        if (n <= prefix.size()) return prefix[n - 1];
        return tail_start + static_cast<std::int64_t>(n - prefix.size() - 1) * tail_step;
    }

    friend bool operator==(const SymLimitSequence&, const SymLimitSequence&) = default;
};

/// A simple integrable weight module: either a parabolically induced datum
/// or the symmetric-power limit S_A^∞ V.
///
/// The induced module and its simple quotient are never materialized; every
/// question answered by this library factors through λ, μ and the exhaustion.
class ModuleDescriptor {
public:
    ModuleDescriptor(VPDatum vp) : data_(std::move(vp)) {}
    ModuleDescriptor(SymLimitSequence a) : data_(std::move(a)) {}

    bool is_vp() const noexcept { return std::holds_alternative<VPDatum>(data_); }
    bool is_symlimit() const noexcept { return !is_vp(); }
    const VPDatum& vp() const {
        if (!is_vp()) throw DomainError("descriptor is not a parabolic-induction datum");
        return std::get<VPDatum>(data_);
    }
    const SymLimitSequence& symlimit() const {
        if (is_vp()) throw DomainError("descriptor is not a symmetric-power limit");
        return std::get<SymLimitSequence>(data_);
    }

    friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;

private:
    std::variant<VPDatum, SymLimitSequence> data_;
};

struct Violation {
    std::string where;  ///< e.g. "block 3", "left block 1", "sequence"
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const noexcept { return violations.empty(); }
    std::string summary() const {
        std::string s;
        for (const auto& v : violations) s += v.where + ": " + v.message + "\n";
        return s;
    }
};

namespace detail {

inline bool uses_left_blocks(const OrderSpec& o) { return o.kind() == OrderKind::TwoSided; }

inline std::vector<std::int64_t> concat_values(const std::vector<Block>& blocks, bool mu, bool reversed,
                                               std::int64_t shift = 0) {
    std::vector<std::int64_t> out;
    auto append = [&](const Block& b) {
        const auto& w = mu ? b.mu : b.lam;
        for (auto x : w) out.push_back(x + shift);
    };
    if (reversed)
        for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) append(*it);
    else
        for (const auto& b : blocks) append(b);
    return out;
}

inline WeightProfile flatten(const VPDatum& d, bool mu) {
    const auto kind = d.order.kind();
    auto finite_runs = [](const std::vector<std::int64_t>& values) {
        std::vector<Run> runs;
        for (auto v : values) runs.push_back(Run::finite(v, 1));
        return runs;
    };
    // rightward sequences: pattern is the period as listed, step = offset;
    // leftward ones list the period right-to-left, and moving one repetition
    // to the right undoes one offset
    auto right_tail = [&](const BlockSequence& s) {
        return Run::periodic(concat_values(s.period, mu, false), s.offset);
    };
    auto left_head = [&](const BlockSequence& s) {
        return Run::periodic(concat_values(s.period, mu, true), -s.offset);
    };
    std::vector<Run> runs;
    switch (kind) {
    case OrderKind::RightInfinite: {
        runs = finite_runs(concat_values(d.blocks.prefix, mu, false));
        runs.push_back(right_tail(d.blocks));
        return WeightProfile(d.order, runs);
    }
    case OrderKind::LeftInfinite: {
        runs.push_back(left_head(d.blocks));
        for (auto& r : finite_runs(concat_values(d.blocks.prefix, mu, true))) runs.push_back(r);
        return WeightProfile(d.order, runs);
    }
    case OrderKind::TwoSided: {
        const auto left = concat_values(d.left_blocks.prefix, mu, true);
        runs.push_back(left_head(d.left_blocks));
        for (auto& r : finite_runs(left)) runs.push_back(r);
        for (auto& r : finite_runs(concat_values(d.blocks.prefix, mu, false))) runs.push_back(r);
        runs.push_back(right_tail(d.blocks));
        return WeightProfile(d.order, runs, 1 - static_cast<std::int64_t>(left.size()));
    }
    }
    throw DomainError("unknown order kind");
}

inline void validate_sequence(const BlockSequence& s, const std::string& label, bool leftward, std::uint64_t cap,
                              ValidationReport& report) {
    if (s.period.empty()) {
        report.violations.push_back({label + " sequence", "period must contain at least one block"});
        return;
    }
    const std::size_t total = s.prefix.size() + s.period.size();
    for (std::size_t k = 1; k <= total; ++k) {
        const Block b = s.block(k);
        const std::string where = label + " " + std::to_string(k);
        if (b.lam.size() == 0) {
            report.violations.push_back({where, "empty block"});
            continue;
        }
        if (b.mu.size() != b.lam.size()) {
            report.violations.push_back({where, "mu has length " + std::to_string(b.mu.size()) + ", lam has " +
                                                    std::to_string(b.lam.size())});
            continue;
        }
        if (!is_weakly_decreasing(b.lam)) {
            report.violations.push_back({where, "lam " + b.lam.to_string() + " is not dominant"});
            continue;
        }
        try {
            if (!is_multiplicity_free(b.lam, cap))
                report.violations.push_back({where, "L" + b.lam.to_string() + " has a weight space of dimension > 1"});
            else if (!default_character_cache().get(b.lam, cap)->contains(b.mu))
                report.violations.push_back({where, "mu " + b.mu.to_string() + " is not in Supp L" + b.lam.to_string()});
        } catch (const ResourceError& e) {
            report.violations.push_back({where, e.what()});
        }
    }
    // dominance across block boundaries, including one wrap into the next period
    for (std::size_t k = 1; k <= total; ++k) {
        const Block a = s.block(k), b = s.block(k + 1);
        if (a.lam.size() == 0 || b.lam.size() == 0) continue;
        const bool ok = leftward ? b.lam.coords.back() >= a.lam.coords.front()
                                 : a.lam.coords.back() >= b.lam.coords.front();
        if (!ok)
            report.violations.push_back({label + " " + std::to_string(k + 1),
                                         "concatenated lam is not dominant at the boundary with " + label + " " +
                                             std::to_string(k)});
    }
}

}  // namespace detail

/// Checks every block invariant on the prefix plus one full period.
inline ValidationReport validate(const ModuleDescriptor& d, std::uint64_t cap = default_dim_cap) {
    ValidationReport report;
    if (d.is_symlimit()) {
        const auto& a = d.symlimit();
        if (a.tail_step < 1) report.violations.push_back({"sequence", "tail step must be positive"});
        for (std::size_t i = 0; i < a.prefix.size(); ++i) {
            if (a.prefix[i] < 1) report.violations.push_back({"sequence", "a_" + std::to_string(i + 1) + " is not positive"});
            if (i > 0 && a.prefix[i] <= a.prefix[i - 1])
                report.violations.push_back({"sequence", "a_" + std::to_string(i + 1) + " does not increase"});
        }
        if (a.tail_start < 1) report.violations.push_back({"sequence", "tail start is not positive"});
        if (!a.prefix.empty() && a.tail_start <= a.prefix.back())
            report.violations.push_back({"sequence", "tail start does not exceed the prefix"});
        return report;
    }
    const auto& vp = d.vp();
    const bool left_infinite = vp.order.kind() == OrderKind::LeftInfinite;
    detail::validate_sequence(vp.blocks, "block", left_infinite, cap, report);
    if (detail::uses_left_blocks(vp.order)) {
        detail::validate_sequence(vp.left_blocks, "left block", true, cap, report);
        if (!vp.blocks.period.empty() && !vp.left_blocks.period.empty()) {
            const Block l = vp.left_blocks.block(1), r = vp.blocks.block(1);
            if (l.lam.size() && r.lam.size() && l.lam.coords.back() < r.lam.coords.front())
                report.violations.push_back({"block 1", "lam is not dominant across the cut"});
        }
    } else if (!vp.left_blocks.prefix.empty() || !vp.left_blocks.period.empty()) {
        report.violations.push_back({"left block", "left blocks are only used by two-sided orders"});
    }
    return report;
}

inline void require_valid(const ModuleDescriptor& d, std::uint64_t cap = default_dim_cap) {
    auto r = validate(d, cap);
    if (!r.ok()) throw ValidationError(r.summary());
}

/// λ as a profile on the ambient order.
inline WeightProfile limit_weight(const ModuleDescriptor& d) { return detail::flatten(d.vp(), false); }

/// μ as a profile on the ambient order.
inline WeightProfile limit_mu(const ModuleDescriptor& d) { return detail::flatten(d.vp(), true); }

/// One step of the exhaustion by sl(N_k)-modules L(λ^(k)). Weights are listed
/// along the order; the embedding into step k+1 sends ν to
/// (next_mu_left, ν, next_mu_right).
struct ExhaustionStep {
    std::size_t k = 0;
    std::size_t size = 0;  ///< N_k
    FiniteWeight lam;      ///< λ^(k)
    FiniteWeight next_mu_left;
    FiniteWeight next_mu_right;

    FiniteWeight embed(const FiniteWeight& nu) const {
        if (nu.size() != size) throw DomainError("weight rank does not match the exhaustion step");
        return concat(concat(next_mu_left, nu), next_mu_right);
    }
};

/// Steps 1..k_max of the exhaustion of a validated parabolic datum.
inline std::vector<ExhaustionStep> exhaustion(const ModuleDescriptor& d, std::size_t k_max,
                                              std::uint64_t cap = default_dim_cap) {
    if (d.is_symlimit())
        throw DomainError("unsupported variant: the symmetric-power limit is exhausted by S^{a_n}V_n directly");
    require_valid(d, cap);
    const auto& vp = d.vp();
    const auto kind = vp.order.kind();
    std::vector<ExhaustionStep> steps;
    FiniteWeight lam;
    for (std::size_t k = 1; k <= k_max; ++k) {
        ExhaustionStep s;
        s.k = k;
        const Block b = vp.blocks.block(k);
        const Block nb = vp.blocks.block(k + 1);
        switch (kind) {
        case OrderKind::RightInfinite:
            lam = concat(lam, b.lam);
            s.next_mu_right = nb.mu;
            break;
        case OrderKind::LeftInfinite:
            lam = concat(b.lam, lam);
            s.next_mu_left = nb.mu;
            break;
        case OrderKind::TwoSided:
            lam = concat(concat(vp.left_blocks.block(k).lam, lam), b.lam);
            s.next_mu_left = vp.left_blocks.block(k + 1).mu;
            s.next_mu_right = nb.mu;
            break;
        }
        s.lam = lam;
        s.size = lam.size();
        steps.push_back(std::move(s));
    }
    return steps;
}

/// Supp L(λ^(k)) embeds into Supp L(λ^(k+1)) along the step's embedding.
inline bool embedding_respects_supports(const ExhaustionStep& step, const ExhaustionStep& next,
                                        std::uint64_t cap = default_dim_cap) {
    const auto small = freudenthal_character(step.lam, cap);
    const auto big = freudenthal_character(next.lam, cap);
    for (const auto& [nu, m] : small.entries)
        if (!big.contains(step.embed(nu))) return false;
    return true;
}

struct DecompositionStrategy {
    enum class Kind { GreedyMin, FixedSize } kind = Kind::GreedyMin;
    std::size_t size = 0;

    static DecompositionStrategy greedy_min() { return {}; }
    static DecompositionStrategy fixed(std::size_t n) { return {Kind::FixedSize, n}; }
};

inline constexpr std::size_t max_block_size = 512;

namespace detail {

/// Walks one side of the order from the cut: position t ≥ 0 sits at slot
/// `origin + dir * t`; from `region` on, values follow the quasi-periodic
/// sequence `tail`.
inline BlockSequence decompose_side(const WeightProfile& w, std::int64_t origin, std::int64_t dir,
                                    std::int64_t region, const QuasiPeriodic& tail, DecompositionStrategy strategy,
                                    std::uint64_t cap, const std::string& label) {
    auto slot = [&](std::int64_t t) { return origin + dir * t; };
    auto block_at = [&](std::int64_t t, std::int64_t size) {
        FiniteWeight b;
        for (std::int64_t i = 0; i < size; ++i) b.coords.push_back(w.value_at_slot(slot(t + i)));
        if (dir < 0) std::reverse(b.coords.begin(), b.coords.end());
        return b;
    };
    auto free_block = [&](const FiniteWeight& b) {
        if (!is_weakly_decreasing(b)) return false;
        try {
            return is_multiplicity_free(b, cap);
        } catch (const ResourceError&) {
            return false;
        }
    };

    std::vector<Block> blocks;
    std::vector<std::int64_t> starts;
    std::map<std::int64_t, std::size_t> seen;  // phase -> index of the block starting there
    std::int64_t t = 0;
    for (;;) {
        if (t >= region) {
            const std::int64_t phase = floor_mod(slot(t), tail.period());
            auto it = seen.find(phase);
            if (it != seen.end()) {
                BlockSequence s;
                s.prefix.assign(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(it->second));
                s.period.assign(blocks.begin() + static_cast<std::ptrdiff_t>(it->second), blocks.end());
                s.offset = w.value_at_slot(slot(t)) - w.value_at_slot(slot(starts[it->second]));
                return s;
            }
            seen[phase] = blocks.size();
        }
        std::int64_t size = 1;
        if (strategy.kind == DecompositionStrategy::Kind::FixedSize) {
            size = static_cast<std::int64_t>(strategy.size);
            if (!free_block(block_at(t, size)))
                throw DecompositionError(label + " " + std::to_string(blocks.size() + 1) + " " +
                                         block_at(t, size).to_string() + " is not multiplicity free");
        } else {
            const bool constant_region = tail.is_constant();
            if (!(constant_region && t >= region)) {
                while (size < static_cast<std::int64_t>(max_block_size)) {
                    if (constant_region && t + size >= region) break;
                    if (!free_block(block_at(t, size + 1))) break;
                    ++size;
                }
            }
        }
        starts.push_back(t);
        blocks.push_back({block_at(t, size), {}});
        t += size;
    }
}


}  // namespace detail

/// Splits a dominant λ into consecutive multiplicity-free blocks (μ unset).
///
/// greedy-min grows each block while it stays multiplicity free, except that
/// a block never grows into a constant infinite run; constant runs are cut
/// into blocks of size 1. fixed-size(n) uses blocks of n positions and fails
/// if one of them is not multiplicity free.
inline VPDatum decompose_blocks(const WeightProfile& lam, DecompositionStrategy strategy = {},
                                std::uint64_t cap = default_dim_cap) {
    if (!is_dominant(lam)) throw DomainError("block decomposition needs a dominant weight");
    if (strategy.kind == DecompositionStrategy::Kind::FixedSize && strategy.size == 0)
        throw DomainError("fixed block size must be positive");
    VPDatum d;
    d.order = lam.order();
    switch (lam.kind()) {
    case OrderKind::RightInfinite:
        d.blocks = detail::decompose_side(lam, 1, 1, lam.tail_start() - 1, *lam.tail(), strategy, cap, "block");
        break;
    case OrderKind::LeftInfinite:
        d.blocks = detail::decompose_side(lam, -1, -1, -lam.body_start(), *lam.head(), strategy, cap, "block");
        break;
    case OrderKind::TwoSided:
        d.blocks = detail::decompose_side(lam, 1, 1, std::max<std::int64_t>(0, lam.tail_start() - 1), *lam.tail(),
                                          strategy, cap, "block");
        d.left_blocks = detail::decompose_side(lam, 0, -1, std::max<std::int64_t>(0, 1 - lam.body_start()),
                                               *lam.head(), strategy, cap, "left block");
        break;
    }
    return d;
}

/// Sets μ^k = λ^k in every block.
inline VPDatum with_highest_mu(VPDatum d) {
    for (auto* s : {&d.blocks, &d.left_blocks}) {
        for (auto& b : s->prefix) b.mu = b.lam;
        for (auto& b : s->period) b.mu = b.lam;
    }
    return d;
}

}  // namespace slinf
