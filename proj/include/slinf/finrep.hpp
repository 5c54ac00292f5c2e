#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "slinf/errors.hpp"
#include "slinf/weights.hpp"

namespace slinf {

inline constexpr std::uint64_t default_dim_cap = 10000;

/// Weight multiplicities of a finite-dimensional simple sl(n)-module.
///
/// Weights are kept as gl(n) lifts with the same coordinate sum as the
/// highest weight, so the table of (0,-2) lists (0,-2), (-1,-1), (-2,0).
/// Entries are ordered lexicographically decreasing.
struct CharacterTable {
    std::size_t n = 0;
    FiniteWeight highest;
    std::map<FiniteWeight, std::uint64_t, std::greater<>> entries;

    std::uint64_t multiplicity(const FiniteWeight& w) const {
        auto it = entries.find(w);
        return it == entries.end() ? 0 : it->second;
    }
    bool contains(const FiniteWeight& w) const { return entries.count(w) != 0; }

    std::uint64_t total_dim() const {
        std::uint64_t d = 0;
        for (const auto& [w, m] : entries) d += m;
        return d;
    }

    /// Same module, highest weight moved by a global constant.
    CharacterTable shifted(std::int64_t c) const {
        CharacterTable t{n, highest.shifted(c), {}};
        for (const auto& [w, m] : entries) t.entries.emplace(w.shifted(c), m);
        return t;
    }

    friend bool operator==(const CharacterTable&, const CharacterTable&) = default;
};

/// ν ∈ W·λ for the symmetric group acting on ε-coordinates.
inline bool orbit_equivalent(const FiniteWeight& nu, const FiniteWeight& lam) {
    if (nu.size() != lam.size()) throw DomainError("orbit test on weights of different rank");
    auto a = nu.coords, b = lam.coords;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

inline FiniteWeight dominant_representative(const FiniteWeight& nu) {
    FiniteWeight w = nu;
    std::sort(w.coords.rbegin(), w.coords.rend());
    return w;
}

/// dim L(λ) = ∏_{i<j} (λ_i − λ_j + j − i) / (j − i).
inline std::uint64_t weyl_dim(const FiniteWeight& lam) {
    if (lam.size() == 0) throw DomainError("weight of rank zero");
    if (!is_weakly_decreasing(lam)) throw DomainError("weyl_dim needs a dominant weight " + lam.to_string());
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < lam.size(); ++i)
        for (std::size_t j = i + 1; j < lam.size(); ++j) {
            num *= mpz_class(std::to_string(lam[i] - lam[j] + static_cast<std::int64_t>(j - i)));
            den *= static_cast<unsigned long>(j - i);
        }
    mpz_class d = num / den;
    if (!d.fits_ulong_p()) throw ResourceError("dimension does not fit in 64 bits", ~0ULL);
    return d.get_ui();
}

namespace detail {

/// Partitions (padded to length n) of `total` dominated by `top`, in
/// lexicographically decreasing order.
inline void dominated_partitions(const std::vector<std::int64_t>& top, std::vector<std::int64_t>& cur,
                                 std::int64_t remaining, std::int64_t prefix_top, std::int64_t prefix_cur,
                                 std::vector<std::vector<std::int64_t>>& out) {
    const std::size_t n = top.size();
    const std::size_t i = cur.size();
    if (i == n) {
        if (remaining == 0) out.push_back(cur);
        return;
    }
    const std::int64_t bound_prev = i == 0 ? remaining : cur.back();
    const std::int64_t bound_dom = prefix_top + top[i] - prefix_cur;
    const std::int64_t hi = std::min({bound_prev, bound_dom, remaining});
    const auto slots_left = static_cast<std::int64_t>(n - i);
    for (std::int64_t v = hi; v >= 0; --v) {
        if (v * slots_left < remaining) break;
        cur.push_back(v);
        dominated_partitions(top, cur, remaining - v, prefix_top + top[i], prefix_cur + v, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// Multiplicities of the dominant weights of L(λ), computed by Freudenthal's
/// recursion on the shifted partition λ − λ_n. Keys are shifted back.
inline std::map<FiniteWeight, std::uint64_t, std::greater<>> freudenthal_dominant(const FiniteWeight& lam) {
    const std::size_t n = lam.size();
    const std::int64_t shift = lam[n - 1];
    std::vector<std::int64_t> top(n);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += (top[i] = lam[i] - shift);

    std::vector<std::vector<std::int64_t>> dominant;
    std::vector<std::int64_t> cur;
    detail::dominated_partitions(top, cur, total, 0, 0, dominant);

    auto norm_rho = [n](const std::vector<std::int64_t>& v) {
        std::int64_t s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::int64_t x = v[i] + static_cast<std::int64_t>(n - 1 - i);
            s += x * x;
        }
        return s;
    };

    std::map<std::vector<std::int64_t>, std::uint64_t, std::greater<>> mult;
    const std::int64_t top_norm = norm_rho(top);
    auto lookup = [&](std::vector<std::int64_t> v) -> std::uint64_t {
        std::sort(v.rbegin(), v.rend());
        auto it = mult.find(v);
        return it == mult.end() ? 0 : it->second;
    };

    for (const auto& mu : dominant) {
        if (mu == top) {
            mult[mu] = 1;
            continue;
        }
        std::int64_t rhs = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                auto v = mu;
                for (std::int64_t k = 1;; ++k) {
                    ++v[i];
                    --v[j];
                    if (v[j] < 0) break;
                    const std::uint64_t m = lookup(v);
                    rhs += static_cast<std::int64_t>(m) * (v[i] - v[j]);
                }
            }
        rhs *= 2;
        const std::int64_t lhs = top_norm - norm_rho(mu);
        if (lhs <= 0 || rhs % lhs != 0)
            throw ConsistencyError("Freudenthal recursion produced a non-integral multiplicity");
        if (rhs > 0) mult[mu] = static_cast<std::uint64_t>(rhs / lhs);
    }

    std::map<FiniteWeight, std::uint64_t, std::greater<>> out;
    for (const auto& [mu, m] : mult) out.emplace(FiniteWeight(mu).shifted(shift), m);
    return out;
}

/// Full character of L(λ): Freudenthal on the dominant chamber, extended by
/// permutation symmetry.
inline CharacterTable freudenthal_character(const FiniteWeight& lam, std::uint64_t cap = default_dim_cap) {
    if (lam.size() == 0) throw DomainError("weight of rank zero");
    if (!is_weakly_decreasing(lam)) throw DomainError("character needs a dominant weight " + lam.to_string());
    const std::uint64_t dim = weyl_dim(lam);
    if (dim > cap) throw ResourceError("dim L" + lam.to_string() + " = " + std::to_string(dim) + " exceeds the cap", cap);

    CharacterTable table{lam.size(), lam, {}};
    for (const auto& [mu, m] : freudenthal_dominant(lam)) {
        auto perm = mu.coords;
        std::sort(perm.begin(), perm.end());
        do {
            table.entries.emplace(FiniteWeight(perm), m);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return table;
}

/// Thread-safe memo of character tables keyed by λ (which fixes n).
/// Concurrent misses may compute the same table twice; the last insert wins
/// and all results are identical.
class CharacterCache {
public:
    std::shared_ptr<const CharacterTable> get(const FiniteWeight& lam, std::uint64_t cap = default_dim_cap) {
        {
            std::shared_lock lock(mutex_);
            auto it = tables_.find(lam);
            if (it != tables_.end()) {
                if (it->second->total_dim() > cap)
                    throw ResourceError("dim L" + lam.to_string() + " exceeds the cap", cap);
                return it->second;
            }
        }
        auto table = std::make_shared<const CharacterTable>(freudenthal_character(lam, cap));
        std::unique_lock lock(mutex_);
        tables_[lam] = table;
        return table;
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return tables_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::map<FiniteWeight, std::shared_ptr<const CharacterTable>> tables_;
};

inline CharacterCache& default_character_cache() {
    static CharacterCache cache;
    return cache;
}

/// Closed-form recognition of the weight multiplicity free simples:
/// every sl(2) module, a·ω_1, a·ω_{n-1}, and the fundamental ω_i.
inline bool multiplicity_free_by_shape(const FiniteWeight& lam) {
    if (!is_weakly_decreasing(lam)) throw DomainError("multiplicity test needs a dominant weight");
    const std::size_t n = lam.size();
    if (n <= 2) return true;
    std::vector<std::int64_t> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = lam[i] - lam[n - 1];
    const std::int64_t a = p[0];
    // a·ω_1
    if (std::all_of(p.begin() + 1, p.end(), [](auto x) { return x == 0; })) return true;
    // a·ω_{n-1}
    if (std::all_of(p.begin(), p.end() - 1, [a](auto x) { return x == a; })) return true;
    // ω_i
    return std::all_of(p.begin(), p.end(), [](auto x) { return x == 0 || x == 1; });
}

inline bool multiplicity_free_by_character(const FiniteWeight& lam, std::uint64_t cap = default_dim_cap) {
    const auto table = default_character_cache().get(lam, cap);
    return std::all_of(table->entries.begin(), table->entries.end(), [](const auto& e) { return e.second == 1; });
}

/// All weight spaces of L(λ) are one-dimensional.
inline bool is_multiplicity_free(const FiniteWeight& lam, std::uint64_t cap = default_dim_cap) {
    if (multiplicity_free_by_shape(lam)) return true;
    return multiplicity_free_by_character(lam, cap);
}

/// Eigenvalue of the quadratic Casimir built from the trace form,
/// ⟨λ̄, λ̄ + 2ρ⟩ with λ̄ the traceless part of λ.
inline mpq_class casimir_eigenvalue(const FiniteWeight& lam) {
    if (!is_weakly_decreasing(lam)) throw DomainError("Casimir eigenvalue needs a dominant weight");
    const auto n = static_cast<long>(lam.size());
    mpq_class sum_sq = 0, sum = 0, rho_term = 0;
    for (long i = 0; i < n; ++i) {
        const mpq_class x(mpz_class(std::to_string(lam[static_cast<std::size_t>(i)])));
        sum_sq += x * x;
        sum += x;
        rho_term += x * (n - 1 - 2 * i);
    }
    mpq_class value = sum_sq - sum * sum / n + rho_term;
    value.canonicalize();
    return value;
}

}  // namespace slinf
