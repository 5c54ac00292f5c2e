#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "slinf/errors.hpp"

namespace slinf {

/// Abstract order type of a Dynkin linear order.
enum class OrderKind {
    RightInfinite,  ///< isomorphic to (Z>0, <)
    LeftInfinite,   ///< isomorphic to (Z<0, <)
    TwoSided,       ///< isomorphic to (Z, <)
};

inline std::string_view to_string(OrderKind kind) {
    switch (kind) {
    case OrderKind::RightInfinite: return "right-infinite";
    case OrderKind::LeftInfinite: return "left-infinite";
    case OrderKind::TwoSided: return "two-sided";
    }
    return "?";
}

inline OrderKind order_kind_from_string(std::string_view s) {
    if (s == "right-infinite") return OrderKind::RightInfinite;
    if (s == "left-infinite") return OrderKind::LeftInfinite;
    if (s == "two-sided") return OrderKind::TwoSided;
    throw DomainError("unknown order kind '" + std::string(s) + "'");
}

/// A position in the coordinate chart of an order kind: positive integers for
/// RightInfinite, negative integers for LeftInfinite, all integers for
/// TwoSided.
struct Position {
    std::int64_t index = 1;

    friend auto operator<=>(const Position&, const Position&) = default;
};

inline bool valid_position(OrderKind kind, std::int64_t index) {
    switch (kind) {
    case OrderKind::RightInfinite: return index >= 1;
    case OrderKind::LeftInfinite: return index <= -1;
    case OrderKind::TwoSided: return true;
    }
    return false;
}

/// A Dynkin linear order on the index set, presented as one of the three
/// standard charts composed with a finite product of disjoint transpositions.
///
/// The transposition list is stored sorted with each pair as (min, max), so
/// two specs describing the same order compare equal.
class OrderSpec {
public:
    using Transposition = std::pair<std::int64_t, std::int64_t>;

    OrderSpec() = default;

    explicit OrderSpec(OrderKind kind, std::vector<Transposition> relabeling = {})
        : kind_(kind) {
        std::vector<std::int64_t> seen;
        for (auto [a, b] : relabeling) {
            if (!valid_position(kind, a) || !valid_position(kind, b))
                throw DomainError("relabeling uses a position outside the " +
                                  std::string(to_string(kind)) + " chart");
            if (a == b) throw DomainError("relabeling contains a trivial transposition");
            if (a > b) std::swap(a, b);
            seen.push_back(a);
            seen.push_back(b);
            relabeling_.emplace_back(a, b);
        }
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw DomainError("relabeling transpositions must be disjoint");
        std::sort(relabeling_.begin(), relabeling_.end());
    }

    OrderKind kind() const noexcept { return kind_; }
    const std::vector<Transposition>& relabeling() const noexcept { return relabeling_; }

    /// Chart slot of a position after the relabeling is applied. The
    /// relabeling is an involution, so this map is its own inverse.
    Position slot(Position p) const {
        check(p);
        for (auto [a, b] : relabeling_) {
            if (p.index == a) return {b};
            if (p.index == b) return {a};
        }
        return p;
    }

    void check(Position p) const {
        if (!valid_position(kind_, p.index))
            throw DomainError("position " + std::to_string(p.index) + " is not in the " +
                              std::string(to_string(kind_)) + " chart");
    }

    friend bool operator==(const OrderSpec&, const OrderSpec&) = default;

private:
    OrderKind kind_ = OrderKind::RightInfinite;
    std::vector<Transposition> relabeling_;
};

/// a ≺ b under the order.
inline bool precedes(const OrderSpec& o, Position a, Position b) {
    return o.slot(a).index < o.slot(b).index;
}

/// Whether ε_i − ε_j is a positive root of the Borel subalgebra attached to o.
inline bool is_positive_root(const OrderSpec& o, Position i, Position j) {
    if (i == j) throw DomainError("ε_i − ε_i is not a root");
    return precedes(o, i, j);
}

/// Chart slots of the n-th standard window. TwoSided windows grow around the
/// cut between 0 and 1 in the sequence 0, 1, -1, 2, -2, ...
inline std::vector<std::int64_t> window_slots(OrderKind kind, std::size_t n) {
    std::vector<std::int64_t> out;
    out.reserve(n);
    const auto m = static_cast<std::int64_t>(n);
    switch (kind) {
    case OrderKind::RightInfinite:
        for (std::int64_t i = 1; i <= m; ++i) out.push_back(i);
        break;
    case OrderKind::LeftInfinite:
        for (std::int64_t i = -m; i <= -1; ++i) out.push_back(i);
        break;
    case OrderKind::TwoSided: {
        // after n steps of 0, 1, -1, 2, -2, ... the window is [lo, hi]
        const std::int64_t hi = m / 2;
        const std::int64_t lo = hi - m + 1;
        for (std::int64_t i = lo; i <= hi; ++i) out.push_back(i);
        break;
    }
    }
    return out;
}

/// The first n positions of an order-convex exhaustion, listed along ≺.
inline std::vector<Position> finite_window(const OrderSpec& o, std::size_t n) {
    if (n == 0) throw DomainError("window size must be at least 1");
    std::vector<Position> out;
    for (auto s : window_slots(o.kind(), n)) out.push_back(o.slot(Position{s}));
    return out;
}

}  // namespace slinf
