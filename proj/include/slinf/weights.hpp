#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "slinf/errors.hpp"
#include "slinf/orders.hpp"

namespace slinf {

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline std::int64_t floor_mod(std::int64_t a, std::int64_t b) { return a - floor_div(a, b) * b; }

inline std::string join(const std::vector<std::int64_t>& v, const char* sep = ",") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
    return os.str();
}

}  // namespace detail

/// ε-coordinates of a weight of gl(n) / sl(n).
struct FiniteWeight {
    std::vector<std::int64_t> coords;

    FiniteWeight() = default;
    explicit FiniteWeight(std::vector<std::int64_t> c) : coords(std::move(c)) {}
    FiniteWeight(std::initializer_list<std::int64_t> c) : coords(c) {}

    std::size_t size() const noexcept { return coords.size(); }
    std::int64_t operator[](std::size_t i) const { return coords[i]; }
    std::int64_t& operator[](std::size_t i) { return coords[i]; }
    auto begin() const { return coords.begin(); }
    auto end() const { return coords.end(); }

    std::int64_t sum() const { return std::accumulate(coords.begin(), coords.end(), std::int64_t{0}); }

    FiniteWeight shifted(std::int64_t c) const {
        FiniteWeight w = *this;
        for (auto& x : w.coords) x += c;
        return w;
    }

    std::string to_string() const { return "(" + detail::join(coords) + ")"; }

    friend auto operator<=>(const FiniteWeight&, const FiniteWeight&) = default;
};

inline FiniteWeight concat(const FiniteWeight& a, const FiniteWeight& b) {
    FiniteWeight out = a;
    out.coords.insert(out.coords.end(), b.coords.begin(), b.coords.end());
    return out;
}

/// Weakly decreasing coordinates, i.e. dominant for the standard Borel of sl(n).
inline bool is_weakly_decreasing(const FiniteWeight& w) {
    return std::is_sorted(w.coords.rbegin(), w.coords.rend());
}

/// A partition / Young diagram: weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0) throw DomainError("partition parts must be nonnegative");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw DomainError("partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<std::int64_t> parts)
        : Partition(std::vector<std::int64_t>(parts)) {}

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    bool empty() const noexcept { return parts_.empty(); }
    std::int64_t size() const { return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0}); }
    std::size_t length() const noexcept { return parts_.size(); }

    std::string to_string() const { return parts_.empty() ? "()" : "(" + detail::join(parts_) + ")"; }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<std::int64_t> parts_;
};

/// An integer sequence on all of Z of the form
///     f(x) = pattern[x mod p] + step * floor(x / p),
/// i.e. periodic up to a constant increment per period. Constant sequences
/// have p = 1, step = 0; arithmetic ones p = 1. Stored with minimal period.
class QuasiPeriodic {
public:
    QuasiPeriodic() : pattern_{0} {}

    /// Sequence whose values at slots anchor, anchor+1, ... begin with `pattern`.
    QuasiPeriodic(std::vector<std::int64_t> pattern, std::int64_t step, std::int64_t anchor = 0) {
        if (pattern.empty()) throw DomainError("empty pattern in an infinite run");
        const auto p = static_cast<std::int64_t>(pattern.size());
        auto raw = [&](std::int64_t x) {
            const std::int64_t rel = x - anchor;
            return pattern[static_cast<std::size_t>(detail::floor_mod(rel, p))] +
                   step * detail::floor_div(rel, p);
        };
        std::vector<std::int64_t> base(pattern.size());
        for (std::int64_t r = 0; r < p; ++r) base[static_cast<std::size_t>(r)] = raw(r);
        pattern_ = base;
        step_ = step;
        for (std::int64_t d = 1; d < p; ++d) {
            if (p % d != 0 || (step * d) % p != 0) continue;
            const std::int64_t inc = step * d / p;
            bool ok = true;
            for (std::int64_t x = 0; x < p && ok; ++x) ok = raw(x + d) == raw(x) + inc;
            if (ok) {
                pattern_.assign(base.begin(), base.begin() + d);
                step_ = inc;
                break;
            }
        }
    }

    static QuasiPeriodic constant(std::int64_t v) { return QuasiPeriodic({v}, 0); }

    std::int64_t operator()(std::int64_t x) const {
        const auto p = period();
        return pattern_[static_cast<std::size_t>(detail::floor_mod(x, p))] + step_ * detail::floor_div(x, p);
    }

    std::int64_t period() const noexcept { return static_cast<std::int64_t>(pattern_.size()); }
    std::int64_t step() const noexcept { return step_; }
    const std::vector<std::int64_t>& pattern() const noexcept { return pattern_; }
    bool is_constant() const noexcept { return pattern_.size() == 1 && step_ == 0; }

    /// Values at slots [from, from + count).
    std::vector<std::int64_t> values(std::int64_t from, std::int64_t count) const {
        std::vector<std::int64_t> out;
        for (std::int64_t x = from; x < from + count; ++x) out.push_back((*this)(x));
        return out;
    }

    QuasiPeriodic shifted(std::int64_t c) const {
        QuasiPeriodic q = *this;
        for (auto& v : q.pattern_) v += c;
        return q;
    }

    bool non_increasing() const {
        for (std::int64_t x = 0; x < period(); ++x)
            if ((*this)(x + 1) > (*this)(x)) return false;
        return true;
    }

    friend bool operator==(const QuasiPeriodic&, const QuasiPeriodic&) = default;

private:
    std::vector<std::int64_t> pattern_;
    std::int64_t step_ = 0;
};

/// One entry of a run-length presentation. Finite runs carry a single value
/// and a positive multiplicity; infinite runs (mult == nullopt) carry a
/// pattern repeated forever with `step` added per repetition along the order.
struct Run {
    std::vector<std::int64_t> values;
    std::optional<std::int64_t> mult;
    std::int64_t step = 0;

    static Run finite(std::int64_t value, std::int64_t mult) { return {{value}, mult, 0}; }
    static Run infinite(std::int64_t value, std::int64_t step = 0) { return {{value}, std::nullopt, step}; }
    static Run periodic(std::vector<std::int64_t> pattern, std::int64_t step) {
        return {std::move(pattern), std::nullopt, step};
    }

    bool is_infinite() const noexcept { return !mult.has_value(); }

    friend bool operator==(const Run&, const Run&) = default;
};

/// A total, finitely presented integer sequence indexed by the slots of a
/// Dynkin order: an optional infinite head run (left end), a finite body of
/// constant runs, and an optional infinite tail run (right end).
///
/// Canonical form: the tail absorbs as much of the body as the sequence
/// allows, then the head absorbs what it can from the front. For constant
/// infinite runs this is the usual run-length encoding with distinct adjacent
/// values. Equal sequences have equal canonical forms.
class WeightProfile {
public:
    struct BodyRun {
        std::int64_t value;
        std::int64_t mult;
        friend bool operator==(const BodyRun&, const BodyRun&) = default;
    };

    static constexpr std::int64_t max_mult = std::int64_t{1} << 40;

    WeightProfile() : WeightProfile(OrderSpec(OrderKind::RightInfinite), {Run::infinite(0)}) {}

    /// `origin` (TwoSided only) is the slot of the first position after the
    /// head run; for a single bi-infinite run it anchors the pattern.
    WeightProfile(OrderSpec order, const std::vector<Run>& runs, std::int64_t origin = 1)
        : order_(std::move(order)) {
        if (runs.empty()) throw DomainError("a weight profile needs at least one run");
        for (const auto& r : runs) {
            if (r.is_infinite()) {
                if (r.values.empty()) throw DomainError("infinite run with empty pattern");
            } else {
                if (r.values.size() != 1) throw DomainError("finite runs carry exactly one value");
                if (*r.mult < 1 || *r.mult > max_mult) throw DomainError("run multiplicity out of range");
                if (r.step != 0) throw DomainError("only infinite runs may carry a step");
            }
        }
        const auto kind = order_.kind();
        const std::size_t last = runs.size() - 1;
        auto expect_finite = [&](std::size_t from, std::size_t to) {
            for (std::size_t i = from; i < to; ++i)
                if (runs[i].is_infinite())
                    throw DomainError("only the end runs of a " + std::string(slinf::to_string(kind)) +
                                      " profile may be infinite");
        };
        auto qp_starting = [](const Run& r, std::int64_t at) { return QuasiPeriodic(r.values, r.step, at); };
        auto qp_ending = [](const Run& r, std::int64_t at) {
            return QuasiPeriodic(r.values, r.step, at - static_cast<std::int64_t>(r.values.size()) + 1);
        };

        switch (kind) {
        case OrderKind::RightInfinite:
            if (!runs[last].is_infinite()) throw DomainError("right-infinite profile must end with an infinite run");
            expect_finite(0, last);
            body_start_ = 1;
            load_body(runs, 0, last);
            tail_ = qp_starting(runs[last], body_start_ + body_length());
            break;
        case OrderKind::LeftInfinite:
            if (!runs[0].is_infinite()) throw DomainError("left-infinite profile must start with an infinite run");
            expect_finite(1, runs.size());
            load_body(runs, 1, runs.size());
            body_start_ = -body_length();
            head_ = qp_ending(runs[0], body_start_ - 1);
            break;
        case OrderKind::TwoSided:
            if (!runs[0].is_infinite() || !runs[last].is_infinite())
                throw DomainError("two-sided profile must start and end with infinite runs");
            body_start_ = origin;
            if (runs.size() == 1) {
                head_ = tail_ = qp_starting(runs[0], origin);
            } else {
                expect_finite(1, last);
                load_body(runs, 1, last);
                head_ = qp_ending(runs[0], origin - 1);
                tail_ = qp_starting(runs[last], origin + body_length());
            }
            break;
        }
        canonicalize();
    }

    const OrderSpec& order() const noexcept { return order_; }
    OrderKind kind() const noexcept { return order_.kind(); }
    const std::optional<QuasiPeriodic>& head() const noexcept { return head_; }
    const std::optional<QuasiPeriodic>& tail() const noexcept { return tail_; }
    const std::vector<BodyRun>& body() const noexcept { return body_; }
    std::int64_t body_start() const noexcept { return body_start_; }
    std::int64_t tail_start() const noexcept { return body_start_ + body_length(); }
    std::int64_t body_length() const {
        std::int64_t n = 0;
        for (const auto& r : body_) n += r.mult;
        return n;
    }

    /// A two-sided profile given by one quasi-periodic sequence on all of Z.
    bool is_bi_infinite() const { return kind() == OrderKind::TwoSided && body_.empty() && head_ == tail_; }

    /// Value at a chart slot.
    std::int64_t value_at_slot(std::int64_t x) const {
        if (!valid_position(kind(), x)) throw DomainError("slot outside the order chart");
        if (x < body_start_) return (*head_)(x);
        std::int64_t at = body_start_;
        for (const auto& r : body_) {
            if (x < at + r.mult) return r.value;
            at += r.mult;
        }
        return (*tail_)(x);
    }

    /// λ_p for an index of the underlying set (relabeling applied).
    std::int64_t value_at(Position p) const { return value_at_slot(order_.slot(p).index); }

    /// Values along ≺ on the n-th standard window.
    FiniteWeight restrict_to_window(std::size_t n) const {
        FiniteWeight out;
        for (auto s : window_slots(kind(), n)) out.coords.push_back(value_at_slot(s));
        return out;
    }

    /// Run presentation along the order, matching the constructor's input
    /// conventions (head patterns end at the head's last slot, tail patterns
    /// start at the tail's first slot).
    std::vector<Run> runs() const {
        std::vector<Run> out;
        if (is_bi_infinite()) {
            out.push_back(export_run(*tail_, body_start_));
            return out;
        }
        if (head_) out.push_back(export_run(*head_, body_start_ - head_->period()));
        for (const auto& r : body_) out.push_back(Run::finite(r.value, r.mult));
        if (tail_) out.push_back(export_run(*tail_, tail_start()));
        return out;
    }

    /// Origin argument that reproduces this profile from runs().
    std::int64_t origin() const noexcept { return body_start_; }

    WeightProfile shifted(std::int64_t c) const {
        WeightProfile w = *this;
        for (auto& r : w.body_) r.value += c;
        if (w.head_) w.head_ = w.head_->shifted(c);
        if (w.tail_) w.tail_ = w.tail_->shifted(c);
        return w;
    }

    WeightProfile with_order(OrderSpec o) const {
        if (o.kind() != kind()) throw DomainError("relabeling cannot change the order kind");
        WeightProfile w = *this;
        w.order_ = std::move(o);
        return w;
    }

    std::string to_string() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& r : runs()) {
            if (!first) os << ' ';
            first = false;
            if (r.is_infinite()) {
                os << '[' << detail::join(r.values) << "]^inf";
                if (r.step != 0) os << "(step " << r.step << ')';
            } else {
                os << r.values[0];
                if (*r.mult != 1) os << '^' << *r.mult;
            }
        }
        if (kind() == OrderKind::TwoSided) os << " @" << origin();
        return os.str();
    }

    friend bool operator==(const WeightProfile&, const WeightProfile&) = default;

private:
    friend WeightProfile star(const WeightProfile&);

    WeightProfile(OrderSpec order, std::optional<QuasiPeriodic> head, std::vector<BodyRun> body,
                  std::optional<QuasiPeriodic> tail, std::int64_t body_start)
        : order_(std::move(order)), head_(std::move(head)), body_(std::move(body)), tail_(std::move(tail)),
          body_start_(body_start) {
        canonicalize();
    }

    static Run export_run(const QuasiPeriodic& f, std::int64_t from) {
        return Run::periodic(f.values(from, f.period()), f.step());
    }

    void load_body(const std::vector<Run>& runs, std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i) body_.push_back({runs[i].values[0], *runs[i].mult});
        if (body_length() > max_mult) throw DomainError("profile body too long");
    }

    void canonicalize() {
        std::vector<BodyRun> merged;
        for (const auto& r : body_) {
            if (!merged.empty() && merged.back().value == r.value)
                merged.back().mult += r.mult;
            else
                merged.push_back(r);
        }
        body_ = std::move(merged);

        // tail absorbs the back of the body
        if (tail_) {
            while (!body_.empty()) {
                auto& b = body_.back();
                const std::int64_t x = tail_start() - 1;
                if ((*tail_)(x) != b.value) break;
                if (tail_->is_constant() || b.mult == 1) {
                    body_.pop_back();
                } else {
                    --b.mult;
                }
            }
        }
        // head absorbs the front of the body
        if (head_) {
            while (!body_.empty()) {
                auto& b = body_.front();
                if ((*head_)(body_start_) != b.value) break;
                if (head_->is_constant()) {
                    body_start_ += b.mult;
                    body_.erase(body_.begin());
                } else {
                    ++body_start_;
                    if (--b.mult == 0) body_.erase(body_.begin());
                }
            }
        }
        if (kind() == OrderKind::LeftInfinite) {
            // body always ends at -1
            body_start_ = -body_length();
        }
        if (head_ && tail_ && body_.empty()) {
            if (*head_ == *tail_) {
                body_start_ = 1;
            } else {
                // the tail takes over head slots while the two sequences agree;
                // distinct quasi-periodic sequences agree on fewer than
                // lcm(periods) + 1 consecutive slots
                const std::int64_t bound = std::lcm(head_->period(), tail_->period()) + 1;
                for (std::int64_t i = 0; i < bound; ++i) {
                    const std::int64_t x = body_start_ - 1;
                    if ((*head_)(x) != (*tail_)(x)) break;
                    --body_start_;
                }
            }
        }
    }

    OrderSpec order_;
    std::optional<QuasiPeriodic> head_;
    std::vector<BodyRun> body_;
    std::optional<QuasiPeriodic> tail_;
    std::int64_t body_start_ = 1;
};

/// λ_i − λ_j ≥ 0 for every i ≺ j.
inline bool is_dominant(const WeightProfile& w) {
    if (w.head() && !w.head()->non_increasing()) return false;
    if (w.tail() && !w.tail()->non_increasing()) return false;
    if (w.is_bi_infinite()) return true;
    std::vector<std::int64_t> chain;
    if (w.head()) chain.push_back((*w.head())(w.body_start() - 1));
    for (const auto& r : w.body()) chain.push_back(r.value);
    if (w.tail()) chain.push_back((*w.tail())(w.tail_start()));
    return std::is_sorted(chain.rbegin(), chain.rend());
}

struct ImageSize {
    bool finite = false;
    std::size_t cardinality = 0;  ///< meaningful only when finite
};

/// |im λ| < ∞, with the number of distinct values when finite.
inline ImageSize image_is_finite(const WeightProfile& w) {
    if ((w.head() && w.head()->step() != 0) || (w.tail() && w.tail()->step() != 0)) return {false, 0};
    std::set<std::int64_t> values;
    for (const auto& r : w.body()) values.insert(r.value);
    if (w.head()) values.insert(w.head()->pattern().begin(), w.head()->pattern().end());
    if (w.tail()) values.insert(w.tail()->pattern().begin(), w.tail()->pattern().end());
    return {true, values.size()};
}

/// μ_i = η_i for all but finitely many positions.
inline bool tail_equivalent(const WeightProfile& mu, const WeightProfile& eta) {
    if (mu.order() != eta.order()) throw DomainError("tail comparison across different orders");
    return mu.head() == eta.head() && mu.tail() == eta.tail();
}

/// λ* = (..., -λ_3, -λ_2, -λ_1): reverses a one-sided profile and negates its
/// values. Maps right-infinite profiles to left-infinite ones and back.
inline WeightProfile star(const WeightProfile& w) {
    if (w.kind() == OrderKind::TwoSided) throw DomainError("star is defined for one-sided orders only");
    const OrderKind target =
        w.kind() == OrderKind::RightInfinite ? OrderKind::LeftInfinite : OrderKind::RightInfinite;
    std::vector<OrderSpec::Transposition> rel;
    for (auto [a, b] : w.order().relabeling()) rel.emplace_back(-a, -b);
    OrderSpec order(target, rel);

    std::vector<WeightProfile::BodyRun> body;
    for (auto it = w.body().rbegin(); it != w.body().rend(); ++it) body.push_back({-it->value, it->mult});

    // g(y) = -f(-y); period and step are preserved
    auto mirror = [](const QuasiPeriodic& f) {
        std::vector<std::int64_t> pat;
        for (std::int64_t y = 0; y < f.period(); ++y) pat.push_back(-f(-y));
        return QuasiPeriodic(pat, f.step(), 0);
    };
    if (w.kind() == OrderKind::RightInfinite) {
        const std::int64_t len = w.body_length();
        return WeightProfile(order, mirror(*w.tail()), body, std::nullopt, -len);
    }
    return WeightProfile(order, std::nullopt, body, mirror(*w.head()), 1);
}

/// Subtracts a constant so that the tail run (head run for left-infinite
/// orders) starts at value 0.
inline WeightProfile normalize_shift(const WeightProfile& w) {
    if (!is_dominant(w)) throw DomainError("normalize_shift requires a dominant profile");
    const std::int64_t c = w.kind() == OrderKind::LeftInfinite ? w.value_at_slot(w.body_start() - 1)
                                                               : w.value_at_slot(w.tail_start());
    return w.shifted(-c);
}

/// Finite discrepancy of a dominant finite-image one-sided profile from its
/// constant end value, read as a partition.
inline Partition discrepancy_partition(const WeightProfile& w) {
    if (w.kind() == OrderKind::TwoSided) throw DomainError("discrepancy partition needs a one-sided order");
    if (!is_dominant(w)) throw DomainError("discrepancy partition needs a dominant profile");
    if (!image_is_finite(w).finite) throw DomainError("infinite image: no Young diagram");
    const WeightProfile n = normalize_shift(w);
    if (n.body_length() > 1'000'000) throw ResourceError("partition too long", 1'000'000);
    std::vector<std::int64_t> parts;
    for (const auto& r : n.body())
        for (std::int64_t i = 0; i < r.mult; ++i)
            parts.push_back(n.kind() == OrderKind::RightInfinite ? r.value : -r.value);
    std::sort(parts.rbegin(), parts.rend());
    return Partition(parts);
}

}  // namespace slinf
