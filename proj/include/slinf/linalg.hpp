#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "slinf/errors.hpp"

namespace slinf {

using Rational = mpq_class;
using DenseVector = std::vector<Rational>;

/// Exact rational matrix with sparse rows.
class RationalMatrix {
public:
    using Row = std::map<std::size_t, Rational>;

    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static RationalMatrix identity(std::size_t n) {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }
    const Row& row(std::size_t r) const { return rows_[r]; }

    Rational at(std::size_t r, std::size_t c) const {
        auto it = rows_[r].find(c);
        return it == rows_[r].end() ? Rational(0) : it->second;
    }

    void set(std::size_t r, std::size_t c, const Rational& v) {
        if (v == 0)
            rows_[r].erase(c);
        else
            rows_[r][c] = v;
    }

    void add_to(std::size_t r, std::size_t c, const Rational& v) {
        if (v == 0) return;
        auto& slot = rows_[r][c];
        slot += v;
        if (slot == 0) rows_[r].erase(c);
    }

    std::size_t nonzeros() const {
        std::size_t n = 0;
        for (const auto& r : rows_) n += r.size();
        return n;
    }

    bool is_zero() const { return nonzeros() == 0; }

    /// Row r of (*this) * rhs.
    Row row_times(std::size_t r, const RationalMatrix& rhs) const {
        Row out;
        for (const auto& [t, a] : rows_[r])
            for (const auto& [c, b] : rhs.rows_[t]) {
                auto& slot = out[c];
                slot += a * b;
            }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
        if (a.cols() != b.rows()) throw DomainError("matrix shape mismatch in product");
        RationalMatrix out(a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) out.rows_[r] = a.row_times(r, b);
        return out;
    }

    friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
        a.axpy(1, b);
        return a;
    }

    friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
        a.axpy(-1, b);
        return a;
    }

    friend RationalMatrix operator*(const Rational& s, RationalMatrix a) {
        if (s == 0) return RationalMatrix(a.rows(), a.cols());
        for (auto& r : a.rows_)
            for (auto& [c, v] : r) v *= s;
        return a;
    }

    /// this += s * b
    void axpy(const Rational& s, const RationalMatrix& b) {
        if (rows() != b.rows() || cols() != b.cols()) throw DomainError("matrix shape mismatch in sum");
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& [c, v] : b.rows_[r]) add_to(r, c, s * v);
    }

    /// The scalar c when the matrix equals c·1.
    std::optional<Rational> scalar_value() const {
        if (rows() != cols()) return std::nullopt;
        if (rows() == 0) return Rational(0);
        const Rational c = at(0, 0);
        for (std::size_t r = 0; r < rows(); ++r) {
            for (const auto& [col, v] : rows_[r])
                if (col != r) return std::nullopt;
            if (at(r, r) != c) return std::nullopt;
        }
        return c;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::vector<Row> rows_;
    std::size_t cols_ = 0;
};

inline RationalMatrix commutator(const RationalMatrix& a, const RationalMatrix& b) { return a * b - b * a; }

/// Row space of dense vectors kept in reduced row echelon form.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    const std::vector<DenseVector>& rows() const noexcept { return rows_; }

    /// Reduces v modulo the current span.
    DenseVector reduce(DenseVector v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k) {
            const Rational c = v[pivots_[k]];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (rows_[k][j] != 0) v[j] -= c * rows_[k][j];
        }
        return v;
    }

    bool contains(const DenseVector& v) const {
        auto r = reduce(v);
        for (const auto& x : r)
            if (x != 0) return false;
        return true;
    }

    /// Adds v to the span; returns false if it was already there.
    bool insert(const DenseVector& v) {
        if (v.size() != dim_) throw DomainError("vector length mismatch");
        DenseVector r = reduce(v);
        std::size_t p = 0;
        while (p < dim_ && r[p] == 0) ++p;
        if (p == dim_) return false;
        const Rational inv = 1 / r[p];
        for (auto& x : r) x *= inv;
        for (auto& row : rows_) {
            const Rational c = row[p];
            if (c == 0) continue;
            for (std::size_t j = 0; j < dim_; ++j)
                if (r[j] != 0) row[j] -= c * r[j];
        }
        // keep rows sorted by pivot so the form is canonical
        std::size_t at = 0;
        while (at < pivots_.size() && pivots_[at] < p) ++at;
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
        pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(at), p);
        return true;
    }

    /// Basis of {x : row · x = 0 for every row}.
    std::vector<DenseVector> nullspace() const {
        std::vector<bool> is_pivot(dim_, false);
        for (auto p : pivots_) is_pivot[p] = true;
        std::vector<DenseVector> out;
        for (std::size_t f = 0; f < dim_; ++f) {
            if (is_pivot[f]) continue;
            DenseVector x(dim_, Rational(0));
            x[f] = 1;
            for (std::size_t k = 0; k < rows_.size(); ++k) x[pivots_[k]] = -rows_[k][f];
            out.push_back(std::move(x));
        }
        return out;
    }

    friend bool operator==(const EchelonBasis& a, const EchelonBasis& b) {
        return a.dim_ == b.dim_ && a.rows_ == b.rows_;
    }

private:
    std::size_t dim_;
    std::vector<DenseVector> rows_;
    std::vector<std::size_t> pivots_;
};

inline EchelonBasis span_of(std::size_t dim, const std::vector<DenseVector>& vectors) {
    EchelonBasis e(dim);
    for (const auto& v : vectors) e.insert(v);
    return e;
}

}  // namespace slinf
