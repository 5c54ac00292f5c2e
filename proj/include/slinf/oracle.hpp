#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "slinf/errors.hpp"
#include "slinf/finrep.hpp"
#include "slinf/linalg.hpp"
#include "slinf/weights.hpp"

/// Brute-force exact realizations of finite-dimensional simple sl(n)-modules.
///
/// L(λ) is built inside  ⊗_k S^{m_k}(Λ^k V),  m_k = λ_k − λ_{k+1}, where the
/// product of top wedges is a highest weight vector of weight λ; the module is
/// the span of all lowering-operator images of that vector, organized by
/// weight and reduced exactly over Q.
namespace slinf::oracle {

inline constexpr std::uint64_t default_oracle_cap = 200;

/// Chevalley generator matrices of an sl(n)-module in a weight basis.
/// Index i of e, f, h is the generator attached to the simple root
/// ε_{i+1} − ε_{i+2}.
struct MatrixModule {
    std::size_t n = 1;
    FiniteWeight highest;
    std::vector<FiniteWeight> weights;
    std::vector<RationalMatrix> e, f, h;

    std::size_t dim() const noexcept { return weights.size(); }
};

namespace detail {

using Key = std::vector<std::uint16_t>;
using AmbientVector = std::map<Key, Rational>;

class Ambient {
public:
    Ambient(std::size_t n, const std::vector<std::int64_t>& factor_powers) : n_(n) {
        for (std::size_t k = 1; k < n; ++k) {
            if (factor_powers[k - 1] == 0) continue;
            for (std::uint32_t s = 0; s < (1u << n); ++s)
                if (static_cast<std::size_t>(std::popcount(s)) == k) {
                    index_[s] = subsets_.size();
                    subsets_.push_back(s);
                }
        }
        top_.assign(subsets_.size(), 0);
        for (std::size_t k = 1; k < n; ++k)
            if (factor_powers[k - 1] > 0)
                top_[index_.at((1u << k) - 1)] = static_cast<std::uint16_t>(factor_powers[k - 1]);
    }

    const Key& top() const noexcept { return top_; }

    FiniteWeight weight(const Key& key) const {
        FiniteWeight w(std::vector<std::int64_t>(n_, 0));
        for (std::size_t v = 0; v < key.size(); ++v)
            if (key[v])
                for (std::size_t t = 0; t < n_; ++t)
                    if (subsets_[v] & (1u << t)) w[t] += key[v];
        return w;
    }

    /// E_{ij} acting as a derivation on the polynomial factors.
    AmbientVector apply(std::size_t i, std::size_t j, const AmbientVector& x) const {
        AmbientVector out;
        const std::uint32_t bi = 1u << i, bj = 1u << j;
        const std::uint32_t between = ((1u << std::max(i, j)) - 1) & ~((1u << (std::min(i, j) + 1)) - 1);
        for (const auto& [key, c] : x) {
            for (std::size_t v = 0; v < key.size(); ++v) {
                if (!key[v]) continue;
                const std::uint32_t s = subsets_[v];
                if (!(s & bj) || (s & bi)) continue;
                const std::uint32_t s2 = (s & ~bj) | bi;
                const int sign = (std::popcount(s & between) % 2) ? -1 : 1;
                Key k2 = key;
                --k2[v];
                ++k2[index_.at(s2)];
                auto& slot = out[k2];
                slot += c * (sign * static_cast<long>(key[v]));
            }
        }
        for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::uint32_t> subsets_;
    std::map<std::uint32_t, std::size_t> index_;
    Key top_;
};

/// Weight-graded span with rows in echelon form (row r vanishes on the pivots
/// of rows inserted before it, and has 1 on its own pivot).
struct WeightSpace {
    std::vector<std::size_t> members;  // global basis indices
    std::vector<Key> pivots;
};

}  // namespace detail

/// Explicit matrix realization of L(λ).
inline MatrixModule build_simple(const FiniteWeight& lam, std::uint64_t cap = default_oracle_cap) {
    if (lam.size() == 0) throw DomainError("weight of rank zero");
    if (!is_weakly_decreasing(lam)) throw DomainError("build_simple needs a dominant weight " + lam.to_string());
    const std::uint64_t expected = weyl_dim(lam);
    if (expected > cap)
        throw ResourceError("oracle module L" + lam.to_string() + " has dimension " + std::to_string(expected), cap);

    const std::size_t n = lam.size();
    if (n > 12) throw ResourceError("oracle rank too large", 12);
    MatrixModule m;
    m.n = n;
    m.highest = lam;
    const std::int64_t shift = lam[n - 1];
    if (n == 1) {
        m.weights.push_back(lam);
        return m;
    }

    std::vector<std::int64_t> powers(n - 1);
    for (std::size_t k = 1; k < n; ++k) {
        powers[k - 1] = lam[k - 1] - lam[k];
        if (powers[k - 1] > 60000) throw ResourceError("oracle weight too large", 60000);
    }
    detail::Ambient amb(n, powers);

    std::vector<detail::AmbientVector> basis;
    std::vector<FiniteWeight> gl_weights;
    std::map<FiniteWeight, detail::WeightSpace> spaces;

    // reduces v inside the weight space; returns residual, writes coordinates
    auto reduce = [&](const detail::WeightSpace& ws, detail::AmbientVector v, std::map<std::size_t, Rational>* coords) {
        for (std::size_t r = 0; r < ws.members.size(); ++r) {
            auto it = v.find(ws.pivots[r]);
            if (it == v.end()) continue;
            const Rational c = it->second;
            if (coords) (*coords)[ws.members[r]] = c;
            for (const auto& [k, x] : basis[ws.members[r]]) {
                auto& slot = v[k];
                slot -= c * x;
                if (slot == 0) v.erase(k);
            }
        }
        return v;
    };

    auto add_vector = [&](detail::AmbientVector v, const FiniteWeight& w) {
        const detail::Key pivot = v.begin()->first;
        const Rational inv = 1 / v.begin()->second;
        for (auto& [k, x] : v) x *= inv;
        auto& ws = spaces[w];
        ws.members.push_back(basis.size());
        ws.pivots.push_back(pivot);
        basis.push_back(std::move(v));
        gl_weights.push_back(w);
    };

    add_vector({{amb.top(), Rational(1)}}, amb.weight(amb.top()));
    for (std::size_t next = 0; next < basis.size(); ++next) {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            auto v = amb.apply(i + 1, i, basis[next]);
            if (v.empty()) continue;
            FiniteWeight w = gl_weights[next];
            --w[i];
            ++w[i + 1];
            auto it = spaces.find(w);
            if (it != spaces.end()) v = reduce(it->second, std::move(v), nullptr);
            if (!v.empty()) add_vector(std::move(v), w);
            if (basis.size() > expected)
                throw ConsistencyError("lowering closure exceeded the Weyl dimension of L" + lam.to_string());
        }
    }
    if (basis.size() != expected)
        throw ConsistencyError("lowering closure has dimension " + std::to_string(basis.size()) +
                               ", expected " + std::to_string(expected));

    const std::size_t dim = basis.size();
    auto coordinates = [&](const detail::AmbientVector& v, const FiniteWeight& w) {
        std::map<std::size_t, Rational> coords;
        if (v.empty()) return coords;
        auto it = spaces.find(w);
        if (it == spaces.end()) throw ConsistencyError("generator image outside the module support");
        if (!reduce(it->second, v, &coords).empty()) throw ConsistencyError("generator image outside the module");
        return coords;
    };

    for (std::size_t i = 0; i + 1 < n; ++i) {
        RationalMatrix e(dim, dim), f(dim, dim), h(dim, dim);
        for (std::size_t g = 0; g < dim; ++g) {
            FiniteWeight up = gl_weights[g], down = gl_weights[g];
            ++up[i];
            --up[i + 1];
            --down[i];
            ++down[i + 1];
            for (const auto& [r, c] : coordinates(amb.apply(i, i + 1, basis[g]), up)) e.set(r, g, c);
            for (const auto& [r, c] : coordinates(amb.apply(i + 1, i, basis[g]), down)) f.set(r, g, c);
            h.set(g, g, gl_weights[g][i] - gl_weights[g][i + 1]);
        }
        m.e.push_back(std::move(e));
        m.f.push_back(std::move(f));
        m.h.push_back(std::move(h));
    }
    for (const auto& w : gl_weights) m.weights.push_back(w.shifted(shift));
    return m;
}

/// Weight tally of the basis.
inline CharacterTable character_of(const MatrixModule& m) {
    CharacterTable t{m.n, m.highest, {}};
    for (const auto& w : m.weights) ++t.entries[w];
    return t;
}

/// Failed Chevalley/Serre relations, one message each; empty when all hold.
inline std::vector<std::string> relation_failures(const MatrixModule& m) {
    std::vector<std::string> out;
    const std::size_t r = m.n - 1;
    auto cartan = [](std::size_t i, std::size_t j) -> long {
        if (i == j) return 2;
        return (i + 1 == j || j + 1 == i) ? -1 : 0;
    };
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t g = 0; g < m.dim(); ++g) {
            const auto& row = m.h[i].row(g);
            const Rational expect = m.weights[g][i] - m.weights[g][i + 1];
            if (row.size() > 1 || m.h[i].at(g, g) != expect) out.push_back("h" + std::to_string(i + 1) + " not diagonal");
        }
        for (std::size_t j = 0; j < r; ++j) {
            const std::string tag = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
            if (commutator(m.h[i], m.e[j]) != Rational(cartan(j, i)) * m.e[j]) out.push_back("[h,e]" + tag);
            if (commutator(m.h[i], m.f[j]) != Rational(-cartan(j, i)) * m.f[j]) out.push_back("[h,f]" + tag);
            const auto ef = commutator(m.e[i], m.f[j]);
            if (i == j ? ef != m.h[i] : !ef.is_zero()) out.push_back("[e,f]" + tag);
            if (i == j) continue;
            if (cartan(i, j) == 0) {
                if (!commutator(m.e[i], m.e[j]).is_zero()) out.push_back("[e,e]" + tag);
                if (!commutator(m.f[i], m.f[j]).is_zero()) out.push_back("[f,f]" + tag);
            } else {
                if (!commutator(m.e[i], commutator(m.e[i], m.e[j])).is_zero()) out.push_back("Serre e" + tag);
                if (!commutator(m.f[i], commutator(m.f[i], m.f[j])).is_zero()) out.push_back("Serre f" + tag);
            }
        }
    }
    return out;
}

/// Matrices of E_{ab} (0-based, a ≠ b < n0) obtained from the generators by
/// commutators.
inline std::map<std::pair<std::size_t, std::size_t>, RationalMatrix> root_vectors(const MatrixModule& m,
                                                                                  std::size_t n0) {
    if (n0 > m.n) throw DomainError("subalgebra rank exceeds module rank");
    std::map<std::pair<std::size_t, std::size_t>, RationalMatrix> out;
    for (std::size_t len = 1; len < n0; ++len)
        for (std::size_t a = 0; a + len < n0; ++a) {
            const std::size_t b = a + len;
            if (len == 1) {
                out[{a, b}] = m.e[a];
                out[{b, a}] = m.f[a];
            } else {
                out[{a, b}] = commutator(out.at({a, b - 1}), out.at({b - 1, b}));
                out[{b, a}] = commutator(out.at({b, b - 1}), out.at({b - 1, a}));
            }
        }
    return out;
}

/// (A^{-1})_{kl} for the sl(n) Cartan matrix, 0-based k, l < n − 1.
inline Rational inverse_cartan(std::size_t n, std::size_t k, std::size_t l) {
    const long a = static_cast<long>(std::min(k, l)) + 1, b = static_cast<long>(std::max(k, l)) + 1;
    Rational v(a * (static_cast<long>(n) - b), static_cast<long>(n));
    v.canonicalize();
    return v;
}

/// Quadratic Casimir of sl(n) for the trace form, Σ_{a≠b} E_ab E_ba + Σ A⁻¹_kl h_k h_l.
inline RationalMatrix casimir_matrix(const MatrixModule& m) {
    RationalMatrix c(m.dim(), m.dim());
    const auto roots = root_vectors(m, m.n);
    for (const auto& [ab, x] : roots) c.axpy(1, x * roots.at({ab.second, ab.first}));
    for (std::size_t k = 0; k + 1 < m.n; ++k)
        for (std::size_t l = 0; l + 1 < m.n; ++l) c.axpy(inverse_cartan(m.n, k, l), m.h[k] * m.h[l]);
    return c;
}

/// The scalar by which the Casimir acts; throws if the matrix is not scalar.
inline Rational casimir_scalar(const MatrixModule& m) {
    auto s = casimir_matrix(m).scalar_value();
    if (!s) throw ConsistencyError("Casimir matrix is not scalar");
    return *s;
}

struct HighestVector {
    FiniteWeight weight;
    DenseVector vector;  ///< coordinates in the module basis
};

/// Joint kernel of e_first, ..., e_last (1-based generator indices, empty
/// when first > last), weight space by weight space.
inline std::vector<HighestVector> highest_vectors_for_subrange(const MatrixModule& m, std::size_t first,
                                                               std::size_t last) {
    if (first <= last && (first < 1 || last > m.n - 1)) throw DomainError("generator range outside 1..n-1");
    std::map<FiniteWeight, std::vector<std::size_t>, std::greater<>> by_weight;
    for (std::size_t g = 0; g < m.dim(); ++g) by_weight[m.weights[g]].push_back(g);

    std::vector<HighestVector> out;
    for (const auto& [w, cols] : by_weight) {
        std::map<std::size_t, std::size_t> local;
        for (std::size_t c = 0; c < cols.size(); ++c) local[cols[c]] = c;
        EchelonBasis constraints(cols.size());
        for (std::size_t i = first; i <= last && first <= last; ++i) {
            std::map<std::size_t, DenseVector> rows;
            const auto& e = m.e[i - 1];
            for (std::size_t r = 0; r < e.rows(); ++r)
                for (const auto& [c, v] : e.row(r)) {
                    auto it = local.find(c);
                    if (it == local.end()) continue;
                    auto& row = rows.try_emplace(r, cols.size(), Rational(0)).first->second;
                    row[it->second] = v;
                }
            for (const auto& [r, row] : rows) constraints.insert(row);
        }
        for (const auto& k : constraints.nullspace()) {
            DenseVector full(m.dim(), Rational(0));
            for (std::size_t c = 0; c < cols.size(); ++c) full[cols[c]] = k[c];
            out.push_back({w, std::move(full)});
        }
    }
    return out;
}

/// Basis of sl(n0): all E_ab (a ≠ b) in lexicographic order, then h_1..h_{n0-1}.
struct LieBasis {
    struct Element {
        bool cartan;
        std::size_t a, b;  // root vector E_ab, or h_{a+1} when cartan
    };

    explicit LieBasis(std::size_t n0) : n(n0) {
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (a != b) elements.push_back({false, a, b});
        for (std::size_t k = 0; k + 1 < n; ++k) elements.push_back({true, k, k});
    }

    std::size_t size() const noexcept { return elements.size(); }

    /// n0 × n0 matrix of an element (row-major).
    std::vector<Rational> gl_matrix(std::size_t idx) const {
        std::vector<Rational> x(n * n, Rational(0));
        const auto& el = elements[idx];
        if (el.cartan) {
            x[el.a * n + el.a] = 1;
            x[(el.a + 1) * n + el.a + 1] = -1;
        } else {
            x[el.a * n + el.b] = 1;
        }
        return x;
    }

    /// Coordinates of a traceless n0 × n0 matrix.
    DenseVector coordinates(const std::vector<Rational>& x) const {
        DenseVector out(size(), Rational(0));
        for (std::size_t idx = 0; idx < size(); ++idx) {
            const auto& el = elements[idx];
            if (!el.cartan) out[idx] = x[el.a * n + el.b];
        }
        Rational running = 0;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            running += x[k * n + k];
            out[n * (n - 1) + k] = running;
        }
        return out;
    }

    DenseVector bracket(std::size_t p, std::size_t q) const {
        const auto x = gl_matrix(p), y = gl_matrix(q);
        std::vector<Rational> z(n * n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) z[i * n + j] += x[i * n + k] * y[k * n + j] - y[i * n + k] * x[k * n + j];
        return coordinates(z);
    }

    std::size_t n;
    std::vector<Element> elements;
};

/// Ordered PBW monomials of degree ≤ d in a basis of the given size.
inline std::vector<std::vector<std::size_t>> pbw_monomials(std::size_t basis_size, std::size_t degree) {
    std::vector<std::vector<std::size_t>> out{{}};
    std::vector<std::vector<std::size_t>> frontier{{}};
    for (std::size_t d = 1; d <= degree; ++d) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& mono : frontier)
            for (std::size_t a = mono.empty() ? 0 : mono.back(); a < basis_size; ++a) {
                auto m2 = mono;
                m2.push_back(a);
                next.push_back(m2);
            }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

/// Matrices of the sl(n0) basis elements acting on a module of rank ≥ n0
/// (sl(n0) embedded in the upper-left corner).
inline std::vector<RationalMatrix> basis_matrices(const MatrixModule& m, const LieBasis& basis) {
    const auto roots = root_vectors(m, basis.n);
    std::vector<RationalMatrix> out;
    for (const auto& el : basis.elements) out.push_back(el.cartan ? m.h[el.a] : roots.at({el.a, el.b}));
    return out;
}

inline constexpr std::uint64_t default_annihilator_work = 20'000'000;

/// Elements of U(sl(n0)) of PBW degree ≤ d annihilating every module in a list.
struct TruncatedAnnihilator {
    std::size_t n0 = 0;
    std::size_t degree = 0;
    std::vector<std::vector<std::size_t>> monomials;
    std::vector<DenseVector> kernel;  ///< coefficient vectors over `monomials`

    std::size_t dimension() const noexcept { return kernel.size(); }

    bool contains(const DenseVector& element) const { return span_of(monomials.size(), kernel).contains(element); }

    bool same_as(const TruncatedAnnihilator& other) const {
        return monomials == other.monomials &&
               span_of(monomials.size(), kernel) == span_of(monomials.size(), other.kernel);
    }
};

/// Matrix of a PBW combination acting on a module.
inline RationalMatrix evaluate(const MatrixModule& m, const LieBasis& basis,
                               const std::vector<std::vector<std::size_t>>& monomials, const DenseVector& coeffs) {
    const auto xs = basis_matrices(m, basis);
    RationalMatrix out(m.dim(), m.dim());
    for (std::size_t k = 0; k < monomials.size(); ++k) {
        if (coeffs[k] == 0) continue;
        RationalMatrix term = RationalMatrix::identity(m.dim());
        for (auto a : monomials[k]) term = term * xs[a];
        out.axpy(coeffs[k], term);
    }
    return out;
}

/// ∩_M Ann_{≤d} M inside U(sl(n0)), by exact elimination over the entries of
/// all monomial matrices. Work (#monomials × Σ dim²) is bounded by
/// `work_bound`; d ≤ 2.
inline TruncatedAnnihilator truncated_annihilator(const std::vector<const MatrixModule*>& modules, std::size_t degree,
                                                  std::size_t n0 = 0,
                                                  std::uint64_t work_bound = default_annihilator_work) {
    if (degree > 2) throw DomainError("truncated annihilators are limited to degree 2");
    if (modules.empty()) throw DomainError("no modules given");
    if (n0 == 0) {
        n0 = modules.front()->n;
        for (const auto* m : modules) n0 = std::min(n0, m->n);
    }
    for (const auto* m : modules)
        if (m->n < n0) throw DomainError("module rank below the subalgebra rank");

    const LieBasis basis(n0);
    TruncatedAnnihilator out{n0, degree, pbw_monomials(basis.size(), degree), {}};
    const std::size_t count = out.monomials.size();
    std::uint64_t work = 0;
    for (const auto* m : modules) work += static_cast<std::uint64_t>(m->dim()) * m->dim();
    if (work * count > work_bound) throw ResourceError("truncated annihilator too large", work_bound);

    EchelonBasis rows(count);
    for (const auto* m : modules) {
        if (rows.rank() == count) break;
        const auto xs = basis_matrices(*m, basis);
        for (std::size_t r = 0; r < m->dim() && rows.rank() < count; ++r) {
            std::map<std::size_t, DenseVector> by_column;
            auto emit = [&](std::size_t k, const RationalMatrix::Row& row) {
                for (const auto& [c, v] : row)
                    by_column.try_emplace(c, count, Rational(0)).first->second[k] = v;
            };
            for (std::size_t k = 0; k < count; ++k) {
                const auto& mono = out.monomials[k];
                if (mono.empty()) {
                    emit(k, {{r, Rational(1)}});
                } else if (mono.size() == 1) {
                    emit(k, xs[mono[0]].row(r));
                } else {
                    emit(k, xs[mono[0]].row_times(r, xs[mono[1]]));
                }
            }
            for (const auto& [c, v] : by_column) {
                rows.insert(v);
                if (rows.rank() == count) break;
            }
        }
    }
    out.kernel = rows.nullspace();
    return out;
}

/// PBW coordinates (degree ≤ 2 monomials of LieBasis(n0)) of C − c·1, C the
/// trace-form Casimir of sl(n0).
inline DenseVector casimir_minus_scalar(std::size_t n0, const Rational& c,
                                        const std::vector<std::vector<std::size_t>>& monomials) {
    const LieBasis basis(n0);
    std::map<std::vector<std::size_t>, std::size_t> index;
    for (std::size_t k = 0; k < monomials.size(); ++k) index[monomials[k]] = k;
    DenseVector out(monomials.size(), Rational(0));
    // x_p x_q = x_q x_p + [x_p, x_q] puts a product in PBW order
    auto add_product = [&](std::size_t p, std::size_t q, const Rational& s) {
        if (p <= q) {
            out[index.at({p, q})] += s;
            return;
        }
        out[index.at({q, p})] += s;
        const auto br = basis.bracket(p, q);
        for (std::size_t t = 0; t < br.size(); ++t)
            if (br[t] != 0) out[index.at({t})] += s * br[t];
    };
    auto find = [&](bool cartan, std::size_t a, std::size_t b) {
        for (std::size_t t = 0; t < basis.size(); ++t) {
            const auto& el = basis.elements[t];
            if (el.cartan == cartan && el.a == a && el.b == b) return t;
        }
        throw DomainError("basis element not found");
    };
    for (std::size_t a = 0; a < n0; ++a)
        for (std::size_t b = 0; b < n0; ++b)
            if (a != b) add_product(find(false, a, b), find(false, b, a), 1);
    for (std::size_t k = 0; k + 1 < n0; ++k)
        for (std::size_t l = 0; l + 1 < n0; ++l) add_product(find(true, k, k), find(true, l, l), inverse_cartan(n0, k, l));
    out[index.at({})] -= c;
    return out;
}

}  // namespace slinf::oracle
