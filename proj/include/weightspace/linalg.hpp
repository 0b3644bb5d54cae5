#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "weightspace/errors.hpp"

namespace wspace {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;
using RationalVector = std::vector<Rational>;

/// "p/q", or "p" when q = 1.
inline std::string to_string(const Rational& r) {
    const Integer& num = boost::multiprecision::numerator(r);
    const Integer& den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Inverse of to_string. Throws InputError on malformed text or a zero denominator.
inline Rational parse_rational(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i == s.size() ||
            !std::all_of(s.begin() + i, s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
            throw InputError("malformed rational '" + std::string(text) + "'");
        }
        return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Integer den = parse_int(text.substr(slash + 1));
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_int(text.substr(0, slash)), den);
}

/// A homogeneous linear equation coeffs · w = 0 over a fixed index set, tagged
/// with whatever produced it.
template <class Provenance>
struct Restriction {
    RationalVector coeffs;
    Provenance provenance;
};

/// Canonical basis of a subspace of Q^ambient.
///
/// Rows are in reduced row-echelon form: pivot columns strictly increase, each
/// pivot is 1, and every other entry in a pivot column is 0. The representation
/// is unique for a given subspace, so equality of spaces is equality of bases.
class WeightSpace {
public:
    WeightSpace() = default;

    /// Spans `vectors` (any spanning set) and canonicalizes.
    WeightSpace(std::size_t ambient, std::vector<RationalVector> vectors)
        : ambient_(ambient), basis_(std::move(vectors)) {
        for (const auto& v : basis_) {
            if (v.size() != ambient_) throw InputError("vector length does not match ambient dimension");
        }
        reduce_rows(basis_, ambient_, pivots_);
    }

    static WeightSpace full(std::size_t ambient) {
        std::vector<RationalVector> rows(ambient, RationalVector(ambient, Rational(0)));
        for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
        return WeightSpace(ambient, std::move(rows));
    }

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<RationalVector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    /// True iff w lies in the span of the basis.
    bool contains(std::span<const Rational> w) const {
        if (w.size() != ambient_) throw InputError("vector length does not match ambient dimension");
        RationalVector r(w.begin(), w.end());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            const Rational factor = r[pivots_[i]];
            if (factor == 0) continue;
            for (std::size_t j = pivots_[i]; j < ambient_; ++j) {
                if (basis_[i][j] != 0) r[j] -= factor * basis_[i][j];
            }
        }
        return std::all_of(r.begin(), r.end(), [](const Rational& x) { return x == 0; });
    }

    friend bool operator==(const WeightSpace& a, const WeightSpace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

    /// In-place Gauss-Jordan elimination; drops zero rows and records pivot columns.
    static void reduce_rows(std::vector<RationalVector>& rows, std::size_t cols,
                            std::vector<std::size_t>& pivots) {
        pivots.clear();
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
            std::size_t pick = rank;
            while (pick < rows.size() && rows[pick][col] == 0) ++pick;
            if (pick == rows.size()) continue;
            std::swap(rows[rank], rows[pick]);
            const Rational inv = 1 / rows[rank][col];
            for (std::size_t j = col; j < cols; ++j) {
                if (rows[rank][j] != 0) rows[rank][j] *= inv;
            }
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == rank || rows[i][col] == 0) continue;
                const Rational factor = rows[i][col];
                for (std::size_t j = col; j < cols; ++j) {
                    if (rows[rank][j] != 0) rows[i][j] -= factor * rows[rank][j];
                }
            }
            pivots.push_back(col);
            ++rank;
        }
        rows.resize(rank);
    }

private:
    std::size_t ambient_ = 0;
    std::vector<RationalVector> basis_;
    std::vector<std::size_t> pivots_;
};

/// Throws InputError when the ambient dimensions differ.
inline bool subspace_equal(const WeightSpace& a, const WeightSpace& b) {
    if (a.ambient() != b.ambient()) throw InputError("subspaces live in different ambient spaces");
    return a == b;
}

inline bool contains(const WeightSpace& space, std::span<const Rational> w) { return space.contains(w); }

/// Rank of a list of coefficient vectors of length `dim`.
inline std::size_t rank_of(std::vector<RationalVector> rows, std::size_t dim) {
    std::vector<std::size_t> pivots;
    WeightSpace::reduce_rows(rows, dim, pivots);
    return rows.size();
}

/// Solution space {w : c · w = 0 for every c} of a list of coefficient vectors.
inline WeightSpace nullspace(std::vector<RationalVector> rows, std::size_t dim) {
    for (const auto& r : rows) {
        if (r.size() != dim) {
            throw InputError("restriction has " + std::to_string(r.size()) + " coefficients, expected " +
                             std::to_string(dim));
        }
    }
    // Pipelines emit the same equation many times; scale each row to a leading 1
    // and drop repeats before eliminating.
    std::vector<RationalVector> unique_rows;
    for (auto& r : rows) {
        auto lead = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
        if (lead == r.end()) continue;
        const Rational inv = 1 / *lead;
        for (auto it = lead; it != r.end(); ++it) *it *= inv;
        unique_rows.push_back(std::move(r));
    }
    std::sort(unique_rows.begin(), unique_rows.end());
    unique_rows.erase(std::unique(unique_rows.begin(), unique_rows.end()), unique_rows.end());

    std::vector<std::size_t> pivots;
    WeightSpace::reduce_rows(unique_rows, dim, pivots);

    std::vector<char> is_pivot(dim, 0);
    for (auto p : pivots) is_pivot[p] = 1;
    std::vector<RationalVector> kernel;
    for (std::size_t free = 0; free < dim; ++free) {
        if (is_pivot[free]) continue;
        RationalVector v(dim, Rational(0));
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -unique_rows[i][free];
        kernel.push_back(std::move(v));
    }
    return WeightSpace(dim, std::move(kernel));
}

template <class Provenance>
WeightSpace nullspace(std::span<const Restriction<Provenance>> restrictions, std::size_t dim) {
    std::vector<RationalVector> rows;
    rows.reserve(restrictions.size());
    for (const auto& r : restrictions) rows.push_back(r.coeffs);
    return nullspace(std::move(rows), dim);
}

template <class Provenance>
WeightSpace nullspace(const std::vector<Restriction<Provenance>>& restrictions, std::size_t dim) {
    return nullspace(std::span<const Restriction<Provenance>>(restrictions), dim);
}

inline Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
    if (a.size() != b.size()) throw InputError("dot product of vectors with different lengths");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    }
    return s;
}

inline RationalVector ones(std::size_t n) { return RationalVector(n, Rational(1)); }

}  // namespace wspace
