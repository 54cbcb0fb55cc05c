#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fwps/checked.hpp"
#include "fwps/error.hpp"

namespace fwps {

using Int = std::int64_t;
using IntVec = std::vector<Int>;

// Matrix entries are arbitrary precision: Smith transform entries outgrow
// any fixed width even for 5x5 inputs with entries in [-20, 20]. Domain
// values (rays, weights, torsion, indexes) stay 64-bit; narrowing back is
// checked and raises Errc::Overflow.
using BigInt = boost::multiprecision::cpp_int;
using BigVec = std::vector<BigInt>;

inline Int narrow(const BigInt& v) {
    if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
        checked::fail_overflow();
    return v.convert_to<Int>();
}

inline IntVec narrow_vec(const BigVec& v) {
    IntVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = narrow(v[i]);
    return out;
}

/// Nonnegative GCD of all entries; 0 iff every entry is 0.
inline Int gcd_vector(const IntVec& v) {
    if (v.empty()) throw Error(Errc::ZeroVector, "gcd of empty vector");
    Int g = 0;
    for (Int x : v) g = std::gcd(g, checked::abs(x));
    return g;
}

inline BigInt gcd_vector_big(const BigVec& v) {
    BigInt g = 0;
    for (const BigInt& x : v) g = gcd(g, abs(x));
    return g;
}

/// v divided by its content; same direction, GCD 1.
inline IntVec primitivize(IntVec v) {
    Int g = gcd_vector(v);
    if (g == 0) throw Error(Errc::ZeroVector, "cannot primitivize the zero vector");
    if (g > 1)
        for (Int& x : v) x /= g;
    return v;
}

inline BigVec primitivize_big(BigVec v) {
    BigInt g = gcd_vector_big(v);
    if (g == 0) throw Error(Errc::ZeroVector, "cannot primitivize the zero vector");
    if (g > 1)
        for (BigInt& x : v) x /= g;
    return v;
}

/// Dense matrix of exact integers, row-major. Immutable in spirit: the
/// lattice algorithms below take and return values.
class IntMatrix {
public:
    IntMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
        if (rows < 1 || cols < 1)
            throw std::invalid_argument("IntMatrix dimensions must be positive");
    }

    static IntMatrix from_rows(const std::vector<IntVec>& rows) {
        if (rows.empty() || rows.front().empty())
            throw std::invalid_argument("from_rows: empty input");
        IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
        for (int i = 0; i < m.rows(); ++i) {
            if (static_cast<int>(rows[i].size()) != m.cols())
                throw std::invalid_argument("from_rows: ragged rows");
            for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
        }
        return m;
    }

    static IntMatrix from_columns(const std::vector<IntVec>& cols) {
        if (cols.empty() || cols.front().empty())
            throw std::invalid_argument("from_columns: empty input");
        IntMatrix m(static_cast<int>(cols.front().size()), static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols(); ++j) {
            if (static_cast<int>(cols[j].size()) != m.rows())
                throw std::invalid_argument("from_columns: ragged columns");
            for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
        }
        return m;
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    BigInt& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
    const BigInt& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

    BigVec row(int i) const {
        BigVec r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }

    BigVec column(int j) const {
        BigVec c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
        return t;
    }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        IntMatrix c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const BigInt& aik = a.at(i, k);
                if (aik == 0) continue;
                for (int j = 0; j < b.cols_; ++j) c.at(i, j) += aik * b.at(k, j);
            }
        return c;
    }

    BigVec apply(const IntVec& x) const {
        if (static_cast<int>(x.size()) != cols_)
            throw std::invalid_argument("matrix-vector shape mismatch");
        BigVec y(rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) y[i] += at(i, j) * x[j];
        return y;
    }

    friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
        for (int i = 0; i < m.rows_; ++i) {
            os << (i == 0 ? "[" : " ");
            for (int j = 0; j < m.cols_; ++j) os << (j ? " " : "[") << m.at(i, j);
            os << "]" << (i + 1 == m.rows_ ? "]" : "\n");
        }
        return os;
    }

private:
    int rows_;
    int cols_;
    std::vector<BigInt> data_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
inline BigInt determinant(IntMatrix a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const int n = a.rows();
    BigInt sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) / prev;
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

inline bool is_unimodular(const IntMatrix& a) {
    return a.rows() == a.cols() && abs(determinant(a)) == 1;
}

/// U*A*V = D with U, V unimodular and D diagonal, nonnegative, each entry
/// dividing the next; zero entries trail. Deterministic: the pivot is always
/// the nonzero entry of minimal absolute value, ties broken by smallest
/// (row, col).
struct SnfDecomposition {
    IntMatrix U;
    IntMatrix D;
    IntMatrix V;

    int rank() const {
        int r = 0, m = std::min(D.rows(), D.cols());
        while (r < m && D.at(r, r) != 0) ++r;
        return r;
    }

    /// Diagonal of D, narrowed; invariant factors of desk-scale inputs are
    /// bounded by the maximal minors.
    IntVec diagonal() const {
        int m = std::min(D.rows(), D.cols());
        IntVec d(m);
        for (int i = 0; i < m; ++i) d[i] = narrow(D.at(i, i));
        return d;
    }
};

namespace detail {

/// g = gcd(a, b) >= 0 together with x, y satisfying a*x + b*y = g.
inline Int exgcd(Int a, Int b, Int& x, Int& y) {
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return checked::abs(a);
    }
    Int x1, y1;
    Int g = exgcd(b, a % b, x1, y1);
    x = y1;
    y = checked::sub(x1, checked::mul(a / b, y1));
    return g;
}

inline void swap_rows(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}

inline void swap_cols(IntMatrix& m, int a, int b) {
    if (a == b) return;
    for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}

// row[dst] -= q * row[src]
inline void row_axpy(IntMatrix& m, int dst, const BigInt& q, int src) {
    for (int j = 0; j < m.cols(); ++j) m.at(dst, j) -= q * m.at(src, j);
}

inline void col_axpy(IntMatrix& m, int dst, const BigInt& q, int src) {
    for (int i = 0; i < m.rows(); ++i) m.at(i, dst) -= q * m.at(i, src);
}

inline void negate_row(IntMatrix& m, int i) {
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = -m.at(i, j);
}

} // namespace detail

inline SnfDecomposition smith_normal_form(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    SnfDecomposition s{IntMatrix::identity(m), a, IntMatrix::identity(n)};
    IntMatrix& D = s.D;
    IntMatrix& U = s.U;
    IntMatrix& V = s.V;

    const int steps = std::min(m, n);
    for (int k = 0; k < steps; ++k) {
        for (;;) {
            // pivot: minimal |entry| over the trailing block, then smallest (row, col)
            int pi = -1, pj = -1;
            BigInt best = 0;
            for (int i = k; i < m; ++i)
                for (int j = k; j < n; ++j) {
                    const BigInt& v = D.at(i, j);
                    if (v == 0) continue;
                    BigInt av = abs(v);
                    if (pi < 0 || av < best) {
                        best = std::move(av);
                        pi = i;
                        pj = j;
                    }
                }
            if (pi < 0) return s; // trailing block is zero
            detail::swap_rows(D, k, pi);
            detail::swap_rows(U, k, pi);
            detail::swap_cols(D, k, pj);
            detail::swap_cols(V, k, pj);

            bool exact = true;
            for (int i = k + 1; i < m; ++i) {
                const BigInt& v = D.at(i, k);
                if (v == 0) continue;
                BigInt q = v / D.at(k, k);
                if (q != 0) {
                    detail::row_axpy(D, i, q, k);
                    detail::row_axpy(U, i, q, k);
                }
                if (D.at(i, k) != 0) exact = false;
            }
            for (int j = k + 1; j < n; ++j) {
                const BigInt& v = D.at(k, j);
                if (v == 0) continue;
                BigInt q = v / D.at(k, k);
                if (q != 0) {
                    detail::col_axpy(D, j, q, k);
                    detail::col_axpy(V, j, q, k);
                }
                if (D.at(k, j) != 0) exact = false;
            }
            if (!exact) continue; // remainders became the new minimal entries

            if (D.at(k, k) < 0) {
                detail::negate_row(D, k);
                detail::negate_row(U, k);
            }

            // divisibility: the pivot must divide the whole trailing block
            int bi = -1;
            for (int i = k + 1; i < m && bi < 0; ++i)
                for (int j = k + 1; j < n; ++j)
                    if (D.at(i, j) % D.at(k, k) != 0) {
                        bi = i;
                        break;
                    }
            if (bi >= 0) {
                detail::row_axpy(D, k, -1, bi); // pull the offending row up
                detail::row_axpy(U, k, -1, bi);
                continue;
            }
            break;
        }
    }
    return s;
}

/// Integer rank (number of nonzero Smith invariants).
inline int lattice_rank(const IntMatrix& a) { return smith_normal_form(a).rank(); }

/// Finitely generated abelian group in invariant-factor form. Factors equal
/// to 1 are dropped; each remaining factor divides the next.
struct AbelianGroupInvariants {
    IntVec torsion;
    int free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }

    /// Group order; std::nullopt when infinite (free_rank > 0).
    std::optional<Int> order() const {
        if (free_rank > 0) return std::nullopt;
        Int o = 1;
        for (Int d : torsion) o = checked::mul(o, d);
        return o;
    }

    friend bool operator==(const AbelianGroupInvariants& a,
                           const AbelianGroupInvariants& b) = default;
};

/// Z^n modulo the column span of `generators` (n = generators.rows()).
inline AbelianGroupInvariants quotient_invariants(const IntMatrix& generators) {
    SnfDecomposition s = smith_normal_form(generators);
    AbelianGroupInvariants g;
    int r = s.rank();
    for (int i = 0; i < r; ++i)
        if (s.D.at(i, i) > 1) g.torsion.push_back(narrow(s.D.at(i, i)));
    g.free_rank = generators.rows() - r;
    return g;
}

/// Index of the column span inside Z^n; std::nullopt marks infinite index
/// (rank-deficient generators).
inline std::optional<Int> sublattice_index(const IntMatrix& generators) {
    AbelianGroupInvariants g = quotient_invariants(generators);
    return g.order();
}

/// First nonzero entry made positive; zero vectors pass through.
inline IntVec sign_normalize(IntVec v) {
    for (Int x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : v) y = checked::neg(y);
        break;
    }
    return v;
}

/// Basis of {x : A x = 0} as primitive vectors, sign-normalized and sorted
/// lexicographically. Empty when A is injective.
inline std::vector<IntVec> integer_kernel(const IntMatrix& a) {
    SnfDecomposition s = smith_normal_form(a);
    int r = s.rank();
    std::vector<IntVec> basis;
    for (int j = r; j < a.cols(); ++j)
        basis.push_back(sign_normalize(narrow_vec(primitivize_big(s.V.column(j)))));
    std::sort(basis.begin(), basis.end());
    return basis;
}

/// Canonical basis of the column span: H upper-triangular-by-pivots with
/// positive pivots and the entries above each pivot reduced into [0, pivot).
/// Returns the rank-many basis columns.
inline IntMatrix hnf_column_basis(const IntMatrix& a) {
    const int m = a.rows(), n = a.cols();
    IntMatrix b = a;
    int right = n - 1;
    std::vector<int> pivot_row_of(n, -1);
    for (int i = m - 1; i >= 0 && right >= 0; --i) {
        for (;;) {
            int nz = -1, count = 0;
            BigInt best = 0;
            int bestj = -1;
            for (int j = 0; j <= right; ++j) {
                const BigInt& v = b.at(i, j);
                if (v == 0) continue;
                ++count;
                nz = j;
                BigInt av = abs(v);
                if (bestj < 0 || av < best) {
                    best = std::move(av);
                    bestj = j;
                }
            }
            if (count <= 1) {
                if (count == 1) {
                    detail::swap_cols(b, nz, right);
                    if (b.at(i, right) < 0)
                        for (int t = 0; t < m; ++t) b.at(t, right) = -b.at(t, right);
                    pivot_row_of[right] = i;
                    --right;
                }
                break;
            }
            for (int j = 0; j <= right; ++j) {
                if (j == bestj || b.at(i, j) == 0) continue;
                BigInt q = b.at(i, j) / b.at(i, bestj);
                if (q != 0) detail::col_axpy(b, j, q, bestj);
            }
        }
    }
    int first = right + 1;
    int rank = n - first;
    if (rank == 0)
        throw Error(Errc::ZeroVector, "column span is the zero lattice");
    // reduce entries above each pivot into [0, pivot)
    for (int k = first + 1; k < n; ++k)
        for (int j = k - 1; j >= first; --j) {
            int pr = pivot_row_of[j];
            const BigInt& pivot = b.at(pr, j);
            const BigInt& v = b.at(pr, k);
            BigInt q = v / pivot;
            if (v - q * pivot < 0) --q; // floor
            if (q != 0) detail::col_axpy(b, k, q, j);
        }
    IntMatrix h(m, rank);
    for (int j = 0; j < rank; ++j)
        for (int i = 0; i < m; ++i) h.at(i, j) = b.at(i, first + j);
    return h;
}

} // namespace fwps
