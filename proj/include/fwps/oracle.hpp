#pragma once

// Brute-force reference implementations used by the test suites to
// cross-check the production algorithms. Everything here is written from
// first principles: no Smith/Hermite forms, no code shared with the checked
// implementations. Deliberately slow and simple.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <vector>

#include "fwps/intlat.hpp"
#include "fwps/toric.hpp"

namespace fwps::oracle {

// ---------------------------------------------------------------------------
// exact fractions

struct Fraction {
    Int num = 0;
    Int den = 1;

    Fraction() = default;
    Fraction(Int n) : num(n), den(1) {}
    Fraction(Int n, Int d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) {
            num = checked::neg(num);
            den = checked::neg(den);
        }
        Int g = std::gcd(checked::abs(num), den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    bool is_zero() const { return num == 0; }
    bool is_integer() const { return den == 1; }

    friend Fraction operator+(const Fraction& a, const Fraction& b) {
        return Fraction(checked::add(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
                        checked::mul(a.den, b.den));
    }
    friend Fraction operator-(const Fraction& a, const Fraction& b) {
        return Fraction(checked::sub(checked::mul(a.num, b.den), checked::mul(b.num, a.den)),
                        checked::mul(a.den, b.den));
    }
    friend Fraction operator*(const Fraction& a, const Fraction& b) {
        return Fraction(checked::mul(a.num, b.num), checked::mul(a.den, b.den));
    }
    friend Fraction operator/(const Fraction& a, const Fraction& b) {
        if (b.is_zero()) throw std::invalid_argument("division by zero");
        return Fraction(checked::mul(a.num, b.den), checked::mul(a.den, b.num));
    }
    friend bool operator==(const Fraction& a, const Fraction& b) {
        return a.num == b.num && a.den == b.den;
    }
};

// ---------------------------------------------------------------------------
// small exact determinants (Laplace expansion, n <= 6)

inline Int det_laplace(const std::vector<IntVec>& rows) {
    const int n = static_cast<int>(rows.size());
    if (n == 1) return rows[0][0];
    Int acc = 0;
    for (int i = 0; i < n; ++i) {
        if (rows[i][0] == 0) continue;
        std::vector<IntVec> minor;
        minor.reserve(n - 1);
        for (int k = 0; k < n; ++k) {
            if (k == i) continue;
            minor.emplace_back(rows[k].begin() + 1, rows[k].end());
        }
        Int term = checked::mul(rows[i][0], det_laplace(minor));
        acc = (i % 2 == 0) ? checked::add(acc, term) : checked::sub(acc, term);
    }
    return acc;
}

// ---------------------------------------------------------------------------
// coset enumeration: the finite abelian group Z^n / <columns>

namespace detail {

// adj(B) with adj(B)*B = det(B)*I, via signed minors. n <= 3.
inline std::vector<IntVec> adjugate(const std::vector<IntVec>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<IntVec> adj(n, IntVec(n, 0));
    if (n == 1) {
        adj[0][0] = 1;
        return adj;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<IntVec> minor;
            for (int r = 0; r < n; ++r) {
                if (r == i) continue;
                IntVec row;
                for (int c = 0; c < n; ++c)
                    if (c != j) row.push_back(rows[r][c]);
                minor.push_back(std::move(row));
            }
            Int cof = det_laplace(minor);
            if ((i + j) % 2 == 1) cof = checked::neg(cof);
            adj[j][i] = cof; // transpose of the cofactor matrix
        }
    return adj;
}

// subgroup of (Z/D)^n generated by the given residue vectors, as a sorted set
inline std::set<IntVec> additive_closure(const std::vector<IntVec>& gens, Int D, int n) {
    std::set<IntVec> group;
    group.insert(IntVec(n, 0));
    std::vector<IntVec> frontier(group.begin(), group.end());
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const IntVec& g : gens)
            for (const IntVec& s : frontier) {
                IntVec t(n);
                for (int i = 0; i < n; ++i) t[i] = checked::mod_floor(s[i] + g[i], D);
                if (group.insert(t).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    return group;
}

// all chains d_1 | d_2 | ... | d_t (each >= 2, t <= max_len) with given product
inline void divisor_chains(Int product, Int min_factor, int max_len, IntVec& cur,
                           std::vector<IntVec>& out) {
    if (product == 1) {
        out.push_back(cur);
        return;
    }
    if (max_len == 0) return;
    for (Int d = min_factor; d <= product; ++d)
        if (product % d == 0) {
            cur.push_back(d);
            // later factors must be multiples of d
            divisor_chains(product / d, d, max_len - 1, cur, out);
            // keep only chains where each factor divides the next; enforce below
            cur.pop_back();
        }
}

} // namespace detail

/// Invariant factors of Z^n / <columns of generators> computed without any
/// normal-form machinery: residues modulo a nonsingular column submatrix B
/// are tracked through the map x -> adj(B) x (mod |det B|), whose kernel is
/// exactly the span of B; cosets are counted and the group type is
/// reconstructed from the k-torsion element counts.  Returns std::nullopt
/// (inconclusive) when the index exceeds `bound` or no finite index exists.
inline std::optional<AbelianGroupInvariants> coset_enumeration(const IntMatrix& generators,
                                                               Int bound) {
    const int n = generators.rows();
    const int m = generators.cols();
    if (n > 3) throw std::invalid_argument("coset enumeration supports rank <= 3");

    // nonsingular n x n column submatrix
    std::vector<IntVec> B;
    std::vector<int> idx(n);
    std::function<bool(int, int)> choose = [&](int start, int need) {
        if (need == 0) {
            std::vector<IntVec> rows(n, IntVec(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[i][j] = narrow(generators.at(i, idx[j]));
            if (det_laplace(rows) != 0) {
                B = rows;
                return true;
            }
            return false;
        }
        for (int c = start; c <= m - need; ++c) {
            idx[n - need] = c;
            if (choose(c + 1, need - 1)) return true;
        }
        return false;
    };
    if (!choose(0, n)) return std::nullopt; // rank-deficient: no finite index

    Int D = checked::abs(det_laplace(B));
    std::vector<IntVec> adj = detail::adjugate(B);

    // phi(x) = adj(B) x mod D identifies Z^n/<B> with the subgroup H
    // generated by the columns of adj(B)
    auto phi = [&](const IntVec& x) {
        IntVec y(n, 0);
        for (int i = 0; i < n; ++i) {
            Int acc = 0;
            for (int j = 0; j < n; ++j)
                acc = checked::add(acc, checked::mul(adj[i][j], x[j]));
            y[i] = checked::mod_floor(acc, D);
        }
        return y;
    };

    std::vector<IntVec> h_gens;
    for (int j = 0; j < n; ++j) {
        IntVec e(n, 0);
        e[j] = 1;
        h_gens.push_back(phi(e));
    }
    std::set<IntVec> H = detail::additive_closure(h_gens, D, n);

    std::vector<IntVec> k_gens;
    for (int j = 0; j < m; ++j) k_gens.push_back(phi(narrow_vec(generators.column(j))));
    std::set<IntVec> K = detail::additive_closure(k_gens, D, n);

    Int index = static_cast<Int>(H.size() / K.size());
    if (index > bound) return std::nullopt;
    if (index == 1) return AbelianGroupInvariants{{}, 0};

    // count k-torsion cosets: N_k = #{h in H : k*h in K} / |K|
    auto torsion_count = [&](Int k) {
        Int cnt = 0;
        for (const IntVec& h : H) {
            IntVec kh(n);
            for (int i = 0; i < n; ++i)
                kh[i] = checked::mod_floor(checked::mul(k, h[i]), D);
            if (K.count(kh)) ++cnt;
        }
        return static_cast<Int>(cnt / static_cast<Int>(K.size()));
    };
    std::map<Int, Int> counts;
    for (Int k = 1; k <= index; ++k)
        if (index % k == 0) counts[k] = torsion_count(k);

    // the unique divisor chain matching every k-torsion count
    std::vector<IntVec> chains;
    IntVec cur;
    detail::divisor_chains(index, 2, n, cur, chains);
    std::vector<IntVec> matches;
    for (const IntVec& chain : chains) {
        bool divis = true;
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            if (chain[i + 1] % chain[i] != 0) divis = false;
        if (!divis) continue;
        bool ok = true;
        for (const auto& [k, observed] : counts) {
            Int expect = 1;
            for (Int d : chain) expect = checked::mul(expect, std::gcd(k, d));
            if (expect != observed) {
                ok = false;
                break;
            }
        }
        if (ok) matches.push_back(chain);
    }
    if (matches.size() != 1) return std::nullopt; // cannot happen; stay honest
    return AbelianGroupInvariants{matches.front(), 0};
}

/// Membership of x in the integer column span of `generators` (rows <= 3),
/// by the same residue map as coset_enumeration. std::nullopt when the span
/// has infinite index (no nonsingular column submatrix).
inline std::optional<bool> in_column_span(const IntMatrix& generators, const IntVec& x) {
    const int n = generators.rows();
    const int m = generators.cols();
    if (n > 3) throw std::invalid_argument("span tester supports rank <= 3");
    std::vector<IntVec> B;
    std::vector<int> idx(n);
    std::function<bool(int, int)> choose = [&](int start, int need) {
        if (need == 0) {
            std::vector<IntVec> rows(n, IntVec(n));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) rows[i][j] = narrow(generators.at(i, idx[j]));
            if (det_laplace(rows) != 0) {
                B = rows;
                return true;
            }
            return false;
        }
        for (int c = start; c <= m - need; ++c) {
            idx[n - need] = c;
            if (choose(c + 1, need - 1)) return true;
        }
        return false;
    };
    if (!choose(0, n)) return std::nullopt;
    Int D = checked::abs(det_laplace(B));
    std::vector<IntVec> adj = detail::adjugate(B);
    auto phi = [&](const IntVec& v) {
        IntVec y(n, 0);
        for (int i = 0; i < n; ++i) {
            Int acc = 0;
            for (int j = 0; j < n; ++j) acc = checked::add(acc, checked::mul(adj[i][j], v[j]));
            y[i] = checked::mod_floor(acc, D);
        }
        return y;
    };
    std::vector<IntVec> k_gens;
    for (int j = 0; j < m; ++j) k_gens.push_back(phi(narrow_vec(generators.column(j))));
    std::set<IntVec> K = detail::additive_closure(k_gens, D, n);
    return K.count(phi(x)) > 0;
}

// ---------------------------------------------------------------------------
// integer kernel by rational elimination

namespace detail {

// reduced row echelon form over Q; returns pivot column of each row (-1 none)
inline std::vector<int> rref(std::vector<std::vector<Fraction>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<int> pivot_col(rows, -1);
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Fraction inv = Fraction(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Fraction f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col[r] = c;
        ++r;
    }
    return pivot_col;
}

inline Int lcm_int(Int a, Int b) { return checked::mul(a / std::gcd(a, b), b); }

// gcd of all k x k minors of the m x k column matrix V (k = V[0].size())
inline Int max_minor_gcd(const std::vector<IntVec>& cols) {
    const int k = static_cast<int>(cols.size());
    const int m = static_cast<int>(cols[0].size());
    Int g = 0;
    std::vector<int> rowsel(k);
    std::function<void(int, int)> rec = [&](int start, int need) {
        if (g == 1) return;
        if (need == 0) {
            std::vector<IntVec> rows(k, IntVec(k));
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j) rows[i][j] = cols[j][rowsel[i]];
            g = std::gcd(g, checked::abs(det_laplace(rows)));
            return;
        }
        for (int r = start; r <= m - need; ++r) {
            rowsel[k - need] = r;
            rec(r + 1, need - 1);
        }
    };
    rec(0, k);
    return g;
}

inline Int smallest_prime_factor(Int x) {
    for (Int p = 2; p * p <= x; ++p)
        if (x % p == 0) return p;
    return x;
}

// nonzero kernel vector of the m x k matrix over F_p, entries in [0, p)
inline IntVec kernel_vector_mod_p(const std::vector<IntVec>& cols, Int p) {
    const int k = static_cast<int>(cols.size());
    const int m = static_cast<int>(cols[0].size());
    std::vector<IntVec> a(m, IntVec(k));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < k; ++j) a[i][j] = checked::mod_floor(cols[j][i], p);
    auto inv_mod = [&](Int x) {
        Int r = 1, b = checked::mod_floor(x, p), e = p - 2; // p prime
        while (e) {
            if (e & 1) r = checked::mod_floor(checked::mul(r, b), p);
            b = checked::mod_floor(checked::mul(b, b), p);
            e >>= 1;
        }
        return r;
    };
    std::vector<int> pivot_of_col(k, -1);
    int rank = 0;
    for (int c = 0; c < k && rank < m; ++c) {
        int piv = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][c] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Int inv = inv_mod(a[rank][c]);
        for (int j = 0; j < k; ++j) a[rank][j] = checked::mod_floor(checked::mul(a[rank][j], inv), p);
        for (int i = 0; i < m; ++i) {
            if (i == rank || a[i][c] == 0) continue;
            Int f = a[i][c];
            for (int j = 0; j < k; ++j)
                a[i][j] = checked::mod_floor(a[i][j] - checked::mul(f, a[rank][j]), p);
        }
        pivot_of_col[c] = rank;
        ++rank;
    }
    int free_col = -1;
    for (int c = 0; c < k; ++c)
        if (pivot_of_col[c] < 0) {
            free_col = c;
            break;
        }
    IntVec v(k, 0);
    v[free_col] = 1;
    for (int c = 0; c < k; ++c)
        if (pivot_of_col[c] >= 0)
            v[c] = checked::mod_floor(-a[pivot_of_col[c]][free_col], p);
    return v;
}

} // namespace detail

/// Basis of {x : A x = 0} by exact rational elimination. The raw cleared
/// basis can generate a finite-index sublattice of the true kernel; the
/// saturation loop grows it until the gcd of maximal minors is 1. Output is
/// primitivized, sign-normalized and sorted, and spans the same lattice as
/// the production kernel.
inline std::vector<IntVec> kernel_by_elimination(const IntMatrix& a) {
    const int m = a.rows(), cols = a.cols();
    if (cols > 6) throw std::invalid_argument("kernel oracle supports up to 6 columns");
    std::vector<std::vector<Fraction>> work(m, std::vector<Fraction>(cols));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < cols; ++j) work[i][j] = Fraction(narrow(a.at(i, j)));
    std::vector<int> pivot_col = detail::rref(work);

    std::vector<bool> is_pivot(cols, false);
    for (int pc : pivot_col)
        if (pc >= 0) is_pivot[pc] = true;

    std::vector<IntVec> basis;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Fraction> x(cols, Fraction(0));
        x[f] = Fraction(1);
        for (size_t r = 0; r < pivot_col.size(); ++r)
            if (pivot_col[r] >= 0) x[pivot_col[r]] = Fraction(0) - work[r][f];
        Int denom = 1;
        for (const Fraction& q : x) denom = detail::lcm_int(denom, q.den);
        IntVec v(cols);
        for (int j = 0; j < cols; ++j) v[j] = checked::mul(x[j].num, denom / x[j].den);
        basis.push_back(primitivize(std::move(v)));
    }
    if (basis.empty()) return basis;

    // saturation: enlarge until the basis generates all integer points of
    // its rational span
    for (;;) {
        Int d = detail::max_minor_gcd(basis);
        if (d == 1) break;
        Int p = detail::smallest_prime_factor(d);
        IntVec c = detail::kernel_vector_mod_p(basis, p);
        int j = -1;
        for (int t = 0; t < static_cast<int>(c.size()); ++t)
            if (c[t] != 0) {
                j = t;
                break;
            }
        // scale so c[j] = 1 exactly; then old basis[j] is an integer
        // combination of the others and the new vector
        Int inv = 1;
        {
            Int r = 1, b = c[j], e = p - 2;
            while (e) {
                if (e & 1) r = checked::mod_floor(checked::mul(r, b), p);
                b = checked::mod_floor(checked::mul(b, b), p);
                e >>= 1;
            }
            inv = r;
        }
        for (Int& t : c) t = checked::mod_floor(checked::mul(t, inv), p);
        IntVec w(cols, 0);
        for (size_t t = 0; t < basis.size(); ++t)
            for (int i = 0; i < cols; ++i)
                w[i] = checked::add(w[i], checked::mul(c[t], basis[t][i]));
        for (int i = 0; i < cols; ++i) w[i] /= p;
        basis[j] = std::move(w);
    }

    for (IntVec& v : basis) v = sign_normalize(primitivize(std::move(v)));
    std::sort(basis.begin(), basis.end());
    return basis;
}

/// Membership of v in the lattice spanned by linearly independent columns:
/// the unique rational solution of B c = v must exist and be integral.
inline bool in_lattice(const std::vector<IntVec>& basis, const IntVec& v) {
    if (basis.empty()) {
        for (Int x : v)
            if (x != 0) return false;
        return true;
    }
    const int m = static_cast<int>(v.size());
    const int k = static_cast<int>(basis.size());
    std::vector<std::vector<Fraction>> aug(m, std::vector<Fraction>(k + 1));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < k; ++j) aug[i][j] = Fraction(basis[j][i]);
        aug[i][k] = Fraction(v[i]);
    }
    std::vector<int> pivot_col = detail::rref(aug);
    for (size_t r = 0; r < pivot_col.size(); ++r)
        if (pivot_col[r] == k) return false; // inconsistent system
    std::vector<Fraction> c(k, Fraction(0));
    for (size_t r = 0; r < pivot_col.size(); ++r)
        if (pivot_col[r] >= 0 && pivot_col[r] < k) c[pivot_col[r]] = aug[r][k];
    for (const Fraction& q : c)
        if (!q.is_integer()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// diagonal action equivalence and weight well-forming

/// True iff some unit m, shift c and coordinate permutation carry e1 to e2
/// mod r. Exhaustive search.
inline bool action_equivalence_search(Int r, std::array<Int, 3> e1, std::array<Int, 3> e2) {
    if (r < 1) throw std::invalid_argument("modulus must be >= 1");
    for (Int& x : e1) x = checked::mod_floor(x, r);
    for (Int& x : e2) x = checked::mod_floor(x, r);
    for (Int m = 0; m < r; ++m) {
        if (std::gcd(m, r) != 1) continue;
        for (Int c = 0; c < r; ++c) {
            std::array<Int, 3> image{};
            for (int i = 0; i < 3; ++i)
                image[i] = checked::mod_floor(checked::mul(m, e1[i]) + c, r);
            std::array<int, 3> p{0, 1, 2};
            do {
                if (image[0] == e2[p[0]] && image[1] == e2[p[1]] && image[2] == e2[p[2]])
                    return true;
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    return false;
}

/// Well-forming by the reduction rule: after dividing out the global gcd,
/// whenever d = gcd of all entries but one exceeds 1 (it is then coprime to
/// the remaining entry), divide those entries by d; repeat to a fixed point.
inline WeightVector fletcher_wellform(IntVec a) {
    if (a.size() < 2) throw std::invalid_argument("need at least two weights");
    for (Int x : a)
        if (x < 1) throw Error(Errc::NonpositiveWeight, "weights must be positive");
    for (bool changed = true; changed;) {
        changed = false;
        Int g = gcd_vector(a);
        if (g > 1) {
            for (Int& x : a) x /= g;
            changed = true;
        }
        for (size_t i = 0; i < a.size(); ++i) {
            Int d = 0;
            for (size_t j = 0; j < a.size(); ++j)
                if (j != i) d = std::gcd(d, a[j]);
            if (d > 1 && std::gcd(d, a[i]) == 1) {
                for (size_t j = 0; j < a.size(); ++j)
                    if (j != i) a[j] /= d;
                changed = true;
                break;
            }
        }
    }
    return WeightVector(std::move(a));
}

} // namespace fwps::oracle
