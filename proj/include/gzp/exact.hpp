#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>

#include "gzp/errors.hpp"

// Exact integer linear algebra for the diagonalizability census: everything
// in this namespace is floating-point free. Eigenvalue distinctness of an
// integer matrix is decided via its characteristic polynomial p and the test
// gcd(p, p') = const.
namespace gzp::exact {

using BigInt = boost::multiprecision::cpp_int;

/// Integer polynomial, descending coefficients, no leading zeros. The zero
/// polynomial is the empty vector.
using Poly = std::vector<BigInt>;

// =========================================================================
// IntMatrix
// =========================================================================

class IntMatrix {
public:
    explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {
        if (n < 1) throw ValidationError("matrix size must be positive");
    }

    int size() const { return n_; }
    std::int64_t& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    std::int64_t at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    /// Converts a floating-point matrix whose entries are exact integers.
    static IntMatrix from_dense(const Eigen::MatrixXd& m) {
        if (m.rows() != m.cols() || m.rows() < 1) throw ValidationError("matrix must be square");
        // Entries beyond 2^53 would already have lost exactness as doubles.
        constexpr double kMax = 9007199254740992.0;
        IntMatrix out(static_cast<int>(m.rows()));
        for (int i = 0; i < out.size(); ++i)
            for (int j = 0; j < out.size(); ++j) {
                double v = m(i, j);
                if (!std::isfinite(v) || v != std::nearbyint(v) || std::abs(v) >= kMax)
                    throw NonExactEntriesError();
                out.at(i, j) = static_cast<std::int64_t>(v);
            }
        return out;
    }

private:
    int n_;
    std::vector<std::int64_t> a_;
};

// =========================================================================
// Characteristic polynomial
// =========================================================================

/// Faddeev–LeVerrier over exact integers: returns the monic coefficients of
/// det(lambda I - A), descending, length n+1. The divisions by the step
/// index are exact.
template <typename Int = BigInt>
std::vector<Int> char_poly(const IntMatrix& m) {
    const int n = m.size();
    std::vector<Int> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);

    std::vector<Int> coeffs(n + 1);
    coeffs[0] = 1;
    std::vector<Int> work = a; // A * M_k, with M_1 = I
    std::vector<Int> mk(static_cast<std::size_t>(n) * n);
    for (int k = 1; k <= n; ++k) {
        Int trace = 0;
        for (int i = 0; i < n; ++i) trace += work[static_cast<std::size_t>(i) * n + i];
        coeffs[k] = -trace / k;
        if (k == n) break;
        mk = work;
        for (int i = 0; i < n; ++i) mk[static_cast<std::size_t>(i) * n + i] += coeffs[k];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Int sum = 0;
                for (int l = 0; l < n; ++l)
                    sum += a[static_cast<std::size_t>(i) * n + l] * mk[static_cast<std::size_t>(l) * n + j];
                work[static_cast<std::size_t>(i) * n + j] = sum;
            }
    }
    return coeffs;
}

/// True when the matrix is strictly upper triangular apart from a single
/// corner entry at (n-1, 0) — the canonical form of a connected DAG closed
/// sink-to-source, with vertices numbered along the Hamiltonian cycle.
inline bool is_closed_dag_form(const IntMatrix& m) {
    const int n = m.size();
    if (n < 2) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j)
            if (m.at(i, j) != 0 && !(i == n - 1 && j == 0)) return false;
    return true;
}

/// Characteristic polynomial of a closed-DAG-form matrix by cofactor
/// expansion along the corner row: the minor is upper Hessenberg with a
/// constant lambda sub-diagonal, so its determinant follows from the
/// classic O(n^2)-term Hessenberg recurrence. Far cheaper than
/// Faddeev–LeVerrier on the census path.
///
/// With D_0 = 1 and D_k the leading k x k Hessenberg minor,
///   D_k = sum_{j=1..k} (-1)^{k+j+1} a(j, k+1) lambda^{k-j} D_{j-1},
/// the result is lambda^n + (-1)^n * corner * D_{n-1}.
template <typename Int = BigInt>
std::vector<Int> char_poly_closed_dag(const IntMatrix& m) {
    const int n = m.size();
    if (!is_closed_dag_form(m)) throw ValidationError("matrix is not in closed-DAG form");

    // d[k] holds D_k as ascending coefficients of length k (degree <= k-1).
    std::vector<std::vector<Int>> d(n);
    d[0] = {Int(1)};
    for (int k = 1; k < n; ++k) {
        std::vector<Int> dk(k, Int(0));
        for (int j = 1; j <= k; ++j) {
            const std::int64_t entry = m.at(j - 1, k); // a(j, k+1), 1-based
            if (entry == 0) continue;
            const int sign = ((k + j + 1) % 2 == 0) ? 1 : -1;
            const Int factor = Int(sign) * entry;
            const int shift = k - j;
            for (std::size_t c = 0; c < d[j - 1].size(); ++c) dk[c + shift] += factor * d[j - 1][c];
        }
        d[k] = std::move(dk);
    }

    std::vector<Int> coeffs(n + 1, Int(0));
    coeffs[0] = 1;
    const Int corner_sign = (n % 2 == 0) ? Int(m.at(n - 1, 0)) : Int(-m.at(n - 1, 0));
    const auto& last = d[n - 1];
    for (std::size_t c = 0; c < last.size(); ++c)
        coeffs[n - static_cast<int>(c)] += corner_sign * last[c];
    return coeffs;
}

/// Largest absolute value that can appear anywhere in char_poly_closed_dag
/// when every potentially-nonzero entry has magnitude max_entry. Used to
/// prove the int64 instantiation overflow-free before running it in bulk.
inline BigInt char_poly_closed_dag_bound(int n, std::int64_t max_entry) {
    IntMatrix worst(n);
    for (int i = 0; i < n - 1; ++i)
        for (int j = i + 1; j < n; ++j) worst.at(i, j) = max_entry;
    worst.at(n - 1, 0) = max_entry;
    // All-positive entries majorize every partial sum of the signed runs.
    std::vector<std::vector<BigInt>> d(n);
    d[0] = {BigInt(1)};
    BigInt bound = 1;
    for (int k = 1; k < n; ++k) {
        std::vector<BigInt> dk(k, BigInt(0));
        for (int j = 1; j <= k; ++j)
            for (std::size_t c = 0; c < d[j - 1].size(); ++c)
                dk[c + (k - j)] += max_entry * d[j - 1][c];
        for (const BigInt& v : dk) bound = std::max(bound, v);
        d[k] = std::move(dk);
    }
    for (const BigInt& v : d[n - 1]) bound = std::max(bound, max_entry * v);
    return bound;
}

inline bool char_poly_closed_dag_fits_int64(int n, std::int64_t max_entry) {
    return char_poly_closed_dag_bound(n, max_entry) < (BigInt(1) << 62);
}

// =========================================================================
// Polynomial arithmetic and the square-free test
// =========================================================================

inline Poly trim(Poly p) {
    std::size_t lead = 0;
    while (lead < p.size() && p[lead] == 0) ++lead;
    p.erase(p.begin(), p.begin() + lead);
    return p;
}

inline int degree(const Poly& p) { return static_cast<int>(p.size()) - 1; } // -1 for zero

inline Poly derivative(const Poly& p) {
    if (p.size() <= 1) return {};
    Poly d(p.size() - 1);
    const int deg = degree(p);
    for (int i = 0; i < deg; ++i) d[i] = p[i] * (deg - i);
    return trim(std::move(d));
}

inline BigInt content(const Poly& p) {
    BigInt g = 0;
    for (const BigInt& c : p) g = boost::multiprecision::gcd(g, c);
    return g;
}

/// Pseudo-remainder of a by b (deg a >= deg b >= 0, b nonzero): the remainder
/// of lc(b)^(deg a - deg b + 1) * a under division by b, computed without
/// fractions.
inline Poly pseudo_remainder(Poly r, const Poly& b) {
    const BigInt& lb = b[0];
    const int db = degree(b);
    while (!r.empty() && degree(r) >= db) {
        const BigInt lr = r[0];
        const int shift = degree(r) - db;
        for (BigInt& c : r) c *= lb;
        for (int i = 0; i <= db; ++i) r[i + 0] -= lr * b[i]; // aligned at the leading term
        // The subtraction above cancels the leading term only when shift == 0;
        // shift the subtrahend for the general case.
        if (shift > 0) {
            // Undo and redo with the correct alignment.
            for (int i = 0; i <= db; ++i) r[i] += lr * b[i];
            for (int i = 0; i <= db; ++i) r[i + shift] -= lr * b[i];
        }
        r = trim(std::move(r));
    }
    return r;
}

/// Degree of gcd(a, b) over the rationals via the primitive polynomial
/// remainder sequence. Exact; no floating point.
inline int gcd_degree(Poly a, Poly b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    if (a.empty()) return degree(b);
    if (b.empty()) return degree(a);
    if (degree(a) < degree(b)) std::swap(a, b);
    auto primitive = [](Poly p) {
        BigInt c = content(p);
        if (c > 1)
            for (BigInt& v : p) v /= c;
        return p;
    };
    a = primitive(std::move(a));
    b = primitive(std::move(b));
    while (degree(b) > 0) {
        Poly r = pseudo_remainder(a, b);
        if (r.empty()) return degree(b);
        a = std::move(b);
        b = primitive(std::move(r));
    }
    return 0; // nonzero constant remainder: coprime over Q
}

namespace detail {

constexpr std::uint32_t kFilterPrime = 2147483647u; // 2^31 - 1

inline std::uint32_t mod_reduce(const BigInt& v, std::uint32_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(a) * b) % p);
}

inline std::uint32_t mod_pow(std::uint32_t base, std::uint64_t e, std::uint32_t p) {
    std::uint32_t r = 1;
    while (e > 0) {
        if (e & 1) r = mod_mul(r, base, p);
        base = mod_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

/// Degree of gcd(p, p') over Z_prime; an upper bound on the rational gcd
/// degree when the leading coefficient does not vanish mod prime. Zero here
/// therefore certifies square-freeness over the integers.
template <typename Coeff>
int gcd_degree_mod_derivative(const std::vector<Coeff>& poly, std::uint32_t p) {
    std::vector<std::uint32_t> a(poly.size());
    for (std::size_t i = 0; i < poly.size(); ++i) a[i] = mod_reduce(poly[i], p);
    const int deg = static_cast<int>(poly.size()) - 1;
    std::vector<std::uint32_t> b(deg);
    for (int i = 0; i < deg; ++i) b[i] = mod_mul(a[i], static_cast<std::uint32_t>((deg - i) % p), p);
    auto strip = [](std::vector<std::uint32_t>& v) {
        std::size_t lead = 0;
        while (lead < v.size() && v[lead] == 0) ++lead;
        v.erase(v.begin(), v.begin() + lead);
    };
    strip(a);
    strip(b);
    while (!b.empty()) {
        if (a.size() < b.size()) std::swap(a, b);
        const std::uint32_t scale = mod_mul(a[0], mod_inv(b[0], p), p);
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t t = a[i] + static_cast<std::uint64_t>(p) -
                              mod_mul(scale, b[i], p);
            a[i] = static_cast<std::uint32_t>(t % p);
        }
        strip(a);
        std::swap(a, b);
    }
    return static_cast<int>(a.size()) - 1;
}

} // namespace detail

/// True iff p has no repeated roots, i.e. gcd(p, p') is constant. A single
/// modular gcd certifies most square-free inputs (its degree can only
/// overshoot the rational one); anything else is settled by the exact
/// primitive remainder sequence.
inline bool square_free(const Poly& p) {
    if (p.size() <= 1) return true;        // constants
    if (p.size() == 2) return true;        // linear
    if (detail::gcd_degree_mod_derivative(p, detail::kFilterPrime) == 0) return true;
    return gcd_degree(p, derivative(p)) == 0;
}

// =========================================================================
// Determinant (Bareiss)
// =========================================================================

/// Fraction-free Gaussian elimination; every division is exact.
inline BigInt determinant(const IntMatrix& m) {
    const int n = m.size();
    std::vector<BigInt> a(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i) * n + j] = m.at(i, j);
    auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * n + j]; };

    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int pivot = -1;
            for (int i = k + 1; i < n; ++i)
                if (at(i, k) != 0) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) return 0;
            for (int j = 0; j < n; ++j) std::swap(at(k, j), at(pivot, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
        prev = at(k, k);
    }
    return sign > 0 ? at(n - 1, n - 1) : -at(n - 1, n - 1);
}

// =========================================================================
// Eigenvalue distinctness
// =========================================================================

/// Exact test: all eigenvalues distinct iff the characteristic polynomial is
/// square-free.
inline bool distinct_eigenvalues_exact(const IntMatrix& m) {
    return square_free(char_poly(m));
}

/// Same, for a floating-point matrix with exactly representable integer
/// entries (rationals must be cleared by uniform scaling first; scaling
/// leaves distinctness invariant).
inline bool distinct_eigenvalues_exact(const Eigen::MatrixXd& m) {
    return distinct_eigenvalues_exact(IntMatrix::from_dense(m));
}

} // namespace gzp::exact
