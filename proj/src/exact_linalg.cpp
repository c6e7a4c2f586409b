#include "quatlin/exact_linalg.hpp"

#include <stdexcept>
#include <utility>

namespace quatlin {

namespace {

mpz_class lcm(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class out;
    mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return out;
}

// Back-substitutes the echelon system for the pivot variables given values of
// the free variables (already placed in x).
void back_substitute(const Echelon& e, std::size_t n_vars, std::vector<Rational>& x,
                     const std::vector<mpz_class>* rhs_column) {
    for (std::size_t i = e.rank(); i-- > 0;) {
        const std::size_t p = e.pivot_cols[i];
        Rational acc = rhs_column ? Rational((*rhs_column)[i]) : Rational(0);
        for (std::size_t j = p + 1; j < n_vars; ++j) {
            if (e.at(i, j) != 0 && !x[j].is_zero()) acc -= Rational(e.at(i, j)) * x[j];
        }
        x[p] = acc / Rational(e.at(i, p));
    }
}

} // namespace

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x) {
    if (x.size() != a.cols()) throw std::invalid_argument("multiply: dimension mismatch");
    std::vector<Rational> y(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (!a(r, c).is_zero()) y[r] += a(r, c) * x[c];
        }
    }
    return y;
}

Echelon fraction_free_echelon(const RationalMatrix& a, std::size_t pivot_limit) {
    Echelon e;
    e.rows = a.rows();
    e.cols = a.cols();
    e.entries.resize(e.rows * e.cols);
    for (std::size_t r = 0; r < e.rows; ++r) {
        mpz_class scale = 1;
        for (std::size_t c = 0; c < e.cols; ++c) scale = lcm(scale, a(r, c).denominator());
        for (std::size_t c = 0; c < e.cols; ++c) {
            e.entries[r * e.cols + c] = a(r, c).numerator() * (scale / a(r, c).denominator());
        }
        e.row_scale_product *= scale;
    }

    auto m = [&](std::size_t r, std::size_t c) -> mpz_class& { return e.entries[r * e.cols + c]; };
    mpz_class prev_pivot = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_limit && row < e.rows; ++col) {
        std::size_t p = row;
        while (p < e.rows && m(p, col) == 0) ++p;
        if (p == e.rows) continue;
        if (p != row) {
            for (std::size_t c = 0; c < e.cols; ++c) std::swap(m(p, c), m(row, c));
            e.swap_sign = -e.swap_sign;
        }
        const mpz_class pivot = m(row, col);
        for (std::size_t i = row + 1; i < e.rows; ++i) {
            const mpz_class factor = m(i, col);
            for (std::size_t j = col + 1; j < e.cols; ++j) {
                mpz_class v = pivot * m(i, j) - factor * m(row, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev_pivot.get_mpz_t());
                m(i, j) = std::move(v);
            }
            m(i, col) = 0;
        }
        prev_pivot = pivot;
        e.pivot_cols.push_back(col);
        ++row;
    }
    return e;
}

std::size_t rank(const RationalMatrix& a) { return fraction_free_echelon(a).rank(); }

Rational determinant(const RationalMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix is not square");
    if (a.rows() == 0) return 1;
    const Echelon e = fraction_free_echelon(a);
    if (e.rank() < a.rows()) return 0;
    // The last Bareiss pivot is the determinant of the (row-swapped) integral matrix.
    const std::size_t n = a.rows();
    return Rational(mpz_class(e.swap_sign * e.at(n - 1, n - 1)), e.row_scale_product);
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
    RationalMatrix aug(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = a(r, c);
        aug(r, n) = b[r];
    }
    const Echelon e = fraction_free_echelon(aug, n);
    if (e.rank() < n) return std::nullopt;
    std::vector<mpz_class> rhs(n);
    for (std::size_t r = 0; r < n; ++r) rhs[r] = e.at(r, n);
    std::vector<Rational> x(n);
    back_substitute(e, n, x, &rhs);
    return x;
}

std::optional<std::vector<Rational>> kernel_witness(const RationalMatrix& a) {
    const Echelon e = fraction_free_echelon(a);
    const std::size_t n = a.cols();
    if (e.rank() == n) return std::nullopt;
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivot_cols) is_pivot[p] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Rational> x(n);
    x[free_col] = 1;
    back_substitute(e, n, x, nullptr);

    mpz_class den = 1;
    for (const Rational& v : x) den = lcm(den, v.denominator());
    std::vector<mpz_class> ints(n);
    mpz_class g = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ints[i] = x[i].numerator() * (den / x[i].denominator());
        g = gcd(g, ints[i]);
    }
    for (const mpz_class& v : ints) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = Rational(mpz_class(ints[i] / g));
    return x;
}

} // namespace quatlin
