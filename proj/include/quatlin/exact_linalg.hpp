#ifndef QUATLIN_EXACT_LINALG_HPP
#define QUATLIN_EXACT_LINALG_HPP

#include "quatlin/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace quatlin {

/// Dense rational matrix, row-major. Used for the 16 x 4n frame systems.
class RationalMatrix {
public:
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> a_;
};

std::vector<Rational> multiply(const RationalMatrix& a, const std::vector<Rational>& x);

/*
 * Fraction-free (Bareiss) row echelon form.
 *
 * Each row is first multiplied by the lcm of its denominators so the working
 * matrix is integral; elimination then divides exactly by the previous pivot,
 * so every intermediate entry is a minor of the scaled matrix. Pivots are the
 * first nonzero entry by row index, which makes the result deterministic.
 */
struct Echelon {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<mpz_class> entries;          // row-major, upper echelon
    std::vector<std::size_t> pivot_cols;     // one per nonzero row
    mpz_class row_scale_product = 1;         // product of the integralizing row factors
    int swap_sign = 1;

    const mpz_class& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    std::size_t rank() const { return pivot_cols.size(); }
};

/// Eliminates using only the first `pivot_limit` columns as pivot candidates;
/// remaining columns (e.g. right-hand sides) are carried along.
Echelon fraction_free_echelon(const RationalMatrix& a, std::size_t pivot_limit);
inline Echelon fraction_free_echelon(const RationalMatrix& a) {
    return fraction_free_echelon(a, a.cols());
}

std::size_t rank(const RationalMatrix& a);
/// Requires a square matrix (std::invalid_argument otherwise).
Rational determinant(const RationalMatrix& a);

/// Unique solution of a x = b, or nullopt when a is singular.
std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b);

/// Canonical nonzero kernel vector: the lowest-index free column set to 1,
/// other free columns 0, then scaled to a primitive integer vector with a
/// positive leading entry. nullopt when the columns are independent.
std::optional<std::vector<Rational>> kernel_witness(const RationalMatrix& a);

} // namespace quatlin

#endif
