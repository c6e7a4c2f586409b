#ifndef QUATLIN_TESTS_SUPPORT_HPP
#define QUATLIN_TESTS_SUPPORT_HPP

// Random generators and independent oracles shared by the test binaries.
// Nothing here calls into the code paths it is used to check.

#include "quatlin/exact_linalg.hpp"
#include "quatlin/operator4.hpp"
#include "quatlin/quaternion.hpp"
#include "quatlin/rational.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace quatlin::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    /// p/q with |p| <= max_num, 1 <= q <= max_den.
    Rational rational(long max_num = 100, long max_den = 20) {
        return Rational(mpz_class(integer(-max_num, max_num)), mpz_class(integer(1, max_den)));
    }

    Quaternion quaternion(long max_num = 100, long max_den = 20) {
        return {rational(max_num, max_den), rational(max_num, max_den), rational(max_num, max_den),
                rational(max_num, max_den)};
    }

    Quaternion nonzero_quaternion(long max_num = 100, long max_den = 20) {
        while (true) {
            Quaternion q = quaternion(max_num, max_den);
            if (!q.is_zero()) return q;
        }
    }

    /// Integer components in [lo, hi], not all zero.
    Quaternion nonzero_int_quaternion(long lo, long hi) {
        while (true) {
            Quaternion q{integer(lo, hi), integer(lo, hi), integer(lo, hi), integer(lo, hi)};
            if (!q.is_zero()) return q;
        }
    }

    Operator4 op(long max_num = 100, long max_den = 20) {
        std::array<Rational, 16> m;
        for (auto& e : m) e = rational(max_num, max_den);
        return Operator4(std::move(m));
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// Product by the multiplication table: e_s e_t = sign * e_index.
inline Quaternion table_product(const Quaternion& a, const Quaternion& b) {
    static constexpr int index[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    std::array<Rational, 4> out;
    for (int s = 0; s < 4; ++s) {
        for (int t = 0; t < 4; ++t) {
            const Rational term = a[s] * b[t];
            out[index[s][t]] += sign[s][t] > 0 ? term : -term;
        }
    }
    return {out[0], out[1], out[2], out[3]};
}

/// Leibniz formula over all 24 permutations.
inline Rational leibniz_det4(const Operator4& f) {
    std::array<int, 4> p{0, 1, 2, 3};
    Rational det;
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) inversions += p[i] > p[j];
        }
        Rational term = 1;
        for (int i = 0; i < 4; ++i) term *= f(i, p[i]);
        det = inversions % 2 ? det - term : det + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

/// Plain Gauss-Jordan over rationals with ordinary division.
struct GaussJordan {
    std::size_t rank = 0;
    Rational det = 0;  // only meaningful for square input
    std::vector<std::vector<Rational>> reduced;
    std::vector<std::size_t> pivots;
};

inline GaussJordan gauss_jordan(const RationalMatrix& a) {
    GaussJordan g;
    const std::size_t rows = a.rows(), cols = a.cols();
    g.reduced.assign(rows, std::vector<Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) g.reduced[r][c] = a(r, c);
    }
    Rational det = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t p = row;
        while (p < rows && g.reduced[p][col].is_zero()) ++p;
        if (p == rows) continue;
        if (p != row) {
            std::swap(g.reduced[p], g.reduced[row]);
            det = -det;
        }
        const Rational pivot = g.reduced[row][col];
        det *= pivot;
        for (auto& v : g.reduced[row]) v = v / pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || g.reduced[i][col].is_zero()) continue;
            const Rational factor = g.reduced[i][col];
            for (std::size_t j = 0; j < cols; ++j) g.reduced[i][j] -= factor * g.reduced[row][j];
        }
        g.pivots.push_back(col);
        ++row;
    }
    g.rank = row;
    g.det = (rows == cols && g.rank == rows) ? det : Rational(0);
    return g;
}

inline bool is_zero_vector(const std::vector<Rational>& v) {
    for (const auto& e : v) {
        if (!e.is_zero()) return false;
    }
    return true;
}

} // namespace quatlin::testing

#endif
