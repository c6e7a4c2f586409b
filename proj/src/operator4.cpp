#include "quatlin/operator4.hpp"

namespace quatlin {

Operator4 Operator4::identity() { return diagonal(1, 1, 1, 1); }

Operator4 Operator4::diagonal(const Rational& d0, const Rational& d1, const Rational& d2,
                              const Rational& d3) {
    std::array<Rational, 16> m;
    m[0] = d0;
    m[5] = d1;
    m[10] = d2;
    m[15] = d3;
    return Operator4(std::move(m));
}

Quaternion Operator4::column(std::size_t t) const {
    return {m_[t], m_[4 + t], m_[8 + t], m_[12 + t]};
}

Operator4 op_from_unit_images(const Quaternion& img0, const Quaternion& img1,
                              const Quaternion& img2, const Quaternion& img3) {
    const std::array<const Quaternion*, 4> images{&img0, &img1, &img2, &img3};
    std::array<Rational, 16> m;
    for (std::size_t t = 0; t < 4; ++t) {
        for (std::size_t r = 0; r < 4; ++r) m[r * 4 + t] = (*images[t])[r];
    }
    return Operator4(std::move(m));
}

Quaternion apply(const Operator4& f, const Quaternion& x) {
    std::array<Rational, 4> y;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) y[r] += f(r, c) * x[c];
    }
    return {y[0], y[1], y[2], y[3]};
}

Operator4 left_mul_op(const Quaternion& a) {
    const auto& [a0, a1, a2, a3] = a.coords();
    return Operator4({a0, -a1, -a2, -a3,
                      a1, a0, -a3, a2,
                      a2, a3, a0, -a1,
                      a3, -a2, a1, a0});
}

Operator4 right_mul_op(const Quaternion& a) {
    const auto& [a0, a1, a2, a3] = a.coords();
    return Operator4({a0, -a1, -a2, -a3,
                      a1, a0, a3, -a2,
                      a2, -a3, a0, a1,
                      a3, a2, -a1, a0});
}

Operator4 compose(const Operator4& f, const Operator4& g) {
    std::array<Rational, 16> m;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) {
            Rational sum;
            for (std::size_t k = 0; k < 4; ++k) sum += f(r, k) * g(k, c);
            m[r * 4 + c] = std::move(sum);
        }
    }
    return Operator4(std::move(m));
}

Operator4 op_add(const Operator4& f, const Operator4& g) {
    std::array<Rational, 16> m;
    for (std::size_t i = 0; i < 16; ++i) m[i] = f.entries()[i] + g.entries()[i];
    return Operator4(std::move(m));
}

Operator4 op_scale(const Rational& c, const Operator4& f) {
    std::array<Rational, 16> m;
    for (std::size_t i = 0; i < 16; ++i) m[i] = c * f.entries()[i];
    return Operator4(std::move(m));
}

Operator4 transpose(const Operator4& f) {
    std::array<Rational, 16> m;
    for (std::size_t r = 0; r < 4; ++r) {
        for (std::size_t c = 0; c < 4; ++c) m[c * 4 + r] = f(r, c);
    }
    return Operator4(std::move(m));
}

namespace {

Rational det3(const Operator4& f, std::size_t skip_row, std::size_t skip_col) {
    std::array<std::size_t, 3> rows{}, cols{};
    for (std::size_t i = 0, r = 0, c = 0; i < 4; ++i) {
        if (i != skip_row) rows[r++] = i;
        if (i != skip_col) cols[c++] = i;
    }
    auto at = [&](std::size_t i, std::size_t j) -> const Rational& { return f(rows[i], cols[j]); };
    return at(0, 0) * (at(1, 1) * at(2, 2) - at(1, 2) * at(2, 1)) -
           at(0, 1) * (at(1, 0) * at(2, 2) - at(1, 2) * at(2, 0)) +
           at(0, 2) * (at(1, 0) * at(2, 1) - at(1, 1) * at(2, 0));
}

} // namespace

// Cofactor expansion along the first row.
Rational determinant(const Operator4& f) {
    Rational det;
    for (std::size_t c = 0; c < 4; ++c) {
        if (f(0, c).is_zero()) continue;
        const Rational term = f(0, c) * det3(f, 0, c);
        det = (c % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace quatlin
