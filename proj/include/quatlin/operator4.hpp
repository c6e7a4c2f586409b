#ifndef QUATLIN_OPERATOR4_HPP
#define QUATLIN_OPERATOR4_HPP

#include "quatlin/quaternion.hpp"
#include "quatlin/rational.hpp"

#include <array>
#include <cstddef>

namespace quatlin {

/// R-linear endomorphism of H as an exact 4x4 matrix acting on coordinate
/// columns (w, x, y, z): y = M * x. Entries are stored row-major.
class Operator4 {
public:
    /// Zero operator.
    Operator4() = default;
    explicit Operator4(std::array<Rational, 16> row_major) : m_(std::move(row_major)) {}

    static Operator4 identity();
    static Operator4 zero() { return {}; }
    static Operator4 diagonal(const Rational& d0, const Rational& d1, const Rational& d2,
                              const Rational& d3);

    const Rational& operator()(std::size_t row, std::size_t col) const { return m_[row * 4 + col]; }
    const std::array<Rational, 16>& entries() const { return m_; }

    /// Image of basis unit e_t, i.e. column t.
    Quaternion column(std::size_t t) const;

    friend bool operator==(const Operator4&, const Operator4&) = default;

private:
    std::array<Rational, 16> m_;
};

/// Operator whose column t holds the coordinates of img_t.
Operator4 op_from_unit_images(const Quaternion& img0, const Quaternion& img1,
                              const Quaternion& img2, const Quaternion& img3);

Quaternion apply(const Operator4& f, const Quaternion& x);

/// x -> a x
Operator4 left_mul_op(const Quaternion& a);
/// x -> x a
Operator4 right_mul_op(const Quaternion& a);

/// Matrix product: apply(compose(f, g), x) = apply(f, apply(g, x)).
Operator4 compose(const Operator4& f, const Operator4& g);
Operator4 op_add(const Operator4& f, const Operator4& g);
Operator4 op_scale(const Rational& c, const Operator4& f);
inline bool op_equal(const Operator4& f, const Operator4& g) { return f == g; }

Rational determinant(const Operator4& f);
Operator4 transpose(const Operator4& f);

} // namespace quatlin

#endif
