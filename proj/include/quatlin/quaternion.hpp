#ifndef QUATLIN_QUATERNION_HPP
#define QUATLIN_QUATERNION_HPP

#include "quatlin/rational.hpp"

#include <array>
#include <cstddef>
#include <string>

namespace quatlin {

/// Real quaternion w + x i + y j + z k with exact rational coordinates.
class Quaternion {
public:
    Quaternion() = default;
    Quaternion(Rational w, Rational x, Rational y, Rational z)
        : c_{std::move(w), std::move(x), std::move(y), std::move(z)} {}

    /// Embeds a real scalar as r + 0i + 0j + 0k.
    static Quaternion scalar(Rational r) { return {std::move(r), 0, 0, 0}; }
    /// Basis unit e_t of (1, i, j, k).
    static Quaternion unit(std::size_t t);

    const Rational& w() const { return c_[0]; }
    const Rational& x() const { return c_[1]; }
    const Rational& y() const { return c_[2]; }
    const Rational& z() const { return c_[3]; }
    const Rational& operator[](std::size_t t) const { return c_[t]; }
    const std::array<Rational, 4>& coords() const { return c_; }

    bool is_zero() const;

    Quaternion operator-() const;
    friend Quaternion operator+(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator-(const Quaternion& a, const Quaternion& b);
    /// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
    friend Quaternion operator*(const Quaternion& a, const Quaternion& b);
    friend Quaternion operator*(const Rational& r, const Quaternion& a);

    friend bool operator==(const Quaternion&, const Quaternion&) = default;

private:
    std::array<Rational, 4> c_;
};

Quaternion quat_mul(const Quaternion& a, const Quaternion& b);
Quaternion quat_conj(const Quaternion& a);
Rational quat_norm_sq(const Quaternion& a);
/// conj(a) / |a|^2. Throws ZeroQuaternion for a = 0.
Quaternion quat_inverse(const Quaternion& a);

/// Readable algebraic form, e.g. "1 - 2i + 1/2k", "-j", "0".
std::string to_algebraic(const Quaternion& a);

} // namespace quatlin

#endif
