#include "quatlin/quaternion.hpp"

#include "quatlin/errors.hpp"

#include <stdexcept>

namespace quatlin {

Quaternion Quaternion::unit(std::size_t t) {
    if (t > 3) throw std::out_of_range("quaternion basis index must be 0..3");
    Quaternion e;
    e.c_[t] = 1;
    return e;
}

bool Quaternion::is_zero() const {
    return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero();
}

Quaternion Quaternion::operator-() const { return {-c_[0], -c_[1], -c_[2], -c_[3]}; }

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    const auto& [a0, a1, a2, a3] = a.c_;
    const auto& [b0, b1, b2, b3] = b.c_;
    return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

Quaternion operator*(const Rational& r, const Quaternion& a) {
    return {r * a.c_[0], r * a.c_[1], r * a.c_[2], r * a.c_[3]};
}

Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }

Quaternion quat_conj(const Quaternion& a) { return {a.w(), -a.x(), -a.y(), -a.z()}; }

Rational quat_norm_sq(const Quaternion& a) {
    return a.w() * a.w() + a.x() * a.x() + a.y() * a.y() + a.z() * a.z();
}

Quaternion quat_inverse(const Quaternion& a) {
    if (a.is_zero()) throw ZeroQuaternion("quat_inverse");
    return (Rational(1) / quat_norm_sq(a)) * quat_conj(a);
}

std::string to_algebraic(const Quaternion& a) {
    static constexpr const char* suffix[] = {"", "i", "j", "k"};
    std::string out;
    for (std::size_t t = 0; t < 4; ++t) {
        const Rational& c = a[t];
        if (c.is_zero()) continue;
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (t == 0 || mag != Rational(1)) out += mag.str();
        out += suffix[t];
    }
    return out.empty() ? "0" : out;
}

} // namespace quatlin
