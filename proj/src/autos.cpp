#include "quatlin/autos.hpp"

#include "quatlin/errors.hpp"

#include <array>
#include <stdexcept>

namespace quatlin {

namespace {

const Quaternion& unit(std::size_t t) {
    static const std::array<Quaternion, 4> units{Quaternion::unit(0), Quaternion::unit(1),
                                                 Quaternion::unit(2), Quaternion::unit(3)};
    return units[t];
}

constexpr const char* unit_name[] = {"1", "i", "j", "k"};

std::string law_witness(const Operator4& f, std::size_t s, std::size_t t, bool reversed) {
    const Quaternion lhs = apply(f, unit(s) * unit(t));
    const Quaternion rhs = reversed ? apply(f, unit(t)) * apply(f, unit(s))
                                    : apply(f, unit(s)) * apply(f, unit(t));
    std::string out = "f(";
    out += unit_name[s];
    out += "*";
    out += unit_name[t];
    out += ") = " + to_algebraic(lhs) + " but ";
    if (reversed) {
        out += "f(" + std::string(unit_name[t]) + ")*f(" + unit_name[s] + ")";
    } else {
        out += "f(" + std::string(unit_name[s]) + ")*f(" + unit_name[t] + ")";
    }
    return out + " = " + to_algebraic(rhs);
}

// First ordered basis pair violating the (anti)multiplicative law.
std::optional<std::string> first_law_failure(const Operator4& f, bool reversed) {
    std::array<Quaternion, 4> images;
    for (std::size_t t = 0; t < 4; ++t) images[t] = f.column(t);
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t t = 0; t < 4; ++t) {
            const Quaternion lhs = apply(f, unit(s) * unit(t));
            const Quaternion rhs = reversed ? images[t] * images[s] : images[s] * images[t];
            if (lhs != rhs) return law_witness(f, s, t, reversed);
        }
    }
    return std::nullopt;
}

Quaternion primitive_integer(const Quaternion& q) {
    mpz_class den_lcm = 1;
    for (const Rational& c : q.coords()) {
        mpz_class l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        den_lcm = l;
    }
    std::array<mpz_class, 4> ints;
    mpz_class g = 0;
    for (std::size_t t = 0; t < 4; ++t) {
        ints[t] = q[t].numerator() * (den_lcm / q[t].denominator());
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), g.get_mpz_t(), ints[t].get_mpz_t());
        g = gg;
    }
    if (g == 0) return q;
    for (const mpz_class& v : ints) {
        if (v != 0) {
            if (v < 0) g = -g;
            break;
        }
    }
    return {Rational(mpz_class(ints[0] / g)), Rational(mpz_class(ints[1] / g)), Rational(mpz_class(ints[2] / g)),
            Rational(mpz_class(ints[3] / g))};
}

} // namespace

Operator4 cyclic_op() {
    return op_from_unit_images(unit(0), unit(2), unit(3), unit(1));
}

Operator4 cyclic_sq_op() { return compose(cyclic_op(), cyclic_op()); }

Operator4 rot_i_op() {
    return op_from_unit_images(unit(0), unit(1), unit(3), -unit(2));
}

Operator4 rot_j_op() {
    return op_from_unit_images(unit(0), -unit(3), unit(2), unit(1));
}

Operator4 rot_k_op() {
    return op_from_unit_images(unit(0), unit(2), -unit(1), unit(3));
}

Operator4 conj_op() { return Operator4::diagonal(1, -1, -1, -1); }

Operator4 anti_op(int k) {
    switch (k) {
    case 1: return compose(cyclic_op(), conj_op());
    case 2: return compose(cyclic_sq_op(), conj_op());
    default: throw std::out_of_range("anti_op index must be 1 or 2, got " + std::to_string(k));
    }
}

Operator4 conjugation_by(const Quaternion& q) {
    if (q.is_zero()) throw ZeroQuaternion("conjugation_by");
    return compose(left_mul_op(q), right_mul_op(quat_inverse(q)));
}

std::string_view to_string(AutoTag tag) {
    switch (tag) {
    case AutoTag::LinearAutomorphism: return "LinearAutomorphism";
    case AutoTag::AntilinearAutomorphism: return "AntilinearAutomorphism";
    case AutoTag::Neither: break;
    }
    return "Neither";
}

CoordinateCheck check_coordinate_conditions(const Operator4& f) {
    if (f.column(0) != unit(0)) {
        return {false, "f(1) != 1: 1 \xE2\x86\xA6 " + to_algebraic(f.column(0))};
    }
    for (std::size_t c = 1; c < 4; ++c) {
        if (!f(0, c).is_zero()) {
            return {false, "first row does not vanish off the corner (entry 0," + std::to_string(c) +
                               " = " + f(0, c).str() + ")"};
        }
    }
    // Q^T Q: Gram matrix of the imaginary block's columns.
    for (std::size_t a = 1; a < 4; ++a) {
        for (std::size_t b = 1; b < 4; ++b) {
            Rational dot;
            for (std::size_t r = 1; r < 4; ++r) dot += f(r, a) * f(r, b);
            if (dot != Rational(a == b ? 1 : 0)) {
                return {false, "Q^T Q != I (entry " + std::to_string(a - 1) + "," +
                                   std::to_string(b - 1) + " = " + dot.str() + ")"};
            }
        }
    }
    // With f(1) = 1 and a zero first row, det f = det Q.
    const Rational det_q = determinant(f);
    if (det_q != Rational(1)) return {false, "det Q = " + det_q.str() + ", expected 1"};
    return {true, {}};
}

AutoKind classify(const Operator4& f) {
    if (f.column(0) != unit(0)) {
        return {AutoTag::Neither, "not unital: 1 \xE2\x86\xA6 " + to_algebraic(f.column(0))};
    }
    const auto mult_failure = first_law_failure(f, false);
    const auto anti_failure = first_law_failure(f, true);
    if (mult_failure && anti_failure) {
        return {AutoTag::Neither, "not multiplicative: " + *mult_failure +
                                      "; not antimultiplicative: " + *anti_failure};
    }
    if (determinant(f).is_zero()) return {AutoTag::Neither, "not invertible: det f = 0"};
    return {mult_failure ? AutoTag::AntilinearAutomorphism : AutoTag::LinearAutomorphism, {}};
}

Conjugator recover_conjugator(const Operator4& f) {
    const AutoKind kind = classify(f);
    if (kind.tag != AutoTag::LinearAutomorphism) {
        throw NotAnAutomorphism("input is not a linear automorphism (" +
                                std::string(to_string(kind.tag)) +
                                (kind.reason.empty() ? "" : ": " + kind.reason) + ")");
    }
    auto r = [&](std::size_t i, std::size_t j) -> const Rational& { return f(i, j); };
    const Rational one(1);
    // Each candidate is a rational multiple of the conjugator; at least one is nonzero.
    const std::array<Quaternion, 4> candidates{
        Quaternion{one + r(1, 1) + r(2, 2) + r(3, 3), r(3, 2) - r(2, 3), r(1, 3) - r(3, 1),
                   r(2, 1) - r(1, 2)},
        Quaternion{r(3, 2) - r(2, 3), one + r(1, 1) - r(2, 2) - r(3, 3), r(1, 2) + r(2, 1),
                   r(1, 3) + r(3, 1)},
        Quaternion{r(1, 3) - r(3, 1), r(1, 2) + r(2, 1), one - r(1, 1) + r(2, 2) - r(3, 3),
                   r(2, 3) + r(3, 2)},
        Quaternion{r(2, 1) - r(1, 2), r(1, 3) + r(3, 1), r(2, 3) + r(3, 2),
                   one - r(1, 1) - r(2, 2) + r(3, 3)},
    };
    for (const Quaternion& candidate : candidates) {
        if (candidate.is_zero()) continue;
        const Quaternion q = primitive_integer(candidate);
        if (conjugation_by(q) == f) return {q};
    }
    throw InternalInconsistency("recover_conjugator: no trace candidate reproduces the operator");
}

bool collinear(const Quaternion& a, const Quaternion& b) {
    if (a.is_zero() || b.is_zero()) return false;
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t t = s + 1; t < 4; ++t) {
            if (a[s] * b[t] != a[t] * b[s]) return false;
        }
    }
    return true;
}

std::optional<int> operator_order(const Operator4& f, int max_order) {
    const Operator4 id = Operator4::identity();
    Operator4 power = f;
    for (int n = 1; n <= max_order; ++n) {
        if (power == id) return n;
        power = compose(f, power);
    }
    return std::nullopt;
}

const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"id", "A1", "A2", "A3", "I", "I1", "I2"};
    return names;
}

Operator4 catalog_op(std::string_view name) {
    if (name == "id") return Operator4::identity();
    if (name == "A1") return cyclic_op();
    if (name == "A2") return rot_i_op();
    if (name == "A3") return rot_j_op();
    if (name == "I") return conj_op();
    if (name == "I1") return anti_op(1);
    if (name == "I2") return anti_op(2);
    throw UnknownName(std::string(name));
}

} // namespace quatlin
