#include "quatlin/frames.hpp"

#include "quatlin/autos.hpp"

#include <stdexcept>

namespace quatlin {

namespace {

Operator4 coefficient_action(const FrameTerm& term, const Quaternion& coeff) {
    return term.side == Side::Left ? left_mul_op(coeff) : right_mul_op(coeff);
}

std::vector<Rational> flatten(const Operator4& f) {
    return {f.entries().begin(), f.entries().end()};
}

Frame make_frame(std::string name, const Operator4& b0, const Operator4& b1, const Operator4& b2,
                 const Operator4& b3) {
    return Frame{std::move(name), {FrameTerm{b0, Side::Left}, FrameTerm{b1, Side::Left},
                                   FrameTerm{b2, Side::Left}, FrameTerm{b3, Side::Left}}};
}

Frame auto_frame() {
    Frame frame = make_frame("AUTO", Operator4::identity(), cyclic_op(), rot_i_op(), rot_j_op());
    if (frame_determinant(frame).is_zero()) {
        frame.terms[3].base = rot_k_op();
        if (frame_determinant(frame).is_zero()) {
            throw InternalInconsistency("AUTO frame is singular with either third rotation");
        }
    }
    return frame;
}

} // namespace

Operator4 term_operator(const FrameTerm& term, const Quaternion& coeff) {
    return compose(coefficient_action(term, coeff), term.base);
}

Operator4 combine(std::span<const FrameTerm> terms, std::span<const Quaternion> coeffs) {
    if (terms.size() != coeffs.size()) throw std::invalid_argument("combine: size mismatch");
    Operator4 sum;
    for (std::size_t t = 0; t < terms.size(); ++t) sum = op_add(sum, term_operator(terms[t], coeffs[t]));
    return sum;
}

RationalMatrix family_matrix(std::span<const FrameTerm> terms) {
    RationalMatrix m(16, 4 * terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
        for (std::size_t s = 0; s < 4; ++s) {
            const Operator4 column = term_operator(terms[t], Quaternion::unit(s));
            for (std::size_t r = 0; r < 16; ++r) m(r, 4 * t + s) = column.entries()[r];
        }
    }
    return m;
}

RationalMatrix frame_matrix(const Frame& frame) { return family_matrix(frame.terms); }

Rational frame_determinant(const Frame& frame) { return determinant(frame_matrix(frame)); }

Expansion expand(const Operator4& f, const Frame& frame) {
    const RationalMatrix a = frame_matrix(frame);
    const auto x = solve(a, flatten(f));
    if (!x) throw SingularFrame(frame.name, family_rank(frame.terms));
    Expansion e{{}, frame};
    for (std::size_t t = 0; t < 4; ++t) {
        e.coefficients[t] = {(*x)[4 * t], (*x)[4 * t + 1], (*x)[4 * t + 2], (*x)[4 * t + 3]};
    }
    return e;
}

Operator4 reconstruct(const Expansion& e) { return combine(e.frame.terms, e.coefficients); }

RankReport family_rank(std::span<const FrameTerm> terms) {
    if (terms.empty()) throw std::invalid_argument("family_rank: empty family");
    const RationalMatrix a = family_matrix(terms);
    RankReport report;
    report.rank = rank(a);
    report.nullity = a.cols() - report.rank;
    if (const auto kernel = kernel_witness(a)) {
        std::vector<Quaternion> witness;
        for (std::size_t t = 0; t < terms.size(); ++t) {
            witness.emplace_back((*kernel)[4 * t], (*kernel)[4 * t + 1], (*kernel)[4 * t + 2],
                                 (*kernel)[4 * t + 3]);
        }
        if (combine(terms, witness) != Operator4::zero()) {
            throw InternalInconsistency("family_rank: kernel witness does not vanish");
        }
        report.defect_witness = std::move(witness);
    }
    return report;
}

std::size_t operator_span_rank(std::span<const Operator4> ops) {
    RationalMatrix m(16, ops.size());
    for (std::size_t c = 0; c < ops.size(); ++c) {
        for (std::size_t r = 0; r < 16; ++r) m(r, c) = ops[c].entries()[r];
    }
    return rank(m);
}

std::vector<Operator4> elementary_operators() {
    std::vector<Operator4> ops;
    for (std::size_t s = 0; s < 4; ++s) {
        for (std::size_t t = 0; t < 4; ++t) {
            ops.push_back(compose(left_mul_op(Quaternion::unit(s)), right_mul_op(Quaternion::unit(t))));
        }
    }
    return ops;
}

Frame builtin_frame(std::string_view name) {
    if (name == "RIGHT_UNITS") {
        return make_frame("RIGHT_UNITS", right_mul_op(Quaternion::unit(0)),
                          right_mul_op(Quaternion::unit(1)), right_mul_op(Quaternion::unit(2)),
                          right_mul_op(Quaternion::unit(3)));
    }
    if (name == "AUTO") {
        static const Frame cached = auto_frame();
        return cached;
    }
    if (name == "PAPER_ATTEMPT") {
        return make_frame("PAPER_ATTEMPT", Operator4::identity(), cyclic_op(), cyclic_sq_op(),
                          conj_op());
    }
    throw UnknownName(std::string(name));
}

const std::vector<std::string>& builtin_frame_names() {
    static const std::vector<std::string> names{"RIGHT_UNITS", "AUTO", "PAPER_ATTEMPT"};
    return names;
}

} // namespace quatlin
