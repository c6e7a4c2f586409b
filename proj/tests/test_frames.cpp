#include "quatlin/autos.hpp"
#include "quatlin/frames.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace quatlin;

namespace {

const Quaternion one = Quaternion::unit(0);
const Quaternion i = Quaternion::unit(1);

bool all_zero(const std::array<Quaternion, 4>& c, std::size_t from) {
    for (std::size_t t = from; t < 4; ++t) {
        if (!c[t].is_zero()) return false;
    }
    return true;
}

FrameTerm left(const Operator4& base) { return {base, Side::Left}; }

} // namespace

TEST_CASE("frame matrix columns") {
    const Frame frame = builtin_frame("RIGHT_UNITS");
    const RationalMatrix m = frame_matrix(frame);
    REQUIRE(m.rows() == 16);
    REQUIRE(m.cols() == 16);
    // Column 4t+s is e_s * (x * e_t).
    for (std::size_t t = 0; t < 4; ++t) {
        for (std::size_t s = 0; s < 4; ++s) {
            const Operator4 expected =
                compose(left_mul_op(Quaternion::unit(s)), right_mul_op(Quaternion::unit(t)));
            for (std::size_t r = 0; r < 16; ++r) CHECK(m(r, 4 * t + s) == expected.entries()[r]);
        }
    }
    // Right side: column is (base x) * e_s.
    const std::array<FrameTerm, 1> right_term{FrameTerm{cyclic_op(), Side::Right}};
    const RationalMatrix mr = family_matrix(right_term);
    const Operator4 expected = compose(right_mul_op(Quaternion::unit(2)), cyclic_op());
    for (std::size_t r = 0; r < 16; ++r) CHECK(mr(r, 2) == expected.entries()[r]);
}

TEST_CASE("builtin frames are nonsingular except the attempt") {
    for (const char* name : {"RIGHT_UNITS", "AUTO"}) {
        CAPTURE(name);
        const Frame frame = builtin_frame(name);
        const Rational det = frame_determinant(frame);
        CHECK_FALSE(det.is_zero());
        CHECK(det == quatlin::testing::gauss_jordan(frame_matrix(frame)).det);
    }
    CHECK(frame_determinant(builtin_frame("PAPER_ATTEMPT")).is_zero());
    CHECK_THROWS_AS(builtin_frame("E"), UnknownName);
    // AUTO keeps its primary definition.
    CHECK(builtin_frame("AUTO").terms[3].base == rot_j_op());
}

TEST_CASE("four copies of the identity span four dimensions") {
    const std::array<FrameTerm, 4> terms{left(Operator4::identity()), left(Operator4::identity()),
                                         left(Operator4::identity()), left(Operator4::identity())};
    const RankReport report = family_rank(terms);
    CHECK(report.rank == 4);
    CHECK(report.nullity == 12);
    CHECK(report.defect_witness.has_value());
}

TEST_CASE("expand over RIGHT_UNITS") {
    const Frame frame = builtin_frame("RIGHT_UNITS");
    const Quaternion a{1, 2, 3, 4};

    const Expansion right = expand(right_mul_op(a), frame);
    CHECK(right.coefficients[0] == Quaternion::scalar(1));
    CHECK(right.coefficients[1] == Quaternion::scalar(2));
    CHECK(right.coefficients[2] == Quaternion::scalar(3));
    CHECK(right.coefficients[3] == Quaternion::scalar(4));

    const Expansion left_e = expand(left_mul_op(a), frame);
    CHECK(left_e.coefficients[0] == a);
    CHECK(all_zero(left_e.coefficients, 1));

    const Expansion sum = expand(op_add(left_mul_op(i), right_mul_op(i)), frame);
    CHECK(sum.coefficients[0] == i);
    CHECK(sum.coefficients[1] == one);
    CHECK(all_zero(sum.coefficients, 2));
    CHECK(reconstruct(sum) == op_add(left_mul_op(i), right_mul_op(i)));
}

TEST_CASE("expand over AUTO") {
    const Frame frame = builtin_frame("AUTO");
    const Expansion e = expand(conjugation_by(Quaternion{1, 1, 1, 1}), frame);
    CHECK(e.coefficients[0] == Quaternion{});
    CHECK(e.coefficients[1] == one);
    CHECK(all_zero(e.coefficients, 2));

    const Expansion id = expand(Operator4::identity(), frame);
    CHECK(id.coefficients[0] == one);
    CHECK(all_zero(id.coefficients, 1));

    const Quaternion a{1, 2, 3, 4};
    const Expansion a_a2 = expand(compose(left_mul_op(a), rot_i_op()), frame);
    CHECK(a_a2.coefficients[2] == a);
    CHECK(a_a2.coefficients[0].is_zero());
    CHECK(a_a2.coefficients[1].is_zero());
    CHECK(a_a2.coefficients[3].is_zero());
}

TEST_CASE("singular frame") {
    const Frame frame = builtin_frame("PAPER_ATTEMPT");
    try {
        (void)expand(Operator4::identity(), frame);
        FAIL("expected SingularFrame");
    } catch (const SingularFrame& e) {
        CHECK(e.report().rank == 12);
        CHECK(e.report().nullity == 4);
        REQUIRE(e.report().defect_witness.has_value());
    }
}

TEST_CASE("reconstruct") {
    const Frame frame = builtin_frame("AUTO");
    CHECK(reconstruct(Expansion{{}, frame}) == Operator4::zero());
    CHECK(reconstruct(Expansion{{one, {}, {}, {}}, frame}) == Operator4::identity());
}

TEST_CASE("family rank") {
    const std::array<FrameTerm, 4> attempt{left(Operator4::identity()), left(cyclic_op()),
                                           left(cyclic_sq_op()), left(conj_op())};
    const RankReport r = family_rank(attempt);
    CHECK(r.rank == 12);
    CHECK(r.rank == quatlin::testing::gauss_jordan(family_matrix(attempt)).rank);
    CHECK(r.nullity == 4);
    REQUIRE(r.defect_witness.has_value());
    CHECK(combine(attempt, *r.defect_witness) == Operator4::zero());
    bool nonzero = false;
    for (const auto& q : *r.defect_witness) nonzero = nonzero || !q.is_zero();
    CHECK(nonzero);

    const std::array<FrameTerm, 2> split{left(Operator4::identity()), left(conj_op())};
    const RankReport s = family_rank(split);
    CHECK(s.rank == 8);
    CHECK(s.rank == quatlin::testing::gauss_jordan(family_matrix(split)).rank);
    CHECK(s.nullity == 0);
    CHECK_FALSE(s.defect_witness.has_value());

    const Frame units = builtin_frame("RIGHT_UNITS");
    const RankReport u = family_rank(units.terms);
    CHECK(u.rank == 16);
    CHECK_FALSE(u.defect_witness.has_value());

    CHECK_THROWS_AS(family_rank(std::span<const FrameTerm>{}), std::invalid_argument);
}

TEST_CASE("family rank is monotone and bounded") {
    quatlin::testing::Gen gen(41);
    const std::vector<Operator4> pool{Operator4::identity(), cyclic_op(),  cyclic_sq_op(), rot_i_op(),
                                      rot_j_op(),            conj_op(),    anti_op(1),     anti_op(2),
                                      left_mul_op(i),        gen.op(3, 2)};
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<FrameTerm> terms;
        std::size_t previous = 0;
        for (int n = 0; n < 6; ++n) {
            terms.push_back({pool[static_cast<std::size_t>(gen.integer(0, 9))],
                             gen.integer(0, 1) ? Side::Left : Side::Right});
            const RankReport r = family_rank(terms);
            CHECK(r.rank >= previous);
            CHECK(r.rank <= 16);
            CHECK(r.rank + r.nullity == 4 * terms.size());
            CHECK(r.defect_witness.has_value() == (r.nullity > 0));
            if (r.defect_witness) CHECK(combine(terms, *r.defect_witness) == Operator4::zero());
            previous = r.rank;
        }
    }
}

TEST_CASE("dimension of L(H;H)") {
    CHECK(operator_span_rank(elementary_operators()) == 16);
    CHECK(elementary_operators().size() == 16);
}

TEST_CASE("round trip, uniqueness and frame change") {
    quatlin::testing::Gen gen(42);
    const Frame units = builtin_frame("RIGHT_UNITS");
    const Frame autos = builtin_frame("AUTO");
    for (int n = 0; n < 30; ++n) {
        const Operator4 f = gen.op();
        const Expansion eu = expand(f, units);
        const Expansion ea = expand(f, autos);
        CHECK(reconstruct(eu) == f);
        CHECK(reconstruct(ea) == f);
        CHECK(reconstruct(eu) == reconstruct(ea));

        // Distinct coefficient tuples reconstruct to distinct operators.
        std::array<Quaternion, 4> c1{gen.quaternion(5, 3), gen.quaternion(5, 3), gen.quaternion(5, 3),
                                     gen.quaternion(5, 3)};
        std::array<Quaternion, 4> c2 = c1;
        c2[static_cast<std::size_t>(gen.integer(0, 3))] = c2[0] + Quaternion::unit(
            static_cast<std::size_t>(gen.integer(0, 3)));
        if (c1 == c2) continue;
        for (const Frame* frame : {&units, &autos}) {
            CHECK(reconstruct(Expansion{c1, *frame}) != reconstruct(Expansion{c2, *frame}));
            CHECK(expand(reconstruct(Expansion{c1, *frame}), *frame).coefficients == c1);
        }
    }
}

TEST_CASE("right-side frames") {
    // Right-side coefficients over the left units span L(H;H) as well.
    const std::array<FrameTerm, 4> terms{
        FrameTerm{left_mul_op(Quaternion::unit(0)), Side::Right},
        FrameTerm{left_mul_op(Quaternion::unit(1)), Side::Right},
        FrameTerm{left_mul_op(Quaternion::unit(2)), Side::Right},
        FrameTerm{left_mul_op(Quaternion::unit(3)), Side::Right}};
    CHECK(family_rank(terms).rank == 16);
    const Frame frame{"LEFT_UNITS_R", terms};
    const Quaternion a{1, 2, 3, 4};
    const Expansion e = expand(right_mul_op(a), frame);
    CHECK(e.coefficients[0] == a);
    CHECK(reconstruct(e) == right_mul_op(a));
}
