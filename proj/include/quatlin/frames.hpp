#ifndef QUATLIN_FRAMES_HPP
#define QUATLIN_FRAMES_HPP

#include "quatlin/errors.hpp"
#include "quatlin/exact_linalg.hpp"
#include "quatlin/operator4.hpp"
#include "quatlin/quaternion.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace quatlin {

/// Which side the quaternion coefficient multiplies the base operator's output.
enum class Side { Left, Right };

/// Left: x -> a (base x). Right: x -> (base x) a.
struct FrameTerm {
    Operator4 base;
    Side side = Side::Left;

    friend bool operator==(const FrameTerm&, const FrameTerm&) = default;
};

/// Four terms: 16 real unknowns against the 16-dimensional space L(H;H).
struct Frame {
    std::string name;
    std::array<FrameTerm, 4> terms;
};

struct Expansion {
    std::array<Quaternion, 4> coefficients;
    Frame frame;
};

struct RankReport {
    std::size_t rank = 0;
    std::size_t nullity = 0;
    /// One quaternion coefficient per term; combines to the zero operator.
    std::optional<std::vector<Quaternion>> defect_witness;
};

class SingularFrame : public Error {
public:
    SingularFrame(const std::string& frame_name, RankReport report)
        : Error("frame '" + frame_name + "' is singular (rank " + std::to_string(report.rank) +
                " of 16)"),
          report_(std::move(report)) {}

    const RankReport& report() const { return report_; }

private:
    RankReport report_;
};

/// Operator x -> coeff (base x) or x -> (base x) coeff.
Operator4 term_operator(const FrameTerm& term, const Quaternion& coeff);

/// Sum of term_operator over paired terms and coefficients (sizes must match).
Operator4 combine(std::span<const FrameTerm> terms, std::span<const Quaternion> coeffs);

/// 16 x 4n matrix; column 4t+s is the row-major flattening of the operator
/// contributed by coordinate s of coefficient t.
RationalMatrix family_matrix(std::span<const FrameTerm> terms);
RationalMatrix frame_matrix(const Frame& frame);

Rational frame_determinant(const Frame& frame);

/// Unique coefficients with reconstruct(result) = f. Throws SingularFrame.
Expansion expand(const Operator4& f, const Frame& frame);
Operator4 reconstruct(const Expansion& e);

/// Rank of the real span of the family. Throws std::invalid_argument when empty.
RankReport family_rank(std::span<const FrameTerm> terms);

/// Real dimension of the span of fixed operators.
std::size_t operator_span_rank(std::span<const Operator4> ops);
/// The 16 operators x -> e_s x e_t, s-major.
std::vector<Operator4> elementary_operators();

/// RIGHT_UNITS, AUTO or PAPER_ATTEMPT. Throws UnknownName otherwise.
Frame builtin_frame(std::string_view name);
const std::vector<std::string>& builtin_frame_names();

} // namespace quatlin

#endif
