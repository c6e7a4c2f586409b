#ifndef QUATLIN_IO_HPP
#define QUATLIN_IO_HPP

#include "quatlin/frames.hpp"
#include "quatlin/operator4.hpp"
#include "quatlin/quaternion.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace quatlin::io {

using Json = nlohmann::ordered_json;

/// {"label": optional string, "matrix": 4 rows of 4 rational strings}.
struct MatrixDocument {
    Operator4 matrix;
    std::optional<std::string> label;
};

MatrixDocument parse_matrix_document(std::string_view json_text);

/// Entry of a matrix or quaternion: a rational string, or a JSON integer.
Rational parse_rational(const Json& value);
/// 4-element array in (w, x, y, z) order.
Quaternion parse_quaternion(const Json& value);
/// "w,x,y,z", e.g. "1,2,3,4" or "1/2,0,-1,0".
Quaternion parse_quaternion_list(std::string_view text);
Operator4 parse_operator(const Json& rows);

/// Catalog names, possibly concatenated to mean composition:
/// "A1A1" is A1 o A1, "A1I" is A1 o I.
Operator4 parse_operator_name(std::string_view text);

struct FrameSpec {
    std::string name;
    std::vector<FrameTerm> terms;
};

/// Whitespace-separated "side:operator" entries, side L or R, operator a
/// catalog name (see parse_operator_name) or an inline matrix such as
/// [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]. A builtin frame name on its own
/// is also accepted.
FrameSpec parse_frame_spec(std::string_view text);
Frame to_frame(const FrameSpec& spec);

Json to_json(const Rational& r);
Json to_json(const Quaternion& q);
Json to_json(const Operator4& f);
Json to_approx_json(const Quaternion& q);
Json to_approx_json(const Operator4& f);

} // namespace quatlin::io

#endif
