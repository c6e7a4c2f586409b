#include "quatlin/io.hpp"

#include "quatlin/autos.hpp"
#include "quatlin/errors.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace quatlin::io {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Minimal reader for inline matrices [[a,b,c,d],...]; entries may be quoted.
class InlineMatrixReader {
public:
    explicit InlineMatrixReader(std::string_view text) : text_(text) {}

    Operator4 read() {
        std::array<Rational, 16> m;
        expect('[');
        for (std::size_t r = 0; r < 4; ++r) {
            if (r > 0) expect(',');
            expect('[');
            for (std::size_t c = 0; c < 4; ++c) {
                if (c > 0) expect(',');
                m[r * 4 + c] = entry();
            }
            expect(']');
        }
        expect(']');
        if (pos_ != text_.size()) fail("trailing characters");
        return Operator4(std::move(m));
    }

private:
    void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) fail(std::string("expected '") + ch + "'");
        ++pos_;
    }

    Rational entry() {
        const bool quoted = pos_ < text_.size() && text_[pos_] == '"';
        if (quoted) ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ']' && text_[pos_] != '"') {
            ++pos_;
        }
        const std::string_view token = text_.substr(start, pos_ - start);
        if (quoted) expect('"');
        return Rational::parse(token);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("inline matrix '" + std::string(text_) + "': " + what + " at offset " +
                         std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::vector<std::string_view> split_entries(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = std::string_view::npos;
    int depth = 0;
    for (std::size_t i = 0; i <= text.size(); ++i) {
        const bool end = i == text.size();
        const char ch = end ? ' ' : text[i];
        if (ch == '[') ++depth;
        if (ch == ']') --depth;
        const bool separator = depth == 0 && std::isspace(static_cast<unsigned char>(ch));
        if (separator || end) {
            if (start != std::string_view::npos) {
                out.push_back(text.substr(start, i - start));
                start = std::string_view::npos;
            }
        } else if (start == std::string_view::npos) {
            start = i;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in frame spec");
    return out;
}

} // namespace

Rational parse_rational(const Json& value) {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<long>());
    throw ParseError("expected a rational string, got " + value.dump());
}

Quaternion parse_quaternion(const Json& value) {
    if (!value.is_array() || value.size() != 4) {
        throw ParseError("quaternion must be an array of 4 rationals, got " + value.dump());
    }
    return {parse_rational(value[0]), parse_rational(value[1]), parse_rational(value[2]),
            parse_rational(value[3])};
}

Quaternion parse_quaternion_list(std::string_view text) {
    std::vector<Rational> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = text.find(',', start);
        parts.push_back(Rational::parse(trim(text.substr(start, comma - start))));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (parts.size() != 4) {
        throw ParseError("quaternion '" + std::string(text) + "' must have 4 comma-separated components");
    }
    return {parts[0], parts[1], parts[2], parts[3]};
}

Operator4 parse_operator(const Json& rows) {
    if (!rows.is_array() || rows.size() != 4) throw ParseError("matrix must have exactly 4 rows");
    std::array<Rational, 16> m;
    for (std::size_t r = 0; r < 4; ++r) {
        const Json& row = rows[r];
        if (!row.is_array() || row.size() != 4) {
            throw ParseError("matrix row " + std::to_string(r) + " must have exactly 4 entries");
        }
        for (std::size_t c = 0; c < 4; ++c) m[r * 4 + c] = parse_rational(row[c]);
    }
    return Operator4(std::move(m));
}

MatrixDocument parse_matrix_document(std::string_view json_text) {
    Json doc;
    try {
        doc = Json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("matrix")) {
        throw ParseError("document must be an object with a \"matrix\" field");
    }
    MatrixDocument out{parse_operator(doc["matrix"]), std::nullopt};
    if (doc.contains("label") && !doc["label"].is_null()) {
        if (!doc["label"].is_string()) throw ParseError("\"label\" must be a string");
        out.label = doc["label"].get<std::string>();
    }
    return out;
}

Operator4 parse_operator_name(std::string_view text) {
    // Longest tokens first so "I1" is not read as "I" followed by "1".
    static constexpr std::array<std::string_view, 7> tokens{"id", "A1", "A2", "A3", "I1", "I2", "I"};
    if (text.empty()) throw ParseError("empty operator name");
    Operator4 result = Operator4::identity();
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto it = std::find_if(tokens.begin(), tokens.end(),
                                     [&](std::string_view t) { return rest.starts_with(t); });
        if (it == tokens.end()) throw ParseError("unknown operator name '" + std::string(text) + "'");
        result = compose(result, catalog_op(*it));
        rest.remove_prefix(it->size());
    }
    return result;
}

FrameSpec parse_frame_spec(std::string_view text) {
    const std::string_view body = trim(text);
    const auto& builtins = builtin_frame_names();
    if (std::find(builtins.begin(), builtins.end(), body) != builtins.end()) {
        Frame frame = builtin_frame(body);
        return {frame.name, {frame.terms.begin(), frame.terms.end()}};
    }
    FrameSpec spec{std::string(body), {}};
    for (std::string_view entry : split_entries(body)) {
        if (entry.size() < 3 || entry[1] != ':' || (entry[0] != 'L' && entry[0] != 'R')) {
            throw ParseError("frame entry '" + std::string(entry) + "' must look like L:<op> or R:<op>");
        }
        const Side side = entry[0] == 'L' ? Side::Left : Side::Right;
        const std::string_view op = entry.substr(2);
        FrameTerm term{op.front() == '[' ? InlineMatrixReader(op).read() : parse_operator_name(op), side};
        spec.terms.push_back(std::move(term));
    }
    if (spec.terms.empty()) throw ParseError("empty frame spec");
    return spec;
}

Frame to_frame(const FrameSpec& spec) {
    if (spec.terms.size() != 4) {
        throw ParseError("a frame needs exactly 4 terms, got " + std::to_string(spec.terms.size()));
    }
    return Frame{spec.name, {spec.terms[0], spec.terms[1], spec.terms[2], spec.terms[3]}};
}

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Quaternion& q) {
    Json out = Json::array();
    for (const Rational& c : q.coords()) out.push_back(c.str());
    return out;
}

Json to_json(const Operator4& f) {
    Json out = Json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < 4; ++c) row.push_back(f(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

Json to_approx_json(const Quaternion& q) {
    Json out = Json::array();
    for (const Rational& c : q.coords()) out.push_back(c.to_double());
    return out;
}

Json to_approx_json(const Operator4& f) {
    Json out = Json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < 4; ++c) row.push_back(f(r, c).to_double());
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace quatlin::io
