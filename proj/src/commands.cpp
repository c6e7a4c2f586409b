#include "quatlin/commands.hpp"

#include "quatlin/autos.hpp"
#include "quatlin/errors.hpp"
#include "quatlin/frames.hpp"

#include <cstdlib>
#include <functional>

namespace quatlin::cli {

using io::Json;

namespace {

void merge(Json& into, const Json& from) {
    for (const auto& [key, value] : from.items()) into[key] = value;
}

bool is_scalar(const Json& v) { return !v.is_array() && !v.is_object(); }

bool is_flat_array(const Json& v) {
    if (!v.is_array()) return false;
    for (const Json& e : v) {
        if (!is_scalar(e)) return false;
    }
    return true;
}

std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "none";
    return v.dump();
}

std::string flat_text(const Json& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += scalar_text(v[i]);
    }
    return out + "]";
}

void render_object(const Json& obj, std::size_t indent, std::string& out);

void render_value(const std::string& head, const Json& v, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (is_scalar(v)) {
        out += pad + head + ": " + scalar_text(v) + "\n";
    } else if (is_flat_array(v)) {
        out += pad + head + ": " + flat_text(v) + "\n";
    } else if (v.is_object()) {
        out += pad + head + ":\n";
        render_object(v, indent + 2, out);
    } else {
        out += pad + head + ":\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
            const Json& e = v[i];
            if (is_scalar(e) || is_flat_array(e)) {
                out += pad + "  " + (is_scalar(e) ? scalar_text(e) : flat_text(e)) + "\n";
            } else {
                render_value("[" + std::to_string(i) + "]", e, indent + 2, out);
            }
        }
    }
}

void render_object(const Json& obj, std::size_t indent, std::string& out) {
    for (const auto& [key, value] : obj.items()) render_value(key, value, indent, out);
}

Json algebraic(std::span<const Quaternion> qs) {
    Json out = Json::array();
    for (const Quaternion& q : qs) out.push_back(to_algebraic(q));
    return out;
}

Json quaternions(std::span<const Quaternion> qs) {
    Json out = Json::array();
    for (const Quaternion& q : qs) out.push_back(io::to_json(q));
    return out;
}

Json rank_report_json(const RankReport& report) {
    Json out;
    out["rank"] = report.rank;
    out["nullity"] = report.nullity;
    if (report.defect_witness) {
        out["defect_witness"] = quaternions(*report.defect_witness);
        out["defect_witness_algebraic"] = algebraic(*report.defect_witness);
    } else {
        out["defect_witness"] = nullptr;
    }
    return out;
}

// Expands and re-verifies; never returns unverified coefficients.
Expansion verified_expand(const Operator4& f, const Frame& frame) {
    Expansion e = expand(f, frame);
    if (reconstruct(e) != f) {
        throw InternalInconsistency("expansion over '" + frame.name + "' does not reconstruct the input");
    }
    return e;
}

Json expansion_json(const Expansion& e, const OutputOptions& opts) {
    Json out;
    out["frame"] = e.frame.name;
    out["coefficients"] = quaternions(e.coefficients);
    out["coefficients_algebraic"] = algebraic(e.coefficients);
    if (opts.approx) {
        Json approx = Json::array();
        for (const Quaternion& q : e.coefficients) approx.push_back(io::to_approx_json(q));
        out["coefficients_approx"] = std::move(approx);
    }
    out["verified"] = true;
    return out;
}

void add_label(Json& out, const io::MatrixDocument& doc) {
    if (doc.label) out["label"] = *doc.label;
}

CommandResult emit(const Json& doc, const OutputOptions& opts, int code = exit_code::ok) {
    return {code, render(doc, opts.format), {}};
}

CommandResult guarded(const std::function<CommandResult()>& body) {
    try {
        return body();
    } catch (const ParseError& e) {
        return {exit_code::parse, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const NotAnAutomorphism& e) {
        return {exit_code::precondition, {}, std::string("error: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {1, {}, std::string("internal error: ") + e.what() + "\n"};
    }
}

} // namespace

OutputFormat format_from_env() {
    const char* value = std::getenv("QUATLIN_OUTPUT");
    if (value == nullptr || std::string_view(value) == "pretty") return OutputFormat::Pretty;
    if (std::string_view(value) == "json") return OutputFormat::Json;
    throw ParseError(std::string("QUATLIN_OUTPUT must be 'json' or 'pretty', got '") + value + "'");
}

std::string render(const Json& doc, OutputFormat format) {
    if (format == OutputFormat::Json) return doc.dump(2) + "\n";
    std::string out;
    render_object(doc, 0, out);
    return out;
}

CommandResult cmd_decompose(std::string_view document_json, std::string_view frame_text,
                            const OutputOptions& opts) {
    return guarded([&] {
        const io::MatrixDocument doc = io::parse_matrix_document(document_json);
        const Frame frame = io::to_frame(io::parse_frame_spec(frame_text));
        Json out;
        out["command"] = "decompose";
        add_label(out, doc);
        try {
            const Expansion e = verified_expand(doc.matrix, frame);
            merge(out, expansion_json(e, opts));
            return emit(out, opts);
        } catch (const SingularFrame& s) {
            out["frame"] = frame.name;
            out["error"] = "singular frame";
            out["rank_report"] = rank_report_json(s.report());
            return emit(out, opts, exit_code::singular_frame);
        }
    });
}

CommandResult cmd_check(std::string_view document_json, const OutputOptions& opts) {
    return guarded([&] {
        const io::MatrixDocument doc = io::parse_matrix_document(document_json);
        const AutoKind kind = classify(doc.matrix);
        const CoordinateCheck coords = check_coordinate_conditions(doc.matrix);
        Json out;
        out["command"] = "check";
        add_label(out, doc);
        out["kind"] = std::string(to_string(kind.tag));
        out["coordinate_conditions"] = coords.ok ? "pass" : "fail";
        if (!coords.ok) out["coordinate_failure"] = coords.failure;
        if (kind.tag == AutoTag::Neither) out["witness"] = kind.reason;
        return emit(out, opts);
    });
}

CommandResult cmd_recover(std::string_view document_json, const OutputOptions& opts) {
    return guarded([&] {
        const io::MatrixDocument doc = io::parse_matrix_document(document_json);
        const Conjugator c = recover_conjugator(doc.matrix);
        Json out;
        out["command"] = "recover";
        add_label(out, doc);
        out["conjugator"] = io::to_json(c.q);
        out["conjugator_algebraic"] = to_algebraic(c.q);
        if (opts.approx) out["conjugator_approx"] = io::to_approx_json(c.q);
        out["verified"] = conjugation_by(c.q) == doc.matrix;
        return emit(out, opts);
    });
}

CommandResult cmd_rank(std::string_view spec_text, const OutputOptions& opts) {
    return guarded([&] {
        const io::FrameSpec spec = io::parse_frame_spec(spec_text);
        if (spec.terms.size() > 8) {
            throw ParseError("rank accepts 1..8 terms, got " + std::to_string(spec.terms.size()));
        }
        Json out;
        out["command"] = "rank";
        out["spec"] = spec.name;
        out["terms"] = spec.terms.size();
        out["unknowns"] = 4 * spec.terms.size();
        merge(out, rank_report_json(family_rank(spec.terms)));
        return emit(out, opts);
    });
}

CommandResult cmd_catalog(const OutputOptions& opts) {
    return guarded([&] {
        Json entries = Json::array();
        for (const std::string& name : catalog_names()) {
            const Operator4 f = catalog_op(name);
            Json entry;
            entry["name"] = name;
            entry["matrix"] = io::to_json(f);
            if (opts.approx) entry["matrix_approx"] = io::to_approx_json(f);
            const auto order = operator_order(f);
            entry["order"] = order ? Json(*order) : Json(nullptr);
            const AutoKind kind = classify(f);
            entry["kind"] = std::string(to_string(kind.tag));
            entry["coordinate_conditions"] = check_coordinate_conditions(f).ok ? "pass" : "fail";
            if (kind.tag == AutoTag::LinearAutomorphism) {
                const Conjugator c = recover_conjugator(f);
                entry["conjugator"] = io::to_json(c.q);
                entry["conjugator_algebraic"] = to_algebraic(c.q);
            }
            entries.push_back(std::move(entry));
        }
        Json out;
        out["command"] = "catalog";
        out["entries"] = std::move(entries);
        return emit(out, opts);
    });
}

CommandResult cmd_demo(std::optional<std::string_view> a_text, const OutputOptions& opts) {
    return guarded([&] {
        const Quaternion a = a_text ? io::parse_quaternion_list(*a_text) : Quaternion{1, 2, 3, 4};
        const Operator4 left = left_mul_op(a);
        const Operator4 right = right_mul_op(a);
        const std::vector<std::pair<std::string, Operator4>> examples{
            {"x -> a*x", left},
            {"x -> a*A1(x)", compose(left, cyclic_op())},
            {"x -> x*a", right},
            {"x -> a*x + x*a", op_add(left, right)},
        };
        const std::array<Frame, 2> frames{builtin_frame("RIGHT_UNITS"), builtin_frame("AUTO")};

        Json items = Json::array();
        for (const auto& [name, f] : examples) {
            Json item;
            item["operator"] = name;
            item["matrix"] = io::to_json(f);
            Json expansions = Json::array();
            for (const Frame& frame : frames) {
                const Expansion e = verified_expand(f, frame);
                Json ej = expansion_json(e, opts);
                Json vanishing = Json::array();
                Json nonzero = Json::array();
                for (std::size_t t = 0; t < 4; ++t) {
                    (e.coefficients[t].is_zero() ? vanishing : nonzero).push_back(t);
                }
                ej["vanishing_terms"] = std::move(vanishing);
                ej["nonzero_terms"] = std::move(nonzero);
                expansions.push_back(std::move(ej));
            }
            item["expansions"] = std::move(expansions);
            items.push_back(std::move(item));
        }

        Json out;
        out["command"] = "demo";
        out["a"] = io::to_json(a);
        out["a_algebraic"] = to_algebraic(a);
        out["note"] =
            "RIGHT_UNITS is {x*1, x*i, x*j, x*k} and AUTO is {id, A1, A2, A3}, all with left "
            "coefficients; term indices are specific to these frames";
        out["examples"] = std::move(items);

        const Frame attempt = builtin_frame("PAPER_ATTEMPT");
        Json attempt_json;
        attempt_json["spec"] = "L:id L:A1 L:A1A1 L:I";
        merge(attempt_json, rank_report_json(family_rank(attempt.terms)));
        out["paper_attempt"] = std::move(attempt_json);

        const std::array<FrameTerm, 2> lin_antilin{FrameTerm{Operator4::identity(), Side::Left},
                                                   FrameTerm{conj_op(), Side::Left}};
        Json split;
        split["spec"] = "L:id L:I";
        merge(split, rank_report_json(family_rank(lin_antilin)));
        out["linear_plus_antilinear"] = std::move(split);

        Json dims;
        dims["real_dimension"] = operator_span_rank(elementary_operators());
        dims["frame_terms"] = 4;
        out["dimensions"] = std::move(dims);
        return emit(out, opts);
    });
}

} // namespace quatlin::cli
