#include "crossline/line_arith.hpp"

#include <sstream>

#include "json.hpp"

namespace crossline {

using ordered_json = nlohmann::ordered_json;

LineFrame LineFrame::make(const PlanePoint& o, const PlanePoint& i) {
    if (o == i) throw DegeneratePairError();
    LineFrame f;
    f.line = line_through(o, i);
    f.zero = o;
    f.unit = i;
    f.diff = i - o;
    return f;
}

Scalar label(const LineFrame& frame, const PlanePoint& X) {
    PlanePoint v = X - frame.zero;
    if (!frame.diff.x.is_zero()) {
        Scalar t = v.x * inv(frame.diff.x);
        if (t * frame.diff.y != v.y) throw IncidenceError("point off the frame line");
        return t;
    }
    if (!v.x.is_zero()) throw IncidenceError("point off the frame line");
    return v.y * inv(frame.diff.y);
}

PlanePoint point_of(const LineFrame& frame, const Scalar& x) {
    return frame.zero + x * frame.diff;
}

const TraceStep* ConstructionTrace::find(const std::string& id) const {
    for (const auto& s : steps)
        if (s.id == id) return &s;
    return nullptr;
}

PlanePoint default_aux_point(const LineFrame& frame) {
    const FieldTag tag = frame.field();
    PlanePoint cand = frame.zero + PlanePoint{Scalar::zero(tag), Scalar::one(tag)};
    if (!on_line(cand, frame.line)) return cand;
    return frame.zero + PlanePoint{Scalar::one(tag), Scalar::one(tag)};
}

namespace {

struct TraceBuilder {
    ConstructionTrace trace;

    const PlanePoint& point(const std::string& id, const PlanePoint& p, std::string rule) {
        trace.steps.push_back({id, p, std::move(rule)});
        return std::get<PlanePoint>(trace.steps.back().object);
    }
    const PlaneLine& line(const std::string& id, const PlaneLine& l, std::string rule) {
        trace.steps.push_back({id, l, std::move(rule)});
        return std::get<PlaneLine>(trace.steps.back().object);
    }
};

PlanePoint resolve_aux(const LineFrame& frame, const std::optional<PlanePoint>& aux) {
    if (!aux) return default_aux_point(frame);
    if (on_line(*aux, frame.line)) throw AuxiliaryPointError();
    return *aux;
}

void require_operands(const LineFrame& frame, const PlanePoint& A, const PlanePoint& B) {
    if (!on_line(A, frame.line)) throw IncidenceError("operand A off the frame line");
    if (!on_line(B, frame.line)) throw IncidenceError("operand B off the frame line");
}

} // namespace

ConstructionResult geometric_add(const LineFrame& frame, const PlanePoint& A,
                                 const PlanePoint& B, const std::optional<PlanePoint>& aux) {
    require_operands(frame, A, B);
    PlanePoint b1 = resolve_aux(frame, aux);

    TraceBuilder t;
    t.point("O", frame.zero, "frame");
    t.point("I", frame.unit, "frame");
    t.line("base", frame.line, "join O I");
    t.point("A", A, "input");
    t.point("B", B, "input");
    t.point("B1", b1, "aux");
    const PlaneLine& l1 = t.line("l1", parallel_through(frame.line, b1), "parallel base B1");
    const PlaneLine& l2 = t.line("l2", parallel_through(line_through(frame.zero, b1), A),
                                 "parjoin O B1 A");
    const PlanePoint& p1 = t.point("P1", meet(l1, l2, "P1"), "meet l1 l2");
    const PlaneLine& l3 = t.line("l3", parallel_through(line_through(B, b1), p1),
                                 "parjoin B B1 P1");
    PlanePoint c = meet(l3, frame.line, "C");
    t.point("C", c, "meet l3 base");
    t.trace.result = c;
    return {c, std::move(t.trace)};
}

ConstructionResult geometric_mul(const LineFrame& frame, const PlanePoint& A,
                                 const PlanePoint& B, const std::optional<PlanePoint>& aux) {
    require_operands(frame, A, B);
    PlanePoint b1 = resolve_aux(frame, aux);

    TraceBuilder t;
    t.point("O", frame.zero, "frame");
    t.point("I", frame.unit, "frame");
    t.line("base", frame.line, "join O I");
    t.point("A", A, "input");
    t.point("B", B, "input");
    t.point("B1", b1, "aux");
    const PlaneLine& l1 = t.line("l1", parallel_through(line_through(frame.unit, b1), A),
                                 "parjoin I B1 A");
    const PlaneLine& l2 = t.line("l2", line_through(frame.zero, b1), "join O B1");
    const PlanePoint& p1 = t.point("P1", meet(l1, l2, "P1"), "meet l1 l2");
    const PlaneLine& l3 = t.line("l3", parallel_through(line_through(B, b1), p1),
                                 "parjoin B B1 P1");
    PlanePoint c = meet(l3, frame.line, "C");
    t.point("C", c, "meet l3 base");
    t.trace.result = c;
    return {c, std::move(t.trace)};
}

// -------------------------------------------------------------- trace JSON

std::string trace_to_json(const ConstructionTrace& trace) {
    ordered_json doc;
    doc["field"] = field_name(trace.field());
    ordered_json steps = ordered_json::array();
    for (const auto& s : trace.steps) {
        ordered_json j;
        j["id"] = s.id;
        j["kind"] = s.is_point() ? "point" : "line";
        if (s.is_point()) {
            j["data"] = format_point(s.point());
        } else {
            j["data"] = ordered_json{{"base", format_point(s.line().base)},
                                     {"dir", "[" + format_scalar(s.line().dir.dx) + " ; " +
                                                 format_scalar(s.line().dir.dy) + "]"}};
        }
        j["rule"] = s.rule;
        steps.push_back(std::move(j));
    }
    doc["steps"] = std::move(steps);
    doc["result"] = format_point(trace.result);
    return doc.dump(2);
}

ConstructionTrace trace_from_json(std::string_view text) {
    ordered_json doc = ordered_json::parse(text);
    auto tag = field_from_name(doc.at("field").get<std::string>());
    if (!tag) throw ParseError("unknown field in trace", 0);
    ConstructionTrace trace;
    for (const auto& j : doc.at("steps")) {
        TraceStep s;
        s.id = j.at("id").get<std::string>();
        s.rule = j.at("rule").get<std::string>();
        if (j.at("kind") == "point") {
            s.object = parse_point(j.at("data").get<std::string>(), *tag);
        } else {
            PlanePoint base = parse_point(j.at("data").at("base").get<std::string>(), *tag);
            PlanePoint dirv = parse_point(j.at("data").at("dir").get<std::string>(), *tag);
            s.object = PlaneLine{base, Direction::of_vector(dirv)};
        }
        trace.steps.push_back(std::move(s));
    }
    trace.result = parse_point(doc.at("result").get<std::string>(), *tag);
    return trace;
}

// ------------------------------------------------------------------ replay

namespace {

std::vector<std::string> split_words(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string w;
    while (in >> w) out.push_back(w);
    return out;
}

} // namespace

PlanePoint replay_trace(const ConstructionTrace& trace) {
    struct Ctx {
        const ConstructionTrace& trace;
        std::size_t upto; // rules may only reference earlier steps

        const TraceStep& ref(const std::string& id) const {
            for (std::size_t i = 0; i < upto; ++i)
                if (trace.steps[i].id == id) return trace.steps[i];
            throw Error("trace references unknown step " + id);
        }
        const PlanePoint& pt(const std::string& id) const { return ref(id).point(); }
        const PlaneLine& ln(const std::string& id) const { return ref(id).line(); }
    };

    Ctx ctx{trace, 0};
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        ctx.upto = i;
        const TraceStep& s = trace.steps[i];
        auto words = split_words(s.rule);
        if (words.empty()) throw Error("empty rule in trace step " + s.id);
        const std::string& op = words[0];

        if (op == "frame" || op == "input" || op == "aux") continue; // given data

        std::variant<PlanePoint, PlaneLine> computed;
        if (op == "join" && words.size() == 3) {
            computed = line_through(ctx.pt(words[1]), ctx.pt(words[2]));
        } else if (op == "parallel" && words.size() == 3) {
            computed = parallel_through(ctx.ln(words[1]), ctx.pt(words[2]));
        } else if (op == "parjoin" && words.size() == 4) {
            computed = parallel_through(line_through(ctx.pt(words[1]), ctx.pt(words[2])),
                                        ctx.pt(words[3]));
        } else if (op == "meet" && words.size() == 3) {
            computed = meet(ctx.ln(words[1]), ctx.ln(words[2]), s.id);
        } else {
            throw Error("bad rule '" + s.rule + "' in trace step " + s.id);
        }

        bool same = s.is_point()
                        ? (computed.index() == 0 && std::get<PlanePoint>(computed) == s.point())
                        : (computed.index() == 1 && std::get<PlaneLine>(computed) == s.line());
        if (!same) throw Error("replay mismatch at step " + s.id);
    }

    const TraceStep* last = trace.find("C");
    if (!last || !last->is_point() || !(last->point() == trace.result))
        throw Error("replay result mismatch");
    return trace.result;
}

} // namespace crossline
