#include "oramsey/certificate.hpp"

#include <algorithm>
#include <stdexcept>

namespace oramsey {

namespace {

bool strictly_increasing(std::span<const int> v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] <= v[i - 1]) return false;
    return true;
}

int violation_threshold(const ViolationKind& kind) {
    return kind.type == ViolationKind::Type::TRed ? kind.t : 3;
}

}  // namespace

bool validate_embedding(const OrderedColoring& c, const Embedding& e) {
    if (pattern_uniformity(e.pattern) != c.uniformity()) return false;
    if (static_cast<int>(e.vertices.size()) != pattern_vertex_count(e.pattern)) return false;
    if (!strictly_increasing(e.vertices)) return false;
    if (!e.vertices.empty() &&
        (e.vertices.front() < 0 || e.vertices.back() >= c.vertex_count()))
        return false;
    std::vector<int> mapped;
    for (const auto& edge : pattern_edges(e.pattern)) {
        mapped.clear();
        for (int pos : edge) mapped.push_back(e.vertices[static_cast<std::size_t>(pos)]);
        if (c.color(mapped) != e.color) return false;
    }
    return true;
}

bool validate_violation(const OrderedColoring& c, const Violation& v) {
    const int k = c.uniformity();
    if (static_cast<int>(v.vertices.size()) != k + 1) return false;
    if (!strictly_increasing(v.vertices)) return false;
    if (v.vertices.front() < 0 || v.vertices.back() >= c.vertex_count()) return false;
    if (v.kind.type == ViolationKind::Type::TRed && (v.kind.t < 2 || v.kind.t > k + 1))
        return false;
    if (static_cast<int>(v.red_edges.size()) < violation_threshold(v.kind)) return false;

    std::vector<std::vector<int>> seen;
    for (const auto& edge : v.red_edges) {
        if (static_cast<int>(edge.size()) != k) return false;
        if (!strictly_increasing(edge)) return false;
        if (!std::includes(v.vertices.begin(), v.vertices.end(), edge.begin(), edge.end()))
            return false;
        if (std::find(seen.begin(), seen.end(), edge) != seen.end()) return false;
        seen.push_back(edge);
        if (c.color(edge) != Color::Red) return false;
    }
    if (v.kind.type == ViolationKind::Type::H3) {
        // the k smallest vertices must appear among the red edges
        std::vector<int> smallest(v.vertices.begin(), v.vertices.end() - 1);
        if (std::find(v.red_edges.begin(), v.red_edges.end(), smallest) == v.red_edges.end())
            return false;
    }
    return true;
}

bool validate_outcome(const OrderedColoring& c, const ExtractOutcome& o) {
    if (o.kind == ExtractOutcome::Kind::Failure) return true;
    if (!o.certificate.has_value()) return false;
    if (const auto* emb = std::get_if<Embedding>(&*o.certificate)) {
        const Color expected =
            o.kind == ExtractOutcome::Kind::RedCertificate ? Color::Red : Color::Blue;
        return emb->color == expected && validate_embedding(c, *emb);
    }
    if (o.kind != ExtractOutcome::Kind::RedCertificate) return false;  // violations are red
    return validate_violation(c, std::get<Violation>(*o.certificate));
}

std::vector<std::vector<int>> red_subsets_within(const OrderedColoring& c,
                                                 std::span<const int> vertices) {
    const int k = c.uniformity();
    std::vector<std::vector<int>> red;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    std::vector<int> edge(static_cast<std::size_t>(k));
    do {
        for (int i = 0; i < k; ++i)
            edge[static_cast<std::size_t>(i)] = vertices[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        if (c.color(edge) == Color::Red) red.push_back(edge);
    } while (next_subset_colex(idx, static_cast<int>(vertices.size())));
    return red;
}

nlohmann::json pattern_to_json(const PatternSpec& p) {
    nlohmann::json j;
    if (const auto* pp = std::get_if<PathPower>(&p))
        j = {{"type", "path_power"}, {"l", pp->l}, {"s", pp->s}};
    else if (const auto* tp = std::get_if<TightPath>(&p))
        j = {{"type", "tight_path"}, {"k", tp->k}, {"s", tp->s}};
    else if (const auto* br = std::get_if<Broom>(&p))
        j = {{"type", "broom"}, {"k", br->k}, {"a", br->a}, {"m", br->m}};
    else {
        const auto& cl = std::get<Clique>(p);
        j = {{"type", "clique"}, {"k", cl.k}, {"s", cl.s}};
    }
    return j;
}

PatternSpec pattern_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "path_power") return PathPower{j.at("l").get<int>(), j.at("s").get<int>()};
    if (type == "tight_path") return TightPath{j.at("k").get<int>(), j.at("s").get<int>()};
    if (type == "broom")
        return Broom{j.at("k").get<int>(), j.at("a").get<int>(), j.at("m").get<int>()};
    if (type == "clique") return Clique{j.at("k").get<int>(), j.at("s").get<int>()};
    throw std::invalid_argument("certificate: unknown pattern type '" + type + "'");
}

namespace {

nlohmann::json violation_kind_to_json(const ViolationKind& kind) {
    switch (kind.type) {
        case ViolationKind::Type::H3: return {{"type", "h3"}};
        case ViolationKind::Type::F3: return {{"type", "f3"}};
        default: return {{"type", "t_red"}, {"t", kind.t}};
    }
}

ViolationKind violation_kind_from_json(const nlohmann::json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "h3") return {ViolationKind::Type::H3, 0};
    if (type == "f3") return {ViolationKind::Type::F3, 0};
    if (type == "t_red") return {ViolationKind::Type::TRed, j.at("t").get<int>()};
    throw std::invalid_argument("certificate: unknown violation kind '" + type + "'");
}

}  // namespace

nlohmann::json certificate_to_json(const Certificate& c) {
    nlohmann::json j;
    if (const auto* emb = std::get_if<Embedding>(&c)) {
        j["kind"] = "embedding";
        j["pattern"] = pattern_to_json(emb->pattern);
        j["color"] = color_name(emb->color);
        j["vertices"] = emb->vertices;
    } else {
        const auto& v = std::get<Violation>(c);
        j["kind"] = "violation";
        j["pattern"] = violation_kind_to_json(v.kind);
        j["color"] = "red";
        j["vertices"] = v.vertices;
        j["red_edges"] = v.red_edges;
    }
    return j;
}

Certificate certificate_from_json(const nlohmann::json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "embedding") {
        Embedding e;
        e.pattern = pattern_from_json(j.at("pattern"));
        const std::string color = j.at("color").get<std::string>();
        if (color != "red" && color != "blue")
            throw std::invalid_argument("certificate: bad color '" + color + "'");
        e.color = color == "red" ? Color::Red : Color::Blue;
        e.vertices = j.at("vertices").get<std::vector<int>>();
        return e;
    }
    if (kind == "violation") {
        Violation v;
        v.kind = violation_kind_from_json(j.at("pattern"));
        v.vertices = j.at("vertices").get<std::vector<int>>();
        v.red_edges = j.at("red_edges").get<std::vector<std::vector<int>>>();
        return v;
    }
    throw std::invalid_argument("certificate: unknown kind '" + kind + "'");
}

nlohmann::json outcome_to_json(const ExtractOutcome& o, bool include_trace) {
    nlohmann::json j;
    switch (o.kind) {
        case ExtractOutcome::Kind::RedCertificate: j["outcome"] = "red"; break;
        case ExtractOutcome::Kind::BlueCertificate: j["outcome"] = "blue"; break;
        case ExtractOutcome::Kind::Failure: j["outcome"] = "failure"; break;
    }
    if (o.certificate) j["certificate"] = certificate_to_json(*o.certificate);
    if (o.kind == ExtractOutcome::Kind::Failure) {
        j["stage"] = o.failure_stage;
        j["context"] = o.failure_context;
    }
    if (include_trace) j["trace"] = o.trace;
    return j;
}

}  // namespace oramsey
