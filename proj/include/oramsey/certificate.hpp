#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "oramsey/coloring.hpp"
#include "oramsey/pattern.hpp"

namespace oramsey {

// An ordered vertex list witnessing a monochromatic pattern.  For brooms the
// list is path vertices then bristle vertices; the whole list is strictly
// increasing.
struct Embedding {
    PatternSpec pattern;
    Color color = Color::Red;
    std::vector<int> vertices;
};

struct ViolationKind {
    enum class Type { H3, F3, TRed };
    Type type = Type::F3;
    int t = 0;  // only for TRed
    bool operator==(const ViolationKind&) const = default;
};

// k+1 vertices plus the red k-subsets inside them.
struct Violation {
    ViolationKind kind;
    std::vector<int> vertices;
    std::vector<std::vector<int>> red_edges;
};

using Certificate = std::variant<Embedding, Violation>;

struct Failure {
    std::string stage;
    std::string context;
};

struct ExtractOutcome {
    enum class Kind { RedCertificate, BlueCertificate, Failure };

    Kind kind = Kind::Failure;
    std::optional<Certificate> certificate;  // set for Red/Blue
    std::string failure_stage;
    std::string failure_context;
    std::vector<std::string> trace;

    static ExtractOutcome red(Certificate c) {
        return {Kind::RedCertificate, std::move(c), {}, {}, {}};
    }
    static ExtractOutcome blue(Embedding e) {
        return {Kind::BlueCertificate, Certificate{std::move(e)}, {}, {}, {}};
    }
    static ExtractOutcome failure(std::string stage, std::string context) {
        return {Kind::Failure, std::nullopt, std::move(stage), std::move(context), {}};
    }

    bool is_failure() const { return kind == Kind::Failure; }
};

// Certificate checkers: re-read the source coloring edge by edge.
bool validate_embedding(const OrderedColoring& c, const Embedding& e);
bool validate_violation(const OrderedColoring& c, const Violation& v);
bool validate_outcome(const OrderedColoring& c, const ExtractOutcome& o);

// Collects all red k-subsets of a sorted (k+1)-vertex set.
std::vector<std::vector<int>> red_subsets_within(const OrderedColoring& c,
                                                 std::span<const int> vertices);

nlohmann::json pattern_to_json(const PatternSpec& p);
PatternSpec pattern_from_json(const nlohmann::json& j);
nlohmann::json certificate_to_json(const Certificate& c);
Certificate certificate_from_json(const nlohmann::json& j);
nlohmann::json outcome_to_json(const ExtractOutcome& o, bool include_trace = false);

}  // namespace oramsey
