#pragma once

#include "tropfan/abelian.hpp"
#include "tropfan/minimal.hpp"

#include <string>
#include <variant>

namespace tropfan {

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

inline constexpr const char* kSchemaVersion = "1";

/**
 * Parsed file. Coloring documents hold the minimal presentation they describe, so that parsing a
 * serialized MinimalFan returns it unchanged.
 */
using Payload = std::variant<StackyFan, MinimalFan, PolarizedBase, AVStackyFan, MetricGraph, QuotientComplex>;

struct Document {
    std::string kind;
    Payload payload;
};

/** ParseError for malformed JSON (with byte offset) or schema violations. */
Document parse_document(const std::string& text);
Document read_document(const std::string& path);

std::string serialize(const StackyFan& fan);
std::string serialize(const MinimalFan& fan);
std::string serialize(const PolarizedBase& base);
std::string serialize(const AVStackyFan& fan);
std::string serialize(const MetricGraph& graph);
std::string serialize(const QuotientComplex& q);
std::string serialize(const Document& doc);

/** Pretty JSON of integer points: {"count": "...", "points": [...]}. */
std::string serialize_points(const std::vector<Vec>& points);

}  // namespace tropfan
