#pragma once

#include <optional>
#include <string>

#include "mckay/covering.hpp"
#include "mckay/diagrams.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

enum class EmitFormat { Dot, Json };
enum class MultiplicityStyle { ParallelEdges, EdgeLabel };

struct EmitOptions {
    EmitFormat format = EmitFormat::Dot;
    /// nullopt keeps the labels the quiver carries; a scheme relabels from
    /// the vertex payloads (which table-built quivers do not have).
    std::optional<LabelScheme> labels;
    MultiplicityStyle multiplicity_style = MultiplicityStyle::ParallelEdges;
};

/// DOT for the quiver: one node line per vertex in vertex order, arrow lines
/// sorted by (from, to), parallel edges repeated or folded into an edge
/// label per the options. Byte-identical across runs for identical inputs.
std::string emit_dot(const Quiver& q, const EmitOptions& opts = {});

/// JSON with meta (group, rep, ambient, construction), vertices (id, label,
/// exponents, dim) and arrows (from, to, mult; one record per nonzero matrix
/// entry, sorted by (from, to)). Integer-only; byte-identical across runs.
std::string emit_json(const Quiver& q, const EmitOptions& opts = {});

/// Dispatch on opts.format.
std::string emit_quiver(const Quiver& q, const EmitOptions& opts = {});

/// Fixed-layout text rendering of a covering report.
std::string format_covering_report(const CoveringReport& report);

} // namespace mckay
