#include "mckay/emit.hpp"

#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace mckay {

namespace {

std::string effective_label(const Quiver& q, std::size_t i, const EmitOptions& opts) {
    if (!opts.labels) return q.vertices[i].label;
    const auto& payload = q.vertices[i].exponents;
    if (!payload)
        throw std::invalid_argument("cannot relabel a table-built quiver; "
                                    "its vertices carry no character exponents");
    if (*opts.labels == LabelScheme::Exponents) return exponent_label(*payload);
    if (q.meta.group_orders.empty())
        throw std::invalid_argument("quiver carries no group; only exponent labels apply");
    return label_character(FinAbGroup(q.meta.group_orders), AbCharacter{*payload}, *opts.labels);
}

std::string dot_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

} // namespace

std::string emit_dot(const Quiver& q, const EmitOptions& opts) {
    std::ostringstream out;
    out << "// format_version: 1\n";
    out << "digraph mckay {\n";
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        out << "  v" << i << " [label=\"" << dot_escape(effective_label(q, i, opts)) << "\"];\n";
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        for (std::size_t j = 0; j < q.vertex_count(); ++j) {
            const std::int64_t m = q.mult[i][j];
            if (m == 0) continue;
            if (opts.multiplicity_style == MultiplicityStyle::ParallelEdges) {
                for (std::int64_t k = 0; k < m; ++k)
                    out << "  v" << i << " -> v" << j << ";\n";
            } else {
                out << "  v" << i << " -> v" << j << " [label=\"" << m << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

std::string emit_json(const Quiver& q, const EmitOptions& opts) {
    nlohmann::json doc;
    doc["format_version"] = 1;
    doc["meta"] = {{"group", q.meta.group},
                   {"rep", q.meta.rep},
                   {"ambient", q.meta.ambient},
                   {"construction", q.meta.construction}};

    nlohmann::json vertices = nlohmann::json::array();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        nlohmann::json v;
        v["id"] = i;
        v["label"] = effective_label(q, i, opts);
        if (q.vertices[i].exponents)
            v["exponents"] = *q.vertices[i].exponents;
        else
            v["exponents"] = nullptr;
        v["dim"] = q.vertices[i].dim;
        vertices.push_back(std::move(v));
    }
    doc["vertices"] = std::move(vertices);

    nlohmann::json arrows = nlohmann::json::array();
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        for (std::size_t j = 0; j < q.vertex_count(); ++j) {
            if (q.mult[i][j] == 0) continue;
            arrows.push_back({{"from", i}, {"to", j}, {"mult", q.mult[i][j]}});
        }
    }
    doc["arrows"] = std::move(arrows);
    return doc.dump(2) + "\n";
}

std::string emit_quiver(const Quiver& q, const EmitOptions& opts) {
    return opts.format == EmitFormat::Json ? emit_json(q, opts) : emit_dot(q, opts);
}

std::string format_covering_report(const CoveringReport& report) {
    std::ostringstream out;
    out << "covering report (format_version 1)\n";
    out << "group: " << report.group_spec << "\n";
    out << "rep: " << report.rep_spec << "\n";
    out << "|G| = " << report.group_size << ", |N| = " << report.kernel_size
        << ", deck = " << report.deck_size << "\n";
    out << "cover vertices: " << report.cover_vertices
        << ", base vertices: " << report.base_vertices
        << ", fibers: " << report.fiber_count << "\n";
    out << "assumption: " << report.assumption << "\n";
    for (const CoveringCheck& check : report.checks)
        out << "[" << (check.passed ? "pass" : "FAIL") << "] " << check.name << ": "
            << check.detail << "\n";
    out << "result: " << (report.passed ? "PASS" : "FAIL") << "\n";
    return out.str();
}

} // namespace mckay
