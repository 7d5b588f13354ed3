// Command-line front end: preset | quiver | covering | table | list-presets.
// Exit codes: 0 success, 1 failed covering checks or invalid tables,
// 2 argument or grammar errors.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mckay/abelian.hpp"
#include "mckay/chartab.hpp"
#include "mckay/covering.hpp"
#include "mckay/diagrams.hpp"
#include "mckay/emit.hpp"
#include "mckay/table_io.hpp"

namespace {

constexpr long long kMaxGroupSize = 4096;

struct EmitArgs {
    std::string format = "dot";
    std::string labels = "auto";
    std::string out;
    bool edge_labels = false;
};

void add_emit_options(CLI::App* cmd, EmitArgs& args) {
    cmd->add_option("--format", args.format, "Output format: dot or json");
    cmd->add_option("--labels", args.labels,
                    "Vertex labels: auto, exponents, yinyang, sixiang, trigram, "
                    "hexagram or wuxing");
    cmd->add_option("--out", args.out, "Write output to this path instead of stdout");
    cmd->add_flag("--edge-labels", args.edge_labels,
                  "Fold parallel arrows into one edge with a multiplicity label");
}

mckay::EmitOptions resolve_emit_options(const EmitArgs& args) {
    mckay::EmitOptions opts;
    if (args.format == "dot")
        opts.format = mckay::EmitFormat::Dot;
    else if (args.format == "json")
        opts.format = mckay::EmitFormat::Json;
    else
        throw std::invalid_argument("unknown format '" + args.format + "'");
    if (args.labels != "auto") {
        const auto scheme = mckay::label_scheme_from_name(args.labels);
        if (!scheme) throw std::invalid_argument("unknown label scheme '" + args.labels + "'");
        opts.labels = *scheme;
    }
    if (args.edge_labels) opts.multiplicity_style = mckay::MultiplicityStyle::EdgeLabel;
    return opts;
}

int write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write to '" << out_path << "'\n";
        return 1;
    }
    out << text;
    return 0;
}

mckay::FinAbGroup parse_group_checked(const std::string& spec) {
    mckay::FinAbGroup g = mckay::parse_group_spec(spec);
    if (g.size() > kMaxGroupSize)
        throw std::invalid_argument("group '" + spec + "' has order " +
                                    std::to_string(g.size()) + ", above the CLI limit of " +
                                    std::to_string(kMaxGroupSize));
    return g;
}

std::vector<std::size_t> parse_row_indices(const std::string& text, std::size_t row_count) {
    std::vector<std::size_t> rows;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string token =
            text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        try {
            std::size_t consumed = 0;
            const long long value = std::stoll(token, &consumed);
            if (consumed != token.size() || value < 0) throw std::invalid_argument(token);
            if (static_cast<std::size_t>(value) >= row_count)
                throw std::invalid_argument("row index " + token + " out of range (table has " +
                                            std::to_string(row_count) + " rows)");
            rows.push_back(static_cast<std::size_t>(value));
        } catch (const std::invalid_argument& e) {
            if (std::string(e.what()).find("out of range") != std::string::npos) throw;
            throw std::invalid_argument("rep spec: bad row index token '" + token + "'");
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return rows;
}

int run_list_presets() {
    for (const mckay::Preset& p : mckay::preset_registry()) {
        std::cout << std::left << std::setw(16) << p.name << " group=" << std::setw(12)
                  << p.group.spec_string() << " construction=" << std::setw(16)
                  << mckay::construction_name(p.construction) << " scheme=" << std::setw(10)
                  << mckay::label_scheme_name(p.scheme)
                  << " layout=" << mckay::layout_hint_name(p.layout)
                  << " rep=" << mckay::rep_spec_string(p.rep) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact McKay quivers of finite groups"};
    app.require_subcommand(1);

    auto* preset_cmd = app.add_subcommand("preset", "Emit a named preset quiver");
    std::string preset_name;
    preset_cmd->add_option("name", preset_name, "Preset name (see list-presets)")->required();
    EmitArgs preset_emit;
    add_emit_options(preset_cmd, preset_emit);

    auto* quiver_cmd = app.add_subcommand("quiver", "Emit the McKay quiver of an abelian group");
    std::string quiver_group, quiver_rep;
    bool quiver_sl = false;
    quiver_cmd->add_option("--group", quiver_group, "Cyclic factor orders, e.g. 2,2,2")
        ->required();
    quiver_cmd->add_option("--rep", quiver_rep, "Character exponent tuples, e.g. 1,0,0;0,1,0")
        ->required();
    quiver_cmd->add_flag("--sl", quiver_sl,
                         "Append the inverse determinant summand (returning arrows)");
    EmitArgs quiver_emit;
    add_emit_options(quiver_cmd, quiver_emit);

    auto* covering_cmd =
        app.add_subcommand("covering", "Check that the quiver covers the det-kernel quiver");
    std::string covering_group, covering_rep, covering_out;
    covering_cmd->add_option("--group", covering_group, "Cyclic factor orders")->required();
    covering_cmd->add_option("--rep", covering_rep, "Character exponent tuples")->required();
    covering_cmd->add_option("--out", covering_out, "Write the report to this path");

    auto* table_cmd =
        app.add_subcommand("table", "Emit a McKay quiver from a character table file");
    std::string table_file, table_rep;
    table_cmd->add_option("--file", table_file, "Character table file (JSON)")->required();
    table_cmd->add_option("--rep", table_rep, "Comma-separated row indices, e.g. 4 or 1,2")
        ->required();
    EmitArgs table_emit;
    add_emit_options(table_cmd, table_emit);

    auto* list_cmd = app.add_subcommand("list-presets", "List the preset registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (list_cmd->parsed()) return run_list_presets();

        if (preset_cmd->parsed()) {
            const mckay::EmitOptions opts = resolve_emit_options(preset_emit);
            const mckay::Quiver q = mckay::preset_quiver(preset_name);
            return write_output(mckay::emit_quiver(q, opts), preset_emit.out);
        }

        if (quiver_cmd->parsed()) {
            const mckay::EmitOptions opts = resolve_emit_options(quiver_emit);
            const mckay::FinAbGroup g = parse_group_checked(quiver_group);
            const mckay::AbRep v = mckay::parse_rep_spec(g, quiver_rep);
            const mckay::Quiver q =
                quiver_sl ? mckay::returning_arrow_quiver(v) : mckay::mckay_quiver_abelian(v);
            return write_output(mckay::emit_quiver(q, opts), quiver_emit.out);
        }

        if (covering_cmd->parsed()) {
            const mckay::FinAbGroup g = parse_group_checked(covering_group);
            const mckay::AbRep v = mckay::parse_rep_spec(g, covering_rep);
            const mckay::CoveringReport report =
                mckay::check_regular_covering(mckay::build_instance(v));
            const int status = write_output(mckay::format_covering_report(report), covering_out);
            if (status != 0) return status;
            return report.passed ? 0 : 1;
        }

        if (table_cmd->parsed()) {
            const mckay::EmitOptions opts = resolve_emit_options(table_emit);
            mckay::CharacterTable t;
            try {
                t = mckay::load_table_file(table_file);
            } catch (const mckay::TableFormatError& e) {
                std::cerr << "invalid table: " << e.what() << "\n";
                return 1;
            }
            const auto issues = mckay::validate_table(t);
            if (!issues.empty()) {
                for (const mckay::TableIssue& issue : issues)
                    std::cerr << "invalid table: " << issue.invariant << ": " << issue.detail
                              << "\n";
                return 1;
            }
            const mckay::RepSpec v{parse_row_indices(table_rep, t.rows.size())};
            const mckay::Quiver q = mckay::mckay_quiver_table(t, v);
            return write_output(mckay::emit_quiver(q, opts), table_emit.out);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
