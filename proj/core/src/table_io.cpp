#include "mckay/table_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mckay {

namespace {

using nlohmann::json;

const json& require_field(const json& doc, const char* name) {
    auto it = doc.find(name);
    if (it == doc.end())
        throw TableFormatError(std::string("missing field '") + name + "'");
    return *it;
}

long long int_field(const json& value, const std::string& where) {
    if (!value.is_number_integer())
        throw TableFormatError(where + " must be an integer");
    return value.get<long long>();
}

} // namespace

CharacterTable table_from_json_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw TableFormatError("not valid JSON");
    if (!doc.is_object()) throw TableFormatError("top level must be an object");

    CharacterTable t;
    t.group_order = int_field(require_field(doc, "group_order"), "group_order");
    t.root_order = static_cast<int>(int_field(require_field(doc, "root_order"), "root_order"));
    if (t.root_order < 1) throw TableFormatError("root_order must be >= 1");

    const json& sizes = require_field(doc, "class_sizes");
    if (!sizes.is_array()) throw TableFormatError("class_sizes must be an array");
    for (const json& s : sizes) t.class_sizes.push_back(int_field(s, "class size"));

    const json& inverses = require_field(doc, "inverse_class");
    if (!inverses.is_array()) throw TableFormatError("inverse_class must be an array");
    for (const json& c : inverses) {
        const long long index = int_field(c, "inverse class index");
        if (index < 0) throw TableFormatError("inverse class indices must be nonnegative");
        t.inverse_class.push_back(static_cast<std::size_t>(index));
    }

    const json& rows = require_field(doc, "rows");
    if (!rows.is_array()) throw TableFormatError("rows must be an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array())
            throw TableFormatError("row " + std::to_string(i) + " must be an array");
        std::vector<CycloInt> row;
        for (std::size_t c = 0; c < rows[i].size(); ++c) {
            const json& entry = rows[i][c];
            if (!entry.is_array())
                throw TableFormatError("entry " + std::to_string(i) + "," + std::to_string(c) +
                                       " must be a list of [coefficient, power] pairs");
            std::vector<std::pair<Coeff, long long>> terms;
            for (const json& pair : entry) {
                if (!pair.is_array() || pair.size() != 2)
                    throw TableFormatError("entry " + std::to_string(i) + "," +
                                           std::to_string(c) +
                                           " holds a malformed [coefficient, power] pair");
                terms.emplace_back(int_field(pair[0], "coefficient"),
                                   int_field(pair[1], "power"));
            }
            row.push_back(CycloInt::from_power_sums(t.root_order, terms));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string table_to_json_text(const CharacterTable& t) {
    json doc;
    doc["format_version"] = 1;
    doc["group_order"] = t.group_order;
    doc["class_sizes"] = t.class_sizes;
    doc["inverse_class"] = t.inverse_class;
    doc["root_order"] = t.root_order;

    json rows = json::array();
    for (const auto& row : t.rows) {
        json row_doc = json::array();
        for (const CycloInt& entry : row) {
            json pairs = json::array();
            const auto& coeffs = entry.coeffs();
            for (std::size_t k = 0; k < coeffs.size(); ++k)
                if (coeffs[k] != 0) pairs.push_back({coeffs[k], k});
            row_doc.push_back(std::move(pairs));
        }
        rows.push_back(std::move(row_doc));
    }
    doc["rows"] = std::move(rows);
    return doc.dump(2) + "\n";
}

CharacterTable load_table_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw TableFormatError("cannot open table file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return table_from_json_text(buffer.str());
}

void save_table_file(const CharacterTable& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw TableFormatError("cannot write table file '" + path.string() + "'");
    out << table_to_json_text(t);
}

} // namespace mckay
