#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "mckay/chartab.hpp"

namespace mckay {

struct TableFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Character-table file format: a JSON document with fields group_order,
/// class_sizes, inverse_class, root_order and rows; each entry is a list of
/// [coefficient, power] pairs meaning the sum of c * zeta_N^p. Powers may be
/// unreduced; entries are brought to canonical form on load, so
/// load -> save -> load is the identity on canonical forms.
CharacterTable table_from_json_text(const std::string& text);
std::string table_to_json_text(const CharacterTable& t);

CharacterTable load_table_file(const std::filesystem::path& path);
void save_table_file(const CharacterTable& t, const std::filesystem::path& path);

} // namespace mckay
