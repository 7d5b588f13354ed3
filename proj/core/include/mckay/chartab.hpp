#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mckay/abelian.hpp"
#include "mckay/cyclotomic.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

/// A finite group presented by its character table with exact cyclotomic
/// entries. Class 0 is the identity class; inverse_class sends the class of
/// g to the class of g^-1. All entries live at the table's root_order.
struct CharacterTable {
    long long group_order = 1;
    std::vector<long long> class_sizes;
    std::vector<std::size_t> inverse_class;
    int root_order = 1;
    std::vector<std::vector<CycloInt>> rows;
};

struct TableIssue {
    std::string invariant;  // name of the violated invariant
    std::string detail;
};

/// Check every table invariant: class size sum, identity class size,
/// dimension square sum, inverse_class involution, exact row orthogonality.
/// Returns an empty list when the table is valid.
std::vector<TableIssue> validate_table(const CharacterTable& t);

/// A representation given as a multiset of irreducible row indices.
struct RepSpec {
    std::vector<std::size_t> rows;
};

/// Dimension of row i (its value on the identity class). Throws
/// std::invalid_argument if that value is not a rational integer.
long long row_dim(const CharacterTable& t, std::size_t i);
long long rep_dim(const CharacterTable& t, const RepSpec& v);

/// Multiplicity of S_j in V tensor S_i, computed as the exact inner product
/// (1/|G|) sum_c class_sizes[c] * chi_V(c) * chi_i(c) * chi_j(inverse(c)).
/// Requires a valid table; a non-integral result throws std::domain_error
/// and signals an invalid table or rep.
long long tensor_multiplicity(const CharacterTable& t, const RepSpec& v,
                              std::size_t i, std::size_t j);

/// McKay quiver from a character table: one vertex per row, multiplicity
/// matrix from tensor_multiplicity. Vertices are labeled S0, S1, ...
Quiver mckay_quiver_table(const CharacterTable& t, const RepSpec& v);

/// Table of a finite abelian group: singleton classes in element order,
/// rows in character order, values from char_eval.
CharacterTable table_from_abelian(const FinAbGroup& g);

// Built-in tables.
CharacterTable builtin_cyclic_table(int n);  // 1 <= n <= 12
CharacterTable builtin_klein_table();        // C2 x C2
CharacterTable builtin_q8_table();           // quaternion group of order 8

} // namespace mckay
