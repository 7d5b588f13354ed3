#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mckay/abelian.hpp"

namespace mckay {

struct QuiverVertex {
    std::size_t id = 0;
    std::string label;
    /// Character exponents for quivers built from abelian groups; empty for
    /// quivers built from a character table, where the payload is the row
    /// index and coincides with id.
    std::optional<std::vector<int>> exponents;
    std::int64_t dim = 1;
};

/// Provenance carried by every constructed quiver.
struct QuiverMeta {
    std::string group;         // group grammar ("2,2") or a table description
    std::string rep;           // rep grammar ("1,0;0,1") or row indices
    std::string ambient;       // "SL" when det of the building rep is trivial, else "GL"
    std::string construction;  // "mckay-abelian" | "returning-arrow" | "mckay-table" | ...
    /// Dimension of the representation the multiplicity matrix was built
    /// from; the row-sum law reads sum_j mult[i][j]*dim_j == rep_dim*dim_i.
    std::int64_t rep_dim = 0;
    /// Orders of the abelian group, when there is one (empty for tables).
    std::vector<int> group_orders;
    /// Determinant character of the building rep, when known.
    std::optional<std::vector<int>> det_exponents;
};

/// A labeled quiver: ordered vertices plus a square matrix of nonnegative
/// arrow multiplicities, mult[i][j] = number of arrows from i to j.
struct Quiver {
    std::vector<QuiverVertex> vertices;
    std::vector<std::vector<std::int64_t>> mult;
    QuiverMeta meta;

    std::size_t vertex_count() const { return vertices.size(); }
    std::int64_t out_degree(std::size_t i) const;
    std::int64_t in_degree(std::size_t j) const;
    std::int64_t arrow_count() const;  // sum of all multiplicities
};

/// McKay quiver of an abelian group: vertices are the characters of the
/// group in lexicographic order, and mult[i][j] counts summands chi of v
/// with chi * chi_i == chi_j.
Quiver mckay_quiver_abelian(const AbRep& v);

/// Entrywise sum; requires identical vertex sequences (same payloads and
/// dims). The result equals the quiver of the direct sum of the two reps.
Quiver quiver_add(const Quiver& a, const Quiver& b);

/// Append the inverse determinant character as an extra summand, giving a
/// representation of dimension dim(v)+1 with trivial determinant.
AbRep sl_augment(const AbRep& v);

/// McKay quiver of v viewed one dimension up with trivial determinant:
/// the quiver of sl_augment(v). Also recomputed as the base quiver plus the
/// quiver of the appended summand and checked to agree entrywise.
Quiver returning_arrow_quiver(const AbRep& v);

/// True iff vertex payloads (exponents, dims) and multiplicity matrices are
/// identical. Matrix equality in fixed vertex order, not isomorphism search.
bool quiver_isomorphic_as_labeled(const Quiver& a, const Quiver& b);

/// sum_j mult[i][j]*dim_j == rep_dim*dim_i at every vertex.
bool row_sum_law_holds(const Quiver& q);

/// Every vertex has equal in- and out-degree (counting multiplicity).
bool in_out_balanced(const Quiver& q);

} // namespace mckay
