#include "mckay/chartab.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mckay {

namespace {

std::string entry_name(std::size_t i, std::size_t c) {
    return "row " + std::to_string(i) + ", class " + std::to_string(c);
}

// chi_V as a pointwise sum of rows.
std::vector<CycloInt> rep_row(const CharacterTable& t, const RepSpec& v) {
    const std::size_t classes = t.class_sizes.size();
    std::vector<CycloInt> row(classes, CycloInt::zero(t.root_order));
    for (std::size_t s : v.rows) {
        if (s >= t.rows.size())
            throw std::invalid_argument("rep row index " + std::to_string(s) + " out of range");
        for (std::size_t c = 0; c < classes; ++c) row[c] = row[c] + t.rows[s][c];
    }
    return row;
}

long long integral_quotient(const CycloInt& sum, long long order, const std::string& where) {
    const auto quotient = sum.divided_by(order);
    if (!quotient)
        throw std::domain_error("inner product at " + where +
                                " is not divisible by the group order");
    const auto value = quotient->as_integer();
    if (!value)
        throw std::domain_error("inner product at " + where + " is not a rational integer");
    return *value;
}

std::string rows_label(const RepSpec& v) {
    std::ostringstream out;
    for (std::size_t s = 0; s < v.rows.size(); ++s) {
        if (s) out << ",";
        out << v.rows[s];
    }
    return out.str();
}

} // namespace

std::vector<TableIssue> validate_table(const CharacterTable& t) {
    std::vector<TableIssue> issues;
    auto flag = [&issues](std::string invariant, std::string detail) {
        issues.push_back(TableIssue{std::move(invariant), std::move(detail)});
    };

    if (t.group_order < 1) flag("group order", "group order must be >= 1");
    if (t.root_order < 1) flag("root order", "root order must be >= 1");
    const std::size_t classes = t.class_sizes.size();
    if (classes == 0) flag("class list", "table has no conjugacy classes");

    long long size_sum = 0;
    for (long long s : t.class_sizes) {
        if (s < 1) flag("class sizes", "class sizes must be >= 1");
        size_sum += s;
    }
    if (classes > 0 && t.class_sizes[0] != 1)
        flag("identity class", "class 0 must have size 1");
    if (size_sum != t.group_order)
        flag("class size sum", "class sizes sum to " + std::to_string(size_sum) +
                                   ", group order is " + std::to_string(t.group_order));

    if (t.inverse_class.size() != classes) {
        flag("inverse classes", "inverse_class length differs from class count");
    } else {
        for (std::size_t c = 0; c < classes; ++c) {
            if (t.inverse_class[c] >= classes) {
                flag("inverse classes", "inverse of class " + std::to_string(c) +
                                            " is out of range");
            } else if (t.inverse_class[t.inverse_class[c]] != c) {
                flag("inverse classes", "inverse_class is not an involution at class " +
                                            std::to_string(c));
            }
        }
        if (classes > 0 && t.inverse_class[0] != 0)
            flag("inverse classes", "inverse_class must fix the identity class");
    }

    if (t.rows.empty()) flag("rows", "table has no character rows");
    bool shape_ok = !t.rows.empty() && t.inverse_class.size() == classes && classes > 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (t.rows[i].size() != classes) {
            flag("row shape", "row " + std::to_string(i) + " has " +
                                  std::to_string(t.rows[i].size()) + " entries, expected " +
                                  std::to_string(classes));
            shape_ok = false;
            continue;
        }
        for (std::size_t c = 0; c < classes; ++c) {
            if (t.rows[i][c].root_order() != t.root_order) {
                flag("entry root order", entry_name(i, c) + " has root order " +
                                             std::to_string(t.rows[i][c].root_order()));
                shape_ok = false;
            }
        }
    }
    if (!shape_ok) return issues;

    long long dim_square_sum = 0;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const auto d = t.rows[i][0].as_integer();
        if (!d || *d < 1) {
            flag("dimensions", "row " + std::to_string(i) +
                                   " has a non-positive or non-integer identity value");
            shape_ok = false;
        } else {
            dim_square_sum += *d * *d;
        }
    }
    if (shape_ok && dim_square_sum != t.group_order)
        flag("dimension square sum", "sum of squared dimensions is " +
                                         std::to_string(dim_square_sum) + ", group order is " +
                                         std::to_string(t.group_order));

    // Row orthogonality: (1/|G|) sum_c |c| * chi_i(c) * chi_j(c^-1) == delta_ij.
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        for (std::size_t j = 0; j < t.rows.size(); ++j) {
            CycloInt acc = CycloInt::zero(t.root_order);
            for (std::size_t c = 0; c < classes; ++c)
                acc = acc + (t.rows[i][c] * t.rows[j][t.inverse_class[c]])
                                .scaled(t.class_sizes[c]);
            const auto quotient = acc.divided_by(t.group_order);
            const long long expected = (i == j) ? 1 : 0;
            if (!quotient) {
                flag("row orthogonality", "inner product of rows " + std::to_string(i) + "," +
                                              std::to_string(j) +
                                              " is not divisible by the group order");
            } else if (quotient->as_integer() != expected) {
                flag("row orthogonality", "inner product of rows " + std::to_string(i) + "," +
                                              std::to_string(j) + " is " +
                                              quotient->to_string() + ", expected " +
                                              std::to_string(expected));
            }
        }
    }
    return issues;
}

long long row_dim(const CharacterTable& t, std::size_t i) {
    if (i >= t.rows.size())
        throw std::invalid_argument("row index " + std::to_string(i) + " out of range");
    const auto d = t.rows[i][0].as_integer();
    if (!d) throw std::invalid_argument("row " + std::to_string(i) + " has non-integer dimension");
    return *d;
}

long long rep_dim(const CharacterTable& t, const RepSpec& v) {
    long long dim = 0;
    for (std::size_t s : v.rows) dim += row_dim(t, s);
    return dim;
}

long long tensor_multiplicity(const CharacterTable& t, const RepSpec& v,
                              std::size_t i, std::size_t j) {
    const std::vector<CycloInt> chi_v = rep_row(t, v);
    CycloInt acc = CycloInt::zero(t.root_order);
    for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
        acc = acc + (chi_v[c] * t.rows[i][c] * t.rows[j][t.inverse_class[c]])
                        .scaled(t.class_sizes[c]);
    return integral_quotient(acc, t.group_order,
                             "rows " + std::to_string(i) + "," + std::to_string(j));
}

Quiver mckay_quiver_table(const CharacterTable& t, const RepSpec& v) {
    const std::size_t m = t.rows.size();
    const std::size_t classes = t.class_sizes.size();
    const std::vector<CycloInt> chi_v = rep_row(t, v);
    const std::size_t width = chi_v.empty() ? 1 : chi_v[0].coeffs().size();

    Quiver q;
    q.vertices.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        q.vertices.push_back(QuiverVertex{i, "S" + std::to_string(i), std::nullopt, row_dim(t, i)});

    // Inner products on raw coefficient buffers; each accumulator is reduced
    // to canonical form once per (i, j) entry.
    q.mult.assign(m, std::vector<std::int64_t>(m, 0));
    std::vector<Coeff> weighted(classes * width, 0);
    std::vector<Coeff> scratch(2 * width, 0);
    std::vector<Coeff> acc(2 * width, 0);
    for (std::size_t i = 0; i < m; ++i) {
        // weighted[c] = |c| * chi_V(c) * chi_i(c), canonical.
        for (std::size_t c = 0; c < classes; ++c) {
            std::fill(scratch.begin(), scratch.end(), 0);
            const auto& a = chi_v[c].coeffs();
            const auto& b = t.rows[i][c].coeffs();
            for (std::size_t x = 0; x < width; ++x) {
                if (a[x] == 0) continue;
                for (std::size_t y = 0; y < width; ++y)
                    scratch[x + y] = checked_add(scratch[x + y], checked_mul(a[x], b[y]));
            }
            const auto canonical = CycloInt::from_polynomial(t.root_order, scratch).coeffs();
            for (std::size_t x = 0; x < width; ++x)
                weighted[c * width + x] = checked_mul(canonical[x], t.class_sizes[c]);
        }
        for (std::size_t j = 0; j < m; ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            for (std::size_t c = 0; c < classes; ++c) {
                const Coeff* a = weighted.data() + c * width;
                const auto& b = t.rows[j][t.inverse_class[c]].coeffs();
                for (std::size_t x = 0; x < width; ++x) {
                    if (a[x] == 0) continue;
                    for (std::size_t y = 0; y < width; ++y)
                        acc[x + y] = checked_add(acc[x + y], checked_mul(a[x], b[y]));
                }
            }
            q.mult[i][j] =
                integral_quotient(CycloInt::from_polynomial(t.root_order, acc), t.group_order,
                                  "rows " + std::to_string(i) + "," + std::to_string(j));
        }
    }

    q.meta.group = "table:order=" + std::to_string(t.group_order);
    q.meta.rep = rows_label(v);
    q.meta.ambient = "GL";
    q.meta.construction = "mckay-table";
    q.meta.rep_dim = rep_dim(t, v);
    return q;
}

CharacterTable table_from_abelian(const FinAbGroup& g) {
    const std::vector<GroupElement> elements = enumerate_elements(g);
    const std::vector<AbCharacter> characters = enumerate_characters(g);

    CharacterTable t;
    t.group_order = g.size();
    t.class_sizes.assign(elements.size(), 1);
    t.root_order = g.exponent();
    t.inverse_class.reserve(elements.size());
    for (const GroupElement& e : elements)
        t.inverse_class.push_back(element_index(g, elem_neg(g, e)));
    t.rows.reserve(characters.size());
    for (const AbCharacter& chi : characters) {
        std::vector<CycloInt> row;
        row.reserve(elements.size());
        for (const GroupElement& e : elements) row.push_back(char_eval(g, chi, e));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CharacterTable builtin_cyclic_table(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("built-in cyclic tables cover orders 1 through 12");
    CharacterTable t;
    t.group_order = n;
    t.class_sizes.assign(static_cast<std::size_t>(n), 1);
    t.root_order = n;
    t.inverse_class.reserve(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
        t.inverse_class.push_back(static_cast<std::size_t>((n - c) % n));
    t.rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<CycloInt> row;
        row.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < n; ++c)
            row.push_back(CycloInt::root_power(n, static_cast<long long>(i) * c));
        t.rows.push_back(std::move(row));
    }
    return t;
}

CharacterTable builtin_klein_table() {
    CharacterTable t;
    t.group_order = 4;
    t.class_sizes = {1, 1, 1, 1};
    t.inverse_class = {0, 1, 2, 3};
    t.root_order = 2;
    // Entry (a, g) is (-1)^(a.g) over the four bit pairs 00, 01, 10, 11.
    for (int a = 0; a < 4; ++a) {
        std::vector<CycloInt> row;
        for (int g = 0; g < 4; ++g) {
            const int dot = ((a >> 1) & (g >> 1)) + (a & g & 1);
            row.push_back(CycloInt::from_integer(2, dot % 2 == 0 ? 1 : -1));
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

CharacterTable builtin_q8_table() {
    // Classes: {1}, {-1}, {+-i}, {+-j}, {+-k}; every class is inverse-closed.
    CharacterTable t;
    t.group_order = 8;
    t.class_sizes = {1, 1, 2, 2, 2};
    t.inverse_class = {0, 1, 2, 3, 4};
    t.root_order = 4;
    const int values[5][5] = {
        {1, 1, 1, 1, 1},     // trivial
        {1, 1, 1, -1, -1},   // kernel {+-1, +-i}
        {1, 1, -1, 1, -1},   // kernel {+-1, +-j}
        {1, 1, -1, -1, 1},   // kernel {+-1, +-k}
        {2, -2, 0, 0, 0},    // the two-dimensional irreducible
    };
    for (const auto& row : values) {
        std::vector<CycloInt> entries;
        for (int v : row) entries.push_back(CycloInt::from_integer(4, v));
        t.rows.push_back(std::move(entries));
    }
    return t;
}

} // namespace mckay
