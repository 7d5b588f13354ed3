#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/cyclotomic.hpp"

namespace mckay {

/// A finite abelian group presented as a product of cyclic groups,
/// C_{orders[0]} x ... x C_{orders[r-1]}. Factors of order 1 are allowed;
/// the trivial group is orders = {1}, never an empty list.
class FinAbGroup {
public:
    explicit FinAbGroup(std::vector<int> orders);

    static FinAbGroup cyclic(int n) { return FinAbGroup({n}); }
    static FinAbGroup elementary_two(int rank) {
        return FinAbGroup(std::vector<int>(static_cast<std::size_t>(rank), 2));
    }

    int rank() const { return static_cast<int>(orders_.size()); }
    long long size() const;
    int exponent() const;  // lcm of the orders
    const std::vector<int>& orders() const { return orders_; }

    /// The group grammar used by the CLI: "2,2,2".
    std::string spec_string() const;

    friend bool operator==(const FinAbGroup&, const FinAbGroup&) = default;

private:
    std::vector<int> orders_;
};

/// A group element as an exponent tuple, componentwise reduced mod orders.
struct GroupElement {
    std::vector<int> exponents;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend std::strong_ordering operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// A character of a finite abelian group, also an exponent tuple: it sends
/// the element g to the product over coordinates p of zeta_{orders[p]}
/// raised to exponents[p] * g_p.
struct AbCharacter {
    std::vector<int> exponents;

    friend bool operator==(const AbCharacter&, const AbCharacter&) = default;
    friend std::strong_ordering operator<=>(const AbCharacter&, const AbCharacter&) = default;
};

/// A diagonal representation: a multiset of characters of a fixed group.
struct AbRep {
    FinAbGroup group;
    std::vector<AbCharacter> summands;

    long long dim() const { return static_cast<long long>(summands.size()); }
};

GroupElement make_element(const FinAbGroup& g, std::vector<int> exponents);
AbCharacter make_character(const FinAbGroup& g, std::vector<int> exponents);

/// All group elements in lexicographic order of exponent tuples
/// (first coordinate most significant).
std::vector<GroupElement> enumerate_elements(const FinAbGroup& g);

/// All characters in the same lexicographic order; this order is the vertex
/// order of every quiver built over g.
std::vector<AbCharacter> enumerate_characters(const FinAbGroup& g);

std::size_t element_index(const FinAbGroup& g, const GroupElement& e);
std::size_t character_index(const FinAbGroup& g, const AbCharacter& chi);

GroupElement elem_add(const FinAbGroup& g, const GroupElement& a, const GroupElement& b);
GroupElement elem_neg(const FinAbGroup& g, const GroupElement& a);

/// The character group law: componentwise addition mod orders.
AbCharacter char_mul(const FinAbGroup& g, const AbCharacter& a, const AbCharacter& b);
AbCharacter char_inv(const FinAbGroup& g, const AbCharacter& a);
bool is_trivial(const AbCharacter& chi);

/// The exponent e with chi(at) = zeta_N^e, where N is the group exponent.
long long eval_exponent(const FinAbGroup& g, const AbCharacter& chi, const GroupElement& at);

/// chi(at), as an exact cyclotomic integer at root order = exponent of g.
CycloInt char_eval(const FinAbGroup& g, const AbCharacter& chi, const GroupElement& at);

/// Determinant character of a diagonal representation: the product of its
/// summands. The determinant of the empty representation is trivial.
AbCharacter det_character(const AbRep& v);

struct NotASubgroup : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A character of a subgroup N <= G, recorded by its values on the elements
/// of N (in sorted order). Subgroups never get their own FinAbGroup; their
/// character theory is reached by restriction from G.
struct RestrictedCharacter {
    std::vector<CycloInt> values;

    friend bool operator==(const RestrictedCharacter&, const RestrictedCharacter&) = default;
    friend std::strong_ordering operator<=>(const RestrictedCharacter&,
                                            const RestrictedCharacter&) = default;
};

struct RestrictedRep {
    std::vector<GroupElement> subgroup_elements;  // sorted, closure-verified
    std::vector<RestrictedCharacter> summands;

    long long dim() const { return static_cast<long long>(summands.size()); }
};

/// True iff the (nonempty) element set is closed under the group law.
bool is_subgroup(const FinAbGroup& g, const std::vector<GroupElement>& elements);

RestrictedCharacter restrict_character(const FinAbGroup& g, const AbCharacter& chi,
                                       const std::vector<GroupElement>& sorted_subgroup);

/// Restrict every summand of v to the given element set. The set is sorted,
/// deduplicated and closure-checked; throws NotASubgroup if it is not closed.
RestrictedRep restrict_rep(const AbRep& v, std::vector<GroupElement> subgroup);

// CLI grammars. Groups: comma-separated positive integers ("2,2,2").
// Representations: semicolon-separated exponent tuples of exact arity
// ("1,0,0;0,1,0"); trailing zeros may not be omitted.
FinAbGroup parse_group_spec(std::string_view text);
AbRep parse_rep_spec(const FinAbGroup& g, std::string_view text);

std::string rep_spec_string(const AbRep& v);
std::string exponent_label(const std::vector<int>& exponents);  // "1,0"

} // namespace mckay
