#include "mckay/abelian.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace mckay {

namespace {

void require_rank(const FinAbGroup& g, const std::vector<int>& exponents, const char* what) {
    if (static_cast<int>(exponents.size()) != g.rank())
        throw std::invalid_argument(std::string(what) + ": exponent tuple has arity " +
                                    std::to_string(exponents.size()) + ", group has rank " +
                                    std::to_string(g.rank()));
}

std::vector<int> reduce_exponents(const FinAbGroup& g, std::vector<int> exponents) {
    const auto& orders = g.orders();
    for (std::size_t p = 0; p < exponents.size(); ++p) {
        const int o = orders[p];
        exponents[p] = ((exponents[p] % o) + o) % o;
    }
    return exponents;
}

// Shared odometer over exponent tuples, last coordinate fastest, which gives
// lexicographic order with the first coordinate most significant.
std::vector<std::vector<int>> enumerate_tuples(const FinAbGroup& g) {
    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(g.size()));
    std::vector<int> current(static_cast<std::size_t>(g.rank()), 0);
    while (true) {
        out.push_back(current);
        int p = g.rank() - 1;
        while (p >= 0) {
            if (++current[static_cast<std::size_t>(p)] < g.orders()[static_cast<std::size_t>(p)])
                break;
            current[static_cast<std::size_t>(p)] = 0;
            --p;
        }
        if (p < 0) break;
    }
    return out;
}

std::size_t tuple_index(const FinAbGroup& g, const std::vector<int>& exponents) {
    std::size_t index = 0;
    for (std::size_t p = 0; p < exponents.size(); ++p) {
        index = index * static_cast<std::size_t>(g.orders()[p]) +
                static_cast<std::size_t>(exponents[p]);
    }
    return index;
}

int parse_int_token(std::string_view token, const char* what) {
    std::size_t begin = 0, end = token.size();
    while (begin < end && (token[begin] == ' ' || token[begin] == '\t')) ++begin;
    while (end > begin && (token[end - 1] == ' ' || token[end - 1] == '\t')) --end;
    int value = 0;
    const char* first = token.data() + begin;
    const char* last = token.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw std::invalid_argument(std::string(what) + ": bad integer token '" +
                                    std::string(token) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(text.substr(start));
            break;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

} // namespace

FinAbGroup::FinAbGroup(std::vector<int> orders) : orders_(std::move(orders)) {
    if (orders_.empty())
        throw std::invalid_argument("group needs at least one cyclic factor; "
                                    "the trivial group is {1}");
    for (int o : orders_)
        if (o < 1) throw std::invalid_argument("cyclic factor orders must be >= 1");
}

long long FinAbGroup::size() const {
    long long n = 1;
    for (int o : orders_) n *= o;
    return n;
}

int FinAbGroup::exponent() const {
    long long l = 1;
    for (int o : orders_) l = std::lcm(l, static_cast<long long>(o));
    return static_cast<int>(l);
}

std::string FinAbGroup::spec_string() const {
    return exponent_label(orders_);
}

GroupElement make_element(const FinAbGroup& g, std::vector<int> exponents) {
    require_rank(g, exponents, "make_element");
    return GroupElement{reduce_exponents(g, std::move(exponents))};
}

AbCharacter make_character(const FinAbGroup& g, std::vector<int> exponents) {
    require_rank(g, exponents, "make_character");
    return AbCharacter{reduce_exponents(g, std::move(exponents))};
}

std::vector<GroupElement> enumerate_elements(const FinAbGroup& g) {
    std::vector<GroupElement> out;
    for (auto& t : enumerate_tuples(g)) out.push_back(GroupElement{std::move(t)});
    return out;
}

std::vector<AbCharacter> enumerate_characters(const FinAbGroup& g) {
    std::vector<AbCharacter> out;
    for (auto& t : enumerate_tuples(g)) out.push_back(AbCharacter{std::move(t)});
    return out;
}

std::size_t element_index(const FinAbGroup& g, const GroupElement& e) {
    require_rank(g, e.exponents, "element_index");
    return tuple_index(g, e.exponents);
}

std::size_t character_index(const FinAbGroup& g, const AbCharacter& chi) {
    require_rank(g, chi.exponents, "character_index");
    return tuple_index(g, chi.exponents);
}

GroupElement elem_add(const FinAbGroup& g, const GroupElement& a, const GroupElement& b) {
    require_rank(g, a.exponents, "elem_add");
    require_rank(g, b.exponents, "elem_add");
    std::vector<int> out(a.exponents.size());
    for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (a.exponents[p] + b.exponents[p]) % g.orders()[p];
    return GroupElement{std::move(out)};
}

GroupElement elem_neg(const FinAbGroup& g, const GroupElement& a) {
    require_rank(g, a.exponents, "elem_neg");
    std::vector<int> out(a.exponents.size());
    for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (g.orders()[p] - a.exponents[p]) % g.orders()[p];
    return GroupElement{std::move(out)};
}

AbCharacter char_mul(const FinAbGroup& g, const AbCharacter& a, const AbCharacter& b) {
    require_rank(g, a.exponents, "char_mul");
    require_rank(g, b.exponents, "char_mul");
    std::vector<int> out(a.exponents.size());
    for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (a.exponents[p] + b.exponents[p]) % g.orders()[p];
    return AbCharacter{std::move(out)};
}

AbCharacter char_inv(const FinAbGroup& g, const AbCharacter& a) {
    require_rank(g, a.exponents, "char_inv");
    std::vector<int> out(a.exponents.size());
    for (std::size_t p = 0; p < out.size(); ++p)
        out[p] = (g.orders()[p] - a.exponents[p]) % g.orders()[p];
    return AbCharacter{std::move(out)};
}

bool is_trivial(const AbCharacter& chi) {
    return std::all_of(chi.exponents.begin(), chi.exponents.end(),
                       [](int e) { return e == 0; });
}

long long eval_exponent(const FinAbGroup& g, const AbCharacter& chi, const GroupElement& at) {
    require_rank(g, chi.exponents, "eval_exponent");
    require_rank(g, at.exponents, "eval_exponent");
    const long long n = g.exponent();
    long long e = 0;
    for (std::size_t p = 0; p < chi.exponents.size(); ++p) {
        const long long step = n / g.orders()[p];
        e = (e + static_cast<long long>(chi.exponents[p]) * at.exponents[p] % n * step) % n;
    }
    return e;
}

CycloInt char_eval(const FinAbGroup& g, const AbCharacter& chi, const GroupElement& at) {
    return CycloInt::root_power(g.exponent(), eval_exponent(g, chi, at));
}

AbCharacter det_character(const AbRep& v) {
    AbCharacter det{std::vector<int>(static_cast<std::size_t>(v.group.rank()), 0)};
    for (const AbCharacter& chi : v.summands) det = char_mul(v.group, det, chi);
    return det;
}

bool is_subgroup(const FinAbGroup& g, const std::vector<GroupElement>& elements) {
    if (elements.empty()) return false;
    for (const GroupElement& a : elements)
        for (const GroupElement& b : elements)
            if (!std::binary_search(elements.begin(), elements.end(), elem_add(g, a, b)))
                return false;
    return true;
}

RestrictedCharacter restrict_character(const FinAbGroup& g, const AbCharacter& chi,
                                       const std::vector<GroupElement>& sorted_subgroup) {
    RestrictedCharacter out;
    out.values.reserve(sorted_subgroup.size());
    for (const GroupElement& e : sorted_subgroup) out.values.push_back(char_eval(g, chi, e));
    return out;
}

RestrictedRep restrict_rep(const AbRep& v, std::vector<GroupElement> subgroup) {
    for (GroupElement& e : subgroup) e = make_element(v.group, std::move(e.exponents));
    std::sort(subgroup.begin(), subgroup.end());
    subgroup.erase(std::unique(subgroup.begin(), subgroup.end()), subgroup.end());
    if (!is_subgroup(v.group, subgroup))
        throw NotASubgroup("element set is not closed under the group law");
    RestrictedRep out;
    out.summands.reserve(v.summands.size());
    for (const AbCharacter& chi : v.summands)
        out.summands.push_back(restrict_character(v.group, chi, subgroup));
    out.subgroup_elements = std::move(subgroup);
    return out;
}

FinAbGroup parse_group_spec(std::string_view text) {
    std::vector<int> orders;
    for (std::string_view token : split(text, ',')) {
        const int o = parse_int_token(token, "group spec");
        if (o < 1)
            throw std::invalid_argument("group spec: order '" + std::to_string(o) +
                                        "' is not positive");
        orders.push_back(o);
    }
    return FinAbGroup(std::move(orders));
}

AbRep parse_rep_spec(const FinAbGroup& g, std::string_view text) {
    AbRep rep{g, {}};
    for (std::string_view tuple : split(text, ';')) {
        std::vector<int> exponents;
        for (std::string_view token : split(tuple, ','))
            exponents.push_back(parse_int_token(token, "rep spec"));
        if (static_cast<int>(exponents.size()) != g.rank())
            throw std::invalid_argument("rep spec: tuple '" + std::string(tuple) + "' has arity " +
                                        std::to_string(exponents.size()) +
                                        ", expected " + std::to_string(g.rank()) +
                                        " (zeros must be explicit)");
        rep.summands.push_back(make_character(g, std::move(exponents)));
    }
    return rep;
}

std::string rep_spec_string(const AbRep& v) {
    std::string out;
    for (std::size_t s = 0; s < v.summands.size(); ++s) {
        if (s) out += ';';
        out += exponent_label(v.summands[s].exponents);
    }
    return out;
}

std::string exponent_label(const std::vector<int>& exponents) {
    std::string out;
    for (std::size_t p = 0; p < exponents.size(); ++p) {
        if (p) out += ',';
        out += std::to_string(exponents[p]);
    }
    return out;
}

} // namespace mckay
