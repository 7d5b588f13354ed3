#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "mckay/abelian.hpp"
#include "support/families.hpp"

using namespace mckay;

TEST_CASE("group construction and basic attributes") {
    const FinAbGroup g({2, 3, 4});
    CHECK(g.rank() == 3);
    CHECK(g.size() == 24);
    CHECK(g.exponent() == 12);
    CHECK(g.spec_string() == "2,3,4");
    CHECK(FinAbGroup::cyclic(1).size() == 1);
    CHECK_THROWS_AS(FinAbGroup({}), std::invalid_argument);
    CHECK_THROWS_AS(FinAbGroup({2, 0}), std::invalid_argument);
}

TEST_CASE("character enumeration is lexicographic and complete") {
    const FinAbGroup c5 = FinAbGroup::cyclic(5);
    const auto chars5 = enumerate_characters(c5);
    REQUIRE(chars5.size() == 5);
    for (int t = 0; t < 5; ++t) CHECK(chars5[static_cast<std::size_t>(t)].exponents == std::vector<int>{t});

    const auto trivial = enumerate_characters(FinAbGroup::cyclic(1));
    REQUIRE(trivial.size() == 1);
    CHECK(is_trivial(trivial[0]));

    const auto klein = enumerate_characters(FinAbGroup::elementary_two(2));
    REQUIRE(klein.size() == 4);
    CHECK(klein[0].exponents == std::vector<int>{0, 0});
    CHECK(klein[1].exponents == std::vector<int>{0, 1});
    CHECK(klein[2].exponents == std::vector<int>{1, 0});
    CHECK(klein[3].exponents == std::vector<int>{1, 1});

    for (std::size_t i = 0; i < klein.size(); ++i)
        CHECK(character_index(FinAbGroup::elementary_two(2), klein[i]) == i);
}

TEST_CASE("character group law") {
    const FinAbGroup c5 = FinAbGroup::cyclic(5);
    const AbCharacter s1 = make_character(c5, {1});
    const AbCharacter s3 = make_character(c5, {3});
    CHECK(char_mul(c5, s1, s3) == make_character(c5, {4}));
    // Cross-check through the cyclotomic ring.
    CHECK(CycloInt::root_power(5, 1) * CycloInt::root_power(5, 3) == CycloInt::root_power(5, 4));

    const FinAbGroup c2 = FinAbGroup::cyclic(2);
    const AbCharacter sign = make_character(c2, {1});
    CHECK(is_trivial(char_mul(c2, sign, sign)));
    CHECK(is_trivial(char_inv(c2, make_character(c2, {0}))));
    CHECK(char_mul(c2, sign, char_inv(c2, sign)) == make_character(c2, {0}));

    // Only rank mismatches are detectable from exponent tuples.
    const FinAbGroup klein = FinAbGroup::elementary_two(2);
    CHECK_THROWS_AS(char_mul(c5, s1, make_character(klein, {1, 0})), std::invalid_argument);
}

TEST_CASE("character evaluation") {
    const FinAbGroup c5 = FinAbGroup::cyclic(5);
    CHECK(char_eval(c5, make_character(c5, {2}), make_element(c5, {1})) ==
          CycloInt::root_power(5, 2));
    CHECK(char_eval(c5, make_character(c5, {3}), make_element(c5, {0})).is_one());

    const FinAbGroup c2 = FinAbGroup::cyclic(2);
    CHECK(char_eval(c2, make_character(c2, {1}), make_element(c2, {1})) ==
          CycloInt::from_integer(2, -1));

    // Mixed orders go through the group exponent.
    const FinAbGroup g({2, 3});
    CHECK(char_eval(g, make_character(g, {1, 1}), make_element(g, {1, 1})) ==
          CycloInt::root_power(6, 5));
}

TEST_CASE("determinant character") {
    const FinAbGroup c2 = FinAbGroup::cyclic(2);
    const AbCharacter sign = make_character(c2, {1});
    CHECK(is_trivial(det_character(AbRep{c2, {sign, sign}})));
    CHECK(det_character(AbRep{c2, {sign}}) == sign);
    const AbCharacter trivial = make_character(c2, {0});
    CHECK(is_trivial(det_character(AbRep{c2, {trivial, trivial}})));
    CHECK(is_trivial(det_character(AbRep{c2, {}})));
}

TEST_CASE("restriction to a subgroup") {
    const FinAbGroup klein = FinAbGroup::elementary_two(2);
    const AbRep v{klein, {make_character(klein, {1, 0}), make_character(klein, {0, 1})}};
    const std::vector<GroupElement> diag{make_element(klein, {0, 0}), make_element(klein, {1, 1})};

    const RestrictedRep restricted = restrict_rep(v, diag);
    REQUIRE(restricted.summands.size() == 2);
    // Both coordinate characters evaluate to -1 at (1,1): the same nontrivial
    // character of the order-2 subgroup, twice.
    CHECK(restricted.summands[0] == restricted.summands[1]);
    CHECK(restricted.summands[0].values[0].is_one());
    CHECK(restricted.summands[0].values[1] == CycloInt::from_integer(2, -1));

    const AbRep trivial_rep{klein, {make_character(klein, {0, 0})}};
    const RestrictedRep trivial_restricted = restrict_rep(trivial_rep, diag);
    for (const CycloInt& value : trivial_restricted.summands[0].values) CHECK(value.is_one());

    // Full-group restriction keeps the evaluation table.
    const FinAbGroup c2 = FinAbGroup::cyclic(2);
    const AbRep w{c2, {make_character(c2, {1})}};
    const RestrictedRep full = restrict_rep(w, enumerate_elements(c2));
    CHECK(full.summands[0].values[0].is_one());
    CHECK(full.summands[0].values[1] == CycloInt::from_integer(2, -1));

    const std::vector<GroupElement> not_closed{make_element(klein, {0, 0}),
                                               make_element(klein, {1, 0}),
                                               make_element(klein, {1, 1})};
    CHECK_THROWS_AS(restrict_rep(v, not_closed), NotASubgroup);
}

TEST_CASE("character orders match element orders") {
    for (const auto& orders : testsupport::abelian_groups_up_to(16)) {
        const FinAbGroup g(orders);

        std::multiset<int> char_orders;
        for (const AbCharacter& chi : enumerate_characters(g)) {
            AbCharacter acc = chi;
            int k = 1;
            while (!is_trivial(acc)) {
                acc = char_mul(g, acc, chi);
                ++k;
            }
            CHECK(g.exponent() % k == 0);
            char_orders.insert(k);
        }

        std::multiset<int> elem_orders;
        const GroupElement identity = make_element(g, std::vector<int>(orders.size(), 0));
        for (const GroupElement& e : enumerate_elements(g)) {
            GroupElement acc = e;
            int k = 1;
            while (!(acc == identity)) {
                acc = elem_add(g, acc, e);
                ++k;
            }
            elem_orders.insert(k);
        }

        CHECK(char_orders == elem_orders);
    }
}

TEST_CASE("evaluation is a homomorphism in the character") {
    std::mt19937 rng(91231);
    for (const auto& orders : testsupport::small_rank_tuples(36)) {
        const FinAbGroup g(orders);
        if (g.size() > 20) continue;
        const auto chars = enumerate_characters(g);
        const auto elements = enumerate_elements(g);
        std::uniform_int_distribution<std::size_t> cd(0, chars.size() - 1);
        std::uniform_int_distribution<std::size_t> ed(0, elements.size() - 1);
        for (int t = 0; t < 5; ++t) {
            const AbCharacter& a = chars[cd(rng)];
            const AbCharacter& b = chars[cd(rng)];
            const GroupElement& x = elements[ed(rng)];
            CHECK(char_eval(g, char_mul(g, a, b), x) ==
                  char_eval(g, a, x) * char_eval(g, b, x));
        }
    }
}

TEST_CASE("exact character orthogonality for groups of order <= 16") {
    for (const auto& orders : testsupport::abelian_groups_up_to(16)) {
        const FinAbGroup g(orders);
        const auto chars = enumerate_characters(g);
        const auto elements = enumerate_elements(g);
        const int n = g.exponent();
        for (const AbCharacter& a : chars) {
            for (const AbCharacter& b : chars) {
                CycloInt acc = CycloInt::zero(n);
                for (const GroupElement& e : elements)
                    acc = acc + char_eval(g, a, e) * char_eval(g, b, e).conjugate();
                const auto scaled = acc.divided_by(g.size());
                REQUIRE(scaled.has_value());
                CHECK(scaled->as_integer() == (a == b ? 1 : 0));
            }
        }
    }
}

TEST_CASE("group and rep spec grammars") {
    CHECK(parse_group_spec("5").orders() == std::vector<int>{5});
    CHECK(parse_group_spec("2,2,2").orders() == std::vector<int>{2, 2, 2});
    CHECK(parse_group_spec(" 2 , 3 ").orders() == std::vector<int>{2, 3});
    CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("2,,2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("-3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec("abc"), std::invalid_argument);

    const FinAbGroup klein = FinAbGroup::elementary_two(2);
    const AbRep v = parse_rep_spec(klein, "1,0;0,1");
    REQUIRE(v.summands.size() == 2);
    CHECK(v.summands[0].exponents == std::vector<int>{1, 0});
    CHECK(v.summands[1].exponents == std::vector<int>{0, 1});
    CHECK(rep_spec_string(v) == "1,0;0,1");

    // Exponents reduce mod the orders; arity must be exact.
    CHECK(parse_rep_spec(klein, "3,-1").summands[0].exponents == std::vector<int>{1, 1});
    CHECK_THROWS_AS(parse_rep_spec(klein, "1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rep_spec(klein, "1,0;1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rep_spec(klein, "1,x"), std::invalid_argument);
}
