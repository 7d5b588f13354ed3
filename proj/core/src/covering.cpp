#include "mckay/covering.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mckay {

namespace {

const char* kExtendibilityNote =
    "every irreducible representation of the subgroup extends to the full "
    "group (automatic for abelian groups)";

std::string count_detail(const char* what, std::size_t n) {
    std::ostringstream out;
    out << n << " " << what;
    return out.str();
}

// A restriction to the kernel, keyed by its root-power exponents at each
// kernel element: chi(n_k) = zeta_N^key[k]. Faithful because every value of
// an abelian character is a pure root of unity.
using RestrictionKey = std::vector<long long>;

RestrictionKey restriction_key(const FinAbGroup& g, const AbCharacter& chi,
                               const std::vector<GroupElement>& kernel) {
    RestrictionKey key;
    key.reserve(kernel.size());
    for (const GroupElement& e : kernel) key.push_back(eval_exponent(g, chi, e));
    return key;
}

} // namespace

CoveringInstance build_instance(const AbRep& v) {
    const FinAbGroup& g = v.group;
    CoveringInstance inst{g, v, {}, {}, {}, {}, {}, {}};

    const AbCharacter det = det_character(v);
    for (const GroupElement& e : enumerate_elements(g))
        if (eval_exponent(g, det, e) == 0) inst.kernel.push_back(e);
    // Kernel of a homomorphism; already sorted by enumeration order.

    inst.quiver_g = mckay_quiver_abelian(v);

    const std::vector<AbCharacter> chars = enumerate_characters(g);
    const long long n = g.exponent();

    // Base characters: first appearance of each distinct restriction while
    // scanning Irr(G) in lexicographic order.
    std::map<RestrictionKey, std::size_t> base_index;
    std::vector<RestrictionKey> base_keys;
    std::vector<std::size_t> representative;
    inst.fiber_of.resize(chars.size());
    for (std::size_t i = 0; i < chars.size(); ++i) {
        RestrictionKey key = restriction_key(g, chars[i], inst.kernel);
        const bool trivial =
            std::all_of(key.begin(), key.end(), [](long long e) { return e == 0; });
        auto [it, inserted] = base_index.emplace(std::move(key), base_keys.size());
        if (inserted) {
            base_keys.push_back(it->first);
            representative.push_back(i);
            inst.fibers.emplace_back();
        }
        inst.fiber_of[i] = it->second;
        inst.fibers[it->second].push_back(i);
        if (trivial) inst.deck.push_back(i);
    }

    // Base quiver: vertices are the base characters; multiplicities count
    // restricted summands carrying one base character to another. Labels and
    // payloads use the first covering character as representative.
    Quiver& base = inst.quiver_n;
    base.vertices.reserve(base_keys.size());
    for (std::size_t b = 0; b < base_keys.size(); ++b) {
        const AbCharacter& rep_char = chars[representative[b]];
        base.vertices.push_back(
            QuiverVertex{b, exponent_label(rep_char.exponents), rep_char.exponents, 1});
    }
    base.mult.assign(base_keys.size(), std::vector<std::int64_t>(base_keys.size(), 0));
    RestrictionKey product(inst.kernel.size(), 0);
    for (const AbCharacter& chi : v.summands) {
        const RestrictionKey summand = restriction_key(g, chi, inst.kernel);
        for (std::size_t b = 0; b < base_keys.size(); ++b) {
            for (std::size_t k = 0; k < product.size(); ++k)
                product[k] = (summand[k] + base_keys[b][k]) % n;
            const auto target = base_index.find(product);
            if (target == base_index.end())
                throw std::logic_error("product of restrictions is not a restriction");
            ++base.mult[b][target->second];
        }
    }
    base.meta.group = "ker(det) in " + g.spec_string();
    base.meta.rep = rep_spec_string(v) + " restricted";
    base.meta.ambient = "SL";
    base.meta.construction = "mckay-restricted";
    base.meta.rep_dim = v.dim();
    return inst;
}

CoveringReport check_regular_covering(const CoveringInstance& inst) {
    CoveringReport report;
    report.group_spec = inst.group.spec_string();
    report.rep_spec = rep_spec_string(inst.rep);
    report.group_size = inst.group.size();
    report.kernel_size = static_cast<long long>(inst.kernel.size());
    report.deck_size = static_cast<long long>(inst.deck.size());
    report.fiber_count = static_cast<long long>(inst.fibers.size());
    report.cover_vertices = static_cast<long long>(inst.quiver_g.vertex_count());
    report.base_vertices = static_cast<long long>(inst.quiver_n.vertex_count());
    report.assumption = kExtendibilityNote;

    const FinAbGroup& g = inst.group;
    const std::vector<AbCharacter> chars = enumerate_characters(g);
    const std::size_t m = chars.size();
    const std::size_t expected_fiber =
        inst.kernel.empty() ? 0 : static_cast<std::size_t>(g.size() / inst.kernel.size());

    // (a) Every fiber has size |G| / |N|.
    {
        CoveringCheck check{"fiber uniformity", true, ""};
        for (std::size_t b = 0; b < inst.fibers.size(); ++b) {
            if (inst.fibers[b].size() != expected_fiber) {
                check.passed = false;
                check.detail = "fiber " + std::to_string(b) + " has size " +
                               std::to_string(inst.fibers[b].size()) + ", expected " +
                               std::to_string(expected_fiber);
                break;
            }
        }
        if (check.passed)
            check.detail = count_detail("fibers, each of size", inst.fibers.size()) +
                           " " + std::to_string(expected_fiber);
        report.checks.push_back(std::move(check));
    }

    // Deck action on vertex indices by character multiplication, tabulated.
    const std::vector<int>& orders = g.orders();
    const std::size_t rank = orders.size();
    std::vector<std::size_t> stride(rank, 1);
    for (std::size_t p = rank; p-- > 1;)
        stride[p - 1] = stride[p] * static_cast<std::size_t>(orders[p]);
    std::vector<std::vector<std::size_t>> act_table(inst.deck.size(),
                                                    std::vector<std::size_t>(m, 0));
    for (std::size_t d = 0; d < inst.deck.size(); ++d) {
        const AbCharacter& sigma = chars[inst.deck[d]];
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t target = 0;
            for (std::size_t p = 0; p < rank; ++p)
                target += static_cast<std::size_t>(
                              (sigma.exponents[p] + chars[i].exponents[p]) % orders[p]) *
                          stride[p];
            act_table[d][i] = target;
        }
    }

    // (b) Deck characters permute each fiber freely and transitively.
    {
        CoveringCheck check{"deck freeness and transitivity", true, ""};
        if (inst.deck.size() != expected_fiber) {
            check.passed = false;
            check.detail = "deck has " + std::to_string(inst.deck.size()) +
                           " characters, expected " + std::to_string(expected_fiber);
        }
        for (std::size_t b = 0; check.passed && b < inst.fibers.size(); ++b) {
            for (std::size_t i : inst.fibers[b]) {
                std::vector<std::size_t> orbit;
                for (std::size_t d = 0; d < inst.deck.size(); ++d)
                    orbit.push_back(act_table[d][i]);
                std::sort(orbit.begin(), orbit.end());
                if (std::adjacent_find(orbit.begin(), orbit.end()) != orbit.end()) {
                    check.passed = false;
                    check.detail = "deck action on vertex " + std::to_string(i) +
                                   " is not free";
                    break;
                }
                std::vector<std::size_t> fiber = inst.fibers[b];
                std::sort(fiber.begin(), fiber.end());
                if (orbit != fiber) {
                    check.passed = false;
                    check.detail = "deck orbit of vertex " + std::to_string(i) +
                                   " is not its fiber";
                    break;
                }
            }
        }
        if (check.passed)
            check.detail = count_detail("deck characters act simply transitively on",
                                        inst.deck.size()) +
                           " each fiber";
        report.checks.push_back(std::move(check));
    }

    // (c) Deck characters are quiver automorphisms.
    {
        CoveringCheck check{"deck automorphy", true, ""};
        for (std::size_t d = 0; d < inst.deck.size(); ++d) {
            const std::vector<std::size_t>& sigma = act_table[d];
            for (std::size_t i = 0; check.passed && i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    if (inst.quiver_g.mult[sigma[i]][sigma[j]] != inst.quiver_g.mult[i][j]) {
                        check.passed = false;
                        check.detail = "deck character " + std::to_string(inst.deck[d]) +
                                       " does not preserve the arrow count " +
                                       std::to_string(i) + " -> " + std::to_string(j);
                        break;
                    }
                }
            }
            if (!check.passed) break;
        }
        if (check.passed)
            check.detail = "every deck character preserves the multiplicity matrix";
        report.checks.push_back(std::move(check));
    }

    // (d) Local bijection on arrows: arrows out of (into) a cover vertex,
    // summed over a fiber, match the base quiver.
    {
        CoveringCheck check{"local bijection on arrows", true, ""};
        for (std::size_t i = 0; check.passed && i < m; ++i) {
            const std::size_t bi = inst.fiber_of[i];
            for (std::size_t bj = 0; bj < inst.fibers.size(); ++bj) {
                std::int64_t outgoing = 0;
                std::int64_t incoming = 0;
                for (std::size_t j : inst.fibers[bj]) {
                    outgoing += inst.quiver_g.mult[i][j];
                    incoming += inst.quiver_g.mult[j][i];
                }
                if (outgoing != inst.quiver_n.mult[bi][bj] ||
                    incoming != inst.quiver_n.mult[bj][bi]) {
                    check.passed = false;
                    check.detail = "arrows between vertex " + std::to_string(i) +
                                   " and fiber " + std::to_string(bj) +
                                   " do not match the base quiver";
                    break;
                }
            }
        }
        if (check.passed)
            check.detail = "arrow counts through every fiber match the base quiver";
        report.checks.push_back(std::move(check));
    }

    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const CoveringCheck& c) { return c.passed; });
    return report;
}

std::vector<CoveringReport> covering_chain_hexagrams() {
    std::vector<CoveringReport> reports;
    reports.reserve(6);
    for (int k = 1; k <= 6; ++k) {
        const FinAbGroup g = FinAbGroup::elementary_two(k);
        AbRep v{g, {}};
        for (int p = 0; p < k; ++p) {
            std::vector<int> exps(static_cast<std::size_t>(k), 0);
            exps[static_cast<std::size_t>(p)] = 1;
            v.summands.push_back(make_character(g, std::move(exps)));
        }
        reports.push_back(check_regular_covering(build_instance(v)));
    }
    return reports;
}

} // namespace mckay
