// Acceptance suite: every contract criterion below runs at full stated scale
// with exact (tolerance-zero) comparisons and prints one pass/fail line.
// Exit status is the number of failed criteria.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "mckay/chartab.hpp"
#include "mckay/covering.hpp"
#include "mckay/diagrams.hpp"
#include "mckay/emit.hpp"
#include "support/families.hpp"

using namespace mckay;
using Matrix = std::vector<std::vector<std::int64_t>>;

namespace {

std::string g_detail;

bool fail(const std::string& message) {
    g_detail = message;
    return false;
}

Matrix cycle_matrix(std::size_t n, std::size_t step) {
    Matrix m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][(i + step) % n] = 1;
    return m;
}

Matrix matrix_sum(const Matrix& a, const Matrix& b) {
    Matrix out = a;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[i][j] += b[i][j];
    return out;
}

Matrix one_bit_matrix(const Quiver& q) {
    Matrix m(q.vertex_count(), std::vector<std::int64_t>(q.vertex_count(), 0));
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        for (std::size_t j = 0; j < q.vertex_count(); ++j) {
            int distance = 0;
            for (std::size_t p = 0; p < q.vertices[i].exponents->size(); ++p)
                distance += ((*q.vertices[i].exponents)[p] != (*q.vertices[j].exponents)[p]);
            m[i][j] = (distance == 1) ? 1 : 0;
        }
    return m;
}

AbRep coordinate_rep(const FinAbGroup& g) {
    AbRep v{g, {}};
    for (int p = 0; p < g.rank(); ++p) {
        std::vector<int> exps(static_cast<std::size_t>(g.rank()), 0);
        exps[static_cast<std::size_t>(p)] = 1;
        v.summands.push_back(make_character(g, std::move(exps)));
    }
    return v;
}

// V family shared by criteria 3-5: every multiset of <= 3 summands when
// |G| <= 8, otherwise 200 fixed-seed samples.
std::vector<AbRep> rep_family(const FinAbGroup& g) {
    if (g.size() <= 8) return testsupport::all_reps_up_to(g, 3);
    return testsupport::sampled_reps(g, 3, 200,
                                     0x5eedu + static_cast<std::uint32_t>(g.size()) * 131u +
                                         static_cast<std::uint32_t>(g.rank()));
}

// Run fn over every item on a small worker pool; returns the first reported
// error, or empty.  All library operations used here are pure, so sharing
// items across threads is safe.
template <typename Item, typename Fn>
std::string parallel_first_error(const std::vector<Item>& items, Fn fn) {
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(items.size())));
    std::atomic<std::size_t> next{0};
    std::vector<std::future<std::string>> jobs;
    jobs.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&]() -> std::string {
            for (std::size_t k = next.fetch_add(1); k < items.size(); k = next.fetch_add(1)) {
                std::string error = fn(items[k]);
                if (!error.empty()) return error;
            }
            return {};
        }));
    }
    std::string first;
    for (auto& job : jobs) {
        std::string error = job.get();
        if (first.empty()) first = std::move(error);
    }
    return first;
}

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    const std::string command = std::string(MCKAY_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) return {};
    std::string output;
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, n);
    const int rc = pclose(pipe);
    return RunResult{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, std::move(output)};
}

// ---- criterion 1: preset matrices ----------------------------------------

bool criterion_preset_matrices() {
    const std::vector<std::pair<std::string, Matrix>> expected = {
        {"wuxing-sheng", cycle_matrix(5, 1)},
        {"wuxing-ke", cycle_matrix(5, 2)},
        {"wuxing-shengke", matrix_sum(cycle_matrix(5, 1), cycle_matrix(5, 2))},
        {"taiji", Matrix{{1}}},
        {"liangyi", Matrix{{0, 1}, {1, 0}}},
        {"liangyi-sl2", Matrix{{0, 2}, {2, 0}}},
        {"taijitu", Matrix{{1, 2}, {2, 1}}},
        {"sixiang", Matrix{{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}}},
        {"sixiang-sl3", Matrix{{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}}},
    };
    for (const auto& [name, matrix] : expected) {
        const Quiver q = preset_quiver(name);
        if (q.mult != matrix) return fail("preset " + name + " has the wrong matrix");
    }
    const Quiver bagua = preset_quiver("bagua");
    if (bagua.vertex_count() != 8 || bagua.arrow_count() != 24)
        return fail("bagua must have 8 vertices and 24 arrows");
    if (bagua.mult != one_bit_matrix(bagua))
        return fail("bagua must be the doubled 3-cube");
    return true;
}

// ---- criterion 2: hexagram quiver -----------------------------------------

bool criterion_hexagrams() {
    const auto start = std::chrono::steady_clock::now();
    const Quiver q = preset_quiver("hexagrams");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (q.vertex_count() != 64) return fail("expected 64 vertices");
    if (q.arrow_count() != 384) return fail("expected 384 arrows");
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        if (q.out_degree(i) != 6 || q.in_degree(i) != 6)
            return fail("vertex " + std::to_string(i) + " does not have degree 6 both ways");
    if (q.mult != one_bit_matrix(q))
        return fail("adjacency must be exactly one-coordinate difference");
    if (seconds >= 1.0) return fail("construction took " + std::to_string(seconds) + "s");
    return true;
}

// ---- criterion 3: returning arrows == base + inverse-determinant ----------

bool criterion_returning_arrows() {
    std::atomic<long long> cases{0};
    const std::string error = parallel_first_error(
        testsupport::small_rank_tuples(36), [&cases](const std::vector<int>& orders) {
            const FinAbGroup g(orders);
            for (const AbRep& v : rep_family(g)) {
                const Quiver returning = returning_arrow_quiver(v);
                const AbRep tail{g, {char_inv(g, det_character(v))}};
                const Quiver expected =
                    quiver_add(mckay_quiver_abelian(v), mckay_quiver_abelian(tail));
                if (returning.mult != expected.mult)
                    return "mismatch for group " + g.spec_string() + ", rep " +
                           rep_spec_string(v);
                ++cases;
            }
            return std::string{};
        });
    if (!error.empty()) return fail(error);
    g_detail = std::to_string(cases.load()) + " cases";
    return true;
}

// ---- criterion 4: regular coverings, exhaustive to order 16 ----------------

bool criterion_coverings() {
    const std::string error = parallel_first_error(
        testsupport::abelian_groups_up_to(16), [](const std::vector<int>& orders) {
            const FinAbGroup g(orders);
            for (const AbRep& v : testsupport::all_reps_up_to(g, 3)) {
                const CoveringReport report = check_regular_covering(build_instance(v));
                if (!report.passed)
                    return "covering failed for group " + g.spec_string() + ", rep " +
                           rep_spec_string(v);
            }
            return std::string{};
        });
    if (!error.empty()) return fail(error);

    // Negative control: delete one arrow and the local bijection must fail.
    CoveringInstance corrupted = build_instance(coordinate_rep(FinAbGroup::elementary_two(3)));
    for (auto& row : corrupted.quiver_g.mult) {
        bool done = false;
        for (auto& m : row)
            if (m > 0) {
                --m;
                done = true;
                break;
            }
        if (done) break;
    }
    const CoveringReport negative = check_regular_covering(corrupted);
    if (negative.passed) return fail("negative control passed");
    bool local_bijection_failed = false;
    for (const CoveringCheck& check : negative.checks)
        if (check.name == "local bijection on arrows" && !check.passed)
            local_bijection_failed = true;
    if (!local_bijection_failed)
        return fail("negative control did not fail the local bijection check");
    return true;
}

// ---- criterion 5: abelian fast path vs inner-product engine ----------------

bool criterion_oracle_equivalence() {
    const std::string error = parallel_first_error(
        testsupport::abelian_groups_up_to(16), [](const std::vector<int>& orders) {
            const FinAbGroup g(orders);
            const CharacterTable table = table_from_abelian(g);
            for (const AbRep& v : rep_family(g)) {
                RepSpec spec;
                for (const AbCharacter& chi : v.summands)
                    spec.rows.push_back(character_index(g, chi));
                if (mckay_quiver_table(table, spec).mult != mckay_quiver_abelian(v).mult)
                    return "oracle mismatch for group " + g.spec_string() + ", rep " +
                           rep_spec_string(v);
            }
            return std::string{};
        });
    if (!error.empty()) return fail(error);
    return true;
}

// ---- criterion 6: ADE anchors ----------------------------------------------

bool criterion_ade_anchors() {
    const Quiver d4 = mckay_quiver_table(builtin_q8_table(), RepSpec{{4}});
    const Matrix expected_d4 = {
        {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {1, 1, 1, 1, 0},
    };
    if (d4.vertex_count() != 5) return fail("quaternion quiver must have 5 vertices");
    if (d4.mult != expected_d4) return fail("quaternion quiver is not the doubled affine D4");
    if (d4.out_degree(4) != 4 || d4.in_degree(4) != 4)
        return fail("center vertex must have degree 4 both ways");
    for (std::size_t t = 0; t < 4; ++t)
        if (d4.out_degree(t) != 1 || d4.in_degree(t) != 1)
            return fail("leaf vertices must have degree 1");
    for (std::size_t t = 0; t < 5; ++t)
        if (d4.mult[t][t] != 0) return fail("the doubled affine D4 has no loops");

    for (int n = 3; n <= 5; ++n) {
        const Quiver a = mckay_quiver_table(builtin_cyclic_table(n),
                                            RepSpec{{1, static_cast<std::size_t>(n - 1)}});
        const Matrix expected =
            matrix_sum(cycle_matrix(static_cast<std::size_t>(n), 1),
                       cycle_matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n - 1)));
        if (a.mult != expected)
            return fail("order-" + std::to_string(n) + " quiver is not the doubled affine A");
    }
    return true;
}

// ---- criterion 7: structural invariants ------------------------------------

bool criterion_structural_invariants() {
    for (const Preset& p : preset_registry()) {
        const Quiver q = preset_quiver(p.name);
        if (!row_sum_law_holds(q)) return fail("row-sum law fails for preset " + p.name);
        if (is_trivial(det_character(p.rep)) && !in_out_balanced(q))
            return fail("degree balance fails for preset " + p.name);
    }
    for (const auto& orders : testsupport::abelian_groups_up_to(16)) {
        const FinAbGroup g(orders);
        for (const AbRep& v : rep_family(g)) {
            const Quiver q = mckay_quiver_abelian(v);
            if (!row_sum_law_holds(q))
                return fail("row-sum law fails for group " + g.spec_string() + ", rep " +
                            rep_spec_string(v));
            if (is_trivial(det_character(v)) && !in_out_balanced(q))
                return fail("degree balance fails for group " + g.spec_string() + ", rep " +
                            rep_spec_string(v));
            const Quiver r = returning_arrow_quiver(v);
            if (!row_sum_law_holds(r) || !in_out_balanced(r))
                return fail("invariants fail after augmentation for group " + g.spec_string());
        }
    }
    return true;
}

// ---- criterion 8: CLI determinism and JSON round-trip -----------------------

bool criterion_determinism() {
    for (const Preset& p : preset_registry()) {
        for (const char* format : {"dot", "json"}) {
            const std::string args = "preset " + p.name + " --format " + format;
            const RunResult first = run_cli(args);
            const RunResult second = run_cli(args);
            if (first.status != 0 || second.status != 0)
                return fail("CLI failed for " + args);
            if (first.output != second.output)
                return fail("consecutive runs differ for " + args);
            if (first.output.empty()) return fail("no output for " + args);
        }

        const RunResult json = run_cli("preset " + p.name + " --format json");
        const nlohmann::json doc = nlohmann::json::parse(json.output, nullptr, false);
        if (doc.is_discarded()) return fail("unparseable JSON for preset " + p.name);
        const Quiver q = preset_quiver(p.name);
        Matrix recovered(q.vertex_count(), std::vector<std::int64_t>(q.vertex_count(), 0));
        for (const auto& arrow : doc["arrows"])
            recovered[arrow["from"].get<std::size_t>()][arrow["to"].get<std::size_t>()] =
                arrow["mult"].get<std::int64_t>();
        if (recovered != q.mult)
            return fail("JSON round-trip lost the matrix for preset " + p.name);
        if (doc["vertices"].size() != q.vertex_count())
            return fail("JSON vertex count mismatch for preset " + p.name);
    }
    return true;
}

// ---- criterion 9: table validation -----------------------------------------

bool criterion_table_validation() {
    if (!validate_table(builtin_q8_table()).empty())
        return fail("built-in quaternion table must validate");
    if (!validate_table(builtin_klein_table()).empty())
        return fail("built-in Klein table must validate");
    for (int n = 1; n <= 12; ++n)
        if (!validate_table(builtin_cyclic_table(n)).empty())
            return fail("built-in cyclic table of order " + std::to_string(n) +
                        " must validate");

    CharacterTable perturbed = builtin_q8_table();
    perturbed.rows[3][4] = CycloInt::from_integer(4, -2);
    const auto issues = validate_table(perturbed);
    if (issues.empty()) return fail("perturbed table still validates");
    bool orthogonality_named = false;
    for (const TableIssue& issue : issues)
        if (issue.invariant == "row orthogonality") orthogonality_named = true;
    if (!orthogonality_named)
        return fail("perturbed table did not raise a row orthogonality issue");
    return true;
}

struct Criterion {
    int number;
    const char* name;
    bool (*run)();
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "preset-matrices", criterion_preset_matrices},
        {2, "hexagram-quiver", criterion_hexagrams},
        {3, "returning-arrow-identity", criterion_returning_arrows},
        {4, "regular-covering-suite", criterion_coverings},
        {5, "oracle-equivalence", criterion_oracle_equivalence},
        {6, "ade-anchors", criterion_ade_anchors},
        {7, "structural-invariants", criterion_structural_invariants},
        {8, "cli-determinism", criterion_determinism},
        {9, "table-validation", criterion_table_validation},
    };

    int failures = 0;
    for (const Criterion& criterion : criteria) {
        g_detail.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string thrown;
        try {
            ok = criterion.run();
        } catch (const std::exception& e) {
            thrown = e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        std::ostringstream line;
        line << "criterion " << criterion.number << " " << criterion.name << ": "
             << (ok ? "PASS" : "FAIL");
        line.setf(std::ios::fixed);
        line.precision(2);
        line << " (" << seconds << "s)";
        if (!ok) {
            line << " -- " << (thrown.empty() ? g_detail : "exception: " + thrown);
            ++failures;
        } else if (!g_detail.empty()) {
            line << " [" << g_detail << "]";
        }
        std::cout << line.str() << std::endl;
    }
    return failures;
}
