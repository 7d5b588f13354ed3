#include "mckay/quiver.hpp"

#include <stdexcept>

namespace mckay {

std::int64_t Quiver::out_degree(std::size_t i) const {
    std::int64_t d = 0;
    for (std::int64_t m : mult[i]) d += m;
    return d;
}

std::int64_t Quiver::in_degree(std::size_t j) const {
    std::int64_t d = 0;
    for (const auto& row : mult) d += row[j];
    return d;
}

std::int64_t Quiver::arrow_count() const {
    std::int64_t total = 0;
    for (const auto& row : mult)
        for (std::int64_t m : row) total += m;
    return total;
}

Quiver mckay_quiver_abelian(const AbRep& v) {
    const FinAbGroup& g = v.group;
    const std::vector<AbCharacter> chars = enumerate_characters(g);
    const std::size_t m = chars.size();
    const std::vector<int>& orders = g.orders();
    const std::size_t rank = orders.size();

    std::vector<std::size_t> stride(rank, 1);
    for (std::size_t p = rank; p-- > 1;)
        stride[p - 1] = stride[p] * static_cast<std::size_t>(orders[p]);

    Quiver q;
    q.vertices.reserve(m);
    for (std::size_t i = 0; i < m; ++i)
        q.vertices.push_back(QuiverVertex{i, exponent_label(chars[i].exponents),
                                          chars[i].exponents, 1});
    q.mult.assign(m, std::vector<std::int64_t>(m, 0));
    for (const AbCharacter& chi : v.summands) {
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t target = 0;
            for (std::size_t p = 0; p < rank; ++p)
                target += static_cast<std::size_t>(
                              (chi.exponents[p] + chars[i].exponents[p]) % orders[p]) *
                          stride[p];
            ++q.mult[i][target];
        }
    }

    const AbCharacter det = det_character(v);
    q.meta.group = g.spec_string();
    q.meta.rep = rep_spec_string(v);
    q.meta.ambient = is_trivial(det) ? "SL" : "GL";
    q.meta.construction = "mckay-abelian";
    q.meta.rep_dim = v.dim();
    q.meta.group_orders = g.orders();
    q.meta.det_exponents = det.exponents;
    return q;
}

Quiver quiver_add(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count())
        throw std::invalid_argument("quiver_add: vertex count mismatch");
    for (std::size_t i = 0; i < a.vertex_count(); ++i) {
        if (a.vertices[i].exponents != b.vertices[i].exponents ||
            a.vertices[i].dim != b.vertices[i].dim)
            throw std::invalid_argument("quiver_add: vertex mismatch at index " +
                                        std::to_string(i));
    }

    Quiver sum = a;
    for (std::size_t i = 0; i < sum.mult.size(); ++i)
        for (std::size_t j = 0; j < sum.mult.size(); ++j) sum.mult[i][j] += b.mult[i][j];

    sum.meta.rep = a.meta.rep.empty() ? b.meta.rep
                 : b.meta.rep.empty() ? a.meta.rep
                                      : a.meta.rep + ";" + b.meta.rep;
    sum.meta.rep_dim = a.meta.rep_dim + b.meta.rep_dim;
    // The sum is the quiver of the direct sum, whose determinant is the
    // product of the two determinants.
    if (a.meta.det_exponents && b.meta.det_exponents &&
        a.meta.group_orders == b.meta.group_orders && !a.meta.group_orders.empty()) {
        const FinAbGroup g(a.meta.group_orders);
        const AbCharacter det = char_mul(g, AbCharacter{*a.meta.det_exponents},
                                         AbCharacter{*b.meta.det_exponents});
        sum.meta.ambient = is_trivial(det) ? "SL" : "GL";
        sum.meta.det_exponents = det.exponents;
    } else {
        sum.meta.det_exponents.reset();
        sum.meta.ambient = (a.meta.ambient == "SL" && b.meta.ambient == "SL") ? "SL" : "GL";
    }
    return sum;
}

AbRep sl_augment(const AbRep& v) {
    AbRep out = v;
    out.summands.push_back(char_inv(v.group, det_character(v)));
    return out;
}

Quiver returning_arrow_quiver(const AbRep& v) {
    Quiver direct = mckay_quiver_abelian(sl_augment(v));

    // Independent route: the base quiver plus the quiver of the appended
    // inverse-determinant summand. The two must agree entrywise.
    const AbRep tail{v.group, {char_inv(v.group, det_character(v))}};
    const Quiver summed = quiver_add(mckay_quiver_abelian(v), mckay_quiver_abelian(tail));
    if (!quiver_isomorphic_as_labeled(direct, summed))
        throw std::logic_error("returning_arrow_quiver: direct and summed routes disagree");

    direct.meta.rep = rep_spec_string(v);
    direct.meta.construction = "returning-arrow";
    return direct;
}

bool quiver_isomorphic_as_labeled(const Quiver& a, const Quiver& b) {
    if (a.vertex_count() != b.vertex_count()) return false;
    for (std::size_t i = 0; i < a.vertex_count(); ++i) {
        if (a.vertices[i].exponents != b.vertices[i].exponents ||
            a.vertices[i].dim != b.vertices[i].dim)
            return false;
    }
    return a.mult == b.mult;
}

bool row_sum_law_holds(const Quiver& q) {
    for (std::size_t i = 0; i < q.vertex_count(); ++i) {
        std::int64_t weighted = 0;
        for (std::size_t j = 0; j < q.vertex_count(); ++j)
            weighted += q.mult[i][j] * q.vertices[j].dim;
        if (weighted != q.meta.rep_dim * q.vertices[i].dim) return false;
    }
    return true;
}

bool in_out_balanced(const Quiver& q) {
    for (std::size_t i = 0; i < q.vertex_count(); ++i)
        if (q.out_degree(i) != q.in_degree(i)) return false;
    return true;
}

} // namespace mckay
