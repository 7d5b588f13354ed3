#include "mckay/diagrams.hpp"

#include <array>
#include <stdexcept>

namespace mckay {

namespace {

bool is_two_power_of_rank(const FinAbGroup& g, int rank) {
    if (g.rank() != rank) return false;
    for (int o : g.orders())
        if (o != 2) return false;
    return true;
}

[[noreturn]] void scheme_mismatch(LabelScheme scheme, const FinAbGroup& g) {
    throw std::invalid_argument(std::string("label scheme '") + label_scheme_name(scheme) +
                                "' does not fit group " + g.spec_string());
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

AbRep single(const FinAbGroup& g, std::vector<int> exps) {
    return AbRep{g, {make_character(g, std::move(exps))}};
}

std::vector<Preset> build_registry() {
    const FinAbGroup c5 = FinAbGroup::cyclic(5);
    const FinAbGroup c1 = FinAbGroup::cyclic(1);
    const FinAbGroup c2 = FinAbGroup::cyclic(2);
    const FinAbGroup c2x2 = FinAbGroup::elementary_two(2);
    const FinAbGroup c2x3 = FinAbGroup::elementary_two(3);
    const FinAbGroup c2x6 = FinAbGroup::elementary_two(6);

    const AbRep s1_c2 = single(c2, {1});
    AbRep s1s1_c2 = s1_c2;
    s1s1_c2.summands.push_back(s1_c2.summands[0]);

    std::vector<Preset> presets;
    presets.push_back({"wuxing-sheng", c5, single(c5, {1}), Construction::Mckay,
                       LabelScheme::Wuxing, LayoutHint::Circle});
    presets.push_back({"wuxing-ke", c5, single(c5, {2}), Construction::Mckay,
                       LabelScheme::Wuxing, LayoutHint::Circle});
    presets.push_back({"wuxing-xie", c5, single(c5, {4}), Construction::Mckay,
                       LabelScheme::Wuxing, LayoutHint::Circle});
    presets.push_back({"wuxing-wu", c5, single(c5, {3}), Construction::Mckay,
                       LabelScheme::Wuxing, LayoutHint::Circle});
    AbRep shengke = single(c5, {1});
    shengke.summands.push_back(make_character(c5, {2}));
    presets.push_back({"wuxing-shengke", c5, shengke, Construction::Mckay,
                       LabelScheme::Wuxing, LayoutHint::Circle});
    presets.push_back({"taiji", c1, single(c1, {0}), Construction::Mckay,
                       LabelScheme::Exponents, LayoutHint::Circle});
    presets.push_back({"liangyi", c2, s1_c2, Construction::Mckay,
                       LabelScheme::YinYang, LayoutHint::Circle});
    presets.push_back({"liangyi-sl2", c2, s1_c2, Construction::ReturningArrow,
                       LabelScheme::YinYang, LayoutHint::DoubledCycle});
    presets.push_back({"taijitu", c2, s1s1_c2, Construction::ReturningArrow,
                       LabelScheme::YinYang, LayoutHint::DoubledCycle});
    presets.push_back({"sixiang", c2x2, coordinate_rep(c2x2), Construction::Mckay,
                       LabelScheme::Sixiang, LayoutHint::Hypercube});
    presets.push_back({"sixiang-sl3", c2x2, coordinate_rep(c2x2), Construction::ReturningArrow,
                       LabelScheme::Sixiang, LayoutHint::Hypercube});
    presets.push_back({"bagua", c2x3, coordinate_rep(c2x3), Construction::Mckay,
                       LabelScheme::Trigram, LayoutHint::Hypercube});
    presets.push_back({"hexagrams", c2x6, coordinate_rep(c2x6), Construction::Mckay,
                       LabelScheme::Hexagram, LayoutHint::Hypercube});
    return presets;
}

} // namespace

const char* label_scheme_name(LabelScheme scheme) {
    switch (scheme) {
        case LabelScheme::Exponents: return "exponents";
        case LabelScheme::YinYang: return "yinyang";
        case LabelScheme::Sixiang: return "sixiang";
        case LabelScheme::Trigram: return "trigram";
        case LabelScheme::Hexagram: return "hexagram";
        case LabelScheme::Wuxing: return "wuxing";
    }
    return "?";
}

std::optional<LabelScheme> label_scheme_from_name(std::string_view name) {
    for (LabelScheme s : {LabelScheme::Exponents, LabelScheme::YinYang, LabelScheme::Sixiang,
                          LabelScheme::Trigram, LabelScheme::Hexagram, LabelScheme::Wuxing})
        if (name == label_scheme_name(s)) return s;
    return std::nullopt;
}

const char* construction_name(Construction c) {
    return c == Construction::Mckay ? "mckay" : "returning-arrow";
}

const char* layout_hint_name(LayoutHint h) {
    switch (h) {
        case LayoutHint::Circle: return "circle";
        case LayoutHint::DoubledCycle: return "doubled_cycle";
        case LayoutHint::Hypercube: return "hypercube";
    }
    return "?";
}

std::string label_character(const FinAbGroup& g, const AbCharacter& chi, LabelScheme scheme) {
    if (static_cast<int>(chi.exponents.size()) != g.rank())
        throw std::invalid_argument("label_character: exponent arity does not match group rank");
    switch (scheme) {
        case LabelScheme::Exponents:
            return exponent_label(chi.exponents);
        case LabelScheme::Wuxing: {
            if (g.orders() != std::vector<int>{5}) scheme_mismatch(scheme, g);
            static const std::array<const char*, 5> phases = {"金", "水", "木", "火", "土"};
            return phases[static_cast<std::size_t>(chi.exponents[0])];
        }
        case LabelScheme::YinYang: {
            if (g.orders() != std::vector<int>{2}) scheme_mismatch(scheme, g);
            return chi.exponents[0] == 1 ? "阳 (—)" : "阴 (--)";
        }
        case LabelScheme::Sixiang: {
            if (!is_two_power_of_rank(g, 2)) scheme_mismatch(scheme, g);
            static const std::array<const char*, 4> names = {"太阴", "少阳", "少阴", "太阳"};
            return names[static_cast<std::size_t>(chi.exponents[0] * 2 + chi.exponents[1])];
        }
        case LabelScheme::Trigram: {
            if (!is_two_power_of_rank(g, 3)) scheme_mismatch(scheme, g);
            // Indexed by the bottom-up yao bits (e0, e1, e2).
            static const std::array<const char*, 8> names = {
                "坤 ☷",  // 000
                "艮 ☶",  // 001
                "坎 ☵",  // 010
                "巽 ☴",  // 011
                "震 ☳",  // 100
                "离 ☲",  // 101
                "兑 ☱",  // 110
                "乾 ☰",  // 111
            };
            const std::size_t key = static_cast<std::size_t>(
                chi.exponents[0] * 4 + chi.exponents[1] * 2 + chi.exponents[2]);
            return names[key];
        }
        case LabelScheme::Hexagram: {
            if (!is_two_power_of_rank(g, 6)) scheme_mismatch(scheme, g);
            std::string out;
            for (int e : chi.exponents) out += (e == 1 ? "⚊" : "⚋");
            return out;
        }
    }
    throw std::invalid_argument("label_character: unknown scheme");
}

const std::vector<Preset>& preset_registry() {
    static const std::vector<Preset> registry = build_registry();
    return registry;
}

const Preset* find_preset(std::string_view name) {
    for (const Preset& p : preset_registry())
        if (p.name == name) return &p;
    return nullptr;
}

Quiver preset_quiver(std::string_view name) {
    const Preset* p = find_preset(name);
    if (!p) throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    Quiver q = p->construction == Construction::ReturningArrow ? returning_arrow_quiver(p->rep)
                                                               : mckay_quiver_abelian(p->rep);
    apply_label_scheme(q, p->group, p->scheme);
    return q;
}

void apply_label_scheme(Quiver& q, const FinAbGroup& g, LabelScheme scheme) {
    for (QuiverVertex& v : q.vertices)
        if (v.exponents) v.label = label_character(g, AbCharacter{*v.exponents}, scheme);
}

} // namespace mckay
