#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/abelian.hpp"
#include "mckay/quiver.hpp"

namespace mckay {

/// Vertex labeling schemes. Each applies to one family of groups:
/// wuxing to C5, yinyang to C2, sixiang to C2^2, trigram to C2^3,
/// hexagram to C2^6; exponents applies everywhere.
enum class LabelScheme { Exponents, YinYang, Sixiang, Trigram, Hexagram, Wuxing };

const char* label_scheme_name(LabelScheme scheme);
std::optional<LabelScheme> label_scheme_from_name(std::string_view name);

/// Label for one character. For the two-power schemes, exponent bit p is the
/// yao in position p counted from the bottom, bit 1 drawn solid (yang) and
/// bit 0 broken (yin). Hexagram labels list the six yao glyphs bottom-up.
/// Throws std::invalid_argument when the scheme does not fit the group.
std::string label_character(const FinAbGroup& g, const AbCharacter& chi, LabelScheme scheme);

enum class Construction { Mckay, ReturningArrow };
enum class LayoutHint { Circle, DoubledCycle, Hypercube };

const char* construction_name(Construction c);
const char* layout_hint_name(LayoutHint h);

/// A named binding of group, representation, construction, labeling and
/// layout hint. Preset names are part of the CLI contract.
struct Preset {
    std::string name;
    FinAbGroup group;
    AbRep rep;
    Construction construction = Construction::Mckay;
    LabelScheme scheme = LabelScheme::Exponents;
    LayoutHint layout = LayoutHint::Circle;
};

/// The registry, in fixed order. Immutable static data.
const std::vector<Preset>& preset_registry();

/// Registry lookup; nullptr when the name is unknown.
const Preset* find_preset(std::string_view name);

/// Construct the quiver for a registered preset, labels applied per its
/// scheme. Throws std::invalid_argument for unknown names.
Quiver preset_quiver(std::string_view name);

/// Relabel every vertex that carries character exponents.
void apply_label_scheme(Quiver& q, const FinAbGroup& g, LabelScheme scheme);

} // namespace mckay
