// SPDX-License-Identifier: Apache-2.0

#ifndef TMK_TRAITS_HPP
#define TMK_TRAITS_HPP

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace tmk {

/// The Big Five domains. Emotional Stability is the reversed pole of
/// Neuroticism and is the name used throughout this toolkit.
///
/// The enumerator order (O, C, E, A, ES) is the canonical vector layout;
/// every 5-element array in the toolkit uses it.
enum class Trait : int {
    Openness = 0,
    Conscientiousness = 1,
    Extraversion = 2,
    Agreeableness = 3,
    EmotionalStability = 4,
};

inline constexpr std::size_t kTraitCount = 5;

inline constexpr std::array<Trait, kTraitCount> kAllTraits = {
    Trait::Openness,
    Trait::Conscientiousness,
    Trait::Extraversion,
    Trait::Agreeableness,
    Trait::EmotionalStability,
};

/// Expression level of a single trait.
enum class Level : int {
    Low = 0,
    Medium = 1,
    High = 2,
};

inline constexpr std::array<Level, 3> kAllLevels = {Level::Low, Level::Medium,
                                                    Level::High};

/// Ordinal code used for monotone target/score correlations: Low=1,
/// Medium=2, High=3.
int ordinal_code(Level level);

/// Agent-side trait setting on the 1..5 response scale: Low=1, Medium=3,
/// High=5 (the modal realized expression per level).
int ca_setting(Level level);

std::string_view trait_name(Trait trait);
std::string_view level_name(Level level);

/// Parses a canonical trait name ("Openness", ..., "EmotionalStability").
/// Case-insensitive; also accepts "Emotional Stability".
Trait trait_from_name(std::string_view name);

/// Parses "low" | "medium" | "high" (case-insensitive).
Level level_from_name(std::string_view name);

/// A full Big Five configuration: one expression level per trait.
struct TraitProfile {
    std::array<Level, kTraitCount> levels{};

    Level level(Trait trait) const {
        return levels[static_cast<std::size_t>(trait)];
    }
    void set(Trait trait, Level level) {
        levels[static_cast<std::size_t>(trait)] = level;
    }

    static TraitProfile uniform(Level level);

    /// Compact code such as "LMHML", one letter per trait in canonical
    /// order. Used in store keys and CLI flags.
    std::string code() const;
    static TraitProfile from_code(std::string_view code);

    bool operator==(const TraitProfile&) const = default;
};

/// Five real-valued trait scores in [1, 5], canonical order.
struct TraitScores {
    std::array<double, kTraitCount> values{};

    double value(Trait trait) const {
        return values[static_cast<std::size_t>(trait)];
    }
    void set(Trait trait, double v) {
        values[static_cast<std::size_t>(trait)] = v;
    }

    /// Throws std::domain_error if any score is non-finite or outside [1, 5].
    void validate() const;

    bool operator==(const TraitScores&) const = default;
};

/// Fixed score bands used to judge whether a steered trait landed on
/// target: Low [1.00, 2.33), Medium [2.33, 3.67], High (3.67, 5.00].
enum class Band : int {
    Low = 0,
    Medium = 1,
    High = 2,
};

std::string_view band_name(Band band);

/// Classifies a score into its band. The three intervals partition [1, 5];
/// boundaries are compared with exact literals (2.33 is Medium, 3.67 is
/// Medium). Throws std::domain_error outside [1, 5].
Band band_of(double score);

/// Band targeted by an expression level (Low->Low band, etc).
Band target_band(Level level);

/// Inclusive band interval [lo, hi] as used for miss-distance computations.
struct BandInterval {
    double lo;
    double hi;
};
BandInterval band_interval(Band band);

inline constexpr double kMaxAlignmentDistance = 80.0;  // sum of 4^2 over 5 traits

/// Personality alignment: 1 - ||P - C||_2 / sqrt(80), with C components
/// taken from ca_setting(level). 1 iff P equals C componentwise; bounded
/// in [0, 1].
double alignment_score(const TraitScores& p, const TraitProfile& c);

/// Per-trait absolute distance |P_i - C_i| in [0, 4], canonical order.
std::array<double, kTraitCount> trait_distances(const TraitScores& p,
                                                const TraitProfile& c);

}  // namespace tmk

#endif  // TMK_TRAITS_HPP
