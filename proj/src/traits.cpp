// SPDX-License-Identifier: Apache-2.0

#include "tmk/traits.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace tmk {

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return out;
}

}  // namespace

int ordinal_code(Level level) {
    return static_cast<int>(level) + 1;
}

int ca_setting(Level level) {
    switch (level) {
        case Level::Low: return 1;
        case Level::Medium: return 3;
        case Level::High: return 5;
    }
    throw std::logic_error("invalid Level");
}

std::string_view trait_name(Trait trait) {
    switch (trait) {
        case Trait::Openness: return "Openness";
        case Trait::Conscientiousness: return "Conscientiousness";
        case Trait::Extraversion: return "Extraversion";
        case Trait::Agreeableness: return "Agreeableness";
        case Trait::EmotionalStability: return "EmotionalStability";
    }
    throw std::logic_error("invalid Trait");
}

std::string_view level_name(Level level) {
    switch (level) {
        case Level::Low: return "low";
        case Level::Medium: return "medium";
        case Level::High: return "high";
    }
    throw std::logic_error("invalid Level");
}

Trait trait_from_name(std::string_view name) {
    std::string n = lower(name);
    n.erase(std::remove_if(n.begin(), n.end(),
                           [](unsigned char c) { return c == ' ' || c == '_' || c == '-'; }),
            n.end());
    if (n == "openness" || n == "o") return Trait::Openness;
    if (n == "conscientiousness" || n == "c") return Trait::Conscientiousness;
    if (n == "extraversion" || n == "e") return Trait::Extraversion;
    if (n == "agreeableness" || n == "a") return Trait::Agreeableness;
    if (n == "emotionalstability" || n == "es") return Trait::EmotionalStability;
    throw std::invalid_argument("unknown trait name: " + std::string(name));
}

Level level_from_name(std::string_view name) {
    std::string n = lower(name);
    if (n == "low" || n == "l") return Level::Low;
    if (n == "medium" || n == "m") return Level::Medium;
    if (n == "high" || n == "h") return Level::High;
    throw std::invalid_argument("unknown level name: " + std::string(name));
}

TraitProfile TraitProfile::uniform(Level level) {
    TraitProfile p;
    p.levels.fill(level);
    return p;
}

std::string TraitProfile::code() const {
    static constexpr char kLetters[3] = {'L', 'M', 'H'};
    std::string out(kTraitCount, '?');
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        out[i] = kLetters[static_cast<int>(levels[i])];
    }
    return out;
}

TraitProfile TraitProfile::from_code(std::string_view code) {
    if (code.size() != kTraitCount) {
        throw std::invalid_argument("profile code must have exactly 5 letters: " +
                                    std::string(code));
    }
    TraitProfile p;
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        switch (std::toupper(static_cast<unsigned char>(code[i]))) {
            case 'L': p.levels[i] = Level::Low; break;
            case 'M': p.levels[i] = Level::Medium; break;
            case 'H': p.levels[i] = Level::High; break;
            default:
                throw std::invalid_argument("profile code letters must be L, M or H: " +
                                            std::string(code));
        }
    }
    return p;
}

void TraitScores::validate() const {
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        const double v = values[i];
        if (!std::isfinite(v) || v < 1.0 || v > 5.0) {
            throw std::domain_error("trait score out of [1,5] for " +
                                    std::string(trait_name(kAllTraits[i])));
        }
    }
}

std::string_view band_name(Band band) {
    switch (band) {
        case Band::Low: return "low";
        case Band::Medium: return "medium";
        case Band::High: return "high";
    }
    throw std::logic_error("invalid Band");
}

Band band_of(double score) {
    if (!std::isfinite(score) || score < 1.0 || score > 5.0) {
        throw std::domain_error("band_of: score outside [1,5]");
    }
    // Boundary membership is fixed: Low [1.00, 2.33), Medium [2.33, 3.67],
    // High (3.67, 5.00]. Exact literal comparisons, no epsilon.
    if (score < 2.33) return Band::Low;
    if (score <= 3.67) return Band::Medium;
    return Band::High;
}

Band target_band(Level level) {
    return static_cast<Band>(static_cast<int>(level));
}

BandInterval band_interval(Band band) {
    switch (band) {
        case Band::Low: return {1.00, 2.33};
        case Band::Medium: return {2.33, 3.67};
        case Band::High: return {3.67, 5.00};
    }
    throw std::logic_error("invalid Band");
}

double alignment_score(const TraitScores& p, const TraitProfile& c) {
    p.validate();
    double sum_sq = 0.0;
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        const double d = p.values[i] - static_cast<double>(ca_setting(c.levels[i]));
        sum_sq += d * d;
    }
    return 1.0 - std::sqrt(sum_sq) / std::sqrt(kMaxAlignmentDistance);
}

std::array<double, kTraitCount> trait_distances(const TraitScores& p,
                                                const TraitProfile& c) {
    p.validate();
    std::array<double, kTraitCount> out{};
    for (std::size_t i = 0; i < kTraitCount; ++i) {
        out[i] = std::fabs(p.values[i] - static_cast<double>(ca_setting(c.levels[i])));
    }
    return out;
}

}  // namespace tmk
