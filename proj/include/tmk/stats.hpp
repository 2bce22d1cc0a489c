// SPDX-License-Identifier: Apache-2.0

#ifndef TMK_STATS_HPP
#define TMK_STATS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tmk::stats {

/// Average ranks (ties receive their midrank), 1-based.
std::vector<double> average_ranks(std::span<const double> values);

double mean(std::span<const double> values);

/// Unbiased sample variance (n-1 denominator).
double sample_variance(std::span<const double> values);

/// Pearson correlation. Throws std::domain_error on constant input.
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationResult {
    double rho;
    double p_value;
    std::size_t n;
};

/// Spearman rank correlation with average-rank ties; p from the
/// t-approximation on n-2 degrees of freedom, two-tailed.
CorrelationResult spearman(std::span<const double> x, std::span<const double> y);

struct GroupedSample {
    // label -> observations; at least 2 groups, each non-empty, for the
    // omnibus test.
    std::vector<std::pair<std::string, std::vector<double>>> groups;

    std::size_t total_n() const;
};

enum class EffectKind { RankEtaSquared, RFromZ };

struct TestResult {
    double statistic = 0.0;   // H for Kruskal-Wallis, min-convention U for Mann-Whitney
    double p_value = 1.0;
    double effect_size = 0.0;
    EffectKind effect_kind = EffectKind::RankEtaSquared;
    int df = 0;                       // Kruskal-Wallis: k-1
    std::vector<std::size_t> group_sizes;
    double z = 0.0;                   // Mann-Whitney only
    double u_first = 0.0;             // Mann-Whitney: U in the first sample's direction
};

/// Tie-corrected Kruskal-Wallis H with chi-squared upper-tail p on k-1 df
/// and rank eta-squared effect (H - k + 1) / (n - k). All values identical
/// yields H = 0, p = 1.
TestResult kruskal_wallis(const GroupedSample& sample);

/// Recomputes p and rank eta-squared from a published H statistic.
TestResult kruskal_wallis_from_h(double h, int k, int n);

/// Mann-Whitney U with normal approximation: tie-corrected variance,
/// continuity correction, two-tailed p, effect r = |Z| / sqrt(n1 + n2).
/// `statistic` carries the min-convention U; `u_first` the U of `a`.
TestResult mann_whitney(std::span<const double> a, std::span<const double> b);

/// Recomputes Z, p and r from a published U (no tie information).
TestResult mann_whitney_from_u(double u, std::size_t n1, std::size_t n2);

/// Bonferroni adjustment: p_adj = min(1, p * m). m must cover the family.
std::vector<double> bonferroni(std::span<const double> p_values, int m);

struct HierarchicalOlsResult {
    double beta_alignment;    // step-2 coefficient of the alignment column
    double p_beta;            // two-tailed t-test p for that coefficient
    double r2_step1;
    double r2_step2;
    double delta_r2;
    double p_delta;           // incremental F-test p on 1 and n-p df
};

/// Two-step regression: step 1 fits outcome on condition dummy codes
/// (reference level excluded), step 2 adds the alignment column. Throws
/// std::domain_error("singular design") when the design is collinear.
HierarchicalOlsResult hierarchical_ols(std::span<const double> outcome,
                                       std::span<const std::string> condition,
                                       std::span<const double> alignment,
                                       const std::string& reference = "low");

struct KMeansResult {
    std::vector<int> assignments;
    std::vector<std::vector<double>> centroids;
    double inertia = 0.0;
};

/// Lloyd's algorithm with seeded k-means++ initialization, 10 restarts,
/// best inertia kept. Deterministic for a fixed seed.
KMeansResult kmeans(const std::vector<std::vector<double>>& points, int k,
                    std::uint64_t seed);

/// Mean silhouette over all points (Euclidean). Points in singleton
/// clusters, or with zero cohesion and separation, score 0.
double mean_silhouette(const std::vector<std::vector<double>>& points,
                       const std::vector<int>& assignments, int k);

struct SelectKResult {
    int k_best = 0;
    std::vector<std::pair<int, double>> silhouettes;  // (k, mean silhouette)
    std::vector<std::pair<int, double>> inertias;     // (k, inertia) elbow curve
};

/// Runs kmeans for every k in [k_min, k_max]; k_best maximizes the mean
/// silhouette. The inertia curve is reported for elbow inspection.
SelectKResult select_k(const std::vector<std::vector<double>>& points, int k_min,
                       int k_max, std::uint64_t seed);

}  // namespace tmk::stats

#endif  // TMK_STATS_HPP
