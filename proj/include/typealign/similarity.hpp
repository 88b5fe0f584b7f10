#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "typealign/profile.hpp"

namespace typealign {

enum class SimilarityMeasure : std::uint8_t { jaccard = 0, g_jaccard = 1, log_tf = 2 };

inline constexpr std::array<SimilarityMeasure, 3> kAllMeasures{
    SimilarityMeasure::jaccard, SimilarityMeasure::g_jaccard, SimilarityMeasure::log_tf};

std::string_view measure_name(SimilarityMeasure m);
std::optional<SimilarityMeasure> measure_from_name(std::string_view name);

/// Set Jaccard over the token keys; counts are ignored entirely.
double jaccard(const TypeTokenProfile& t1, const TypeTokenProfile& t2);

/// Generalized Jaccard: counts are L1-normalized per profile, then
/// sum(min)/sum(max) over the token union, with tokens missing from one side
/// contributing zero.
double g_jaccard(const TypeTokenProfile& t1, const TypeTokenProfile& t2);

/// Dot product of the two L2-normalized count vectors over the token union
/// (missing tokens contribute zero); always in [0,1]. Exposed separately so
/// rank order can be checked against the log-mapped score.
double normalized_dot(const TypeTokenProfile& t1, const TypeTokenProfile& t2);

/// ln(1 + normalized_dot) / ln 2 — a strictly monotone map of the dot
/// product onto [0,1].
double log_tf(const TypeTokenProfile& t1, const TypeTokenProfile& t2);

double score(SimilarityMeasure m, const TypeTokenProfile& t1, const TypeTokenProfile& t2);

}  // namespace typealign
