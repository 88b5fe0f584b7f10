#include "typealign/similarity.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>

namespace typealign {

namespace {

using uint128 = unsigned __int128;

double clamp01(double v) {
  if (v < 0.0) return 0.0;
  if (v > 1.0) return 1.0;
  return v;
}

}  // namespace

std::string_view measure_name(SimilarityMeasure m) {
  switch (m) {
    case SimilarityMeasure::jaccard:
      return "jaccard";
    case SimilarityMeasure::g_jaccard:
      return "g_jaccard";
    case SimilarityMeasure::log_tf:
      return "log_tf";
  }
  return "unknown";
}

std::optional<SimilarityMeasure> measure_from_name(std::string_view name) {
  if (name == "jaccard") return SimilarityMeasure::jaccard;
  if (name == "g_jaccard") return SimilarityMeasure::g_jaccard;
  if (name == "log_tf") return SimilarityMeasure::log_tf;
  return std::nullopt;
}

double jaccard(const TypeTokenProfile& t1, const TypeTokenProfile& t2) {
  std::size_t i = 0, j = 0;
  std::uint64_t shared = 0;
  while (i < t1.tokens.size() && j < t2.tokens.size()) {
    int cmp = t1.tokens[i].token.compare(t2.tokens[j].token);
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      ++shared;
      ++i;
      ++j;
    }
  }
  std::uint64_t uni = t1.tokens.size() + t2.tokens.size() - shared;
  if (uni == 0) return 0.0;
  return static_cast<double>(shared) / static_cast<double>(uni);
}

double g_jaccard(const TypeTokenProfile& t1, const TypeTokenProfile& t2) {
  // Work with counts cross-multiplied by the opposite profile's total so the
  // whole computation stays in integers: min(c1/S1, c2/S2) compares the same
  // way as min(c1*S2, c2*S1), and the S1*S2 factor cancels in the ratio.
  uint128 s1 = 0, s2 = 0;
  for (const auto& tc : t1.tokens) s1 += tc.count;
  for (const auto& tc : t2.tokens) s2 += tc.count;
  uint128 num = 0, den = 0;
  std::size_t i = 0, j = 0;
  while (i < t1.tokens.size() || j < t2.tokens.size()) {
    int cmp;
    if (i == t1.tokens.size()) {
      cmp = 1;
    } else if (j == t2.tokens.size()) {
      cmp = -1;
    } else {
      cmp = t1.tokens[i].token.compare(t2.tokens[j].token);
    }
    if (cmp < 0) {
      den += t1.tokens[i].count * s2;
      ++i;
    } else if (cmp > 0) {
      den += t2.tokens[j].count * s1;
      ++j;
    } else {
      uint128 a = t1.tokens[i].count * s2;
      uint128 b = t2.tokens[j].count * s1;
      num += a < b ? a : b;
      den += a < b ? b : a;
      ++i;
      ++j;
    }
  }
  if (den == 0) return 0.0;
  return clamp01(static_cast<double>(static_cast<long double>(num) /
                                     static_cast<long double>(den)));
}

double normalized_dot(const TypeTokenProfile& t1, const TypeTokenProfile& t2) {
  uint128 dot = 0, n1 = 0, n2 = 0;
  std::size_t i = 0, j = 0;
  while (i < t1.tokens.size() && j < t2.tokens.size()) {
    int cmp = t1.tokens[i].token.compare(t2.tokens[j].token);
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      dot += static_cast<uint128>(t1.tokens[i].count) * t2.tokens[j].count;
      ++i;
      ++j;
    }
  }
  for (const auto& tc : t1.tokens) n1 += static_cast<uint128>(tc.count) * tc.count;
  for (const auto& tc : t2.tokens) n2 += static_cast<uint128>(tc.count) * tc.count;
  if (n1 == 0 || n2 == 0) return 0.0;
  // Equal norms and a dot product matching them means the vectors coincide;
  // answer 1 exactly instead of round-tripping through sqrt.
  if (dot == n1 && dot == n2) return 1.0;
  long double d = static_cast<long double>(dot) /
                  sqrtl(static_cast<long double>(n1) * static_cast<long double>(n2));
  return clamp01(static_cast<double>(d));
}

double log_tf(const TypeTokenProfile& t1, const TypeTokenProfile& t2) {
  return std::log1p(normalized_dot(t1, t2)) / std::numbers::ln2;
}

double score(SimilarityMeasure m, const TypeTokenProfile& t1, const TypeTokenProfile& t2) {
  switch (m) {
    case SimilarityMeasure::jaccard:
      return jaccard(t1, t2);
    case SimilarityMeasure::g_jaccard:
      return g_jaccard(t1, t2);
    case SimilarityMeasure::log_tf:
      return log_tf(t1, t2);
  }
  return 0.0;
}

}  // namespace typealign
