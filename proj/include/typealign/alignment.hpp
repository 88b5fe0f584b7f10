#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "typealign/similarity.hpp"

namespace typealign {

struct AlignmentEntry {
  std::string type_a;
  std::string type_b;
  // Indexed by SimilarityMeasure; measures that were not computed stay 0.
  std::array<double, 3> scores{};

  friend bool operator==(const AlignmentEntry&, const AlignmentEntry&) = default;
};

struct AlignmentTable {
  // Sorted by (type_a, type_b).
  std::vector<AlignmentEntry> entries;
  std::vector<SimilarityMeasure> enabled_measures;

  bool has_measure(SimilarityMeasure m) const;
};

/// Scores every cross pair from the two profile lists under the requested
/// measures. Throws std::invalid_argument if either side is empty or no
/// measure is requested. `threads` only changes wall time, never the result.
AlignmentTable score_all_pairs(std::span<const TypeTokenProfile> side_a,
                               std::span<const TypeTokenProfile> side_b,
                               std::span<const SimilarityMeasure> measures,
                               unsigned threads = 1);

double entry_score(const AlignmentTable& table, const AlignmentEntry& entry,
                   SimilarityMeasure m);

/// Pairs whose score under `m` is at least `theta`, in table order.
/// theta must lie in [0,1] and `m` must be enabled in the table.
std::vector<AlignmentEntry> threshold_filter(const AlignmentTable& table,
                                             SimilarityMeasure m, double theta);

/// Top k candidates of `source` (a side-a type) under `m`, highest score
/// first, ties broken by type_b. Throws if the source never appears.
std::vector<AlignmentEntry> top_k(const AlignmentTable& table, SimilarityMeasure m,
                                  const std::string& source, std::size_t k);

void write_alignment_table(std::ostream& out, const AlignmentTable& table);
void write_alignment_table_file(const std::string& path, const AlignmentTable& table);
AlignmentTable read_alignment_table(std::istream& in, const std::string& origin);
AlignmentTable read_alignment_table_file(const std::string& path);

}  // namespace typealign
