#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "typealign/alignment.hpp"
#include "typealign/property_table.hpp"

namespace typealign {

using TypePair = std::pair<std::string, std::string>;
using TypePairVec = std::vector<TypePair>;

double harmonic_mean(double p, double s);

// ---- Ground truth 1: type pairs justified by at least one linked instance pair.

struct TypePairGroundTruth {
  TypePairVec pairs;  // sorted, unique
};

struct Gt1BuildResult {
  TypePairGroundTruth gt;
  std::uint64_t links_total = 0;
  // Links whose endpoints are absent from the records or carry no types;
  // they cannot justify any pair.
  std::uint64_t links_skipped = 0;
};

Gt1BuildResult build_gt1(std::span<const SameAsLink> links,
                         std::span<const InstanceRecord> records_a,
                         std::span<const InstanceRecord> records_b);

struct PrecisionRecallPoint {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  std::uint64_t true_positives = 0;
  std::uint64_t retrieved_count = 0;
  std::uint64_t relevant_count = 0;
};

/// Retrieved pairs are treated as a set (duplicates collapse). Throws
/// std::invalid_argument when the ground truth is empty.
PrecisionRecallPoint eval_gt1(const TypePairVec& retrieved, const TypePairGroundTruth& gt);

// ---- Ground truth 2: blocking metrics over linked instances.

/// Instances are interned as dense ids per KG; extents hold sorted id lists.
struct InstanceMatchGroundTruth {
  std::uint64_t universe_a = 0;  // |I_A|, every KG-A instance
  std::uint64_t universe_b = 0;
  std::vector<std::string> type_names_a;  // sorted
  std::vector<std::string> type_names_b;
  std::vector<std::vector<std::uint32_t>> extent_a;  // by type id, sorted instance ids
  std::vector<std::vector<std::uint32_t>> extent_b;
  std::vector<std::vector<std::uint32_t>> instance_types_a;  // by instance id, sorted
  std::vector<std::vector<std::uint32_t>> instance_types_b;
  // Links with both endpoints present in the records, as id pairs, sorted unique.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> duplicates;
  // |I_G|: every distinct link, including ones whose endpoints never resolve.
  std::uint64_t duplicates_total = 0;

  static InstanceMatchGroundTruth build(std::span<const SameAsLink> links,
                                        std::span<const InstanceRecord> records_a,
                                        std::span<const InstanceRecord> records_b);
};

enum class RrMode { exact, lower_bound };

struct BlockingMetrics {
  double pair_completeness = 0.0;
  double reduction_ratio = 0.0;
  double f_measure = 0.0;
  std::uint64_t covered_links = 0;
  // Exact mode: |I_all| after deduplication. Lower-bound mode: the sum of
  // per-pair extent products, which may exceed the universe.
  std::uint64_t candidate_count = 0;
};

/// Throws std::invalid_argument when |I_G| or the pair universe is zero.
BlockingMetrics eval_gt2(const TypePairVec& retrieved, const InstanceMatchGroundTruth& gt,
                         RrMode mode);

/// Fraction of I_G whose endpoints both resolve and carry at least one type;
/// no alignment can cover more.
double pc_ceiling(const InstanceMatchGroundTruth& gt);

// ---- Ground truth 3: manually accepted alignments, rank coverage.

struct ManualAlignmentGroundTruth {
  std::map<std::string, std::vector<std::string>> accepted;  // targets sorted unique
  std::vector<std::string> sampled_sources;                  // unique, file order
};

struct CoverageReport {
  double mapping_coverage = 0.0;
  std::vector<std::pair<std::size_t, double>> top_k_coverage;  // follows k_list order
  std::uint64_t covered_sources = 0;
  std::uint64_t sampled_count = 0;
  bool no_covered_sources = false;
};

/// A source counts as covered when any accepted target appears within the
/// first `retrieval_depth` candidates; top-k coverage is measured over the
/// covered sources only, each source counting at most once.
CoverageReport eval_gt3(const AlignmentTable& table, SimilarityMeasure measure,
                        const ManualAlignmentGroundTruth& gt,
                        std::span<const std::size_t> k_list,
                        std::size_t retrieval_depth = 10);

// ---- Threshold sweeps.

struct MetricPoint {
  double theta = 0.0;
  double primary_metric = 0.0;
  double secondary_metric = 0.0;
  double f_measure = 0.0;
};

/// Receives the pairs kept at one threshold, returns the metric triple;
/// sweep() fills in theta.
using PairEvaluator = std::function<MetricPoint(const TypePairVec&)>;

struct SweepResult {
  std::vector<MetricPoint> points;
  std::size_t best_index = 0;  // argmax f, earliest on ties
};

SweepResult sweep(const AlignmentTable& table, SimilarityMeasure measure,
                  const PairEvaluator& evaluator, std::span<const double> thetas);

std::vector<double> default_theta_grid();  // 0.00, 0.01, ..., 1.00

// The ground truth must outlive the returned evaluator.
PairEvaluator make_gt1_evaluator(const TypePairGroundTruth& gt);
PairEvaluator make_gt2_evaluator(const InstanceMatchGroundTruth& gt, RrMode mode);

// ---- File formats.

void write_type_pairs(std::ostream& out, const TypePairVec& pairs);
void write_type_pairs_file(const std::string& path, const TypePairVec& pairs);
TypePairVec read_type_pairs(std::istream& in, const std::string& origin);
TypePairVec read_type_pairs_file(const std::string& path);

/// accepted: TSV source/target pairs under a header; sources: one IRI per line.
ManualAlignmentGroundTruth read_manual_gt(const std::string& accepted_path,
                                          const std::string& sources_path);
void write_manual_gt(const std::string& accepted_path, const std::string& sources_path,
                     const ManualAlignmentGroundTruth& gt);

void write_sweep_csv(std::ostream& out, const SweepResult& result);
void write_sweep_csv_file(const std::string& path, const SweepResult& result);
void write_coverage_csv(std::ostream& out, const CoverageReport& report);
void write_coverage_csv_file(const std::string& path, const CoverageReport& report);

}  // namespace typealign
