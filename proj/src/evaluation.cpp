#include "typealign/evaluation.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "typealign/util.hpp"

namespace typealign {

namespace {

using uint128 = unsigned __int128;

std::unordered_map<std::string_view, std::size_t> index_by_subject(
    std::span<const InstanceRecord> records) {
  std::unordered_map<std::string_view, std::size_t> idx;
  idx.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) idx.emplace(records[i].subject, i);
  return idx;
}

TypePairVec sorted_unique(TypePairVec pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::vector<SameAsLink> dedupe_links(std::span<const SameAsLink> links) {
  std::vector<SameAsLink> uniq(links.begin(), links.end());
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  return uniq;
}

std::uint64_t pair_key(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

// id of `name` in a sorted intern table, or npos
std::size_t type_id(const std::vector<std::string>& names, const std::string& name) {
  auto it = std::lower_bound(names.begin(), names.end(), name);
  if (it == names.end() || *it != name) return std::string::npos;
  return static_cast<std::size_t>(it - names.begin());
}

std::uint64_t union_size(const std::vector<std::uint32_t>& type_ids,
                         const std::vector<std::vector<std::uint32_t>>& extents) {
  std::size_t total = 0;
  for (std::uint32_t t : type_ids) total += extents[t].size();
  std::vector<std::uint32_t> all;
  all.reserve(total);
  for (std::uint32_t t : type_ids) {
    all.insert(all.end(), extents[t].begin(), extents[t].end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all.size();
}

void intern_side(std::span<const InstanceRecord> records,
                 std::vector<std::string>& type_names,
                 std::vector<std::vector<std::uint32_t>>& extents,
                 std::vector<std::vector<std::uint32_t>>& instance_types) {
  if (records.size() > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("too many instances to intern");
  }
  for (const InstanceRecord& r : records) {
    type_names.insert(type_names.end(), r.types.begin(), r.types.end());
  }
  std::sort(type_names.begin(), type_names.end());
  type_names.erase(std::unique(type_names.begin(), type_names.end()), type_names.end());

  extents.assign(type_names.size(), {});
  instance_types.assign(records.size(), {});
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (const std::string& t : records[i].types) {
      auto tid = static_cast<std::uint32_t>(type_id(type_names, t));
      instance_types[i].push_back(tid);
      extents[tid].push_back(static_cast<std::uint32_t>(i));
    }
  }
}

}  // namespace

double harmonic_mean(double p, double s) {
  if (p + s <= 0.0) return 0.0;
  return 2.0 * p * s / (p + s);
}

Gt1BuildResult build_gt1(std::span<const SameAsLink> links,
                         std::span<const InstanceRecord> records_a,
                         std::span<const InstanceRecord> records_b) {
  auto ia = index_by_subject(records_a);
  auto ib = index_by_subject(records_b);
  std::vector<SameAsLink> uniq = dedupe_links(links);

  Gt1BuildResult res;
  res.links_total = uniq.size();
  for (const SameAsLink& link : uniq) {
    auto la = ia.find(link.left);
    auto lb = ib.find(link.right);
    if (la == ia.end() || lb == ib.end()) {
      ++res.links_skipped;
      continue;
    }
    const auto& ta = records_a[la->second].types;
    const auto& tb = records_b[lb->second].types;
    if (ta.empty() || tb.empty()) {
      ++res.links_skipped;
      continue;
    }
    for (const std::string& a : ta) {
      for (const std::string& b : tb) res.gt.pairs.emplace_back(a, b);
    }
  }
  res.gt.pairs = sorted_unique(std::move(res.gt.pairs));
  return res;
}

PrecisionRecallPoint eval_gt1(const TypePairVec& retrieved, const TypePairGroundTruth& gt) {
  TypePairVec relevant = sorted_unique(gt.pairs);
  if (relevant.empty()) throw std::invalid_argument("empty type-pair ground truth");
  TypePairVec got = sorted_unique(retrieved);

  PrecisionRecallPoint p;
  p.retrieved_count = got.size();
  p.relevant_count = relevant.size();
  for (const TypePair& pair : got) {
    if (std::binary_search(relevant.begin(), relevant.end(), pair)) ++p.true_positives;
  }
  p.precision = got.empty() ? 0.0
                            : static_cast<double>(p.true_positives) /
                                  static_cast<double>(got.size());
  p.recall = static_cast<double>(p.true_positives) / static_cast<double>(relevant.size());
  p.f_measure = harmonic_mean(p.precision, p.recall);
  return p;
}

InstanceMatchGroundTruth InstanceMatchGroundTruth::build(
    std::span<const SameAsLink> links, std::span<const InstanceRecord> records_a,
    std::span<const InstanceRecord> records_b) {
  InstanceMatchGroundTruth gt;
  gt.universe_a = records_a.size();
  gt.universe_b = records_b.size();
  intern_side(records_a, gt.type_names_a, gt.extent_a, gt.instance_types_a);
  intern_side(records_b, gt.type_names_b, gt.extent_b, gt.instance_types_b);

  auto ia = index_by_subject(records_a);
  auto ib = index_by_subject(records_b);
  std::vector<SameAsLink> uniq = dedupe_links(links);
  gt.duplicates_total = uniq.size();
  for (const SameAsLink& link : uniq) {
    auto la = ia.find(link.left);
    auto lb = ib.find(link.right);
    if (la == ia.end() || lb == ib.end()) continue;
    gt.duplicates.emplace_back(static_cast<std::uint32_t>(la->second),
                               static_cast<std::uint32_t>(lb->second));
  }
  std::sort(gt.duplicates.begin(), gt.duplicates.end());
  gt.duplicates.erase(std::unique(gt.duplicates.begin(), gt.duplicates.end()),
                      gt.duplicates.end());
  return gt;
}

BlockingMetrics eval_gt2(const TypePairVec& retrieved, const InstanceMatchGroundTruth& gt,
                         RrMode mode) {
  if (gt.duplicates_total == 0) {
    throw std::invalid_argument("instance-match ground truth holds no links");
  }
  uint128 omega = static_cast<uint128>(gt.universe_a) * gt.universe_b;
  if (omega == 0) throw std::invalid_argument("empty instance universe");

  // Resolve retrieved pairs to type ids; pairs naming unknown types have empty
  // extents and are dropped.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> rpairs;
  for (const auto& [a, b] : retrieved) {
    std::size_t ta = type_id(gt.type_names_a, a);
    std::size_t tb = type_id(gt.type_names_b, b);
    if (ta == std::string::npos || tb == std::string::npos) continue;
    rpairs.emplace_back(static_cast<std::uint32_t>(ta), static_cast<std::uint32_t>(tb));
  }
  std::sort(rpairs.begin(), rpairs.end());
  rpairs.erase(std::unique(rpairs.begin(), rpairs.end()), rpairs.end());

  BlockingMetrics m;

  std::unordered_set<std::uint64_t> rset;
  rset.reserve(rpairs.size() * 2);
  for (const auto& [ta, tb] : rpairs) rset.insert(pair_key(ta, tb));
  for (const auto& [a, b] : gt.duplicates) {
    bool covered = false;
    for (std::uint32_t ta : gt.instance_types_a[a]) {
      for (std::uint32_t tb : gt.instance_types_b[b]) {
        if (rset.contains(pair_key(ta, tb))) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (covered) ++m.covered_links;
  }
  m.pair_completeness =
      static_cast<double>(m.covered_links) / static_cast<double>(gt.duplicates_total);

  if (mode == RrMode::lower_bound) {
    uint128 total = 0;
    for (const auto& [ta, tb] : rpairs) {
      total += static_cast<uint128>(gt.extent_a[ta].size()) * gt.extent_b[tb].size();
    }
    m.candidate_count = total > std::numeric_limits<std::uint64_t>::max()
                            ? std::numeric_limits<std::uint64_t>::max()
                            : static_cast<std::uint64_t>(total);
    long double rr = 1.0L - static_cast<long double>(total) / static_cast<long double>(omega);
    m.reduction_ratio = rr < 0.0L ? 0.0 : static_cast<double>(rr);
  } else {
    // |I_all| without materializing pairs: find each KG-A instance's set of
    // matched B types, group instances by that signature, and charge each
    // group the size of its B-extent union once.
    std::vector<std::vector<std::uint32_t>> matched(gt.universe_a);
    for (const auto& [ta, tb] : rpairs) {
      for (std::uint32_t a : gt.extent_a[ta]) matched[a].push_back(tb);
    }
    std::map<std::vector<std::uint32_t>, std::uint64_t> groups;
    for (auto& sig : matched) {
      if (sig.empty()) continue;
      std::sort(sig.begin(), sig.end());
      sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
      ++groups[sig];
    }
    std::uint64_t i_all = 0;
    for (const auto& [sig, n] : groups) i_all += n * union_size(sig, gt.extent_b);
    m.candidate_count = i_all;
    m.reduction_ratio = static_cast<double>(
        1.0L - static_cast<long double>(i_all) / static_cast<long double>(omega));
  }

  m.f_measure = harmonic_mean(m.pair_completeness, m.reduction_ratio);
  return m;
}

double pc_ceiling(const InstanceMatchGroundTruth& gt) {
  if (gt.duplicates_total == 0) {
    throw std::invalid_argument("instance-match ground truth holds no links");
  }
  std::uint64_t typed = 0;
  for (const auto& [a, b] : gt.duplicates) {
    if (!gt.instance_types_a[a].empty() && !gt.instance_types_b[b].empty()) ++typed;
  }
  return static_cast<double>(typed) / static_cast<double>(gt.duplicates_total);
}

CoverageReport eval_gt3(const AlignmentTable& table, SimilarityMeasure measure,
                        const ManualAlignmentGroundTruth& gt,
                        std::span<const std::size_t> k_list,
                        std::size_t retrieval_depth) {
  if (gt.sampled_sources.empty()) throw std::invalid_argument("no sampled sources");
  if (retrieval_depth == 0) throw std::invalid_argument("retrieval depth must be positive");

  CoverageReport rep;
  rep.sampled_count = gt.sampled_sources.size();
  std::vector<std::size_t> best_ranks;
  for (const std::string& source : gt.sampled_sources) {
    std::vector<AlignmentEntry> ranked = top_k(table, measure, source, retrieval_depth);
    auto it = gt.accepted.find(source);
    if (it == gt.accepted.end()) continue;
    const std::vector<std::string>& accepted = it->second;
    for (std::size_t r = 0; r < ranked.size(); ++r) {
      if (std::binary_search(accepted.begin(), accepted.end(), ranked[r].type_b)) {
        best_ranks.push_back(r + 1);
        ++rep.covered_sources;
        break;
      }
    }
  }
  rep.mapping_coverage = static_cast<double>(rep.covered_sources) /
                         static_cast<double>(rep.sampled_count);
  rep.no_covered_sources = rep.covered_sources == 0;
  for (std::size_t k : k_list) {
    if (rep.no_covered_sources) {
      rep.top_k_coverage.emplace_back(k, 0.0);
      continue;
    }
    std::uint64_t hits = 0;
    for (std::size_t rank : best_ranks) {
      if (rank <= k) ++hits;
    }
    rep.top_k_coverage.emplace_back(
        k, static_cast<double>(hits) / static_cast<double>(rep.covered_sources));
  }
  return rep;
}

SweepResult sweep(const AlignmentTable& table, SimilarityMeasure measure,
                  const PairEvaluator& evaluator, std::span<const double> thetas) {
  if (thetas.empty()) throw std::invalid_argument("no thresholds to sweep");
  SweepResult res;
  res.points.reserve(thetas.size());
  for (double theta : thetas) {
    std::vector<AlignmentEntry> kept = threshold_filter(table, measure, theta);
    TypePairVec pairs;
    pairs.reserve(kept.size());
    for (AlignmentEntry& e : kept) {
      pairs.emplace_back(std::move(e.type_a), std::move(e.type_b));
    }
    MetricPoint point = evaluator(pairs);
    point.theta = theta;
    res.points.push_back(point);
  }
  for (std::size_t i = 1; i < res.points.size(); ++i) {
    if (res.points[i].f_measure > res.points[res.best_index].f_measure) res.best_index = i;
  }
  return res;
}

std::vector<double> default_theta_grid() {
  std::vector<double> grid;
  grid.reserve(101);
  for (int i = 0; i <= 100; ++i) grid.push_back(static_cast<double>(i) / 100.0);
  return grid;
}

PairEvaluator make_gt1_evaluator(const TypePairGroundTruth& gt) {
  return [&gt](const TypePairVec& retrieved) {
    PrecisionRecallPoint p = eval_gt1(retrieved, gt);
    return MetricPoint{.theta = 0.0,
                       .primary_metric = p.precision,
                       .secondary_metric = p.recall,
                       .f_measure = p.f_measure};
  };
}

PairEvaluator make_gt2_evaluator(const InstanceMatchGroundTruth& gt, RrMode mode) {
  return [&gt, mode](const TypePairVec& retrieved) {
    BlockingMetrics m = eval_gt2(retrieved, gt, mode);
    return MetricPoint{.theta = 0.0,
                       .primary_metric = m.pair_completeness,
                       .secondary_metric = m.reduction_ratio,
                       .f_measure = m.f_measure};
  };
}

namespace {

constexpr std::string_view kPairHeader = "type_a\ttype_b";
constexpr std::string_view kManualHeader = "source_type\ttarget_type";

}  // namespace

void write_type_pairs(std::ostream& out, const TypePairVec& pairs) {
  TypePairVec canon = sorted_unique(pairs);
  out << kPairHeader << '\n';
  for (const auto& [a, b] : canon) out << a << '\t' << b << '\n';
}

void write_type_pairs_file(const std::string& path, const TypePairVec& pairs) {
  std::ofstream out = open_output(path);
  write_type_pairs(out, pairs);
  if (!out) throw DataError("failed writing " + path);
}

TypePairVec read_type_pairs(std::istream& in, const std::string& origin) {
  TypePairVec pairs;
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!saw_header) {
      if (line != kPairHeader) {
        throw DataError(origin + ":1: expected header '" + std::string(kPairHeader) + "'");
      }
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> cols = split(line, '\t');
    if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
      throw DataError(origin + ":" + std::to_string(line_no) +
                      ": expected two tab-separated types");
    }
    pairs.emplace_back(std::string(cols[0]), std::string(cols[1]));
  }
  if (!saw_header) throw DataError(origin + ": missing header");
  return sorted_unique(std::move(pairs));
}

TypePairVec read_type_pairs_file(const std::string& path) {
  require_file(path);
  std::ifstream in = open_input(path);
  return read_type_pairs(in, path);
}

ManualAlignmentGroundTruth read_manual_gt(const std::string& accepted_path,
                                          const std::string& sources_path) {
  require_file(accepted_path);
  require_file(sources_path);
  ManualAlignmentGroundTruth gt;

  {
    std::ifstream in = open_input(accepted_path);
    std::string line;
    std::size_t line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!saw_header) {
        if (line != kManualHeader) {
          throw DataError(accepted_path + ":1: expected header '" +
                          std::string(kManualHeader) + "'");
        }
        saw_header = true;
        continue;
      }
      if (line.empty()) continue;
      std::vector<std::string_view> cols = split(line, '\t');
      if (cols.size() != 2 || cols[0].empty() || cols[1].empty()) {
        throw DataError(accepted_path + ":" + std::to_string(line_no) +
                        ": expected two tab-separated types");
      }
      gt.accepted[std::string(cols[0])].emplace_back(cols[1]);
    }
    if (!saw_header) throw DataError(accepted_path + ": missing header");
    for (auto& [src, targets] : gt.accepted) {
      std::sort(targets.begin(), targets.end());
      targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    }
  }

  {
    std::ifstream in = open_input(sources_path);
    std::string line;
    std::size_t line_no = 0;
    std::unordered_set<std::string> seen;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string_view source = trim(line);
      if (source.empty()) continue;
      if (!seen.insert(std::string(source)).second) {
        throw DataError(sources_path + ":" + std::to_string(line_no) +
                        ": duplicate sampled source");
      }
      gt.sampled_sources.emplace_back(source);
    }
  }

  for (const auto& [src, targets] : gt.accepted) {
    if (std::find(gt.sampled_sources.begin(), gt.sampled_sources.end(), src) ==
        gt.sampled_sources.end()) {
      throw DataError("accepted source missing from sampled list: " + src);
    }
  }
  return gt;
}

void write_manual_gt(const std::string& accepted_path, const std::string& sources_path,
                     const ManualAlignmentGroundTruth& gt) {
  {
    std::ofstream out = open_output(accepted_path);
    out << kManualHeader << '\n';
    for (const auto& [src, targets] : gt.accepted) {
      for (const std::string& t : targets) out << src << '\t' << t << '\n';
    }
    if (!out) throw DataError("failed writing " + accepted_path);
  }
  {
    std::ofstream out = open_output(sources_path);
    for (const std::string& s : gt.sampled_sources) out << s << '\n';
    if (!out) throw DataError("failed writing " + sources_path);
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& result) {
  out << "theta,primary,secondary,f\n";
  for (const MetricPoint& p : result.points) {
    out << format_fixed(p.theta) << ',' << format_fixed(p.primary_metric) << ','
        << format_fixed(p.secondary_metric) << ',' << format_fixed(p.f_measure) << '\n';
  }
}

void write_sweep_csv_file(const std::string& path, const SweepResult& result) {
  std::ofstream out = open_output(path);
  write_sweep_csv(out, result);
  if (!out) throw DataError("failed writing " + path);
}

void write_coverage_csv(std::ostream& out, const CoverageReport& report) {
  out << "mapping_coverage";
  for (const auto& [k, cov] : report.top_k_coverage) out << ",top" << k;
  out << '\n';
  out << format_fixed(report.mapping_coverage);
  for (const auto& [k, cov] : report.top_k_coverage) out << ',' << format_fixed(cov);
  out << '\n';
}

void write_coverage_csv_file(const std::string& path, const CoverageReport& report) {
  std::ofstream out = open_output(path);
  write_coverage_csv(out, report);
  if (!out) throw DataError("failed writing " + path);
}

}  // namespace typealign
