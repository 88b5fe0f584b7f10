// typealign: profile two RDF graphs, score type pairs, evaluate alignments.
//
// Exit codes: 0 success, 1 usage error, 2 data error (bad file, bad content).

#include <charconv>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "typealign/alignment.hpp"
#include "typealign/config.hpp"
#include "typealign/evaluation.hpp"
#include "typealign/ntriples.hpp"
#include "typealign/profile.hpp"
#include "typealign/property_table.hpp"
#include "typealign/similarity.hpp"
#include "typealign/synth.hpp"
#include "typealign/util.hpp"

namespace ta = typealign;

namespace {

std::optional<std::string> opt_str(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return s;
}

ta::SimilarityMeasure parse_measure(const std::string& name) {
  auto m = ta::measure_from_name(name);
  if (!m) throw CLI::ValidationError("--measure", "unknown measure '" + name + "'");
  return *m;
}

std::vector<ta::SimilarityMeasure> parse_measures(const std::string& csv) {
  std::vector<ta::SimilarityMeasure> measures;
  for (std::string_view piece : ta::split(csv, ',')) {
    std::string name(ta::trim(piece));
    if (name.empty()) continue;
    auto m = ta::measure_from_name(name);
    if (!m) throw CLI::ValidationError("--measures", "unknown measure '" + name + "'");
    if (std::find(measures.begin(), measures.end(), *m) == measures.end()) {
      measures.push_back(*m);
    }
  }
  if (measures.empty()) throw CLI::ValidationError("--measures", "no measures given");
  return measures;
}

std::vector<double> parse_thetas(const std::string& csv) {
  if (ta::trim(csv).empty()) return ta::default_theta_grid();
  std::vector<double> thetas;
  for (std::string_view piece : ta::split(csv, ',')) {
    std::string s(ta::trim(piece));
    if (s.empty()) continue;
    double v = 0.0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !(v >= 0.0 && v <= 1.0)) {
      throw CLI::ValidationError("--thetas", "bad threshold '" + s + "'");
    }
    thetas.push_back(v);
  }
  if (thetas.empty()) throw CLI::ValidationError("--thetas", "no thresholds given");
  return thetas;
}

std::vector<std::size_t> parse_k_list(const std::string& csv) {
  std::vector<std::size_t> ks;
  for (std::string_view piece : ta::split(csv, ',')) {
    std::string s(ta::trim(piece));
    if (s.empty()) continue;
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 1) {
      throw CLI::ValidationError("--k", "bad k '" + s + "'");
    }
    ks.push_back(v);
  }
  if (ks.empty()) throw CLI::ValidationError("--k", "no k values given");
  return ks;
}

void require_all(const std::vector<std::string>& paths) {
  for (const std::string& p : paths) ta::require_file(p);
}

ta::RrMode parse_mode(const std::string& mode) {
  if (mode == "exact") return ta::RrMode::exact;
  if (mode == "lower-bound") return ta::RrMode::lower_bound;
  throw CLI::ValidationError("--mode", "expected 'exact' or 'lower-bound'");
}

void print_sweep_summary(const ta::SweepResult& res, const char* primary,
                         const char* secondary) {
  const ta::MetricPoint& best = res.points[res.best_index];
  std::cout << "best_theta\t" << ta::format_fixed(best.theta) << '\n'
            << "best_" << primary << '\t' << ta::format_fixed(best.primary_metric) << '\n'
            << "best_" << secondary << '\t' << ta::format_fixed(best.secondary_metric)
            << '\n'
            << "best_f\t" << ta::format_fixed(best.f_measure) << '\n';
}

void write_histogram_csv(const std::string& path,
                         const std::vector<std::pair<char, ta::FrequencyHistogram>>& hists) {
  std::ofstream out = ta::open_output(path);
  out << "kg,bucket_low,bucket_high,count\n";
  for (const auto& [kg, hist] : hists) {
    for (std::size_t i = 0; i < hist.buckets.size(); ++i) {
      out << kg << ',' << ta::format_fixed(static_cast<double>(i) / 10.0, 1) << ','
          << ta::format_fixed(static_cast<double>(i + 1) / 10.0, 1) << ','
          << hist.buckets[i] << '\n';
    }
  }
  if (!out) throw ta::DataError("failed writing " + path);
}

// ---- ingest-stats ----------------------------------------------------------

struct IngestStatsOpts {
  std::vector<std::string> inputs;
  std::string type_predicate{ta::kRdfTypeIri};
  std::string namespace_filter;
  bool strict = false;
};

void run_ingest_stats(const IngestStatsOpts& o) {
  require_all(o.inputs);
  ta::StatsAccumulator acc(o.type_predicate, opt_str(o.namespace_filter));
  ta::ParseTally tally = ta::parse_ntriples_files(
      o.inputs, {.strict = o.strict}, [&](ta::Triple&& t) { acc.add(t); });
  acc.add_malformed(tally.malformed_lines);
  ta::IngestStats stats = acc.finish();
  if (stats.malformed_lines > 0) {
    std::cerr << "warning: " << stats.malformed_lines << " malformed line(s) skipped\n";
  }
  std::cout << "unique_subjects\t" << stats.unique_subjects << '\n'
            << "unique_triples\t" << stats.unique_triples << '\n'
            << "unique_types\t" << stats.unique_types << '\n'
            << "malformed_lines\t" << stats.malformed_lines << '\n';
}

// ---- stats -----------------------------------------------------------------

struct StatsOpts {
  std::vector<std::string> inputs;
  std::string out;
  std::uint64_t min_count = 5;
  std::uint64_t max_tokens = 30000;
  std::string type_predicate{ta::kRdfTypeIri};
  std::string namespace_filter;
  bool strict = false;
  unsigned threads = 1;
};

void run_stats(const StatsOpts& o) {
  require_all(o.inputs);
  ta::PropertyTableOptions popt;
  popt.type_predicate = o.type_predicate;
  popt.type_namespace_filter = opt_str(o.namespace_filter);
  ta::ParseTally tally;
  std::vector<ta::InstanceRecord> records =
      ta::load_property_table(o.inputs, popt, {.strict = o.strict}, &tally);
  if (tally.malformed_lines > 0) {
    std::cerr << "warning: " << tally.malformed_lines << " malformed line(s) skipped\n";
  }
  ta::TypeTokenCounter counter = ta::count_type_tokens(records, o.threads);
  std::vector<ta::TypeTokenProfile> profiles = ta::consolidate_profiles(
      counter, {.min_token_count = o.min_count, .max_tokens_per_type = o.max_tokens});
  ta::write_profiles_file(o.out, profiles);
  std::cout << "instances\t" << records.size() << '\n'
            << "types_profiled\t" << profiles.size() << '\n'
            << "profile_file\t" << o.out << '\n';
}

// ---- align -----------------------------------------------------------------

struct AlignOpts {
  std::string profiles_a;
  std::string profiles_b;
  std::string out;
  std::string measures{"jaccard,g_jaccard,log_tf"};
  unsigned threads = 1;
};

void run_align(const AlignOpts& o) {
  std::vector<ta::SimilarityMeasure> measures = parse_measures(o.measures);
  std::vector<ta::TypeTokenProfile> pa = ta::read_profiles_file(o.profiles_a);
  std::vector<ta::TypeTokenProfile> pb = ta::read_profiles_file(o.profiles_b);
  ta::AlignmentTable table = ta::score_all_pairs(pa, pb, measures, o.threads);
  ta::write_alignment_table_file(o.out, table);
  std::cout << "types_a\t" << pa.size() << '\n'
            << "types_b\t" << pb.size() << '\n'
            << "pairs\t" << table.entries.size() << '\n'
            << "table_file\t" << o.out << '\n';
}

// ---- eval ------------------------------------------------------------------

struct EvalCommonOpts {
  std::string table;
  std::string measure{"jaccard"};
  std::string thetas;
  std::string out;
};

struct Gt1Opts {
  EvalCommonOpts common;
  std::string gt;
  std::string links;
  std::vector<std::string> records_a;
  std::vector<std::string> records_b;
  std::string type_predicate{ta::kRdfTypeIri};
  std::string namespace_filter_a;
  std::string namespace_filter_b;
  std::string sameas_predicate{ta::kOwlSameAsIri};
  std::string left_namespace;
  bool strict = false;
};

ta::SameAsLoadResult load_links(const std::string& path, const std::string& predicate,
                                const std::string& left_namespace, bool strict) {
  ta::require_file(path);
  ta::SameAsOptions sopt;
  sopt.sameas_predicate = predicate;
  sopt.left_namespace = opt_str(left_namespace);
  sopt.strict = strict;
  ta::SameAsLoadResult links = ta::load_sameas(path, sopt);
  if (links.malformed_lines > 0) {
    std::cerr << "warning: " << links.malformed_lines << " malformed line(s) skipped\n";
  }
  return links;
}

std::vector<ta::InstanceRecord> load_records(const std::vector<std::string>& paths,
                                             const std::string& type_predicate,
                                             const std::string& namespace_filter,
                                             bool strict) {
  require_all(paths);
  ta::PropertyTableOptions popt;
  popt.type_predicate = type_predicate;
  popt.type_namespace_filter = opt_str(namespace_filter);
  return ta::load_property_table(paths, popt, {.strict = strict});
}

void run_eval_gt1(const Gt1Opts& o) {
  ta::AlignmentTable table = ta::read_alignment_table_file(o.common.table);
  ta::SimilarityMeasure measure = parse_measure(o.common.measure);
  std::vector<double> thetas = parse_thetas(o.common.thetas);

  ta::TypePairGroundTruth gt;
  if (!o.gt.empty()) {
    gt.pairs = ta::read_type_pairs_file(o.gt);
  } else {
    ta::SameAsLoadResult links =
        load_links(o.links, o.sameas_predicate, o.left_namespace, o.strict);
    std::vector<ta::InstanceRecord> ra =
        load_records(o.records_a, o.type_predicate, o.namespace_filter_a, o.strict);
    std::vector<ta::InstanceRecord> rb =
        load_records(o.records_b, o.type_predicate, o.namespace_filter_b, o.strict);
    ta::Gt1BuildResult built = ta::build_gt1(links.links, ra, rb);
    if (built.links_skipped > 0) {
      std::cerr << "warning: " << built.links_skipped << " of " << built.links_total
                << " links had no usable endpoints\n";
    }
    if (built.gt.pairs.empty()) {
      std::cerr << "warning: derived ground truth is empty\n";
    }
    gt = std::move(built.gt);
  }

  ta::SweepResult res = ta::sweep(table, measure, ta::make_gt1_evaluator(gt), thetas);
  ta::write_sweep_csv_file(o.common.out, res);
  std::cout << "gt_pairs\t" << gt.pairs.size() << '\n';
  print_sweep_summary(res, "precision", "recall");
  std::cout << "report_file\t" << o.common.out << '\n';
}

struct Gt2Opts {
  EvalCommonOpts common;
  std::string links;
  std::vector<std::string> records_a;
  std::vector<std::string> records_b;
  std::string mode{"lower-bound"};
  std::string type_predicate{ta::kRdfTypeIri};
  std::string namespace_filter_a;
  std::string namespace_filter_b;
  std::string sameas_predicate{ta::kOwlSameAsIri};
  std::string left_namespace;
  bool strict = false;
};

void run_eval_gt2(const Gt2Opts& o) {
  ta::AlignmentTable table = ta::read_alignment_table_file(o.common.table);
  ta::SimilarityMeasure measure = parse_measure(o.common.measure);
  ta::RrMode mode = parse_mode(o.mode);
  std::vector<double> thetas = parse_thetas(o.common.thetas);

  ta::SameAsLoadResult links =
      load_links(o.links, o.sameas_predicate, o.left_namespace, o.strict);
  std::vector<ta::InstanceRecord> ra =
      load_records(o.records_a, o.type_predicate, o.namespace_filter_a, o.strict);
  std::vector<ta::InstanceRecord> rb =
      load_records(o.records_b, o.type_predicate, o.namespace_filter_b, o.strict);
  ta::InstanceMatchGroundTruth gt = ta::InstanceMatchGroundTruth::build(links.links, ra, rb);

  ta::SweepResult res = ta::sweep(table, measure, ta::make_gt2_evaluator(gt, mode), thetas);
  ta::write_sweep_csv_file(o.common.out, res);
  std::cout << "links\t" << gt.duplicates_total << '\n'
            << "pc_ceiling\t" << ta::format_fixed(ta::pc_ceiling(gt)) << '\n';
  print_sweep_summary(res, "pc", "rr");
  std::cout << "report_file\t" << o.common.out << '\n';
}

struct Gt3Opts {
  std::string table;
  std::string measure{"jaccard"};
  std::string gt;
  std::string sources;
  std::size_t depth = 10;
  std::string k_list{"1,3,5"};
  std::string out;
};

void run_eval_gt3(const Gt3Opts& o) {
  ta::AlignmentTable table = ta::read_alignment_table_file(o.table);
  ta::SimilarityMeasure measure = parse_measure(o.measure);
  std::vector<std::size_t> ks = parse_k_list(o.k_list);
  ta::ManualAlignmentGroundTruth gt = ta::read_manual_gt(o.gt, o.sources);
  ta::CoverageReport rep = ta::eval_gt3(table, measure, gt, ks, o.depth);
  ta::write_coverage_csv_file(o.out, rep);
  if (rep.no_covered_sources) {
    std::cerr << "warning: no sampled source was covered; top-k coverage reported as 0\n";
  }
  std::cout << "sampled_sources\t" << rep.sampled_count << '\n'
            << "covered_sources\t" << rep.covered_sources << '\n'
            << "mapping_coverage\t" << ta::format_fixed(rep.mapping_coverage) << '\n';
  for (const auto& [k, cov] : rep.top_k_coverage) {
    std::cout << "top" << k << "_coverage\t" << ta::format_fixed(cov) << '\n';
  }
  std::cout << "report_file\t" << o.out << '\n';
}

// ---- histogram -------------------------------------------------------------

struct HistogramOpts {
  std::string profiles_a;
  std::string profiles_b;
  std::string out;
};

void run_histogram(const HistogramOpts& o) {
  std::vector<std::pair<char, ta::FrequencyHistogram>> hists;
  std::vector<ta::TypeTokenProfile> pa = ta::read_profiles_file(o.profiles_a);
  hists.emplace_back('a', ta::frequency_histogram(pa));
  if (!o.profiles_b.empty()) {
    std::vector<ta::TypeTokenProfile> pb = ta::read_profiles_file(o.profiles_b);
    hists.emplace_back('b', ta::frequency_histogram(pb));
  }
  write_histogram_csv(o.out, hists);
  for (const auto& [kg, hist] : hists) {
    std::cout << "distinct_tokens_" << kg << '\t' << hist.distinct_tokens << '\n';
  }
  std::cout << "report_file\t" << o.out << '\n';
}

// ---- synth -----------------------------------------------------------------

struct SynthOpts {
  std::string config;
  std::string out_dir;
};

void run_synth(const SynthOpts& o) {
  ta::SynthConfig cfg = ta::parse_synth_config_file(o.config);
  ta::SynthOutputs outs = ta::generate_synth(cfg, o.out_dir);
  std::cout << "kg_a\t" << outs.kg_a << '\n'
            << "kg_b\t" << outs.kg_b << '\n'
            << "sameas\t" << outs.sameas << '\n'
            << "gt1\t" << outs.gt1 << '\n'
            << "gt3_accepted\t" << outs.gt3_accepted << '\n'
            << "gt3_sources\t" << outs.gt3_sources << '\n';
}

// ---- pipeline --------------------------------------------------------------

struct PipelineOpts {
  std::string config;
};

std::vector<std::string> split_paths(const std::string& csv) {
  std::vector<std::string> paths;
  for (std::string_view piece : ta::split(csv, ',')) {
    std::string p(ta::trim(piece));
    if (!p.empty()) paths.push_back(std::move(p));
  }
  return paths;
}

void run_pipeline(const PipelineOpts& o) {
  static const std::vector<std::string> known_keys{
      "kg_a",         "kg_b",           "sameas",
      "gt1",          "gt3_accepted",   "gt3_sources",
      "out_dir",      "type_predicate", "sameas_predicate",
      "type_namespace_filter_a",        "type_namespace_filter_b",
      "left_namespace",                 "strict",
      "min_token_count",                "max_tokens_per_type",
      "measures",     "thetas",         "gt2_mode",
      "retrieval_depth",                "k_list",
      "threads"};
  std::map<std::string, std::string> kv = ta::parse_key_value_file(o.config);
  for (const auto& [key, value] : kv) {
    (void)value;
    if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end()) {
      throw ta::DataError("unknown pipeline config key '" + key + "'");
    }
  }
  auto str_key = [&](const std::string& key, const std::string& fallback) {
    auto it = kv.find(key);
    return it == kv.end() ? fallback : it->second;
  };

  std::vector<std::string> kg_a = split_paths(str_key("kg_a", ""));
  std::vector<std::string> kg_b = split_paths(str_key("kg_b", ""));
  if (kg_a.empty() || kg_b.empty()) {
    throw ta::DataError("pipeline config must set kg_a and kg_b");
  }
  std::string out_dir = str_key("out_dir", "");
  if (out_dir.empty()) throw ta::DataError("pipeline config must set out_dir");
  std::string sameas = str_key("sameas", "");
  std::string gt1_path = str_key("gt1", "");
  std::string gt3_accepted = str_key("gt3_accepted", "");
  std::string gt3_sources = str_key("gt3_sources", "");
  if (gt3_accepted.empty() != gt3_sources.empty()) {
    throw ta::DataError("gt3_accepted and gt3_sources must be set together");
  }

  // Every input named in the config must exist before any stage runs.
  require_all(kg_a);
  require_all(kg_b);
  for (const std::string& p : {sameas, gt1_path, gt3_accepted, gt3_sources}) {
    if (!p.empty()) ta::require_file(p);
  }

  std::string type_predicate = str_key("type_predicate", std::string(ta::kRdfTypeIri));
  std::string sameas_predicate =
      str_key("sameas_predicate", std::string(ta::kOwlSameAsIri));
  bool strict = ta::config_bool(kv, "strict", false);
  ta::ConsolidateOptions copt{
      .min_token_count = ta::config_u64(kv, "min_token_count", 5),
      .max_tokens_per_type = ta::config_u64(kv, "max_tokens_per_type", 30000)};
  std::vector<ta::SimilarityMeasure> measures =
      parse_measures(str_key("measures", "jaccard,g_jaccard,log_tf"));
  std::vector<double> thetas = parse_thetas(str_key("thetas", ""));
  ta::RrMode gt2_mode = parse_mode(str_key("gt2_mode", "lower-bound"));
  std::size_t depth = ta::config_u64(kv, "retrieval_depth", 10);
  std::vector<std::size_t> ks = parse_k_list(str_key("k_list", "1,3,5"));
  auto threads = static_cast<unsigned>(ta::config_u64(kv, "threads", 1));
  if (threads < 1 || depth < 1 || copt.min_token_count < 1 ||
      copt.max_tokens_per_type < 1) {
    throw ta::DataError("threads, retrieval_depth and stats thresholds must be >= 1");
  }

  std::filesystem::create_directories(out_dir);
  std::filesystem::path base(out_dir);
  auto out_path = [&](const std::string& name) { return (base / name).string(); };

  // Stage 1: property tables and token profiles per KG.
  ta::PropertyTableOptions popt_a;
  popt_a.type_predicate = type_predicate;
  popt_a.type_namespace_filter = opt_str(str_key("type_namespace_filter_a", ""));
  ta::PropertyTableOptions popt_b;
  popt_b.type_predicate = type_predicate;
  popt_b.type_namespace_filter = opt_str(str_key("type_namespace_filter_b", ""));
  std::vector<ta::InstanceRecord> records_a =
      ta::load_property_table(kg_a, popt_a, {.strict = strict});
  std::vector<ta::InstanceRecord> records_b =
      ta::load_property_table(kg_b, popt_b, {.strict = strict});

  std::vector<ta::TypeTokenProfile> profiles_a =
      ta::consolidate_profiles(ta::count_type_tokens(records_a, threads), copt);
  std::vector<ta::TypeTokenProfile> profiles_b =
      ta::consolidate_profiles(ta::count_type_tokens(records_b, threads), copt);
  ta::write_profiles_file(out_path("profiles_a.tsv"), profiles_a);
  ta::write_profiles_file(out_path("profiles_b.tsv"), profiles_b);
  std::cout << "wrote\t" << out_path("profiles_a.tsv") << '\n'
            << "wrote\t" << out_path("profiles_b.tsv") << '\n';

  // Stage 2: the full scored table.
  ta::AlignmentTable table = ta::score_all_pairs(profiles_a, profiles_b, measures, threads);
  ta::write_alignment_table_file(out_path("table.tsv"), table);
  std::cout << "wrote\t" << out_path("table.tsv") << '\n';

  // Stage 3: evaluations per measure, as configured.
  std::optional<ta::TypePairGroundTruth> gt1;
  std::optional<ta::InstanceMatchGroundTruth> gt2;
  if (!gt1_path.empty()) {
    gt1 = ta::TypePairGroundTruth{.pairs = ta::read_type_pairs_file(gt1_path)};
  }
  if (!sameas.empty()) {
    ta::SameAsLoadResult links =
        load_links(sameas, sameas_predicate, str_key("left_namespace", ""), strict);
    if (!gt1) {
      ta::Gt1BuildResult built = ta::build_gt1(links.links, records_a, records_b);
      if (built.gt.pairs.empty()) {
        std::cerr << "warning: derived ground truth is empty\n";
      }
      gt1 = std::move(built.gt);
    }
    gt2 = ta::InstanceMatchGroundTruth::build(links.links, records_a, records_b);
  }

  std::optional<ta::ManualAlignmentGroundTruth> gt3;
  if (!gt3_accepted.empty()) {
    gt3 = ta::read_manual_gt(gt3_accepted, gt3_sources);
  }

  for (ta::SimilarityMeasure m : measures) {
    std::string suffix = std::string(ta::measure_name(m)) + ".csv";
    if (gt1) {
      ta::SweepResult res = ta::sweep(table, m, ta::make_gt1_evaluator(*gt1), thetas);
      ta::write_sweep_csv_file(out_path("eval_gt1_" + suffix), res);
      std::cout << "wrote\t" << out_path("eval_gt1_" + suffix) << '\n';
    }
    if (gt2) {
      ta::SweepResult res = ta::sweep(table, m, ta::make_gt2_evaluator(*gt2, gt2_mode), thetas);
      ta::write_sweep_csv_file(out_path("eval_gt2_" + suffix), res);
      std::cout << "wrote\t" << out_path("eval_gt2_" + suffix) << '\n';
    }
    if (gt3) {
      ta::CoverageReport rep = ta::eval_gt3(table, m, *gt3, ks, depth);
      ta::write_coverage_csv_file(out_path("eval_gt3_" + suffix), rep);
      std::cout << "wrote\t" << out_path("eval_gt3_" + suffix) << '\n';
    }
  }

  // Stage 4: the token frequency histogram over both KGs.
  write_histogram_csv(out_path("histogram.csv"),
                      {{'a', ta::frequency_histogram(profiles_a)},
                       {'b', ta::frequency_histogram(profiles_b)}});
  std::cout << "wrote\t" << out_path("histogram.csv") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Type alignment toolkit for RDF knowledge graphs"};
  app.set_version_flag("--version", "typealign 0.1.0");
  app.require_subcommand(1);

  IngestStatsOpts ingest_opts;
  CLI::App* ingest = app.add_subcommand("ingest-stats", "Corpus counters for N-Triples files");
  ingest->add_option("--input", ingest_opts.inputs, "N-Triples file (.gz ok), repeatable")
      ->required();
  ingest->add_option("--type-predicate", ingest_opts.type_predicate, "Type predicate IRI");
  ingest->add_option("--namespace-filter", ingest_opts.namespace_filter,
                     "Count only types with this IRI prefix");
  ingest->add_flag("--strict", ingest_opts.strict, "Fail on the first malformed line");
  ingest->callback([&] { run_ingest_stats(ingest_opts); });

  StatsOpts stats_opts;
  CLI::App* stats = app.add_subcommand("stats", "Build type-token profiles from N-Triples");
  stats->add_option("--input", stats_opts.inputs, "N-Triples file (.gz ok), repeatable")
      ->required();
  stats->add_option("--out", stats_opts.out, "Profile file to write")->required();
  stats->add_option("--min-count", stats_opts.min_count, "Drop tokens below this count")
      ->check(CLI::PositiveNumber);
  stats->add_option("--max-tokens", stats_opts.max_tokens, "Keep at most this many tokens per type")
      ->check(CLI::PositiveNumber);
  stats->add_option("--type-predicate", stats_opts.type_predicate, "Type predicate IRI");
  stats->add_option("--namespace-filter", stats_opts.namespace_filter,
                    "Keep only types with this IRI prefix");
  stats->add_flag("--strict", stats_opts.strict, "Fail on the first malformed line");
  stats->add_option("--threads", stats_opts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  stats->callback([&] { run_stats(stats_opts); });

  AlignOpts align_opts;
  CLI::App* align = app.add_subcommand("align", "Score all cross-KG type pairs");
  align->add_option("--profiles-a", align_opts.profiles_a, "KG A profile file")->required();
  align->add_option("--profiles-b", align_opts.profiles_b, "KG B profile file")->required();
  align->add_option("--out", align_opts.out, "Alignment table to write")->required();
  align->add_option("--measures", align_opts.measures,
                    "Comma-separated: jaccard, g_jaccard, log_tf");
  align->add_option("--threads", align_opts.threads, "Worker threads")
      ->check(CLI::PositiveNumber);
  align->callback([&] { run_align(align_opts); });

  CLI::App* eval = app.add_subcommand("eval", "Evaluate an alignment table");
  eval->require_subcommand(1);

  Gt1Opts gt1_opts;
  CLI::App* gt1 = eval->add_subcommand("gt1", "Type-pair precision/recall sweep");
  gt1->add_option("--table", gt1_opts.common.table, "Alignment table")->required();
  gt1->add_option("--measure", gt1_opts.common.measure, "Measure column to sweep");
  gt1->add_option("--thetas", gt1_opts.common.thetas,
                  "Comma-separated thresholds (default: 0.00..1.00 by 0.01)");
  gt1->add_option("--out", gt1_opts.common.out, "Sweep CSV to write")->required();
  auto* gt1_gt = gt1->add_option("--gt", gt1_opts.gt, "Type-pair ground-truth TSV");
  auto* gt1_links = gt1->add_option("--links", gt1_opts.links, "sameAs N-Triples file");
  auto* gt1_ra =
      gt1->add_option("--records-a", gt1_opts.records_a, "KG A N-Triples, repeatable");
  auto* gt1_rb =
      gt1->add_option("--records-b", gt1_opts.records_b, "KG B N-Triples, repeatable");
  gt1_gt->excludes(gt1_links);
  gt1_links->needs(gt1_ra)->needs(gt1_rb);
  gt1->add_option("--type-predicate", gt1_opts.type_predicate, "Type predicate IRI");
  gt1->add_option("--namespace-filter-a", gt1_opts.namespace_filter_a,
                  "KG A type IRI prefix filter");
  gt1->add_option("--namespace-filter-b", gt1_opts.namespace_filter_b,
                  "KG B type IRI prefix filter");
  gt1->add_option("--sameas-predicate", gt1_opts.sameas_predicate, "sameAs predicate IRI");
  gt1->add_option("--left-namespace", gt1_opts.left_namespace,
                  "Orient links so the left side carries this prefix");
  gt1->add_flag("--strict", gt1_opts.strict, "Fail on the first malformed line");
  gt1->callback([&] {
    if (gt1_opts.gt.empty() && gt1_opts.links.empty()) {
      throw CLI::ValidationError("eval gt1", "pass --gt or --links with --records-a/-b");
    }
    run_eval_gt1(gt1_opts);
  });

  Gt2Opts gt2_opts;
  CLI::App* gt2 = eval->add_subcommand("gt2", "Blocking PC/RR sweep from instance links");
  gt2->add_option("--table", gt2_opts.common.table, "Alignment table")->required();
  gt2->add_option("--measure", gt2_opts.common.measure, "Measure column to sweep");
  gt2->add_option("--thetas", gt2_opts.common.thetas,
                  "Comma-separated thresholds (default: 0.00..1.00 by 0.01)");
  gt2->add_option("--out", gt2_opts.common.out, "Sweep CSV to write")->required();
  gt2->add_option("--links", gt2_opts.links, "sameAs N-Triples file")->required();
  gt2->add_option("--records-a", gt2_opts.records_a, "KG A N-Triples, repeatable")
      ->required();
  gt2->add_option("--records-b", gt2_opts.records_b, "KG B N-Triples, repeatable")
      ->required();
  gt2->add_option("--mode", gt2_opts.mode, "RR mode: exact or lower-bound");
  gt2->add_option("--type-predicate", gt2_opts.type_predicate, "Type predicate IRI");
  gt2->add_option("--namespace-filter-a", gt2_opts.namespace_filter_a,
                  "KG A type IRI prefix filter");
  gt2->add_option("--namespace-filter-b", gt2_opts.namespace_filter_b,
                  "KG B type IRI prefix filter");
  gt2->add_option("--sameas-predicate", gt2_opts.sameas_predicate, "sameAs predicate IRI");
  gt2->add_option("--left-namespace", gt2_opts.left_namespace,
                  "Orient links so the left side carries this prefix");
  gt2->add_flag("--strict", gt2_opts.strict, "Fail on the first malformed line");
  gt2->callback([&] { run_eval_gt2(gt2_opts); });

  Gt3Opts gt3_opts;
  CLI::App* gt3 = eval->add_subcommand("gt3", "Manual-alignment rank coverage");
  gt3->add_option("--table", gt3_opts.table, "Alignment table")->required();
  gt3->add_option("--measure", gt3_opts.measure, "Measure column to rank by");
  gt3->add_option("--gt", gt3_opts.gt, "Accepted alignments TSV")->required();
  gt3->add_option("--sources", gt3_opts.sources, "Sampled source types, one per line")
      ->required();
  gt3->add_option("--depth", gt3_opts.depth, "Retrieval depth")->check(CLI::PositiveNumber);
  gt3->add_option("--k", gt3_opts.k_list, "Comma-separated k values");
  gt3->add_option("--out", gt3_opts.out, "Coverage CSV to write")->required();
  gt3->callback([&] { run_eval_gt3(gt3_opts); });

  HistogramOpts hist_opts;
  CLI::App* hist = app.add_subcommand("histogram", "Token type-frequency histogram");
  hist->add_option("--profiles-a", hist_opts.profiles_a, "KG A profile file")->required();
  hist->add_option("--profiles-b", hist_opts.profiles_b, "KG B profile file");
  hist->add_option("--out", hist_opts.out, "Histogram CSV to write")->required();
  hist->callback([&] { run_histogram(hist_opts); });

  SynthOpts synth_opts;
  CLI::App* synth = app.add_subcommand("synth", "Generate a synthetic two-KG benchmark");
  synth->add_option("--config", synth_opts.config, "key=value config file")->required();
  synth->add_option("--out-dir", synth_opts.out_dir, "Output directory")->required();
  synth->callback([&] { run_synth(synth_opts); });

  PipelineOpts pipeline_opts;
  CLI::App* pipeline = app.add_subcommand("pipeline", "Run profile, align and eval stages");
  pipeline->add_option("--config", pipeline_opts.config, "key=value config file")
      ->required();
  pipeline->callback([&] { run_pipeline(pipeline_opts); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
