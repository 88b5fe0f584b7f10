// End-to-end acceptance checks. Runs against the built CLI (argv[1]) plus the
// core library, prints one [PASS]/[FAIL] line per criterion, and exits with
// the number of failures.

#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "typealign/alignment.hpp"
#include "typealign/evaluation.hpp"
#include "typealign/ntriples.hpp"
#include "typealign/profile.hpp"
#include "typealign/property_table.hpp"
#include "typealign/similarity.hpp"
#include "typealign/synth.hpp"
#include "typealign/util.hpp"
#include "temp_dir.hpp"

using namespace typealign;

namespace {

std::string g_cli;

#define RQ(cond)                                               \
  do {                                                         \
    if (!(cond)) {                                             \
      why = std::string(#cond) + " (line " +                   \
            std::to_string(__LINE__) + ")";                    \
      return false;                                            \
    }                                                          \
  } while (0)

struct CmdResult {
  int exit_code = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  CmdResult res;
  std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, n);
  int status = pclose(pipe);
  if (WIFEXITED(status)) res.exit_code = WEXITSTATUS(status);
  return res;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::map<std::string, std::string> tsv_map(const std::string& text) {
  std::map<std::string, std::string> kv;
  for (std::string_view line : split(text, '\n')) {
    auto cols = split(line, '\t');
    if (cols.size() == 2) kv.emplace(std::string(cols[0]), std::string(cols[1]));
  }
  return kv;
}

TypeTokenProfile make_profile(std::string type,
                              std::vector<std::pair<std::string, std::uint64_t>> counts) {
  TypeTokenProfile p;
  p.type = std::move(type);
  std::sort(counts.begin(), counts.end());
  for (auto& [token, count] : counts) p.tokens.push_back({std::move(token), count});
  return p;
}

InstanceRecord inst(std::string subject, std::vector<std::string> types) {
  InstanceRecord r;
  r.subject = std::move(subject);
  r.types = std::move(types);
  std::sort(r.types.begin(), r.types.end());
  return r;
}

// plain-definition reference scores, used to cross-check the merge loops

double ref_jaccard(const TypeTokenProfile& a, const TypeTokenProfile& b) {
  std::set<std::string> sa, sb, uni;
  for (const auto& tc : a.tokens) sa.insert(tc.token);
  for (const auto& tc : b.tokens) sb.insert(tc.token);
  uni = sa;
  uni.insert(sb.begin(), sb.end());
  if (uni.empty()) return 0.0;
  std::size_t shared = 0;
  for (const auto& t : sa) shared += sb.count(t);
  return double(shared) / double(uni.size());
}

double ref_g_jaccard(const TypeTokenProfile& a, const TypeTokenProfile& b) {
  double s1 = 0, s2 = 0;
  for (const auto& tc : a.tokens) s1 += double(tc.count);
  for (const auto& tc : b.tokens) s2 += double(tc.count);
  std::map<std::string, std::pair<double, double>> freq;
  for (const auto& tc : a.tokens) freq[tc.token].first = double(tc.count) / s1;
  for (const auto& tc : b.tokens) freq[tc.token].second = double(tc.count) / s2;
  double num = 0, den = 0;
  for (const auto& [token, f] : freq) {
    num += std::min(f.first, f.second);
    den += std::max(f.first, f.second);
  }
  return den == 0 ? 0.0 : num / den;
}

double ref_log_tf(const TypeTokenProfile& a, const TypeTokenProfile& b) {
  std::map<std::string, double> va;
  double n1 = 0, n2 = 0, dot = 0;
  for (const auto& tc : a.tokens) {
    va[tc.token] = double(tc.count);
    n1 += double(tc.count) * double(tc.count);
  }
  for (const auto& tc : b.tokens) {
    n2 += double(tc.count) * double(tc.count);
    auto it = va.find(tc.token);
    if (it != va.end()) dot += it->second * double(tc.count);
  }
  if (n1 == 0 || n2 == 0) return 0.0;
  return std::log1p(dot / std::sqrt(n1 * n2)) / std::log(2.0);
}

TypeTokenProfile random_profile(std::mt19937& rng, int universe, int max_tokens,
                                std::uint64_t max_count) {
  std::uniform_int_distribution<int> size(1, max_tokens);
  std::uniform_int_distribution<int> pick(0, universe - 1);
  std::uniform_int_distribution<std::uint64_t> count(1, max_count);
  std::set<int> ids;
  for (int n = size(rng); n > 0; --n) ids.insert(pick(rng));
  std::vector<std::pair<std::string, std::uint64_t>> counts;
  for (int id : ids) counts.push_back({"u" + std::to_string(id), count(rng)});
  return make_profile("T", std::move(counts));
}

// ---- C1 --------------------------------------------------------------------

bool c1_harmonic(std::string& why) {
  double f = harmonic_mean(0.3236, 0.7417);
  RQ(std::abs(f - 0.4506) <= 0.001);
  return true;
}

// ---- C2 --------------------------------------------------------------------

bool c2_similarity(std::string& why) {
  TypeTokenProfile ja = make_profile("A", {{"a", 1}, {"b", 1}, {"c", 1}});
  TypeTokenProfile jb = make_profile("B", {{"b", 1}, {"c", 1}, {"d", 1}});
  RQ(jaccard(ja, jb) == 0.5);

  TypeTokenProfile ga = make_profile("A", {{"a", 2}, {"b", 2}});
  TypeTokenProfile gb = make_profile("B", {{"a", 1}, {"b", 3}});
  RQ(g_jaccard(ga, gb) == 0.6);

  TypeTokenProfile la = make_profile("A", {{"a", 1}});
  TypeTokenProfile lb = make_profile("B", {{"a", 1}, {"b", 1}});
  RQ(std::abs(log_tf(la, lb) - 0.77155) <= 1e-4);
  RQ(std::abs(log_tf(la, lb) - 0.7715533031636119) <= 1e-9);

  std::mt19937 rng(777);
  for (int trial = 0; trial < 1000; ++trial) {
    TypeTokenProfile a = random_profile(rng, 80, 50, 20);
    TypeTokenProfile b = random_profile(rng, 80, 50, 20);
    RQ(std::abs(jaccard(a, b) - ref_jaccard(a, b)) <= 1e-9);
    RQ(std::abs(g_jaccard(a, b) - ref_g_jaccard(a, b)) <= 1e-9);
    RQ(std::abs(log_tf(a, b) - ref_log_tf(a, b)) <= 1e-9);
  }
  return true;
}

// ---- C3 --------------------------------------------------------------------

bool c3_skew_filters(std::string& why) {
  // boundary: count 4 drops, count 5 stays; the cap keeps exactly the top
  // 30000 with ties broken by token order
  {
    std::vector<InstanceRecord> records;
    std::string all_tokens;
    for (int j = 0; j <= 30000; ++j) {
      char buf[16];
      std::snprintf(buf, sizeof(buf), "t%05d", j);
      if (!all_tokens.empty()) all_tokens += ' ';
      all_tokens += buf;
    }
    for (int i = 0; i < 5; ++i) {
      InstanceRecord r = inst("i" + std::to_string(i), {"T"});
      r.value_fields.push_back(all_tokens);
      if (i < 4) r.value_fields.push_back("aaaa");
      records.push_back(std::move(r));
    }
    std::vector<TypeTokenProfile> profiles =
        consolidate_profiles(count_type_tokens(records), {});
    RQ(profiles.size() == 1);
    RQ(profiles[0].tokens.size() == 30000);
    auto has = [&](const std::string& token) {
      return std::binary_search(
          profiles[0].tokens.begin(), profiles[0].tokens.end(), TokenCount{token, 0},
          [](const TokenCount& x, const TokenCount& y) { return x.token < y.token; });
    };
    RQ(!has("aaaa"));    // count 4, below the default threshold
    RQ(has("t00000"));   // count 5, exactly at it
    RQ(has("t29999"));
    RQ(!has("t30000"));  // pushed out by the cap, last in token order
  }

  // random corpora: kept tokens are exactly those at or above the threshold
  std::mt19937 rng(808);
  std::uniform_int_distribution<int> type_pick(0, 4);
  std::uniform_int_distribution<int> word_pick(0, 39);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<InstanceRecord> records;
    std::map<std::pair<std::string, std::string>, std::uint64_t> naive;
    for (int i = 0; i < 200; ++i) {
      InstanceRecord r =
          inst("i" + std::to_string(i), {"T" + std::to_string(type_pick(rng))});
      std::set<std::string> words;
      for (int w = 0; w < 6; ++w) words.insert("w" + std::to_string(word_pick(rng)));
      std::string field;
      for (const std::string& w : words) {
        if (!field.empty()) field += ' ';
        field += w;
      }
      r.value_fields.push_back(field);
      for (const std::string& w : words) ++naive[{r.types[0], w}];
      records.push_back(std::move(r));
    }
    std::vector<TypeTokenProfile> profiles =
        consolidate_profiles(count_type_tokens(records), {});
    std::map<std::pair<std::string, std::string>, std::uint64_t> kept;
    for (const TypeTokenProfile& p : profiles) {
      for (const TokenCount& tc : p.tokens) {
        RQ(tc.count >= 5);
        kept[{p.type, tc.token}] = tc.count;
      }
    }
    std::map<std::pair<std::string, std::string>, std::uint64_t> expected;
    for (const auto& [key, count] : naive) {
      if (count >= 5) expected[key] = count;
    }
    RQ(kept == expected);
  }
  return true;
}

// ---- C4 --------------------------------------------------------------------

bool c4_thread_determinism(std::string& why) {
  TempDir dir;
  SynthConfig cfg;
  cfg.types_per_kg = 20;
  cfg.planted_pairs = 10;
  cfg.instances_per_type = 500;  // 10,000 instances
  cfg.shared_vocab_size = 32;
  cfg.noise_rate = 0.2;
  cfg.seed = 3;
  SynthOutputs outs = generate_synth(cfg, dir.file("synth"));

  std::vector<std::string> written;
  for (unsigned threads : {1u, 2u, 8u}) {
    std::string out = dir.file("profiles_t" + std::to_string(threads) + ".tsv");
    CmdResult r = run_cli("stats --input " + outs.kg_a + " --out " + out +
                          " --threads " + std::to_string(threads));
    RQ(r.exit_code == 0);
    written.push_back(slurp(out));
    RQ(!written.back().empty());
  }
  RQ(written[0] == written[1]);
  RQ(written[0] == written[2]);
  return true;
}

// ---- C5 --------------------------------------------------------------------

bool c5_planted_recovery(std::string& why) {
  TempDir dir;

  // clean corpus through the CLI end to end
  {
    std::ofstream cfg(dir.file("synth.cfg"));
    cfg << "types_per_kg = 20\nplanted_pairs = 10\ninstances_per_type = 50\n"
        << "shared_vocab_size = 32\nnoise_rate = 0\nseed = 1\n";
  }
  CmdResult synth =
      run_cli("synth --config " + dir.file("synth.cfg") + " --out-dir " + dir.file("data"));
  RQ(synth.exit_code == 0);
  std::map<std::string, std::string> files = tsv_map(synth.out);
  for (const char* key : {"kg_a", "kg_b", "sameas", "gt1", "gt3_accepted", "gt3_sources"}) {
    RQ(files.count(key) == 1);
    RQ(std::filesystem::exists(files[key]));
  }

  {
    std::ofstream cfg(dir.file("pipeline.cfg"));
    cfg << "kg_a = " << files["kg_a"] << "\nkg_b = " << files["kg_b"] << "\n"
        << "sameas = " << files["sameas"] << "\ngt1 = " << files["gt1"] << "\n"
        << "gt3_accepted = " << files["gt3_accepted"] << "\n"
        << "gt3_sources = " << files["gt3_sources"] << "\n"
        << "out_dir = " << dir.file("out") << "\n"
        << "min_token_count = 1\ngt2_mode = exact\nthreads = 2\n";
  }
  CmdResult pipe = run_cli("pipeline --config " + dir.file("pipeline.cfg"));
  RQ(pipe.exit_code == 0);
  for (const char* name :
       {"profiles_a.tsv", "profiles_b.tsv", "table.tsv", "eval_gt1_jaccard.csv",
        "eval_gt1_g_jaccard.csv", "eval_gt1_log_tf.csv", "eval_gt2_jaccard.csv",
        "eval_gt3_jaccard.csv", "histogram.csv"}) {
    RQ(std::filesystem::exists(dir.file("out") + "/" + name));
  }

  // a noiseless corpus separates perfectly at some threshold
  bool perfect = false;
  std::istringstream csv(slurp(dir.file("out") + "/eval_gt1_jaccard.csv"));
  std::string line;
  std::getline(csv, line);
  RQ(line == "theta,primary,secondary,f");
  while (std::getline(csv, line)) {
    auto cols = split(line, ',');
    if (cols.size() == 4 && cols[1] == "1.000000" && cols[2] == "1.000000" &&
        cols[3] == "1.000000") {
      perfect = true;
    }
  }
  RQ(perfect);

  // noisy corpora stay recoverable across seeds
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    SynthConfig cfg;
    cfg.noise_rate = 0.3;
    cfg.seed = seed;
    TempDir noisy;
    SynthOutputs outs = generate_synth(cfg, noisy.file("synth"));
    ConsolidateOptions keep{.min_token_count = 1};
    std::vector<TypeTokenProfile> pa =
        consolidate_profiles(count_type_tokens(load_property_table({outs.kg_a})), keep);
    std::vector<TypeTokenProfile> pb =
        consolidate_profiles(count_type_tokens(load_property_table({outs.kg_b})), keep);
    AlignmentTable table = score_all_pairs(pa, pb, kAllMeasures);
    TypePairGroundTruth gt{read_type_pairs_file(outs.gt1)};
    std::vector<double> grid = default_theta_grid();
    SweepResult res = sweep(table, SimilarityMeasure::jaccard, make_gt1_evaluator(gt), grid);
    RQ(res.points[res.best_index].f_measure >= 0.8);
  }
  return true;
}

// ---- C6 --------------------------------------------------------------------

bool c6_blocking_exactness(std::string& why) {
  std::mt19937 rng(4711);
  std::uniform_int_distribution<int> type_pick(0, 3);
  std::uniform_int_distribution<int> extra(0, 2);
  std::uniform_int_distribution<int> link_pick(0, 19);
  std::uniform_int_distribution<int> level(0, 20);

  for (int trial = 0; trial < 5; ++trial) {
    std::vector<InstanceRecord> a, b;
    for (int i = 0; i < 20; ++i) {
      std::set<std::string> ta{"T" + std::to_string(type_pick(rng))};
      if (extra(rng) == 0) ta.insert("T" + std::to_string(type_pick(rng)));
      a.push_back(inst("a" + std::to_string(i), {ta.begin(), ta.end()}));
      std::set<std::string> tb{"U" + std::to_string(type_pick(rng))};
      if (extra(rng) == 0) tb.insert("U" + std::to_string(type_pick(rng)));
      b.push_back(inst("b" + std::to_string(i), {tb.begin(), tb.end()}));
    }
    std::vector<SameAsLink> links;
    for (int l = 0; l < 10; ++l) {
      links.push_back({"a" + std::to_string(link_pick(rng)),
                       "b" + std::to_string(link_pick(rng))});
    }
    InstanceMatchGroundTruth gt = InstanceMatchGroundTruth::build(links, a, b);

    AlignmentTable table;
    table.enabled_measures = {SimilarityMeasure::jaccard};
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        AlignmentEntry e;
        e.type_a = "T" + std::to_string(i);
        e.type_b = "U" + std::to_string(j);
        e.scores[0] = level(rng) * 0.05;
        table.entries.push_back(std::move(e));
      }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const AlignmentEntry& x, const AlignmentEntry& y) {
                return std::tie(x.type_a, x.type_b) < std::tie(y.type_a, y.type_b);
              });

    std::vector<double> thetas;
    for (int k = 0; k <= 20; ++k) thetas.push_back(k * 0.05);
    SweepResult exact =
        sweep(table, SimilarityMeasure::jaccard, make_gt2_evaluator(gt, RrMode::exact), thetas);
    SweepResult lower = sweep(table, SimilarityMeasure::jaccard,
                              make_gt2_evaluator(gt, RrMode::lower_bound), thetas);

    std::set<SameAsLink> uniq(links.begin(), links.end());
    for (std::size_t t = 0; t < thetas.size(); ++t) {
      TypePairVec retrieved;
      for (const AlignmentEntry& e : table.entries) {
        if (e.scores[0] >= thetas[t]) retrieved.emplace_back(e.type_a, e.type_b);
      }
      auto covered_by = [&](const std::vector<std::string>& ta,
                            const std::vector<std::string>& tb) {
        for (const auto& [x, y] : retrieved) {
          bool in_a = std::find(ta.begin(), ta.end(), x) != ta.end();
          bool in_b = std::find(tb.begin(), tb.end(), y) != tb.end();
          if (in_a && in_b) return true;
        }
        return false;
      };
      std::uint64_t i_all = 0;
      for (const InstanceRecord& ra : a) {
        for (const InstanceRecord& rb : b) {
          if (covered_by(ra.types, rb.types)) ++i_all;
        }
      }
      std::uint64_t covered = 0;
      for (const SameAsLink& link : uniq) {
        const auto& ra = a[std::stoul(link.left.substr(1))];
        const auto& rb = b[std::stoul(link.right.substr(1))];
        if (covered_by(ra.types, rb.types)) ++covered;
      }
      double brute_pc = double(covered) / double(uniq.size());
      double brute_rr = static_cast<double>(
          1.0L - static_cast<long double>(i_all) / static_cast<long double>(400));

      RQ(exact.points[t].primary_metric == brute_pc);
      RQ(exact.points[t].secondary_metric == brute_rr);
      BlockingMetrics direct = eval_gt2(retrieved, gt, RrMode::exact);
      RQ(direct.candidate_count == i_all);
      RQ(direct.covered_links == covered);
      RQ(lower.points[t].primary_metric == brute_pc);
      RQ(lower.points[t].secondary_metric <= exact.points[t].secondary_metric);
    }
  }
  return true;
}

// ---- C7 --------------------------------------------------------------------

bool c7_rank_coverage(std::string& why) {
  AlignmentTable table;
  table.enabled_measures = {SimilarityMeasure::jaccard};
  auto add = [&](const char* ta, const char* tb, double s) {
    AlignmentEntry e;
    e.type_a = ta;
    e.type_b = tb;
    e.scores[0] = s;
    table.entries.push_back(std::move(e));
  };
  add("A1", "B1", 0.9); add("A1", "B5", 0.5); add("A1", "B6", 0.1);
  add("A2", "B2", 0.7); add("A2", "B5", 0.8); add("A2", "B6", 0.1);
  add("A3", "B3", 0.9); add("A3", "B4", 0.5); add("A3", "B7", 0.6);
  add("A4", "B5", 0.9); add("A4", "B6", 0.8);
  std::sort(table.entries.begin(), table.entries.end(),
            [](const AlignmentEntry& x, const AlignmentEntry& y) {
              return std::tie(x.type_a, x.type_b) < std::tie(y.type_a, y.type_b);
            });

  ManualAlignmentGroundTruth gt;
  gt.accepted = {{"A1", {"B1"}}, {"A2", {"B2"}}, {"A3", {"B3", "B4"}}, {"A4", {"B9"}}};
  gt.sampled_sources = {"A1", "A2", "A3", "A4"};

  std::vector<std::size_t> ks{1, 3};
  CoverageReport rep = eval_gt3(table, SimilarityMeasure::jaccard, gt, ks, 10);
  RQ(rep.mapping_coverage == 0.75);
  RQ(rep.covered_sources == 3);  // the source with two accepted targets counts once
  RQ(rep.top_k_coverage[0].second == 2.0 / 3.0);
  RQ(rep.top_k_coverage[1].second == 1.0);
  return true;
}

// ---- C8 --------------------------------------------------------------------

bool c8_ingest_counters(std::string& why) {
  TempDir dir;
  std::string nt = dir.file("fixture.nt");
  {
    std::ofstream out(nt);
    out << "<http://a/i1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://a/t/T1> .\n"
        << "<http://a/i1> <http://a/p/name> \"Alpha Beta\" .\n"
        << "<http://a/i1> <http://a/p/name> \"Alpha Beta\" .\n"
        << "<http://a/i2> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://a/t/T2> .\n"
        << "<http://a/i2> <http://a/p/label> \"Gamma\"@en .\n"
        << "this line is garbage\n"
        << "<http://a/i3> <http://a/p/rel> <http://a/i1> .\n";
  }

  CmdResult lenient = run_cli("ingest-stats --input " + nt);
  RQ(lenient.exit_code == 0);
  std::map<std::string, std::string> kv = tsv_map(lenient.out);
  RQ(kv["unique_subjects"] == "3");
  RQ(kv["unique_triples"] == "5");  // the duplicate collapses
  RQ(kv["unique_types"] == "2");
  RQ(kv["malformed_lines"] == "1");

  CmdResult strict = run_cli("ingest-stats --strict --input " + nt);
  RQ(strict.exit_code == 2);
  return true;
}

// ---- C9 --------------------------------------------------------------------

bool c9_rank_agreement(std::string& why) {
  std::mt19937 rng(2024);
  std::vector<TypeTokenProfile> sources, targets;
  char buf[16];
  for (int i = 0; i < 100; ++i) {
    TypeTokenProfile p = random_profile(rng, 60, 25, 30);
    std::snprintf(buf, sizeof(buf), "A%03d", i);
    p.type = buf;
    sources.push_back(std::move(p));
  }
  for (int i = 0; i < 40; ++i) {
    TypeTokenProfile p = random_profile(rng, 60, 25, 30);
    std::snprintf(buf, sizeof(buf), "B%03d", i);
    p.type = buf;
    targets.push_back(std::move(p));
  }
  std::vector<SimilarityMeasure> measures{SimilarityMeasure::log_tf};
  AlignmentTable table = score_all_pairs(sources, targets, measures);

  for (const TypeTokenProfile& src : sources) {
    std::vector<AlignmentEntry> by_log = top_k(table, SimilarityMeasure::log_tf, src.type, 10);

    // rank the same candidates by the raw dot product instead
    std::vector<std::pair<double, std::string>> by_dot;
    for (const TypeTokenProfile& tgt : targets) {
      by_dot.emplace_back(normalized_dot(src, tgt), tgt.type);
    }
    std::sort(by_dot.begin(), by_dot.end(), [](const auto& x, const auto& y) {
      if (x.first != y.first) return x.first > y.first;
      return x.second < y.second;
    });
    by_dot.resize(10);

    RQ(by_log.size() == 10);
    std::map<std::string, int> pos_log, pos_dot;
    for (int r = 0; r < 10; ++r) {
      pos_log[by_log[r].type_b] = r;
      pos_dot[by_dot[r].second] = r;
    }
    RQ(pos_log.size() == 10);
    for (const auto& [name, r] : pos_log) RQ(pos_dot.count(name) == 1);

    // Kendall tau over the ten shared candidates
    int concordant = 0, discordant = 0;
    for (int i = 0; i < 10; ++i) {
      for (int j = i + 1; j < 10; ++j) {
        int d1 = pos_log[by_log[i].type_b] - pos_log[by_log[j].type_b];
        int d2 = pos_dot[by_log[i].type_b] - pos_dot[by_log[j].type_b];
        if (d1 * d2 > 0) {
          ++concordant;
        } else {
          ++discordant;
        }
      }
    }
    double tau = double(concordant - discordant) / 45.0;
    RQ(discordant == 0);
    RQ(tau == 1.0);
    for (int r = 0; r < 10; ++r) RQ(by_log[r].type_b == by_dot[r].second);
  }
  return true;
}

// ---- C10 -------------------------------------------------------------------

bool c10_histogram(std::string& why) {
  std::vector<TypeTokenProfile> profiles;
  for (int i = 0; i < 10; ++i) {
    std::vector<std::pair<std::string, std::uint64_t>> counts{{"everywhere", 1}};
    if (i == 0) counts.push_back({"rare", 1});
    if (i < 5) counts.push_back({"half", 1});
    profiles.push_back(make_profile("T" + std::to_string(i), std::move(counts)));
  }
  FrequencyHistogram hist = frequency_histogram(profiles);
  RQ(hist.type_count == 10);
  RQ(hist.distinct_tokens == 3);
  RQ(hist.buckets[0] == 1);  // 1 of 10
  RQ(hist.buckets[4] == 1);  // 5 of 10
  RQ(hist.buckets[9] == 1);  // 10 of 10
  std::uint64_t total = 0;
  for (std::uint64_t b : hist.buckets) total += b;
  RQ(total == hist.distinct_tokens);
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <typealign-cli>\n", argv[0]);
    return 64;
  }
  g_cli = argv[1];
  if (!std::filesystem::exists(g_cli)) {
    std::fprintf(stderr, "no such binary: %s\n", g_cli.c_str());
    return 64;
  }

  struct Item {
    const char* label;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Item> items{
      {"C1: harmonic f-measure fixture", c1_harmonic},
      {"C2: similarity measures vs reference formulas", c2_similarity},
      {"C3: token filter threshold and cap", c3_skew_filters},
      {"C4: profile output is thread-count invariant", c4_thread_determinism},
      {"C5: planted alignments recovered end to end", c5_planted_recovery},
      {"C6: exact blocking metrics match brute force", c6_blocking_exactness},
      {"C7: rank coverage fixture", c7_rank_coverage},
      {"C8: ingest counters and strict mode", c8_ingest_counters},
      {"C9: log-tf and dot-product rankings agree", c9_rank_agreement},
      {"C10: token frequency histogram buckets", c10_histogram},
  };

  int failures = 0;
  for (const Item& item : items) {
    bool ok = false;
    std::string why;
    try {
      ok = item.fn(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    if (ok) {
      std::printf("[PASS] %s\n", item.label);
    } else {
      std::printf("[FAIL] %s -- %s\n", item.label, why.c_str());
      ++failures;
    }
  }
  return failures;
}
