#include "typealign/alignment.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "typealign/util.hpp"

namespace typealign {

namespace {

bool entry_key_less(const AlignmentEntry& lhs, const AlignmentEntry& rhs) {
  if (int c = lhs.type_a.compare(rhs.type_a); c != 0) return c < 0;
  return lhs.type_b < rhs.type_b;
}

std::size_t measure_index(const AlignmentTable& table, SimilarityMeasure m) {
  if (!table.has_measure(m)) {
    throw std::invalid_argument("measure not computed: " + std::string(measure_name(m)));
  }
  return static_cast<std::size_t>(m);
}

constexpr std::string_view kHeader = "type_a\ttype_b\tjaccard\tg_jaccard\tlog_tf";

}  // namespace

bool AlignmentTable::has_measure(SimilarityMeasure m) const {
  return std::find(enabled_measures.begin(), enabled_measures.end(), m) !=
         enabled_measures.end();
}

AlignmentTable score_all_pairs(std::span<const TypeTokenProfile> side_a,
                               std::span<const TypeTokenProfile> side_b,
                               std::span<const SimilarityMeasure> measures,
                               unsigned threads) {
  if (side_a.empty() || side_b.empty()) {
    throw std::invalid_argument("no profiles to align");
  }
  AlignmentTable table;
  for (SimilarityMeasure m : measures) {
    if (!table.has_measure(m)) table.enabled_measures.push_back(m);
  }
  if (table.enabled_measures.empty()) {
    throw std::invalid_argument("no similarity measures requested");
  }

  table.entries.resize(side_a.size() * side_b.size());
  auto score_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < side_b.size(); ++j) {
      AlignmentEntry& e = table.entries[i * side_b.size() + j];
      e.type_a = side_a[i].type;
      e.type_b = side_b[j].type;
      for (SimilarityMeasure m : table.enabled_measures) {
        e.scores[static_cast<std::size_t>(m)] = score(m, side_a[i], side_b[j]);
      }
    }
  };

  if (threads <= 1 || side_a.size() < 2) {
    for (std::size_t i = 0; i < side_a.size(); ++i) score_row(i);
  } else {
    unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(side_a.size()));
    std::vector<std::jthread> workers;
    workers.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < side_a.size(); i += n) score_row(i);
      });
    }
  }

  std::sort(table.entries.begin(), table.entries.end(), entry_key_less);
  return table;
}

double entry_score(const AlignmentTable& table, const AlignmentEntry& entry,
                   SimilarityMeasure m) {
  return entry.scores[measure_index(table, m)];
}

std::vector<AlignmentEntry> threshold_filter(const AlignmentTable& table,
                                             SimilarityMeasure m, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) {
    throw std::invalid_argument("threshold must lie in [0,1]");
  }
  std::size_t idx = measure_index(table, m);
  std::vector<AlignmentEntry> kept;
  for (const AlignmentEntry& e : table.entries) {
    if (e.scores[idx] >= theta) kept.push_back(e);
  }
  return kept;
}

std::vector<AlignmentEntry> top_k(const AlignmentTable& table, SimilarityMeasure m,
                                  const std::string& source, std::size_t k) {
  std::size_t idx = measure_index(table, m);
  auto lo = std::lower_bound(
      table.entries.begin(), table.entries.end(), source,
      [](const AlignmentEntry& e, const std::string& s) { return e.type_a < s; });
  auto hi = lo;
  while (hi != table.entries.end() && hi->type_a == source) ++hi;
  if (lo == hi) {
    throw std::invalid_argument("unknown source type: " + source);
  }
  std::vector<AlignmentEntry> ranked(lo, hi);
  std::stable_sort(ranked.begin(), ranked.end(),
                   [idx](const AlignmentEntry& a, const AlignmentEntry& b) {
                     if (a.scores[idx] != b.scores[idx]) return a.scores[idx] > b.scores[idx];
                     return a.type_b < b.type_b;
                   });
  if (ranked.size() > k) ranked.resize(k);
  return ranked;
}

void write_alignment_table(std::ostream& out, const AlignmentTable& table) {
  out << kHeader << '\n';
  for (const AlignmentEntry& e : table.entries) {
    out << e.type_a << '\t' << e.type_b;
    for (double s : e.scores) out << '\t' << format_fixed(s);
    out << '\n';
  }
}

void write_alignment_table_file(const std::string& path, const AlignmentTable& table) {
  std::ofstream out = open_output(path);
  write_alignment_table(out, table);
  if (!out) throw DataError("failed writing " + path);
}

AlignmentTable read_alignment_table(std::istream& in, const std::string& origin) {
  AlignmentTable table;
  table.enabled_measures.assign(kAllMeasures.begin(), kAllMeasures.end());
  std::string line;
  std::size_t line_no = 0;
  bool saw_header = false;
  auto fail = [&](const std::string& what) -> DataError {
    return DataError(origin + ":" + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!saw_header) {
      if (line != kHeader) throw fail("bad alignment header");
      saw_header = true;
      continue;
    }
    if (line.empty()) continue;
    std::vector<std::string_view> cols = split(line, '\t');
    if (cols.size() != 5) throw fail("expected 5 tab-separated columns");
    AlignmentEntry e;
    e.type_a = std::string(cols[0]);
    e.type_b = std::string(cols[1]);
    if (e.type_a.empty() || e.type_b.empty()) throw fail("empty type column");
    for (std::size_t i = 0; i < 3; ++i) {
      double v = 0.0;
      const char* first = cols[i + 2].data();
      const char* last = first + cols[i + 2].size();
      auto [p, ec] = std::from_chars(first, last, v);
      if (ec != std::errc() || p != last || !(v >= 0.0 && v <= 1.0)) {
        throw fail("bad score '" + std::string(cols[i + 2]) + "'");
      }
      e.scores[i] = v;
    }
    table.entries.push_back(std::move(e));
  }
  if (!saw_header) throw DataError(origin + ": missing alignment header");
  std::sort(table.entries.begin(), table.entries.end(), entry_key_less);
  return table;
}

AlignmentTable read_alignment_table_file(const std::string& path) {
  require_file(path);
  std::ifstream in = open_input(path);
  return read_alignment_table(in, path);
}

}  // namespace typealign
