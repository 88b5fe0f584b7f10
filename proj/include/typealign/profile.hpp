#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "typealign/property_table.hpp"

namespace typealign {

struct TokenCount {
  std::string token;
  std::uint64_t count = 0;

  friend bool operator==(const TokenCount&, const TokenCount&) = default;
};

/// Consolidated per-type profile. `tokens` is kept sorted by token string so
/// the similarity measures can merge two profiles linearly; the on-disk
/// order (count descending, token ascending) is produced by the writer.
struct TypeTokenProfile {
  std::string type;
  std::vector<TokenCount> tokens;
  std::uint64_t instance_count = 0;

  friend bool operator==(const TypeTokenProfile&, const TypeTokenProfile&) = default;
};

struct TypeTokenCountEntry {
  std::string type;
  std::string token;
  std::uint64_t count = 0;

  friend bool operator==(const TypeTokenCountEntry&, const TypeTokenCountEntry&) = default;
  friend auto operator<=>(const TypeTokenCountEntry&, const TypeTokenCountEntry&) = default;
};

/// First aggregation stage: per (type, token), the number of distinct
/// instances of that type containing the token, plus per-type instance
/// totals. Shards each own a counter; merging adds counts pointwise, so any
/// shard split of whole records yields the same totals.
class TypeTokenCounter {
 public:
  void add_record(const InstanceRecord& rec);
  void merge(TypeTokenCounter&& other);

  bool empty() const { return per_type_.empty(); }
  std::size_t type_count() const { return per_type_.size(); }

  /// Flattened counts, sorted by (type, token).
  std::vector<TypeTokenCountEntry> entries() const;

 private:
  struct PerType {
    std::uint64_t instances = 0;
    std::unordered_map<std::string, std::uint64_t> counts;
  };
  std::unordered_map<std::string, PerType> per_type_;

  friend std::vector<TypeTokenProfile> consolidate_profiles(
      const TypeTokenCounter&, const struct ConsolidateOptions&);
};

/// Counts over whole records, sharded across `threads` workers and merged.
/// Output is identical for every thread count.
TypeTokenCounter count_type_tokens(std::span<const InstanceRecord> records,
                                   unsigned threads = 1);

struct ConsolidateOptions {
  std::uint64_t min_token_count = 5;
  std::uint64_t max_tokens_per_type = 30000;
};

/// Second aggregation stage. Per type: tokens with count below
/// min_token_count are dropped first; if more than max_tokens_per_type
/// survive, exactly max_tokens_per_type are kept, selected by descending
/// count with ascending token order breaking ties. Types left with no tokens
/// are omitted. Result is sorted by type.
std::vector<TypeTokenProfile> consolidate_profiles(const TypeTokenCounter& counts,
                                                   const ConsolidateOptions& opt = {});

// --- consolidated profile file -------------------------------------------
//
// One line per type, tab separated:
//   type-IRI \t token:count \t token:count ...
// with tokens ordered by (count desc, token asc). ':' and '%' inside a token
// are escaped as %3A and %25; tokens must not contain tabs.

std::string escape_token(std::string_view token);
std::string unescape_token(std::string_view field);

void write_profiles(std::ostream& out, std::span<const TypeTokenProfile> profiles);
void write_profiles_file(const std::string& path, std::span<const TypeTokenProfile> profiles);

std::vector<TypeTokenProfile> read_profiles(std::istream& in,
                                            std::string_view origin = "<stream>");
std::vector<TypeTokenProfile> read_profiles_file(const std::string& path);

// --- token type-frequency histogram ---------------------------------------

/// Ten equal bins over (0,1]; a token with type-frequency ratio r = k/N goes
/// to the highest bin whose upper bound is >= r, so 1 type of 10 lands in
/// the first bin and a token present in every type lands in the last.
struct FrequencyHistogram {
  std::array<std::uint64_t, 10> buckets{};
  std::uint64_t distinct_tokens = 0;
  std::uint64_t type_count = 0;
};

/// Throws std::invalid_argument on an empty profile set.
FrequencyHistogram frequency_histogram(std::span<const TypeTokenProfile> profiles);

}  // namespace typealign
