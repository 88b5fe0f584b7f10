#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "typealign/ntriples.hpp"

namespace typealign {

/// One row of the logical property table: everything known about a subject.
/// `types` holds the type IRIs that passed the namespace filter, sorted and
/// unique. `value_fields` holds the object lexical forms of all non-type
/// triples in input order; IRI objects are reduced to their local name.
struct InstanceRecord {
  std::string subject;
  std::vector<std::string> types;
  std::vector<std::string> value_fields;

  friend bool operator==(const InstanceRecord&, const InstanceRecord&) = default;
};

struct PropertyTableOptions {
  std::string type_predicate{kRdfTypeIri};
  std::optional<std::string> type_namespace_filter;
};

/// Local name of an IRI: the substring after the last '/' or '#', the whole
/// IRI when neither occurs.
std::string_view iri_local_name(std::string_view iri);

/// Group-by-subject accumulator. Shards may each own a builder; the final
/// tables merge by record union (types set-merged, value fields
/// concatenated), which downstream set/count semantics make order-blind.
class PropertyTableBuilder {
 public:
  explicit PropertyTableBuilder(PropertyTableOptions opt = {});

  void add(const Triple& t);

  /// Consolidates into records sorted by subject, types sorted and deduped.
  /// The builder is empty afterwards.
  std::vector<InstanceRecord> take_records();

 private:
  PropertyTableOptions opt_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<InstanceRecord> rows_;
};

std::vector<InstanceRecord> build_property_table(std::span<const Triple> triples,
                                                 const PropertyTableOptions& opt = {});

/// Parses one or more N-Triples files straight into a property table.
/// `tally_out`, when given, receives the combined parse tally.
std::vector<InstanceRecord> load_property_table(const std::vector<std::string>& paths,
                                                const PropertyTableOptions& opt = {},
                                                const ParseOptions& parse_opt = {},
                                                ParseTally* tally_out = nullptr);

struct SameAsLink {
  std::string left;   // graph A instance
  std::string right;  // graph B instance

  auto operator<=>(const SameAsLink&) const = default;
};

struct SameAsOptions {
  std::string sameas_predicate{kOwlSameAsIri};
  /// When set, links are oriented so that `left` carries this prefix
  /// whenever exactly one side does.
  std::optional<std::string> left_namespace;
  bool strict = false;
};

struct SameAsLoadResult {
  std::vector<SameAsLink> links;  // sorted, unique
  std::uint64_t skipped_literal_objects = 0;
  std::uint64_t skipped_self_links = 0;
  std::uint64_t malformed_lines = 0;
};

SameAsLoadResult load_sameas(const std::string& path, const SameAsOptions& opt = {});

}  // namespace typealign
