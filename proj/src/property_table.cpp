#include "typealign/property_table.hpp"

#include <algorithm>

#include "typealign/util.hpp"

namespace typealign {

std::string_view iri_local_name(std::string_view iri) {
  std::size_t pos = iri.find_last_of("/#");
  if (pos == std::string_view::npos) return iri;
  return iri.substr(pos + 1);
}

PropertyTableBuilder::PropertyTableBuilder(PropertyTableOptions opt)
    : opt_(std::move(opt)) {}

void PropertyTableBuilder::add(const Triple& t) {
  auto [it, inserted] = index_.try_emplace(t.subject, rows_.size());
  if (inserted) {
    rows_.emplace_back();
    rows_.back().subject = t.subject;
  }
  InstanceRecord& rec = rows_[it->second];

  if (t.predicate == opt_.type_predicate) {
    // Type assertions never reach value_fields; the label itself would
    // contaminate the token statistics it is meant to characterize.
    if (t.object_kind == ObjectKind::iri &&
        (!opt_.type_namespace_filter || t.object.starts_with(*opt_.type_namespace_filter))) {
      rec.types.push_back(t.object);
    }
    return;
  }
  if (t.object_kind == ObjectKind::iri) {
    rec.value_fields.emplace_back(iri_local_name(t.object));
  } else {
    rec.value_fields.push_back(t.object);
  }
}

std::vector<InstanceRecord> PropertyTableBuilder::take_records() {
  std::vector<InstanceRecord> out = std::move(rows_);
  rows_.clear();
  index_.clear();
  std::sort(out.begin(), out.end(),
            [](const InstanceRecord& a, const InstanceRecord& b) { return a.subject < b.subject; });
  for (InstanceRecord& rec : out) {
    std::sort(rec.types.begin(), rec.types.end());
    rec.types.erase(std::unique(rec.types.begin(), rec.types.end()), rec.types.end());
  }
  return out;
}

std::vector<InstanceRecord> build_property_table(std::span<const Triple> triples,
                                                 const PropertyTableOptions& opt) {
  PropertyTableBuilder builder(opt);
  for (const Triple& t : triples) builder.add(t);
  return builder.take_records();
}

std::vector<InstanceRecord> load_property_table(const std::vector<std::string>& paths,
                                                const PropertyTableOptions& opt,
                                                const ParseOptions& parse_opt,
                                                ParseTally* tally_out) {
  PropertyTableBuilder builder(opt);
  ParseTally tally =
      parse_ntriples_files(paths, parse_opt, [&](Triple&& t) { builder.add(t); });
  if (tally_out != nullptr) *tally_out = tally;
  return builder.take_records();
}

SameAsLoadResult load_sameas(const std::string& path, const SameAsOptions& opt) {
  SameAsLoadResult result;
  ParseOptions parse_opt{.strict = opt.strict};
  ParseTally tally = parse_ntriples_file(path, parse_opt, [&](Triple&& t) {
    if (t.predicate != opt.sameas_predicate) return;
    if (t.object_kind != ObjectKind::iri) {
      if (opt.strict) {
        throw ParseError(path + ": literal object on sameAs predicate: " + t.object);
      }
      ++result.skipped_literal_objects;
      return;
    }
    if (t.subject == t.object) {
      ++result.skipped_self_links;
      return;
    }
    SameAsLink link{std::move(t.subject), std::move(t.object)};
    if (opt.left_namespace && !link.left.starts_with(*opt.left_namespace) &&
        link.right.starts_with(*opt.left_namespace)) {
      std::swap(link.left, link.right);
    }
    result.links.push_back(std::move(link));
  });
  result.malformed_lines = tally.malformed_lines;
  std::sort(result.links.begin(), result.links.end());
  result.links.erase(std::unique(result.links.begin(), result.links.end()),
                     result.links.end());
  return result;
}

}  // namespace typealign
