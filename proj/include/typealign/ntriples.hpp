#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace typealign {

inline constexpr std::string_view kRdfTypeIri =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view kOwlSameAsIri =
    "http://www.w3.org/2002/07/owl#sameAs";

enum class ObjectKind : std::uint8_t { iri, literal };

/// One parsed statement. IRIs are stored without angle brackets; blank node
/// labels keep their "_:" prefix and are treated as opaque IRIs. Literal
/// objects hold the unescaped lexical form with any language tag or datatype
/// suffix stripped.
struct Triple {
  std::string subject;
  std::string predicate;
  std::string object;
  ObjectKind object_kind = ObjectKind::iri;

  friend bool operator==(const Triple&, const Triple&) = default;
};

struct IngestStats {
  std::uint64_t unique_subjects = 0;
  std::uint64_t unique_triples = 0;
  std::uint64_t unique_types = 0;
  std::uint64_t malformed_lines = 0;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class LineStatus { triple, blank, malformed };

/// Parses one N-Triples line. Blank and comment lines report
/// LineStatus::blank; `out` is filled only on LineStatus::triple.
LineStatus parse_ntriples_line(std::string_view line, Triple& out);

struct ParseOptions {
  bool strict = false;  // abort on the first malformed line
};

using TripleSink = std::function<void(Triple&&)>;

struct ParseTally {
  std::uint64_t triples = 0;
  std::uint64_t malformed_lines = 0;

  ParseTally& operator+=(const ParseTally& o) {
    triples += o.triples;
    malformed_lines += o.malformed_lines;
    return *this;
  }
};

/// Streams a file through `sink`, one well-formed triple at a time. Files
/// ending in .gz are decompressed on the fly. In strict mode the first
/// malformed line raises ParseError with file name and line number; in
/// lenient mode (default) malformed lines are counted and skipped.
ParseTally parse_ntriples_file(const std::string& path, const ParseOptions& opt,
                               const TripleSink& sink);

/// Same over an in-memory buffer; `origin` labels strict-mode errors.
ParseTally parse_ntriples_text(std::string_view text, const ParseOptions& opt,
                               const TripleSink& sink,
                               std::string_view origin = "<memory>");

/// Concatenates several N-Triples files into one triple sequence (the
/// two-file merge used for dumps that ship type assertions and facts
/// separately). Tallies accumulate across files.
ParseTally parse_ntriples_files(const std::vector<std::string>& paths,
                                const ParseOptions& opt, const TripleSink& sink);

/// Cross-line uniqueness counters behind IngestStats. Types are counted from
/// IRI objects of the configured type predicate, optionally restricted to a
/// namespace prefix.
class StatsAccumulator {
 public:
  explicit StatsAccumulator(std::string type_predicate = std::string(kRdfTypeIri),
                            std::optional<std::string> type_namespace_filter = {});

  void add(const Triple& t);
  void add_malformed(std::uint64_t lines) { malformed_ += lines; }

  IngestStats finish() const;

 private:
  std::string type_predicate_;
  std::optional<std::string> filter_;
  std::unordered_set<std::string> subjects_;
  std::unordered_set<std::string> triple_keys_;
  std::unordered_set<std::string> types_;
  std::uint64_t malformed_ = 0;
};

}  // namespace typealign
