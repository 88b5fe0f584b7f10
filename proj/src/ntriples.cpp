#include "typealign/ntriples.hpp"

#include <zlib.h>

#include <cstring>

#include "typealign/util.hpp"

namespace typealign {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t'; }

void skip_ws(std::string_view& s) {
  while (!s.empty() && is_ws(s.front())) s.remove_prefix(1);
}

// Consumes "<...>" and stores the content. IRIs must be non-empty and free
// of whitespace; anything else on this subset is a broken line.
bool parse_iriref(std::string_view& s, std::string& out) {
  if (s.empty() || s.front() != '<') return false;
  std::size_t end = s.find('>');
  if (end == std::string_view::npos) return false;
  std::string_view content = s.substr(1, end - 1);
  if (content.empty()) return false;
  if (content.find_first_of(" \t") != std::string_view::npos) return false;
  out.assign(content);
  s.remove_prefix(end + 1);
  return true;
}

bool is_blank_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

// Consumes "_:label"; the label is kept verbatim, prefix included, so blank
// nodes travel through the pipeline as opaque IRIs.
bool parse_blank(std::string_view& s, std::string& out) {
  if (s.size() < 3 || s[0] != '_' || s[1] != ':') return false;
  std::size_t i = 2;
  while (i < s.size() && is_blank_label_char(s[i])) ++i;
  if (i == 2) return false;
  out.assign(s.substr(0, i));
  s.remove_prefix(i);
  return true;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp <= 0x7F) {
    out.push_back(static_cast<char>(cp));
  } else if (cp <= 0x7FF) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp <= 0xFFFF) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool parse_hex(std::string_view s, std::size_t n, std::uint32_t& out) {
  if (s.size() < n) return false;
  std::uint32_t v = 0;
  for (std::size_t i = 0; i < n; ++i) {
    char c = s[i];
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint32_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint32_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint32_t>(c - 'A' + 10);
    else return false;
  }
  out = v;
  return true;
}

// Consumes a quoted literal with standard escapes, then strips an optional
// language tag or datatype suffix. `out` receives the bare lexical form.
bool parse_literal(std::string_view& s, std::string& out) {
  if (s.empty() || s.front() != '"') return false;
  s.remove_prefix(1);
  out.clear();
  while (true) {
    if (s.empty()) return false;  // unterminated
    char c = s.front();
    s.remove_prefix(1);
    if (c == '"') break;
    if (c != '\\') {
      out.push_back(c);
      continue;
    }
    if (s.empty()) return false;
    char esc = s.front();
    s.remove_prefix(1);
    switch (esc) {
      case 't': out.push_back('\t'); break;
      case 'b': out.push_back('\b'); break;
      case 'n': out.push_back('\n'); break;
      case 'r': out.push_back('\r'); break;
      case 'f': out.push_back('\f'); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case 'u': {
        std::uint32_t cp = 0;
        if (!parse_hex(s, 4, cp)) return false;
        s.remove_prefix(4);
        append_utf8(out, cp);
        break;
      }
      case 'U': {
        std::uint32_t cp = 0;
        if (!parse_hex(s, 8, cp)) return false;
        s.remove_prefix(8);
        append_utf8(out, cp);
        break;
      }
      default:
        return false;
    }
  }
  if (!s.empty() && s.front() == '@') {
    s.remove_prefix(1);
    std::size_t i = 0;
    while (i < s.size() && ((s[i] >= 'a' && s[i] <= 'z') || (s[i] >= 'A' && s[i] <= 'Z') ||
                            (s[i] >= '0' && s[i] <= '9') || s[i] == '-')) {
      ++i;
    }
    if (i == 0) return false;
    s.remove_prefix(i);
  } else if (s.size() >= 2 && s[0] == '^' && s[1] == '^') {
    s.remove_prefix(2);
    std::string dt;
    if (!parse_iriref(s, dt)) return false;
  }
  return true;
}

}  // namespace

LineStatus parse_ntriples_line(std::string_view line, Triple& out) {
  std::string_view s = line;
  skip_ws(s);
  if (s.empty() || s.front() == '#') return LineStatus::blank;

  // subject
  if (s.front() == '<') {
    if (!parse_iriref(s, out.subject)) return LineStatus::malformed;
  } else if (s.front() == '_') {
    if (!parse_blank(s, out.subject)) return LineStatus::malformed;
  } else {
    return LineStatus::malformed;
  }
  if (s.empty() || !is_ws(s.front())) return LineStatus::malformed;
  skip_ws(s);

  // predicate
  if (!parse_iriref(s, out.predicate)) return LineStatus::malformed;
  if (s.empty() || !is_ws(s.front())) return LineStatus::malformed;
  skip_ws(s);

  // object
  if (s.empty()) return LineStatus::malformed;
  if (s.front() == '<') {
    if (!parse_iriref(s, out.object)) return LineStatus::malformed;
    out.object_kind = ObjectKind::iri;
  } else if (s.front() == '_') {
    if (!parse_blank(s, out.object)) return LineStatus::malformed;
    out.object_kind = ObjectKind::iri;
  } else if (s.front() == '"') {
    if (!parse_literal(s, out.object)) return LineStatus::malformed;
    out.object_kind = ObjectKind::literal;
  } else {
    return LineStatus::malformed;
  }

  skip_ws(s);
  if (s.empty() || s.front() != '.') return LineStatus::malformed;
  s.remove_prefix(1);
  skip_ws(s);
  if (!s.empty()) return LineStatus::malformed;
  return LineStatus::triple;
}

namespace {

// Line reader over gzopen, which reads uncompressed files transparently, so
// plain and .gz inputs share one path.
class LineReader {
 public:
  explicit LineReader(const std::string& path) : path_(path) {
    file_ = gzopen(path.c_str(), "rb");
    if (file_ == nullptr) throw DataError("cannot open for reading: " + path);
    gzbuffer(file_, 1 << 18);
  }

  LineReader(const LineReader&) = delete;
  LineReader& operator=(const LineReader&) = delete;

  ~LineReader() {
    if (file_ != nullptr) gzclose(file_);
  }

  bool next(std::string& line) {
    line.clear();
    char buf[1 << 16];
    while (true) {
      if (gzgets(file_, buf, sizeof buf) == nullptr) {
        int errnum = Z_OK;
        const char* msg = gzerror(file_, &errnum);
        if (errnum != Z_OK && errnum != Z_STREAM_END) {
          throw DataError(path_ + ": " + (msg != nullptr ? msg : "read error"));
        }
        return !line.empty();
      }
      std::size_t n = std::strlen(buf);
      bool saw_newline = n > 0 && buf[n - 1] == '\n';
      if (saw_newline) --n;
      line.append(buf, n);
      if (saw_newline) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
      }
    }
  }

 private:
  std::string path_;
  gzFile file_ = nullptr;
};

ParseTally run_line(std::string_view line, std::uint64_t line_no,
                    std::string_view origin, const ParseOptions& opt,
                    const TripleSink& sink, Triple& scratch) {
  ParseTally tally;
  switch (parse_ntriples_line(line, scratch)) {
    case LineStatus::triple:
      ++tally.triples;
      sink(std::move(scratch));
      scratch = Triple{};
      break;
    case LineStatus::blank:
      break;
    case LineStatus::malformed:
      if (opt.strict) {
        throw ParseError(std::string(origin) + ":" + std::to_string(line_no) +
                         ": malformed N-Triples line");
      }
      ++tally.malformed_lines;
      break;
  }
  return tally;
}

}  // namespace

ParseTally parse_ntriples_file(const std::string& path, const ParseOptions& opt,
                               const TripleSink& sink) {
  LineReader reader(path);
  ParseTally tally;
  Triple scratch;
  std::string line;
  std::uint64_t line_no = 0;
  while (reader.next(line)) {
    ++line_no;
    tally += run_line(line, line_no, path, opt, sink, scratch);
  }
  return tally;
}

ParseTally parse_ntriples_text(std::string_view text, const ParseOptions& opt,
                               const TripleSink& sink, std::string_view origin) {
  ParseTally tally;
  Triple scratch;
  std::uint64_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      if (start == text.size()) break;
      end = text.size();
    }
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    tally += run_line(line, line_no, origin, opt, sink, scratch);
    start = end + 1;
  }
  return tally;
}

ParseTally parse_ntriples_files(const std::vector<std::string>& paths,
                                const ParseOptions& opt, const TripleSink& sink) {
  ParseTally tally;
  for (const std::string& p : paths) {
    tally += parse_ntriples_file(p, opt, sink);
  }
  return tally;
}

StatsAccumulator::StatsAccumulator(std::string type_predicate,
                                   std::optional<std::string> type_namespace_filter)
    : type_predicate_(std::move(type_predicate)),
      filter_(std::move(type_namespace_filter)) {}

void StatsAccumulator::add(const Triple& t) {
  subjects_.insert(t.subject);

  // Length-prefixed key: literals may contain any byte after unescaping.
  std::string key;
  key.reserve(t.subject.size() + t.predicate.size() + t.object.size() + 24);
  key += std::to_string(t.subject.size());
  key += ':';
  key += t.subject;
  key += std::to_string(t.predicate.size());
  key += ':';
  key += t.predicate;
  key += t.object_kind == ObjectKind::iri ? 'I' : 'L';
  key += t.object;
  triple_keys_.insert(std::move(key));

  if (t.object_kind == ObjectKind::iri && t.predicate == type_predicate_) {
    if (!filter_ || t.object.starts_with(*filter_)) types_.insert(t.object);
  }
}

IngestStats StatsAccumulator::finish() const {
  IngestStats stats;
  stats.unique_subjects = subjects_.size();
  stats.unique_triples = triple_keys_.size();
  stats.unique_types = types_.size();
  stats.malformed_lines = malformed_;
  return stats;
}

}  // namespace typealign
