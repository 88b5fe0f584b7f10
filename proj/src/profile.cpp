#include "typealign/profile.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "typealign/tokenize.hpp"
#include "typealign/util.hpp"

namespace typealign {

void TypeTokenCounter::add_record(const InstanceRecord& rec) {
  if (rec.types.empty()) return;
  std::vector<std::string> tokens = tokenize_instance(rec);
  for (const std::string& type : rec.types) {
    PerType& entry = per_type_[type];
    ++entry.instances;
    for (const std::string& token : tokens) {
      ++entry.counts[token];
    }
  }
}

void TypeTokenCounter::merge(TypeTokenCounter&& other) {
  for (auto& [type, incoming] : other.per_type_) {
    auto [it, inserted] = per_type_.try_emplace(type, std::move(incoming));
    if (!inserted) {
      PerType& mine = it->second;
      mine.instances += incoming.instances;
      for (auto& [token, count] : incoming.counts) {
        mine.counts[token] += count;
      }
    }
  }
  other.per_type_.clear();
}

std::vector<TypeTokenCountEntry> TypeTokenCounter::entries() const {
  std::vector<TypeTokenCountEntry> out;
  for (const auto& [type, entry] : per_type_) {
    for (const auto& [token, count] : entry.counts) {
      out.push_back({type, token, count});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TypeTokenCounter count_type_tokens(std::span<const InstanceRecord> records,
                                   unsigned threads) {
  if (threads <= 1 || records.size() < 2) {
    TypeTokenCounter counter;
    for (const InstanceRecord& rec : records) counter.add_record(rec);
    return counter;
  }
  std::size_t shards = std::min<std::size_t>(threads, records.size());
  std::vector<TypeTokenCounter> parts(shards);
  {
    std::vector<std::jthread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        std::size_t begin = records.size() * s / shards;
        std::size_t end = records.size() * (s + 1) / shards;
        for (std::size_t i = begin; i < end; ++i) parts[s].add_record(records[i]);
      });
    }
  }
  TypeTokenCounter merged = std::move(parts.front());
  for (std::size_t s = 1; s < shards; ++s) merged.merge(std::move(parts[s]));
  return merged;
}

std::vector<TypeTokenProfile> consolidate_profiles(const TypeTokenCounter& counts,
                                                   const ConsolidateOptions& opt) {
  if (opt.min_token_count < 1) throw std::invalid_argument("min_token_count must be >= 1");
  if (opt.max_tokens_per_type < 1) throw std::invalid_argument("max_tokens_per_type must be >= 1");

  std::vector<TypeTokenProfile> out;
  out.reserve(counts.per_type_.size());
  for (const auto& [type, entry] : counts.per_type_) {
    std::vector<TokenCount> kept;
    kept.reserve(entry.counts.size());
    for (const auto& [token, count] : entry.counts) {
      if (count >= opt.min_token_count) kept.push_back({token, count});
    }
    if (kept.empty()) continue;
    if (kept.size() > opt.max_tokens_per_type) {
      std::sort(kept.begin(), kept.end(), [](const TokenCount& a, const TokenCount& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.token < b.token;
      });
      kept.resize(opt.max_tokens_per_type);
    }
    std::sort(kept.begin(), kept.end(),
              [](const TokenCount& a, const TokenCount& b) { return a.token < b.token; });
    out.push_back({type, std::move(kept), entry.instances});
  }
  std::sort(out.begin(), out.end(), [](const TypeTokenProfile& a, const TypeTokenProfile& b) {
    return a.type < b.type;
  });
  return out;
}

std::string escape_token(std::string_view token) {
  std::string out;
  out.reserve(token.size());
  for (char c : token) {
    if (c == '%') {
      out += "%25";
    } else if (c == ':') {
      out += "%3A";
    } else if (c == '\t' || c == '\n' || c == '\r') {
      throw std::invalid_argument("token contains whitespace control byte");
    } else {
      out.push_back(c);
    }
  }
  return out;
}

std::string unescape_token(std::string_view field) {
  std::string out;
  out.reserve(field.size());
  for (std::size_t i = 0; i < field.size(); ++i) {
    if (field[i] == '%' && i + 2 < field.size()) {
      std::string_view code = field.substr(i + 1, 2);
      if (code == "25") {
        out.push_back('%');
        i += 2;
        continue;
      }
      if (code == "3A" || code == "3a") {
        out.push_back(':');
        i += 2;
        continue;
      }
    }
    out.push_back(field[i]);
  }
  return out;
}

namespace {

// File order: count descending, token ascending.
std::vector<const TokenCount*> file_order(const TypeTokenProfile& profile) {
  std::vector<const TokenCount*> order;
  order.reserve(profile.tokens.size());
  for (const TokenCount& tc : profile.tokens) order.push_back(&tc);
  std::sort(order.begin(), order.end(), [](const TokenCount* a, const TokenCount* b) {
    if (a->count != b->count) return a->count > b->count;
    return a->token < b->token;
  });
  return order;
}

}  // namespace

void write_profiles(std::ostream& out, std::span<const TypeTokenProfile> profiles) {
  std::vector<const TypeTokenProfile*> order;
  order.reserve(profiles.size());
  for (const TypeTokenProfile& p : profiles) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const TypeTokenProfile* a, const TypeTokenProfile* b) { return a->type < b->type; });
  for (const TypeTokenProfile* p : order) {
    out << p->type;
    for (const TokenCount* tc : file_order(*p)) {
      out << '\t' << escape_token(tc->token) << ':' << tc->count;
    }
    out << '\n';
  }
}

void write_profiles_file(const std::string& path, std::span<const TypeTokenProfile> profiles) {
  std::ofstream out = open_output(path);
  write_profiles(out, profiles);
  if (!out) throw DataError("write failed: " + path);
}

std::vector<TypeTokenProfile> read_profiles(std::istream& in, std::string_view origin) {
  std::vector<TypeTokenProfile> out;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string_view> fields = split(line, '\t');
    auto fail = [&](const char* what) -> ParseError {
      return ParseError(std::string(origin) + ":" + std::to_string(line_no) + ": " + what);
    };
    if (fields[0].empty()) throw fail("empty type IRI");
    TypeTokenProfile profile;
    profile.type.assign(fields[0]);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      std::string_view field = fields[i];
      std::size_t colon = field.rfind(':');
      if (colon == std::string_view::npos || colon == 0) throw fail("expected token:count");
      std::string token = unescape_token(field.substr(0, colon));
      std::string_view digits = field.substr(colon + 1);
      std::uint64_t count = 0;
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), count);
      if (ec != std::errc() || ptr != digits.data() + digits.size() || count == 0) {
        throw fail("bad token count");
      }
      profile.tokens.push_back({std::move(token), count});
    }
    if (profile.tokens.empty()) throw fail("type line with no tokens");
    std::sort(profile.tokens.begin(), profile.tokens.end(),
              [](const TokenCount& a, const TokenCount& b) { return a.token < b.token; });
    for (std::size_t i = 1; i < profile.tokens.size(); ++i) {
      if (profile.tokens[i - 1].token == profile.tokens[i].token) throw fail("duplicate token");
    }
    out.push_back(std::move(profile));
  }
  std::sort(out.begin(), out.end(), [](const TypeTokenProfile& a, const TypeTokenProfile& b) {
    return a.type < b.type;
  });
  for (std::size_t i = 1; i < out.size(); ++i) {
    if (out[i - 1].type == out[i].type) {
      throw ParseError(std::string(origin) + ": duplicate type line: " + out[i].type);
    }
  }
  return out;
}

std::vector<TypeTokenProfile> read_profiles_file(const std::string& path) {
  require_file(path);
  std::ifstream in = open_input(path);
  return read_profiles(in, path);
}

FrequencyHistogram frequency_histogram(std::span<const TypeTokenProfile> profiles) {
  if (profiles.empty()) throw std::invalid_argument("frequency_histogram: no profiles");
  std::unordered_map<std::string_view, std::uint64_t> token_types;
  for (const TypeTokenProfile& p : profiles) {
    for (const TokenCount& tc : p.tokens) ++token_types[tc.token];
  }
  FrequencyHistogram hist;
  hist.type_count = profiles.size();
  hist.distinct_tokens = token_types.size();
  const std::uint64_t n = profiles.size();
  for (const auto& [token, k] : token_types) {
    // Smallest b with k/n <= (b+1)/10, in exact integer arithmetic.
    std::uint64_t b = (k * 10 + n - 1) / n - 1;
    ++hist.buckets[b > 9 ? 9 : b];
  }
  return hist;
}

}  // namespace typealign
