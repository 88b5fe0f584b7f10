#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace typealign {

struct SynthConfig {
  std::uint64_t types_per_kg = 20;
  std::uint64_t planted_pairs = 10;
  std::uint64_t instances_per_type = 50;
  std::uint64_t shared_vocab_size = 32;
  double noise_rate = 0.0;  // chance a token is swapped for a one-off distractor
  std::uint64_t seed = 1;

  void validate() const;  // throws std::invalid_argument
};

SynthConfig parse_synth_config(const std::map<std::string, std::string>& kv);
SynthConfig parse_synth_config_file(const std::string& path);

struct SynthOutputs {
  std::string kg_a;          // N-Triples, types + fields
  std::string kg_b;
  std::string sameas;        // N-Triples, owl:sameAs links
  std::string gt1;           // planted type pairs, TSV
  std::string gt3_accepted;  // planted targets keyed by source type, TSV
  std::string gt3_sources;   // every KG-A type, one per line
};

/// Writes the two graphs plus ground-truth files into `out_dir` (created if
/// absent). Deterministic: the same config yields byte-identical files.
SynthOutputs generate_synth(const SynthConfig& config, const std::string& out_dir);

}  // namespace typealign
