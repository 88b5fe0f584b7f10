#include "typealign/synth.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <stdexcept>
#include <vector>

#include "typealign/config.hpp"
#include "typealign/evaluation.hpp"
#include "typealign/ntriples.hpp"
#include "typealign/util.hpp"

namespace typealign {

namespace {

constexpr std::string_view kNsA = "http://kg-a.example.org/";
constexpr std::string_view kNsB = "http://kg-b.example.org/";
constexpr std::size_t kTokensPerField = 8;

std::string type_iri(bool side_a, std::uint64_t i) {
  return std::string(side_a ? kNsA : kNsB) + "type/" + (side_a ? "T" : "U") +
         std::to_string(i);
}

std::string inst_iri(bool side_a, std::uint64_t type_idx, std::uint64_t n) {
  return std::string(side_a ? kNsA : kNsB) + "inst/" + (side_a ? "a" : "b") +
         std::to_string(type_idx) + "_" + std::to_string(n);
}

std::string field_pred(bool side_a, std::size_t j) {
  return std::string(side_a ? kNsA : kNsB) + "prop/field" + std::to_string(j);
}

std::vector<std::string> type_vocab(const SynthConfig& cfg, bool side_a, std::uint64_t i) {
  std::vector<std::string> vocab;
  vocab.reserve(cfg.shared_vocab_size);
  for (std::uint64_t v = 0; v < cfg.shared_vocab_size; ++v) {
    if (i < cfg.planted_pairs) {
      vocab.push_back("tok" + std::to_string(i * cfg.shared_vocab_size + v));
    } else {
      vocab.push_back(std::string(side_a ? "ua" : "ub") + std::to_string(i) + "x" +
                      std::to_string(v));
    }
  }
  return vocab;
}

double next_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::string distractor(std::mt19937_64& rng) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(rng()));
  return std::string("zz") + buf;
}

void emit_triple_iri(std::ostream& out, const std::string& s, std::string_view p,
                     const std::string& o) {
  out << '<' << s << "> <" << p << "> <" << o << "> .\n";
}

void emit_kg(std::ostream& out, const SynthConfig& cfg, bool side_a,
             std::mt19937_64& rng) {
  std::vector<std::string> tokens;
  for (std::uint64_t i = 0; i < cfg.types_per_kg; ++i) {
    std::string type = type_iri(side_a, i);
    std::vector<std::string> vocab = type_vocab(cfg, side_a, i);
    for (std::uint64_t n = 0; n < cfg.instances_per_type; ++n) {
      std::string subj = inst_iri(side_a, i, n);
      emit_triple_iri(out, subj, kRdfTypeIri, type);
      tokens.clear();
      for (const std::string& t : vocab) {
        tokens.push_back(next_double(rng) < cfg.noise_rate ? distractor(rng) : t);
      }
      for (std::size_t j = 0; j * kTokensPerField < tokens.size(); ++j) {
        std::string field;
        std::size_t end = std::min(tokens.size(), (j + 1) * kTokensPerField);
        for (std::size_t t = j * kTokensPerField; t < end; ++t) {
          if (!field.empty()) field += ' ';
          field += tokens[t];
        }
        out << '<' << subj << "> <" << field_pred(side_a, j) << "> \"" << field
            << "\" .\n";
      }
    }
  }
}

}  // namespace

void SynthConfig::validate() const {
  if (types_per_kg < 1 || planted_pairs < 1 || instances_per_type < 1 ||
      shared_vocab_size < 1) {
    throw std::invalid_argument("synth counts must all be at least 1");
  }
  if (planted_pairs > types_per_kg) {
    throw std::invalid_argument("planted_pairs cannot exceed types_per_kg");
  }
  if (!(noise_rate >= 0.0 && noise_rate <= 1.0)) {
    throw std::invalid_argument("noise_rate must lie in [0,1]");
  }
}

SynthConfig parse_synth_config(const std::map<std::string, std::string>& kv) {
  SynthConfig cfg;
  for (const auto& [key, value] : kv) {
    (void)value;
    if (key != "types_per_kg" && key != "planted_pairs" && key != "instances_per_type" &&
        key != "shared_vocab_size" && key != "noise_rate" && key != "seed") {
      throw DataError("unknown synth config key '" + key + "'");
    }
  }
  cfg.types_per_kg = config_u64(kv, "types_per_kg", cfg.types_per_kg);
  cfg.planted_pairs = config_u64(kv, "planted_pairs", cfg.planted_pairs);
  cfg.instances_per_type = config_u64(kv, "instances_per_type", cfg.instances_per_type);
  cfg.shared_vocab_size = config_u64(kv, "shared_vocab_size", cfg.shared_vocab_size);
  cfg.noise_rate = config_double(kv, "noise_rate", cfg.noise_rate);
  cfg.seed = config_u64(kv, "seed", cfg.seed);
  cfg.validate();
  return cfg;
}

SynthConfig parse_synth_config_file(const std::string& path) {
  return parse_synth_config(parse_key_value_file(path));
}

SynthOutputs generate_synth(const SynthConfig& config, const std::string& out_dir) {
  config.validate();
  std::filesystem::create_directories(out_dir);
  std::filesystem::path base(out_dir);

  SynthOutputs out;
  out.kg_a = (base / "kg_a.nt").string();
  out.kg_b = (base / "kg_b.nt").string();
  out.sameas = (base / "sameas.nt").string();
  out.gt1 = (base / "gt1.tsv").string();
  out.gt3_accepted = (base / "gt3.tsv").string();
  out.gt3_sources = (base / "gt3_sources.txt").string();

  std::mt19937_64 rng(config.seed);
  {
    std::ofstream f = open_output(out.kg_a);
    emit_kg(f, config, true, rng);
    if (!f) throw DataError("failed writing " + out.kg_a);
  }
  {
    std::ofstream f = open_output(out.kg_b);
    emit_kg(f, config, false, rng);
    if (!f) throw DataError("failed writing " + out.kg_b);
  }
  {
    std::ofstream f = open_output(out.sameas);
    for (std::uint64_t i = 0; i < config.planted_pairs; ++i) {
      for (std::uint64_t n = 0; n < config.instances_per_type; ++n) {
        emit_triple_iri(f, inst_iri(true, i, n), kOwlSameAsIri, inst_iri(false, i, n));
      }
    }
    if (!f) throw DataError("failed writing " + out.sameas);
  }

  TypePairVec planted;
  for (std::uint64_t i = 0; i < config.planted_pairs; ++i) {
    planted.emplace_back(type_iri(true, i), type_iri(false, i));
  }
  write_type_pairs_file(out.gt1, planted);

  ManualAlignmentGroundTruth gt3;
  for (const auto& [a, b] : planted) gt3.accepted[a].push_back(b);
  for (std::uint64_t i = 0; i < config.types_per_kg; ++i) {
    gt3.sampled_sources.push_back(type_iri(true, i));
  }
  write_manual_gt(out.gt3_accepted, out.gt3_sources, gt3);

  return out;
}

}  // namespace typealign
