#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pptdata/corpus_io.hpp"
#include "pptdata/grammar_gen.hpp"

namespace pptdata {

/// Tokens per optimizer step at the reference batch (32 sequences of 2048).
inline constexpr std::uint64_t kReferenceTokensPerStep = 32 * 2048;

struct DatasetEntry {
  std::string name;
  std::optional<LanguageSpec> spec;       // generated language
  std::optional<std::string> metamer_of;  // or: metamer of another dataset
  int metamer_order = 3;
  std::uint64_t tokens = 0;
};

/// A set of datasets to build in one go.
///
/// INI-style file; top-level keys are global defaults, each section is one
/// dataset:
///
///   output_dir = out
///   seed = 7
///   window_length = 2048
///
///   [shuffle64]
///   family = shuffle
///   k = 64
///   tokens = 30000000
///
///   [shuffle64-trigram]
///   metamer_of = shuffle64
///   order = 3
///   tokens = 30000000
struct PipelineConfig {
  std::vector<DatasetEntry> datasets;
  std::filesystem::path output_dir = ".";
  std::uint64_t seed = 0;
  std::uint32_t window_length = 2048;

  /// Throws ConfigError on duplicate names, zero budgets or dangling
  /// metamer references.
  void validate() const;
};

PipelineConfig parse_pipeline_config(std::istream& in);
PipelineConfig load_pipeline_config(const std::filesystem::path& path);

/// Generates the documents for `tokens` tokens of `spec` (whole documents;
/// Dyck and random documents are `max_length` long, ww documents are
/// generated until the budget is covered). Documents are produced on up to
/// `threads` workers; output does not depend on the thread count.
std::vector<TokenSeq> generate_documents(const LanguageSpec& spec, std::uint64_t tokens, unsigned threads = 1);

/// Generation parameters as recorded in a corpus manifest.
nlohmann::json spec_to_json(const LanguageSpec& spec);

/// Packs generated documents and fills the manifest's provenance fields.
PackedCorpus build_corpus(const LanguageSpec& spec, std::span<const TokenSeq> docs, std::uint32_t window_length);

}  // namespace pptdata
