#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "pptdata/types.hpp"

namespace pptdata {

inline constexpr std::uint32_t kCorpusFormatVersion = 1;
inline constexpr char kCorpusMagic[4] = {'P', 'P', 'T', 'C'};

/// Everything a consumer needs to interpret a packed token matrix.
struct Manifest {
  std::uint32_t format_version = kCorpusFormatVersion;
  std::string family;        // "dyck-shuffle", "ww", "metamer(3, dyck-shuffle)", ...
  nlohmann::json spec = nlohmann::json::object();  // generation parameters
  std::uint32_t vocab_size = 0;
  std::uint32_t window_length = 0;
  std::uint64_t total_tokens = 0;    // rows * window_length
  std::uint64_t dropped_tokens = 0;  // size of the discarded partial window
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> doc_offsets;  // stream offset where each document starts
  std::vector<std::uint8_t> truncated;     // per document, parallel to doc_offsets

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

nlohmann::json manifest_to_json(const Manifest& m);
Manifest manifest_from_json(const nlohmann::json& j);

/// Fixed-window token matrix stored row-major.
struct PackedCorpus {
  Manifest manifest;
  std::vector<std::uint16_t> tokens;

  std::uint64_t rows() const {
    return manifest.window_length ? tokens.size() / manifest.window_length : 0;
  }
  std::span<const std::uint16_t> row(std::uint64_t r) const {
    return {tokens.data() + r * manifest.window_length, manifest.window_length};
  }
  std::size_t num_documents() const { return manifest.doc_offsets.size(); }

  friend bool operator==(const PackedCorpus&, const PackedCorpus&) = default;
};

/// Concatenates documents with no separator and cuts the stream into
/// windows of `window_length` tokens. The final partial window is dropped
/// and its size recorded in `manifest.dropped_tokens`. Documents that start
/// inside the dropped tail are not listed in the manifest.
///
/// Fills vocab_size, window_length, total_tokens, dropped_tokens,
/// doc_offsets and truncated; the caller owns family, spec and seed.
PackedCorpus pack(std::span<const TokenSeq> docs, std::uint32_t window_length);

/// Splits the packed stream back into documents at the recorded offsets. The
/// last document may be shorter than generated if it ran into the dropped tail.
std::vector<TokenSeq> unpack(const PackedCorpus& c);

/// Layout (little-endian):
///   "PPTC" | u32 version | u64 manifest_len | manifest JSON |
///   u64 rows | u32 window_length | rows*window_length u16 tokens | u32 crc32
/// The CRC covers every byte before it. The file is written to a temporary
/// sibling and renamed into place.
void write_corpus(const PackedCorpus& c, const std::filesystem::path& path);
std::vector<std::uint8_t> encode_corpus(const PackedCorpus& c);

PackedCorpus read_corpus(const std::filesystem::path& path);
PackedCorpus decode_corpus(std::span<const std::uint8_t> bytes);

void write_manifest(const Manifest& m, const std::filesystem::path& path);

struct DepthProfile {
  std::vector<std::uint64_t> histogram;  // histogram[d] = positions with depth d
  std::uint64_t positions = 0;
  std::uint32_t max_depth = 0;
  double mean_depth = 0.0;

  double frequency(std::size_t depth) const {
    return depth < histogram.size() && positions ? double(histogram[depth]) / double(positions) : 0.0;
  }
};

/// Depth after every token, resetting at document boundaries.
DepthProfile depth_stats(const PackedCorpus& c, std::uint32_t k);
/// Same aggregation over an unpacked document stream.
DepthProfile depth_stats(std::span<const TokenSeq> docs, std::uint32_t k);

struct CorpusReport {
  std::uint64_t total_tokens = 0;
  std::uint64_t rows = 0;
  std::uint64_t dropped_tokens = 0;
  std::vector<std::uint64_t> vocab_usage;
  std::uint64_t vocab_used = 0;
  std::uint64_t documents = 0;
  std::uint64_t min_doc_length = 0;
  std::uint64_t max_doc_length = 0;
  double mean_doc_length = 0.0;
  double truncation_rate = 0.0;
  double unigram_entropy_bits = 0.0;
};

CorpusReport corpus_report(const PackedCorpus& c);
nlohmann::json report_to_json(const CorpusReport& r);

/// Shannon entropy in bits of a count vector.
double entropy_bits(std::span<const std::uint64_t> counts);

}  // namespace pptdata
