#include "pptdata/corpus_io.hpp"

#include <zlib.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>

#include "pptdata/grammar_gen.hpp"

namespace pptdata {

nlohmann::json manifest_to_json(const Manifest& m) {
  nlohmann::json truncated = nlohmann::json::array();
  for (auto t : m.truncated) truncated.push_back(t != 0);
  return {
      {"format_version", m.format_version},
      {"family", m.family},
      {"spec", m.spec},
      {"vocab_size", m.vocab_size},
      {"window_length", m.window_length},
      {"total_tokens", m.total_tokens},
      {"dropped_tokens", m.dropped_tokens},
      {"seed", m.seed},
      {"doc_offsets", m.doc_offsets},
      {"truncated", truncated},
  };
}

Manifest manifest_from_json(const nlohmann::json& j) {
  try {
    Manifest m;
    m.format_version = j.at("format_version").get<std::uint32_t>();
    m.family = j.at("family").get<std::string>();
    m.spec = j.at("spec");
    m.vocab_size = j.at("vocab_size").get<std::uint32_t>();
    m.window_length = j.at("window_length").get<std::uint32_t>();
    m.total_tokens = j.at("total_tokens").get<std::uint64_t>();
    m.dropped_tokens = j.at("dropped_tokens").get<std::uint64_t>();
    m.seed = j.at("seed").get<std::uint64_t>();
    m.doc_offsets = j.at("doc_offsets").get<std::vector<std::uint64_t>>();
    for (const auto& t : j.at("truncated")) m.truncated.push_back(t.get<bool>() ? 1 : 0);
    if (m.truncated.size() != m.doc_offsets.size())
      throw FormatError("manifest: truncated flags and doc_offsets differ in length");
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
}

PackedCorpus pack(std::span<const TokenSeq> docs, std::uint32_t window_length) {
  if (window_length < 1) throw InvalidArgument("window_length must be >= 1");
  PackedCorpus c;
  Manifest& m = c.manifest;
  m.window_length = window_length;
  if (!docs.empty()) m.vocab_size = docs.front().vocab_size;
  if (m.vocab_size > (1u << 16)) throw FormatError("vocab_size exceeds the 16-bit token width");

  std::uint64_t stream_len = 0;
  for (const auto& d : docs) {
    if (d.vocab_size != m.vocab_size)
      throw InvalidArgument("vocabulary mismatch across documents (" + std::to_string(d.vocab_size) +
                            " vs " + std::to_string(m.vocab_size) + ")");
    stream_len += d.size();
  }
  const std::uint64_t kept = stream_len / window_length * window_length;
  m.total_tokens = kept;
  m.dropped_tokens = stream_len - kept;
  c.tokens.reserve(kept);

  std::uint64_t offset = 0;
  for (const auto& d : docs) {
    if (offset >= kept) break;
    m.doc_offsets.push_back(offset);
    m.truncated.push_back(d.truncated ? 1 : 0);
    const std::uint64_t take = std::min<std::uint64_t>(d.size(), kept - offset);
    for (std::uint64_t i = 0; i < take; ++i) {
      if (d.tokens[i] >= m.vocab_size) throw InvalidArgument("token exceeds declared vocab_size");
      c.tokens.push_back(static_cast<std::uint16_t>(d.tokens[i]));
    }
    offset += d.size();
  }
  return c;
}

std::vector<TokenSeq> unpack(const PackedCorpus& c) {
  const auto& m = c.manifest;
  std::vector<TokenSeq> docs;
  docs.reserve(m.doc_offsets.size());
  for (std::size_t d = 0; d < m.doc_offsets.size(); ++d) {
    const std::uint64_t begin = m.doc_offsets[d];
    const std::uint64_t end = d + 1 < m.doc_offsets.size() ? m.doc_offsets[d + 1] : c.tokens.size();
    if (begin > end || end > c.tokens.size()) throw FormatError("document offsets out of range");
    TokenSeq doc;
    doc.vocab_size = m.vocab_size;
    doc.truncated = m.truncated[d] != 0;
    doc.tokens.assign(c.tokens.begin() + begin, c.tokens.begin() + end);
    docs.push_back(std::move(doc));
  }
  return docs;
}

namespace {

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  for (std::size_t i = 0; i < sizeof(T); ++i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

template <typename T>
T get_le(std::span<const std::uint8_t> bytes, std::size_t& pos) {
  if (bytes.size() - pos < sizeof(T)) throw FormatError("corpus file is truncated");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(T(bytes[pos + i]) << (8 * i));
  pos += sizeof(T);
  return value;
}

std::uint32_t crc_of(std::span<const std::uint8_t> bytes) {
  uLong crc = crc32(0L, Z_NULL, 0);
  // zlib takes uInt lengths; feed in chunks.
  constexpr std::size_t kChunk = 1u << 30;
  for (std::size_t off = 0; off < bytes.size(); off += kChunk) {
    const std::size_t n = std::min(kChunk, bytes.size() - off);
    crc = crc32(crc, bytes.data() + off, static_cast<uInt>(n));
  }
  return static_cast<std::uint32_t>(crc);
}

void write_bytes_atomic(std::span<const std::uint8_t> bytes, const std::filesystem::path& path) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
}

}  // namespace

std::vector<std::uint8_t> encode_corpus(const PackedCorpus& c) {
  const auto& m = c.manifest;
  if (m.vocab_size > (1u << 16)) throw FormatError("vocab_size exceeds the 16-bit token width");
  if (m.window_length == 0 && !c.tokens.empty()) throw FormatError("window_length is zero");
  if (m.window_length && c.tokens.size() % m.window_length != 0)
    throw FormatError("token count is not a multiple of window_length");

  const std::string manifest = manifest_to_json(m).dump();
  std::vector<std::uint8_t> out;
  out.reserve(4 + 4 + 8 + manifest.size() + 12 + 2 * c.tokens.size() + 4);
  out.insert(out.end(), std::begin(kCorpusMagic), std::end(kCorpusMagic));
  put_le<std::uint32_t>(out, m.format_version);
  put_le<std::uint64_t>(out, manifest.size());
  out.insert(out.end(), manifest.begin(), manifest.end());
  put_le<std::uint64_t>(out, c.rows());
  put_le<std::uint32_t>(out, m.window_length);
  for (std::uint16_t t : c.tokens) put_le<std::uint16_t>(out, t);
  put_le<std::uint32_t>(out, crc_of(out));
  return out;
}

PackedCorpus decode_corpus(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 + 4 + 8 + 8 + 4 + 4) throw FormatError("corpus file is truncated");
  if (!std::equal(std::begin(kCorpusMagic), std::end(kCorpusMagic), bytes.begin(),
                  [](char a, std::uint8_t b) { return static_cast<std::uint8_t>(a) == b; }))
    throw FormatError("bad magic: not a packed corpus file");

  const auto body = bytes.first(bytes.size() - 4);
  std::size_t footer_pos = bytes.size() - 4;
  const auto stored_crc = get_le<std::uint32_t>(bytes, footer_pos);
  if (crc_of(body) != stored_crc) throw FormatError("checksum mismatch: corpus file is corrupt or truncated");

  std::size_t pos = 4;
  const auto version = get_le<std::uint32_t>(body, pos);
  if (version != kCorpusFormatVersion)
    throw FormatError("unsupported corpus format version " + std::to_string(version));
  const auto manifest_len = get_le<std::uint64_t>(body, pos);
  if (manifest_len > body.size() - pos) throw FormatError("corpus file is truncated");
  const std::string manifest_text(reinterpret_cast<const char*>(body.data() + pos), manifest_len);
  pos += manifest_len;

  PackedCorpus c;
  try {
    c.manifest = manifest_from_json(nlohmann::json::parse(manifest_text));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("manifest: ") + e.what());
  }
  const auto rows = get_le<std::uint64_t>(body, pos);
  const auto window = get_le<std::uint32_t>(body, pos);
  if (window != c.manifest.window_length) throw FormatError("window_length disagrees with manifest");
  if (window == 0 && rows != 0) throw FormatError("window_length is zero");
  const std::uint64_t remaining = (body.size() - pos) / 2;
  if ((body.size() - pos) % 2 != 0 || (window && rows > remaining / window) || rows * window != remaining)
    throw FormatError("token region size disagrees with header");
  if (rows * window != c.manifest.total_tokens) throw FormatError("total_tokens disagrees with header");

  c.tokens.resize(remaining);
  for (auto& t : c.tokens) t = get_le<std::uint16_t>(body, pos);
  return c;
}

void write_corpus(const PackedCorpus& c, const std::filesystem::path& path) {
  write_bytes_atomic(encode_corpus(c), path);
}

PackedCorpus read_corpus(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_corpus(bytes);
}

void write_manifest(const Manifest& m, const std::filesystem::path& path) {
  const std::string text = manifest_to_json(m).dump(2) + "\n";
  write_bytes_atomic({reinterpret_cast<const std::uint8_t*>(text.data()), text.size()}, path);
}

namespace {

void finish_profile(DepthProfile& p) {
  double weighted = 0.0;
  for (std::size_t d = 0; d < p.histogram.size(); ++d) {
    weighted += double(d) * double(p.histogram[d]);
    if (p.histogram[d]) p.max_depth = static_cast<std::uint32_t>(d);
  }
  p.mean_depth = p.positions ? weighted / double(p.positions) : 0.0;
}

template <typename Tok>
void accumulate_depths(std::span<const Tok> doc, std::uint32_t k, DepthProfile& p) {
  std::int64_t depth = 0;
  for (Tok t : doc) {
    if (t >= 2 * k) throw InvalidArgument("token outside bracket vocabulary");
    depth += t < k ? 1 : -1;
    if (depth < 0) throw FormatError("negative depth: not a Dyck-family document");
    if (static_cast<std::size_t>(depth) >= p.histogram.size()) p.histogram.resize(depth + 1, 0);
    ++p.histogram[depth];
    ++p.positions;
  }
}

}  // namespace

DepthProfile depth_stats(const PackedCorpus& c, std::uint32_t k) {
  const auto& m = c.manifest;
  if (m.family != family_name(Family::DyckNested) && m.family != family_name(Family::DyckShuffle))
    throw InvalidArgument("depth_stats requires a Dyck-family corpus, got '" + m.family + "'");
  if (k < 1 || m.vocab_size != 2 * k) throw InvalidArgument("k does not match the corpus vocabulary");

  DepthProfile p;
  const std::span<const std::uint16_t> stream(c.tokens);
  for (std::size_t d = 0; d < m.doc_offsets.size(); ++d) {
    const std::uint64_t begin = m.doc_offsets[d];
    const std::uint64_t end = d + 1 < m.doc_offsets.size() ? m.doc_offsets[d + 1] : stream.size();
    accumulate_depths(stream.subspan(begin, end - begin), k, p);
  }
  finish_profile(p);
  if (m.spec.contains("max_depth") && p.max_depth > m.spec["max_depth"].get<std::uint32_t>())
    throw FormatError("observed depth exceeds the manifest's max_depth");
  return p;
}

DepthProfile depth_stats(std::span<const TokenSeq> docs, std::uint32_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  DepthProfile p;
  for (const auto& d : docs) accumulate_depths(std::span<const Token>(d.tokens), k, p);
  finish_profile(p);
  return p;
}

double entropy_bits(std::span<const std::uint64_t> counts) {
  double total = 0.0;
  for (auto c : counts) total += double(c);
  if (total == 0.0) return 0.0;
  double h = 0.0;
  for (auto c : counts) {
    if (!c) continue;
    const double p = double(c) / total;
    h -= p * std::log2(p);
  }
  return h;
}

CorpusReport corpus_report(const PackedCorpus& c) {
  const auto& m = c.manifest;
  CorpusReport r;
  r.total_tokens = c.tokens.size();
  r.rows = c.rows();
  r.dropped_tokens = m.dropped_tokens;
  r.vocab_usage.assign(m.vocab_size, 0);
  for (auto t : c.tokens) {
    if (t >= r.vocab_usage.size()) r.vocab_usage.resize(t + 1, 0);
    ++r.vocab_usage[t];
  }
  r.vocab_used = static_cast<std::uint64_t>(
      std::count_if(r.vocab_usage.begin(), r.vocab_usage.end(), [](auto n) { return n > 0; }));
  r.unigram_entropy_bits = entropy_bits(r.vocab_usage);

  r.documents = m.doc_offsets.size();
  if (r.documents) {
    r.min_doc_length = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t truncated = 0;
    for (std::size_t d = 0; d < r.documents; ++d) {
      const std::uint64_t end = d + 1 < r.documents ? m.doc_offsets[d + 1] : c.tokens.size();
      const std::uint64_t len = end - m.doc_offsets[d];
      r.min_doc_length = std::min(r.min_doc_length, len);
      r.max_doc_length = std::max(r.max_doc_length, len);
      truncated += m.truncated[d] ? 1 : 0;
    }
    r.mean_doc_length = double(c.tokens.size()) / double(r.documents);
    r.truncation_rate = double(truncated) / double(r.documents);
  }
  return r;
}

nlohmann::json report_to_json(const CorpusReport& r) {
  return {
      {"total_tokens", r.total_tokens},
      {"rows", r.rows},
      {"dropped_tokens", r.dropped_tokens},
      {"vocab_size", r.vocab_usage.size()},
      {"vocab_used", r.vocab_used},
      {"vocab_usage", r.vocab_usage},
      {"documents", r.documents},
      {"doc_length", {{"min", r.min_doc_length}, {"max", r.max_doc_length}, {"mean", r.mean_doc_length}}},
      {"truncation_rate", r.truncation_rate},
      {"unigram_entropy_bits", r.unigram_entropy_bits},
  };
}

}  // namespace pptdata
