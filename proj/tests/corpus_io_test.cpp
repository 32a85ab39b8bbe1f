#include "pptdata/corpus_io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>

#include "gtest/gtest.h"
#include "pptdata/grammar_gen.hpp"
#include "pptdata/recognizers.hpp"

namespace pptdata {
namespace {

namespace fs = std::filesystem;

TokenSeq doc(std::vector<Token> tokens, std::uint32_t vocab, bool truncated = false) {
  return {std::move(tokens), vocab, truncated};
}

TokenSeq filled(std::size_t n, std::uint32_t vocab, Token start = 0) {
  TokenSeq d{std::vector<Token>(n), vocab, false};
  for (std::size_t i = 0; i < n; ++i) d.tokens[i] = static_cast<Token>((start + i) % vocab);
  return d;
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("pptdata_test_" + name); }

TEST(Pack, SingleFullWindow) {
  const std::vector<TokenSeq> docs = {filled(2048, 128)};
  const auto c = pack(docs, 2048);
  EXPECT_EQ(c.rows(), 1u);
  EXPECT_EQ(c.manifest.total_tokens, 2048u);
  EXPECT_EQ(c.manifest.dropped_tokens, 0u);
  EXPECT_EQ(c.manifest.doc_offsets, (std::vector<std::uint64_t>{0}));
}

TEST(Pack, TwoDocumentsShareAWindowWithoutSeparator) {
  const std::vector<TokenSeq> docs = {filled(1000, 128, 0), filled(1048, 128, 7)};
  const auto c = pack(docs, 2048);
  ASSERT_EQ(c.rows(), 1u);
  EXPECT_EQ(c.manifest.doc_offsets, (std::vector<std::uint64_t>{0, 1000}));
  EXPECT_EQ(c.tokens[999], docs[0].tokens[999]);
  EXPECT_EQ(c.tokens[1000], docs[1].tokens[0]);
}

TEST(Pack, DropsFinalPartialWindow) {
  const std::vector<TokenSeq> docs = {filled(10, 4), filled(10, 4, 1), filled(5, 4, 2)};
  const auto c = pack(docs, 8);
  EXPECT_EQ(c.rows(), 3u);
  EXPECT_EQ(c.manifest.total_tokens, 24u);
  EXPECT_EQ(c.manifest.dropped_tokens, 1u);
  EXPECT_EQ(c.manifest.doc_offsets, (std::vector<std::uint64_t>{0, 10, 20}));
}

TEST(Pack, DocumentsStartingInDroppedTailAreNotListed) {
  const std::vector<TokenSeq> docs = {filled(8, 4), filled(3, 4)};
  const auto c = pack(docs, 8);
  EXPECT_EQ(c.manifest.doc_offsets, (std::vector<std::uint64_t>{0}));
  EXPECT_EQ(c.manifest.dropped_tokens, 3u);
}

TEST(Pack, Errors) {
  const std::vector<TokenSeq> mixed = {filled(4, 4), filled(4, 6)};
  EXPECT_THROW(pack(mixed, 4), InvalidArgument);
  const std::vector<TokenSeq> wide = {filled(4, 70000)};
  EXPECT_THROW(pack(wide, 4), FormatError);
  const std::vector<TokenSeq> ok = {filled(4, 4)};
  EXPECT_THROW(pack(ok, 0), InvalidArgument);
}

TEST(Pack, UnpackIsInverseOnWholeWindows) {
  LanguageSpec s;
  s.family = Family::DyckShuffle;
  s.k = 8;
  s.max_length = 256;
  s.seed = 3;
  const auto docs = gen_dyck(s, 16);
  const auto c = pack(docs, 512);
  EXPECT_EQ(unpack(c), docs);
}

TEST(Pack, TruncationFlagsFollowDocuments) {
  const std::vector<TokenSeq> docs = {doc({0, 0}, 2, true), doc({0, 1}, 2, false)};
  const auto c = pack(docs, 2);
  EXPECT_EQ(c.manifest.truncated, (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(unpack(c), docs);
}

PackedCorpus sample_corpus(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::uint32_t vocab = 2 + rng() % 300;
  const std::uint32_t window = 1 + rng() % 64;
  std::vector<TokenSeq> docs(rng() % 20);
  for (auto& d : docs) {
    d.vocab_size = vocab;
    d.truncated = rng() % 2;
    d.tokens.resize(1 + rng() % 100);
    for (auto& t : d.tokens) t = static_cast<Token>(rng() % vocab);
  }
  PackedCorpus c = docs.empty() ? PackedCorpus{} : pack(docs, window);
  if (docs.empty()) {
    c.manifest.vocab_size = vocab;
    c.manifest.window_length = window;
  }
  c.manifest.family = "random";
  c.manifest.seed = seed;
  c.manifest.spec = {{"seed", seed}};
  return c;
}

TEST(CorpusFile, EncodeDecodeIdentity) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto c = sample_corpus(seed);
    EXPECT_EQ(decode_corpus(encode_corpus(c)), c) << seed;
  }
}

TEST(CorpusFile, EmptyCorpusRoundTrips) {
  PackedCorpus c;
  c.manifest.family = "dyck-shuffle";
  c.manifest.vocab_size = 128;
  c.manifest.window_length = 2048;
  const auto bytes = encode_corpus(c);
  const auto back = decode_corpus(bytes);
  EXPECT_EQ(back.rows(), 0u);
  EXPECT_EQ(back, c);
}

TEST(CorpusFile, WriteReadAndManifestSidecar) {
  const auto c = sample_corpus(99);
  const auto path = temp_file("rt.pptc");
  write_corpus(c, path);
  EXPECT_EQ(read_corpus(path), c);
  EXPECT_FALSE(fs::exists(path.string() + ".tmp"));
  fs::remove(path);

  const auto mpath = temp_file("rt.manifest.json");
  write_manifest(c.manifest, mpath);
  std::ifstream in(mpath);
  EXPECT_EQ(manifest_from_json(nlohmann::json::parse(in)), c.manifest);
  fs::remove(mpath);
}

TEST(CorpusFile, DetectsEverySingleByteCorruption) {
  const auto bytes = encode_corpus(sample_corpus(5));
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    auto bad = bytes;
    bad[i] ^= 0x5A;
    EXPECT_THROW(decode_corpus(bad), FormatError) << "byte " << i;
  }
}

TEST(CorpusFile, RejectsTruncationMagicAndVersion) {
  auto bytes = encode_corpus(sample_corpus(6));
  for (std::size_t len : {std::size_t{0}, std::size_t{3}, std::size_t{20}, bytes.size() - 1})
    EXPECT_THROW(decode_corpus(std::span(bytes.data(), len)), FormatError);

  PackedCorpus v2 = sample_corpus(6);
  v2.manifest.format_version = 2;
  EXPECT_THROW(decode_corpus(encode_corpus(v2)), FormatError);

  EXPECT_THROW(read_corpus("/nonexistent/x.pptc"), IoError);
}

TEST(ManifestJson, RoundTripAndErrors) {
  const auto c = sample_corpus(12);
  EXPECT_EQ(manifest_from_json(manifest_to_json(c.manifest)), c.manifest);
  auto j = manifest_to_json(c.manifest);
  j.erase("vocab_size");
  EXPECT_THROW(manifest_from_json(j), FormatError);
}

PackedCorpus dyck_packed(const std::vector<TokenSeq>& docs, std::uint32_t window, std::uint32_t max_depth) {
  auto c = pack(docs, window);
  c.manifest.family = "dyck-shuffle";
  c.manifest.spec = {{"max_depth", max_depth}};
  return c;
}

TEST(DepthStats, Examples) {
  const std::vector<TokenSeq> two = {doc({0, 1, 0, 1}, 2)};
  const auto a = depth_stats(dyck_packed(two, 4, 16), 1);
  EXPECT_EQ(a.histogram[0], 2u);
  EXPECT_EQ(a.histogram[1], 2u);
  EXPECT_EQ(a.max_depth, 1u);

  const std::vector<TokenSeq> nested = {doc({0, 0, 1, 1}, 2)};
  const auto b = depth_stats(dyck_packed(nested, 4, 16), 1);
  EXPECT_EQ(b.histogram[0], 1u);
  EXPECT_EQ(b.histogram[1], 2u);
  EXPECT_EQ(b.histogram[2], 1u);
  EXPECT_DOUBLE_EQ(b.mean_depth, 1.0);
}

TEST(DepthStats, ResetsAtDocumentBoundariesInsideWindows) {
  const std::vector<TokenSeq> docs = {doc({0, 0}, 2, true), doc({0, 1}, 2)};
  const auto p = depth_stats(dyck_packed(docs, 4, 16), 1);
  EXPECT_EQ(p.histogram[1], 2u);
  EXPECT_EQ(p.histogram[2], 1u);
  EXPECT_EQ(p.histogram[0], 1u);
}

TEST(DepthStats, AgreesWithDepthTrace) {
  LanguageSpec s;
  s.family = Family::DyckShuffle;
  s.k = 5;
  s.max_length = 300;
  s.max_depth = 7;
  s.seed = 21;
  const auto docs = gen_dyck(s, 40);
  std::vector<std::uint64_t> expected(8, 0);
  for (const auto& d : docs)
    for (auto depth : depth_trace(d.tokens, 5)) expected[depth] += 1;
  const auto p = depth_stats(std::span<const TokenSeq>(docs), 5);
  EXPECT_EQ(p.histogram, expected);
  EXPECT_EQ(p.positions, 40u * 300u);
  const auto packed = depth_stats(dyck_packed(docs, 300, 7), 5);
  EXPECT_EQ(packed.histogram, expected);
}

TEST(DepthStats, RejectsNonDyckAndDepthOverflow) {
  const std::vector<TokenSeq> docs = {doc({0, 0, 0, 1}, 2)};
  auto c = pack(docs, 4);
  c.manifest.family = "ww";
  EXPECT_THROW(depth_stats(c, 1), InvalidArgument);
  EXPECT_THROW(depth_stats(dyck_packed(docs, 4, 16), 2), InvalidArgument);
  EXPECT_THROW(depth_stats(dyck_packed(docs, 4, 2), 1), FormatError);
}

TEST(Report, EntropyAndUsage) {
  const std::vector<TokenSeq> same = {doc(std::vector<Token>(64, 3), 128)};
  const auto r0 = corpus_report(pack(same, 64));
  EXPECT_DOUBLE_EQ(r0.unigram_entropy_bits, 0.0);
  EXPECT_EQ(r0.vocab_used, 1u);

  const auto uniform = gen_random(128, 2048, 500, 4);
  const auto r1 = corpus_report(pack(uniform, 2048));
  EXPECT_NEAR(r1.unigram_entropy_bits, 7.0, 0.01);
  EXPECT_EQ(r1.vocab_used, 128u);
  EXPECT_EQ(r1.documents, 500u);
  EXPECT_EQ(r1.min_doc_length, 2048u);
  EXPECT_DOUBLE_EQ(r1.mean_doc_length, 2048.0);
  const auto j = report_to_json(r1);
  EXPECT_EQ(j.at("vocab_used"), 128);
}

TEST(Report, EntropyBits) {
  const std::vector<std::uint64_t> fair = {5, 5};
  EXPECT_DOUBLE_EQ(entropy_bits(fair), 1.0);
  const std::vector<std::uint64_t> none = {0, 0};
  EXPECT_DOUBLE_EQ(entropy_bits(none), 0.0);
}

}  // namespace
}  // namespace pptdata
