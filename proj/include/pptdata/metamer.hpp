#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pptdata/types.hpp"

namespace pptdata {

/// Order-n Markov model with maximum-likelihood counts.
///
/// Contexts are the n-1 preceding tokens. Every document starts from a
/// begin-of-document context padded with `kBos`, so each position in the
/// corpus contributes exactly one count. Lower-order tables (used for
/// backoff) are marginals of the top-order table.
class NGramModel {
 public:
  static constexpr Token kBos = 0xFFFFFFFFu;

  struct Row {
    std::vector<Token> next;            // sorted ascending
    std::vector<std::uint64_t> counts;  // parallel to `next`
    std::uint64_t total = 0;
  };

  NGramModel() = default;
  NGramModel(int order, std::uint32_t vocab_size);

  int order() const { return order_; }
  std::uint32_t vocab_size() const { return vocab_size_; }
  std::uint64_t total_tokens() const { return total_tokens_; }
  std::size_t num_contexts() const { return table_.size(); }

  /// Adds one observation of `next` after `context` (length order-1).
  void add(std::span<const Token> context, Token next, std::uint64_t count = 1);

  /// Count table for `context` (length order-1), or nullptr if unseen.
  const Row* find(std::span<const Token> context) const;
  /// P(next | context) from the top-order table; 0 for unseen context.
  double probability(std::span<const Token> context, Token next) const;

  /// Marginalizes away the oldest context token: an order-(n-1) model whose
  /// counts are sums of this model's counts.
  NGramModel lower_order() const;

  /// Visits each context in a deterministic (sorted) order.
  template <typename F>
  void for_each_context(F&& f) const {
    for (std::uint64_t key : sorted_keys()) f(decode_context(key), table_.at(key));
  }

  /// Text format: a header line
  ///   `ngram-model v1 order <n> vocab_size <V> contexts <C> total_tokens <T>`
  /// then one line per context: `<n-1 context tokens> <entries> <tok> <cnt> ...`
  /// with `BOS` for the begin-of-document pad.
  void save(const std::filesystem::path& path) const;
  static NGramModel load(const std::filesystem::path& path);
  std::string to_text() const;
  static NGramModel from_text(const std::string& text);

  friend bool operator==(const NGramModel& a, const NGramModel& b) { return a.to_text() == b.to_text(); }

 private:
  std::uint64_t encode_context(std::span<const Token> context) const;
  std::vector<Token> decode_context(std::uint64_t key) const;
  std::vector<std::uint64_t> sorted_keys() const;

  int order_ = 1;
  std::uint32_t vocab_size_ = 0;
  std::uint64_t total_tokens_ = 0;
  std::unordered_map<std::uint64_t, Row> table_;
};

/// Maximum-likelihood fit; each document resets the context to BOS padding.
NGramModel fit_ngram(std::span<const TokenSeq> corpus, int order);

struct MetamerParams {
  std::uint64_t token_budget = 0;
  std::uint32_t doc_length = 2048;
  std::uint64_t seed = 0;
};

/// Ancestral sampling of documents of `doc_length` tokens until the budget
/// is met (the last document is shortened to land on it exactly). Unseen
/// contexts back off to the next lower order.
std::vector<TokenSeq> sample_metamer(const NGramModel& model, const MetamerParams& params);

/// Manifest family label for a metamer corpus.
std::string metamer_family(int order, const std::string& source_family);

/// Empirical distribution of contiguous n-grams inside documents (n-grams
/// never straddle a document boundary; no BOS padding).
struct NGramHistogram {
  int n = 1;
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
};

NGramHistogram count_ngrams(std::span<const TokenSeq> docs, int n);

/// 0.5 * sum |p - q| over the union of supports.
double total_variation(const NGramHistogram& a, const NGramHistogram& b);

}  // namespace pptdata
