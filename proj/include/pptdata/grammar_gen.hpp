#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pptdata/types.hpp"

namespace pptdata {

enum class Family { DyckNested, DyckShuffle, WW, RandomUniform };

std::string_view family_name(Family f);
/// Accepts the canonical names ("dyck-nested", "dyck-shuffle", "ww",
/// "random") and the short forms "nested" and "shuffle".
Family parse_family(std::string_view name);
bool is_dyck(Family f);

/// Parameters of one generated language.
///
/// For the Dyck families `k` is the number of bracket pairs and the
/// vocabulary is 2k: token i < k opens bracket type i, token i + k closes it.
/// For WW and RandomUniform `k` is the vocabulary size and only `max_length`
/// of the walk parameters is used.
struct LanguageSpec {
  Family family = Family::DyckShuffle;
  std::uint32_t k = 64;
  double p_open = 0.5;
  std::uint32_t max_depth = 16;
  std::uint32_t max_length = 2048;
  std::uint64_t seed = 0;

  std::uint32_t vocab_size() const { return is_dyck(family) ? 2 * k : k; }

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;
};

/// Throws InvalidArgument unless `spec` describes a valid Dyck walk.
void validate_dyck_spec(const LanguageSpec& spec);

/// Document `index` of the Dyck corpus described by `spec`. Pure in
/// (spec, index).
TokenSeq dyck_document(const LanguageSpec& spec, std::uint64_t index);

/// `count` Dyck documents, each exactly `spec.max_length` tokens long.
///
/// Walk rule per position: at depth 0 open; at depth `max_depth` close;
/// otherwise open with probability `p_open`. Opening picks a type uniformly.
/// Shuffle closes a uniformly chosen type with a positive open count, nested
/// closes the most recently opened bracket.
std::vector<TokenSeq> gen_dyck(const LanguageSpec& spec, std::uint64_t count);

/// Discrete distribution over ww half-lengths m >= 1.
class HalfLengthDist {
 public:
  /// Uniform on [lo, hi].
  static HalfLengthDist uniform(std::uint32_t lo, std::uint32_t hi);
  /// weights[i] is the (unnormalized) mass of half-length i + 1.
  static HalfLengthDist weighted(std::vector<double> weights);

  std::uint32_t min_half() const { return min_; }
  std::uint32_t max_half() const { return static_cast<std::uint32_t>(weights_.size()); }
  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
  std::uint32_t min_ = 1;
};

struct WWParams {
  std::uint32_t vocab_size = 128;
  HalfLengthDist half_length = HalfLengthDist::uniform(1, 1024);
  std::uint64_t seed = 0;
};

TokenSeq ww_document(const WWParams& params, std::uint64_t index);
/// Each document is w·w where |w| is drawn from `half_length` and w is i.i.d.
/// uniform over the vocabulary. Never emits the empty string.
std::vector<TokenSeq> gen_ww(const WWParams& params, std::uint64_t count);

TokenSeq random_document(std::uint32_t vocab_size, std::uint32_t doc_length, std::uint64_t seed,
                         std::uint64_t index);
/// I.i.d. uniform tokens; vocab_size 2 is the random-binary baseline.
std::vector<TokenSeq> gen_random(std::uint32_t vocab_size, std::uint32_t doc_length,
                                 std::uint64_t count, std::uint64_t seed);

// Verbatim-retrieval evaluation passages.

struct NamedPerson {
  std::string name;
  std::string pronoun;  // subject form, e.g. "she"
};

struct RetrievalDoc {
  std::string text;
  std::size_t span_start = 0;  // character offset of the second list
  std::size_t span_end = 0;    // one past its last character
  std::size_t first_start = 0;
  std::size_t first_end = 0;
  std::vector<std::string> words;
};

/// Renders the passage template around `words`, recording both list spans.
RetrievalDoc render_retrieval(const NamedPerson& person, const std::vector<std::string>& words);

/// `count` passages. Each list is `list_len` words sampled without
/// replacement from `wordlist`; the person is sampled uniformly from `people`.
std::vector<RetrievalDoc> gen_retrieval_eval(const std::vector<std::string>& wordlist,
                                             const std::vector<NamedPerson>& people,
                                             std::size_t list_len, std::uint64_t count,
                                             std::uint64_t seed);

const std::vector<std::string>& default_wordlist();
const std::vector<NamedPerson>& default_people();

}  // namespace pptdata
