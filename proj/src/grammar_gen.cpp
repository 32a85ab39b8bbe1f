#include "pptdata/grammar_gen.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "pptdata/seeding.hpp"

namespace pptdata {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::DyckNested:
      return "dyck-nested";
    case Family::DyckShuffle:
      return "dyck-shuffle";
    case Family::WW:
      return "ww";
    case Family::RandomUniform:
      return "random";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "dyck-nested" || name == "nested" || name == "kdyck" || name == "dyck")
    return Family::DyckNested;
  if (name == "dyck-shuffle" || name == "shuffle") return Family::DyckShuffle;
  if (name == "ww" || name == "copy") return Family::WW;
  if (name == "random" || name == "random-uniform") return Family::RandomUniform;
  throw InvalidArgument("unknown language family '" + std::string(name) + "'");
}

bool is_dyck(Family f) { return f == Family::DyckNested || f == Family::DyckShuffle; }

void validate_dyck_spec(const LanguageSpec& spec) {
  if (!is_dyck(spec.family)) throw InvalidArgument("not a Dyck family");
  if (spec.k < 1) throw InvalidArgument("k must be >= 1");
  if (spec.max_depth < 1) throw InvalidArgument("max_depth must be >= 1");
  if (spec.max_length < 2) throw InvalidArgument("max_length must be >= 2");
  if (!(spec.p_open >= 0.0 && spec.p_open <= 1.0))
    throw InvalidArgument("p_open must lie in [0, 1]");
}

namespace {

// Open bracket types with a positive count, with O(1) insert/erase and
// uniform selection.
class OpenSet {
 public:
  explicit OpenSet(std::uint32_t k) : counts_(k, 0), slot_(k, 0) {}

  std::uint32_t depth() const { return depth_; }

  void open(std::uint32_t type) {
    if (counts_[type]++ == 0) {
      slot_[type] = static_cast<std::uint32_t>(active_.size());
      active_.push_back(type);
    }
    ++depth_;
  }

  template <typename Gen>
  std::uint32_t close_random(Gen& rng) {
    // A forced choice draws nothing, so k = 1 shuffle replays the nested walk.
    std::uint32_t type = active_.front();
    if (active_.size() > 1) {
      std::uniform_int_distribution<std::size_t> pick(0, active_.size() - 1);
      type = active_[pick(rng)];
    }
    close(type);
    return type;
  }

  void close(std::uint32_t type) {
    --depth_;
    if (--counts_[type] == 0) {
      const std::uint32_t last = active_.back();
      active_[slot_[type]] = last;
      slot_[last] = slot_[type];
      active_.pop_back();
    }
  }

 private:
  std::vector<std::uint32_t> counts_;
  std::vector<std::uint32_t> slot_;
  std::vector<std::uint32_t> active_;
  std::uint32_t depth_ = 0;
};

}  // namespace

TokenSeq dyck_document(const LanguageSpec& spec, std::uint64_t index) {
  validate_dyck_spec(spec);
  Rng rng = document_rng(spec.seed, index);
  std::uniform_int_distribution<std::uint32_t> pick_type(0, spec.k - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);

  TokenSeq doc;
  doc.vocab_size = spec.vocab_size();
  doc.tokens.reserve(spec.max_length);

  const bool nested = spec.family == Family::DyckNested;
  OpenSet open_set(spec.k);
  std::vector<std::uint32_t> stack;

  for (std::uint32_t pos = 0; pos < spec.max_length; ++pos) {
    const std::uint32_t depth = open_set.depth();
    bool do_open;
    if (depth == 0) {
      do_open = true;
    } else if (depth >= spec.max_depth) {
      do_open = false;
    } else {
      do_open = coin(rng) < spec.p_open;
    }

    if (do_open) {
      const std::uint32_t type = pick_type(rng);
      open_set.open(type);
      if (nested) stack.push_back(type);
      doc.tokens.push_back(type);
    } else if (nested) {
      const std::uint32_t type = stack.back();
      stack.pop_back();
      open_set.close(type);
      doc.tokens.push_back(type + spec.k);
    } else {
      doc.tokens.push_back(open_set.close_random(rng) + spec.k);
    }
  }
  doc.truncated = open_set.depth() != 0;
  return doc;
}

std::vector<TokenSeq> gen_dyck(const LanguageSpec& spec, std::uint64_t count) {
  validate_dyck_spec(spec);
  if (count < 1) throw InvalidArgument("count must be >= 1");
  std::vector<TokenSeq> out;
  out.reserve(count);
  for (std::uint64_t d = 0; d < count; ++d) out.push_back(dyck_document(spec, d));
  return out;
}

HalfLengthDist HalfLengthDist::uniform(std::uint32_t lo, std::uint32_t hi) {
  if (lo < 1 || hi < lo) throw InvalidArgument("half-length support must be a nonempty range in [1, inf)");
  std::vector<double> w(hi, 0.0);
  std::fill(w.begin() + (lo - 1), w.end(), 1.0);
  return weighted(std::move(w));
}

HalfLengthDist HalfLengthDist::weighted(std::vector<double> weights) {
  for (double w : weights)
    if (!(w >= 0.0)) throw InvalidArgument("half-length weights must be non-negative");
  auto first = std::find_if(weights.begin(), weights.end(), [](double w) { return w > 0.0; });
  if (first == weights.end()) throw InvalidArgument("half-length distribution has empty support");
  // Trailing zeros would overstate max_half.
  while (weights.back() == 0.0) weights.pop_back();
  HalfLengthDist d;
  d.min_ = static_cast<std::uint32_t>(first - weights.begin()) + 1;
  d.weights_ = std::move(weights);
  return d;
}

TokenSeq ww_document(const WWParams& params, std::uint64_t index) {
  if (params.vocab_size < 1) throw InvalidArgument("vocab_size must be >= 1");
  Rng rng = document_rng(params.seed, index);
  const auto& w = params.half_length.weights();
  std::discrete_distribution<std::uint32_t> half(w.begin(), w.end());
  std::uniform_int_distribution<Token> pick(0, params.vocab_size - 1);

  const std::uint32_t m = half(rng) + 1;
  TokenSeq doc;
  doc.vocab_size = params.vocab_size;
  doc.tokens.resize(2 * static_cast<std::size_t>(m));
  for (std::uint32_t i = 0; i < m; ++i) doc.tokens[i] = pick(rng);
  std::copy_n(doc.tokens.begin(), m, doc.tokens.begin() + m);
  return doc;
}

std::vector<TokenSeq> gen_ww(const WWParams& params, std::uint64_t count) {
  if (count < 1) throw InvalidArgument("count must be >= 1");
  std::vector<TokenSeq> out;
  out.reserve(count);
  for (std::uint64_t d = 0; d < count; ++d) out.push_back(ww_document(params, d));
  return out;
}

TokenSeq random_document(std::uint32_t vocab_size, std::uint32_t doc_length, std::uint64_t seed,
                         std::uint64_t index) {
  if (vocab_size < 2) throw InvalidArgument("vocab_size must be >= 2");
  if (doc_length < 1) throw InvalidArgument("doc_length must be >= 1");
  Rng rng = document_rng(seed, index);
  std::uniform_int_distribution<Token> pick(0, vocab_size - 1);
  TokenSeq doc;
  doc.vocab_size = vocab_size;
  doc.tokens.resize(doc_length);
  for (auto& t : doc.tokens) t = pick(rng);
  return doc;
}

std::vector<TokenSeq> gen_random(std::uint32_t vocab_size, std::uint32_t doc_length,
                                 std::uint64_t count, std::uint64_t seed) {
  if (vocab_size < 2) throw InvalidArgument("vocab_size must be >= 2");
  if (count < 1) throw InvalidArgument("count must be >= 1");
  std::vector<TokenSeq> out;
  out.reserve(count);
  for (std::uint64_t d = 0; d < count; ++d) out.push_back(random_document(vocab_size, doc_length, seed, d));
  return out;
}

}  // namespace pptdata
