#include "pptdata/metamer.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "pptdata/seeding.hpp"

namespace pptdata {

NGramModel::NGramModel(int order, std::uint32_t vocab_size) : order_(order), vocab_size_(vocab_size) {
  if (order < 1 || order > 3) throw InvalidArgument("n-gram order must be 1, 2 or 3");
  if (vocab_size < 1) throw InvalidArgument("vocab_size must be >= 1");
}

std::uint64_t NGramModel::encode_context(std::span<const Token> context) const {
  if (context.size() != static_cast<std::size_t>(order_ - 1))
    throw InvalidArgument("context length must be order - 1");
  const std::uint64_t base = std::uint64_t(vocab_size_) + 1;
  std::uint64_t key = 0;
  for (Token t : context) {
    std::uint64_t digit;
    if (t == kBos) {
      digit = 0;
    } else if (t < vocab_size_) {
      digit = std::uint64_t(t) + 1;
    } else {
      throw InvalidArgument("context token outside vocabulary");
    }
    key = key * base + digit;
  }
  return key;
}

std::vector<Token> NGramModel::decode_context(std::uint64_t key) const {
  const std::uint64_t base = std::uint64_t(vocab_size_) + 1;
  std::vector<Token> ctx(order_ - 1);
  for (int i = order_ - 2; i >= 0; --i) {
    const std::uint64_t digit = key % base;
    key /= base;
    ctx[i] = digit == 0 ? kBos : static_cast<Token>(digit - 1);
  }
  return ctx;
}

std::vector<std::uint64_t> NGramModel::sorted_keys() const {
  std::vector<std::uint64_t> keys;
  keys.reserve(table_.size());
  for (const auto& [key, row] : table_) keys.push_back(key);
  std::sort(keys.begin(), keys.end());
  return keys;
}

void NGramModel::add(std::span<const Token> context, Token next, std::uint64_t count) {
  if (next >= vocab_size_) throw InvalidArgument("token outside vocabulary");
  if (count == 0) return;
  Row& row = table_[encode_context(context)];
  auto it = std::lower_bound(row.next.begin(), row.next.end(), next);
  const auto idx = static_cast<std::size_t>(it - row.next.begin());
  if (it != row.next.end() && *it == next) {
    row.counts[idx] += count;
  } else {
    row.next.insert(it, next);
    row.counts.insert(row.counts.begin() + static_cast<std::ptrdiff_t>(idx), count);
  }
  row.total += count;
  total_tokens_ += count;
}

const NGramModel::Row* NGramModel::find(std::span<const Token> context) const {
  const auto it = table_.find(encode_context(context));
  return it == table_.end() ? nullptr : &it->second;
}

double NGramModel::probability(std::span<const Token> context, Token next) const {
  const Row* row = find(context);
  if (!row || row->total == 0) return 0.0;
  auto it = std::lower_bound(row->next.begin(), row->next.end(), next);
  if (it == row->next.end() || *it != next) return 0.0;
  return double(row->counts[it - row->next.begin()]) / double(row->total);
}

NGramModel NGramModel::lower_order() const {
  if (order_ == 1) throw InvalidArgument("a unigram model has no lower order");
  NGramModel lower(order_ - 1, vocab_size_);
  for (const auto& [key, row] : table_) {
    const auto ctx = decode_context(key);
    const std::span<const Token> shorter(ctx.data() + 1, ctx.size() - 1);
    for (std::size_t i = 0; i < row.next.size(); ++i) lower.add(shorter, row.next[i], row.counts[i]);
  }
  return lower;
}

std::string NGramModel::to_text() const {
  std::ostringstream out;
  out << "ngram-model v1 order " << order_ << " vocab_size " << vocab_size_ << " contexts "
      << table_.size() << " total_tokens " << total_tokens_ << "\n";
  for_each_context([&](const std::vector<Token>& ctx, const Row& row) {
    for (Token t : ctx) {
      if (t == kBos) {
        out << "BOS ";
      } else {
        out << t << ' ';
      }
    }
    out << row.next.size();
    for (std::size_t i = 0; i < row.next.size(); ++i) out << ' ' << row.next[i] << ' ' << row.counts[i];
    out << '\n';
  });
  return out.str();
}

NGramModel NGramModel::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string magic, version, kw_order, kw_vocab, kw_ctx, kw_total;
  int order = 0;
  std::uint32_t vocab = 0;
  std::size_t contexts = 0;
  std::uint64_t total = 0;
  in >> magic >> version >> kw_order >> order >> kw_vocab >> vocab >> kw_ctx >> contexts >> kw_total >> total;
  if (!in || magic != "ngram-model" || kw_order != "order" || kw_vocab != "vocab_size" ||
      kw_ctx != "contexts" || kw_total != "total_tokens")
    throw FormatError("n-gram model: malformed header");
  if (version != "v1") throw FormatError("n-gram model: unsupported version '" + version + "'");

  NGramModel model(order, vocab);
  std::vector<Token> ctx(order - 1);
  for (std::size_t c = 0; c < contexts; ++c) {
    for (auto& t : ctx) {
      std::string word;
      if (!(in >> word)) throw FormatError("n-gram model: truncated context table");
      if (word == "BOS") {
        t = kBos;
      } else {
        try {
          t = static_cast<Token>(std::stoul(word));
        } catch (const std::exception&) {
          throw FormatError("n-gram model: bad context token '" + word + "'");
        }
      }
    }
    std::size_t entries = 0;
    if (!(in >> entries)) throw FormatError("n-gram model: truncated context table");
    for (std::size_t e = 0; e < entries; ++e) {
      Token next;
      std::uint64_t count;
      if (!(in >> next >> count)) throw FormatError("n-gram model: truncated context table");
      model.add(ctx, next, count);
    }
  }
  if (model.total_tokens() != total) throw FormatError("n-gram model: total_tokens disagrees with table");
  return model;
}

void NGramModel::save(const std::filesystem::path& path) const {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw IoError("cannot open '" + tmp.string() + "' for writing");
    out << to_text();
    if (!out) throw IoError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw IoError("cannot rename '" + tmp.string() + "': " + ec.message());
}

NGramModel NGramModel::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_text(buf.str());
}

NGramModel fit_ngram(std::span<const TokenSeq> corpus, int order) {
  if (order < 1 || order > 3) throw InvalidArgument("n-gram order must be 1, 2 or 3");
  if (corpus.empty()) throw InvalidArgument("cannot fit an n-gram model on an empty corpus");
  const std::uint32_t vocab = corpus.front().vocab_size;
  NGramModel model(order, vocab);

  // Count full n-grams in a flat map first, then group by context.
  const std::uint64_t base = std::uint64_t(vocab) + 1;
  std::unordered_map<std::uint64_t, std::uint64_t> grams;
  std::uint64_t ctx_modulus = 1;
  for (int i = 0; i < order - 1; ++i) ctx_modulus *= base;
  for (const auto& doc : corpus) {
    if (doc.vocab_size != vocab) throw InvalidArgument("vocabulary mismatch across documents");
    std::uint64_t ctx = 0;  // all BOS
    for (Token t : doc.tokens) {
      if (t >= vocab) throw InvalidArgument("token outside vocabulary");
      ++grams[ctx * vocab + t];
      if (order > 1) ctx = (ctx * base + (std::uint64_t(t) + 1)) % ctx_modulus;
    }
  }
  if (grams.empty()) throw InvalidArgument("cannot fit an n-gram model on an empty corpus");

  std::vector<std::pair<std::uint64_t, std::uint64_t>> sorted(grams.begin(), grams.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Token> ctx(order - 1);
  for (const auto& [key, count] : sorted) {
    std::uint64_t ctx_key = key / vocab;
    for (int i = order - 2; i >= 0; --i) {
      const std::uint64_t digit = ctx_key % base;
      ctx_key /= base;
      ctx[i] = digit == 0 ? NGramModel::kBos : static_cast<Token>(digit - 1);
    }
    model.add(ctx, static_cast<Token>(key % vocab), count);
  }
  return model;
}

namespace {

// Cumulative-count view of one model for fast ancestral sampling.
class Sampler {
 public:
  explicit Sampler(const NGramModel& m) : order_(m.order()) {
    m.for_each_context([&](const std::vector<Token>& ctx, const NGramModel::Row& row) {
      Entry e{row.next, {}, row.total};
      e.cumulative.reserve(row.counts.size());
      std::uint64_t acc = 0;
      for (auto c : row.counts) e.cumulative.push_back(acc += c);
      rows_.emplace(ctx, std::move(e));
    });
  }

  // Returns false when the context was never observed.
  template <typename Gen>
  bool draw(const std::vector<Token>& ctx, Gen& rng, Token& out) const {
    const auto it = rows_.find(ctx);
    if (it == rows_.end() || it->second.total == 0) return false;
    const Entry& e = it->second;
    std::uniform_int_distribution<std::uint64_t> u(0, e.total - 1);
    const std::uint64_t r = u(rng);
    const auto pos = std::upper_bound(e.cumulative.begin(), e.cumulative.end(), r) - e.cumulative.begin();
    out = e.next[pos];
    return true;
  }

  int order() const { return order_; }

 private:
  struct Entry {
    std::vector<Token> next;
    std::vector<std::uint64_t> cumulative;
    std::uint64_t total;
  };
  struct Hash {
    std::size_t operator()(const std::vector<Token>& v) const {
      std::uint64_t h = 0;
      for (Token t : v) h = mix64(h ^ t);
      return static_cast<std::size_t>(h);
    }
  };
  int order_;
  std::unordered_map<std::vector<Token>, Entry, Hash> rows_;
};

}  // namespace

std::vector<TokenSeq> sample_metamer(const NGramModel& model, const MetamerParams& params) {
  if (params.token_budget < 1) throw InvalidArgument("token_budget must be >= 1");
  if (params.doc_length < 1) throw InvalidArgument("doc_length must be >= 1");
  if (model.total_tokens() == 0) throw InvalidArgument("model has no counts");

  // samplers[i] has order (model.order() - i); the last one is the unigram.
  std::vector<Sampler> samplers;
  samplers.emplace_back(model);
  for (NGramModel m = model; m.order() > 1;) {
    m = m.lower_order();
    samplers.emplace_back(m);
  }

  std::vector<TokenSeq> docs;
  std::uint64_t produced = 0;
  std::vector<Token> history;
  std::vector<Token> ctx;
  for (std::uint64_t d = 0; produced < params.token_budget; ++d) {
    const std::uint64_t len = std::min<std::uint64_t>(params.doc_length, params.token_budget - produced);
    Rng rng = document_rng(params.seed, d);
    TokenSeq doc;
    doc.vocab_size = model.vocab_size();
    doc.tokens.reserve(len);
    history.assign(model.order() - 1, NGramModel::kBos);
    for (std::uint64_t pos = 0; pos < len; ++pos) {
      Token next = 0;
      bool drawn = false;
      for (const Sampler& s : samplers) {
        ctx.assign(history.end() - (s.order() - 1), history.end());
        if (s.draw(ctx, rng, next)) {
          drawn = true;
          break;
        }
      }
      if (!drawn) throw InvalidArgument("model is not normalizable: no order has mass for this context");
      doc.tokens.push_back(next);
      if (!history.empty()) {
        history.erase(history.begin());
        history.push_back(next);
      }
    }
    produced += len;
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::string metamer_family(int order, const std::string& source_family) {
  return "metamer(" + std::to_string(order) + ", " + source_family + ")";
}

NGramHistogram count_ngrams(std::span<const TokenSeq> docs, int n) {
  if (n < 1 || n > 3) throw InvalidArgument("n must be 1, 2 or 3");
  NGramHistogram h;
  h.n = n;
  for (const auto& doc : docs) {
    const std::uint64_t base = doc.vocab_size;
    for (std::size_t i = 0; i + n <= doc.tokens.size(); ++i) {
      std::uint64_t key = 0;
      for (int j = 0; j < n; ++j) key = key * base + doc.tokens[i + j];
      ++h.counts[key];
      ++h.total;
    }
  }
  return h;
}

double total_variation(const NGramHistogram& a, const NGramHistogram& b) {
  if (a.n != b.n) throw InvalidArgument("histograms of different n-gram orders");
  if (a.total == 0 || b.total == 0) throw InvalidArgument("empty n-gram histogram");
  const double ta = double(a.total), tb = double(b.total);
  double sum = 0.0;
  for (const auto& [key, ca] : a.counts) {
    const auto it = b.counts.find(key);
    const double pb = it == b.counts.end() ? 0.0 : double(it->second) / tb;
    sum += std::abs(double(ca) / ta - pb);
  }
  for (const auto& [key, cb] : b.counts)
    if (!a.counts.contains(key)) sum += double(cb) / tb;
  return 0.5 * sum;
}

}  // namespace pptdata
