#include "pptdata/recognizers.hpp"

#include <string>

namespace pptdata {

namespace {

void check_vocab(std::span<const Token> tokens, std::uint32_t k) {
  if (k < 1) throw InvalidArgument("k must be >= 1");
  const std::uint64_t limit = 2ULL * k;
  for (Token t : tokens)
    if (t >= limit)
      throw InvalidArgument("token " + std::to_string(t) + " outside bracket vocabulary of size " +
                            std::to_string(limit));
}

// Q_( and Q_) restricted to one type.
bool opens(Token t, std::uint32_t k) { return t < k; }
bool closes(Token t, std::uint32_t k) { return t >= k; }
std::uint32_t type_of(Token t, std::uint32_t k) { return t < k ? t : t - k; }

// The first two conjuncts shared by every counting recognizer.
bool balanced_and_prefix_safe(const std::vector<std::int64_t>& depth) {
  std::size_t negative = 0;
  for (std::int64_t d : depth)
    if (d < 0) ++negative;
  const std::int64_t final_depth = depth.empty() ? 0 : depth.back();
  return final_depth == 0 && negative == 0;
}

}  // namespace

std::vector<std::int64_t> depth_trace(std::span<const Token> tokens, std::uint32_t k) {
  check_vocab(tokens, k);
  std::vector<std::int64_t> depth(tokens.size());
  std::int64_t d = 0;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    d += opens(tokens[i], k) ? 1 : -1;
    depth[i] = d;
  }
  return depth;
}

bool recognize_counting_1dyck(std::span<const Token> tokens) {
  for (Token t : tokens)
    if (t > 1) throw InvalidArgument("1-Dyck recognizer expects tokens in {0, 1}");
  // depth(i) = #j<=i [Q_((j)] - #j<=i [Q_)(j)]
  std::int64_t opens_so_far = 0, closes_so_far = 0, negative_prefixes = 0;
  for (Token t : tokens) {
    (t == 0 ? opens_so_far : closes_so_far) += 1;
    if (opens_so_far - closes_so_far < 0) ++negative_prefixes;
  }
  return opens_so_far - closes_so_far == 0 && negative_prefixes == 0;
}

bool recognize_stack_kdyck(std::span<const Token> tokens, std::uint32_t k) {
  check_vocab(tokens, k);
  std::vector<std::uint32_t> stack;
  for (Token t : tokens) {
    if (opens(t, k)) {
      stack.push_back(t);
    } else {
      if (stack.empty() || stack.back() != t - k) return false;
      stack.pop_back();
    }
  }
  return stack.empty();
}

bool recognize_fom_kdyck(std::span<const Token> tokens, std::uint32_t k) {
  check_vocab(tokens, k);
  const std::size_t n = tokens.size();
  const auto depth = depth_trace(tokens, k);
  if (!balanced_and_prefix_safe(depth)) return false;

  std::vector<std::int64_t> level(n);
  for (std::size_t i = 0; i < n; ++i) level[i] = depth[i] + (closes(tokens[i], k) ? 1 : 0);

  std::vector<std::int64_t> dindex(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (level[j] == level[i]) ++dindex[i];

  auto paired = [&](std::size_t j, std::size_t i) {
    return depth[j] == depth[i] + 1 && dindex[i] == dindex[j] + 1;
  };
  auto match = [&](std::size_t j, std::size_t i) {
    return opens(tokens[j], k) && closes(tokens[i], k) && type_of(tokens[j], k) == type_of(tokens[i], k);
  };
  auto closed = [&](std::size_t i) {
    for (std::size_t j = 0; j <= i; ++j)
      if (paired(j, i) && match(j, i)) return true;
    return false;
  };

  for (std::size_t i = 0; i < n; ++i)
    if (closes(tokens[i], k) && !closed(i)) return false;
  return true;
}

bool recognize_fom_kdyck_unadjusted(std::span<const Token> tokens, std::uint32_t k) {
  check_vocab(tokens, k);
  const std::size_t n = tokens.size();
  const auto depth = depth_trace(tokens, k);
  if (!balanced_and_prefix_safe(depth)) return false;

  std::vector<std::int64_t> dindex(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (depth[j] == depth[i]) ++dindex[i];

  for (std::size_t i = 0; i < n; ++i) {
    if (!closes(tokens[i], k)) continue;
    bool closed = false;
    for (std::size_t j = 0; j <= i && !closed; ++j)
      closed = depth[j] == depth[i] + 1 && dindex[i] == dindex[j] && opens(tokens[j], k) &&
               type_of(tokens[j], k) == type_of(tokens[i], k);
    if (!closed) return false;
  }
  return true;
}

bool recognize_shuffle(std::span<const Token> tokens, std::uint32_t k) {
  check_vocab(tokens, k);
  std::vector<std::int64_t> balance(k, 0);
  for (Token t : tokens) {
    const std::uint32_t type = type_of(t, k);
    balance[type] += opens(t, k) ? 1 : -1;
    if (balance[type] < 0) return false;
  }
  for (std::int64_t b : balance)
    if (b != 0) return false;
  return true;
}

bool recognize_ww(std::span<const Token> tokens) {
  const std::size_t n = tokens.size();
  if (n == 0 || n % 2 != 0) return false;
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < half; ++i)
    if (tokens[i] != tokens[i + half]) return false;
  return true;
}

MembershipVerdict classify(std::span<const Token> tokens, std::uint32_t k) {
  MembershipVerdict v;
  v.k = k;
  if (k == 1) v.dyck1_counting = recognize_counting_1dyck(tokens);
  v.kdyck_stack = recognize_stack_kdyck(tokens, k);
  v.kdyck_fom = recognize_fom_kdyck(tokens, k);
  v.shuffle = recognize_shuffle(tokens, k);
  v.ww = recognize_ww(tokens);
  v.disagreement = v.kdyck_stack != v.kdyck_fom;
  return v;
}

}  // namespace pptdata
