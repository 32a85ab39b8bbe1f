#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pptdata/types.hpp"

namespace pptdata {

// Bracket vocabulary convention shared with the generators: for k pairs,
// token t < k opens type t and token t + k closes type t.

/// depths[i] = #opens - #closes among tokens[0..i], all types pooled.
std::vector<std::int64_t> depth_trace(std::span<const Token> tokens, std::uint32_t k);

/// 1-Dyck via the two-conjunct counting formula: final depth is zero and no
/// prefix has negative depth. Tokens must be 0 (open) or 1 (close).
bool recognize_counting_1dyck(std::span<const Token> tokens);

/// k-Dyck ground truth: a pushdown run.
bool recognize_stack_kdyck(std::span<const Token> tokens, std::uint32_t k);

/// k-Dyck via the counting-logic macro construction, evaluated position by
/// position in O(n^2):
///
///   depth(i)     = #j<=i [Q_( (j)] - #j<=i [Q_) (j)]
///   level(i)     = depth(i) + [Q_) (i)]
///   dindex(i)    = #j<=i [level(j) = level(i)]
///   paired(j, i) = [depth(j) = depth(i) + 1] and [dindex(i) = dindex(j) + 1]
///   match(j, i)  = OR_kappa [Q_(kappa (j) and Q_)kappa (i)]
///   closed(i)    = EXISTS j<=i [paired(j, i) and match(j, i)]
///
///   accept iff depth(n) = 0 and #i<=n [depth(i) < 0] = 0
///              and FORALL i<=n [Q_) (i) -> closed(i)]
///
/// `level` is the depth measured before a closing token and after an opening
/// one, so an open and its partner share a level. Positions at one level then
/// alternate open/close, which is why the partner's dindex is one larger.
bool recognize_fom_kdyck(std::span<const Token> tokens, std::uint32_t k);

/// The same construction with dindex counted over raw depth and required to
/// be equal for partners. Kept to document the indexing problem: it rejects
/// "(())" because the inner close and inner open land on different counts.
bool recognize_fom_kdyck_unadjusted(std::span<const Token> tokens, std::uint32_t k);

/// Per-type balance and prefix safety: k independent 1-Dyck counters.
bool recognize_shuffle(std::span<const Token> tokens, std::uint32_t k);

/// Nonempty, even length, first half equals second half.
bool recognize_ww(std::span<const Token> tokens);

struct MembershipVerdict {
  std::optional<bool> dyck1_counting;  // only for k = 1
  bool kdyck_stack = false;
  bool kdyck_fom = false;
  bool shuffle = false;
  bool ww = false;
  std::uint32_t k = 0;
  bool disagreement = false;  // kdyck_stack != kdyck_fom

  friend bool operator==(const MembershipVerdict&, const MembershipVerdict&) = default;
};

MembershipVerdict classify(std::span<const Token> tokens, std::uint32_t k);

inline bool recognize_stack_kdyck(const TokenSeq& s, std::uint32_t k) {
  return recognize_stack_kdyck(std::span<const Token>(s.tokens), k);
}
inline bool recognize_shuffle(const TokenSeq& s, std::uint32_t k) {
  return recognize_shuffle(std::span<const Token>(s.tokens), k);
}
inline bool recognize_ww(const TokenSeq& s) { return recognize_ww(std::span<const Token>(s.tokens)); }

}  // namespace pptdata
