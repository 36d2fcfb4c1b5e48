#pragma once

#include <string>
#include <vector>

namespace sptag {

// A token's surface form together with its matching key. Normalization
// is token-count preserving: one NormalizedWord per input token, never
// split or merged, so positions computed on normalized sequences map
// 1:1 back to surface tokens.
struct NormalizedWord {
  std::string surface;
  std::string norm;

  // Pure-punctuation tokens normalize to "". The matcher skips them;
  // tag insertion keeps them attached to a neighboring word's segment.
  bool empty_norm() const { return norm.empty(); }
};

// Lowercases and strips punctuation: ASCII letters are folded to
// lowercase, ASCII digits kept, all other ASCII dropped. Bytes >= 0x80
// are kept verbatim, so multi-byte UTF-8 words still match byte-wise
// without a full Unicode table.
NormalizedWord normalize_word(const std::string& raw);

// Element-wise normalize_word; |result| == |words| always.
std::vector<NormalizedWord> normalize_seq(const std::vector<std::string>& words);

}  // namespace sptag
