#include "sptag/normalize.hpp"

namespace sptag {

NormalizedWord normalize_word(const std::string& raw) {
  NormalizedWord out;
  out.surface = raw;
  out.norm.reserve(raw.size());
  for (unsigned char c : raw) {
    if (c >= 'A' && c <= 'Z') {
      out.norm.push_back(static_cast<char>(c - 'A' + 'a'));
    } else if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80) {
      out.norm.push_back(static_cast<char>(c));
    }
  }
  return out;
}

std::vector<NormalizedWord> normalize_seq(const std::vector<std::string>& words) {
  std::vector<NormalizedWord> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(normalize_word(w));
  return out;
}

}  // namespace sptag
