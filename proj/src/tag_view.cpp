#include "sptag/tag_view.hpp"

namespace sptag {

TaggedTranscript canonicalize_tags(const TaggedTranscript& t) {
  std::vector<Segment> segs = segments(t);

  // Drop zero-word segments, then merge neighbors with the same
  // speaker. A merged segment keeps the tag token that closed its last
  // constituent.
  std::vector<Segment> merged;
  for (Segment& seg : segs) {
    if (seg.words.empty() && seg.speaker != Speaker::Untagged) continue;
    if (!merged.empty() && merged.back().speaker == seg.speaker &&
        seg.speaker != Speaker::Untagged) {
      auto& prev = merged.back();
      prev.words.insert(prev.words.end(), seg.words.begin(), seg.words.end());
      prev.close_tag = seg.close_tag;
    } else {
      merged.push_back(std::move(seg));
    }
  }

  TaggedTranscript out;
  for (const Segment& seg : merged) {
    out.tokens.insert(out.tokens.end(), seg.words.begin(), seg.words.end());
    if (seg.close_tag) out.tokens.push_back(*seg.close_tag);
  }
  return out;
}

std::string view(const TaggedTranscript& t, ViewKind kind) {
  if (kind == ViewKind::AllSpeech) return join_words(words(t));

  std::string out;
  for (const Segment& seg : segments(canonicalize_tags(t))) {
    if (seg.speaker == Speaker::Others) continue;
    for (const Token& w : seg.words) {
      if (!out.empty()) out.push_back(' ');
      out += w.text;
    }
  }
  return out;
}

MicCloseResult endpoint_truncate(const TaggedTranscript& t) {
  MicCloseResult res;
  std::vector<std::string> kept;
  for (const Token& tok : t.tokens) {
    if (tok.kind == TokenKind::EndPrimary) {
      res.close_time = tok.emit_time;
      res.text = join_words(kept);
      return res;
    }
    if (tok.kind == TokenKind::Word) kept.push_back(tok.text);
  }
  res.text = join_words(kept);
  return res;
}

}  // namespace sptag
