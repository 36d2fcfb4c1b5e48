#include "sptag/transcript.hpp"

#include <cctype>

namespace sptag {

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) out.emplace_back(text.substr(start, i - start));
  }
  return out;
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i];
  }
  return out;
}

std::string Segment::text() const {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += words[i].text;
  }
  return out;
}

TaggedTranscript parse_tagged(const std::string& text) {
  TaggedTranscript t;
  for (auto& w : split_words(text)) {
    if (w == kEndPrimary) {
      t.tokens.push_back(Token::end_primary());
    } else if (w == kEndOthers) {
      t.tokens.push_back(Token::end_others());
    } else {
      t.tokens.push_back(Token::word(std::move(w)));
    }
  }
  return t;
}

TaggedTranscript parse_plain(const std::string& text) {
  TaggedTranscript t;
  for (auto& w : split_words(text)) t.tokens.push_back(Token::word(std::move(w)));
  return t;
}

std::string render_tagged(const TaggedTranscript& t) {
  std::string out;
  for (size_t i = 0; i < t.tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    const Token& tok = t.tokens[i];
    switch (tok.kind) {
      case TokenKind::Word:
        out += tok.text;
        break;
      case TokenKind::EndPrimary:
        out += kEndPrimary;
        break;
      case TokenKind::EndOthers:
        out += kEndOthers;
        break;
    }
  }
  return out;
}

std::vector<Segment> segments(const TaggedTranscript& t) {
  std::vector<Segment> out;
  std::vector<Token> run;
  for (const Token& tok : t.tokens) {
    if (tok.kind == TokenKind::Word) {
      run.push_back(tok);
      continue;
    }
    Segment seg;
    seg.speaker =
        tok.kind == TokenKind::EndPrimary ? Speaker::Primary : Speaker::Others;
    seg.words = std::move(run);
    seg.close_tag = tok;
    out.push_back(std::move(seg));
    run.clear();
  }
  if (!run.empty()) {
    Segment seg;
    seg.speaker = Speaker::Untagged;
    seg.words = std::move(run);
    out.push_back(std::move(seg));
  }
  return out;
}

std::vector<Token> word_tokens(const TaggedTranscript& t) {
  std::vector<Token> out;
  for (const Token& tok : t.tokens)
    if (tok.kind == TokenKind::Word) out.push_back(tok);
  return out;
}

std::vector<std::string> words(const TaggedTranscript& t) {
  std::vector<std::string> out;
  for (const Token& tok : t.tokens)
    if (tok.kind == TokenKind::Word) out.push_back(tok.text);
  return out;
}

}  // namespace sptag
