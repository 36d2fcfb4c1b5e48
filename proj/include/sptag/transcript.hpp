#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sptag {

// The two speaker-tag vocabulary tokens, as they appear in text form.
inline constexpr std::string_view kEndPrimary = "<end-primary>";
inline constexpr std::string_view kEndOthers = "<end-others>";

enum class TokenKind { Word, EndPrimary, EndOthers };

// A word or speaker-tag token, with an optional emit timestamp (seconds).
// Word tokens carry non-empty whitespace-free text; tag tokens carry none.
struct Token {
  TokenKind kind = TokenKind::Word;
  std::string text;
  std::optional<double> emit_time;

  static Token word(std::string text,
                    std::optional<double> emit = std::nullopt) {
    return Token{TokenKind::Word, std::move(text), emit};
  }
  static Token end_primary(std::optional<double> emit = std::nullopt) {
    return Token{TokenKind::EndPrimary, {}, emit};
  }
  static Token end_others(std::optional<double> emit = std::nullopt) {
    return Token{TokenKind::EndOthers, {}, emit};
  }

  bool is_tag() const { return kind != TokenKind::Word; }

  bool operator==(const Token& other) const {
    return kind == other.kind && text == other.text;
  }
};

// An ordered token sequence. Raw decode output may contain any tag
// pattern (repeated tags, leading tags); canonical form is produced by
// canonicalize_tags in tag_view.
struct TaggedTranscript {
  std::vector<Token> tokens;

  bool operator==(const TaggedTranscript& other) const {
    return tokens == other.tokens;
  }
};

enum class Speaker { Primary, Others, Untagged };

// A maximal run of word tokens ending at a tag, or a trailing run with
// no closing tag (Untagged). Zero-word segments are representable: raw
// decode output may emit back-to-back tags.
struct Segment {
  Speaker speaker = Speaker::Untagged;
  std::vector<Token> words;
  // The tag token that closed this segment; absent for Untagged.
  std::optional<Token> close_tag;

  std::string text() const;
};

// Splits `text` on whitespace. The tag literals <end-primary> and
// <end-others> become tag tokens; every other token, including unknown
// angle-bracket tokens like <end-of-speech>, is kept as a plain word.
TaggedTranscript parse_tagged(const std::string& text);

// Like parse_tagged, but every token becomes a plain word, even the tag
// literals. Used where an untagged transcript must stay untagged.
TaggedTranscript parse_plain(const std::string& text);

// Single-space-joined token text. Inverse of parse_tagged modulo emit
// times, which only serialize in the structured corpus format.
std::string render_tagged(const TaggedTranscript& t);

// Partitions the transcript into segments: each tag closes the run of
// words accumulated since the previous tag (possibly zero words), and a
// trailing run with no tag becomes a single Untagged segment.
std::vector<Segment> segments(const TaggedTranscript& t);

// Word tokens only, in order, tags dropped.
std::vector<Token> word_tokens(const TaggedTranscript& t);

// Word texts only, in order.
std::vector<std::string> words(const TaggedTranscript& t);

// Whitespace tokenization used throughout; no sub-word handling.
std::vector<std::string> split_words(const std::string& text);

// Single-space join.
std::string join_words(const std::vector<std::string>& words);

}  // namespace sptag
