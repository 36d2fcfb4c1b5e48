#pragma once

#include <optional>
#include <string>

#include "sptag/transcript.hpp"

namespace sptag {

// The two API views over a tagged transcript: only the primary
// speaker's words, or everything.
enum class ViewKind { PrimaryOnly, AllSpeech };

// Mic-close simulation result: everything the user-facing system keeps
// once the first <end-primary> closes the microphone.
struct MicCloseResult {
  std::string text;                 // words before the close point, no tags
  std::optional<double> close_time; // emit time of the first <end-primary>
};

// Decode output is not forced to alternate tags; it may repeat the same
// tag ("why is the <end-primary> sky blue <end-primary>") or lead with
// one. Canonicalization merges consecutive same-tag segments, drops
// zero-word segments, and yields strictly alternating tags with at most
// a trailing untagged run. Idempotent.
TaggedTranscript canonicalize_tags(const TaggedTranscript& t);

// PrimaryOnly: primary-segment words after canonicalization, plus any
// trailing untagged words (segmented training data strips trailing
// tags, so a transcript that ends mid-segment is still primary speech).
// AllSpeech: every word in order, tags stripped.
std::string view(const TaggedTranscript& t, ViewKind kind);

// Truncates at the first <end-primary>: words strictly before it become
// the kept text and its emit time, when carried, is the close time. A
// transcript with no <end-primary> keeps all words and no close time.
MicCloseResult endpoint_truncate(const TaggedTranscript& t);

}  // namespace sptag
