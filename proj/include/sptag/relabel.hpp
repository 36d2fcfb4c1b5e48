#pragma once

#include <string>
#include <vector>

#include "sptag/normalize.hpp"
#include "sptag/transcript.hpp"

namespace sptag {

struct RelabelOptions {
  // Word-level edit tolerance between the primary transcript and the
  // primary-assigned words ("any one word difference" -> 1).
  int edit_budget = 1;
  // Hard ceiling on enumerated embeddings; exceeding it is treated as
  // ambiguity, which falls back safely.
  int enumeration_cap = 10000;
  // Segmented long-form data has arbitrary chunk boundaries, so the
  // trailing tag is stripped from tagged output.
  bool segmented = false;
};

// One way of embedding the primary transcript into the all-speakers
// transcript. `indices` are the positions in A (original token indices)
// that received a P word, one per matched or substituted P word, in
// increasing order. Edits record the word-level differences consumed:
//   SubstituteAt - P word p_index matched A word a_index with a
//                  different normalized form.
//   SkipP        - P word p_index has no counterpart in A.
//   AbsorbA      - unmatched A word a_index kept inside a primary run
//                  (transcription jitter, not a speaker turn).
struct Embedding {
  enum class EditKind { SubstituteAt, SkipP, AbsorbA };
  struct Edit {
    EditKind kind;
    int p_index = -1;
    int a_index = -1;
  };
  std::vector<int> indices;
  std::vector<Edit> edits;
};

struct EmbeddingSearch {
  std::vector<Embedding> embeddings;
  bool truncated = false;  // enumeration stopped at the cap
  int cost = 0;            // edits used by every returned embedding
};

// Enumerates the embeddings of P into A that an insert_tags call can
// realize, restricted to the best ones: minimum edit count first, most
// matched words as the tie-break. Structural rules:
//   - a non-primary (others) run needs at least two effective words; a
//     single stray word between primary words is absorbable, never a
//     segment of its own;
//   - when P is non-empty, at least one P word must actually land in A
//     (an all-skip embedding is not a match);
//   - empty-norm tokens are invisible to matching.
// Empty P yields one embedding assigning everything to others; empty A
// yields none.
EmbeddingSearch find_embeddings(const std::vector<NormalizedWord>& primary,
                                const std::vector<NormalizedWord>& all,
                                const RelabelOptions& opts = {});

// Materializes an embedding over A's surface words: maximal runs of
// primary words (matched, substituted or absorbed) get <end-primary>,
// runs of the remaining words get <end-others>, final run included.
// Empty-norm tokens attach to the preceding word's run, or the
// following run when they lead the transcript.
TaggedTranscript insert_tags(const std::vector<std::string>& all_surface,
                             const Embedding& emb);

enum class RelabelStatus { Tagged, FallbackNoMatch, FallbackAmbiguous };

struct RelabelOutcome {
  RelabelStatus status = RelabelStatus::FallbackNoMatch;
  // Tagged output on success; the original ground truth, tag-free, on
  // fallback.
  TaggedTranscript transcript;
  // Rendered output string. On fallback this is original_truth verbatim.
  std::string text;
  // Distinct tagged outputs found (capped).
  int match_count = 0;
  bool truncated = false;
};

// End-to-end relabeling of one utterance: tokenize, normalize, embed,
// insert tags per embedding, dedupe by rendered output. Exactly one
// distinct output succeeds; zero or several (or a capped enumeration)
// falls back to original_truth untouched.
RelabelOutcome relabel(const std::string& trans_primary,
                       const std::string& trans_all,
                       const std::string& original_truth,
                       const RelabelOptions& opts = {});

// Removes the final token when it is a tag. Segmented audio cuts at
// arbitrary points, so the closing tag there is meaningless.
TaggedTranscript strip_trailing_tag(const TaggedTranscript& t);

}  // namespace sptag
