#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sptag/align.hpp"
#include "sptag/tag_view.hpp"
#include "sptag/transcript.hpp"

namespace sptag {

// Time range occupied by injected bursty noise, seconds.
struct NoiseWindow {
  double start = 0.0;
  double end = 0.0;
};

// A reference word with its forced-alignment-style timing.
struct TimedWord {
  std::string word;
  double start = 0.0;
  double end = 0.0;
};

enum class Domain { Short, Dictation, Caption };

// One evaluation unit.
struct UtteranceRecord {
  std::string id;
  std::vector<TimedWord> ref;
  TaggedTranscript hyp;
  std::optional<NoiseWindow> noise;
  std::optional<double> mic_close_time;
  Domain domain = Domain::Caption;
};

// A maximal run of deletions in an alignment, annotated with the start
// time of its first deleted reference word.
struct DeletionRun {
  int first_ref_index = 0;
  int last_ref_index = 0;
  int length = 0;
  double first_word_start = 0.0;
};

struct LongformReport {
  WerReport wer;
  // Maximal deletion runs, all of them; run_count is the number that
  // meet the length threshold and start at or after the noise end.
  std::vector<DeletionRun> runs;
  int run_count = 0;
};

struct LongformOptions {
  int threshold = 25;
  ViewKind view = ViewKind::AllSpeech;
};

// All maximal Delete runs of `a`, annotated from the reference timings.
std::vector<DeletionRun> deletion_runs(const Alignment& a,
                                       const std::vector<TimedWord>& ref);

// Long-form deletion metric for one record: hypothesis words are taken
// from the configured view, aligned against the timed reference, and
// maximal deletion runs of at least `threshold` words whose first
// deleted word starts at or after the noise end are counted. Without a
// noise window every long-enough run counts.
LongformReport longform_count(const UtteranceRecord& record,
                              const LongformOptions& opts = {});

// Endpointer latency for one Short-domain record: time from the end of
// the last reference word to mic close. Close time is mic_close_time if
// given, else the first <end-primary> emit time. Returns nullopt when
// the mic never closed; negative latencies (premature close) are kept.
// Throws MissingTimingsError when the reference is empty.
std::optional<double> ep_latency(const UtteranceRecord& record);

struct EpQuantiles {
  double ep50 = 0.0;
  double ep90 = 0.0;
};

// Nearest-rank quantiles: the value at 1-based index ceil(p * n) of the
// sorted list. Throws EmptyInputError on an empty list.
EpQuantiles ep_quantiles(std::vector<double> latencies);

// Seconds -> integer milliseconds, as reported ("260", "830").
std::string format_ms(double seconds);

}  // namespace sptag
