#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sptag/longform.hpp"
#include "sptag/relabel.hpp"

namespace sptag {

// Hypothesis failure models. Each one mutates a perfect transcript in a
// way whose alignment consequences are known at generation time, so the
// metrics can be validated against injected ground truth rather than
// against themselves.
struct OracleModel {};

// Deletes burst_len consecutive words starting at burst_start_word.
struct BurstDeleterModel {
  int burst_start_word = 0;
  int burst_len = 0;
};

// Independent per-word errors. Substituted and inserted words are
// unique markers, and errors never touch words adjacent to a deletion,
// so the injected deletion runs are exactly what alignment recovers.
struct RandomErrorsModel {
  double sub_p = 0.0;
  double del_p = 0.0;
  double ins_p = 0.0;
};

// Goes silent right after the noise window ends and resumes
// resume_after_words later: the canonical stuck-after-noise failure.
struct StuckAfterNoiseModel {
  int resume_after_words = 0;
};

struct FailureModel {
  std::variant<OracleModel, BurstDeleterModel, RandomErrorsModel,
               StuckAfterNoiseModel>
      kind;
  uint64_t seed = 0;
};

struct SynthSpec {
  int n_utts = 1;
  int words_per_utt = 100;
  double word_duration = 0.4;    // seconds; word i spans [i*d, (i+1)*d]
  double noise_placement = 0.3;  // fraction of the utterance where noise ends
};

// One injected deletion run, recorded at generation time.
struct InjectedRun {
  int first_ref_index = 0;
  int length = 0;
  double first_word_start = 0.0;
};

// Per-record ground truth, computed constructively (not via the metric
// under test).
struct RecordTruth {
  std::string id;
  std::vector<InjectedRun> runs;
  std::optional<NoiseWindow> noise;

  // Injected runs meeting the length threshold and the time gate.
  int qualifying(int threshold) const;
};

struct SynthCorpus {
  std::vector<UtteranceRecord> records;
  std::vector<RecordTruth> truth;
};

// Deterministic for a fixed seed: record k draws from an independent
// stream keyed by hash(seed, k), so generation order never matters.
// Throws InvalidSpecError on out-of-range parameters.
SynthCorpus generate_corpus(const SynthSpec& spec, const FailureModel& model);

enum class ExpectedOutcome { Tagged, FallbackNoMatch, FallbackAmbiguous };

// A relabeler test fixture with its outcome known by construction.
struct RelabelPair {
  std::string id;
  std::string trans_primary;
  std::string trans_all;
  std::string original_truth;
  bool segmented = false;
  ExpectedOutcome expected = ExpectedOutcome::Tagged;
  // The exact output text relabel must produce for this pair.
  std::string expected_text;
};

struct RelabelPairSpec {
  int n_pairs = 1;
  uint64_t seed = 0;
  // Clean pairs only (every pair relabels cleanly; used for pipeline
  // validation). Otherwise a mix of clean / one-word-difference /
  // ambiguous / no-match / empty-primary cases.
  bool clean_only = false;
};

// Synthesizes tagged ground truth first, then derives the transcript
// pair from it, optionally perturbing it to exercise one failure mode.
// Built for the default edit budget of 1.
std::vector<RelabelPair> generate_relabel_pairs(const RelabelPairSpec& spec);

}  // namespace sptag
