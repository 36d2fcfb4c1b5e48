#include "sptag/synth.hpp"

#include <algorithm>

#include "sptag/errors.hpp"

namespace sptag {
namespace {

// splitmix64: deterministic across platforms, trivially splittable by
// reseeding with hash(seed, index).
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // [0, n)
  int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }

  // [lo, hi] inclusive
  int between(int lo, int hi) { return lo + below(hi - lo + 1); }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

uint64_t record_seed(uint64_t seed, uint64_t index) {
  Rng mix(seed ^ (index * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL));
  return mix.next();
}

const char* const kVocab[] = {
    "the",   "a",     "to",    "of",    "and",  "in",  "is",    "it",
    "you",   "that",  "was",   "for",   "on",   "are", "with",  "as",
    "his",   "they",  "be",    "at",    "one",  "have", "this", "from",
    "or",    "had",   "by",    "hot",   "word", "but", "what",  "some",
    "we",    "can",   "out",   "other", "were", "all", "there", "when",
    "up",    "use",   "your",  "how",   "said", "an",  "each",  "she",
    "which", "do",    "their", "time",  "if"};
constexpr int kVocabSize = static_cast<int>(sizeof(kVocab) / sizeof(kVocab[0]));

// Word at position i, rotated by `offset`, made distinct within the
// utterance by suffixing past one vocabulary cycle.
std::string ref_word(int i, int offset) {
  std::string w = kVocab[(i + offset) % kVocabSize];
  if (i >= kVocabSize) w += "-" + std::to_string(i / kVocabSize);
  return w;
}

NoiseWindow make_noise(const SynthSpec& spec) {
  const int n = spec.words_per_utt;
  int end_word = std::clamp(static_cast<int>(n * spec.noise_placement), 1, n);
  int width = std::max(1, n / 10);
  int start_word = std::max(0, end_word - width);
  return NoiseWindow{start_word * spec.word_duration, end_word * spec.word_duration};
}

void validate(const SynthSpec& spec) {
  if (spec.n_utts < 1) throw InvalidSpecError("n_utts must be >= 1");
  if (spec.words_per_utt < 1) throw InvalidSpecError("words_per_utt must be >= 1");
  if (spec.word_duration <= 0) throw InvalidSpecError("word_duration must be > 0");
  if (spec.noise_placement <= 0 || spec.noise_placement >= 1)
    throw InvalidSpecError("noise_placement must be in (0,1)");
}

}  // namespace

int RecordTruth::qualifying(int threshold) const {
  int count = 0;
  for (const InjectedRun& run : runs) {
    if (run.length < threshold) continue;
    if (noise && run.first_word_start < noise->end) continue;
    ++count;
  }
  return count;
}

SynthCorpus generate_corpus(const SynthSpec& spec, const FailureModel& model) {
  validate(spec);
  if (const auto* burst = std::get_if<BurstDeleterModel>(&model.kind)) {
    if (burst->burst_start_word < 0 || burst->burst_len < 1 ||
        burst->burst_start_word + burst->burst_len > spec.words_per_utt)
      throw InvalidSpecError("burst exceeds reference length");
  }
  if (const auto* random = std::get_if<RandomErrorsModel>(&model.kind)) {
    for (double p : {random->sub_p, random->del_p, random->ins_p})
      if (p < 0 || p > 1) throw InvalidSpecError("probability outside [0,1]");
  }
  if (const auto* stuck = std::get_if<StuckAfterNoiseModel>(&model.kind)) {
    if (stuck->resume_after_words < 0)
      throw InvalidSpecError("resume_after_words must be >= 0");
  }

  SynthCorpus corpus;
  corpus.records.reserve(spec.n_utts);
  corpus.truth.reserve(spec.n_utts);
  const int n = spec.words_per_utt;
  const double d = spec.word_duration;
  const NoiseWindow noise = make_noise(spec);
  const int noise_end_word = static_cast<int>(noise.end / d + 0.5);

  for (int k = 0; k < spec.n_utts; ++k) {
    Rng rng(record_seed(model.seed, static_cast<uint64_t>(k)));
    const int offset = rng.below(kVocabSize);

    UtteranceRecord rec;
    rec.id = "synth-" + std::to_string(k);
    rec.domain = Domain::Caption;
    rec.noise = noise;
    rec.ref.reserve(n);
    for (int i = 0; i < n; ++i)
      rec.ref.push_back({ref_word(i, offset), i * d, (i + 1) * d});

    RecordTruth truth;
    truth.id = rec.id;
    truth.noise = noise;

    // deleted[i] marks ref word i as silently dropped; everything else
    // is emitted (possibly substituted), so injected deletion runs are
    // exactly the maximal blocks of deleted positions.
    std::vector<bool> deleted(n, false);
    std::vector<bool> substituted(n, false);
    std::vector<bool> insert_after(n + 1, false);  // slot i = before word i

    if (std::get_if<BurstDeleterModel>(&model.kind)) {
      const auto& burst = std::get<BurstDeleterModel>(model.kind);
      for (int i = burst.burst_start_word; i < burst.burst_start_word + burst.burst_len; ++i)
        deleted[i] = true;
    } else if (std::get_if<StuckAfterNoiseModel>(&model.kind)) {
      const auto& stuck = std::get<StuckAfterNoiseModel>(model.kind);
      const int len = std::min(stuck.resume_after_words, n - noise_end_word);
      for (int i = noise_end_word; i < noise_end_word + len; ++i) deleted[i] = true;
    } else if (std::get_if<RandomErrorsModel>(&model.kind)) {
      const auto& random = std::get<RandomErrorsModel>(model.kind);
      for (int i = 0; i < n; ++i) {
        const double u = rng.unit();
        if (u < random.del_p)
          deleted[i] = true;
        else if (u < random.del_p + random.sub_p)
          substituted[i] = true;
      }
      for (int i = 0; i <= n; ++i)
        if (rng.unit() < random.ins_p) insert_after[i] = true;
      // Keep errors away from deletion boundaries so the injected runs
      // are what a minimum-cost alignment must reconstruct.
      for (int i = 0; i < n; ++i) {
        const bool next_to_del = (i > 0 && deleted[i - 1]) || (i + 1 < n && deleted[i + 1]);
        if (substituted[i] && next_to_del) substituted[i] = false;
      }
      for (int i = 0; i <= n; ++i) {
        const bool gap_touches_del = (i > 0 && deleted[i - 1]) || (i < n && deleted[i]);
        if (insert_after[i] && gap_touches_del) insert_after[i] = false;
      }
    }

    int ins_counter = 0;
    for (int i = 0; i <= n; ++i) {
      if (insert_after[i])
        rec.hyp.tokens.push_back(
            Token::word("0ins" + std::to_string(ins_counter++)));
      if (i == n) break;
      if (deleted[i]) continue;
      if (substituted[i])
        rec.hyp.tokens.push_back(Token::word("0" + rec.ref[i].word));
      else
        rec.hyp.tokens.push_back(Token::word(rec.ref[i].word));
    }

    int run_start = -1;
    for (int i = 0; i <= n; ++i) {
      if (i < n && deleted[i]) {
        if (run_start < 0) run_start = i;
      } else if (run_start >= 0) {
        truth.runs.push_back({run_start, i - run_start, run_start * d});
        run_start = -1;
      }
    }

    corpus.records.push_back(std::move(rec));
    corpus.truth.push_back(std::move(truth));
  }
  return corpus;
}

namespace {

struct PairBuilder {
  Rng rng;
  std::vector<int> order;  // shuffled vocabulary indices, drawn without replacement
  size_t next_word = 0;

  explicit PairBuilder(uint64_t seed) : rng(seed) {
    order.resize(kVocabSize);
    for (int i = 0; i < kVocabSize; ++i) order[i] = i;
    for (int i = kVocabSize - 1; i > 0; --i)
      std::swap(order[i], order[rng.below(i + 1)]);
  }

  std::string draw() { return kVocab[order[next_word++ % order.size()]]; }
};

// A tagged ground-truth skeleton: alternating segments, others runs of
// at least two words, every word distinct within the pair.
struct Skeleton {
  std::vector<std::vector<std::string>> segs;
  std::vector<bool> seg_primary;

  std::string primary_text() const {
    std::vector<std::string> out;
    for (size_t s = 0; s < segs.size(); ++s)
      if (seg_primary[s]) out.insert(out.end(), segs[s].begin(), segs[s].end());
    return join_words(out);
  }
  std::string all_text() const {
    std::vector<std::string> out;
    for (const auto& seg : segs) out.insert(out.end(), seg.begin(), seg.end());
    return join_words(out);
  }
  std::string tagged_text() const {
    std::string out;
    for (size_t s = 0; s < segs.size(); ++s) {
      for (const auto& w : segs[s]) {
        if (!out.empty()) out.push_back(' ');
        out += w;
      }
      out.push_back(' ');
      out += seg_primary[s] ? kEndPrimary : kEndOthers;
    }
    return out;
  }
};

Skeleton make_skeleton(PairBuilder& b, int min_primary_seg_words) {
  Skeleton sk;
  const int n_segs = b.rng.between(1, 4);
  bool primary = n_segs == 1 ? true : b.rng.below(2) == 0;
  for (int s = 0; s < n_segs; ++s, primary = !primary) {
    const int len = primary ? b.rng.between(min_primary_seg_words, 4)
                            : b.rng.between(2, 4);
    std::vector<std::string> seg;
    for (int w = 0; w < len; ++w) seg.push_back(b.draw());
    sk.segs.push_back(std::move(seg));
    sk.seg_primary.push_back(primary);
  }
  // A pair needs primary content somewhere; re-roll single others runs.
  if (sk.segs.size() == 1 && !sk.seg_primary[0]) sk.seg_primary[0] = true;
  return sk;
}

std::string strip_last_tag_text(const std::string& tagged) {
  return render_tagged(strip_trailing_tag(parse_tagged(tagged)));
}

}  // namespace

std::vector<RelabelPair> generate_relabel_pairs(const RelabelPairSpec& spec) {
  if (spec.n_pairs < 1) throw InvalidSpecError("n_pairs must be >= 1");
  std::vector<RelabelPair> pairs;
  pairs.reserve(spec.n_pairs);

  for (int k = 0; k < spec.n_pairs; ++k) {
    PairBuilder b(record_seed(spec.seed, static_cast<uint64_t>(k)));
    const int kind = spec.clean_only ? 0 : b.rng.below(5);

    RelabelPair pair;
    pair.id = "pair-" + std::to_string(k);

    switch (kind) {
      case 0: {  // clean
        Skeleton sk = make_skeleton(b, 1);
        pair.trans_primary = sk.primary_text();
        pair.trans_all = sk.all_text();
        pair.original_truth = sk.all_text();
        pair.segmented = spec.clean_only ? false : b.rng.below(2) == 0;
        pair.expected = ExpectedOutcome::Tagged;
        pair.expected_text =
            pair.segmented ? strip_last_tag_text(sk.tagged_text()) : sk.tagged_text();
        break;
      }
      case 1: {  // one extra word in A, absorbed into a primary run
        Skeleton sk = make_skeleton(b, 2);
        pair.trans_primary = sk.primary_text();
        const std::string marker = "7x" + std::to_string(k);
        // Insert strictly between two words of a primary segment.
        int seg = -1;
        for (size_t s = 0; s < sk.segs.size(); ++s)
          if (sk.seg_primary[s] && sk.segs[s].size() >= 2) seg = static_cast<int>(s);
        auto& words = sk.segs[seg];
        const int pos = b.rng.between(1, static_cast<int>(words.size()) - 1);
        words.insert(words.begin() + pos, marker);
        pair.trans_all = sk.all_text();
        pair.original_truth = sk.all_text();
        pair.expected = ExpectedOutcome::Tagged;
        pair.expected_text = sk.tagged_text();
        break;
      }
      case 2: {  // duplicated word straddling an others run -> ambiguous
        Skeleton sk = make_skeleton(b, 2);
        // Force the shape: primary seg, 4-word others seg whose second
        // word duplicates the primary seg's last word, primary seg.
        sk.segs.clear();
        sk.seg_primary.clear();
        std::vector<std::string> p1, o1, p2;
        for (int i = 0; i < 3; ++i) p1.push_back(b.draw());
        o1 = {b.draw(), p1.back(), b.draw(), b.draw()};
        for (int i = 0; i < 2; ++i) p2.push_back(b.draw());
        sk.segs = {p1, o1, p2};
        sk.seg_primary = {true, false, true};
        pair.trans_primary = sk.primary_text();
        pair.trans_all = sk.all_text();
        pair.original_truth = pair.trans_primary;
        pair.expected = ExpectedOutcome::FallbackAmbiguous;
        pair.expected_text = pair.original_truth;
        break;
      }
      case 3: {  // two corrupted primary words -> beyond the edit budget
        Skeleton sk = make_skeleton(b, 2);
        pair.trans_all = sk.all_text();
        pair.original_truth = sk.all_text();
        std::vector<std::string> p = split_words(sk.primary_text());
        const int first = b.rng.below(static_cast<int>(p.size()));
        int second = b.rng.below(static_cast<int>(p.size()));
        if (second == first) second = (second + 1) % static_cast<int>(p.size());
        p[first] = "9q" + std::to_string(k);
        p[second] = "9r" + std::to_string(k);
        pair.trans_primary = join_words(p);
        pair.expected = ExpectedOutcome::FallbackNoMatch;
        pair.expected_text = pair.original_truth;
        break;
      }
      default: {  // empty primary transcript
        Skeleton sk = make_skeleton(b, 1);
        pair.trans_primary = "";
        pair.trans_all = sk.all_text();
        pair.original_truth = sk.all_text();
        pair.expected = ExpectedOutcome::Tagged;
        pair.expected_text = sk.all_text() + " " + std::string(kEndOthers);
        break;
      }
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace sptag
