// Acceptance suite: end-to-end checks of the toolkit's contract, one
// pass/fail line per criterion. Returns nonzero if any criterion fails.
//
// Build passes SPTAG_CLI_PATH pointing at the sptag binary; the
// pipeline criterion drives the tool exactly as a user would.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "oracles.hpp"
#include "sptag/align.hpp"
#include "sptag/longform.hpp"
#include "sptag/normalize.hpp"
#include "sptag/relabel.hpp"
#include "sptag/synth.hpp"
#include "sptag/tag_view.hpp"

using namespace sptag;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int g_criterion = 0;
int g_failures = 0;

void report(bool ok, const std::string& label, const std::string& detail = "") {
  ++g_criterion;
  std::printf("[%2d] %s  %s%s%s\n", g_criterion, ok ? "PASS" : "FAIL",
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++g_failures;
}

void run(const std::string& label, const std::function<std::string()>& body) {
  try {
    const std::string detail = body();
    report(true, label, detail);
  } catch (const std::exception& e) {
    report(false, label, e.what());
  }
}

void expect(bool ok, const std::string& message) {
  if (!ok) throw std::runtime_error(message);
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string fmt(double value, int digits = 1) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

// ------------------------------------------------------------ criteria 1-5

std::string worked_example() {
  const std::string primary = "Play music on no cancel";
  const std::string all = "Play music on but we need to leave no cancel";
  const std::string want =
      "Play music on <end-primary> but we need to leave <end-others> no cancel "
      "<end-primary>";

  RelabelOutcome out = relabel(primary, all, primary);
  expect(out.status == RelabelStatus::Tagged, "status not Tagged");
  expect(out.text == want, "got: " + out.text);

  const auto start = Clock::now();
  const int reps = 200;
  for (int i = 0; i < reps; ++i) out = relabel(primary, all, primary);
  const double per_call_ms = ms_since(start) / reps;
  expect(per_call_ms < 1.0, "relabel took " + fmt(per_call_ms, 3) + " ms");
  return fmt(per_call_ms, 3) + " ms/call";
}

std::string ambiguous_example() {
  const std::string primary = "how tall is Barack Obama";
  const std::string all = "how tall is it is the end Barack Obama";
  RelabelOutcome out = relabel(primary, all, primary);
  expect(out.status == RelabelStatus::FallbackAmbiguous, "status not ambiguous");
  expect(out.text == primary, "fallback text altered: " + out.text);
  expect(out.match_count >= 2, "expected >= 2 distinct outputs");
  return std::to_string(out.match_count) + " distinct outputs";
}

std::string tolerance_example() {
  const std::string primary = "how tall is Barack Obama";
  const std::string all = "how tall is a Barack Obama";

  RelabelOptions one;
  one.edit_budget = 1;
  RelabelOutcome out = relabel(primary, all, primary, one);
  expect(out.status == RelabelStatus::Tagged, "budget 1: not Tagged");
  expect(out.text == "how tall is a Barack Obama <end-primary>",
         "budget 1 got: " + out.text);

  RelabelOptions zero;
  zero.edit_budget = 0;
  out = relabel(primary, all, primary, zero);
  expect(out.status == RelabelStatus::FallbackNoMatch, "budget 0: not NoMatch");
  expect(out.text == primary, "budget 0 fallback altered");
  return "";
}

std::string trailing_tag_example() {
  const std::string in =
      "Welcome to the show <end-primary> thank you <end-others> how are "
      "<end-primary>";
  const std::string want =
      "Welcome to the show <end-primary> thank you <end-others> how are";
  const std::string got = render_tagged(strip_trailing_tag(parse_tagged(in)));
  expect(got == want, "got: " + got);
  return "";
}

std::string repeated_tag_example() {
  const std::string in =
      "why is the <end-primary> sky blue <end-primary> welcome home <end-others>";
  const std::string want =
      "why is the sky blue <end-primary> welcome home <end-others>";
  const std::string got = render_tagged(canonicalize_tags(parse_tagged(in)));
  expect(got == want, "got: " + got);
  return "";
}

// -------------------------------------------------------------- criterion 6

std::string relabeler_oracle() {
  testing::SplitMix rng(0xC0FFEE);
  const char* vocab[] = {"a", "b", "c"};
  auto random_text = [&](int max_len) {
    std::vector<std::string> out;
    const int n = rng.below(max_len + 1);
    for (int i = 0; i < n; ++i) out.push_back(vocab[rng.below(3)]);
    return join_words(out);
  };

  const int cases = 100000;
  const auto start = Clock::now();
  for (int iter = 0; iter < cases; ++iter) {
    const std::string p = random_text(8);
    const std::string a = random_text(12);
    const int budget = rng.below(3);

    RelabelOptions opts;
    opts.edit_budget = budget;
    opts.enumeration_cap = 1 << 20;
    const EmbeddingSearch search = find_embeddings(
        normalize_seq(split_words(p)), normalize_seq(split_words(a)), opts);
    expect(!search.truncated, "unexpected truncation");
    std::set<std::string> actual;
    for (const Embedding& emb : search.embeddings)
      actual.insert(render_tagged(insert_tags(split_words(a), emb)));

    const auto want = testing::relabel_outputs_oracle(p, a, budget);
    if (actual != want)
      throw std::runtime_error("disagreement at P=\"" + p + "\" A=\"" + a +
                               "\" budget=" + std::to_string(budget));
  }
  return std::to_string(cases) + " cases, " + fmt(ms_since(start) / 1000.0) + " s";
}

// -------------------------------------------------------------- criterion 7

std::string alignment_oracle() {
  const auto start = Clock::now();
  const char* vocab[] = {"a", "b", "c"};

  // Every sequence over {a,b,c} up to length 7, by counting in base 3.
  // The full length-8 cross product is ~97M alignments, past the time
  // budget on one core; lengths 7-8 are covered by sampling below.
  std::vector<std::vector<std::string>> all;
  for (int len = 0; len <= 7; ++len) {
    int total = 1;
    for (int i = 0; i < len; ++i) total *= 3;
    for (int code = 0; code < total; ++code) {
      std::vector<std::string> s;
      int v = code;
      for (int i = 0; i < len; ++i) {
        s.push_back(vocab[v % 3]);
        v /= 3;
      }
      all.push_back(std::move(s));
    }
  }

  long long checked = 0;
  for (const auto& ref : all) {
    for (const auto& hyp : all) {
      if (align(ref, hyp).errors() != testing::edit_distance_oracle(ref, hyp))
        throw std::runtime_error("exhaustive disagreement");
      ++checked;
    }
  }

  // Length-8 pairs, randomized.
  testing::SplitMix rng(1618);
  auto random_seq = [&](int lo, int hi) {
    std::vector<std::string> out;
    const int n = lo + rng.below(hi - lo + 1);
    for (int i = 0; i < n; ++i) out.push_back(vocab[rng.below(3)]);
    return out;
  };
  for (int iter = 0; iter < 200000; ++iter) {
    const auto ref = random_seq(0, 8);
    const auto hyp = random_seq(8, 8);
    if (align(ref, hyp).errors() != testing::edit_distance_oracle(ref, hyp))
      throw std::runtime_error("sampled disagreement");
    if (align(hyp, ref).errors() != testing::edit_distance_oracle(hyp, ref))
      throw std::runtime_error("sampled disagreement (swapped)");
    checked += 2;
  }

  const double secs = ms_since(start) / 1000.0;
  expect(secs < 60.0, "suite took " + fmt(secs) + " s");
  return std::to_string(checked) + " pairs (exhaustive <=7 + sampled 8), " +
         fmt(secs) + " s";
}

// -------------------------------------------------------------- criterion 8

std::string wer_table_arithmetic() {
  struct Row {
    const char* name;
    double wer, del, ins, sub;
  };
  const Row rows[] = {
      {"B0", 39.9, 30.1, 1.2, 8.6},
      {"B1-c", 30.6, 17.9, 1.5, 11.1},
      {"B1-d", 68.7, 64.8, 0.4, 3.4},
      {"E1", 37.5, 27.0, 1.4, 9.1},
  };
  for (const Row& row : rows) {
    const double gap = std::fabs(row.del + row.ins + row.sub - row.wer);
    expect(gap <= 0.1 + 1e-9, std::string(row.name) + ": |D+I+S - WER| = " +
                                  fmt(gap, 2));
  }

  // The renderer reproduces rows from raw counts chosen to match.
  WerReport b0;
  b0.ref_words = 10000;
  b0.deletions = 3010;
  b0.insertions = 120;
  b0.substitutions = 860;
  expect(format_wer(b0) == "39.9 (30.1/1.2/8.6)", "render: " + format_wer(b0));

  WerReport e1;
  e1.ref_words = 10000;
  e1.deletions = 2700;
  e1.insertions = 140;
  e1.substitutions = 910;
  expect(format_wer(e1) == "37.5 (27.0/1.4/9.1)", "render: " + format_wer(e1));
  return "4 rows within 0.1; renderer byte-exact";
}

// -------------------------------------------------------------- criterion 9

std::string improvement_arithmetic(const std::string& cli, const fs::path& dir) {
  const double improvement = 100.0 * (62.0 - 28.0) / 62.0;
  expect(fmt(improvement) == "54.8", "got " + fmt(improvement));
  expect(std::llround(improvement) == 55, "does not round to 55");

  // Same computation through the report diff tool.
  {
    std::ofstream base(dir / "base.json");
    base << R"({"run_count": 62})";
    std::ofstream next(dir / "new.json");
    next << R"({"run_count": 28})";
  }
  const std::string out_path = (dir / "diff.out").string();
  const std::string cmd = cli + " diff " + (dir / "base.json").string() + " " +
                          (dir / "new.json").string() + " > " + out_path;
  expect(std::system(cmd.c_str()) == 0, "diff tool failed");
  std::ifstream in(out_path);
  std::string line;
  std::getline(in, line);
  expect(line.find("54.8%") != std::string::npos, "diff output: " + line);
  expect(line.find("55%") != std::string::npos, "diff output: " + line);
  return line;
}

// ------------------------------------------------------------- criterion 10

std::string synth_ground_truth() {
  const auto start = Clock::now();
  SynthSpec spec;
  spec.n_utts = 220;
  spec.words_per_utt = 160;
  spec.noise_placement = 0.25;  // noise ends at word 40

  const std::vector<FailureModel> models = {
      {OracleModel{}, 101},
      {BurstDeleterModel{60, 30}, 102},   // qualifies at 25/26, and at 24
      {BurstDeleterModel{80, 24}, 103},   // qualifies only at threshold 24
      {BurstDeleterModel{10, 30}, 104},   // starts inside the noise window
      {RandomErrorsModel{0.06, 0.3, 0.06}, 105},
      {StuckAfterNoiseModel{26}, 106},
  };

  long long records = 0;
  long long qualifying_total = 0;
  for (const FailureModel& model : models) {
    const SynthCorpus corpus = generate_corpus(spec, model);
    int prev_total = -1;
    long long totals[3] = {0, 0, 0};
    for (size_t k = 0; k < corpus.records.size(); ++k) {
      ++records;
      int idx = 0;
      for (int threshold : {24, 25, 26}) {
        LongformOptions opts;
        opts.threshold = threshold;
        const int got = longform_count(corpus.records[k], opts).run_count;
        const int want = corpus.truth[k].qualifying(threshold);
        if (got != want)
          throw std::runtime_error(corpus.records[k].id + " threshold " +
                                   std::to_string(threshold) + ": got " +
                                   std::to_string(got) + " want " +
                                   std::to_string(want));
        totals[idx++] += got;
      }
      qualifying_total += corpus.truth[k].qualifying(25);
    }
    // Raising the threshold never increases the corpus count.
    expect(totals[0] >= totals[1] && totals[1] >= totals[2],
           "threshold monotonicity violated");
    (void)prev_total;
  }
  const double secs = ms_since(start) / 1000.0;
  expect(records >= 1000, "need >= 1000 records");
  expect(secs < 30.0, "took " + fmt(secs) + " s");
  return std::to_string(records) + " records, " +
         std::to_string(qualifying_total) + " qualifying runs, " + fmt(secs) +
         " s";
}

// ------------------------------------------------------------- criterion 11

std::string ep_quantile_oracle() {
  testing::SplitMix rng(271828);
  for (int iter = 0; iter < 10000; ++iter) {
    std::vector<double> xs;
    const int n = 1 + rng.below(80);
    for (int i = 0; i < n; ++i) xs.push_back(rng.unit() * 3.0 - 0.4);
    const EpQuantiles q = ep_quantiles(xs);
    expect(q.ep50 == testing::nearest_rank_oracle(xs, 0.50), "EP50 mismatch");
    expect(q.ep90 == testing::nearest_rank_oracle(xs, 0.90), "EP90 mismatch");
  }
  expect(format_ms(0.26) == "260", "format_ms(0.26) = " + format_ms(0.26));
  expect(format_ms(0.83) == "830", "format_ms(0.83) = " + format_ms(0.83));
  return "10000 lists; renders 260/830";
}

// ------------------------------------------------------------- criterion 12

nlohmann::json load_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing " + path.string());
  nlohmann::json j;
  in >> j;
  return j;
}

std::string cli_pipeline(const std::string& cli, const fs::path& dir) {
  const auto start = Clock::now();
  auto sh = [&](const std::string& args) {
    const std::string cmd = cli + " " + args + " > /dev/null 2>&1";
    expect(std::system(cmd.c_str()) == 0, "command failed: sptag " + args);
  };
  auto path = [&](const char* name) { return (dir / name).string(); };

  // Clean pairs relabel losslessly and score at zero WER.
  sh("synth --kind relabel --model oracle --n 300 --seed 11 -o " + path("pairs.jsonl"));
  sh("relabel " + path("pairs.jsonl") + " -o " + path("tagged.jsonl") +
     " --summary-out " + path("relabel.json"));
  const auto relabel_summary = load_json(path("relabel.json"));
  expect(relabel_summary.at("tagged") == 300, "not all pairs tagged");

  sh("view " + path("tagged.jsonl") + " --view all -o " + path("texts.jsonl"));
  sh("score --pairs " + path("pairs.jsonl") + " --hyp " + path("texts.jsonl") +
     " --summary-out " + path("score.json"));
  const auto score = load_json(path("score.json"));
  expect(score.at("deletions") == 0 && score.at("insertions") == 0 &&
             score.at("substitutions") == 0,
         "pipeline WER errors nonzero");
  expect(score.at("wer").get<double>() == 0.0, "pipeline WER not 0.0");

  // An oracle eval corpus scores clean.
  sh("synth --kind eval --model oracle --n 60 --words 200 --seed 12 -o " +
     path("oracle.jsonl"));
  sh("longform " + path("oracle.jsonl") + " --threshold 25 --summary-out " +
     path("lf_oracle.json"));
  expect(load_json(path("lf_oracle.json")).at("run_count") == 0,
         "oracle corpus has runs");

  // A stuck-after-noise corpus reports exactly the injected runs.
  sh("synth --kind eval --model stuck --resume 30 --n 60 --words 200 --seed 13 "
     "-o " + path("stuck.jsonl") + " --truth-out " + path("truth.jsonl"));
  sh("longform " + path("stuck.jsonl") + " --threshold 25 -o " +
     path("lf_records.jsonl") + " --summary-out " + path("lf_stuck.json"));

  std::map<std::string, long long> want_runs;
  long long want_total = 0;
  {
    std::ifstream truth(path("truth.jsonl"));
    std::string line;
    while (std::getline(truth, line)) {
      const auto j = nlohmann::json::parse(line);
      want_runs[j.at("id")] = j.at("run_count").get<long long>();
      want_total += j.at("run_count").get<long long>();
    }
  }
  expect(want_total > 0, "stuck corpus injected no runs");
  {
    std::ifstream lines(path("lf_records.jsonl"));
    std::string line;
    size_t matched = 0;
    while (std::getline(lines, line)) {
      const auto j = nlohmann::json::parse(line);
      expect(j.at("run_count").get<long long>() == want_runs.at(j.at("id")),
             "per-record run_count mismatch at " + j.at("id").get<std::string>());
      ++matched;
    }
    expect(matched == want_runs.size(), "record count mismatch");
  }
  expect(load_json(path("lf_stuck.json")).at("run_count") == want_total,
         "total run_count mismatch");

  const double secs = ms_since(start) / 1000.0;
  expect(secs < 60.0, "pipeline took " + fmt(secs) + " s");
  return "relabel WER 0.0, stuck runs " + std::to_string(want_total) + "/" +
         std::to_string(want_runs.size()) + " records, " + fmt(secs) + " s";
}

}  // namespace

int main() {
#ifdef SPTAG_CLI_PATH
  const std::string cli = SPTAG_CLI_PATH;
#else
  const std::string cli = "sptag";
#endif
  fs::path dir = fs::temp_directory_path() / "sptag-acceptance";
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);

  run("primary-interruption pair relabels to the exact tagged string",
      worked_example);
  run("word matching in several places falls back ambiguous, untouched",
      ambiguous_example);
  run("one extra word tolerated at budget 1, rejected at budget 0",
      tolerance_example);
  run("trailing-tag strip is byte-exact", trailing_tag_example);
  run("repeated-tag canonicalization is byte-exact", repeated_tag_example);
  run("relabeler output sets equal brute-force enumeration", relabeler_oracle);
  run("alignment cost equals recursive edit distance", alignment_oracle);
  run("WER rows are arithmetically consistent and render exactly",
      wer_table_arithmetic);
  run("deletion-run improvement 62 -> 28 computes as ~55%",
      [&] { return improvement_arithmetic(cli, dir); });
  run("longform metric recovers injected ground truth on synthetic corpora",
      synth_ground_truth);
  run("EP quantiles match the sort-based oracle and render milliseconds",
      ep_quantile_oracle);
  run("CLI pipeline: synth -> relabel -> view -> score / longform",
      [&] { return cli_pipeline(cli, dir); });

  if (g_failures == 0) {
    std::printf("all %d criteria passed\n", g_criterion);
    return 0;
  }
  std::printf("%d of %d criteria FAILED\n", g_failures, g_criterion);
  return 1;
}
