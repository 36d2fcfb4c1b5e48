// Command-line surface for the speaker-tag corpus tools: relabeling,
// tagged-transcript views, WER / long-form deletion / endpointer
// scoring, synthetic corpus generation, and report diffing. All corpus
// I/O is JSONL, one record per line, streamed.

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sptag/corpus_io.hpp"
#include "sptag/errors.hpp"

using namespace sptag;

namespace {

struct IoFlags {
  bool lenient = false;
  IoMode mode() const { return lenient ? IoMode::Lenient : IoMode::Strict; }
};

void add_io_flags(CLI::App* cmd, IoFlags& flags) {
  auto* lenient = cmd->add_flag("--lenient", flags.lenient,
                                "Skip malformed lines with a diagnostic");
  cmd->add_flag("--strict", "Abort on the first malformed line (default)")
      ->excludes(lenient);
}

// --format jsonl sends record lines to stdout when no -o target is set;
// --format summary (the default) prints only the summary.
void add_format_flag(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "jsonl|summary")
      ->check(CLI::IsMember({"jsonl", "summary"}));
}

std::string resolve_output(const std::string& output, const std::string& format) {
  if (output.empty() && format == "jsonl") return "-";
  return output;
}

DiagFn stderr_diag(const std::string& path) {
  return [path](size_t line, const std::string& message) {
    std::cerr << path << ":" << line << ": skipped: " << message << "\n";
  };
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

// Record sink honoring -o: JSONL lines go to a file, to stdout when the
// path is "-", or nowhere.
class RecordWriter {
 public:
  explicit RecordWriter(const std::string& out_path) {
    if (out_path == "-") {
      stream_ = &std::cout;
    } else if (!out_path.empty()) {
      file_ = std::make_unique<std::ofstream>(out_path);
      if (!*file_) throw IoError("cannot write " + out_path);
      stream_ = file_.get();
    }
  }

  void write(const Json& j) {
    if (stream_) *stream_ << j.dump() << "\n";
  }

  bool to_stdout() const { return stream_ == &std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_ = nullptr;
};

// The human-readable summary goes to stdout unless record lines already
// own it, in which case it moves to stderr so stdout stays pipeable.
std::ostream& summary_stream(const RecordWriter& writer) {
  return writer.to_stdout() ? std::cerr : std::cout;
}

void write_summary_json(const std::string& path, const Json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int env_jobs() {
  const char* env = std::getenv("SPTAG_JOBS");
  if (!env) return 1;
  const int jobs = std::atoi(env);
  return jobs > 0 ? jobs : 1;
}

// Applies fn to a batch in parallel, emitting results in input order.
template <typename In, typename Out, typename Fn>
void parallel_map_ordered(std::vector<In>& batch, int jobs, Fn&& fn,
                          const std::function<void(Out&)>& emit) {
  if (jobs <= 1 || batch.size() <= 1) {
    for (In& item : batch) {
      Out out = fn(item);
      emit(out);
    }
    return;
  }
  std::vector<std::future<std::vector<Out>>> futures;
  const size_t stride = (batch.size() + jobs - 1) / jobs;
  for (size_t begin = 0; begin < batch.size(); begin += stride) {
    const size_t end = std::min(begin + stride, batch.size());
    futures.push_back(std::async(std::launch::async, [&, begin, end] {
      std::vector<Out> outs;
      outs.reserve(end - begin);
      for (size_t i = begin; i < end; ++i) outs.push_back(fn(batch[i]));
      return outs;
    }));
  }
  for (auto& future : futures)
    for (Out& out : future.get()) emit(out);
}

Json wer_summary_json(const WerReport& pooled, size_t records) {
  Json j;
  j["records"] = records;
  j["ref_words"] = pooled.ref_words;
  j["deletions"] = pooled.deletions;
  j["insertions"] = pooled.insertions;
  j["substitutions"] = pooled.substitutions;
  j["wer"] = pooled.wer();
  j["formatted"] = format_wer(pooled);
  return j;
}

// ---------------------------------------------------------------- relabel

struct RelabelCli {
  std::string input, output, summary_out;
  std::string format = "summary";
  IoFlags io;
  RelabelOptions opts;
  bool force_segmented = false;
  int jobs = env_jobs();

  int run() {
    auto in = open_input(input);
    RecordWriter writer(resolve_output(output, format));

    size_t tagged = 0, no_match = 0, ambiguous = 0, failed = 0;
    struct Done {
      std::string id;
      std::optional<RelabelOutcome> outcome;
      std::string error;
    };
    auto process = [&](RelabelRecord& rec) {
      Done done;
      done.id = rec.id;
      RelabelOptions per = opts;
      per.segmented = rec.segmented || force_segmented;
      try {
        done.outcome =
            relabel(rec.trans_primary, rec.trans_all, rec.original_truth, per);
      } catch (const std::exception& e) {
        done.error = e.what();
      }
      return done;
    };
    std::function<void(Done&)> emit = [&](Done& done) {
      if (!done.outcome) {
        ++failed;
        std::cerr << "record " << done.id << ": " << done.error << "\n";
        return;
      }
      const RelabelOutcome& out = *done.outcome;
      switch (out.status) {
        case RelabelStatus::Tagged: ++tagged; break;
        case RelabelStatus::FallbackNoMatch: ++no_match; break;
        case RelabelStatus::FallbackAmbiguous: ++ambiguous; break;
      }
      Json line;
      line["id"] = done.id;
      line["status"] = relabel_status_name(out.status);
      line["transcript"] = out.text;
      line["match_count"] = out.match_count;
      if (out.truncated) line["truncated"] = true;
      writer.write(line);
    };

    // Chunked so memory stays bounded by the batch, not the file.
    const size_t chunk = static_cast<size_t>(jobs) * 64;
    std::vector<RelabelRecord> batch;
    ReadStats stats = read_relabel_records(
        in, io.mode(),
        [&](RelabelRecord rec) {
          batch.push_back(std::move(rec));
          if (batch.size() >= chunk) {
            parallel_map_ordered<RelabelRecord, Done>(batch, jobs, process, emit);
            batch.clear();
          }
        },
        stderr_diag(input));
    parallel_map_ordered<RelabelRecord, Done>(batch, jobs, process, emit);

    const size_t total = tagged + no_match + ambiguous;
    std::ostream& os = summary_stream(writer);
    os << "relabeled " << total << " records: " << tagged << " tagged, "
       << no_match << " fallback (no match), " << ambiguous
       << " fallback (ambiguous)";
    if (failed) os << ", " << failed << " failed";
    if (stats.skipped) os << ", " << stats.skipped << " lines skipped";
    os << "\n";

    Json summary;
    summary["records"] = total;
    summary["tagged"] = tagged;
    summary["fallback_no_match"] = no_match;
    summary["fallback_ambiguous"] = ambiguous;
    summary["failed"] = failed;
    summary["skipped_lines"] = stats.skipped;
    write_summary_json(summary_out, summary);
    return failed == 0 ? 0 : 2;
  }
};

// ------------------------------------------------------------------- view

struct ViewCli {
  std::string input, output;
  std::string format = "summary";
  std::string view_name = "primary";
  IoFlags io;

  int run() {
    const ViewKind kind =
        view_name == "all" ? ViewKind::AllSpeech : ViewKind::PrimaryOnly;
    auto in = open_input(input);
    RecordWriter writer(resolve_output(output, format));
    size_t count = 0;
    read_json_lines(
        in, io.mode(),
        [&](size_t, Json j) {
          TaggedTranscript t;
          if (j.contains("transcript")) {
            t = parse_tagged(j["transcript"].get<std::string>());
          } else if (j.contains("hyp")) {
            t = parse_eval_record(j).hyp;
          } else {
            throw std::runtime_error("record has neither 'transcript' nor 'hyp'");
          }
          Json line;
          line["id"] = j.contains("id") ? j["id"].get<std::string>() : "";
          line["text"] = view(t, kind);
          writer.write(line);
          ++count;
        },
        stderr_diag(input));
    summary_stream(writer) << "viewed " << count << " records (" << view_name
                           << ")\n";
    return 0;
  }
};

// ------------------------------------------------------------------ score

struct ScoreCli {
  std::string input, output, summary_out;
  std::string format = "summary";
  std::string pairs_path, hyp_path;
  std::string ref_field = "all";
  std::string view_name = "all";
  IoFlags io;

  int run() {
    RecordWriter writer(resolve_output(output, format));
    WerReport pooled;
    size_t records = 0;

    auto score_one = [&](const std::string& id, const std::vector<std::string>& ref,
                         const std::vector<std::string>& hyp) {
      Alignment a = align(ref, hyp);
      accumulate(pooled, a);
      ++records;
      Json line;
      line["id"] = id;
      line["ref_words"] = a.ref_len;
      line["errors"] = a.errors();
      line["deletions"] = a.deletions;
      line["insertions"] = a.insertions;
      line["substitutions"] = a.substitutions;
      if (a.ref_len > 0) line["wer"] = wer_report(a).wer();
      writer.write(line);
    };

    if (!pairs_path.empty()) {
      // Join hypotheses onto the reference side of relabel pairs.
      std::map<std::string, std::string> hyps;
      auto hin = open_input(hyp_path);
      read_json_lines(
          hin, io.mode(),
          [&](size_t, Json j) {
            const char* text_field = j.contains("text") ? "text" : "transcript";
            hyps[j.at("id").get<std::string>()] = j.at(text_field).get<std::string>();
          },
          stderr_diag(hyp_path));
      auto pin = open_input(pairs_path);
      size_t missing = 0;
      read_relabel_records(
          pin, io.mode(),
          [&](RelabelRecord rec) {
            auto it = hyps.find(rec.id);
            if (it == hyps.end()) {
              if (!io.lenient)
                throw IoError("no hypothesis for id " + rec.id);
              ++missing;
              return;
            }
            const std::string& ref_text =
                ref_field == "primary" ? rec.trans_primary : rec.trans_all;
            score_one(rec.id, split_words(ref_text),
                      words(parse_tagged(it->second)));
          },
          stderr_diag(pairs_path));
      if (missing) std::cerr << missing << " pairs had no matching hypothesis\n";
    } else {
      auto in = open_input(input);
      const ViewKind kind =
          view_name == "primary" ? ViewKind::PrimaryOnly : ViewKind::AllSpeech;
      read_eval_records(
          in, io.mode(),
          [&](UtteranceRecord rec) {
            std::vector<std::string> ref;
            for (const TimedWord& w : rec.ref) ref.push_back(w.word);
            score_one(rec.id, ref, split_words(view(rec.hyp, kind)));
          },
          stderr_diag(input));
    }

    if (pooled.ref_words == 0) throw EmptyReferenceError();
    summary_stream(writer) << "WER (D/I/S): " << format_wer(pooled) << "  [n="
                           << records << ", ref_words=" << pooled.ref_words
                           << ", D=" << pooled.deletions
                           << ", I=" << pooled.insertions
                           << ", S=" << pooled.substitutions << "]\n";
    write_summary_json(summary_out, wer_summary_json(pooled, records));
    return 0;
  }
};

// --------------------------------------------------------------- longform

struct LongformCli {
  std::string input, output, summary_out;
  std::string format = "summary";
  std::string view_name = "all";
  IoFlags io;
  LongformOptions opts;

  int run() {
    opts.view = view_name == "primary" ? ViewKind::PrimaryOnly : ViewKind::AllSpeech;
    auto in = open_input(input);
    RecordWriter writer(resolve_output(output, format));
    WerReport pooled;
    size_t records = 0;
    long long total_runs = 0;
    read_eval_records(
        in, io.mode(),
        [&](UtteranceRecord rec) {
          LongformReport report = longform_count(rec, opts);
          pooled.ref_words += report.wer.ref_words;
          pooled.deletions += report.wer.deletions;
          pooled.insertions += report.wer.insertions;
          pooled.substitutions += report.wer.substitutions;
          total_runs += report.run_count;
          ++records;
          Json line;
          line["id"] = rec.id;
          line["run_count"] = report.run_count;
          line["wer"] = report.wer.wer();
          Json runs = Json::array();
          for (const DeletionRun& run : report.runs)
            runs.push_back({{"ref_index", run.first_ref_index},
                            {"length", run.length},
                            {"start", run.first_word_start}});
          line["runs"] = std::move(runs);
          writer.write(line);
        },
        stderr_diag(input));

    if (pooled.ref_words == 0) throw EmptyReferenceError();
    std::ostream& os = summary_stream(writer);
    os << "WER (D/I/S): " << format_wer(pooled) << "\n";
    os << "# of " << opts.threshold << " del.: " << total_runs << "\n";

    Json summary = wer_summary_json(pooled, records);
    summary["threshold"] = opts.threshold;
    summary["run_count"] = total_runs;
    write_summary_json(summary_out, summary);
    return 0;
  }
};

// --------------------------------------------------------------------- ep

struct EpCli {
  std::string input, output, summary_out;
  std::string format = "summary";
  IoFlags io;

  int run() {
    auto in = open_input(input);
    RecordWriter writer(resolve_output(output, format));
    std::vector<double> latencies;
    WerReport pooled;
    size_t records = 0, unclosed = 0, non_short = 0;
    read_eval_records(
        in, io.mode(),
        [&](UtteranceRecord rec) {
          if (rec.domain != Domain::Short) {
            ++non_short;
            return;
          }
          const std::optional<double> latency = ep_latency(rec);
          ++records;
          std::vector<std::string> ref;
          for (const TimedWord& w : rec.ref) ref.push_back(w.word);
          accumulate(pooled,
                     align(ref, split_words(view(rec.hyp, ViewKind::PrimaryOnly))));
          Json line;
          line["id"] = rec.id;
          if (latency) {
            latencies.push_back(*latency);
            line["latency"] = *latency;
          } else {
            ++unclosed;
            line["latency"] = nullptr;
          }
          writer.write(line);
        },
        stderr_diag(input));

    if (latencies.empty()) throw EmptyInputError();
    const EpQuantiles q = ep_quantiles(latencies);
    std::ostream& os = summary_stream(writer);
    os << "WER: " << format_wer(pooled) << "  EP50: " << format_ms(q.ep50)
       << "  EP90: " << format_ms(q.ep90) << "  [n=" << records
       << ", unclosed=" << unclosed;
    if (non_short) os << ", non-short skipped=" << non_short;
    os << "]\n";

    Json summary;
    summary["records"] = records;
    summary["measured"] = latencies.size();
    summary["unclosed"] = unclosed;
    summary["ep50_ms"] = format_ms(q.ep50);
    summary["ep90_ms"] = format_ms(q.ep90);
    summary["ep50_s"] = q.ep50;
    summary["ep90_s"] = q.ep90;
    summary["wer"] = pooled.wer();
    write_summary_json(summary_out, summary);
    return 0;
  }
};

// ------------------------------------------------------------------ synth

struct SynthCli {
  std::string kind = "eval";
  std::string model_name = "oracle";
  std::string output, truth_out;
  std::string format = "summary";
  SynthSpec spec;
  uint64_t seed = 0;
  int threshold = 25;
  int burst_start = 40, burst_len = 30;
  int resume = 30;
  double sub_p = 0.05, del_p = 0.1, ins_p = 0.05;

  FailureModel model() const {
    FailureModel m{OracleModel{}, seed};
    if (model_name == "burst")
      m.kind = BurstDeleterModel{burst_start, burst_len};
    else if (model_name == "random")
      m.kind = RandomErrorsModel{sub_p, del_p, ins_p};
    else if (model_name == "stuck")
      m.kind = StuckAfterNoiseModel{resume};
    return m;
  }

  int run() {
    RecordWriter writer(resolve_output(output, format));
    if (kind == "relabel") {
      RelabelPairSpec pair_spec;
      pair_spec.n_pairs = spec.n_utts;
      pair_spec.seed = seed;
      pair_spec.clean_only = model_name == "oracle";
      auto pairs = generate_relabel_pairs(pair_spec);
      std::ofstream truth;
      if (!truth_out.empty()) {
        truth.open(truth_out);
        if (!truth) throw IoError("cannot write " + truth_out);
      }
      for (const RelabelPair& pair : pairs) {
        RelabelRecord rec{pair.id, pair.trans_primary, pair.trans_all,
                          pair.original_truth, pair.segmented};
        writer.write(relabel_record_to_json(rec));
        if (truth.is_open()) {
          Json t;
          t["id"] = pair.id;
          switch (pair.expected) {
            case ExpectedOutcome::Tagged:
              t["expected"] = "tagged";
              break;
            case ExpectedOutcome::FallbackNoMatch:
              t["expected"] = "fallback_no_match";
              break;
            case ExpectedOutcome::FallbackAmbiguous:
              t["expected"] = "fallback_ambiguous";
              break;
          }
          t["expected_text"] = pair.expected_text;
          truth << t.dump() << "\n";
        }
      }
      summary_stream(writer) << "generated " << pairs.size() << " relabel pairs ("
                             << (pair_spec.clean_only ? "clean" : "mixed")
                             << ")\n";
      return 0;
    }

    SynthCorpus corpus = generate_corpus(spec, model());
    for (const UtteranceRecord& rec : corpus.records)
      writer.write(eval_record_to_json(rec));
    if (!truth_out.empty()) {
      std::ofstream truth(truth_out);
      if (!truth) throw IoError("cannot write " + truth_out);
      for (const RecordTruth& t : corpus.truth)
        truth << truth_to_json(t, threshold).dump() << "\n";
    }
    summary_stream(writer) << "generated " << corpus.records.size()
                           << " eval records (model=" << model_name << ")\n";
    return 0;
  }
};

// ------------------------------------------------------------------- diff

struct DiffCli {
  std::string base_path, new_path;

  int run() {
    auto load = [](const std::string& path) {
      auto in = open_input(path);
      Json j;
      in >> j;
      return j;
    };
    const Json base = load(base_path);
    const Json next = load(new_path);
    const long long base_runs = base.at("run_count").get<long long>();
    const long long new_runs = next.at("run_count").get<long long>();
    if (base_runs <= 0) throw Error("baseline run_count must be positive");
    const double improvement =
        100.0 * static_cast<double>(base_runs - new_runs) / static_cast<double>(base_runs);
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "long-form deletion runs: %lld -> %lld, improvement %.1f%% (~%d%%)",
                  base_runs, new_runs, improvement,
                  static_cast<int>(std::llround(improvement)));
    std::cout << buf << "\n";
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"speaker-tag transcript relabeling and ASR evaluation tools"};
  app.require_subcommand(1);

  RelabelCli relabel_cli;
  auto* relabel_cmd = app.add_subcommand(
      "relabel", "Insert speaker-tag tokens into transcript pairs");
  relabel_cmd->add_option("input", relabel_cli.input, "RelabelRecord JSONL")
      ->required();
  relabel_cmd->add_option("-o,--output", relabel_cli.output,
                          "Output JSONL path ('-' for stdout)");
  relabel_cmd
      ->add_option("--edit-budget", relabel_cli.opts.edit_budget,
                   "Word-difference tolerance")
      ->check(CLI::Range(0, 64));
  relabel_cmd
      ->add_option("--cap", relabel_cli.opts.enumeration_cap,
                   "Embedding enumeration cap")
      ->check(CLI::PositiveNumber);
  relabel_cmd->add_flag("--segmented", relabel_cli.force_segmented,
                        "Strip trailing tags on every record");
  relabel_cmd->add_option("--jobs", relabel_cli.jobs,
                          "Worker count (default $SPTAG_JOBS or 1)");
  relabel_cmd->add_option("--summary-out", relabel_cli.summary_out,
                          "Write the summary as JSON");
  add_io_flags(relabel_cmd, relabel_cli.io);
  add_format_flag(relabel_cmd, relabel_cli.format);

  ViewCli view_cli;
  auto* view_cmd =
      app.add_subcommand("view", "Project tagged transcripts into a domain view");
  view_cmd->add_option("input", view_cli.input, "JSONL with 'transcript' or 'hyp'")
      ->required();
  view_cmd->add_option("-o,--output", view_cli.output,
                       "Output JSONL path ('-' for stdout)");
  view_cmd->add_option("--view", view_cli.view_name, "primary|all")
      ->check(CLI::IsMember({"primary", "all"}));
  add_io_flags(view_cmd, view_cli.io);
  add_format_flag(view_cmd, view_cli.format);

  ScoreCli score_cli;
  auto* score_cmd = app.add_subcommand("score", "WER with D/I/S breakdown");
  score_cmd->add_option("input", score_cli.input, "EvalRecord JSONL");
  score_cmd->add_option("--pairs", score_cli.pairs_path,
                        "Score against RelabelRecord references instead");
  score_cmd
      ->add_option("--hyp", score_cli.hyp_path,
                   "Hypothesis JSONL ({id,text}) joined by id")
      ->needs(score_cmd->get_option("--pairs"));
  score_cmd
      ->add_option("--ref-field", score_cli.ref_field,
                   "Reference side of --pairs: all|primary")
      ->check(CLI::IsMember({"all", "primary"}));
  score_cmd
      ->add_option("--view", score_cli.view_name,
                   "Hypothesis view for eval records: all|primary")
      ->check(CLI::IsMember({"all", "primary"}));
  score_cmd->add_option("-o,--output", score_cli.output, "Per-record JSONL path");
  score_cmd->add_option("--summary-out", score_cli.summary_out,
                        "Write the pooled report as JSON");
  add_io_flags(score_cmd, score_cli.io);
  add_format_flag(score_cmd, score_cli.format);

  LongformCli longform_cli;
  auto* longform_cmd =
      app.add_subcommand("longform", "Long-form deletion metric and WER");
  longform_cmd->add_option("input", longform_cli.input, "EvalRecord JSONL")
      ->required();
  longform_cmd
      ->add_option("--threshold", longform_cli.opts.threshold,
                   "Run length that counts")
      ->check(CLI::PositiveNumber);
  longform_cmd
      ->add_option("--view", longform_cli.view_name, "Hypothesis view: all|primary")
      ->check(CLI::IsMember({"all", "primary"}));
  longform_cmd->add_option("-o,--output", longform_cli.output,
                           "Per-record JSONL path");
  longform_cmd->add_option("--summary-out", longform_cli.summary_out,
                           "Write the summary as JSON");
  add_io_flags(longform_cmd, longform_cli.io);
  add_format_flag(longform_cmd, longform_cli.format);

  EpCli ep_cli;
  auto* ep_cmd = app.add_subcommand("ep", "Endpointer latency quantiles");
  ep_cmd->add_option("input", ep_cli.input, "EvalRecord JSONL")->required();
  ep_cmd->add_option("-o,--output", ep_cli.output, "Per-record JSONL path");
  ep_cmd->add_option("--summary-out", ep_cli.summary_out,
                     "Write the summary as JSON");
  add_io_flags(ep_cmd, ep_cli.io);
  add_format_flag(ep_cmd, ep_cli.format);

  SynthCli synth_cli;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate synthetic corpora with ground truth");
  synth_cmd->add_option("--kind", synth_cli.kind, "eval|relabel")
      ->check(CLI::IsMember({"eval", "relabel"}));
  synth_cmd
      ->add_option("--model", synth_cli.model_name,
                   "oracle|burst|random|stuck (relabel: oracle|mixed)")
      ->check(CLI::IsMember({"oracle", "burst", "random", "stuck", "mixed"}));
  synth_cmd->add_option("-o,--output", synth_cli.output,
                        "Output JSONL path ('-' for stdout)");
  synth_cmd->add_option("--truth-out", synth_cli.truth_out,
                        "Ground-truth sidecar JSONL");
  synth_cmd->add_option("--n", synth_cli.spec.n_utts, "Record count")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--words", synth_cli.spec.words_per_utt,
                        "Words per utterance")
      ->check(CLI::PositiveNumber);
  synth_cmd->add_option("--word-duration", synth_cli.spec.word_duration,
                        "Seconds per word");
  synth_cmd->add_option("--noise-placement", synth_cli.spec.noise_placement,
                        "Fraction of the utterance where the noise ends");
  synth_cmd->add_option("--seed", synth_cli.seed, "Corpus seed");
  synth_cmd->add_option("--threshold", synth_cli.threshold,
                        "Threshold used for the truth sidecar");
  synth_cmd->add_option("--burst-start", synth_cli.burst_start, "burst model");
  synth_cmd->add_option("--burst-len", synth_cli.burst_len, "burst model");
  synth_cmd->add_option("--resume", synth_cli.resume, "stuck model");
  synth_cmd->add_option("--sub-p", synth_cli.sub_p, "random model");
  synth_cmd->add_option("--del-p", synth_cli.del_p, "random model");
  synth_cmd->add_option("--ins-p", synth_cli.ins_p, "random model");
  add_format_flag(synth_cmd, synth_cli.format);

  DiffCli diff_cli;
  auto* diff_cmd =
      app.add_subcommand("diff", "Compare two longform summary JSON files");
  diff_cmd->add_option("base", diff_cli.base_path, "Baseline summary JSON")
      ->required();
  diff_cmd->add_option("new", diff_cli.new_path, "New summary JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (relabel_cmd->parsed()) return relabel_cli.run();
    if (view_cmd->parsed()) return view_cli.run();
    if (score_cmd->parsed()) {
      if (score_cli.input.empty() && score_cli.pairs_path.empty())
        throw Error("score needs an input file or --pairs with --hyp");
      if (!score_cli.pairs_path.empty() && score_cli.hyp_path.empty())
        throw Error("--pairs requires --hyp");
      return score_cli.run();
    }
    if (longform_cmd->parsed()) return longform_cli.run();
    if (ep_cmd->parsed()) return ep_cli.run();
    if (synth_cmd->parsed()) return synth_cli.run();
    if (diff_cmd->parsed()) return diff_cli.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
