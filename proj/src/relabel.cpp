#include "sptag/relabel.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>

#include "sptag/errors.hpp"

namespace sptag {
namespace {

// Run-state of the A-word most recently assigned:
//   kNone - nothing assigned yet
//   kPrim - inside a primary run
//   kOth1 - inside an others run of length 1 (cannot close yet)
//   kOth2 - inside an others run of length >= 2
enum : int { kNone = 0, kPrim = 1, kOth1 = 2, kOth2 = 3 };

constexpr int32_t kInf = std::numeric_limits<int32_t>::max();

// Lexicographic (cost asc, matches desc) packed so lower is better.
inline int32_t pack(int cost, int matches) {
  return (static_cast<int32_t>(cost) << 16) | (0xFFFF - matches);
}
inline int unpack_cost(int32_t v) { return v >> 16; }
inline int unpack_matches(int32_t v) { return 0xFFFF - (v & 0xFFFF); }

inline int32_t add(int32_t v, int dcost, int dmatch) {
  if (v == kInf) return kInf;
  return pack(unpack_cost(v) + dcost, unpack_matches(v) + dmatch);
}

// Per-position role of an effective A word along one search path.
enum class Role : uint8_t { Match, Sub, Absorb, Others };

// The search space: consume A left to right, deciding each word's run,
// while P is consumed by matches, substitutions and skips. Others runs
// shorter than two words are structurally invalid, which is what forces
// stray single words to cost an absorb edit. The value table holds, per
// state, the best (cost-to-go, matches-to-go) over valid completions.
class EmbeddingSearcher {
 public:
  EmbeddingSearcher(const std::vector<NormalizedWord>& primary,
                    const std::vector<NormalizedWord>& all,
                    const RelabelOptions& opts)
      : opts_(opts) {
    for (int k = 0; k < static_cast<int>(primary.size()); ++k)
      if (!primary[k].empty_norm()) {
        p_orig_.push_back(k);
        pn_.push_back(primary[k].norm);
      }
    for (int k = 0; k < static_cast<int>(all.size()); ++k)
      if (!all[k].empty_norm()) {
        a_orig_.push_back(k);
        an_.push_back(all[k].norm);
      }
    np_ = static_cast<int>(pn_.size());
    na_ = static_cast<int>(an_.size());
  }

  EmbeddingSearch run() {
    EmbeddingSearch result;
    if (na_ == 0) return result;
    if (np_ == 0) {
      // No primary speech: the whole transcript is one others run.
      result.embeddings.emplace_back();
      return result;
    }

    // No useful embedding spends more than np+na edits; the further cap
    // keeps packed (cost, matches) values clear of the kInf sentinel.
    budget_ = std::max(0, std::min({opts_.edit_budget, np_ + na_, 16384}));
    const size_t states = num_states();
    if (states > kMaxStates)
      throw Error("relabel input too long (" + std::to_string(na_) + " x " +
                  std::to_string(np_) + " words)");
    value_.assign(states, kInf);
    fill_backward();

    const int32_t v0 = value_[idx(0, 0, 0, kNone, 0, 0)];
    if (v0 == kInf) return result;
    best_cost_ = unpack_cost(v0);
    best_matches_ = unpack_matches(v0);
    result.cost = best_cost_;

    roles_.assign(na_, Role::Others);
    role_p_.assign(na_, -1);
    out_ = &result;
    dfs(0, 0, 0, kNone, 0, 0, 0);
    result.truncated = truncated_;
    return result;
  }

 private:
  static constexpr size_t kMaxStates = 60'000'000;

  size_t num_states() const {
    return static_cast<size_t>(na_ + 1) * (np_ + 1) * (budget_ + 1) * 4 * 2 * 2;
  }

  size_t idx(int i, int j, int e, int r, int h, int ls) const {
    return ((((static_cast<size_t>(i) * (np_ + 1) + j) * (budget_ + 1) + e) * 4 +
             r) * 2 + h) * 2 + ls;
  }

  void fill_backward() {
    for (int i = na_; i >= 0; --i) {
      for (int j = np_; j >= 0; --j) {
        for (int e = budget_; e >= 0; --e) {
          for (int r = 0; r < 4; ++r) {
            for (int h = 0; h < 2; ++h) {
              for (int ls = 0; ls < 2; ++ls) {
                value_[idx(i, j, e, r, h, ls)] = compute(i, j, e, r, h, ls);
              }
            }
          }
        }
      }
    }
  }

  int32_t compute(int i, int j, int e, int r, int h, int ls) {
    if (i == na_) {
      // All of A assigned; the rest of P can only be skipped.
      const int rem = np_ - j;
      if (e + rem <= budget_ && r != kOth1 && h == 1) return pack(rem, 0);
      return kInf;
    }
    int32_t best = kInf;
    if (j < np_ && r != kOth1) {
      if (pn_[j] == an_[i]) {
        best = std::min(best, add(value_[idx(i + 1, j + 1, e, kPrim, 1, 0)], 0, 1));
      } else if (e + 1 <= budget_) {
        best = std::min(best, add(value_[idx(i + 1, j + 1, e + 1, kPrim, 1, 0)], 1, 0));
      }
    }
    if (j < np_ && e + 1 <= budget_)
      best = std::min(best, add(value_[idx(i, j + 1, e + 1, r, h, 1)], 1, 0));
    if (ls == 0) {
      if (r != kOth1 && e + 1 <= budget_)
        best = std::min(best, add(value_[idx(i + 1, j, e + 1, kPrim, h, 0)], 1, 0));
      const int r2 = (r == kOth1 || r == kOth2) ? kOth2 : kOth1;
      best = std::min(best, add(value_[idx(i + 1, j, e, r2, h, 0)], 0, 0));
    }
    return best;
  }

  // True when taking a transition of (dcost, dmatch) into `next` keeps
  // the path on the optimal frontier.
  bool on_frontier(int e, int matches, int dcost, int dmatch, int32_t next) const {
    if (next == kInf) return false;
    return e + dcost + unpack_cost(next) == best_cost_ &&
           matches + dmatch + unpack_matches(next) == best_matches_;
  }

  void dfs(int i, int j, int e, int r, int h, int ls, int matches) {
    if (truncated_) return;
    if (i == na_) {
      emit(j);
      return;
    }
    if (j < np_ && r != kOth1) {
      if (pn_[j] == an_[i]) {
        if (on_frontier(e, matches, 0, 1, value_[idx(i + 1, j + 1, e, kPrim, 1, 0)])) {
          roles_[i] = Role::Match;
          role_p_[i] = j;
          dfs(i + 1, j + 1, e, kPrim, 1, 0, matches + 1);
        }
      } else if (e + 1 <= budget_ &&
                 on_frontier(e, matches, 1, 0,
                             value_[idx(i + 1, j + 1, e + 1, kPrim, 1, 0)])) {
        roles_[i] = Role::Sub;
        role_p_[i] = j;
        dfs(i + 1, j + 1, e + 1, kPrim, 1, 0, matches);
      }
    }
    if (j < np_ && e + 1 <= budget_ &&
        on_frontier(e, matches, 1, 0, value_[idx(i, j + 1, e + 1, r, h, 1)])) {
      skips_.push_back(j);
      dfs(i, j + 1, e + 1, r, h, 1, matches);
      skips_.pop_back();
    }
    if (ls == 0) {
      if (r != kOth1 && e + 1 <= budget_ &&
          on_frontier(e, matches, 1, 0, value_[idx(i + 1, j, e + 1, kPrim, h, 0)])) {
        roles_[i] = Role::Absorb;
        dfs(i + 1, j, e + 1, kPrim, h, 0, matches);
      }
      const int r2 = (r == kOth1 || r == kOth2) ? kOth2 : kOth1;
      if (on_frontier(e, matches, 0, 0, value_[idx(i + 1, j, e, r2, h, 0)])) {
        roles_[i] = Role::Others;
        dfs(i + 1, j, e, r2, h, 0, matches);
      }
    }
  }

  void emit(int j) {
    if (static_cast<int>(out_->embeddings.size()) >= opts_.enumeration_cap) {
      truncated_ = true;
      return;
    }
    Embedding emb;
    for (int k = 0; k < na_; ++k) {
      switch (roles_[k]) {
        case Role::Match:
          emb.indices.push_back(a_orig_[k]);
          break;
        case Role::Sub:
          emb.indices.push_back(a_orig_[k]);
          emb.edits.push_back({Embedding::EditKind::SubstituteAt,
                               p_orig_[role_p_[k]], a_orig_[k]});
          break;
        case Role::Absorb:
          emb.edits.push_back({Embedding::EditKind::AbsorbA, -1, a_orig_[k]});
          break;
        case Role::Others:
          break;
      }
    }
    for (int s : skips_)
      emb.edits.push_back({Embedding::EditKind::SkipP, p_orig_[s], -1});
    for (int s = j; s < np_; ++s)
      emb.edits.push_back({Embedding::EditKind::SkipP, p_orig_[s], -1});
    out_->embeddings.push_back(std::move(emb));
  }

  RelabelOptions opts_;
  std::vector<std::string> pn_, an_;
  std::vector<int> p_orig_, a_orig_;
  int np_ = 0, na_ = 0, budget_ = 0;
  int best_cost_ = 0, best_matches_ = 0;
  std::vector<int32_t> value_;
  std::vector<Role> roles_;
  std::vector<int> role_p_;
  std::vector<int> skips_;
  EmbeddingSearch* out_ = nullptr;
  bool truncated_ = false;
};

}  // namespace

EmbeddingSearch find_embeddings(const std::vector<NormalizedWord>& primary,
                                const std::vector<NormalizedWord>& all,
                                const RelabelOptions& opts) {
  return EmbeddingSearcher(primary, all, opts).run();
}

TaggedTranscript insert_tags(const std::vector<std::string>& all_surface,
                             const Embedding& emb) {
  const int n = static_cast<int>(all_surface.size());
  std::vector<bool> is_primary(n, false);
  for (int a : emb.indices) is_primary[a] = true;
  for (const auto& edit : emb.edits)
    if (edit.kind == Embedding::EditKind::AbsorbA) is_primary[edit.a_index] = true;

  // Empty-norm tokens follow the preceding effective word's run; a
  // leading run of them follows the first effective word.
  std::vector<bool> effective(n, false);
  for (int k = 0; k < n; ++k)
    effective[k] = !normalize_word(all_surface[k]).empty_norm();

  std::vector<bool> primary_role(n, false);
  int first_eff = -1;
  for (int k = 0; k < n && first_eff < 0; ++k)
    if (effective[k]) first_eff = k;
  bool current = first_eff >= 0 ? is_primary[first_eff] : false;
  for (int k = 0; k < n; ++k) {
    if (effective[k]) current = is_primary[k];
    primary_role[k] = current;
  }

  TaggedTranscript out;
  for (int k = 0; k < n; ++k) {
    out.tokens.push_back(Token::word(all_surface[k]));
    const bool run_ends = (k + 1 == n) || (primary_role[k + 1] != primary_role[k]);
    if (run_ends)
      out.tokens.push_back(primary_role[k] ? Token::end_primary()
                                           : Token::end_others());
  }
  return out;
}

TaggedTranscript strip_trailing_tag(const TaggedTranscript& t) {
  TaggedTranscript out = t;
  if (!out.tokens.empty() && out.tokens.back().is_tag()) out.tokens.pop_back();
  return out;
}

RelabelOutcome relabel(const std::string& trans_primary,
                       const std::string& trans_all,
                       const std::string& original_truth,
                       const RelabelOptions& opts) {
  const auto p_words = split_words(trans_primary);
  const auto a_words = split_words(trans_all);
  const auto search =
      find_embeddings(normalize_seq(p_words), normalize_seq(a_words), opts);

  std::map<std::string, TaggedTranscript> distinct;
  for (const Embedding& emb : search.embeddings) {
    TaggedTranscript tagged = insert_tags(a_words, emb);
    distinct.emplace(render_tagged(tagged), std::move(tagged));
  }

  RelabelOutcome outcome;
  outcome.match_count = static_cast<int>(distinct.size());
  outcome.truncated = search.truncated;
  if (distinct.size() == 1 && !search.truncated) {
    outcome.status = RelabelStatus::Tagged;
    outcome.transcript = distinct.begin()->second;
    if (opts.segmented) outcome.transcript = strip_trailing_tag(outcome.transcript);
    outcome.text = render_tagged(outcome.transcript);
  } else {
    outcome.status = distinct.empty() && !search.truncated
                         ? RelabelStatus::FallbackNoMatch
                         : RelabelStatus::FallbackAmbiguous;
    outcome.transcript = parse_plain(original_truth);
    outcome.text = original_truth;
  }
  return outcome;
}

}  // namespace sptag
