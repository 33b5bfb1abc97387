#include "maxqc/kplex.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace maxqc {

namespace {

using Word = std::uint64_t;
constexpr std::size_t kWordBits = 64;

constexpr VertexId kNone = ~VertexId{0};

inline void set_bit(Word* bits, VertexId i) { bits[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void clear_bit(Word* bits, VertexId i) { bits[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }
inline bool test_bit(const Word* bits, VertexId i) { return (bits[i / kWordBits] >> (i % kWordBits)) & 1; }

template <class F>
inline void for_each_bit(const Word* bits, std::size_t words, F&& f) {
  for (std::size_t w = 0; w < words; ++w) {
    Word x = bits[w];
    while (x) {
      const auto b = static_cast<VertexId>(std::countr_zero(x));
      f(static_cast<VertexId>(w * kWordBits + b));
      x &= x - 1;
    }
  }
}

inline VertexId count_and(const Word* a, const Word* b, std::size_t words) {
  VertexId c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<VertexId>(std::popcount(a[w] & b[w]));
  return c;
}

inline VertexId count_bits(const Word* a, std::size_t words) {
  VertexId c = 0;
  for (std::size_t w = 0; w < words; ++w) c += static_cast<VertexId>(std::popcount(a[w]));
  return c;
}

// Branch-and-bound for a maximum k-plex over a small vertex subset held as
// dense bitset rows. The partial solution S and the candidate set C live in
// per-depth frames.
class DenseSearch {
 public:
  DenseSearch(const Graph& g, std::span<const VertexId> vertices, std::vector<VertexId>& local_of, int k,
              const Deadline& deadline, std::uint64_t& nodes)
      : global_(vertices.begin(), vertices.end()),
        size_(static_cast<VertexId>(vertices.size())),
        words_((vertices.size() + kWordBits - 1) / kWordBits),
        rows_(static_cast<std::size_t>(size_) * words_, 0),
        k_(k),
        deadline_(deadline),
        nodes_(nodes),
        deg_(size_),
        nn_(size_) {
    for (VertexId i = 0; i < size_; ++i) local_of[global_[i]] = i;
    for (VertexId i = 0; i < size_; ++i) {
      Word* row = &rows_[static_cast<std::size_t>(i) * words_];
      for (VertexId w : g.neighbors(global_[i])) {
        if (local_of[w] != kNone) set_bit(row, local_of[w]);
      }
    }
    for (VertexId i = 0; i < size_; ++i) local_of[global_[i]] = kNone;
  }

  /// Searches plexes that contain every vertex in `must` (local ids) and
  /// beat `best_size`. Returns true and fills `best` (global ids) on success.
  bool run(std::span<const VertexId> must, std::int64_t& best_size, VertexSet& best) {
    best_size_ = best_size;
    found_ = false;
    Word* s = frame(0);
    Word* c = s + words_;
    std::fill(s, s + 2 * words_, 0);
    for (VertexId i = 0; i < size_; ++i) set_bit(c, i);
    for (VertexId m : must) {
      set_bit(s, m);
      clear_bit(c, m);
    }
    expand(0);
    if (found_) {
      best_size = best_size_;
      best.clear();
      for (VertexId i : best_local_) best.push_back(global_[i]);
      std::sort(best.begin(), best.end());
    }
    return found_;
  }

 private:
  Word* frame(std::size_t depth) {
    while (frames_.size() <= depth) frames_.emplace_back(2 * words_, 0);
    return frames_[depth].data();
  }
  const Word* row(VertexId i) const { return &rows_[static_cast<std::size_t>(i) * words_]; }

  void expand(std::size_t depth) {
    if ((++nodes_ & 1023) == 0 && deadline_.expired()) throw SearchTimeout();
    Word* s = frame(depth);
    Word* c = s + words_;
    const std::int64_t k = k_;

  restart:
    // Keep only candidates that can join S without breaking the k-plex
    // property: at most k-1 non-neighbors in S, and adjacent to every member
    // of S that has already used up its k-1 non-neighbors.
    s_list_.clear();
    for_each_bit(s, words_, [&](VertexId v) { s_list_.push_back(v); });
    const auto s_size = static_cast<std::int64_t>(s_list_.size());
    for (VertexId v : s_list_) {
      nn_[v] = static_cast<VertexId>(s_size - 1 - count_and(row(v), s, words_));
      if (nn_[v] > k - 1) return;  // only after forcing
      if (nn_[v] == k - 1) {
        const Word* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) c[w] &= r[w];
      }
    }
    for_each_bit(c, words_, [&](VertexId u) {
      if (s_size - count_and(row(u), s, words_) > k - 1) clear_bit(c, u);
    });

    // Degree-based pruning: a vertex of a plex larger than best has at least
    // best + 1 - k neighbors inside it.
    std::vector<Word>& sc = scratch_sc_;
    sc.resize(words_);
    std::int64_t total = 0;
    for (;;) {
      for (std::size_t w = 0; w < words_; ++w) sc[w] = s[w] | c[w];
      total = count_bits(sc.data(), words_);
      if (total <= best_size_) return;
      bool changed = false;
      for (VertexId v : s_list_) {
        deg_[v] = count_and(row(v), sc.data(), words_);
        if (static_cast<std::int64_t>(deg_[v]) + k <= best_size_) return;
      }
      for_each_bit(c, words_, [&](VertexId u) {
        deg_[u] = count_and(row(u), sc.data(), words_);
        if (static_cast<std::int64_t>(deg_[u]) + k <= best_size_) {
          clear_bit(c, u);
          changed = true;
        }
      });
      if (changed) continue;

      // Sharper per-vertex degree cap: a plex keeps at most k - 1 vertices
      // outside N[s] for each s in S, so x has at most
      // |N(x) ∩ N[s] ∩ (S ∪ C)| + min(|N(x) ∩ (S ∪ C) \ N[s]|, k - 1 - [x outside N[s]])
      // neighbors in it.
      closed_.resize(words_);
      for (VertexId sv : s_list_) {
        const Word* rs = row(sv);
        for (std::size_t w = 0; w < words_; ++w) closed_[w] = rs[w];
        set_bit(closed_.data(), sv);
        if (count_and(closed_.data(), sc.data(), words_) == total) continue;  // nothing outside N[s]
        bool dead = false;
        for_each_bit(sc.data(), words_, [&](VertexId x) {
          if (dead) return;
          const Word* rx = row(x);
          std::int64_t inside = 0;
          std::int64_t outside = 0;
          for (std::size_t w = 0; w < words_; ++w) {
            const Word nb = rx[w] & sc[w];
            inside += std::popcount(nb & closed_[w]);
            outside += std::popcount(nb & ~closed_[w]);
          }
          const std::int64_t allow = k - 1 - (test_bit(closed_.data(), x) ? 0 : 1);
          if (inside + std::min(outside, allow) + k > best_size_) return;
          if (test_bit(s, x)) {
            dead = true;
          } else if (test_bit(c, x)) {
            clear_bit(c, x);
            changed = true;
          }
        });
        if (dead) return;
        if (changed) break;
      }
      if (!changed) break;
    }

    // A member of S whose degree in S ∪ C is exactly best + 1 - k needs every
    // one of those neighbors.
    {
      bool forced = false;
      for (VertexId v : s_list_) {
        if (static_cast<std::int64_t>(deg_[v]) + k != best_size_ + 1) continue;
        const Word* r = row(v);
        for (std::size_t w = 0; w < words_; ++w) {
          const Word f = r[w] & c[w];
          if (f) {
            s[w] |= f;
            c[w] &= ~f;
            forced = true;
          }
        }
      }
      if (forced) goto restart;
    }

    // Whole of S ∪ C already a k-plex?
    VertexId pivot = kNone;
    VertexId pivot_deg = kNone;
    bool pivot_in_s = false;
    for_each_bit(sc.data(), words_, [&](VertexId v) {
      if (deg_[v] < pivot_deg) {
        pivot_deg = deg_[v];
        pivot = v;
        pivot_in_s = test_bit(s, v);
      }
    });
    if (static_cast<std::int64_t>(pivot_deg) + k >= total) {
      best_size_ = total;
      found_ = true;
      best_local_.clear();
      for_each_bit(sc.data(), words_, [&](VertexId v) { best_local_.push_back(v); });
      return;
    }

    // Core bound: a plex P with minimum degree d lies in the d-core of S ∪ C,
    // so |P| <= min(|core|, k + d). Peel S ∪ C while all of S survives; the
    // first residual with |R| <= k + mindeg(R) is itself a k-plex and no
    // later residual can beat it.
    {
      peel_deg_.assign(deg_.begin(), deg_.end());
      std::vector<Word>& rem = scratch_rem_;
      rem.assign(sc.begin(), sc.end());
      peel_list_.clear();
      for_each_bit(sc.data(), words_, [&](VertexId v) { peel_list_.push_back(v); });
      std::int64_t r = total;
      std::int64_t bound = 0;
      std::int64_t plex_stage = 0;
      while (r > best_size_) {
        VertexId x = kNone;
        VertexId dmin = kNone;
        for (VertexId v : peel_list_) {
          if (test_bit(rem.data(), v) && peel_deg_[v] < dmin) {
            dmin = peel_deg_[v];
            x = v;
          }
        }
        if (r <= k + static_cast<std::int64_t>(dmin)) {
          plex_stage = r;
          bound = std::max(bound, r);
          break;
        }
        bound = std::max(bound, k + static_cast<std::int64_t>(dmin));
        if (test_bit(s, x)) break;  // later residuals lose a member of S
        clear_bit(rem.data(), x);
        --r;
        const Word* rx = row(x);
        for (std::size_t w = 0; w < words_; ++w) {
          Word bits = rx[w] & rem[w];
          while (bits) {
            --peel_deg_[w * kWordBits + std::countr_zero(bits)];
            bits &= bits - 1;
          }
        }
      }
      if (bound <= best_size_) return;
      if (plex_stage > best_size_) {
        best_size_ = plex_stage;
        found_ = true;
        best_local_.clear();
        for_each_bit(rem.data(), words_, [&](VertexId v) { best_local_.push_back(v); });
        if (plex_stage >= bound) return;
      }
      // Try to meet the bound outright: trim the (bound - k)-core down to
      // bound vertices without dropping any degree below bound - k.
      if (bound - k >= 1 && trim_core(sc.data(), s, bound - k, bound)) {
        best_size_ = bound;
        found_ = true;
        return;
      }
    }

    // Partition bound: candidates not adjacent to some s in S can contribute
    // at most k-1-nn(s) vertices per s.
    {
      std::vector<Word>& rest = scratch_rest_;
      rest.assign(c, c + words_);
      std::int64_t bound = s_size;
      for (VertexId v : s_list_) {
        const Word* r = row(v);
        VertexId cnt = 0;
        for (std::size_t w = 0; w < words_; ++w) cnt += static_cast<VertexId>(std::popcount(rest[w] & ~r[w]));
        if (cnt == 0) continue;
        const std::int64_t allow = k - 1 - static_cast<std::int64_t>(nn_[v]);
        bound += std::min<std::int64_t>(cnt, allow);
        for (std::size_t w = 0; w < words_; ++w) rest[w] &= r[w];
      }
      bound += count_bits(rest.data(), words_);
      if (bound <= best_size_) return;
    }

    // Branch on the minimum-degree vertex, or on its sparsest non-neighbor
    // candidate when that vertex is already fixed in S.
    VertexId branch = pivot;
    if (pivot_in_s) {
      const Word* r = row(pivot);
      VertexId best_deg = kNone;
      branch = kNone;
      for (std::size_t w = 0; w < words_; ++w) {
        Word x = c[w] & ~r[w];
        while (x) {
          const auto u = static_cast<VertexId>(w * kWordBits + std::countr_zero(x));
          x &= x - 1;
          if (deg_[u] < best_deg) {
            best_deg = deg_[u];
            branch = u;
          }
        }
      }
    }

    Word* child = frame(depth + 1);
    s = frame(depth);  // frames_ may have grown
    c = s + words_;

    std::copy(s, s + 2 * words_, child);
    set_bit(child, branch);
    clear_bit(child + words_, branch);
    expand(depth + 1);

    child = frame(depth + 1);
    s = frame(depth);
    std::copy(s, s + 2 * words_, child);
    clear_bit(child + words_, branch);
    expand(depth + 1);
  }

  // Looks for a subset of sc that contains s, has exactly `target` vertices
  // and minimum degree >= c; fills best_local_ on success. Greedy, so a
  // failure proves nothing.
  bool trim_core(const Word* sc, const Word* s, std::int64_t c, std::int64_t target) {
    std::vector<Word>& rem = scratch_trim_;
    std::vector<Word>& tight = scratch_tight_;  // members with degree exactly c
    rem.assign(sc, sc + words_);
    tight.assign(words_, 0);
    std::vector<VertexId>& deg = trim_deg_;
    deg.resize(size_);
    std::vector<VertexId>& queue = trim_queue_;
    queue.clear();
    for_each_bit(sc, words_, [&](VertexId v) {
      deg[v] = count_and(row(v), sc, words_);
      if (static_cast<std::int64_t>(deg[v]) < c) queue.push_back(v);
    });
    auto drop = [&](VertexId x) {
      clear_bit(rem.data(), x);
      const Word* rx = row(x);
      for (std::size_t w = 0; w < words_; ++w) {
        Word bits = rx[w] & rem[w];
        while (bits) {
          const auto y = static_cast<VertexId>(w * kWordBits + std::countr_zero(bits));
          bits &= bits - 1;
          if (static_cast<std::int64_t>(--deg[y]) == c - 1) queue.push_back(y);
        }
      }
    };
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      if (!test_bit(rem.data(), x)) continue;
      if (test_bit(s, x)) return false;
      drop(x);
    }
    std::int64_t r = count_bits(rem.data(), words_);
    if (r < target) return false;
    for_each_bit(rem.data(), words_, [&](VertexId v) {
      if (static_cast<std::int64_t>(deg[v]) == c) set_bit(tight.data(), v);
    });
    while (r > target) {
      // Removable: outside S and no neighbor sits at degree c.
      VertexId pick = kNone;
      for (std::size_t w = 0; w < words_ && pick == kNone; ++w) {
        Word x = rem[w] & ~s[w];
        while (x) {
          const auto v = static_cast<VertexId>(w * kWordBits + std::countr_zero(x));
          x &= x - 1;
          const Word* rv = row(v);
          bool blocked = false;
          for (std::size_t u = 0; u < words_ && !blocked; ++u) blocked = (rv[u] & rem[u] & tight[u]) != 0;
          if (!blocked) {
            pick = v;
            break;
          }
        }
      }
      if (pick == kNone) return false;
      clear_bit(rem.data(), pick);
      clear_bit(tight.data(), pick);
      --r;
      const Word* rp = row(pick);
      for (std::size_t w = 0; w < words_; ++w) {
        Word bits = rp[w] & rem[w];
        while (bits) {
          const auto y = static_cast<VertexId>(w * kWordBits + std::countr_zero(bits));
          bits &= bits - 1;
          if (static_cast<std::int64_t>(--deg[y]) == c) set_bit(tight.data(), y);
        }
      }
    }
    best_local_.clear();
    for_each_bit(rem.data(), words_, [&](VertexId v) { best_local_.push_back(v); });
    return true;
  }

  std::vector<VertexId> global_;
  VertexId size_;
  std::size_t words_;
  std::vector<Word> rows_;
  int k_;
  const Deadline& deadline_;
  std::uint64_t& nodes_;

  std::vector<std::vector<Word>> frames_;
  std::vector<VertexId> s_list_;
  std::vector<VertexId> deg_;
  std::vector<VertexId> nn_;
  std::vector<Word> scratch_sc_;
  std::vector<Word> scratch_rest_;
  std::vector<Word> scratch_rem_;
  std::vector<Word> closed_;
  std::vector<Word> scratch_trim_;
  std::vector<Word> scratch_tight_;
  std::vector<VertexId> trim_deg_;
  std::vector<VertexId> trim_queue_;
  std::vector<VertexId> peel_deg_;
  std::vector<VertexId> peel_list_;

  std::int64_t best_size_ = 0;
  bool found_ = false;
  std::vector<VertexId> best_local_;
};

}  // namespace

PlexSolver::PlexSolver(const Graph& g, PlexOptions options) : g_(&g), options_(options) {
  CoreInfo cores = core_decompose(g);
  order_ = std::move(cores.peel_order);
  degeneracy_ = cores.max_core;
  position_.assign(g.n(), 0);
  for (VertexId i = 0; i < order_.size(); ++i) position_[order_[i]] = i;
}

VertexSet PlexSolver::heuristic(int k) {
  if (k < 1) throw std::invalid_argument("plex heuristic: k must be >= 1");
  ++stats_.heuristic_calls;
  const Graph& g = *g_;
  const VertexId n = g.n();
  if (n == 0) return {};

  // A member x has |S| - 1 - adj_count[x] non-neighbors in S; it is
  // saturated once that reaches k - 1, i.e. adj_count[x] <= |S| - k. Both
  // saturation and rejection of a candidate are permanent while S grows, so
  // rejected candidates are dropped for good.
  std::vector<VertexId> adj_count(n, 0);  // |N(u) ∩ S|
  std::vector<char> state(n, 0);          // 0 untouched, 1 touched, 2 member, 3 rejected
  std::vector<VertexId> touched;
  std::vector<VertexId> members;
  std::vector<VertexId> saturated;
  std::vector<char> is_saturated(n, 0);
  std::vector<std::vector<VertexId>> by_count;  // members keyed by adj_count, lazy
  std::priority_queue<std::pair<VertexId, VertexId>> heap;  // (adj_count, ~id)

  VertexSet best;
  const std::size_t starts = std::min<std::size_t>(options_.heuristic_starts, n);
  for (std::size_t i = 0; i < starts; ++i) {
    if (options_.deadline.expired()) throw SearchTimeout();
    const VertexId start = order_[n - 1 - i];

    auto file_member = [&](VertexId x) {
      if (by_count.size() <= adj_count[x]) by_count.resize(adj_count[x] + 1);
      by_count[adj_count[x]].push_back(x);
    };
    auto add = [&](VertexId u) {
      if (state[u] == 0) touched.push_back(u);
      state[u] = 2;
      members.push_back(u);
      for (VertexId w : g.neighbors(u)) {
        ++adj_count[w];
        if (state[w] == 0) {
          state[w] = 1;
          touched.push_back(w);
        }
        if (state[w] == 1) {
          heap.emplace(adj_count[w], ~w);
        } else if (state[w] == 2 && !is_saturated[w]) {
          file_member(w);
        }
      }
      file_member(u);
      const auto threshold = static_cast<std::int64_t>(members.size()) - k;
      if (threshold >= 0 && static_cast<std::size_t>(threshold) < by_count.size()) {
        for (VertexId x : by_count[threshold]) {
          if (!is_saturated[x] && adj_count[x] == static_cast<VertexId>(threshold)) {
            is_saturated[x] = 1;
            saturated.push_back(x);
          }
        }
      }
      // u itself may enter already saturated.
      if (!is_saturated[u] && static_cast<std::int64_t>(adj_count[u]) <= threshold) {
        is_saturated[u] = 1;
        saturated.push_back(u);
      }
    };

    add(start);
    while (!heap.empty()) {
      const auto [count, tag] = heap.top();
      const VertexId u = ~tag;
      heap.pop();
      if (state[u] != 1 || count != adj_count[u]) continue;
      if (static_cast<std::int64_t>(count) < static_cast<std::int64_t>(members.size()) + 1 - k) break;
      bool ok = true;
      for (VertexId x : saturated) {
        if (!g.adjacent(x, u)) {
          ok = false;
          break;
        }
      }
      if (!ok) {
        state[u] = 3;
        continue;
      }
      add(u);
    }

    if (members.size() > best.size()) best = members;

    for (VertexId u : touched) {
      adj_count[u] = 0;
      state[u] = 0;
      is_saturated[u] = 0;
    }
    touched.clear();
    members.clear();
    saturated.clear();
    by_count.clear();
    heap = {};
  }
  std::sort(best.begin(), best.end());
  return best;
}

bool PlexSolver::within_two_hops_of_first(const VertexSet& s) const {
  if (s.size() <= 1) return true;
  const Graph& g = *g_;
  VertexId first = s.front();
  for (VertexId v : s) {
    if (position_[v] < position_[first]) first = v;
  }
  for (VertexId u : s) {
    if (u == first || g.adjacent(u, first)) continue;
    bool linked = false;
    for (VertexId w : s) {
      if (w != u && w != first && g.adjacent(w, u) && g.adjacent(w, first)) {
        linked = true;
        break;
      }
    }
    if (!linked) return false;
  }
  return true;
}

VertexSet PlexSolver::branch_and_bound(int k, std::int64_t floor_bound, const VertexSet& seed) {
  if (k < 1) throw std::invalid_argument("plex branch-and-bound: k must be >= 1");
  if (floor_bound < 1) throw std::invalid_argument("plex branch-and-bound: floor bound must be >= 1");
  ++stats_.brb_calls;
  const Graph& g = *g_;
  const VertexId n = g.n();
  const bool qc = options_.qc_context;
  const Deadline& deadline = options_.deadline;
  if (deadline.expired()) throw SearchTimeout();

  std::int64_t best_size = floor_bound - 1;
  VertexSet best;
  const VertexSet own_seed = seed.empty() ? heuristic(k) : VertexSet{};
  const VertexSet& start = seed.empty() ? own_seed : seed;
  if (static_cast<std::int64_t>(start.size()) > best_size) {
    best = start;
    best_size = static_cast<std::int64_t>(start.size());
  }
  // Any min(n, k) vertices form a k-plex.
  if (static_cast<std::int64_t>(std::min<VertexId>(n, static_cast<VertexId>(k))) > best_size) {
    best.resize(std::min<VertexId>(n, static_cast<VertexId>(k)));
    std::iota(best.begin(), best.end(), VertexId{0});
    best_size = static_cast<std::int64_t>(best.size());
  }
  if (best_size >= static_cast<std::int64_t>(n)) return best;
  // Some member of a plex P has at most degeneracy neighbors in P.
  if (best_size >= k + static_cast<std::int64_t>(degeneracy_)) return best;

  // Cascade removal of vertices that cannot sit in a plex of size best + 1.
  std::vector<char> alive(n, 1);
  {
    const std::int64_t need = best_size + 1 - k;
    std::vector<VertexId> degree(n);
    std::vector<VertexId> queue;
    for (VertexId v = 0; v < n; ++v) {
      degree[v] = g.degree(v);
      if (static_cast<std::int64_t>(degree[v]) < need) {
        alive[v] = 0;
        queue.push_back(v);
      }
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (VertexId w : g.neighbors(queue[head])) {
        if (alive[w] && static_cast<std::int64_t>(--degree[w]) < need) {
          alive[w] = 0;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<VertexId> local_of(n, kNone);
  std::vector<VertexId> common(n, 0);
  std::vector<char> is_later_nb(n, 0);
  std::vector<VertexId> touched;
  std::vector<VertexId> later_nbs;
  std::vector<VertexId> cand;

  // One subproblem per vertex v, in peeling order: plexes whose first member
  // is v. Members other than v are later, alive, and adjacent to v or
  // sharing one of v's later neighbors.
  auto decompose = [&](std::int64_t& best_size_ref, VertexSet& best_ref) {
    // Densest end first, so that large plexes raise the bar early.
    for (VertexId step = 0; step < n; ++step) {
      const VertexId idx = n - 1 - step;
      const VertexId v = order_[idx];
      if (!alive[v]) continue;
      if (deadline.expired()) throw SearchTimeout();
      const std::int64_t target = best_size_ref + 1;

      later_nbs.clear();
      for (VertexId w : g.neighbors(v)) {
        if (alive[w] && position_[w] > idx) later_nbs.push_back(w);
      }
      // |P| <= 1 + |N+(v) ∩ P| + (k - 1)
      if (static_cast<std::int64_t>(later_nbs.size()) + k < target) continue;

      for (VertexId w : later_nbs) is_later_nb[w] = 1;
      touched.clear();
      for (VertexId w : later_nbs) {
        for (VertexId u : g.neighbors(w)) {
          if (u == v || !alive[u] || position_[u] <= idx) continue;
          if (common[u]++ == 0) touched.push_back(u);
        }
      }

      // Common-neighbor rules: two members of a k-plex P share at least
      // |P| - 2k (adjacent) or |P| - 2k + 2 (non-adjacent) neighbors in P.
      cand.clear();
      cand.push_back(v);
      const std::int64_t need_adj = target - 2 * k;
      const std::int64_t need_far = std::max<std::int64_t>(1, target - 2 * k + 2);
      for (VertexId w : later_nbs) {
        if (static_cast<std::int64_t>(common[w]) >= need_adj) cand.push_back(w);
      }
      if (k >= 2) {
        for (VertexId u : touched) {
          if (!is_later_nb[u] && static_cast<std::int64_t>(common[u]) >= need_far) cand.push_back(u);
        }
      }
      for (VertexId u : touched) common[u] = 0;
      for (VertexId w : later_nbs) is_later_nb[w] = 0;
      if (static_cast<std::int64_t>(cand.size()) < target) continue;

      // Local degree cascade on the candidate subgraph.
      for (VertexId i = 0; i < cand.size(); ++i) local_of[cand[i]] = i;
      std::vector<VertexId> ldeg(cand.size(), 0);
      for (VertexId i = 0; i < cand.size(); ++i) {
        for (VertexId w : g.neighbors(cand[i])) {
          if (local_of[w] != kNone) ++ldeg[i];
        }
      }
      std::vector<char> gone(cand.size(), 0);
      std::vector<VertexId> queue;
      const std::int64_t need_deg = target - k;
      for (VertexId i = 0; i < cand.size(); ++i) {
        if (static_cast<std::int64_t>(ldeg[i]) < need_deg) {
          gone[i] = 1;
          queue.push_back(i);
        }
      }
      for (std::size_t head = 0; head < queue.size() && !gone[0]; ++head) {
        for (VertexId w : g.neighbors(cand[queue[head]])) {
          const VertexId j = local_of[w];
          if (j == kNone || gone[j]) continue;
          if (static_cast<std::int64_t>(--ldeg[j]) < need_deg) {
            gone[j] = 1;
            queue.push_back(j);
          }
        }
      }
      for (VertexId u : cand) local_of[u] = kNone;
      if (gone[0]) continue;
      std::vector<VertexId> kept;
      for (VertexId i = 0; i < cand.size(); ++i) {
        if (!gone[i]) kept.push_back(cand[i]);
      }
      if (static_cast<std::int64_t>(kept.size()) < target) continue;

      DenseSearch search(g, kept, local_of, k, deadline, stats_.brb_nodes);
      const VertexId root = 0;  // v is kept[0]
      search.run(std::span<const VertexId>(&root, 1), best_size_ref, best_ref);
    }
  };

  const std::int64_t diameter_two_floor = 2 * static_cast<std::int64_t>(k) - 1;
  if (qc || best_size + 1 >= diameter_two_floor) {
    decompose(best_size, best);
    return best;
  }

  // Exact search below 2k - 1 vertices: plexes that large have diameter at
  // most two, so try the decomposition for them first.
  {
    std::int64_t big_size = diameter_two_floor - 1;
    VertexSet big;
    decompose(big_size, big);
    if (!big.empty()) return big;
  }

  std::vector<VertexId> rest;
  for (VertexId v = 0; v < n; ++v) {
    if (alive[v]) rest.push_back(v);
  }
  if (static_cast<std::int64_t>(rest.size()) <= best_size) return best;
  if (rest.size() > kMaxDenseFallback) {
    throw std::runtime_error("exact k-plex search below 2k-1 vertices needs a graph of at most " +
                             std::to_string(kMaxDenseFallback) + " vertices; enable qc_context");
  }
  DenseSearch search(g, rest, local_of, k, deadline, stats_.brb_nodes);
  search.run({}, best_size, best);
  return best;
}

VertexSet plex_heu(const Graph& g, int k, const PlexOptions& options) {
  PlexSolver solver(g, options);
  return solver.heuristic(k);
}

VertexSet plex_brb(const Graph& g, int k, std::int64_t floor_bound, const PlexOptions& options) {
  PlexSolver solver(g, options);
  return solver.branch_and_bound(k, floor_bound);
}

std::int64_t pseudo_lower_bound(std::int64_t lb_plex, std::int64_t ub_plex) { return (lb_plex + ub_plex) / 2; }

VertexSet shrink_plex(const Graph& g, VertexSet s, std::size_t size) {
  while (s.size() > size) {
    std::size_t drop = 0;
    VertexId drop_deg = kNone;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const VertexId d = induced_degree(g, s, s[i]);
      if (d <= drop_deg) {
        drop_deg = d;
        drop = i;
      }
    }
    s.erase(s.begin() + static_cast<std::ptrdiff_t>(drop));
  }
  return s;
}

PlexOutcome plex_search(PlexSolver& solver, int k, std::int64_t ub_plex, bool use_pseudo_lb) {
  if (ub_plex < 1) throw std::invalid_argument("plex_search: ub_plex must be >= 1");
  PlexOutcome out;
  VertexSet heuristic = solver.heuristic(k);
  out.lb_plex = static_cast<std::int64_t>(heuristic.size());
  if (out.lb_plex >= ub_plex) {
    out.heuristic_matched_bound = true;
    out.pseudo_lb = ub_plex;
    out.pseudo_size = ub_plex;
    out.witness = shrink_plex(solver.graph(), std::move(heuristic), static_cast<std::size_t>(ub_plex));
    return out;
  }
  out.pseudo_lb = use_pseudo_lb ? pseudo_lower_bound(out.lb_plex, ub_plex) : out.lb_plex;
  out.pseudo_lb = std::max<std::int64_t>(out.pseudo_lb, 1);
  VertexSet found = solver.branch_and_bound(k, out.pseudo_lb, heuristic);
  if (static_cast<std::int64_t>(found.size()) > ub_plex) {
    found = shrink_plex(solver.graph(), std::move(found), static_cast<std::size_t>(ub_plex));
  }
  out.pseudo_size = static_cast<std::int64_t>(found.size());
  out.witness = std::move(found);
  return out;
}

PlexOutcome plex_search(const Graph& g, int k, std::int64_t ub_plex, const PlexOptions& options) {
  PlexSolver solver(g, options);
  return plex_search(solver, k, ub_plex);
}

}  // namespace maxqc
