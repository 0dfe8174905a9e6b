#include "activesum/todd_coxeter.hpp"

#include <algorithm>
#include <deque>

namespace activesum {

/*
 * Coset enumerator in the classical style (Sims ch. 5, Holt ch. 5). The
 * table keeps one column per generator and one per inverse; scan_and_fill
 * scans a word from both ends and fills gaps by defining cosets (the HLT
 * move), scan_check only applies deductions and coincidences (the Felsch
 * move). Coincidences are processed immediately through a union-find with
 * path compression, migrating the row of a dying coset into its
 * representative and queueing secondary coincidences.
 *
 * Row 0 is the subgroup coset and never dies (unions keep the smaller
 * index). Dead rows are reclaimed once they exceed a quarter of the table.
 * All sweeps run in fixed index order, so a given presentation and strategy
 * always produce the same table.
 */

namespace {

constexpr std::int32_t kUndef = -1;

struct RawTable {
  std::size_t count = 0;
  std::size_t rank = 0;
  std::vector<std::int32_t> table;
  EnumerationStats stats;
};

class Enumerator {
public:
  Enumerator(const Presentation &p, const std::vector<Word> &subgroup_words,
             const TcOptions &options)
      : pres_(p), subgroup_words_(subgroup_words), options_(options),
        ncols_(2 * p.rank()) {}

  RawTable run() {
    add_coset();
    for (const Word &w : subgroup_words_)
      scan_and_fill(0, w);

    if (options_.strategy == TcStrategy::Hlt)
      run_hlt();
    else
      run_felsch();

    // Final closure sweep; guards the completion invariant independently of
    // the strategy.
    while (!closed_pass())
      ;

    compact_with_cursor(0);
    stats_.cosets_final = live_;
    return RawTable{static_cast<std::size_t>(live_), pres_.rank(),
                    std::move(table_), stats_};
  }

private:
  std::size_t rows() const { return parent_.size(); }

  std::int32_t &entry(std::size_t coset, std::size_t col) {
    return table_[coset * ncols_ + col];
  }

  static std::size_t col_of(int letter) {
    return letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                      : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  }
  static std::size_t inv_col(std::size_t col) { return col ^ 1u; }

  std::size_t find(std::size_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  bool alive(std::size_t a) { return parent_[a] == a; }

  std::size_t add_coset() {
    if (live_ + 1 > options_.max_cosets) {
      stats_.cosets_final = live_;
      throw BudgetExceeded("live cosets exceed " +
                               std::to_string(options_.max_cosets),
                           stats_);
    }
    std::size_t c = rows();
    parent_.push_back(static_cast<std::uint32_t>(c));
    table_.resize(table_.size() + ncols_, kUndef);
    ++live_;
    ++stats_.definitions;
    stats_.cosets_peak = std::max<std::uint64_t>(stats_.cosets_peak, live_);
    return c;
  }

  void set_edge(std::size_t alpha, std::size_t col, std::size_t beta) {
    entry(alpha, col) = static_cast<std::int32_t>(beta);
    entry(beta, inv_col(col)) = static_cast<std::int32_t>(alpha);
    if (options_.strategy == TcStrategy::Felsch) {
      deductions_.push_back({alpha, col});
      deductions_.push_back({beta, inv_col(col)});
    }
  }

  std::size_t define(std::size_t alpha, std::size_t col) {
    std::size_t beta = add_coset();
    set_edge(alpha, col, beta);
    return beta;
  }

  // ---- coincidences ----

  void merge(std::size_t a, std::size_t b, std::deque<std::size_t> &queue) {
    a = find(a);
    b = find(b);
    if (a == b)
      return;
    if (a > b)
      std::swap(a, b);
    parent_[b] = static_cast<std::uint32_t>(a);
    --live_;
    ++stats_.coincidences;
    queue.push_back(b);
  }

  void coincidence(std::size_t alpha, std::size_t beta) {
    std::deque<std::size_t> queue;
    merge(alpha, beta, queue);
    while (!queue.empty()) {
      std::size_t dead = queue.front();
      queue.pop_front();
      for (std::size_t col = 0; col < ncols_; ++col) {
        std::int32_t delta_raw = entry(dead, col);
        if (delta_raw == kUndef)
          continue;
        entry(dead, col) = kUndef;
        std::size_t delta = static_cast<std::size_t>(delta_raw);
        // Detach the back-pointer into the dying row.
        if (entry(delta, inv_col(col)) ==
            static_cast<std::int32_t>(dead))
          entry(delta, inv_col(col)) = kUndef;
        std::size_t mu = find(dead);
        std::size_t nu = find(delta);
        if (entry(mu, col) != kUndef)
          merge(nu, static_cast<std::size_t>(entry(mu, col)), queue);
        else if (entry(nu, inv_col(col)) != kUndef)
          merge(mu, static_cast<std::size_t>(entry(nu, inv_col(col))), queue);
        else
          set_edge(mu, col, nu);
      }
    }
  }

  // ---- scanning ----

  // Scans w at alpha, defining cosets to fill gaps.
  void scan_and_fill(std::size_t alpha, const Word &w) {
    if (w.empty())
      return;
    while (true) {
      std::size_t f = find(alpha);
      std::size_t b = f;
      std::size_t i = 0;
      std::size_t j = w.size();

      while (i < j) {
        std::int32_t next = entry(f, col_of(w[i]));
        if (next == kUndef)
          break;
        f = find(static_cast<std::size_t>(next));
        ++i;
      }
      if (i == j) {
        if (f != b)
          coincidence(f, b);
        return;
      }
      while (j > i) {
        std::int32_t prev = entry(b, inv_col(col_of(w[j - 1])));
        if (prev == kUndef)
          break;
        b = find(static_cast<std::size_t>(prev));
        --j;
      }
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set_edge(f, col_of(w[i]), b); // deduction: f . w[i] = b
        return;
      }
      define(f, col_of(w[i]));
      // rescan; the new edge extends the forward run
    }
  }

  // Scan without filling.
  void scan_check(std::size_t alpha, const Word &w) {
    std::size_t f = find(alpha);
    std::size_t b = f;
    std::size_t i = 0;
    std::size_t j = w.size();
    while (i < j) {
      std::int32_t next = entry(f, col_of(w[i]));
      if (next == kUndef)
        break;
      f = find(static_cast<std::size_t>(next));
      ++i;
    }
    if (i == j) {
      if (f != b)
        coincidence(f, b);
      return;
    }
    while (j > i) {
      std::int32_t prev = entry(b, inv_col(col_of(w[j - 1])));
      if (prev == kUndef)
        break;
      b = find(static_cast<std::size_t>(prev));
      --j;
    }
    if (j == i)
      coincidence(f, b);
    else if (j == i + 1)
      set_edge(f, col_of(w[i]), b);
  }

  // ---- strategies ----

  void run_hlt() {
    std::size_t alpha = 0;
    while (alpha < rows()) {
      if (!alive(alpha)) {
        ++alpha;
        continue;
      }
      for (const Word &r : pres_.relators()) {
        scan_and_fill(alpha, r);
        if (!alive(alpha))
          break;
      }
      if (alive(alpha))
        for (std::size_t col = 0; col < ncols_; ++col)
          if (entry(alpha, col) == kUndef)
            define(alpha, col);
      ++alpha;
      alpha = maybe_compact(alpha);
    }
  }

  void run_felsch() {
    build_rotation_index();
    process_deductions();
    std::size_t cursor = 0;
    while (cursor < rows()) {
      if (!alive(cursor)) {
        ++cursor;
        continue;
      }
      bool complete = true;
      for (std::size_t col = 0; col < ncols_; ++col) {
        if (entry(cursor, col) == kUndef) {
          define(cursor, col);
          process_deductions();
          complete = false;
          break;
        }
      }
      if (complete) {
        ++cursor;
        cursor = maybe_compact(cursor);
      }
    }
  }

  void build_rotation_index() {
    rotations_by_col_.assign(ncols_, {});
    std::vector<Word> seen;
    auto add_rotations = [&](const Word &w) {
      for (std::size_t shift = 0; shift < w.size(); ++shift) {
        Word rot(w.begin() + shift, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + shift);
        if (std::find(seen.begin(), seen.end(), rot) == seen.end()) {
          rotations_by_col_[col_of(rot[0])].push_back(rot);
          seen.push_back(std::move(rot));
        }
      }
    };
    for (const Word &r : pres_.relators()) {
      add_rotations(r);
      add_rotations(inverse_word(r));
    }
  }

  void process_deductions() {
    while (!deductions_.empty()) {
      auto [alpha, col] = deductions_.back();
      deductions_.pop_back();
      alpha = find(alpha);
      for (const Word &rot : rotations_by_col_[col]) {
        scan_check(alpha, rot);
        alpha = find(alpha);
      }
    }
  }

  // Verification sweep; returns true when every live row is total and every
  // relator closes everywhere. Repairs go through the normal machinery, so
  // repeating the pass converges.
  bool closed_pass() {
    bool clean = true;
    for (std::size_t alpha = 0; alpha < rows(); ++alpha) {
      if (!alive(alpha))
        continue;
      for (std::size_t col = 0; col < ncols_; ++col)
        if (entry(alpha, col) == kUndef) {
          define(alpha, col);
          clean = false;
        }
      for (const Word &r : pres_.relators()) {
        if (!alive(alpha))
          break;
        if (!scans_closed(alpha, r)) {
          scan_and_fill(alpha, r);
          clean = false;
        }
      }
    }
    if (options_.strategy == TcStrategy::Felsch)
      process_deductions();
    return clean;
  }

  bool scans_closed(std::size_t alpha, const Word &w) {
    std::size_t c = find(alpha);
    for (int letter : w) {
      std::int32_t next = entry(c, col_of(letter));
      if (next == kUndef)
        return false;
      c = find(static_cast<std::size_t>(next));
    }
    return c == find(alpha);
  }

  // ---- compaction ----

  std::size_t maybe_compact(std::size_t cursor) {
    if (rows() < 1024 || rows() - live_ <= rows() / 4)
      return cursor;
    return compact_with_cursor(cursor);
  }

  std::size_t compact_with_cursor(std::size_t cursor) {
    std::vector<std::int32_t> map(rows(), kUndef);
    std::size_t next = 0;
    for (std::size_t i = 0; i < rows(); ++i)
      if (find(i) == i)
        map[i] = static_cast<std::int32_t>(next++);
    std::size_t new_cursor = 0;
    for (std::size_t i = 0; i < rows() && i < cursor; ++i)
      if (map[i] != kUndef)
        ++new_cursor;

    std::vector<std::int32_t> fresh(next * ncols_, kUndef);
    for (std::size_t i = 0; i < rows(); ++i) {
      if (map[i] == kUndef)
        continue;
      for (std::size_t col = 0; col < ncols_; ++col) {
        std::int32_t value = entry(i, col);
        if (value != kUndef)
          fresh[static_cast<std::size_t>(map[i]) * ncols_ + col] =
              map[find(static_cast<std::size_t>(value))];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(next);
    for (std::size_t i = 0; i < next; ++i)
      parent_[i] = static_cast<std::uint32_t>(i);
    return new_cursor;
  }

  const Presentation &pres_;
  const std::vector<Word> &subgroup_words_;
  TcOptions options_;
  std::size_t ncols_;

  std::vector<std::int32_t> table_;
  std::vector<std::uint32_t> parent_;
  std::uint64_t live_ = 0;
  EnumerationStats stats_;

  std::vector<std::pair<std::size_t, std::size_t>> deductions_;
  std::vector<std::vector<Word>> rotations_by_col_;
};

} // namespace

Point CosetTable::apply(Point coset, int letter) const {
  std::size_t col = letter > 0 ? 2 * static_cast<std::size_t>(letter - 1)
                               : 2 * static_cast<std::size_t>(-letter - 1) + 1;
  return static_cast<Point>(table_[coset * 2 * rank_ + col]);
}

Perm CosetTable::generator_action(std::size_t gen) const {
  std::vector<Point> images(count_);
  for (std::size_t c = 0; c < count_; ++c)
    images[c] = static_cast<Point>(table_[c * 2 * rank_ + 2 * gen]);
  return Perm::from_images(std::move(images));
}

bool CosetTable::validate(const Presentation &p) const {
  if (p.rank() != rank_)
    return false;
  for (std::size_t c = 0; c < count_; ++c)
    for (std::size_t col = 0; col < 2 * rank_; ++col) {
      std::int32_t v = table_[c * 2 * rank_ + col];
      if (v < 0 || static_cast<std::size_t>(v) >= count_)
        return false;
    }
  for (std::size_t c = 0; c < count_; ++c)
    for (std::size_t g = 0; g < rank_; ++g) {
      auto fwd = static_cast<std::size_t>(table_[c * 2 * rank_ + 2 * g]);
      if (static_cast<std::size_t>(table_[fwd * 2 * rank_ + 2 * g + 1]) != c)
        return false;
    }
  for (const Word &r : p.relators())
    for (std::size_t c = 0; c < count_; ++c) {
      Point x = static_cast<Point>(c);
      for (int letter : r)
        x = apply(x, letter);
      if (x != c)
        return false;
    }
  std::vector<bool> seen(count_, false);
  std::deque<Point> queue{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    Point c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < rank_; ++g) {
      Point d = apply(c, static_cast<int>(g) + 1);
      if (!seen[d]) {
        seen[d] = true;
        ++reached;
        queue.push_back(d);
      }
    }
  }
  return reached == count_;
}

CosetTable todd_coxeter(const Presentation &p,
                        const std::vector<Word> &subgroup_words,
                        const TcOptions &options) {
  if (options.max_cosets < 1)
    throw BudgetExceeded("budget must allow at least one coset", {});
  Enumerator e(p, subgroup_words, options);
  RawTable raw = e.run();
  CosetTable result;
  result.count_ = raw.count;
  result.rank_ = raw.rank;
  result.table_ = std::move(raw.table);
  result.stats_ = raw.stats;
  return result;
}

} // namespace activesum
