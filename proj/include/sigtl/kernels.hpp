#pragma once

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "sigtl/robustness.hpp"

// Streaming window structures and the array kernels built from them.
//
// The streaming structures are fixed-capacity after construction (the online
// monitors' bounded-memory guarantee rests on that) and double as the serial
// reference implementation of the offline kernels. The offline kernels
// additionally have OpenMP block-parallel paths; window operators recompute a
// lookback-sized warm-up per block, unbounded operators use a two-pass block
// scan. All kernel operations are lattice min/max selections, so serial and
// parallel paths produce bit-identical output.
namespace sigtl::kernels {

inline constexpr std::int64_t kUnbounded = -1;

// ---------------------------------------------------------------------------
// fixed-capacity ring deque

template <typename T>
class RingDeque {
 public:
  explicit RingDeque(std::size_t cap) : buf_(cap ? cap : 1) {}

  std::size_t size() const { return count_; }
  std::size_t capacity() const { return buf_.size(); }
  bool empty() const { return count_ == 0; }

  void push_back(T v) {
    assert(count_ < buf_.size());
    buf_[(head_ + count_) % buf_.size()] = std::move(v);
    ++count_;
  }
  void pop_back() {
    assert(count_ > 0);
    --count_;
  }
  void pop_front() {
    assert(count_ > 0);
    head_ = (head_ + 1) % buf_.size();
    --count_;
  }
  T& front() { return buf_[head_]; }
  const T& front() const { return buf_[head_]; }
  T& back() { return buf_[(head_ + count_ - 1) % buf_.size()]; }
  const T& back() const { return buf_[(head_ + count_ - 1) % buf_.size()]; }

  void clear() { head_ = count_ = 0; }

 private:
  std::vector<T> buf_;
  std::size_t head_ = 0, count_ = 0;
};

// ---------------------------------------------------------------------------
// monotonic deque: sliding extremum over an index window

class WindowExtremum {
 public:
  // cap = maximal number of live candidates (window width in samples)
  WindowExtremum(bool minimum, std::size_t cap) : min_(minimum), dq_(cap) {}

  void push(std::int64_t idx, double v) {
    while (!dq_.empty() && !keeps(dq_.back().second, v)) dq_.pop_back();
    dq_.push_back({idx, v});
  }
  void evict_below(std::int64_t lo) {
    while (!dq_.empty() && dq_.front().first < lo) dq_.pop_front();
  }
  // identity when empty: +inf for min, -inf for max
  double best() const {
    if (dq_.empty()) return min_ ? kTop : kBottom;
    return dq_.front().second;
  }
  bool empty() const { return dq_.empty(); }
  std::size_t size() const { return dq_.size(); }
  std::size_t capacity() const { return dq_.capacity(); }
  void clear() { dq_.clear(); }

 private:
  // keep strictly better values; on ties keep the newer index
  bool keeps(double back, double v) const { return min_ ? back < v : back > v; }

  bool min_;
  RingDeque<std::pair<std::int64_t, double>> dq_;
};

// ---------------------------------------------------------------------------
// delay line of fixed length

template <typename T>
class DelayLine {
 public:
  explicit DelayLine(std::size_t delay) : ring_(delay), delay_(delay) {}

  // Feeds v in; emits the value from `delay` steps ago once available.
  bool push(T v, T& out) {
    if (delay_ == 0) {
      out = std::move(v);
      return true;
    }
    if (ring_.size() == delay_) {
      out = std::move(ring_.front());
      ring_.pop_front();
      ring_.push_back(std::move(v));
      return true;
    }
    ring_.push_back(std::move(v));
    return false;
  }
  std::size_t capacity() const { return delay_; }
  void clear() { ring_.clear(); }

 private:
  RingDeque<T> ring_;
  std::size_t delay_;
};

// ---------------------------------------------------------------------------
// ordered window aggregation (two-stack flip) for since/until/precedes
//
// A window element j carries the pair (rho1[j], rho2[j]). A segment summary
// keeps m = min rho1 over the segment and q = the best candidate
// sup_j min(rho2[j], caps), where the capping direction distinguishes the
// operators: since/until cap a candidate with the rho1 of *later* elements,
// precedes with the rho1 of *earlier* elements (each excluding j itself).

struct SegSummary {
  double m;  // min of rho1 over the segment
  double q;  // best capped candidate in the segment
};

inline constexpr SegSummary kSegIdentity{kTop, kBottom};

inline SegSummary leaf_summary(double rho1, double rho2) { return {rho1, rho2}; }

// A before B in time; candidates in A see B's rho1.
inline SegSummary combine_suffix_capped(const SegSummary& a, const SegSummary& b) {
  return {ext_min(a.m, b.m), ext_max(ext_min(a.q, b.m), b.q)};
}

// A before B in time; candidates in B see A's rho1.
inline SegSummary combine_prefix_capped(const SegSummary& a, const SegSummary& b) {
  return {ext_min(a.m, b.m), ext_max(a.q, ext_min(a.m, b.q))};
}

template <SegSummary (*Combine)(const SegSummary&, const SegSummary&)>
class SlidingAggregate {
 public:
  explicit SlidingAggregate(std::size_t cap) {
    front_.reserve(cap);
    back_.reserve(cap);
  }

  void push(SegSummary leaf) {
    SegSummary agg = back_.empty() ? leaf : Combine(back_.back().agg, leaf);
    back_.push_back({leaf, agg});
  }

  void evict() {
    if (front_.empty()) {
      // flip: rebuild suffix aggregates so the oldest element sits on top
      while (!back_.empty()) {
        SegSummary leaf = back_.back().leaf;
        back_.pop_back();
        SegSummary agg = front_.empty() ? leaf : Combine(leaf, front_.back().agg);
        front_.push_back({leaf, agg});
      }
    }
    assert(!front_.empty());
    front_.pop_back();
  }

  std::size_t size() const { return front_.size() + back_.size(); }

  SegSummary query() const {
    if (front_.empty() && back_.empty()) return kSegIdentity;
    if (front_.empty()) return back_.back().agg;
    if (back_.empty()) return front_.back().agg;
    return Combine(front_.back().agg, back_.back().agg);
  }

  std::size_t capacity() const { return front_.capacity() + back_.capacity(); }
  void clear() { front_.clear(); back_.clear(); }

 private:
  struct Entry { SegSummary leaf, agg; };
  std::vector<Entry> front_, back_;
};

using SuffixAggregate = SlidingAggregate<combine_suffix_capped>;
using PrefixAggregate = SlidingAggregate<combine_prefix_capped>;

// ---------------------------------------------------------------------------
// offline array kernels (window parameters in samples; hi = kUnbounded for inf)

struct Exec {
  int threads = 1;  // <=1: serial
};

// out[i] = ext of in[max(0, i-hi) .. i-lo], empty window -> identity
void window_past_extremum(const std::vector<double>& in, std::int64_t lo, std::int64_t hi,
                          bool minimum, std::vector<double>& out, Exec exec = {});

// out[i] = ext of in[i+lo .. min(n-1, i+hi)], empty window -> identity
void window_future_extremum(const std::vector<double>& in, std::int64_t lo, std::int64_t hi,
                            bool minimum, std::vector<double>& out, Exec exec = {});

// out[i] = sup_{j in [max(0,i-hi), i-lo]} min(rho2[j], min rho1[j+1 .. i]),
// empty -> -inf
void since_run(const std::vector<double>& rho1, const std::vector<double>& rho2,
               std::int64_t lo, std::int64_t hi, std::vector<double>& out, Exec exec = {});

// out[i] = sup_{j in [i+lo, min(n-1,i+hi)]} min(rho2[j], min rho1[i .. j-1]),
// empty -> -inf
void until_run(const std::vector<double>& rho1, const std::vector<double>& rho2,
               std::int64_t lo, std::int64_t hi, std::vector<double>& out, Exec exec = {});

// bounded only: out[i] = sup_{j in [max(0,i-hi+lo), i]}
//                         min(rho2[j], min rho1[max(0,i-hi) .. j-1])
void precedes_run(const std::vector<double>& rho1, const std::vector<double>& rho2,
                  std::int64_t lo, std::int64_t hi, std::vector<double>& out, Exec exec = {});

void pointwise_neg(const std::vector<double>& in, std::vector<double>& out, Exec exec = {});
void pointwise_min(const std::vector<double>& a, const std::vector<double>& b,
                   std::vector<double>& out, Exec exec = {});
void pointwise_max(const std::vector<double>& a, const std::vector<double>& b,
                   std::vector<double>& out, Exec exec = {});

// X / Y / rise / fall as index shifts with -inf beyond the trace edge
void shift_next(const std::vector<double>& in, std::vector<double>& out, Exec exec = {});
void shift_prev(const std::vector<double>& in, std::vector<double>& out, Exec exec = {});
void rise_run(const std::vector<double>& in, std::vector<double>& out, Exec exec = {});
void fall_run(const std::vector<double>& in, std::vector<double>& out, Exec exec = {});

// number of worker threads the parallel path would use for n samples
int auto_threads(std::size_t n);

}  // namespace sigtl::kernels
