// Core value types shared by every proact module: dense element ids, total
// maps between finite carriers, error taxonomy, resource limits and small
// memoization helpers used by the lazy tower machinery.
#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace proact {

// Elements of every finite structure are dense ids 0..n-1.
using Elem = std::int32_t;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed table: an algebraic axiom fails on the raw data.
class structural_error : public error {
 public:
  using error::error;
};

// A documented precondition of an operation is violated.
class contract_error : public error {
 public:
  using error::error;
};

// A configured size or level bound was exceeded.
class resource_error : public error {
 public:
  using error::error;
};

// Global, configurable resource limits.  The level cap keeps lazy towers
// terminating; the size bound keeps per-structure tables tractable.
class limits {
 public:
  static int level_cap() { return cap_().load(); }
  static void set_level_cap(int v) { cap_().store(v); }
  static int size_bound() { return size_().load(); }
  static void set_size_bound(int v) { size_().store(v); }

 private:
  static std::atomic<int>& cap_() {
    static std::atomic<int> v{init_cap()};
    return v;
  }
  static std::atomic<int>& size_() {
    static std::atomic<int> v{64};
    return v;
  }
  static int init_cap() {
    if (const char* e = std::getenv("PROACT_LEVEL_CAP")) {
      int v = std::atoi(e);
      if (v > 0) return v;
    }
    return 32;
  }
};

// Total map between dense-id sets, stored as a table.
class Map {
 public:
  Map() = default;
  Map(int src, int dst, std::vector<Elem> tab) : src_(src), dst_(dst), tab_(std::move(tab)) {
    if (static_cast<int>(tab_.size()) != src_) throw structural_error("Map: table size != source size");
    for (Elem v : tab_)
      if (v < 0 || v >= dst_) throw structural_error("Map: value out of range");
  }
  static Map identity(int n) {
    std::vector<Elem> t(n);
    for (int i = 0; i < n; ++i) t[i] = i;
    return Map(n, n, std::move(t));
  }
  static Map constant(int src, int dst, Elem value) {
    return Map(src, dst, std::vector<Elem>(static_cast<size_t>(src), value));
  }

  int src() const { return src_; }
  int dst() const { return dst_; }
  Elem operator()(Elem x) const { return tab_[static_cast<size_t>(x)]; }
  const std::vector<Elem>& table() const { return tab_; }

  // g.then(h) applies g first: (h ∘ g).
  Map then(const Map& h) const {
    if (dst_ != h.src_) throw structural_error("Map::then: size mismatch");
    std::vector<Elem> t(tab_.size());
    for (size_t i = 0; i < tab_.size(); ++i) t[i] = h.tab_[static_cast<size_t>(tab_[i])];
    return Map(src_, h.dst_, std::move(t));
  }

  bool injective() const {
    std::vector<char> seen(static_cast<size_t>(dst_), 0);
    for (Elem v : tab_) {
      if (seen[static_cast<size_t>(v)]) return false;
      seen[static_cast<size_t>(v)] = 1;
    }
    return true;
  }
  bool surjective() const {
    std::vector<char> seen(static_cast<size_t>(dst_), 0);
    for (Elem v : tab_) seen[static_cast<size_t>(v)] = 1;
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
  }
  bool bijective() const { return src_ == dst_ && injective(); }

  friend bool operator==(const Map& a, const Map& b) {
    return a.src_ == b.src_ && a.dst_ == b.dst_ && a.tab_ == b.tab_;
  }
  friend bool operator!=(const Map& a, const Map& b) { return !(a == b); }

 private:
  int src_ = 0, dst_ = 0;
  std::vector<Elem> tab_;
};

// Total binary map A × B -> C, stored row-major over A.
class Map2 {
 public:
  Map2() = default;
  Map2(int a, int b, int dst, std::vector<Elem> tab) : a_(a), b_(b), dst_(dst), tab_(std::move(tab)) {
    if (static_cast<int>(tab_.size()) != a_ * b_) throw structural_error("Map2: table size mismatch");
    for (Elem v : tab_)
      if (v < 0 || v >= dst_) throw structural_error("Map2: value out of range");
  }
  int a_size() const { return a_; }
  int b_size() const { return b_; }
  int dst() const { return dst_; }
  Elem operator()(Elem a, Elem b) const { return tab_[static_cast<size_t>(a) * b_ + b]; }
  const std::vector<Elem>& table() const { return tab_; }
  std::vector<Elem>& mutable_table() { return tab_; }

  friend bool operator==(const Map2& x, const Map2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.dst_ == y.dst_ && x.tab_ == y.tab_;
  }

 private:
  int a_ = 0, b_ = 0, dst_ = 0;
  std::vector<Elem> tab_;
};

// Encoding of pairs (x, g) as x + nx*g; used for products and semidirect carriers.
inline Elem pair_encode(Elem x, Elem g, int nx) { return x + static_cast<Elem>(nx) * g; }
inline std::pair<Elem, Elem> pair_decode(Elem e, int nx) { return {e % nx, e / nx}; }

// Thread-safe memoized function on non-negative integers.
template <class T>
class memo_fn {
 public:
  memo_fn() = default;
  explicit memo_fn(std::function<T(int)> f) : st_(std::make_shared<State>()) { st_->f = std::move(f); }

  const T& operator()(int n) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto it = st_->cache.find(n);
    if (it == st_->cache.end()) it = st_->cache.emplace(n, st_->f(n)).first;
    return it->second;
  }
  explicit operator bool() const { return st_ != nullptr; }

 private:
  struct State {
    std::function<T(int)> f;
    std::map<int, T> cache;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

// Memoized function on pairs of non-negative integers.
template <class T>
class memo_fn2 {
 public:
  memo_fn2() = default;
  explicit memo_fn2(std::function<T(int, int)> f) : st_(std::make_shared<State>()) { st_->f = std::move(f); }

  const T& operator()(int n, int m) const {
    std::lock_guard<std::mutex> lock(st_->mu);
    auto key = std::make_pair(n, m);
    auto it = st_->cache.find(key);
    if (it == st_->cache.end()) it = st_->cache.emplace(key, st_->f(n, m)).first;
    return it->second;
  }
  explicit operator bool() const { return st_ != nullptr; }

 private:
  struct State {
    std::function<T(int, int)> f;
    std::map<std::pair<int, int>, T> cache;
    std::mutex mu;
  };
  std::shared_ptr<State> st_;
};

}  // namespace proact
