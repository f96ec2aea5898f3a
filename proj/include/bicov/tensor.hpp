#pragma once

// Sparse exact tensors on products of matrix spaces Mat(N)^{(x)k}.
//
// A SpaceTensor lives on an ordered set of integer space labels (kept sorted).
// An entry is addressed by one (row, col) pair per space. Spaces that a
// tensor does not mention act as the identity when tensors are composed, so
// Omega_1 is stored on space {1} only and X_12 on {1, 2}.
//
// Entry multiplication always keeps operand order (left factor first), which
// makes the same code valid for Grassmann- and word-valued entries.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bicov/scalar.hpp"

namespace bicov {

using TensorKey = std::uint64_t;
using RowCol = std::pair<int, int>;

inline constexpr int kMaxSpaces = 8;
inline constexpr int kMaxDim = 15;

namespace key {

inline int shift(int pos) { return 56 - 8 * pos; }
inline int row(TensorKey k, int pos) { return static_cast<int>((k >> (shift(pos) + 4)) & 0xF); }
inline int col(TensorKey k, int pos) { return static_cast<int>((k >> shift(pos)) & 0xF); }
inline TensorKey pack(int pos, int r, int c) {
  return (static_cast<TensorKey>(r) << (shift(pos) + 4)) | (static_cast<TensorKey>(c) << shift(pos));
}
inline TensorKey make(const std::vector<RowCol>& rc) {
  TensorKey k = 0;
  for (std::size_t p = 0; p < rc.size(); ++p) k |= pack(static_cast<int>(p), rc[p].first, rc[p].second);
  return k;
}

}  // namespace key

template <class T>
class SpaceTensor {
 public:
  using Entries = std::map<TensorKey, T>;

  SpaceTensor() = default;
  SpaceTensor(int n, std::vector<int> spaces) : n_(n), spaces_(std::move(spaces)) {
    if (n_ < 1 || n_ > kMaxDim) throw std::invalid_argument("tensor dimension out of range");
    if (spaces_.size() > static_cast<std::size_t>(kMaxSpaces)) throw std::invalid_argument("too many spaces");
    std::vector<int> sorted = spaces_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("duplicate space label");
    if (sorted != spaces_) throw std::invalid_argument("space labels must be sorted");
  }

  static SpaceTensor identity(int n, const std::vector<int>& spaces) {
    SpaceTensor scalar(n, {});
    scalar.add_entry(0, from_int<T>(1));
    return scalar.extended(spaces);
  }

  int dim() const { return n_; }
  const std::vector<int>& spaces() const { return spaces_; }
  const Entries& entries() const { return entries_; }
  bool zero() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  int position(int label) const {
    auto it = std::find(spaces_.begin(), spaces_.end(), label);
    if (it == spaces_.end()) throw std::invalid_argument("unknown space label " + std::to_string(label));
    return static_cast<int>(it - spaces_.begin());
  }
  bool has_space(int label) const { return std::find(spaces_.begin(), spaces_.end(), label) != spaces_.end(); }

  /// Entry lookup with 0-based (row, col) per space in label order.
  T at(const std::vector<RowCol>& rc) const {
    check_index(rc);
    auto it = entries_.find(key::make(rc));
    return it == entries_.end() ? from_int<T>(0) : it->second;
  }
  T at_key(TensorKey k) const {
    auto it = entries_.find(k);
    return it == entries_.end() ? from_int<T>(0) : it->second;
  }

  void add(const std::vector<RowCol>& rc, const T& value) {
    check_index(rc);
    add_entry(key::make(rc), value);
  }
  void add_entry(TensorKey k, const T& value) {
    if (is_zero(value)) return;
    auto [it, inserted] = entries_.try_emplace(k, value);
    if (!inserted) {
      it->second = it->second + value;
      if (is_zero(it->second)) entries_.erase(it);
    }
  }

  template <class F>
  auto map(F&& f) const -> SpaceTensor<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    SpaceTensor<U> out(n_, spaces_);
    for (const auto& [k, v] : entries_) out.add_entry(k, f(v));
    return out;
  }

  friend bool operator==(const SpaceTensor& a, const SpaceTensor& b) {
    if (a.n_ != b.n_) return false;
    if (a.spaces_ == b.spaces_) return a.entries_ == b.entries_;
    return (a - b).zero();
  }

  friend SpaceTensor operator+(const SpaceTensor& a, const SpaceTensor& b) {
    auto [x, y] = common(a, b);
    for (const auto& [k, v] : y.entries_) x.add_entry(k, v);
    return x;
  }
  friend SpaceTensor operator-(const SpaceTensor& a, const SpaceTensor& b) { return a + (-b); }
  SpaceTensor operator-() const {
    SpaceTensor out(n_, spaces_);
    for (const auto& [k, v] : entries_) out.entries_.emplace(k, -v);
    return out;
  }
  SpaceTensor& operator+=(const SpaceTensor& o) { return *this = *this + o; }
  SpaceTensor& operator-=(const SpaceTensor& o) { return *this = *this - o; }

  /// c * A (entries multiplied on the left by c).
  friend SpaceTensor operator*(const T& c, const SpaceTensor& a) {
    SpaceTensor out(a.n_, a.spaces_);
    for (const auto& [k, v] : a.entries_) out.add_entry(k, c * v);
    return out;
  }
  /// A * c (entries multiplied on the right by c).
  friend SpaceTensor operator*(const SpaceTensor& a, const T& c) {
    SpaceTensor out(a.n_, a.spaces_);
    for (const auto& [k, v] : a.entries_) out.add_entry(k, v * c);
    return out;
  }
  /// Composition; see compose().
  friend SpaceTensor operator*(const SpaceTensor& a, const SpaceTensor& b) { return compose(a, b); }

  /// Tensor with the identity on the additional labels.
  SpaceTensor extended(const std::vector<int>& labels) const {
    std::vector<int> all = spaces_;
    for (int l : labels)
      if (!has_space(l)) all.push_back(l);
    std::sort(all.begin(), all.end());
    if (all == spaces_) return *this;
    SpaceTensor out(n_, all);
    std::vector<int> old_pos(all.size(), -1);
    for (std::size_t p = 0; p < all.size(); ++p)
      if (has_space(all[p])) old_pos[p] = position(all[p]);
    for (const auto& [k, v] : entries_) {
      std::vector<TensorKey> keys{0};
      for (std::size_t p = 0; p < all.size(); ++p) {
        int pos = static_cast<int>(p);
        if (old_pos[p] >= 0) {
          TensorKey part = key::pack(pos, key::row(k, old_pos[p]), key::col(k, old_pos[p]));
          for (auto& kk : keys) kk |= part;
        } else {
          std::vector<TensorKey> next;
          next.reserve(keys.size() * n_);
          for (auto kk : keys)
            for (int i = 0; i < n_; ++i) next.push_back(kk | key::pack(pos, i, i));
          keys = std::move(next);
        }
      }
      for (auto kk : keys) out.entries_.emplace(kk, v);
    }
    return out;
  }

  /// Matrix product on shared spaces, juxtaposition on the others.
  friend SpaceTensor compose(const SpaceTensor& a, const SpaceTensor& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in compose");
    std::vector<int> all = a.spaces_;
    for (int l : b.spaces_)
      if (!a.has_space(l)) all.push_back(l);
    std::sort(all.begin(), all.end());
    SpaceTensor out(a.n_, all);

    // For every result position: where its row and column come from.
    struct Slot {
      int pa = -1;
      int pb = -1;
    };
    std::vector<Slot> slots(all.size());
    std::vector<std::pair<int, int>> shared;  // (pos in a, pos in b)
    for (std::size_t p = 0; p < all.size(); ++p) {
      if (a.has_space(all[p])) slots[p].pa = a.position(all[p]);
      if (b.has_space(all[p])) slots[p].pb = b.position(all[p]);
      if (slots[p].pa >= 0 && slots[p].pb >= 0) shared.emplace_back(slots[p].pa, slots[p].pb);
    }
    std::unordered_map<std::uint64_t, std::vector<const typename Entries::value_type*>> by_rows;
    for (const auto& e : b.entries_) {
      std::uint64_t sig = 0;
      for (auto [pa, pb] : shared) sig = (sig << 4) | static_cast<std::uint64_t>(key::row(e.first, pb));
      by_rows[sig].push_back(&e);
    }
    for (const auto& [ka, va] : a.entries_) {
      std::uint64_t sig = 0;
      for (auto [pa, pb] : shared) sig = (sig << 4) | static_cast<std::uint64_t>(key::col(ka, pa));
      auto it = by_rows.find(sig);
      if (it == by_rows.end()) continue;
      for (const auto* eb : it->second) {
        TensorKey k = 0;
        for (std::size_t p = 0; p < all.size(); ++p) {
          const auto& s = slots[p];
          int pos = static_cast<int>(p);
          if (s.pa >= 0 && s.pb >= 0)
            k |= key::pack(pos, key::row(ka, s.pa), key::col(eb->first, s.pb));
          else if (s.pa >= 0)
            k |= key::pack(pos, key::row(ka, s.pa), key::col(ka, s.pa));
          else
            k |= key::pack(pos, key::row(eb->first, s.pb), key::col(eb->first, s.pb));
        }
        out.add_entry(k, va * eb->second);
      }
    }
    return out;
  }

  /// Sum over row == col in each traced space.
  friend SpaceTensor partial_trace(const SpaceTensor& a, const std::vector<int>& labels) {
    std::vector<int> traced_pos;
    for (int l : labels) traced_pos.push_back(a.position(l));
    std::vector<int> rest;
    std::vector<int> rest_pos;
    for (std::size_t p = 0; p < a.spaces_.size(); ++p) {
      if (std::find(labels.begin(), labels.end(), a.spaces_[p]) == labels.end()) {
        rest.push_back(a.spaces_[p]);
        rest_pos.push_back(static_cast<int>(p));
      }
    }
    SpaceTensor out(a.n_, rest);
    for (const auto& [k, v] : a.entries_) {
      bool diag = true;
      for (int p : traced_pos) diag &= key::row(k, p) == key::col(k, p);
      if (!diag) continue;
      TensorKey nk = 0;
      for (std::size_t q = 0; q < rest_pos.size(); ++q)
        nk |= key::pack(static_cast<int>(q), key::row(k, rest_pos[q]), key::col(k, rest_pos[q]));
      out.add_entry(nk, v);
    }
    return out;
  }

  /// Renames space labels; `mapping` sends old labels to new ones (unmapped
  /// labels keep their name). Throws on collisions.
  friend SpaceTensor relabel(const SpaceTensor& a, const std::map<int, int>& mapping) {
    std::vector<int> fresh;
    for (int l : a.spaces_) {
      auto it = mapping.find(l);
      fresh.push_back(it == mapping.end() ? l : it->second);
    }
    std::vector<int> sorted = fresh;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("label collision in relabel");
    SpaceTensor out(a.n_, sorted);
    std::vector<int> new_pos(fresh.size());
    for (std::size_t p = 0; p < fresh.size(); ++p)
      new_pos[p] = static_cast<int>(std::find(sorted.begin(), sorted.end(), fresh[p]) - sorted.begin());
    for (const auto& [k, v] : a.entries_) {
      TensorKey nk = 0;
      for (std::size_t p = 0; p < fresh.size(); ++p)
        nk |= key::pack(new_pos[p], key::row(k, static_cast<int>(p)), key::col(k, static_cast<int>(p)));
      out.entries_.emplace(nk, v);
    }
    return out;
  }

  /// Swaps row and column in one space.
  friend SpaceTensor transpose_in(const SpaceTensor& a, int label) {
    int p = a.position(label);
    SpaceTensor out(a.n_, a.spaces_);
    for (const auto& [k, v] : a.entries_) {
      TensorKey nk = (k & ~key::pack(p, 0xF, 0xF)) | key::pack(p, key::col(k, p), key::row(k, p));
      out.entries_.emplace(nk, v);
    }
    return out;
  }

  /// One line per entry, `s1:(i,j) s2:(k,l) = value`, 1-based, sorted.
  std::string dump() const {
    std::ostringstream os;
    for (const auto& [k, v] : entries_) {
      for (std::size_t p = 0; p < spaces_.size(); ++p) {
        int pos = static_cast<int>(p);
        os << "s" << spaces_[p] << ":(" << key::row(k, pos) + 1 << "," << key::col(k, pos) + 1 << ") ";
      }
      os << "= " << to_string(v) << "\n";
    }
    return os.str();
  }

 private:
  template <class U>
  friend class SpaceTensor;

  void check_index(const std::vector<RowCol>& rc) const {
    if (rc.size() != spaces_.size()) throw std::invalid_argument("index arity does not match spaces");
    for (auto [r, c] : rc)
      if (r < 0 || r >= n_ || c < 0 || c >= n_) throw std::out_of_range("tensor index out of range");
  }

  static std::pair<SpaceTensor, SpaceTensor> common(const SpaceTensor& a, const SpaceTensor& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    if (a.spaces_ == b.spaces_) return {a, b};
    return {a.extended(b.spaces_), b.extended(a.spaces_)};
  }

  int n_ = 1;
  std::vector<int> spaces_;
  Entries entries_;
};

/// permute_spaces: relabel under a permutation of the existing labels.
template <class T>
SpaceTensor<T> permute_spaces(const SpaceTensor<T>& a, const std::map<int, int>& perm) {
  std::set<int> from, to;
  for (auto [x, y] : perm) {
    from.insert(x);
    to.insert(y);
  }
  if (from != to) throw std::invalid_argument("permute_spaces needs a permutation");
  return relabel(a, perm);
}

/// Swap of two labels.
template <class T>
SpaceTensor<T> swap_spaces(const SpaceTensor<T>& a, int x, int y) {
  return relabel(a, {{x, y}, {y, x}});
}

/// Graded-free commutator and anticommutator of tensors.
template <class T>
SpaceTensor<T> commutator(const SpaceTensor<T>& a, const SpaceTensor<T>& b) {
  return a * b - b * a;
}
template <class T>
SpaceTensor<T> anticommutator(const SpaceTensor<T>& a, const SpaceTensor<T>& b) {
  return a * b + b * a;
}

/// Converts entries between rings.
template <class U, class T>
SpaceTensor<U> convert_tensor(const SpaceTensor<T>& a, const std::function<U(const T&)>& f) {
  return a.map(f);
}

/// Elementary matrix e_{ij} (0-based) in one space.
template <class T>
SpaceTensor<T> unit_matrix(int n, int label, int i, int j, const T& value = from_int<T>(1)) {
  SpaceTensor<T> t(n, {label});
  t.add({{i, j}}, value);
  return t;
}

/// Identity on the given labels.
template <class T>
SpaceTensor<T> identity_on(int n, const std::vector<int>& labels) {
  return SpaceTensor<T>::identity(n, labels);
}

}  // namespace bicov
