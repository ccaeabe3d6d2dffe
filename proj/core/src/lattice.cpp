#include "wirebraid/lattice.hpp"

#include <algorithm>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

namespace wb {

using boost::multiprecision::cpp_int;

SparseRow make_row(std::vector<std::pair<uint64_t, int64_t>> entries) {
  std::sort(entries.begin(), entries.end());
  SparseRow out;
  for (const auto& [c, v] : entries) {
    if (!out.empty() && out.back().first == c) out.back().second += v;
    else out.emplace_back(c, v);
    if (out.back().second == 0) out.pop_back();
  }
  return out;
}

SparseRow row_sum(const SparseRow& a, const SparseRow& b, int64_t fb) {
  std::vector<std::pair<uint64_t, int64_t>> all(a.begin(), a.end());
  for (const auto& [c, v] : b) all.emplace_back(c, fb * v);
  return make_row(std::move(all));
}

namespace {

struct Overflow {};

int64_t mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
int64_t add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
  return r;
}
int64_t neg(int64_t a) {
  if (a == INT64_MIN) throw Overflow{};
  return -a;
}
cpp_int mul(const cpp_int& a, const cpp_int& b) { return a * b; }
cpp_int add(const cpp_int& a, const cpp_int& b) { return a + b; }
cpp_int neg(const cpp_int& a) { return -a; }

template <class T>
using Row = std::vector<std::pair<uint64_t, T>>;

// fa*a + fb*b
template <class T>
Row<T> combine(const Row<T>& a, const T& fa, const Row<T>& b, const T& fb) {
  Row<T> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      T v = mul(a[i].second, fa);
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      T v = mul(b[j].second, fb);
      if (v != 0) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      T v = add(mul(a[i].second, fa), mul(b[j].second, fb));
      if (v != 0) out.emplace_back(a[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

// g = s*a + t*b with g = gcd(a, b) > 0
template <class T>
void egcd(const T& a, const T& b, T& g, T& s, T& t) {
  T r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    T q = r0 / r1;
    T r2 = add(r0, neg(mul(q, r1)));
    T s2 = add(s0, neg(mul(q, s1)));
    T t2 = add(t0, neg(mul(q, t1)));
    r0 = r1, r1 = r2, s0 = s1, s1 = s2, t0 = t1, t1 = t2;
  }
  if (r0 < 0) r0 = neg(r0), s0 = neg(s0), t0 = neg(t0);
  g = r0, s = s0, t = t0;
}

template <class T>
struct Echelon {
  std::unordered_map<uint64_t, Row<T>> piv;

  // Rolls back pivot edits if arithmetic overflows midway.
  bool add_row(Row<T> r) {
    std::vector<std::pair<uint64_t, Row<T>>> undo;
    try {
      while (!r.empty()) {
        uint64_t c = r.front().first;
        T q = r.front().second;
        auto it = piv.find(c);
        if (it == piv.end()) {
          if (q < 0)
            for (auto& e : r) e.second = neg(e.second);
          piv.emplace(c, std::move(r));
          return true;
        }
        Row<T>& p = it->second;
        T pl = p.front().second;
        if (q % pl == 0) {
          r = combine(r, T(1), p, neg(T(q / pl)));
          continue;
        }
        T g, s, t;
        egcd(pl, q, g, s, t);
        Row<T> np = combine(p, s, r, t);
        Row<T> nr = combine(r, T(pl / g), p, neg(T(q / g)));
        undo.emplace_back(c, p);
        p = std::move(np);
        r = std::move(nr);
      }
      return false;
    } catch (const Overflow&) {
      for (auto it = undo.rbegin(); it != undo.rend(); ++it) piv[it->first] = std::move(it->second);
      throw;
    }
  }

  bool member(Row<T> r) const {
    while (!r.empty()) {
      auto it = piv.find(r.front().first);
      if (it == piv.end()) return false;
      const Row<T>& p = it->second;
      T pl = p.front().second, q = r.front().second;
      if (q % pl != 0) return false;
      r = combine(r, T(1), p, neg(T(q / pl)));
    }
    return true;
  }
};

template <class T>
Row<T> lift(const SparseRow& r) {
  Row<T> out;
  out.reserve(r.size());
  for (const auto& [c, v] : r) out.emplace_back(c, T(v));
  return out;
}

}  // namespace

struct Lattice::Impl {
  Echelon<int64_t> small;
  std::unique_ptr<Echelon<cpp_int>> big;

  void promote() {
    big = std::make_unique<Echelon<cpp_int>>();
    for (auto& [c, r] : small.piv) {
      Row<cpp_int> b;
      for (auto& [k, v] : r) b.emplace_back(k, cpp_int(v));
      big->piv.emplace(c, std::move(b));
    }
    small.piv.clear();
  }
};

Lattice::Lattice() : impl_(std::make_unique<Impl>()) {}
Lattice::~Lattice() = default;
Lattice::Lattice(Lattice&&) noexcept = default;
Lattice& Lattice::operator=(Lattice&&) noexcept = default;

bool Lattice::add(const SparseRow& row) {
  if (!impl_->big) {
    try {
      return impl_->small.add_row(lift<int64_t>(row));
    } catch (const Overflow&) {
      impl_->promote();
    }
  }
  return impl_->big->add_row(lift<cpp_int>(row));
}

bool Lattice::contains(const SparseRow& row) const {
  if (!impl_->big) {
    try {
      return impl_->small.member(lift<int64_t>(row));
    } catch (const Overflow&) {
      impl_->promote();
    }
  }
  return impl_->big->member(lift<cpp_int>(row));
}

size_t Lattice::rank() const { return impl_->big ? impl_->big->piv.size() : impl_->small.piv.size(); }

bool Lattice::wide() const { return static_cast<bool>(impl_->big); }

}  // namespace wb
