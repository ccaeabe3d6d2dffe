#include "wirebraid/garside.hpp"

#include <numeric>
#include <stdexcept>

namespace wb::garside {

namespace {

Perm identity(int n) {
  Perm p(static_cast<size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm delta(int n) {
  Perm p(static_cast<size_t>(n));
  for (int k = 0; k < n; ++k) p[k] = n - 1 - k;
  return p;
}

// Delta^-1 X Delta.
Perm tau(const Perm& a) {
  int n = static_cast<int>(a.size());
  Perm out(a.size());
  for (int k = 0; k < n; ++k) out[k] = n - 1 - a[n - 1 - k];
  return out;
}

bool right_descent(const Perm& a, int i) { return a[i - 1] > a[i]; }

bool left_descent(const Perm& b, int i) {
  // value i appears before value i-1
  for (int v : b) {
    if (v == i) return true;
    if (v == i - 1) return false;
  }
  return false;
}

void swap_values(Perm& b, int i) {
  for (int& v : b) {
    if (v == i - 1) v = i;
    else if (v == i) v = i - 1;
  }
}

// Makes (a, b) left-weighted; returns true if anything moved.
bool left_weight(Perm& a, Perm& b) {
  int n = static_cast<int>(a.size());
  bool moved = false;
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n; ++i)
      if (left_descent(b, i) && !right_descent(a, i)) {
        std::swap(a[i - 1], a[i]);
        swap_values(b, i);
        moved = again = true;
      }
  }
  return moved;
}

NormalForm normalize(int n, int k, std::vector<Perm> f) {
  const Perm id = identity(n), top = delta(n);
  for (bool again = true; again;) {
    again = false;
    for (size_t j = f.size(); j-- > 1;)
      if (left_weight(f[j - 1], f[j])) again = true;
  }
  NormalForm nf;
  nf.n = n;
  size_t b = 0;
  while (b < f.size() && f[b] == top) ++b;
  nf.delta_power = k + static_cast<int>(b);
  for (size_t j = b; j < f.size(); ++j)
    if (f[j] != id) nf.factors.push_back(f[j]);
  return nf;
}

}  // namespace

NormalForm normal_form(int n, const PlanarWord& w) {
  if (n < 1) throw std::invalid_argument("braid index must be positive");
  int k = 0;
  std::vector<Perm> f;
  const Perm top = delta(n);
  for (int x : w) {
    int i = x < 0 ? -x : x;
    if (i < 1 || i >= n) throw std::out_of_range("generator index out of range");
    if (x > 0) {
      Perm s = identity(n);
      std::swap(s[i - 1], s[i]);
      f.push_back(s);
    } else {
      // sigma_i^-1 = Delta^-1 (Delta sigma_i^-1); move Delta^-1 to the front.
      for (Perm& p : f) p = tau(p);
      --k;
      Perm s = top;
      std::swap(s[i - 1], s[i]);
      f.push_back(s);
    }
  }
  return normalize(n, k, std::move(f));
}

bool equal(int n, const PlanarWord& u, const PlanarWord& v) { return normal_form(n, u) == normal_form(n, v); }

NormalForm multiply(const NormalForm& a, const NormalForm& b) {
  if (a.n != b.n) throw std::invalid_argument("braid index mismatch");
  // a.factors * Delta^kb = Delta^kb * tau^kb(a.factors)
  std::vector<Perm> f;
  for (Perm p : a.factors) {
    if (b.delta_power % 2 != 0) p = tau(p);
    f.push_back(p);
  }
  f.insert(f.end(), b.factors.begin(), b.factors.end());
  return normalize(a.n, a.delta_power + b.delta_power, std::move(f));
}

PlanarWord simple_word(const Perm& p) {
  // Bubble sort back to the identity; the swaps read backwards spell p.
  Perm a = p;
  PlanarWord rev;
  int n = static_cast<int>(a.size());
  for (bool again = true; again;) {
    again = false;
    for (int i = 1; i < n; ++i)
      if (a[i - 1] > a[i]) {
        std::swap(a[i - 1], a[i]);
        rev.push_back(i);
        again = true;
      }
  }
  return PlanarWord(rev.rbegin(), rev.rend());
}

PlanarWord to_word(const NormalForm& nf) {
  PlanarWord out;
  PlanarWord d = simple_word(delta(nf.n));
  int k = nf.delta_power;
  for (int j = 0; j < (k < 0 ? -k : k); ++j) {
    if (k > 0) out.insert(out.end(), d.begin(), d.end());
    else
      for (auto it = d.rbegin(); it != d.rend(); ++it) out.push_back(-*it);
  }
  for (const Perm& p : nf.factors) {
    PlanarWord s = simple_word(p);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

std::string format(const NormalForm& nf) {
  std::string out = "D^" + std::to_string(nf.delta_power);
  for (const Perm& p : nf.factors) {
    out += " [";
    for (size_t k = 0; k < p.size(); ++k) out += (k ? "," : "") + std::to_string(p[k]);
    out += "]";
  }
  return out;
}

}  // namespace wb::garside
