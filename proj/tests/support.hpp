#pragma once

#include <cstdlib>
#include <random>
#include <string>

#include "wirebraid/analysis.hpp"
#include "wirebraid/garside.hpp"
#include "wirebraid/network.hpp"
#include "wirebraid/words.hpp"

namespace wbtest {

inline std::string fixture_path(const std::string& name) {
  return std::string(WIREBRAID_FIXTURE_DIR) + "/" + name + ".json";
}

inline wb::Network fixture(const std::string& name) { return wb::load_network_file(fixture_path(name)); }

// sigma_i -> d^{i-1} s d^{1-i} in the canonical alphabet of a connected network.
inline wb::Word lift_planar(const wb::Analysis& a, const wb::garside::PlanarWord& w) {
  wb::Letter s{a.canonical_symbol(*a.v0, 2, 1), 1};
  wb::Word out;
  for (int x : w) {
    int i = x > 0 ? x : -x;
    for (int k = 1; k < i; ++k) out.push_back(a.delta(1));
    out.push_back(x > 0 ? s : s.inverse());
    for (int k = 1; k < i; ++k) out.push_back(a.delta(-1));
  }
  return wb::free_reduce(out);
}

inline wb::garside::PlanarWord random_planar(std::mt19937& rng, int n, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), gen(1, n - 1), sign(0, 1);
  wb::garside::PlanarWord w(static_cast<size_t>(len(rng)));
  for (int& x : w) x = sign(rng) ? gen(rng) : -gen(rng);
  return w;
}

// Applies `steps` random braid moves, far commutations and inserted cancelling pairs.
inline wb::garside::PlanarWord scramble(std::mt19937& rng, int n, wb::garside::PlanarWord w, int steps) {
  std::uniform_int_distribution<int> kind(0, 2), gen(1, n - 1), sign(0, 1);
  for (int s = 0; s < steps; ++s) {
    const size_t len = w.size();
    switch (kind(rng)) {
      case 0: {  // a b a -> b a b, |a| and |b| adjacent, same sign
        if (len < 3) break;
        size_t p = std::uniform_int_distribution<size_t>(0, len - 3)(rng);
        int a = w[p], b = w[p + 1];
        if (w[p + 2] == a && (a > 0) == (b > 0) && std::abs(std::abs(a) - std::abs(b)) == 1) {
          w[p] = b;
          w[p + 1] = a;
          w[p + 2] = b;
        }
        break;
      }
      case 1: {
        if (len < 2) break;
        size_t p = std::uniform_int_distribution<size_t>(0, len - 2)(rng);
        if (std::abs(std::abs(w[p]) - std::abs(w[p + 1])) >= 2) std::swap(w[p], w[p + 1]);
        break;
      }
      default: {
        size_t p = std::uniform_int_distribution<size_t>(0, len)(rng);
        int g = sign(rng) ? gen(rng) : -gen(rng);
        w.insert(w.begin() + static_cast<long>(p), {g, -g});
      }
    }
  }
  return w;
}

}  // namespace wbtest
