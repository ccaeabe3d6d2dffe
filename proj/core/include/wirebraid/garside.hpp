#pragma once

#include <string>
#include <vector>

namespace wb::garside {

// Planar braid words: letter +i is sigma_i, -i its inverse (1 <= i < n).
using PlanarWord = std::vector<int>;

// A simple element as the permutation obtained by swapping positions i-1, i for
// each sigma_i read left to right.
using Perm = std::vector<int>;

struct NormalForm {
  int n = 0;
  int delta_power = 0;
  std::vector<Perm> factors;  // left-weighted, none equal to Delta or the identity
  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(int n, const PlanarWord& w);
bool equal(int n, const PlanarWord& u, const PlanarWord& v);
NormalForm multiply(const NormalForm& a, const NormalForm& b);
PlanarWord to_word(const NormalForm& nf);
std::string format(const NormalForm& nf);

// A positive word for a simple element.
PlanarWord simple_word(const Perm& p);

}  // namespace wb::garside
