#include "wirebraid/tietze.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_map>

namespace wb {

GroupWord reduce_cyclically(const GroupWord& w) {
  GroupWord s;
  for (int x : w) {
    if (!s.empty() && s.back() == -x) s.pop_back();
    else s.push_back(x);
  }
  size_t b = 0, e = s.size();
  while (e - b >= 2 && s[b] == -s[e - 1]) ++b, --e;
  return GroupWord(s.begin() + static_cast<long>(b), s.begin() + static_cast<long>(e));
}

namespace {

GroupWord invert(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (int& x : out) x = -x;
  return out;
}

int gen_of(int letter) { return (letter < 0 ? -letter : letter) - 1; }

GroupWord min_rotation(const GroupWord& w) {
  GroupWord best = w;
  for (const GroupWord& x : {w, invert(w)})
    for (size_t k = 0; k < x.size(); ++k) {
      GroupWord r(x.begin() + static_cast<long>(k), x.end());
      r.insert(r.end(), x.begin(), x.begin() + static_cast<long>(k));
      if (r < best) best = r;
    }
  return best;
}

}  // namespace

TietzeResult tietze_simplify(GroupPresentation p, size_t budget) {
  TietzeResult res;
  const int G = p.generators;
  std::vector<GroupWord> rel;
  for (auto& r : p.relators) rel.push_back(reduce_cyclically(r));
  std::vector<bool> alive(rel.size(), true), gone(static_cast<size_t>(G), false);
  std::vector<std::set<size_t>> occ(static_cast<size_t>(G));
  auto index = [&](size_t id) {
    for (int x : rel[id]) occ[gen_of(x)].insert(id);
  };
  auto unindex = [&](size_t id) {
    for (int x : rel[id]) occ[gen_of(x)].erase(id);
  };
  using Item = std::pair<size_t, size_t>;  // (length, id)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  for (size_t id = 0; id < rel.size(); ++id) {
    if (rel[id].empty()) {
      alive[id] = false;
      continue;
    }
    index(id);
    heap.push({rel[id].size(), id});
  }

  size_t spent = 0;
  while (!heap.empty()) {
    auto [len, id] = heap.top();
    heap.pop();
    if (!alive[id] || rel[id].size() != len) continue;
    std::unordered_map<int, int> count;
    for (int x : rel[id]) count[gen_of(x)]++;
    size_t at = rel[id].size();
    int best = -1;
    for (size_t k = 0; k < rel[id].size(); ++k) {
      int g = gen_of(rel[id][k]);
      if (count[g] == 1 && (best < 0 || g < best)) best = g, at = k;
    }
    if (best < 0) continue;  // revisited if another elimination rewrites it

    // r = x C with x the single occurrence, so x = C^-1.
    const GroupWord& r = rel[id];
    int x = r[at];
    GroupWord C(r.begin() + static_cast<long>(at) + 1, r.end());
    C.insert(C.end(), r.begin(), r.begin() + static_cast<long>(at));
    GroupWord plus = x > 0 ? invert(C) : C;  // value of generator `best`
    GroupWord minus = invert(plus);

    unindex(id);
    alive[id] = false;
    gone[best] = true;
    ++res.eliminated;
    std::vector<size_t> users(occ[best].begin(), occ[best].end());
    for (size_t u : users) {
      unindex(u);
      GroupWord out;
      for (int y : rel[u]) {
        if (gen_of(y) == best) {
          const GroupWord& s = y > 0 ? plus : minus;
          out.insert(out.end(), s.begin(), s.end());
        } else {
          out.push_back(y);
        }
      }
      spent += out.size();
      rel[u] = reduce_cyclically(out);
      if (rel[u].empty()) {
        alive[u] = false;
      } else {
        index(u);
        heap.push({rel[u].size(), u});
      }
    }
    if (spent > budget) {
      res.exhausted = true;
      break;
    }
  }

  std::vector<int> renum(static_cast<size_t>(G), -1);
  int next = 0;
  for (int g = 0; g < G; ++g)
    if (!gone[g]) renum[g] = next++;
  res.presentation.generators = next;
  std::set<GroupWord> seen;
  for (size_t id = 0; id < rel.size(); ++id) {
    if (!alive[id]) continue;
    GroupWord w;
    for (int y : rel[id]) w.push_back(y > 0 ? renum[gen_of(y)] + 1 : -(renum[gen_of(y)] + 1));
    if (seen.insert(min_rotation(w)).second) res.presentation.relators.push_back(w);
  }
  return res;
}

}  // namespace wb
