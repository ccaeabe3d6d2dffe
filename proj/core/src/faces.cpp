#include <deque>

#include "wirebraid/network.hpp"

namespace wb {

FaceStructure trace_faces(const Network& net) {
  FaceStructure fs;
  fs.face_of.assign(net.num_edges(), {-1, -1});
  for (EId e = 0; e < net.num_edges(); ++e)
    for (int s = 0; s < 2; ++s) {
      if (fs.face_of[e][s] >= 0) continue;
      int id = static_cast<int>(fs.faces.size());
      std::vector<EdgeEnd> face;
      EdgeEnd d{e, s};
      while (fs.face_of[d.edge][d.side] < 0) {
        fs.face_of[d.edge][d.side] = id;
        face.push_back(d);
        // Arrive through the opposite end and leave by its clockwise successor.
        EdgeEnd back = d.opposite();
        VId y = net.at(back);
        int p = net.position(back);
        d = net.rotation[y][(p + 1) % net.degree(y)];
      }
      fs.faces.push_back(std::move(face));
    }
  EdgeEnd in = net.staging_end().opposite();
  fs.outer = fs.face_of[in.edge][in.side];
  return fs;
}

std::vector<bool> outside_of(const Network& /*net*/, const FaceStructure& fs,
                             const std::vector<bool>& blocked_edges) {
  std::vector<bool> out(fs.faces.size(), false);
  std::deque<int> q{fs.outer};
  out[fs.outer] = true;
  while (!q.empty()) {
    int f = q.front();
    q.pop_front();
    for (EdgeEnd d : fs.faces[f]) {
      if (blocked_edges[d.edge]) continue;
      int g = fs.face_of[d.edge][1 - d.side];
      if (!out[g]) {
        out[g] = true;
        q.push_back(g);
      }
    }
  }
  return out;
}

}  // namespace wb
