#include "updag/outerpath.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace updag {

namespace {
inline std::pair<int, int> mm(int a, int b) { return a < b ? std::pair<int, int>{a, b} : std::pair<int, int>{b, a}; }
}  // namespace


namespace {

// Faces of an outerplane embedding via rotation-system tracing. Vertices are
// cycle positions 0..n-1 in ccw convex position; rotation at p = neighbors
// sorted by (q-p) mod n ascending. Returns internal faces as position lists.
std::vector<std::vector<int>> internal_faces(int n, const std::vector<std::pair<int, int>>& pos_edges) {
  std::vector<std::vector<int>> adj(n);
  for (auto& [a, b] : pos_edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int p = 0; p < n; p++)
    std::sort(adj[p].begin(), adj[p].end(),
              [&](int x, int y) { return (x - p + n) % n < (y - p + n) % n; });
  std::map<std::pair<int, int>, int> idx;  // dart -> index of target in adj[source]
  for (int p = 0; p < n; p++)
    for (size_t i = 0; i < adj[p].size(); i++) idx[{p, adj[p][i]}] = static_cast<int>(i);
  std::set<std::pair<int, int>> used;
  std::vector<std::vector<int>> faces;
  auto trace = [&](std::pair<int, int> d0) {
    std::vector<int> walk;
    auto d = d0;
    do {
      used.insert(d);
      walk.push_back(d.first);
      auto [u, v] = d;
      int i = idx[{v, u}];
      int deg = static_cast<int>(adj[v].size());
      int w = adj[v][(i - 1 + deg) % deg];
      d = {v, w};
    } while (d != d0);
    return walk;
  };
  // outer face: the walk containing dart 1->0 (descending positions)
  trace({1 % n, 0});
  for (int p = 0; p < n; p++)
    for (int q : adj[p])
      if (!used.count({p, q})) faces.push_back(trace({p, q}));
  return faces;
}

}  // namespace

std::optional<OuterplaneEmbedding> outerplane_embedding(const Dag& g) {
  int n = g.n;
  if (n < 3) return std::nullopt;
  std::vector<std::set<int>> adj(n);
  for (auto& [u, v] : g.edges) {
    adj[u].insert(v);
    adj[v].insert(u);
  }
  for (int v = 0; v < n; v++)
    if (adj[v].size() < 2) return std::nullopt;

  struct Rm {
    int v, u, w;
  };
  std::vector<Rm> removed;
  std::vector<char> dead(n, 0);
  int alive = n;
  while (alive > 3) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; v++)
      if (!dead[v] && adj[v].size() == 2) pick = v;
    if (pick < 0) return std::nullopt;
    auto it = adj[pick].begin();
    int u = *it++;
    int w = *it;
    adj[u].erase(pick);
    adj[w].erase(pick);
    adj[u].insert(w);
    adj[w].insert(u);
    adj[pick].clear();
    dead[pick] = 1;
    alive--;
    removed.push_back({pick, u, w});
  }
  std::vector<int> cycle;
  for (int v = 0; v < n; v++)
    if (!dead[v]) cycle.push_back(v);
  if (cycle.size() != 3) return std::nullopt;
  for (int i = 0; i < 3; i++)
    for (int j = i + 1; j < 3; j++)
      if (!adj[cycle[i]].count(cycle[j])) return std::nullopt;
  for (auto it = removed.rbegin(); it != removed.rend(); ++it) {
    int k = static_cast<int>(cycle.size());
    bool ins = false;
    for (int i = 0; i < k; i++) {
      int a = cycle[i], b = cycle[(i + 1) % k];
      if ((a == it->u && b == it->w) || (a == it->w && b == it->u)) {
        cycle.insert(cycle.begin() + i + 1, it->v);
        ins = true;
        break;
      }
    }
    if (!ins) return std::nullopt;
  }
  // verify: consecutive cycle pairs are real edges; rest are non-crossing chords
  std::vector<int> pos(n);
  for (int i = 0; i < n; i++) pos[cycle[i]] = i;
  std::set<std::pair<int, int>> cyc;
  for (int i = 0; i < n; i++) {
    int a = cycle[i], b = cycle[(i + 1) % n];
    if (!g.has_edge(a, b) && !g.has_edge(b, a)) return std::nullopt;
    cyc.insert(mm(a, b));
  }
  OuterplaneEmbedding emb;
  emb.cycle = cycle;
  for (auto& [u, v] : g.edges) {
    auto key = mm(u, v);
    if (cyc.count(key)) continue;
    auto [a, b] = mm(pos[u], pos[v]);
    emb.chords.push_back({a, b});
  }
  std::sort(emb.chords.begin(), emb.chords.end());
  for (size_t i = 0; i < emb.chords.size(); i++)
    for (size_t j = i + 1; j < emb.chords.size(); j++) {
      auto [a, b] = emb.chords[i];
      auto [c, d] = emb.chords[j];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return std::nullopt;
    }
  return emb;
}

bool is_fan(const Dag& g, int c, std::vector<int>* path_order) {
  int n = g.n;
  if (c < 0 || c >= n) return false;
  if (n == 1) {
    if (path_order) path_order->clear();
    return g.m() == 0;
  }
  if (g.m() != 2 * n - 3) return false;
  auto adj = g.undirected_adj();
  if (static_cast<int>(adj[c].size()) != n - 1) return false;
  std::vector<std::set<int>> rest(n);
  for (auto& [u, v] : g.edges) {
    if (u == c || v == c) continue;
    rest[u].insert(v);
    rest[v].insert(u);
  }
  if (n == 2) {
    if (path_order) *path_order = {c == 0 ? 1 : 0};
    return true;
  }
  std::vector<int> ends;
  for (int v = 0; v < n; v++) {
    if (v == c) continue;
    if (rest[v].size() > 2) return false;
    if (rest[v].size() <= 1) ends.push_back(v);
  }
  if (ends.size() != 2) return false;
  std::vector<int> order{std::min(ends[0], ends[1])};
  std::set<int> seen{order[0]};
  while (true) {
    int cur = order.back();
    int nxt = -1;
    for (int w : rest[cur])
      if (!seen.count(w)) nxt = w;
    if (nxt < 0) break;
    order.push_back(nxt);
    seen.insert(nxt);
  }
  if (static_cast<int>(order.size()) != n - 1) return false;
  if (path_order) *path_order = order;
  return true;
}

int find_fan_center(const Dag& g) {
  for (int c = 0; c < g.n; c++)
    if (is_fan(g, c)) return c;
  return -1;
}

OuterpathStructure outerpath_structure(const Dag& g) {
  g.validate();
  if (!is_acyclic_dag(g)) throw Error(ErrorKind::CyclicGraph, "outerpath input has a directed cycle");
  if (!g.connected()) throw Error(ErrorKind::NotAnOuterpath, "graph is not connected");
  if (g.n < 3) throw Error(ErrorKind::NotAnOuterpath, "too small to triangulate; handled by caller");

  LinearExtension le = linear_extension(g);
  auto directed = [&](int u, int v) -> std::pair<int, int> {
    return le.rank[u] < le.rank[v] ? std::make_pair(u, v) : std::make_pair(v, u);
  };

  OuterpathStructure st;
  Dag aug = g;

  // 2-connect by closing ears at cut vertices; every added edge is oriented
  // by the fixed linear extension of g, which keeps the graph acyclic.
  for (int guard = 0; guard <= g.n * 2 + 4; guard++) {
    auto bs = blocks(aug);
    if (bs.size() <= 1) break;
    if (guard == g.n * 2 + 4)
      throw Error(ErrorKind::InternalVerification, "2-connecting did not terminate");
    std::map<int, std::vector<int>> owner;  // vertex -> block ids
    for (size_t b = 0; b < bs.size(); b++)
      for (int v : bs[b].vertex_map) owner[v].push_back(static_cast<int>(b));
    int cut = -1;
    for (auto& [v, bl] : owner)
      if (bl.size() >= 2) {
        cut = v;
        break;
      }
    if (cut < 0) throw Error(ErrorKind::InternalVerification, "no cut vertex in split graph");
    auto adj = aug.undirected_adj();
    auto pick_nbr = [&](const Block& b) {
      int best = -1, bestdeg = 1 << 30;
      for (int lx = 0; lx < b.dag.n; lx++) {
        int x = b.vertex_map[lx];
        if (x == cut) continue;
        if (!aug.has_edge(cut, x) && !aug.has_edge(x, cut)) continue;
        int d = static_cast<int>(adj[x].size());
        if (d < bestdeg || (d == bestdeg && x < best)) {
          best = x;
          bestdeg = d;
        }
      }
      return best;
    };
    int u = pick_nbr(bs[owner[cut][0]]);
    int w = pick_nbr(bs[owner[cut][1]]);
    if (u < 0 || w < 0 || u == w) throw Error(ErrorKind::NotAnOuterpath, "cannot 2-connect input");
    auto e = directed(u, w);
    st.added_edges.push_back(e);
    aug.edges.push_back(e);
  }

  auto emb = outerplane_embedding(aug);
  if (!emb)
    throw Error(ErrorKind::NotAnOuterpath, "underlying graph is not outerplanar after 2-connecting");
  int n = g.n;
  std::vector<int>& cycle = emb->cycle;

  // faces in position space
  std::vector<std::pair<int, int>> pos_edges;
  for (int i = 0; i < n; i++) pos_edges.push_back({i, (i + 1) % n});
  for (auto& ch : emb->chords) pos_edges.push_back(ch);
  auto faces = internal_faces(n, pos_edges);

  // weak dual over chords must be a path
  std::map<std::pair<int, int>, std::vector<int>> face_of_chord;
  for (size_t f = 0; f < faces.size(); f++) {
    auto& fc = faces[f];
    int k = static_cast<int>(fc.size());
    for (int i = 0; i < k; i++) {
      auto key = mm(fc[i], fc[(i + 1) % k]);
      int gap = key.second - key.first;
      if (gap != 1 && gap != n - 1) face_of_chord[key].push_back(static_cast<int>(f));
    }
  }
  std::vector<std::vector<int>> dual(faces.size());
  for (auto& [ch, fs] : face_of_chord) {
    if (fs.size() != 2) throw Error(ErrorKind::InternalVerification, "chord without two faces");
    dual[fs[0]].push_back(fs[1]);
    dual[fs[1]].push_back(fs[0]);
  }
  for (auto& d : dual)
    if (d.size() > 2)
      throw Error(ErrorKind::NotAnOuterpath, "weak dual of internal faces is not a path");
  std::vector<int> face_order;
  {
    int start = 0;
    for (size_t f = 0; f < faces.size(); f++)
      if (dual[f].size() <= 1) {
        start = static_cast<int>(f);
        break;
      }
    std::vector<char> vis(faces.size(), 0);
    int cur = start;
    for (;;) {
      vis[cur] = 1;
      face_order.push_back(cur);
      int nxt = -1;
      for (int w : dual[cur])
        if (!vis[w]) nxt = w;
      if (nxt < 0) break;
      cur = nxt;
    }
    if (face_order.size() != faces.size())
      throw Error(ErrorKind::NotAnOuterpath, "weak dual of internal faces is not a path");
  }

  // snake-triangulate each face between its door edges so the global dual
  // stays a path; collect triangles in strip order
  std::vector<std::pair<int, int>> tri_added;  // position pairs
  std::vector<std::array<int, 3>> tris;        // positions
  auto door_between = [&](int fa, int fb) -> std::pair<int, int> {
    for (auto& [ch, fs] : face_of_chord)
      if ((fs[0] == fa && fs[1] == fb) || (fs[0] == fb && fs[1] == fa)) return ch;
    throw Error(ErrorKind::InternalVerification, "missing door");
  };
  for (size_t oi = 0; oi < face_order.size(); oi++) {
    auto fc = faces[face_order[oi]];
    int r = static_cast<int>(fc.size());
    std::optional<std::pair<int, int>> door_in, door_out;
    if (oi > 0) door_in = door_between(face_order[oi], face_order[oi - 1]);
    if (oi + 1 < face_order.size()) door_out = door_between(face_order[oi], face_order[oi + 1]);
    auto is_edge_at = [&](int i, std::pair<int, int> d) {
      auto key = mm(fc[i], fc[(i + 1) % r]);
      return key == d;
    };
    int entry = -1;
    if (door_in) {
      for (int i = 0; i < r && entry < 0; i++)
        if (is_edge_at(i, *door_in)) entry = i;
    } else if (door_out) {
      int exit_at = -1;
      for (int i = 0; i < r && exit_at < 0; i++)
        if (is_edge_at(i, *door_out)) exit_at = i;
      entry = (exit_at + r / 2) % r;
    } else {
      entry = 0;
    }
    std::rotate(fc.begin(), fc.begin() + (entry + 1) % r, fc.end());
    // entry edge is now (fc[r-1], fc[0]); locate the exit edge (fc[j], fc[j+1])
    int j = r / 2;
    if (door_out) {
      j = -1;
      for (int i = 0; i + 1 < r; i++) {
        auto key = mm(fc[i], fc[i + 1]);
        if (key == *door_out) j = i;
      }
      if (j < 0) throw Error(ErrorKind::InternalVerification, "exit door not on face");
    }
    int lo = 0, hi = r - 1;
    while (hi - lo >= 2) {
      bool advance_lo = lo < j;
      if (advance_lo) {
        tris.push_back({fc[lo], fc[lo + 1], fc[hi]});
        if (hi - lo > 2) tri_added.push_back({fc[lo + 1], fc[hi]});
        lo++;
      } else {
        tris.push_back({fc[lo], fc[hi - 1], fc[hi]});
        if (hi - lo > 2) tri_added.push_back({fc[lo], fc[hi - 1]});
        hi--;
      }
    }
  }

  for (auto& [pa, pb] : tri_added) {
    auto e = directed(cycle[pa], cycle[pb]);
    st.added_edges.push_back(e);
    aug.edges.push_back(e);
  }
  st.augmented = aug;
  st.hamiltonian_outer_cycle = cycle;
  for (auto& t : tris) st.triangles.push_back({cycle[t[0]], cycle[t[1]], cycle[t[2]]});

  // backbone: degree >= 4 vertices, ordered by first appearance on the strip
  auto deg = aug.degrees();
  std::vector<int> bb;
  for (auto& t : st.triangles)
    for (int v : t)
      if (deg[v] >= 4 && !std::count(bb.begin(), bb.end(), v)) bb.push_back(v);
  if (bb.empty()) {
    // small maximal outerpaths are fans; the centre stands in for the backbone
    int c = find_fan_center(aug);
    if (c < 0) throw Error(ErrorKind::InternalVerification, "small outerpath is not a fan");
    bb.push_back(c);
  }
  st.backbone = bb;
  for (size_t i = 0; i + 1 < bb.size(); i++)
    if (!aug.has_edge(bb[i], bb[i + 1]) && !aug.has_edge(bb[i + 1], bb[i]))
      throw Error(ErrorKind::InternalVerification, "backbone vertices do not form a path");

  // fan assignment: inner-edge partner when present, else the backbone
  // neighbour on the outer cycle
  std::set<std::pair<int, int>> cyc_edges;
  for (int i = 0; i < n; i++) cyc_edges.insert(mm(cycle[i], cycle[(i + 1) % n]));
  auto aadj = aug.undirected_adj();
  st.fan_assignment.assign(n, -1);
  std::vector<int> bb_index(n, -1);
  for (size_t i = 0; i < bb.size(); i++) bb_index[bb[i]] = static_cast<int>(i);
  for (int v = 0; v < n; v++) {
    if (bb_index[v] >= 0) continue;
    int chord_partner = -1;
    std::vector<int> bb_nbrs;
    for (int w : aadj[v]) {
      if (!cyc_edges.count(mm(v, w))) chord_partner = w;
      if (bb_index[w] >= 0) bb_nbrs.push_back(w);
    }
    int target = -1;
    if (chord_partner >= 0 && bb_index[chord_partner] >= 0) {
      target = chord_partner;
    } else if (!bb_nbrs.empty()) {
      target = *std::min_element(bb_nbrs.begin(), bb_nbrs.end(),
                                 [&](int a, int b) { return bb_index[a] < bb_index[b]; });
    }
    if (target < 0) throw Error(ErrorKind::InternalVerification, "vertex without backbone neighbour");
    st.fan_assignment[v] = target;
  }
  return st;
}

}  // namespace updag
