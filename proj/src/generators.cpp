#include "updag/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "updag/outerpath.hpp"

namespace updag {

namespace {

// Relabel vertices in BFS discovery order from `root` over out-edges taken in
// construction order; edge ids and their order are unchanged.
void bfs_renumber(PoledDag& pd) {
  const Dag& g = pd.dag;
  std::vector<std::vector<int>> out(g.n);
  for (auto& [u, v] : g.edges) out[u].push_back(v);
  std::vector<int> newid(g.n, -1), queue{pd.s};
  newid[pd.s] = 0;
  int next = 1;
  for (size_t qi = 0; qi < queue.size(); qi++) {
    int v = queue[qi];
    for (int w : out[v])
      if (newid[w] == -1) {
        newid[w] = next++;
        queue.push_back(w);
      }
  }
  if (next != g.n) throw Error(ErrorKind::InternalVerification, "pole does not reach all vertices");
  Dag h;
  h.n = g.n;
  for (auto& [u, v] : g.edges) h.edges.push_back({newid[u], newid[v]});
  pd.dag = std::move(h);
  pd.s = newid[pd.s];
  pd.t = newid[pd.t];
}

}  // namespace

Dag gen_base(const std::string& name) {
  if (name == "g0") {
    // 8-vertex bipartite outerpath; ids are the figure labels minus one.
    // Outer cycle 5,1,2,6,7,3,4,8 with inner edges 6-5 and 8-7; every edge
    // runs from the part {5,2,7,4} to the part {1,6,3,8}.
    Dag g(8, {{4, 0}, {1, 0}, {1, 5}, {6, 5}, {6, 2}, {3, 2}, {3, 7}, {4, 7}, {4, 5}, {6, 7}});
    g.validate();
    return g;
  }
  if (name == "fan7") {
    // 7-vertex fan, c = 0, path 1..6; triangles c12, c34, c56 each have one
    // vertex below and one above the centre.
    Dag g(7, {{1, 0}, {0, 2}, {0, 3}, {4, 0}, {5, 0}, {0, 6},
              {1, 2}, {3, 2}, {4, 3}, {5, 4}, {5, 6}});
    g.validate();
    return g;
  }
  throw Error(ErrorKind::InvalidParameter, "unknown base graph: " + name);
}

Dag gen_g_ell(int ell, int max_ell) {
  if (ell < 0) throw Error(ErrorKind::InvalidParameter, "g_ell: negative level");
  if (ell > max_ell) throw Error(ErrorKind::TooLarge, "g_ell: level exceeds size guard");
  Dag g = gen_base("g0");
  // parts: A = {4,1,6,3} are tails of every edge
  std::vector<char> in_a(8, 0);
  for (int v : {4, 1, 6, 3}) in_a[v] = 1;
  std::vector<char> part(in_a.begin(), in_a.end());
  // outer edges of G_0 = the Hamiltonian cycle
  std::vector<std::pair<int, int>> outer = {{4, 0}, {1, 0}, {1, 5}, {6, 5},
                                            {6, 2}, {3, 2}, {3, 7}, {4, 7}};
  for (int level = 1; level <= ell; level++) {
    std::vector<std::pair<int, int>> next_outer;
    for (auto& [u, v] : outer) {
      int x = g.n, y = g.n + 1;
      g.n += 2;
      part.push_back(!part[u]);
      part.push_back(part[u]);
      auto add = [&](int a, int b) {
        auto e = part[a] ? std::make_pair(a, b) : std::make_pair(b, a);
        g.edges.push_back(e);
        next_outer.push_back(e);
      };
      add(u, x);
      add(x, y);
      add(y, v);
    }
    outer = std::move(next_outer);
  }
  return g;
}

Dag gen_pathwidth2(int k) {
  if (k <= 0) throw Error(ErrorKind::InvalidParameter, "pathwidth2: k must be positive");
  // vertices: a=0, b1=1, b2=2, c=3, then through-vertices, sources, sinks
  Dag g;
  g.n = 4;
  g.edges.push_back({0, 1});
  g.edges.push_back({0, 2});
  for (int i = 1; i <= 2; i++)
    for (int j = 0; j < 3 * k + 1; j++) {
      int d = g.n++;
      g.edges.push_back({i, d});
      g.edges.push_back({d, 3});
    }
  for (int j = 0; j < 6 * k + 1; j++) {
    int s = g.n++;
    g.edges.push_back({s, 0});
    g.edges.push_back({s, 3});
  }
  for (int i = 1; i <= 2; i++)
    for (int j = 0; j < 4 * k + 1; j++) {
      int t = g.n++;
      g.edges.push_back({i, t});
      g.edges.push_back({3, t});
    }
  return g;
}

PoledDag gen_parallel(int b, int q) {
  if (b < 1 || q < 1) throw Error(ErrorKind::InvalidParameter, "parallel: parameters must be positive");
  if (q == 1 && b > 1)
    throw Error(ErrorKind::InvalidParameter, "parallel: q = 1 with b > 1 needs parallel edges");
  PoledDag pd;
  pd.dag.n = 2;
  pd.s = 0;
  pd.t = 1;
  for (int i = 0; i < b; i++) {
    int prev = pd.s;
    for (int j = 0; j + 1 < q; j++) {
      int v = pd.dag.n++;
      pd.dag.edges.push_back({prev, v});
      prev = v;
    }
    pd.dag.edges.push_back({prev, pd.t});
  }
  bfs_renumber(pd);
  return pd;
}

PoledDag gen_gate(int p) {
  if (p < 1) throw Error(ErrorKind::InvalidParameter, "gate: p must be positive");
  PoledDag pd;
  pd.dag.n = 2;
  pd.s = 0;
  pd.t = 1;
  pd.dag.edges.push_back({0, 1});
  for (int i = 0; i + 1 < p; i++) {
    int v = pd.dag.n++;
    pd.dag.edges.push_back({0, v});
    pd.dag.edges.push_back({v, 1});
  }
  bfs_renumber(pd);
  return pd;
}

namespace {

// Appends a (p)-gate between the given poles of `g`; returns one edge list
// per lane (the direct edge, then each 2-path).
std::vector<std::vector<int>> append_gate(Dag& g, int s, int t, int p) {
  std::vector<std::vector<int>> lanes;
  g.edges.push_back({s, t});
  lanes.push_back({g.m() - 1});
  for (int i = 0; i + 1 < p; i++) {
    int v = g.n++;
    g.edges.push_back({s, v});
    int e1 = g.m() - 1;
    g.edges.push_back({v, t});
    lanes.push_back({e1, g.m() - 1});
  }
  return lanes;
}

}  // namespace

PoledDag gen_chain(int h, int q, int a) {
  if (h < 0 || q < 1 || a < 1) throw Error(ErrorKind::InvalidParameter, "chain: bad parameters");
  PoledDag pd;
  pd.dag.n = 1;
  pd.s = 0;
  int cur = 0;
  int gates = 2 * h + 1;
  for (int gi = 0; gi < gates; gi++) {
    int p = (gi == h) ? a : q;
    int nxt = pd.dag.n++;
    append_gate(pd.dag, cur, nxt, p);
    cur = nxt;
  }
  pd.t = cur;
  bfs_renumber(pd);
  return pd;
}

ThreePartitionInstance make_instance(std::vector<long> elements) {
  ThreePartitionInstance inst;
  inst.elements = std::move(elements);
  int k = static_cast<int>(inst.elements.size());
  if (k == 0 || k % 3 != 0)
    throw Error(ErrorKind::InvalidInstance, "element count must be a positive multiple of 3");
  for (long a : inst.elements)
    if (a <= 0) throw Error(ErrorKind::InvalidInstance, "elements must be positive");
  inst.b = k / 3;
  long total = std::accumulate(inst.elements.begin(), inst.elements.end(), 0L);
  if (total % inst.b != 0)
    throw Error(ErrorKind::InvalidInstance, "element sum is not divisible by k/3");
  inst.W = total / inst.b;
  return inst;
}

ThreePartitionInstance parse_instance(const std::string& text) {
  std::istringstream in(text);
  std::vector<long> xs;
  long v;
  while (in >> v) xs.push_back(v);
  if (!in.eof()) throw Error(ErrorKind::Parse, "instance file: expected integers");
  return make_instance(xs);
}

ReductionGraphs gen_reduction(const ThreePartitionInstance& inst, int hard_case) {
  if (hard_case < 1 || hard_case > 3)
    throw Error(ErrorKind::InvalidParameter, "reduction case must be 1, 2 or 3");
  ReductionGraphs r;
  r.inst = inst;
  int k = static_cast<int>(inst.elements.size());
  int b = inst.b;
  long W = inst.W;
  long q = W + static_cast<long>(k - 3) * (W + 1);

  // G_A: parallel composition of (b-1, W+1, a_i)-chains; gates indexed by
  // chain and position 1..2b-1 with the (a_i)-gate in the middle (pos b).
  Dag& ga = r.g_a.dag;
  ga.n = 2;
  r.g_a.s = 0;
  r.g_a.t = 1;
  for (int i = 0; i < k; i++) {
    int cur = r.g_a.s;
    for (int pos = 1; pos <= 2 * b - 1; pos++) {
      int p = (pos == b) ? static_cast<int>(inst.elements[i]) : static_cast<int>(W + 1);
      int nxt = (pos == 2 * b - 1) ? r.g_a.t : ga.n++;
      r.gate_lanes[{i, pos}] = append_gate(ga, cur, nxt, p);
      cur = nxt;
    }
  }
  r.m_a = ga.m();

  // G_B: (b, q)-parallel with its paths recorded edge by edge
  Dag& gb = r.g_b.dag;
  gb.n = 2;
  r.g_b.s = 0;
  r.g_b.t = 1;
  for (int j = 0; j < b; j++) {
    std::vector<int> path;
    int prev = r.g_b.s;
    for (long e = 0; e + 1 < q; e++) {
      int v = gb.n++;
      gb.edges.push_back({prev, v});
      path.push_back(gb.m() - 1);
      prev = v;
    }
    gb.edges.push_back({prev, r.g_b.t});
    path.push_back(gb.m() - 1);
    r.b_paths.push_back(std::move(path));
  }
  r.m_b = gb.m();

  // hard instance: copies of G_A, G_B and (d,2)-parallel barriers, wired per
  // the chosen case
  long d = r.m_a + r.m_b + 1;
  Dag h;
  auto copy_in = [&](const Dag& src, int s_to, int t_to) {
    // poles map to existing vertices; internals get fresh ids
    std::vector<int> map(src.n, -1);
    map[0] = s_to;
    map[1] = t_to;
    for (int v = 2; v < src.n; v++) map[v] = h.n++;
    for (auto& [u, v] : src.edges) h.edges.push_back({map[u], map[v]});
  };
  auto add_barrier = [&](int s_to, int t_to) {
    for (long i = 0; i < d; i++) {
      int v = h.n++;
      h.edges.push_back({s_to, v});
      h.edges.push_back({v, t_to});
    }
  };
  // G_A and G_B are built with poles 0,1 after bfs_renumber-like order; here
  // they are already built with s=0, t=1.
  if (hard_case == 1) {
    int s_a = 0, t_a = 1, s_b = 2, t_b = 3;
    h.n = 4;
    copy_in(ga, s_a, t_a);
    copy_in(gb, s_b, t_b);
    add_barrier(s_a, s_b);
    add_barrier(s_b, t_a);
    add_barrier(t_a, t_b);
  } else if (hard_case == 2) {
    // K4 pattern: s, x, y, t; barriers on (s,x),(s,y),(x,t),(y,t);
    // G_A replaces (x,y), G_B replaces (s,t)
    int s = 0, x = 1, y = 2, t = 3;
    h.n = 4;
    add_barrier(s, x);
    add_barrier(s, y);
    add_barrier(x, t);
    add_barrier(y, t);
    copy_in(ga, x, y);
    copy_in(gb, s, t);
  } else {
    // one source, two sinks, series-parallel underlying graph
    int s = 0, t_a = 1, s_b = 2, t_b = 3;
    h.n = 4;
    copy_in(ga, s, t_a);
    add_barrier(s, s_b);
    add_barrier(s_b, t_a);
    copy_in(gb, s_b, t_b);
  }
  r.hard_instance = h;
  r.hard_case = hard_case;
  return r;
}

CrossingAssignment route_solution(const ReductionGraphs& r,
                                  const std::vector<std::vector<int>>& bins) {
  int k = static_cast<int>(r.inst.elements.size());
  int b = r.inst.b;
  long W = r.inst.W;
  if (static_cast<int>(bins.size()) != b)
    throw Error(ErrorKind::NotASolution, "expected k/3 bins");
  std::vector<int> owner(k, -1);
  for (int j = 0; j < b; j++) {
    if (bins[j].size() != 3) throw Error(ErrorKind::NotASolution, "each bin needs 3 elements");
    long sum = 0;
    for (int idx : bins[j]) {
      if (idx < 0 || idx >= k) throw Error(ErrorKind::NotASolution, "element index out of range");
      if (owner[idx] != -1) throw Error(ErrorKind::NotASolution, "element used twice");
      owner[idx] = j;
      sum += r.inst.elements[idx];
    }
    if (sum != W)
      throw Error(ErrorKind::NotASolution,
                  "bin " + std::to_string(j) + " sums to " + std::to_string(sum) +
                      ", expected " + std::to_string(W));
  }

  CrossingAssignment asg;
  asg.bins = bins;
  asg.per_path.resize(b);
  for (int j = 0; j < b; j++) {
    const auto& path = r.b_paths[j];
    size_t next_edge = 0;
    for (int nu = 0; nu < k; nu++) {
      int h = owner[nu];
      int pos;
      if (h == j)
        pos = b;  // the (a_nu)-gate
      else if (h > j)
        pos = j + 1;
      else
        pos = b + j;
      const auto& lanes = r.gate_lanes.at({nu, pos});
      for (const auto& lane : lanes) {
        if (next_edge >= path.size())
          throw Error(ErrorKind::InternalVerification, "path ran out of edges while routing");
        asg.per_path[j].push_back({lane.front(), path[next_edge++]});
      }
    }
    if (next_edge != path.size())
      throw Error(ErrorKind::InternalVerification, "path edges left over after routing");
  }
  return asg;
}

AssignmentCheck verify_assignment(const ReductionGraphs& r, const CrossingAssignment& a) {
  AssignmentCheck chk;
  int k = static_cast<int>(r.inst.elements.size());
  int b = r.inst.b;
  long W = r.inst.W;
  auto problem = [&](const std::string& s) { chk.problems.push_back(s); };

  if (static_cast<int>(a.per_path.size()) != b) {
    problem("wrong number of paths");
    chk.ok = false;
    return chk;
  }
  // reverse map: g_a edge -> gate
  std::map<int, GateRef> gate_of_edge;
  for (auto& [ref, lanes] : r.gate_lanes)
    for (auto& lane : lanes)
      for (int e : lane) gate_of_edge[e] = ref;

  std::vector<int> ga_count(r.g_a.dag.m(), 0);
  for (int j = 0; j < b; j++) {
    std::map<int, int> path_edge_count;
    std::map<GateRef, std::set<int>> lanes_hit;  // gate -> lane indices
    for (auto& [ea, eb] : a.per_path[j]) {
      if (ea < 0 || ea >= r.g_a.dag.m()) {
        problem("bad g_a edge id");
        continue;
      }
      ga_count[ea]++;
      path_edge_count[eb]++;
      GateRef ref = gate_of_edge.at(ea);
      const auto& lanes = r.gate_lanes.at(ref);
      for (size_t li = 0; li < lanes.size(); li++)
        if (std::count(lanes[li].begin(), lanes[li].end(), ea)) {
          if (lanes_hit[ref].count(static_cast<int>(li)))
            problem("path " + std::to_string(j) + " crosses a lane twice");
          lanes_hit[ref].insert(static_cast<int>(li));
        }
    }
    // every edge of pi_j crossed exactly once
    const auto& path = r.b_paths[j];
    if (path_edge_count.size() != path.size())
      problem("path " + std::to_string(j) + ": not every edge is crossed exactly once");
    for (auto& [e, c] : path_edge_count)
      if (c != 1) problem("path " + std::to_string(j) + ": an edge is crossed " + std::to_string(c) + " times");
    // exactly three a-gates and k-3 (W+1)-gates, each fully crossed
    int agates = 0, wgates = 0;
    long asum = 0;
    for (auto& [ref, hit] : lanes_hit) {
      const auto& lanes = r.gate_lanes.at(ref);
      if (hit.size() != lanes.size()) {
        problem("path " + std::to_string(j) + " crosses a gate partially");
        continue;
      }
      if (ref.pos == b) {
        agates++;
        asum += r.inst.elements[ref.chain];
      } else {
        wgates++;
      }
    }
    if (agates != 3) problem("path " + std::to_string(j) + " crosses " + std::to_string(agates) + " a-gates");
    if (wgates != k - 3)
      problem("path " + std::to_string(j) + " crosses " + std::to_string(wgates) + " (W+1)-gates");
    if (asum != W)
      problem("path " + std::to_string(j) + " encodes a bin of weight " + std::to_string(asum));
  }
  for (int e = 0; e < r.g_a.dag.m(); e++)
    if (ga_count[e] > 1) problem("g_a edge " + std::to_string(e) + " crossed more than once");
  chk.ok = chk.problems.empty();
  return chk;
}

Dag random_connected_dag(int n, int m, unsigned long long seed) {
  if (n <= 0) throw Error(ErrorKind::InvalidParameter, "n must be positive");
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> rank(n);
  for (int i = 0; i < n; i++) rank[order[i]] = i;
  std::set<std::pair<int, int>> es;
  for (int i = 1; i < n; i++) {
    int p = static_cast<int>(rng() % i);
    es.insert({order[p], order[i]});
  }
  long maxm = static_cast<long>(n) * (n - 1) / 2;
  int target = std::clamp(m, n - 1, static_cast<int>(maxm));
  int guard = 0;
  while (static_cast<int>(es.size()) < target && guard++ < 100 * target + 100) {
    int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
    if (u == v) continue;
    if (rank[u] > rank[v]) std::swap(u, v);
    es.insert({u, v});
  }
  Dag g;
  g.n = n;
  g.edges.assign(es.begin(), es.end());
  return g;
}

Dag random_single_source_dag(int n, int extra_edges, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::set<std::pair<int, int>> es;
  for (int i = 1; i < n; i++) {
    int p = static_cast<int>(rng() % i);
    es.insert({order[p], order[i]});
  }
  int guard = 0;
  while (guard++ < 20 * (extra_edges + 1) && extra_edges > 0) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    if (i > j) std::swap(i, j);
    if (es.insert({order[i], order[j]}).second) extra_edges--;
  }
  Dag g;
  g.n = n;
  g.edges.assign(es.begin(), es.end());
  return g;
}

Dag random_outerpath(int n, unsigned long long seed) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "outerpath needs >= 2 vertices");
  std::mt19937_64 rng(seed);
  std::set<std::pair<int, int>> es;
  if (n == 2) {
    es.insert({0, 1});
  } else {
    // triangle strip: each new vertex closes a triangle on the current door
    int a = 0, b = 1;
    es.insert({0, 1});
    for (int v = 2; v < n; v++) {
      es.insert(std::minmax(a, v));
      es.insert(std::minmax(b, v));
      if (rng() & 1)
        a = v;
      else
        b = v;
    }
    // drop a random subset of chords (edges not on the outer cycle)
    Dag tmp;
    tmp.n = n;
    tmp.edges.assign(es.begin(), es.end());
    auto emb = outerplane_embedding(tmp);
    if (emb) {
      std::set<std::pair<int, int>> cyc;
      int cn = static_cast<int>(emb->cycle.size());
      for (int i = 0; i < cn; i++)
        cyc.insert(std::minmax(emb->cycle[i], emb->cycle[(i + 1) % cn]));
      for (auto it = es.begin(); it != es.end();)
        if (!cyc.count(*it) && rng() % 3 == 0)
          it = es.erase(it);
        else
          ++it;
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> rank(n);
  for (int i = 0; i < n; i++) rank[order[i]] = i;
  Dag g;
  g.n = n;
  for (auto [u, v] : es)
    g.edges.push_back(rank[u] < rank[v] ? std::make_pair(u, v) : std::make_pair(v, u));
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

Dag random_fan(int n, unsigned long long seed, int* center) {
  if (n < 2) throw Error(ErrorKind::InvalidParameter, "fan needs >= 2 vertices");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> und;
  for (int v = 1; v < n; v++) und.push_back({0, v});
  for (int v = 1; v + 1 < n; v++) und.push_back({v, v + 1});
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<int> rank(n);
  for (int i = 0; i < n; i++) rank[order[i]] = i;
  Dag g;
  g.n = n;
  for (auto [u, v] : und)
    g.edges.push_back(rank[u] < rank[v] ? std::make_pair(u, v) : std::make_pair(v, u));
  if (center) *center = 0;
  return g;
}

}  // namespace updag
