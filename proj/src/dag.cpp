#include "updag/dag.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "updag/rational.hpp"

namespace updag {

const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::Parse: return "parse";
    case ErrorKind::CyclicGraph: return "cyclic-graph";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NotBiconnected: return "not-biconnected";
    case ErrorKind::NotAFan: return "not-a-fan";
    case ErrorKind::NotAnOuterpath: return "not-an-outerpath";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
    case ErrorKind::InvalidInstance: return "invalid-instance";
    case ErrorKind::InvalidLabeling: return "invalid-labeling";
    case ErrorKind::NotASolution: return "not-a-solution";
    case ErrorKind::NonSimpleDrawing: return "non-simple-drawing";
    case ErrorKind::UnsupportedInput: return "unsupported-input";
    case ErrorKind::InconsistentChoice: return "inconsistent-choice";
    case ErrorKind::InternalVerification: return "internal-verification-failure";
    case ErrorKind::Usage: return "usage";
  }
  return "unknown";
}

std::string rat_to_string(const Rat& r) {
  return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat rat_from_string(std::string_view s) {
  auto bad = [&]() { return Error(ErrorKind::Parse, "bad rational: " + std::string(s)); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rat(BigInt(std::string(s)));
    BigInt p{std::string(s.substr(0, slash))};
    BigInt q{std::string(s.substr(slash + 1))};
    if (q == 0) throw bad();
    return Rat(p, q);
  } catch (const std::exception&) {
    throw bad();
  }
}

BigInt rat_floor(const Rat& r) {
  BigInt p = rat_num(r), q = rat_den(r);
  BigInt d = p / q;
  if (p < 0 && d * q != p) d -= 1;
  return d;
}

Rat dyadic_between(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InternalVerification, "dyadic_between: empty interval");
  BigInt two_k = 1;
  for (;;) {
    BigInt m = rat_floor(lo * two_k) + 1;
    Rat cand(m, two_k);
    if (cand < hi) return cand;
    two_k *= 2;
  }
}

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

bool Dag::has_edge(int u, int v) const {
  for (auto& [a, b] : edges)
    if (a == u && b == v) return true;
  return false;
}

void Dag::validate() const {
  std::set<std::pair<int, int>> seen;
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw Error(ErrorKind::InvalidParameter, "edge endpoint out of range");
    if (u == v) throw Error(ErrorKind::InvalidParameter, "self-loop");
    if (!seen.insert({u, v}).second) throw Error(ErrorKind::InvalidParameter, "duplicate edge");
  }
}

std::vector<std::vector<int>> Dag::out_adj() const {
  std::vector<std::vector<int>> a(n);
  for (auto& [u, v] : edges) a[u].push_back(v);
  return a;
}

std::vector<std::vector<int>> Dag::in_adj() const {
  std::vector<std::vector<int>> a(n);
  for (auto& [u, v] : edges) a[v].push_back(u);
  return a;
}

std::vector<std::vector<int>> Dag::undirected_adj() const {
  std::vector<std::vector<int>> a(n);
  for (auto& [u, v] : edges) {
    a[u].push_back(v);
    a[v].push_back(u);
  }
  for (auto& l : a) std::sort(l.begin(), l.end());
  return a;
}

std::vector<int> Dag::sources() const {
  std::vector<int> indeg(n, 0), out;
  for (auto& [u, v] : edges) indeg[v]++;
  for (int i = 0; i < n; i++)
    if (indeg[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> Dag::sinks() const {
  std::vector<int> outdeg(n, 0), out;
  for (auto& [u, v] : edges) outdeg[u]++;
  for (int i = 0; i < n; i++)
    if (outdeg[i] == 0) out.push_back(i);
  return out;
}

std::vector<int> Dag::degrees() const {
  std::vector<int> d(n, 0);
  for (auto& [u, v] : edges) {
    d[u]++;
    d[v]++;
  }
  return d;
}

int Dag::max_degree() const {
  auto d = degrees();
  return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool Dag::connected() const {
  if (n <= 1) return true;
  auto adj = undirected_adj();
  std::vector<char> vis(n, 0);
  std::vector<int> stack{0};
  vis[0] = 1;
  int cnt = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!vis[w]) {
        vis[w] = 1;
        cnt++;
        stack.push_back(w);
      }
  }
  return cnt == n;
}

LinearExtension linear_extension(const Dag& g) {
  std::vector<int> indeg(g.n, 0);
  auto adj = g.out_adj();
  for (auto& l : adj) std::sort(l.begin(), l.end());
  for (auto& [u, v] : g.edges) indeg[v]++;
  std::set<int> ready;
  for (int i = 0; i < g.n; i++)
    if (indeg[i] == 0) ready.insert(i);
  LinearExtension le;
  le.rank.assign(g.n, -1);
  while (!ready.empty()) {
    int v = *ready.begin();
    ready.erase(ready.begin());
    le.rank[v] = static_cast<int>(le.order.size());
    le.order.push_back(v);
    for (int w : adj[v])
      if (--indeg[w] == 0) ready.insert(w);
  }
  if (static_cast<int>(le.order.size()) != g.n) {
    // Extract a directed cycle among unfinished vertices as witness.
    int start = -1;
    for (int i = 0; i < g.n; i++)
      if (le.rank[i] == -1) {
        start = i;
        break;
      }
    std::vector<int> pos(g.n, -1), walk;
    int v = start;
    while (pos[v] == -1) {
      pos[v] = static_cast<int>(walk.size());
      walk.push_back(v);
      for (int w : adj[v])
        if (le.rank[w] == -1 && indeg[w] > 0) {
          v = w;
          break;
        }
    }
    std::vector<int> cyc(walk.begin() + pos[v], walk.end());
    cyc.push_back(v);
    throw Error(ErrorKind::CyclicGraph, "graph has a directed cycle", cyc);
  }
  return le;
}

bool is_acyclic_dag(const Dag& g) {
  try {
    linear_extension(g);
    return true;
  } catch (const Error& e) {
    if (e.kind == ErrorKind::CyclicGraph) return false;
    throw;
  }
}

std::vector<Block> blocks(const Dag& g) {
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "blocks: graph not connected");
  // Iterative Hopcroft-Tarjan with an edge stack.
  int n = g.n;
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge id)
  for (int e = 0; e < g.m(); e++) {
    auto [u, v] = g.edges[e];
    adj[u].push_back({v, e});
    adj[v].push_back({u, e});
  }
  std::vector<int> num(n, -1), low(n, 0), parent_edge(n, -1);
  std::vector<std::vector<int>> comp_edges;
  std::vector<int> estack;
  int timer = 0;
  struct Frame {
    int v;
    size_t i;
  };
  for (int root = 0; root < n; root++) {
    if (num[root] != -1) continue;
    std::vector<Frame> st{{root, 0}};
    num[root] = low[root] = timer++;
    while (!st.empty()) {
      auto& [v, i] = st.back();
      if (i < adj[v].size()) {
        auto [w, e] = adj[v][i++];
        if (e == parent_edge[v]) continue;
        if (num[w] == -1) {
          estack.push_back(e);
          parent_edge[w] = e;
          num[w] = low[w] = timer++;
          st.push_back({w, 0});
        } else if (num[w] < num[v]) {
          estack.push_back(e);
          low[v] = std::min(low[v], num[w]);
        }
      } else {
        st.pop_back();
        if (!st.empty()) {
          int u = st.back().v;
          low[u] = std::min(low[u], low[v]);
          if (low[v] >= num[u]) {
            // pop a block ending with parent_edge[v]
            std::vector<int> ce;
            for (;;) {
              int e = estack.back();
              estack.pop_back();
              ce.push_back(e);
              if (e == parent_edge[v]) break;
            }
            comp_edges.push_back(std::move(ce));
          }
        }
      }
    }
  }
  std::vector<Block> out;
  for (auto& ce : comp_edges) {
    std::sort(ce.begin(), ce.end());
    std::set<int> vs;
    for (int e : ce) {
      vs.insert(g.edges[e].first);
      vs.insert(g.edges[e].second);
    }
    Block b;
    b.vertex_map.assign(vs.begin(), vs.end());
    std::vector<int> local(g.n, -1);
    for (size_t i = 0; i < b.vertex_map.size(); i++) local[b.vertex_map[i]] = static_cast<int>(i);
    b.dag.n = static_cast<int>(b.vertex_map.size());
    for (int e : ce) b.dag.edges.push_back({local[g.edges[e].first], local[g.edges[e].second]});
    out.push_back(std::move(b));
  }
  return out;
}

Dag parse_dag(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long n = -1, m = -1;
  Dag g;
  std::set<std::pair<int, int>> seen;
  long edges_read = 0;
  while (std::getline(in, line)) {
    lineno++;
    size_t p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw parse_error(lineno, "malformed header, expected 'n m'");
      std::string rest;
      if (ls >> rest) throw parse_error(lineno, "trailing tokens after header");
      g.n = static_cast<int>(n);
      continue;
    }
    long u, v;
    if (!(ls >> u >> v)) throw parse_error(lineno, "malformed edge line, expected 'u v'");
    std::string rest;
    if (ls >> rest) throw parse_error(lineno, "trailing tokens after edge");
    if (edges_read >= m) throw parse_error(lineno, "more edges than declared in header");
    if (u < 0 || u >= n || v < 0 || v >= n) throw parse_error(lineno, "vertex index out of range");
    if (u == v) throw parse_error(lineno, "self-loop");
    if (!seen.insert({static_cast<int>(u), static_cast<int>(v)}).second)
      throw parse_error(lineno, "duplicate edge");
    g.edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    edges_read++;
  }
  if (n < 0) throw parse_error(lineno, "missing header");
  if (edges_read != m) throw parse_error(lineno, "fewer edges than declared in header");
  return g;
}

std::string serialize_dag(const Dag& g) {
  auto es = g.edges;
  std::sort(es.begin(), es.end());
  std::ostringstream out;
  out << g.n << " " << es.size() << "\n";
  for (auto& [u, v] : es) out << u << " " << v << "\n";
  return out.str();
}

Dag read_dag_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_dag(ss.str());
}

void write_dag_file(const Dag& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, "cannot open " + path + " for writing");
  out << serialize_dag(g);
}

}  // namespace updag
