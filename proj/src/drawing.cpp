#include "updag/drawing.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace updag {

int orient(const Point& a, const Point& b, const Point& c) {
  Rat v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orient(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

Rat line_y_at(const Point& a, const Point& b, const Rat& x) {
  return a.y + (b.y - a.y) * (x - a.x) / (b.x - a.x);
}

Rat line_x_at(const Point& a, const Point& b, const Rat& y) {
  return a.x + (b.x - a.x) * (y - a.y) / (b.y - a.y);
}

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  int o1 = orient(a, b, p), o2 = orient(b, c, p), o3 = orient(c, a, p);
  return (o1 > 0 && o2 > 0 && o3 > 0) || (o1 < 0 && o2 < 0 && o3 < 0);
}

bool angle_less(const Point& da, const Point& db) {
  auto half = [](const Point& d) {
    // 0: positive x-axis; 1: upper half incl. negative x-axis; 2: lower half
    if (d.y == 0) return d.x > 0 ? 0 : 1;
    return d.y > 0 ? 1 : 2;
  };
  int ha = half(da), hb = half(db);
  if (ha != hb) return ha < hb;
  Rat cr = da.x * db.y - da.y * db.x;
  return cr > 0;
}

SegHit seg_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  SegHit h;
  if (o1 == 0 && o2 == 0) {
    // collinear: overlap iff boxes intersect in more than a point
    Point lo1 = std::min(a, b), hi1 = std::max(a, b);
    Point lo2 = std::min(c, d), hi2 = std::max(c, d);
    Point lo = std::max(lo1, lo2), hi = std::min(hi1, hi2);
    if (lo < hi) {
      h.rel = SegRel::Overlap;
    } else if (lo == hi) {
      h.rel = SegRel::Touch;
      h.p = lo;
    }
    return h;
  }
  if (o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0) {
    h.rel = SegRel::Proper;
    Rat t_num = (c.x - a.x) * (d.y - c.y) - (c.y - a.y) * (d.x - c.x);
    Rat t_den = (b.x - a.x) * (d.y - c.y) - (b.y - a.y) * (d.x - c.x);
    Rat t = t_num / t_den;
    h.p = {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
    return h;
  }
  // touching configurations: an endpoint lies on the other segment
  for (const Point* p : {&a, &b})
    if (on_segment(*p, c, d)) {
      h.rel = SegRel::Touch;
      h.p = *p;
      return h;
    }
  for (const Point* p : {&c, &d})
    if (on_segment(*p, a, b)) {
      h.rel = SegRel::Touch;
      h.p = *p;
      return h;
    }
  return h;
}

std::vector<Point> Drawing::polyline(int e) const {
  std::vector<Point> pts;
  pts.push_back(position[dag.edges[e].first]);
  for (auto& b : route[e]) pts.push_back(b);
  pts.push_back(position[dag.edges[e].second]);
  return pts;
}

namespace {

struct Seg {
  Point a, b;
  int edge;
  int idx;  // segment index along the edge polyline
  Rat xmin, xmax, ymin, ymax;
};

std::vector<Seg> collect_segments(const Drawing& d, std::vector<std::string>& violations) {
  std::vector<Seg> segs;
  for (int e = 0; e < d.dag.m(); e++) {
    auto pts = d.polyline(e);
    for (size_t i = 0; i + 1 < pts.size(); i++) {
      if (pts[i] == pts[i + 1]) {
        violations.push_back("edge " + std::to_string(e) + " has a zero-length segment");
        continue;
      }
      Seg s{pts[i], pts[i + 1], e, static_cast<int>(i), {}, {}, {}, {}};
      s.xmin = std::min(s.a.x, s.b.x);
      s.xmax = std::max(s.a.x, s.b.x);
      s.ymin = std::min(s.a.y, s.b.y);
      s.ymax = std::max(s.a.y, s.b.y);
      segs.push_back(std::move(s));
    }
  }
  return segs;
}

struct PairHit {
  int ea, eb;
  Point p;
  bool proper;
  std::string violation;  // non-empty if this contact is a violation
};

// Exact contact classification for two segments of distinct edges.
void classify_pair(const Drawing& d, const Seg& s, const Seg& t, std::vector<PairHit>& out) {
  SegHit h = seg_intersect(s.a, s.b, t.a, t.b);
  if (h.rel == SegRel::Disjoint) return;
  PairHit ph{std::min(s.edge, t.edge), std::max(s.edge, t.edge), h.p, false, ""};
  if (h.rel == SegRel::Overlap) {
    ph.violation = "edges " + std::to_string(s.edge) + " and " + std::to_string(t.edge) +
                   " overlap along a segment";
    out.push_back(ph);
    return;
  }
  // Shared endpoint of the two *edges* (common vertex or meeting point) is
  // not a crossing. Everything else that is a Touch means a polyline passes
  // through another curve's bend/endpoint: reject as degenerate.
  auto [su, sv] = d.dag.edges[s.edge];
  auto [tu, tv] = d.dag.edges[t.edge];
  bool at_common_vertex = false;
  for (int v : {su, sv})
    for (int w : {tu, tv})
      if (v == w && d.position[v] == h.p) at_common_vertex = true;
  if (h.rel == SegRel::Proper) {
    ph.proper = true;
    out.push_back(ph);
    return;
  }
  if (at_common_vertex) return;
  ph.violation = "edges " + std::to_string(s.edge) + " and " + std::to_string(t.edge) +
                 " touch without crossing transversally";
  out.push_back(ph);
}

template <bool Parallel>
std::vector<PairHit> pair_hits(const Drawing& d, const std::vector<Seg>& segs) {
  // segments sorted by xmin; scan with xmax pruning
  std::vector<int> order(segs.size());
  for (size_t i = 0; i < order.size(); i++) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (segs[i].xmin != segs[j].xmin) return segs[i].xmin < segs[j].xmin;
    return i < j;
  });
  int nseg = static_cast<int>(segs.size());
  std::vector<std::vector<PairHit>> buckets;
#ifdef _OPENMP
  int nthreads = Parallel ? omp_get_max_threads() : 1;
#else
  int nthreads = 1;
#endif
  buckets.resize(nthreads);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16) num_threads(nthreads) if (Parallel)
#endif
  for (int oi = 0; oi < nseg; oi++) {
#ifdef _OPENMP
    auto& bucket = buckets[omp_get_thread_num()];
#else
    auto& bucket = buckets[0];
#endif
    const Seg& s = segs[order[oi]];
    for (int oj = oi + 1; oj < nseg; oj++) {
      const Seg& t = segs[order[oj]];
      if (t.xmin > s.xmax) break;
      if (t.ymin > s.ymax || s.ymin > t.ymax) continue;
      if (s.edge == t.edge) {
        if (std::abs(s.idx - t.idx) == 1) {
          // consecutive pieces of one polyline share exactly the bend
          SegHit h = seg_intersect(s.a, s.b, t.a, t.b);
          if (h.rel == SegRel::Overlap)
            bucket.push_back({s.edge, t.edge, {}, false,
                              "edge " + std::to_string(s.edge) + " folds back on itself"});
          continue;
        }
        SegHit h = seg_intersect(s.a, s.b, t.a, t.b);
        if (h.rel != SegRel::Disjoint)
          bucket.push_back({s.edge, t.edge, h.p, false,
                            "edge " + std::to_string(s.edge) + " crosses itself"});
        continue;
      }
      classify_pair(d, s, t, bucket);
    }
  }
  std::vector<PairHit> all;
  for (auto& b : buckets) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end(), [](const PairHit& x, const PairHit& y) {
    if (x.ea != y.ea) return x.ea < y.ea;
    if (x.eb != y.eb) return x.eb < y.eb;
    if (!(x.p == y.p)) return x.p < y.p;
    return x.violation < y.violation;
  });
  return all;
}

}  // namespace

CrossingReport analyze_drawing(const Drawing& d, bool parallel, bool with_outer) {
  CrossingReport rep;
  rep.per_edge_count.assign(d.dag.m(), 0);

  // vertex points pairwise distinct
  {
    std::map<Point, int> at;
    for (int v = 0; v < d.dag.n; v++) {
      auto [it, fresh] = at.insert({d.position[v], v});
      if (!fresh)
        rep.violations.push_back("vertices " + std::to_string(it->second) + " and " +
                                 std::to_string(v) + " coincide");
    }
  }

  auto segs = collect_segments(d, rep.violations);

  // no polyline through a vertex point other than its endpoints
  for (const Seg& s : segs) {
    auto [u, v] = d.dag.edges[s.edge];
    for (int w = 0; w < d.dag.n; w++) {
      if (w == u || w == v) {
        if (d.position[w] == s.a || d.position[w] == s.b) continue;
      }
      const Point& p = d.position[w];
      if (p.x < s.xmin || p.x > s.xmax || p.y < s.ymin || p.y > s.ymax) continue;
      if (on_segment(p, s.a, s.b))
        rep.violations.push_back("edge " + std::to_string(s.edge) + " passes through vertex " +
                                 std::to_string(w));
    }
  }

  auto hits = parallel ? pair_hits<true>(d, segs) : pair_hits<false>(d, segs);

  // group by edge pair: more than one contact point = non-simple
  std::map<std::pair<int, int>, std::vector<const PairHit*>> by_pair;
  for (auto& h : hits) {
    if (!h.violation.empty()) {
      rep.violations.push_back(h.violation);
      continue;
    }
    by_pair[{h.ea, h.eb}].push_back(&h);
  }
  std::map<Point, std::set<int>> edges_at_point;
  for (auto& [pr, v] : by_pair) {
    std::set<Point> pts;
    for (auto* h : v) pts.insert(h->p);
    if (pts.size() > 1) {
      rep.violations.push_back("edges " + std::to_string(pr.first) + " and " +
                               std::to_string(pr.second) + " share more than one point");
      continue;
    }
    Crossing c{pr.first, pr.second, *pts.begin()};
    rep.crossings.push_back(c);
    edges_at_point[c.p].insert(c.ea);
    edges_at_point[c.p].insert(c.eb);
  }
  for (auto& [p, es] : edges_at_point)
    if (es.size() >= 3) {
      std::string msg = "three or more edges share an interior point:";
      for (int e : es) msg += " " + std::to_string(e);
      rep.violations.push_back(msg);
    }

  std::sort(rep.crossings.begin(), rep.crossings.end());
  for (auto& c : rep.crossings) {
    rep.per_edge_count[c.ea]++;
    rep.per_edge_count[c.eb]++;
  }
  rep.max_per_edge = 0;
  for (int c : rep.per_edge_count) rep.max_per_edge = std::max(rep.max_per_edge, c);

  rep.is_upward = true;
  for (int e = 0; e < d.dag.m(); e++) {
    auto pts = d.polyline(e);
    for (size_t i = 0; i + 1 < pts.size(); i++)
      if (!(pts[i].y < pts[i + 1].y)) rep.is_upward = false;
  }

  rep.is_simple = rep.violations.empty();
  if (with_outer && rep.is_simple) rep.outer_vertices = outer_face_vertices(d);
  return rep;
}

CrossingReport compute_crossings(const Drawing& d, bool with_outer) {
  CrossingReport rep = analyze_drawing(d, true, with_outer);
  if (!rep.is_simple) {
    std::string msg = "non-simple drawing:";
    for (auto& v : rep.violations) msg += "\n  " + v;
    throw Error(ErrorKind::NonSimpleDrawing, msg);
  }
  return rep;
}

std::pair<bool, CrossingReport> verify_drawing(const Drawing& d, int k) {
  CrossingReport rep = analyze_drawing(d, true, false);
  bool ok = rep.is_simple && rep.is_upward && rep.max_per_edge <= k;
  return {ok, rep};
}

std::set<int> outer_face_vertices(const Drawing& d) {
  std::vector<std::string> tmp;
  auto segs = collect_segments(d, tmp);
  std::set<int> outer;
  for (int v = 0; v < d.dag.n; v++) {
    const Point& p = d.position[v];
    // candidate escape directions: between consecutive event angles
    std::vector<Point> dirs;
    for (const Seg& s : segs)
      for (const Point* q : {&s.a, &s.b})
        if (!(*q == p)) dirs.push_back({q->x - p.x, q->y - p.y});
    for (int w = 0; w < d.dag.n; w++)
      if (w != v) dirs.push_back({d.position[w].x - p.x, d.position[w].y - p.y});
    if (dirs.empty()) {
      outer.insert(v);
      continue;
    }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    dirs.erase(std::unique(dirs.begin(), dirs.end()), dirs.end());
    // try a direction in each angular gap (bisector via vector sum is not
    // exact for reflex gaps; instead rotate each event direction slightly by
    // using the direction itself plus its predecessor is unsafe - use the
    // sum only when the gap is < pi, else the negated sum works)
    size_t k = dirs.size();
    bool found = false;
    for (size_t i = 0; i < k && !found; i++) {
      const Point& d1 = dirs[i];
      const Point& d2 = dirs[(i + 1) % k];
      Point mid;
      Rat cross = d1.x * d2.y - d1.y * d2.x;
      if (d1 == d2) {
        mid = d1;
      } else if (cross == 0) {
        // opposite directions: gap is a half-plane; take the perpendicular
        mid = {d1.y, -d1.x};
      } else {
        // normalize by L1 norm to make the sum a genuine bisector
        Rat n1 = (d1.x < 0 ? -d1.x : d1.x) + (d1.y < 0 ? -d1.y : d1.y);
        Rat n2 = (d2.x < 0 ? -d2.x : d2.x) + (d2.y < 0 ? -d2.y : d2.y);
        mid = {d1.x / n1 + d2.x / n2, d1.y / n1 + d2.y / n2};
        if (cross < 0) {  // reflex gap
          mid = {-mid.x, -mid.y};
        }
      }
      if (mid.x == 0 && mid.y == 0) continue;
      // exact ray test: p + t*mid, t > 0 against every segment
      bool blocked = false;
      for (const Seg& s : segs) {
        // incident segments touching p at an endpoint are fine beyond t=0
        Point q = {p.x + mid.x, p.y + mid.y};
        int oa = orient(p, q, s.a), ob = orient(p, q, s.b);
        if (oa == 0 && ob == 0) {
          // collinear with the ray's line: blocked if any part is ahead
          auto ahead = [&](const Point& r) {
            if (r == p) return false;
            return mid.x * (r.x - p.x) + mid.y * (r.y - p.y) > 0;
          };
          if (ahead(s.a) || ahead(s.b)) blocked = true;
        } else if (oa != ob) {
          // segment's line crosses the ray line; check side/param
          int oc = orient(s.a, s.b, p);
          int od = orient(s.a, s.b, q);
          // ray hits segment iff p is on the (strict) opposite側 of travel:
          // intersection parameter t > 0 <=> orient(s.a,s.b,p) != 0 and the
          // direction points toward the segment's line, or p on the line.
          if (oc == 0) {
            // p on the segment's line: it's an endpoint contact at t=0 only
            // if p is on the segment; else no hit for t>0 unless collinear.
            if (on_segment(p, s.a, s.b)) {
              // p lies on this segment: treat as blocked unless it's an endpoint
              if (!(p == s.a || p == s.b)) blocked = true;
            }
          } else if (oc != od) {
            blocked = true;
          }
        }
        if (blocked) break;
      }
      if (!blocked) found = true;
    }
    if (found) outer.insert(v);
  }
  return outer;
}

PlanarizedGraph planarize(const Drawing& d) {
  CrossingReport rep = compute_crossings(d, false);
  PlanarizedGraph pg;
  pg.original_n = d.dag.n;
  pg.dag_star.n = d.dag.n;

  // crossing points per edge, ordered along the polyline
  struct Cut {
    int seg;
    Rat t;  // parameter along segment (by x or y delta)
    int dummy;
  };
  std::vector<std::vector<Cut>> cuts(d.dag.m());
  int next_dummy = d.dag.n;
  std::vector<std::vector<Point>> polys(d.dag.m());
  for (int e = 0; e < d.dag.m(); e++) polys[e] = d.polyline(e);

  auto param = [&](int e, const Point& p) -> std::pair<int, Rat> {
    auto& pts = polys[e];
    for (size_t i = 0; i + 1 < pts.size(); i++) {
      if (on_segment(p, pts[i], pts[i + 1])) {
        Rat t;
        if (pts[i].x != pts[i + 1].x)
          t = (p.x - pts[i].x) / (pts[i + 1].x - pts[i].x);
        else
          t = (p.y - pts[i].y) / (pts[i + 1].y - pts[i].y);
        return {static_cast<int>(i), t};
      }
    }
    throw Error(ErrorKind::InternalVerification, "crossing point not on edge");
  };

  for (auto& c : rep.crossings) {
    int dummy = next_dummy++;
    pg.dummy_vertices.push_back(dummy);
    pg.crossing_origin.push_back({c.ea, c.eb});
    auto [s1, t1] = param(c.ea, c.p);
    cuts[c.ea].push_back({s1, t1, dummy});
    auto [s2, t2] = param(c.eb, c.p);
    cuts[c.eb].push_back({s2, t2, dummy});
  }
  pg.dag_star.n = next_dummy;

  for (int e = 0; e < d.dag.m(); e++) {
    auto& cs = cuts[e];
    std::sort(cs.begin(), cs.end(), [](const Cut& a, const Cut& b) {
      if (a.seg != b.seg) return a.seg < b.seg;
      return a.t < b.t;
    });
    int prev = d.dag.edges[e].first;
    for (auto& c : cs) {
      pg.dag_star.edges.push_back({prev, c.dummy});
      pg.edge_origin.push_back(e);
      prev = c.dummy;
    }
    pg.dag_star.edges.push_back({prev, d.dag.edges[e].second});
    pg.edge_origin.push_back(e);
  }

  // rotation from geometry: position of every vertex and dummy
  std::vector<Point> pos(pg.dag_star.n);
  for (int v = 0; v < d.dag.n; v++) pos[v] = d.position[v];
  for (size_t i = 0; i < pg.dummy_vertices.size(); i++) pos[pg.dummy_vertices[i]] = rep.crossings[i].p;

  // first direction of each dag_star edge from each endpoint, tracing the
  // original polyline between consecutive cut points
  struct Dart {
    int edge;
    Point dir;
  };
  std::vector<std::vector<Dart>> darts(pg.dag_star.n);
  {
    // walk each original edge's polyline and assign fragment geometry
    std::vector<int> frag_at(d.dag.m(), 0);
    std::vector<std::vector<std::pair<Point, Point>>> frag_dirs(d.dag.m());
    for (int e = 0; e < d.dag.m(); e++) {
      auto& pts = polys[e];
      std::vector<std::pair<Rat, Point>> stops;  // cumulative order: cuts
      std::vector<Point> chain{pts.front()};
      auto& cs = cuts[e];
      size_t ci = 0;
      for (size_t i = 0; i + 1 < pts.size(); i++) {
        while (ci < cs.size() && cs[ci].seg == static_cast<int>(i)) {
          Point p = {pts[i].x + cs[ci].t * (pts[i + 1].x - pts[i].x),
                     pts[i].y + cs[ci].t * (pts[i + 1].y - pts[i].y)};
          chain.push_back(p);
          ci++;
        }
        chain.push_back(pts[i + 1]);
      }
      // fragment boundaries are at cut points; directions at both ends
      std::vector<size_t> marks;  // indices in chain that are cut points
      // rebuild marks by matching cut points
      std::vector<Point> cut_pts;
      for (auto& c : cs) {
        Point p = {polys[e][c.seg].x + c.t * (polys[e][c.seg + 1].x - polys[e][c.seg].x),
                   polys[e][c.seg].y + c.t * (polys[e][c.seg + 1].y - polys[e][c.seg].y)};
        cut_pts.push_back(p);
      }
      size_t cp = 0;
      std::vector<std::vector<Point>> pieces;
      std::vector<Point> cur{chain.front()};
      for (size_t i = 1; i < chain.size(); i++) {
        cur.push_back(chain[i]);
        if (cp < cut_pts.size() && chain[i] == cut_pts[cp]) {
          pieces.push_back(cur);
          cur = {chain[i]};
          cp++;
        }
      }
      pieces.push_back(cur);
      frag_dirs[e].resize(pieces.size());
      for (size_t i = 0; i < pieces.size(); i++) {
        auto& pc = pieces[i];
        // drop duplicate consecutive points
        std::vector<Point> q;
        for (auto& p : pc)
          if (q.empty() || !(q.back() == p)) q.push_back(p);
        frag_dirs[e][i] = {{q[1].x - q[0].x, q[1].y - q[0].y},
                           {q[q.size() - 2].x - q.back().x, q[q.size() - 2].y - q.back().y}};
      }
    }
    // assign to dag_star edges in construction order
    std::vector<int> next_frag(d.dag.m(), 0);
    for (size_t se = 0; se < pg.dag_star.edges.size(); se++) {
      int e = pg.edge_origin[se];
      int f = next_frag[e]++;
      auto [u, v] = pg.dag_star.edges[se];
      darts[u].push_back({static_cast<int>(se), frag_dirs[e][f].first});
      darts[v].push_back({static_cast<int>(se), frag_dirs[e][f].second});
    }
  }
  pg.rotation.resize(pg.dag_star.n);
  for (int v = 0; v < pg.dag_star.n; v++) {
    auto& ds = darts[v];
    std::sort(ds.begin(), ds.end(), [](const Dart& a, const Dart& b) {
      if (angle_less(a.dir, b.dir)) return true;
      if (angle_less(b.dir, a.dir)) return false;
      return a.edge < b.edge;
    });
    for (auto& dt : ds) pg.rotation[v].push_back(dt.edge);
  }
  pg.has_embedding = true;
  return pg;
}

bool planarized_acyclic(const PlanarizedGraph& p, std::vector<int>* witness) {
  try {
    linear_extension(p.dag_star);
    return true;
  } catch (const Error& e) {
    if (e.kind != ErrorKind::CyclicGraph) throw;
    if (witness) *witness = e.witness;
    return false;
  }
}

Dag contract_dummies(const PlanarizedGraph& p) {
  Dag g;
  g.n = p.original_n;
  // follow chains through dummies from each original tail
  std::map<int, std::vector<std::pair<int, int>>> out;  // vertex -> (head, star edge)
  for (size_t e = 0; e < p.dag_star.edges.size(); e++)
    out[p.dag_star.edges[e].first].push_back({p.dag_star.edges[e].second, static_cast<int>(e)});
  for (size_t e = 0; e < p.dag_star.edges.size(); e++) {
    auto [u, v] = p.dag_star.edges[e];
    if (u >= p.original_n) continue;  // start only at original tails
    int orig = p.edge_origin[e];
    int cur = v;
    while (cur >= p.original_n) {
      bool advanced = false;
      for (auto& [h, se] : out[cur])
        if (p.edge_origin[se] == orig) {
          cur = h;
          advanced = true;
          break;
        }
      if (!advanced) throw Error(ErrorKind::InternalVerification, "broken dummy chain");
    }
    g.edges.push_back({u, cur});
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string drawing_to_json(const Drawing& d) {
  nlohmann::ordered_json j;
  j["n"] = d.dag.n;
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < d.dag.n; v++) {
    nlohmann::ordered_json jv;
    jv["id"] = v;
    jv["x"] = rat_to_string(d.position[v].x);
    jv["y"] = rat_to_string(d.position[v].y);
    j["vertices"].push_back(jv);
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (int e = 0; e < d.dag.m(); e++) {
    nlohmann::ordered_json je;
    je["u"] = d.dag.edges[e].first;
    je["v"] = d.dag.edges[e].second;
    je["bends"] = nlohmann::ordered_json::array();
    for (auto& b : d.route[e])
      je["bends"].push_back({rat_to_string(b.x), rat_to_string(b.y)});
    j["edges"].push_back(je);
  }
  return j.dump(2) + "\n";
}

Drawing drawing_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("bad drawing json: ") + ex.what());
  }
  try {
    Dag g;
    g.n = j.at("n").get<int>();
    Drawing d;
    std::vector<Point> pos(g.n);
    for (auto& jv : j.at("vertices")) {
      int id = jv.at("id").get<int>();
      if (id < 0 || id >= g.n) throw Error(ErrorKind::Parse, "vertex id out of range");
      pos[id] = {rat_from_string(jv.at("x").get<std::string>()),
                 rat_from_string(jv.at("y").get<std::string>())};
    }
    std::vector<std::vector<Point>> routes;
    for (auto& je : j.at("edges")) {
      g.edges.push_back({je.at("u").get<int>(), je.at("v").get<int>()});
      std::vector<Point> bends;
      for (auto& jb : je.at("bends"))
        bends.push_back({rat_from_string(jb.at(0).get<std::string>()),
                         rat_from_string(jb.at(1).get<std::string>())});
      routes.push_back(std::move(bends));
    }
    g.validate();
    Drawing out(g);
    out.position = std::move(pos);
    out.route = std::move(routes);
    return out;
  } catch (const Error&) {
    throw;
  } catch (const std::exception& ex) {
    throw Error(ErrorKind::Parse, std::string("bad drawing json: ") + ex.what());
  }
}

}  // namespace updag
