#include "quiverrep/quiver.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace qrep {

FiniteQuiver::FiniteQuiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  for (std::size_t i = 0; i < vertices_.size(); ++i) v_index_.emplace(vertices_[i], i);
  for (std::size_t i = 0; i < arrows_.size(); ++i) a_index_.emplace(arrows_[i].id, i);
  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    auto s = v_index_.find(arrows_[i].source);
    auto t = v_index_.find(arrows_[i].target);
    if (s != v_index_.end()) out_[s->second].push_back(i);
    if (t != v_index_.end()) in_[t->second].push_back(i);
  }
}

std::size_t FiniteQuiver::vertex_index(const VertexId& v) const {
  auto it = v_index_.find(v);
  if (it == v_index_.end()) throw UnknownVertexError("unknown vertex '" + v + "'");
  return it->second;
}

std::size_t FiniteQuiver::arrow_index(const ArrowId& a) const {
  auto it = a_index_.find(a);
  if (it == a_index_.end()) throw UnknownVertexError("unknown arrow '" + a + "'");
  return it->second;
}

VertexId Path::source(const FiniteQuiver&) const { return base; }

VertexId Path::target(const FiniteQuiver& q) const {
  if (arrows.empty()) return base;
  return q.arrow(arrows.back()).target;
}

std::string Path::str() const {
  if (arrows.empty()) return "e_" + base;
  std::string s;
  for (auto it = arrows.rbegin(); it != arrows.rend(); ++it) {
    if (!s.empty()) s += "*";
    s += *it;
  }
  return s;
}

std::vector<Defect> validate(const FiniteQuiver& q) {
  std::vector<Defect> defects;
  std::set<VertexId> seen_v;
  for (const auto& v : q.vertices()) {
    if (!seen_v.insert(v).second)
      defects.push_back({"duplicate id", v, "duplicate vertex id '" + v + "'"});
    if (v.empty()) defects.push_back({"empty id", v, "empty vertex id"});
  }
  std::set<ArrowId> seen_a;
  for (const auto& a : q.arrows()) {
    if (!seen_a.insert(a.id).second)
      defects.push_back({"duplicate id", a.id, "duplicate arrow id '" + a.id + "'"});
    if (a.id.empty()) defects.push_back({"empty id", a.id, "empty arrow id"});
    if (!q.has_vertex(a.source))
      defects.push_back({"dangling endpoint", a.id,
                         "arrow '" + a.id + "' has undeclared source '" + a.source + "'"});
    if (!q.has_vertex(a.target))
      defects.push_back({"dangling endpoint", a.id,
                         "arrow '" + a.id + "' has undeclared target '" + a.target + "'"});
  }
  return defects;
}

FiniteQuiver opposite(const FiniteQuiver& q) {
  std::vector<Arrow> rev;
  rev.reserve(q.arrows().size());
  for (const auto& a : q.arrows()) rev.push_back({a.id, a.target, a.source});
  return FiniteQuiver(q.vertices(), std::move(rev));
}

std::set<VertexId> direct_successors(const FiniteQuiver& q, const VertexId& a) {
  std::set<VertexId> r;
  for (auto ai : q.out_arrows(q.vertex_index(a))) r.insert(q.arrows()[ai].target);
  return r;
}

std::set<VertexId> direct_predecessors(const FiniteQuiver& q, const VertexId& a) {
  std::set<VertexId> r;
  for (auto ai : q.in_arrows(q.vertex_index(a))) r.insert(q.arrows()[ai].source);
  return r;
}

std::optional<std::vector<std::size_t>> topological_order(const FiniteQuiver& q) {
  std::size_t n = q.num_vertices();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& a : q.arrows()) indeg[q.vertex_index(a.target)]++;
  std::deque<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t v = ready.front();
    ready.pop_front();
    order.push_back(v);
    for (auto ai : q.out_arrows(v)) {
      std::size_t t = q.vertex_index(q.arrows()[ai].target);
      if (--indeg[t] == 0) ready.push_back(t);
    }
  }
  if (order.size() != n) return std::nullopt;
  return order;
}

bool has_oriented_cycle(const FiniteQuiver& q) { return !topological_order(q).has_value(); }

bool is_interval_finite(const FiniteQuiver& q) { return !has_oriented_cycle(q); }

namespace {

// DFS enumeration; successors explored in lexicographic arrow-id order.
void enumerate_from(const FiniteQuiver& q, std::size_t at, std::size_t goal,
                    std::vector<ArrowId>& stack, std::vector<Path>& out,
                    const VertexId& base, std::size_t max_len,
                    const std::vector<std::vector<std::size_t>>& sorted_out) {
  if (at == goal) out.push_back({base, stack});
  if (stack.size() >= max_len) return;
  for (auto ai : sorted_out[at]) {
    const Arrow& a = q.arrows()[ai];
    stack.push_back(a.id);
    enumerate_from(q, q.vertex_index(a.target), goal, stack, out, base, max_len,
                   sorted_out);
    stack.pop_back();
  }
}

std::vector<std::vector<std::size_t>> out_sorted_by_id(const FiniteQuiver& q) {
  std::vector<std::vector<std::size_t>> s(q.num_vertices());
  for (std::size_t v = 0; v < q.num_vertices(); ++v) {
    s[v] = q.out_arrows(v);
    std::sort(s[v].begin(), s[v].end(), [&](std::size_t x, std::size_t y) {
      return q.arrows()[x].id < q.arrows()[y].id;
    });
  }
  return s;
}

}  // namespace

std::vector<Path> enumerate_paths_bounded(const FiniteQuiver& q, const VertexId& a,
                                          const VertexId& b, std::size_t max_len) {
  std::size_t sa = q.vertex_index(a), sb = q.vertex_index(b);
  auto sorted_out = out_sorted_by_id(q);
  std::vector<Path> out;
  std::vector<ArrowId> stack;
  enumerate_from(q, sa, sb, stack, out, a, max_len, sorted_out);
  return out;
}

std::vector<Path> enumerate_paths(const FiniteQuiver& q, const VertexId& a,
                                  const VertexId& b) {
  if (has_oriented_cycle(q))
    throw CycleError("enumerate_paths refuses quivers with oriented cycles");
  return enumerate_paths_bounded(q, a, b, q.num_vertices() == 0 ? 0 : q.num_vertices() - 1);
}

PathCount count_paths(const FiniteQuiver& q, const VertexId& a, const VertexId& b) {
  std::size_t sa = q.vertex_index(a), sb = q.vertex_index(b);
  std::size_t n = q.num_vertices();
  // reach_from[v]: a ~> v, reach_to[v]: v ~> b
  std::vector<char> reach_from(n, 0), reach_to(n, 0);
  {
    std::deque<std::size_t> bfs{sa};
    reach_from[sa] = 1;
    while (!bfs.empty()) {
      auto v = bfs.front();
      bfs.pop_front();
      for (auto ai : q.out_arrows(v)) {
        auto t = q.vertex_index(q.arrows()[ai].target);
        if (!reach_from[t]) reach_from[t] = 1, bfs.push_back(t);
      }
    }
    bfs = {sb};
    reach_to[sb] = 1;
    while (!bfs.empty()) {
      auto v = bfs.front();
      bfs.pop_front();
      for (auto ai : q.in_arrows(v)) {
        auto s = q.vertex_index(q.arrows()[ai].source);
        if (!reach_to[s]) reach_to[s] = 1, bfs.push_back(s);
      }
    }
  }
  // DP over a topological order of the relevant subquiver; a cycle makes the
  // count infinite only when it sits on an a ~> b route
  std::set<VertexId> relevant;
  for (std::size_t v = 0; v < n; ++v)
    if (reach_from[v] && reach_to[v]) relevant.insert(q.vertices()[v]);
  if (relevant.empty()) return PathCount::of(0);
  FiniteQuiver sub = full_subquiver(q, relevant);
  auto sub_topo = topological_order(sub);
  if (!sub_topo) return PathCount::inf();
  std::vector<BigInt> cnt(sub.num_vertices(), 0);
  cnt[sub.vertex_index(a)] = 1;
  for (auto v : *sub_topo) {
    if (cnt[v] == 0) continue;
    for (auto ai : sub.out_arrows(v))
      cnt[sub.vertex_index(sub.arrows()[ai].target)] += cnt[v];
  }
  return PathCount::of(cnt[sub.vertex_index(b)]);
}

FiniteQuiver full_subquiver(const FiniteQuiver& q, const std::set<VertexId>& s) {
  std::vector<VertexId> vs;
  for (const auto& v : q.vertices())
    if (s.count(v)) vs.push_back(v);
  std::vector<Arrow> as;
  for (const auto& a : q.arrows())
    if (s.count(a.source) && s.count(a.target)) as.push_back(a);
  return FiniteQuiver(std::move(vs), std::move(as));
}

FiniteQuiver convex_hull(const FiniteQuiver& q, const std::set<VertexId>& s) {
  if (has_oriented_cycle(q)) throw CycleError("convex_hull requires an acyclic quiver");
  std::size_t n = q.num_vertices();
  std::vector<char> from_s(n, 0), to_s(n, 0);
  std::deque<std::size_t> bfs;
  for (const auto& v : s) {
    auto i = q.vertex_index(v);
    from_s[i] = 1;
    bfs.push_back(i);
  }
  while (!bfs.empty()) {
    auto v = bfs.front();
    bfs.pop_front();
    for (auto ai : q.out_arrows(v)) {
      auto t = q.vertex_index(q.arrows()[ai].target);
      if (!from_s[t]) from_s[t] = 1, bfs.push_back(t);
    }
  }
  for (const auto& v : s) {
    auto i = q.vertex_index(v);
    to_s[i] = 1;
    bfs.push_back(i);
  }
  while (!bfs.empty()) {
    auto v = bfs.front();
    bfs.pop_front();
    for (auto ai : q.in_arrows(v)) {
      auto src = q.vertex_index(q.arrows()[ai].source);
      if (!to_s[src]) to_s[src] = 1, bfs.push_back(src);
    }
  }
  std::set<VertexId> hull = s;
  for (std::size_t v = 0; v < n; ++v)
    if (from_s[v] && to_s[v]) hull.insert(q.vertices()[v]);
  return full_subquiver(q, hull);
}

bool is_convex(const FiniteQuiver& q, const std::set<VertexId>& sub) {
  if (has_oriented_cycle(q)) throw CycleError("is_convex requires an acyclic quiver");
  for (const auto& v : sub) q.vertex_index(v);
  // convexity fails exactly when some outside vertex lies between two members
  for (const auto& v : q.vertices()) {
    if (sub.count(v)) continue;
    bool reached_from_member = false, reaches_member = false;
    for (const auto& x : sub) {
      if (!reached_from_member && count_paths(q, x, v).value != 0)
        reached_from_member = true;
      if (!reaches_member && count_paths(q, v, x).value != 0) reaches_member = true;
      if (reached_from_member && reaches_member) return false;
    }
  }
  return true;
}

Path compose(const FiniteQuiver& q, const Path& p, const Path& r) {
  if (r.target(q) != p.source(q))
    throw EndpointMismatchError("compose: target of right factor is '" + r.target(q) +
                                "' but source of left factor is '" + p.source(q) + "'");
  Path out{r.base, r.arrows};
  out.arrows.insert(out.arrows.end(), p.arrows.begin(), p.arrows.end());
  return out;
}

}  // namespace qrep
