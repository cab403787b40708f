#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quiverrep/errors.hpp"
#include "quiverrep/field.hpp"

namespace qrep {

using VertexId = std::string;
using ArrowId = std::string;

struct Arrow {
  ArrowId id;
  VertexId source;
  VertexId target;
};

/// Finite directed multigraph. Vertices and arrows keep insertion order;
/// lookups go through interned indices.
class FiniteQuiver {
public:
  FiniteQuiver() = default;
  FiniteQuiver(std::vector<VertexId> vertices, std::vector<Arrow> arrows);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  bool has_vertex(const VertexId& v) const { return v_index_.count(v) != 0; }
  bool has_arrow(const ArrowId& a) const { return a_index_.count(a) != 0; }
  std::size_t vertex_index(const VertexId& v) const;
  std::size_t arrow_index(const ArrowId& a) const;
  const Arrow& arrow(const ArrowId& a) const { return arrows_[arrow_index(a)]; }

  std::size_t num_vertices() const { return vertices_.size(); }
  std::size_t num_arrows() const { return arrows_.size(); }

  /// Arrow indices leaving / entering a vertex, in insertion order.
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_[v]; }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_[v]; }

private:
  std::vector<VertexId> vertices_;
  std::vector<Arrow> arrows_;
  std::map<VertexId, std::size_t> v_index_;
  std::map<ArrowId, std::size_t> a_index_;
  std::vector<std::vector<std::size_t>> out_, in_;
};

/// Finite path. Arrows are stored in traversal order (first arrow traversed
/// first); composite paths render target-end first, so `str()` prints the
/// reversed arrow list.
struct Path {
  VertexId base;               // source vertex; for trivial paths the only data
  std::vector<ArrowId> arrows; // traversal order

  std::size_t length() const { return arrows.size(); }
  bool trivial() const { return arrows.empty(); }

  VertexId source(const FiniteQuiver& q) const;
  VertexId target(const FiniteQuiver& q) const;

  /// Rendered with the last-traversed arrow leftmost, e.g. "b*a" for a then b;
  /// trivial paths render as "e_<vertex>".
  std::string str() const;

  bool operator==(const Path& o) const { return base == o.base && arrows == o.arrows; }
  bool operator<(const Path& o) const {
    if (base != o.base) return base < o.base;
    return arrows < o.arrows;
  }
};

struct Defect {
  std::string code;
  std::string subject;  // offending id
  std::string message;
};

std::vector<Defect> validate(const FiniteQuiver& q);

FiniteQuiver opposite(const FiniteQuiver& q);

std::set<VertexId> direct_successors(const FiniteQuiver& q, const VertexId& a);
std::set<VertexId> direct_predecessors(const FiniteQuiver& q, const VertexId& a);

bool has_oriented_cycle(const FiniteQuiver& q);

/// All of Q(a,b) including the trivial path when a == b, ordered
/// lexicographically by arrow-id sequence. Throws CycleError on cyclic input.
std::vector<Path> enumerate_paths(const FiniteQuiver& q, const VertexId& a,
                                  const VertexId& b);

/// Same contract with a length cap, usable on cyclic quivers.
std::vector<Path> enumerate_paths_bounded(const FiniteQuiver& q, const VertexId& a,
                                          const VertexId& b, std::size_t max_len);

/// |Q(a,b)| as an exact integer; infinite iff an oriented cycle sits on some
/// route from a to b.
struct PathCount {
  bool infinite = false;
  BigInt value = 0;

  static PathCount inf() { return {true, 0}; }
  static PathCount of(BigInt v) { return {false, std::move(v)}; }
  bool operator==(const PathCount& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  std::string str() const { return infinite ? "infinite" : value.get_str(); }
};

PathCount count_paths(const FiniteQuiver& q, const VertexId& a, const VertexId& b);

bool is_interval_finite(const FiniteQuiver& q);

/// Smallest convex full subquiver containing S (q must be acyclic).
FiniteQuiver convex_hull(const FiniteQuiver& q, const std::set<VertexId>& s);

bool is_convex(const FiniteQuiver& q, const std::set<VertexId>& sub);

/// p after r: requires target(r) == source(p).
Path compose(const FiniteQuiver& q, const Path& p, const Path& r);

/// Full subquiver on the given vertex set.
FiniteQuiver full_subquiver(const FiniteQuiver& q, const std::set<VertexId>& s);

/// Topological order of vertex indices; nullopt when cyclic.
std::optional<std::vector<std::size_t>> topological_order(const FiniteQuiver& q);

}  // namespace qrep
