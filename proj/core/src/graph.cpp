#include "gr/graph.hpp"

#include <algorithm>
#include <limits>

#include "gr/error.hpp"

namespace gr {

namespace {

constexpr std::size_t kMaxVertices = 10'000'000;

}  // namespace

struct Graph::Impl {
  Family family = Family::GridWindow;
  FamilyParams params;
  std::vector<std::uint32_t> offsets;  // CSR, size n + 1
  std::vector<VertexId> targets;
  std::vector<int> full_degree;
  std::vector<bool> interior;
  std::size_t interior_count = 0;
  std::vector<Coord> coords;  // empty for trees
  std::vector<std::pair<Coord, VertexId>> coord_index;  // sorted by coord
  std::vector<int> depth;  // trees only

  void finish(std::vector<std::vector<VertexId>>& adj) {
    const std::size_t n = adj.size();
    offsets.assign(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) {
      std::sort(adj[v].begin(), adj[v].end());
      offsets[v + 1] = offsets[v] + static_cast<std::uint32_t>(adj[v].size());
    }
    targets.reserve(offsets[n]);
    for (auto& list : adj) targets.insert(targets.end(), list.begin(), list.end());
    interior.resize(n);
    interior_count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      interior[v] = static_cast<int>(adj[v].size()) == full_degree[v] && interior[v];
      if (interior[v]) ++interior_count;
    }
    if (!coords.empty()) {
      coord_index.reserve(n);
      for (std::size_t v = 0; v < n; ++v) coord_index.emplace_back(coords[v], static_cast<VertexId>(v));
      std::sort(coord_index.begin(), coord_index.end());
    }
  }
};

std::string to_string(const Coord& c) { return "(" + std::to_string(c.x) + "," + std::to_string(c.y) + ")"; }

std::string_view to_string(Family family) {
  switch (family) {
    case Family::GridWindow: return "grid";
    case Family::Ladder: return "ladder";
    case Family::Path: return "path";
    case Family::RegularTree: return "tree";
  }
  return "?";
}

Graph Graph::grid_window(int half_width) {
  if (half_width < 1) throw Error(Errc::InvalidArgument, "grid half width must be >= 1");
  const std::size_t side = 2 * static_cast<std::size_t>(half_width) + 1;
  if (side * side > kMaxVertices) throw Error(Errc::InvalidArgument, "grid window too large");
  auto impl = std::make_shared<Impl>();
  impl->family = Family::GridWindow;
  impl->params.half_width = half_width;
  const int w = half_width;
  const auto id = [&](int x, int y) { return static_cast<VertexId>((y + w) * static_cast<int>(side) + (x + w)); };
  std::vector<std::vector<VertexId>> adj(side * side);
  impl->coords.resize(side * side);
  impl->full_degree.assign(side * side, 4);
  impl->interior.assign(side * side, true);
  for (int y = -w; y <= w; ++y) {
    for (int x = -w; x <= w; ++x) {
      const VertexId v = id(x, y);
      impl->coords[v] = {x, y};
      if (x < w) {
        adj[v].push_back(id(x + 1, y));
        adj[id(x + 1, y)].push_back(v);
      }
      if (y < w) {
        adj[v].push_back(id(x, y + 1));
        adj[id(x, y + 1)].push_back(v);
      }
    }
  }
  impl->finish(adj);
  return Graph(std::move(impl));
}

Graph Graph::ladder(int length) {
  if (length < 1) throw Error(Errc::InvalidArgument, "ladder length must be >= 1");
  if (2 * static_cast<std::size_t>(length) > kMaxVertices) throw Error(Errc::InvalidArgument, "ladder too long");
  auto impl = std::make_shared<Impl>();
  impl->family = Family::Ladder;
  impl->params.length = length;
  const std::size_t n = 2 * static_cast<std::size_t>(length);
  const auto id = [](int x, int y) { return static_cast<VertexId>(2 * x + y); };
  std::vector<std::vector<VertexId>> adj(n);
  impl->coords.resize(n);
  impl->full_degree.resize(n);
  impl->interior.assign(n, true);
  for (int x = 0; x < length; ++x) {
    for (int y = 0; y < 2; ++y) {
      const VertexId v = id(x, y);
      impl->coords[v] = {x, y};
      // N x {0,1}: column 0 has no left rail, so its true degree is 2.
      impl->full_degree[v] = x == 0 ? 2 : 3;
      if (x + 1 < length) {
        adj[v].push_back(id(x + 1, y));
        adj[id(x + 1, y)].push_back(v);
      }
    }
    adj[id(x, 0)].push_back(id(x, 1));
    adj[id(x, 1)].push_back(id(x, 0));
  }
  // The window only truncates on the right.
  impl->interior[id(length - 1, 0)] = false;
  impl->interior[id(length - 1, 1)] = false;
  impl->finish(adj);
  return Graph(std::move(impl));
}

Graph Graph::path(int length) {
  if (length < 1) throw Error(Errc::InvalidArgument, "path length must be >= 1");
  if (static_cast<std::size_t>(length) > kMaxVertices) throw Error(Errc::InvalidArgument, "path too long");
  auto impl = std::make_shared<Impl>();
  impl->family = Family::Path;
  impl->params.length = length;
  const int left = (length - 1) / 2;
  const auto n = static_cast<std::size_t>(length);
  std::vector<std::vector<VertexId>> adj(n);
  impl->coords.resize(n);
  impl->full_degree.assign(n, 2);
  impl->interior.assign(n, true);
  for (std::size_t i = 0; i < n; ++i) {
    impl->coords[i] = {static_cast<int>(i) - left, 0};
    if (i + 1 < n) {
      adj[i].push_back(static_cast<VertexId>(i + 1));
      adj[i + 1].push_back(static_cast<VertexId>(i));
    }
  }
  impl->finish(adj);
  return Graph(std::move(impl));
}

Graph Graph::regular_tree(int degree, int depth) {
  if (degree < 3) throw Error(Errc::InvalidArgument, "tree degree must be >= 3");
  if (depth < 0) throw Error(Errc::InvalidArgument, "tree depth must be >= 0");
  std::size_t n = 1;
  std::size_t layer = 1;
  for (int k = 1; k <= depth; ++k) {
    layer *= static_cast<std::size_t>(k == 1 ? degree : degree - 1);
    n += layer;
    if (n > kMaxVertices) throw Error(Errc::InvalidArgument, "tree too large");
  }
  auto impl = std::make_shared<Impl>();
  impl->family = Family::RegularTree;
  impl->params.degree = degree;
  impl->params.depth = depth;
  std::vector<std::vector<VertexId>> adj(n);
  impl->full_degree.assign(n, degree);
  impl->interior.assign(n, true);
  impl->depth.assign(n, 0);
  // Breadth-first ids: children of vertex k are contiguous and follow the
  // children of every vertex with a smaller id.
  VertexId next = 1;
  for (VertexId v = 0; v < n && next < n; ++v) {
    const int children = v == 0 ? degree : degree - 1;
    for (int c = 0; c < children && next < n; ++c, ++next) {
      adj[v].push_back(next);
      adj[next].push_back(v);
      impl->depth[next] = impl->depth[v] + 1;
    }
  }
  impl->finish(adj);
  return Graph(std::move(impl));
}

Graph Graph::build(Family family, const FamilyParams& params) {
  switch (family) {
    case Family::GridWindow: return grid_window(params.half_width);
    case Family::Ladder: return ladder(params.length);
    case Family::Path: return path(params.length);
    case Family::RegularTree: return regular_tree(params.degree, params.depth);
  }
  throw Error(Errc::InvalidArgument, "unknown family");
}

Family Graph::family() const { return impl_->family; }
const FamilyParams& Graph::params() const { return impl_->params; }

std::string Graph::describe() const {
  const auto& p = impl_->params;
  switch (impl_->family) {
    case Family::GridWindow: return "grid:" + std::to_string(p.half_width);
    case Family::Ladder: return "ladder:" + std::to_string(p.length);
    case Family::Path: return "path:" + std::to_string(p.length);
    case Family::RegularTree: return "tree:" + std::to_string(p.degree) + "," + std::to_string(p.depth);
  }
  return "?";
}

std::size_t Graph::vertex_count() const { return impl_->offsets.size() - 1; }
std::size_t Graph::edge_count() const { return impl_->targets.size() / 2; }

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  if (!contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  const auto* base = impl_->targets.data();
  return {base + impl_->offsets[v], base + impl_->offsets[v + 1]};
}

int Graph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

int Graph::full_degree(VertexId v) const {
  if (!contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return impl_->full_degree[v];
}

bool Graph::interior(VertexId v) const {
  if (!contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return impl_->interior[v];
}

std::size_t Graph::interior_count() const { return impl_->interior_count; }

bool Graph::has_coords() const { return !impl_->coords.empty(); }

std::optional<Coord> Graph::coord(VertexId v) const {
  if (!has_coords() || !contains(v)) return std::nullopt;
  return impl_->coords[v];
}

std::optional<VertexId> Graph::find(const Coord& c) const {
  const auto& idx = impl_->coord_index;
  auto it = std::lower_bound(idx.begin(), idx.end(), c, [](const auto& e, const Coord& key) { return e.first < key; });
  if (it == idx.end() || it->first != c) return std::nullopt;
  return it->second;
}

VertexId Graph::at(const Coord& c) const {
  if (auto v = find(c)) return *v;
  throw Error(Errc::UnknownVertex, to_string(c) + " is not in " + describe());
}

int Graph::depth(VertexId v) const {
  if (!contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v));
  return impl_->depth.empty() ? 0 : impl_->depth[v];
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < vertex_count(); ++u)
    for (VertexId v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->family == b.impl_->family && a.impl_->params == b.impl_->params &&
         a.impl_->offsets == b.impl_->offsets && a.impl_->targets == b.impl_->targets &&
         a.impl_->interior == b.impl_->interior && a.impl_->coords == b.impl_->coords;
}

VertexSet::VertexSet(std::vector<VertexId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet::VertexSet(std::initializer_list<VertexId> members) : VertexSet(std::vector<VertexId>(members)) {}

VertexSet VertexSet::from_coords(const Graph& g, std::span<const Coord> coords) {
  std::vector<VertexId> ids;
  ids.reserve(coords.size());
  for (const auto& c : coords) ids.push_back(g.at(c));
  return VertexSet(std::move(ids));
}

bool VertexSet::contains(VertexId v) const { return std::binary_search(members_.begin(), members_.end(), v); }

void require_interior(const Graph& g, const VertexSet& a) {
  for (VertexId v : a) {
    if (!g.contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " not in " + g.describe());
    if (!g.interior(v)) {
      std::string where = g.has_coords() ? to_string(*g.coord(v)) : "vertex " + std::to_string(v);
      throw Error(Errc::NonInteriorSet, where + " is on the window boundary of " + g.describe());
    }
  }
}

EdgeBoundary edge_boundary(const Graph& g, const VertexSet& a) {
  require_interior(g, a);
  EdgeBoundary out;
  for (VertexId u : a)
    for (VertexId v : g.neighbors(u))
      if (!a.contains(v)) out.edges.push_back({u, v});
  out.count = out.edges.size();
  return out;
}

VertexSet vertex_boundary(const Graph& g, const VertexSet& a) {
  require_interior(g, a);
  std::vector<VertexId> out;
  for (VertexId u : a)
    for (VertexId v : g.neighbors(u))
      if (!a.contains(v)) out.push_back(v);
  return VertexSet(std::move(out));
}

bool congruent(std::span<const Coord> a, std::span<const Coord> b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto normalize = [](std::vector<Coord> cells) {
    std::sort(cells.begin(), cells.end());
    const Coord base = cells.front();
    for (auto& c : cells) c = {c.x - base.x, c.y - base.y};
    return cells;
  };
  const auto target = normalize({b.begin(), b.end()});
  for (int sym = 0; sym < 8; ++sym) {
    std::vector<Coord> image;
    for (const Coord& c : a) {
      Coord t = (sym & 1) ? Coord{c.y, c.x} : c;
      if (sym & 2) t.x = -t.x;
      if (sym & 4) t.y = -t.y;
      image.push_back(t);
    }
    if (normalize(std::move(image)) == target) return true;
  }
  return false;
}

}  // namespace gr
