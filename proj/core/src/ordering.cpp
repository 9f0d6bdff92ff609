#include "gr/ordering.hpp"

#include <algorithm>
#include <array>

#include "gr/error.hpp"

namespace gr {

namespace {

void require_family(const Graph& g, Family family, std::string_view ordering) {
  if (g.family() != family)
    throw Error(Errc::WrongFamily, std::string(ordering) + " ordering needs a " + std::string(to_string(family)) +
                                       " graph, got " + g.describe());
}

}  // namespace

Ordering::Ordering(Graph g, std::vector<VertexId> ranks, std::size_t faithful_len, std::string name)
    : graph_(std::move(g)), ranks_(std::move(ranks)), faithful_len_(faithful_len), name_(std::move(name)) {
  rank_of_.assign(graph_.vertex_count(), 0);
  for (std::size_t i = 0; i < ranks_.size(); ++i) {
    const VertexId v = ranks_[i];
    if (!graph_.contains(v)) throw Error(Errc::UnknownVertex, "vertex " + std::to_string(v) + " in " + name_);
    if (rank_of_[v] != 0) {
      std::string where = graph_.has_coords() ? to_string(*graph_.coord(v)) : "vertex " + std::to_string(v);
      throw Error(Errc::DuplicateVertex, where + " listed twice in " + name_);
    }
    rank_of_[v] = i + 1;
  }
  faithful_len_ = std::min(faithful_len_, ranks_.size());

  const auto faithful = [&](VertexId v) { return rank_of_[v] != 0 && rank_of_[v] <= faithful_len_; };
  std::size_t n = 0;
  for (; n < ranks_.size(); ++n) {
    const VertexId v = ranks_[n];
    if (!graph_.interior(v) || !faithful(v)) break;
    const auto nb = graph_.neighbors(v);
    if (!std::all_of(nb.begin(), nb.end(), faithful)) break;
  }
  valid_prefix_len_ = n;
}

Ordering Ordering::spiral(const Graph& g) {
  require_family(g, Family::GridWindow, "spiral");
  const int w = g.params().half_width;
  const int side = 2 * w + 1;
  // Turn left whenever the cell on the left is unvisited. After (2k+1)^2
  // steps the visited cells are exactly the centered box of half width k, so
  // the walk never leaves the window and every rank is faithful.
  constexpr std::array<Coord, 4> dirs{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> ranks;
  ranks.reserve(g.vertex_count());
  Coord pos{0, 0};
  int dir = 0;
  for (int step = 0; step < side * side; ++step) {
    const VertexId v = g.at(pos);
    seen[v] = true;
    ranks.push_back(v);
    if (step + 1 == side * side) break;
    const int left = (dir + 1) % 4;
    const Coord turned{pos.x + dirs[left].x, pos.y + dirs[left].y};
    if (step > 0) {
      auto t = g.find(turned);
      if (t && !seen[*t]) dir = left;
    }
    pos = {pos.x + dirs[dir].x, pos.y + dirs[dir].y};
  }
  const std::size_t n = ranks.size();
  return Ordering(g, std::move(ranks), n, "spiral");
}

Ordering Ordering::diamond(const Graph& g) {
  require_family(g, Family::GridWindow, "diamond");
  const int w = g.params().half_width;
  // Radii 0..2 follow a fixed table of nested vertex-isoperimetric
  // minimizers; larger spheres are filled by descending y, then ascending x.
  static constexpr std::array<Coord, 13> kInner{{{0, 0},
                                                 {0, 1},
                                                 {1, 0},
                                                 {-1, 0},
                                                 {0, -1},
                                                 {1, 1},
                                                 {-1, 1},
                                                 {0, 2},
                                                 {2, 0},
                                                 {1, -1},
                                                 {-2, 0},
                                                 {-1, -1},
                                                 {0, -2}}};
  std::vector<VertexId> ranks;
  ranks.reserve(g.vertex_count());
  for (const auto& c : kInner)
    if (auto v = g.find(c)) ranks.push_back(*v);
  for (int r = 3; r <= 2 * w; ++r) {
    for (int y = std::min(r, w); y >= -std::min(r, w); --y) {
      const int ax = r - std::abs(y);
      if (ax > w) continue;
      if (ax == 0) {
        ranks.push_back(g.at({0, y}));
      } else {
        ranks.push_back(g.at({-ax, y}));
        ranks.push_back(g.at({ax, y}));
      }
    }
  }
  const std::size_t ball = 2 * static_cast<std::size_t>(w) * w + 2 * w + 1;
  return Ordering(g, std::move(ranks), ball, "diamond");
}

Ordering Ordering::snake(const Graph& g) {
  require_family(g, Family::Ladder, "snake");
  std::vector<VertexId> ranks;
  for (int x = 0; x < g.params().length; ++x) {
    const int first = x % 2 == 0 ? 0 : 1;
    ranks.push_back(g.at({x, first}));
    ranks.push_back(g.at({x, 1 - first}));
  }
  const std::size_t n = ranks.size();
  return Ordering(g, std::move(ranks), n, "snake");
}

Ordering Ordering::lexicographic(const Graph& g) {
  require_family(g, Family::Ladder, "lexicographic");
  std::vector<VertexId> ranks;
  for (int x = 0; x < g.params().length; ++x) {
    ranks.push_back(g.at({x, 0}));
    ranks.push_back(g.at({x, 1}));
  }
  const std::size_t n = ranks.size();
  return Ordering(g, std::move(ranks), n, "lex");
}

Ordering Ordering::path(const Graph& g) {
  require_family(g, Family::Path, "path");
  const int length = g.params().length;
  const int left = (length - 1) / 2;
  const int right = length - 1 - left;
  std::vector<VertexId> ranks{g.at({0, 0})};
  for (int k = 1; k <= std::max(left, right); ++k) {
    if (auto v = g.find({-k, 0})) ranks.push_back(*v);
    if (auto v = g.find({k, 0})) ranks.push_back(*v);
  }
  // Infinite ranks: -k -> 2k, +k -> 2k + 1. The first missing offset ends
  // the faithful part.
  const std::size_t faithful = left <= right ? 2 * static_cast<std::size_t>(left) + 1
                                             : 2 * static_cast<std::size_t>(right) + 2;
  return Ordering(g, std::move(ranks), faithful, "path");
}

Ordering Ordering::tree_bfs(const Graph& g) {
  require_family(g, Family::RegularTree, "tree-bfs");
  // Tree vertex ids are already breadth-first with children in parent-rank
  // order.
  std::vector<VertexId> ranks(g.vertex_count());
  for (VertexId v = 0; v < ranks.size(); ++v) ranks[v] = v;
  const std::size_t n = ranks.size();
  return Ordering(g, std::move(ranks), n, "tree-bfs");
}

Ordering Ordering::from_list(const Graph& g, std::span<const VertexId> vertices, std::string name) {
  return Ordering(g, std::vector<VertexId>(vertices.begin(), vertices.end()), vertices.size(), std::move(name));
}

Ordering Ordering::from_coords(const Graph& g, std::span<const Coord> coords, std::string name) {
  std::vector<VertexId> ids;
  ids.reserve(coords.size());
  for (const auto& c : coords) ids.push_back(g.at(c));
  return from_list(g, ids, std::move(name));
}

Ordering Ordering::by_name(const Graph& g, std::string_view name) {
  if (name == "spiral") return spiral(g);
  if (name == "diamond") return diamond(g);
  if (name == "snake") return snake(g);
  if (name == "lex" || name == "lexicographic") return lexicographic(g);
  if (name == "path") return path(g);
  if (name == "tree-bfs" || name == "tree") return tree_bfs(g);
  throw Error(Errc::InvalidArgument, "unknown ordering '" + std::string(name) + "'");
}

VertexId Ordering::vertex(std::size_t rank) const {
  if (rank == 0 || rank > ranks_.size())
    throw Error(Errc::RangeExceeded, "rank " + std::to_string(rank) + " outside 1.." + std::to_string(ranks_.size()));
  return ranks_[rank - 1];
}

std::optional<std::size_t> Ordering::rank_of(VertexId v) const {
  if (!graph_.contains(v) || rank_of_[v] == 0) return std::nullopt;
  return rank_of_[v];
}

VertexSet Ordering::prefix(std::size_t n) const {
  if (n > ranks_.size())
    throw Error(Errc::RangeExceeded, "prefix " + std::to_string(n) + " longer than ordering " + name_);
  return VertexSet(std::vector<VertexId>(ranks_.begin(), ranks_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::size_t containment_index(const Ordering& o, std::size_t n) {
  if (n == 0) throw Error(Errc::InvalidArgument, "containment index needs N >= 1");
  if (n > o.size()) throw Error(Errc::RangeExceeded, "N = " + std::to_string(n) + " exceeds ordering length");
  const Graph& g = o.graph();
  std::size_t m = n;
  for (std::size_t i = 1; i <= n; ++i) {
    const VertexId u = o.vertex(i);
    if (!g.interior(u))
      throw Error(Errc::PrefixTooShort, "rank " + std::to_string(i) + " of " + o.name() + " lies on the window border");
    for (VertexId v : g.neighbors(u)) {
      auto r = o.rank_of(v);
      if (!r || *r > o.faithful_len())
        throw Error(Errc::UnrankedNeighbor, "neighbor of rank " + std::to_string(i) + " has no faithful rank in " +
                                                o.name() + "; enlarge the window");
      m = std::max(m, *r);
    }
  }
  return m;
}

}  // namespace gr
