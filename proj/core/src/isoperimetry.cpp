#include "gr/isoperimetry.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <thread>

#include "gr/error.hpp"

namespace gr {

namespace {

int interaction_radius(BoundaryKind kind) { return kind == BoundaryKind::Edge ? 1 : 2; }

int ceil_half(int x) { return (x + 1) / 2; }

int minimum_box(FamilyKey family, int n) {
  switch (family.family) {
    case Family::GridWindow: return 2 * n + 1;
    case Family::Ladder: return 2 * n;
    case Family::Path: return n + 2;
    case Family::RegularTree: return ceil_half(n - 1) + 1;
  }
  return 0;
}

Graph make_box(FamilyKey family, int size) {
  switch (family.family) {
    case Family::GridWindow:
      if (size < 3 || size % 2 == 0) throw Error(Errc::InvalidArgument, "grid box side must be odd and >= 3");
      return Graph::grid_window((size - 1) / 2);
    case Family::Ladder: return Graph::ladder(size);
    case Family::Path: return Graph::path(size);
    case Family::RegularTree: return Graph::regular_tree(family.degree, size);
  }
  throw Error(Errc::InvalidArgument, "unknown family");
}

struct Best {
  int value = INT_MAX;
  std::vector<VertexId> witness;  // sorted
};

// Depth-first enumeration of interaction-connected sets whose least vertex
// is the root (Redelmeier's scheme), with incremental boundary bookkeeping.
class ClusterEnumerator {
 public:
  ClusterEnumerator(const Graph& g, const std::vector<std::vector<VertexId>>& interaction,
                    const std::vector<bool>& clip_hazard, BoundaryKind kind, int nmax)
      : g_(g),
        interaction_(interaction),
        clip_hazard_(clip_hazard),
        kind_(kind),
        nmax_(nmax),
        in_(g.vertex_count(), 0),
        cover_(g.vertex_count(), 0),
        marked_(g.vertex_count(), 0),
        best_(static_cast<std::size_t>(nmax) + 1) {}

  void run(VertexId root) {
    root_ = root;
    marked_[root] = 1;
    std::vector<VertexId> untried{root};
    recurse(untried);
    marked_[root] = 0;
  }

  const std::vector<Best>& best() const { return best_; }
  std::uint64_t examined() const { return examined_; }
  // Smallest set size from which an extension was cut off by the window.
  int clip_size() const { return clip_size_; }

 private:
  void recurse(std::vector<VertexId>& untried) {
    while (!untried.empty()) {
      const VertexId v = untried.back();
      untried.pop_back();
      add(v);
      record();
      const int size = static_cast<int>(current_.size());
      if (size < nmax_) {
        if (clip_hazard_[v]) clip_size_ = std::min(clip_size_, size);
        std::vector<VertexId> next = untried;
        const std::size_t first_new = next.size();
        for (VertexId u : interaction_[v]) {
          if (u > root_ && !marked_[u]) {
            marked_[u] = 1;
            next.push_back(u);
          }
        }
        std::vector<VertexId> fresh(next.begin() + static_cast<std::ptrdiff_t>(first_new), next.end());
        recurse(next);
        for (VertexId u : fresh) marked_[u] = 0;
      }
      remove(v);
    }
  }

  void add(VertexId v) {
    if (cover_[v] > 0) --vertex_boundary_;
    for (VertexId u : g_.neighbors(v)) {
      if (in_[u]) ++internal_edges_;
      if (cover_[u]++ == 0 && !in_[u]) ++vertex_boundary_;
    }
    in_[v] = 1;
    degree_sum_ += g_.full_degree(v);
    current_.push_back(v);
  }

  void remove(VertexId v) {
    in_[v] = 0;
    for (VertexId u : g_.neighbors(v)) {
      if (in_[u]) --internal_edges_;
      if (--cover_[u] == 0 && !in_[u]) --vertex_boundary_;
    }
    if (cover_[v] > 0) ++vertex_boundary_;
    degree_sum_ -= g_.full_degree(v);
    current_.pop_back();
  }

  void record() {
    ++examined_;
    const int value = kind_ == BoundaryKind::Edge ? degree_sum_ - 2 * internal_edges_ : vertex_boundary_;
    Best& b = best_[current_.size()];
    if (value > b.value) return;
    std::vector<VertexId> sorted = current_;
    std::sort(sorted.begin(), sorted.end());
    if (value < b.value || sorted < b.witness) {
      b.value = value;
      b.witness = std::move(sorted);
    }
  }

  const Graph& g_;
  const std::vector<std::vector<VertexId>>& interaction_;
  const std::vector<bool>& clip_hazard_;
  BoundaryKind kind_;
  int nmax_;
  VertexId root_ = 0;
  std::vector<char> in_;
  std::vector<int> cover_;
  std::vector<char> marked_;
  std::vector<VertexId> current_;
  int vertex_boundary_ = 0;
  int internal_edges_ = 0;
  int degree_sum_ = 0;
  std::vector<Best> best_;
  std::uint64_t examined_ = 0;
  int clip_size_ = INT_MAX;
};

// Interior vertices within graph distance `radius` of v (v excluded).
std::vector<VertexId> interaction_neighbors(const Graph& g, VertexId v, int radius) {
  std::vector<VertexId> frontier{v};
  std::vector<VertexId> seen{v};
  for (int step = 0; step < radius; ++step) {
    std::vector<VertexId> next;
    for (VertexId u : frontier)
      for (VertexId w : g.neighbors(u))
        if (std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          next.push_back(w);
        }
    frontier = std::move(next);
  }
  std::vector<VertexId> out;
  for (VertexId u : seen)
    if (u != v && g.interior(u)) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

// Grid clusters always sit on the anchor row, so there the test is against the
// clipping frontier rather than the window border.
bool witness_clear_of_border(const Graph& g, const std::vector<VertexId>& witness,
                             const std::vector<bool>& clip_hazard, bool grid) {
  if (grid)
    return std::none_of(witness.begin(), witness.end(), [&](VertexId v) { return bool(clip_hazard[v]); });
  for (VertexId v : witness)
    for (VertexId u : g.neighbors(v))
      if (!g.interior(u)) return false;
  return true;
}

}  // namespace

std::string_view to_string(BoundaryKind kind) { return kind == BoundaryKind::Edge ? "edge" : "vertex"; }

FamilyKey FamilyKey::of(const Graph& g) {
  return {g.family(), g.family() == Family::RegularTree ? g.params().degree : 0};
}

std::string FamilyKey::describe() const {
  if (family == Family::RegularTree) return "tree(d=" + std::to_string(degree) + ")";
  return std::string(to_string(family));
}

std::string OracleResult::provenance() const {
  std::string dims;
  switch (box.family()) {
    case Family::GridWindow: {
      const int side = 2 * box.params().half_width + 1;
      dims = std::to_string(side) + "x" + std::to_string(side);
      break;
    }
    case Family::Ladder: dims = std::to_string(box.params().length) + "x2"; break;
    case Family::Path: dims = std::to_string(box.params().length); break;
    case Family::RegularTree: dims = "depth " + std::to_string(box.params().depth); break;
  }
  return "box " + dims + (exhaustive ? " exhaustive" : " witness-certified");
}

int exhaustive_box(FamilyKey family, BoundaryKind kind, int n) {
  const int reach = interaction_radius(kind) * (n - 1);
  switch (family.family) {
    case Family::GridWindow: return 2 * (reach + 1) + 1;
    case Family::Ladder: return std::max(2 * n, reach + 3);
    case Family::Path: return std::max(n + 2, reach + 3);
    case Family::RegularTree: return std::max(1, ceil_half(reach) + 1);
  }
  return 0;
}

std::vector<OracleResult> oracle_profile(FamilyKey family, BoundaryKind kind, int nmax, BoxSize box) {
  if (nmax < 1) throw Error(Errc::InvalidArgument, "N must be >= 1");
  if (nmax > kOracleMaxN)
    throw Error(Errc::RangeExceeded, "exhaustive oracle is limited to N <= " + std::to_string(kOracleMaxN));
  if (family.family == Family::RegularTree && family.degree < 3)
    throw Error(Errc::InvalidArgument, "tree degree must be >= 3");
  const int auto_box = exhaustive_box(family, kind, nmax);
  const int size = box.value_or(auto_box);
  if (size < minimum_box(family, nmax))
    throw Error(Errc::BoxTooSmall, "box " + std::to_string(size) + " below the minimum " +
                                       std::to_string(minimum_box(family, nmax)) + " for N = " + std::to_string(nmax));
  const Graph g = make_box(family, size);
  const int radius = interaction_radius(kind);
  const bool grid = family.family == Family::GridWindow;

  std::vector<std::vector<VertexId>> interaction(g.vertex_count());
  std::vector<bool> clip_hazard(g.vertex_count(), false);
  std::vector<VertexId> roots;
  if (grid) {
    // Translation invariance: anchor every cluster's row-major least cell at
    // the bottom interior row, centered.
    const int w = g.params().half_width;
    const Coord anchor{0, -(w - 1)};
    roots.push_back(g.at(anchor));
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.interior(v)) continue;
      interaction[v] = interaction_neighbors(g, v, radius);
      const Coord c = *g.coord(v);
      for (int dy = -radius; dy <= radius; ++dy)
        for (int dx = -radius; dx <= radius; ++dx) {
          if ((dx == 0 && dy == 0) || std::abs(dx) + std::abs(dy) > radius) continue;
          const Coord t{c.x + dx, c.y + dy};
          if (!(anchor < t)) continue;
          auto id = g.find(t);
          if (!id || !g.interior(*id)) clip_hazard[v] = true;
        }
    }
  } else {
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (!g.interior(v)) continue;
      interaction[v] = interaction_neighbors(g, v, radius);
      roots.push_back(v);
    }
  }

  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                          static_cast<unsigned>(roots.size())));
  std::vector<ClusterEnumerator> workers;
  workers.reserve(threads);
  for (unsigned t = 0; t < threads; ++t) workers.emplace_back(g, interaction, clip_hazard, kind, nmax);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < roots.size(); i += threads) workers[t].run(roots[i]);
      });
  }

  std::vector<Best> best(static_cast<std::size_t>(nmax) + 1);
  std::uint64_t examined = 0;
  int clip_size = INT_MAX;
  for (const auto& w : workers) {
    examined += w.examined();
    clip_size = std::min(clip_size, w.clip_size());
    for (int n = 1; n <= nmax; ++n) {
      const Best& b = w.best()[n];
      if (b.value < best[n].value || (b.value == best[n].value && b.witness < best[n].witness)) best[n] = b;
    }
  }

  std::vector<OracleResult> out;
  for (int n = 1; n <= nmax; ++n) {
    if (best[n].value == INT_MAX)
      throw Error(Errc::BoxTooSmall, "no " + std::to_string(n) + "-set fits in the interior of " + g.describe());
    // Separated clusters have disjoint boundaries, so any disconnected set
    // costs at least profile(a) + profile(n - a) for some split.
    for (int a = 1; a <= n / 2; ++a) {
      const int split = out[a - 1].minimum + out[n - a - 1].minimum;
      if (split < best[n].value)
        throw Error(Errc::Unsupported, "cannot certify N = " + std::to_string(n) +
                                           ": a split configuration might beat every cluster");
    }
    OracleResult r;
    r.n = n;
    r.minimum = best[n].value;
    r.box = g;
    r.sets_examined = examined;
    r.exhaustive = grid ? clip_size >= n : size >= exhaustive_box(family, kind, n);
    if (!r.exhaustive && !witness_clear_of_border(g, best[n].witness, clip_hazard, grid))
      throw Error(Errc::BoxTooSmall, "witness for N = " + std::to_string(n) + " touches the border of " + g.describe());
    r.witness = VertexSet(best[n].witness);
    out.push_back(std::move(r));
  }
  return out;
}

OracleResult min_edge_boundary(FamilyKey family, int n, BoxSize box) {
  return oracle_profile(family, BoundaryKind::Edge, n, box).back();
}

OracleResult min_vertex_boundary(FamilyKey family, int n, BoxSize box) {
  return oracle_profile(family, BoundaryKind::Vertex, n, box).back();
}

bool has_closed_form(FamilyKey family, BoundaryKind kind) {
  switch (family.family) {
    case Family::GridWindow:
    case Family::Ladder: return kind == BoundaryKind::Edge;
    case Family::Path:
    case Family::RegularTree: return true;
  }
  return false;
}

int closed_form_profile(FamilyKey family, BoundaryKind kind, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "N must be >= 1");
  if (!has_closed_form(family, kind))
    throw Error(Errc::Unsupported, "no closed form for the " + std::string(to_string(kind)) + " profile of " +
                                       family.describe());
  switch (family.family) {
    case Family::GridWindow: {
      int m = static_cast<int>(std::sqrt(static_cast<double>(n)));
      while (m * m > n) --m;
      while ((m + 1) * (m + 1) <= n) ++m;
      if (n == m * m) return 4 * m;
      if (n <= m * m + m) return 4 * m + 2;
      return 4 * m + 4;
    }
    case Family::RegularTree: return (family.degree - 2) * n + 2;
    case Family::Ladder: return (n == 1 || n % 2 == 0) ? 2 : 3;
    case Family::Path: return 2;
  }
  return 0;
}

std::string Provenance::to_string() const {
  return (source == Source::Oracle ? "oracle" : "closed-form") + (detail.empty() ? "" : ":" + detail);
}

IsoperimetricProfile::IsoperimetricProfile(FamilyKey family, BoundaryKind kind, std::vector<ProfileEntry> entries)
    : family_(family), kind_(kind), entries_(std::move(entries)) {}

const ProfileEntry& IsoperimetricProfile::entry(int n) const {
  if (n < 1 || n > nmax())
    throw Error(Errc::RangeExceeded, "profile holds N = 1.." + std::to_string(nmax()) + ", asked for " + std::to_string(n));
  return entries_[static_cast<std::size_t>(n - 1)];
}

int IsoperimetricProfile::at(int n) const { return entry(n).value; }

bool IsoperimetricProfile::nondecreasing() const {
  for (std::size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].value < entries_[i - 1].value) return false;
  return true;
}

IsoperimetricProfile compute_profile(FamilyKey family, BoundaryKind kind, int nmax, ProfileSource source, BoxSize box) {
  if (nmax < 1) throw Error(Errc::InvalidArgument, "N must be >= 1");
  const bool closed = source != ProfileSource::OracleOnly && has_closed_form(family, kind);
  std::vector<ProfileEntry> entries;
  if (closed) {
    const std::string formula = family.describe() + "-" + std::string(to_string(kind));
    for (int n = 1; n <= nmax; ++n)
      entries.push_back({n, closed_form_profile(family, kind, n), {Provenance::Source::ClosedForm, formula}, {}, {}});
  } else {
    if (source == ProfileSource::ClosedFormOnly) closed_form_profile(family, kind, 1);  // throws Unsupported
    for (auto& r : oracle_profile(family, kind, nmax, box))
      entries.push_back({r.n, r.minimum, {Provenance::Source::Oracle, r.provenance()}, r.witness, r.box});
  }
  return IsoperimetricProfile(family, kind, std::move(entries));
}

int prefix_boundary(const Ordering& o, BoundaryKind kind, std::size_t n) {
  if (n > o.valid_prefix_len())
    throw Error(Errc::PrefixTooShort, "N = " + std::to_string(n) + " exceeds the valid prefix " +
                                          std::to_string(o.valid_prefix_len()) + " of " + o.name());
  const VertexSet prefix = o.prefix(n);
  if (kind == BoundaryKind::Edge) return static_cast<int>(edge_boundary(o.graph(), prefix).count);
  return static_cast<int>(vertex_boundary(o.graph(), prefix).size());
}

NestedReport nested_minimizer_check(const Ordering& o, BoundaryKind kind, int nmax) {
  const auto profile = compute_profile(FamilyKey::of(o.graph()), kind, nmax);
  NestedReport report;
  report.kind = kind;
  for (int n = 1; n <= nmax; ++n) {
    NestedRow row{n, prefix_boundary(o, kind, static_cast<std::size_t>(n)), profile.at(n), false};
    row.equal = row.prefix_boundary == row.minimum;
    if (!row.equal && !report.first_failure) report.first_failure = n;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace gr
