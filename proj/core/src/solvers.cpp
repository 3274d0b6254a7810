#include "dissalpha/solvers.hpp"

#include <bit>
#include <string>
#include <vector>

namespace dissalpha {
namespace {

using Mask = std::uint64_t;

inline Mask bit(unsigned v) { return Mask{1} << v; }
inline unsigned lowest(Mask m) { return static_cast<unsigned>(std::countr_zero(m)); }
inline unsigned count(Mask m) { return static_cast<unsigned>(std::popcount(m)); }

void require_solver_order(const Graph& g, const char* who) {
  if (g.order() > kSolverMaxOrder)
    throw std::invalid_argument(std::string(who) + ": order " + std::to_string(g.order()) +
                                " exceeds solver limit " + std::to_string(kSolverMaxOrder));
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (bit(static_cast<unsigned>(n)) - 1); }

/// Node counter plus a coarse deadline check.
class Budget {
 public:
  explicit Budget(const SolveOptions& opts) : deadline_(opts.deadline) {}

  void tick() {
    ++nodes_;
    if (deadline_ && (nodes_ & 0xFFF) == 1 && std::chrono::steady_clock::now() > *deadline_)
      throw SolveTimeout();
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::optional<std::chrono::steady_clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

// Vertex of maximum degree in G[u], lowest index on ties.
unsigned max_degree_vertex(const std::vector<Mask>& adj, Mask u, unsigned& degree) {
  unsigned best = lowest(u);
  unsigned best_deg = 0;
  bool first = true;
  for (Mask w = u; w != 0; w &= w - 1) {
    unsigned v = lowest(w);
    unsigned d = count(adj[v] & u);
    if (first || d > best_deg) {
      best = v;
      best_deg = d;
      first = false;
    }
  }
  degree = best_deg;
  return best;
}

// ---- independence ----------------------------------------------------------

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, const SolveOptions& opts)
      : adj_(g.adjacency_masks()), budget_(opts) {}

  SolveResult run(std::size_t n) {
    search(full_mask(n), 0, 0);
    return {best_, VertexSet::from_mask(n, best_set_), budget_.nodes()};
  }

 private:
  // Greedy clique cover of G[u]; an independent set meets each clique once.
  unsigned clique_cover(Mask u) const {
    unsigned cliques = 0;
    while (u != 0) {
      unsigned v = lowest(u);
      Mask clique = bit(v);
      Mask cand = adj_[v] & u;
      while (cand != 0) {
        unsigned w = lowest(cand);
        clique |= bit(w);
        cand &= adj_[w];
      }
      u &= ~clique;
      ++cliques;
    }
    return cliques;
  }

  void search(Mask u, std::size_t cur, Mask chosen) {
    budget_.tick();
    // Degree-0 and degree-1 vertices of G[u] belong to some maximum set.
    for (bool changed = true; changed && u != 0;) {
      changed = false;
      for (Mask w = u; w != 0; w &= w - 1) {
        unsigned v = lowest(w);
        if ((u & bit(v)) == 0) continue;
        if (count(adj_[v] & u) <= 1) {
          chosen |= bit(v);
          ++cur;
          u &= ~(adj_[v] | bit(v));
          changed = true;
        }
      }
    }
    if (u == 0) {
      if (cur > best_ || !have_) {
        best_ = cur;
        best_set_ = chosen;
        have_ = true;
      }
      return;
    }
    if (have_ && cur + clique_cover(u) <= best_) return;

    unsigned deg = 0;
    unsigned v = max_degree_vertex(adj_, u, deg);
    search(u & ~(adj_[v] | bit(v)), cur + 1, chosen | bit(v));
    search(u & ~bit(v), cur, chosen);
  }

  std::vector<Mask> adj_;
  Budget budget_;
  std::size_t best_ = 0;
  Mask best_set_ = 0;
  bool have_ = false;
};

// ---- dissociation ----------------------------------------------------------

// Each vertex is undecided (in `u`), in D without a partner, in D with its
// partner, or out. Taking a vertex removes its closed neighbourhood (and its
// partner's) from `u`, so the undecided part is always an independent
// subproblem on G[u].
class DissociationSearch {
 public:
  DissociationSearch(const Graph& g, const SolveOptions& opts)
      : adj_(g.adjacency_masks()), budget_(opts) {}

  // Greedy packing of vertex-disjoint 3-vertex paths in G[u]; no path can lie
  // entirely inside a dissociation set.
  unsigned path_packing(Mask u) const {
    unsigned paths = 0;
    for (Mask w = u; w != 0; w &= w - 1) {
      unsigned v = lowest(w);
      if ((u & bit(v)) == 0) continue;
      Mask nb = adj_[v] & u;
      if (count(nb) < 2) continue;
      Mask first = nb & (~nb + 1);
      nb &= nb - 1;
      Mask second = nb & (~nb + 1);
      u &= ~(bit(v) | first | second);
      ++paths;
    }
    return paths;
  }

  std::uint64_t nodes() const { return budget_.nodes(); }

  // Plain maximisation of |D|.
  SolveResult maximize(std::size_t n) {
    plain(full_mask(n), 0, 0);
    return {best_size_, VertexSet::from_mask(n, best_set_), budget_.nodes()};
  }

  // Maximises the isolated count over dissociation sets of size `size`.
  // Seeds the incumbent with `seed`.
  Mask maximize_isolated(std::size_t n, std::size_t size, Mask seed, std::size_t seed_isolated) {
    target_size_ = size;
    best_iso_ = seed_isolated;
    best_set_ = seed;
    mode_ = Mode::MaxIsolated;
    constrained(full_mask(n), 0, 0, 0, 0);
    return best_set_;
  }

  // Searches for a set of exactly (size, isolated) containing `forced` and
  // avoiding `excluded`.
  std::optional<Mask> find(std::size_t n, std::size_t size, std::size_t isolated, Mask forced,
                           Mask excluded) {
    target_size_ = size;
    target_iso_ = isolated;
    mode_ = Mode::Feasible;
    found_ = false;
    Mask u = full_mask(n) & ~excluded;
    if (forced & excluded) return std::nullopt;
    constrained(u, forced, 0, 0, 0);
    if (!found_) return std::nullopt;
    return found_set_;
  }

  std::size_t isolated_in(Mask d) const {
    std::size_t iso = 0;
    for (Mask w = d; w != 0; w &= w - 1)
      if ((adj_[lowest(w)] & d) == 0) ++iso;
    return iso;
  }

 private:
  enum class Mode { MaxIsolated, Feasible };

  void record_plain(std::size_t size, Mask chosen) {
    if (!have_ || size > best_size_) {
      best_size_ = size;
      best_set_ = chosen;
      have_ = true;
    }
  }

  void plain(Mask u, std::size_t cur, Mask chosen) {
    budget_.tick();
    for (bool changed = true; changed && u != 0;) {
      changed = false;
      for (Mask w = u; w != 0; w &= w - 1) {
        unsigned v = lowest(w);
        if ((u & bit(v)) == 0) continue;
        Mask nb = adj_[v] & u;
        if (nb == 0) {
          chosen |= bit(v);
          ++cur;
          u &= ~bit(v);
          changed = true;
        } else if ((nb & (nb - 1)) == 0 && (adj_[lowest(nb)] & u) == bit(v)) {
          // isolated edge of G[u]
          chosen |= bit(v) | nb;
          cur += 2;
          u &= ~(bit(v) | nb);
          changed = true;
        }
      }
    }
    if (u == 0) {
      record_plain(cur, chosen);
      return;
    }
    if (have_ && cur + count(u) - path_packing(u) <= best_size_) return;

    // A degree-1 vertex of G[u] lies in some optimal completion: exchange it
    // for its neighbour.
    for (Mask w = u; w != 0; w &= w - 1) {
      unsigned v = lowest(w);
      Mask nb = adj_[v] & u;
      if (count(nb) == 1) {
        unsigned x = lowest(nb);
        plain(u & ~(bit(v) | nb), cur + 1, chosen | bit(v));
        plain(u & ~(adj_[v] | adj_[x] | bit(v) | bit(x)), cur + 2, chosen | bit(v) | bit(x));
        return;
      }
    }

    unsigned deg = 0;
    unsigned v = max_degree_vertex(adj_, u, deg);
    Mask closed = adj_[v] | bit(v);
    for (Mask nb = adj_[v] & u; nb != 0; nb &= nb - 1) {
      unsigned x = lowest(nb);
      plain(u & ~(closed | adj_[x] | bit(x)), cur + 2, chosen | bit(v) | bit(x));
    }
    plain(u & ~closed, cur + 1, chosen | bit(v));
    plain(u & ~bit(v), cur, chosen);
  }

  // Lexicographic objective (size, isolated) with optional forced vertices.
  // Returns true to unwind once a feasible set has been found.
  bool constrained(Mask u, Mask forced, std::size_t size, std::size_t iso, Mask chosen) {
    budget_.tick();
    // Isolated vertices of G[u] are in every maximum completion.
    for (Mask w = u; w != 0; w &= w - 1) {
      unsigned v = lowest(w);
      if ((adj_[v] & u) == 0) {
        chosen |= bit(v);
        ++size;
        ++iso;
        u &= ~bit(v);
      }
    }
    forced &= u;
    if (u == 0) {
      if (size != target_size_) return false;
      if (mode_ == Mode::Feasible) {
        if (iso != target_iso_) return false;
        found_ = true;
        found_set_ = chosen;
        return true;
      }
      if (iso > best_iso_) {
        best_iso_ = iso;
        best_set_ = chosen;
      }
      return false;
    }
    const std::size_t size_ub = size + count(u) - path_packing(u);
    if (size_ub < target_size_) return false;
    const std::size_t room = target_size_ - size;
    const std::size_t iso_ub = iso + std::min<std::size_t>(count(u), room);
    if (mode_ == Mode::Feasible ? iso_ub < target_iso_ : iso_ub <= best_iso_) return false;

    unsigned v = 0;
    bool must_take = false;
    if (forced != 0) {
      v = lowest(forced);
      must_take = true;
    } else {
      unsigned deg = 0;
      v = max_degree_vertex(adj_, u, deg);
    }
    const Mask closed = adj_[v] | bit(v);
    if ((forced & adj_[v]) == 0 &&
        constrained(u & ~closed, forced, size + 1, iso + 1, chosen | bit(v)))
      return true;
    for (Mask nb = adj_[v] & u; nb != 0; nb &= nb - 1) {
      unsigned x = lowest(nb);
      Mask removed = (closed | adj_[x] | bit(x)) & ~(bit(v) | bit(x));
      if (forced & removed) continue;
      if (constrained(u & ~(closed | adj_[x] | bit(x)), forced, size + 2, iso,
                      chosen | bit(v) | bit(x)))
        return true;
    }
    if (!must_take && constrained(u & ~bit(v), forced, size, iso, chosen)) return true;
    return false;
  }

  std::vector<Mask> adj_;
  Budget budget_;

  std::size_t best_size_ = 0;
  Mask best_set_ = 0;
  bool have_ = false;

  Mode mode_ = Mode::MaxIsolated;
  std::size_t target_size_ = 0;
  std::size_t target_iso_ = 0;
  std::size_t best_iso_ = 0;
  bool found_ = false;
  Mask found_set_ = 0;
};

void check_witness(const Graph& g, const SolveResult& r, bool independent) {
  bool ok = r.witness.size() == r.value &&
            (independent ? is_independent_set(g, r.witness) : is_dissociation_set(g, r.witness));
  if (!ok) throw std::logic_error("solver returned an invalid witness");
}

}  // namespace

SolveResult max_independent_set(const Graph& g, const SolveOptions& opts) {
  require_solver_order(g, "max_independent_set");
  IndependentSetSearch search(g, opts);
  SolveResult r = search.run(g.order());
  check_witness(g, r, true);
  return r;
}

SolveResult max_dissociation_set(const Graph& g, const SolveOptions& opts) {
  require_solver_order(g, "max_dissociation_set");
  DissociationSearch search(g, opts);
  SolveResult r = search.maximize(g.order());
  check_witness(g, r, false);
  return r;
}

DissCertificate max_diss_max_isolated(const Graph& g, const SolveOptions& opts) {
  require_solver_order(g, "max_diss_max_isolated");
  const std::size_t n = g.order();
  DissociationSearch search(g, opts);

  // phase 1: diss(g)
  SolveResult first = search.maximize(n);
  check_witness(g, first, false);
  const std::size_t diss = first.value;

  // phase 2: most isolated vertices among maximum sets
  Mask candidate = search.maximize_isolated(n, diss, first.witness.mask(),
                                            search.isolated_in(first.witness.mask()));
  const std::size_t p = search.isolated_in(candidate);

  // phase 3: lexicographically smallest set with key (diss, p), fixing
  // vertices in ascending order
  Mask forced = 0;
  Mask excluded = 0;
  for (unsigned v = 0; v < n; ++v) {
    if (candidate & bit(v)) {
      forced |= bit(v);
      continue;
    }
    if (auto s = search.find(n, diss, p, forced | bit(v), excluded)) {
      candidate = *s;
      forced |= bit(v);
    } else {
      excluded |= bit(v);
    }
  }

  DissCertificate c;
  c.D = VertexSet::from_mask(n, candidate);
  if (c.D.size() != diss || !is_dissociation_set(g, c.D))
    throw std::logic_error("max_diss_max_isolated: certificate is not a maximum dissociation set");
  auto dp = diss_profile(g, c.D);
  c.p = dp.isolated;
  c.q = dp.pairs;
  if (c.p != p) throw std::logic_error("max_diss_max_isolated: isolated count drifted");
  VertexSet rest = c.D.complement();
  c.complement_is_dissociation = is_dissociation_set(g, rest);
  if (c.complement_is_dissociation) {
    auto rp = diss_profile(g, rest);
    c.r = rp.isolated;
    c.s = rp.pairs;
  } else if (g.max_degree() <= 3) {
    throw std::logic_error("max_diss_max_isolated: complement of the certificate of a subcubic graph "
                           "induces a vertex of degree 2 or more");
  }
  c.nodes_explored = search.nodes();
  return c;
}

EdgeCountIdentity edge_count_identity(const Graph& g, const DissCertificate& c) {
  if (!classify(g).cubic) throw std::invalid_argument("edge_count_identity: graph is not cubic");
  if (!c.complement_is_dissociation)
    throw std::invalid_argument("edge_count_identity: certificate complement is not a dissociation set");
  EdgeCountIdentity id;
  for (auto [u, v] : g.edges())
    if (c.D.contains(u) != c.D.contains(v)) ++id.cut_edges;
  id.from_d = 3 * c.p + 4 * c.q;
  id.from_complement = 3 * c.r + 4 * c.s;
  if (id.cut_edges != id.from_d || id.cut_edges != id.from_complement)
    throw std::logic_error("edge count identity violated: cut=" + std::to_string(id.cut_edges) +
                           " 3p+4q=" + std::to_string(id.from_d) +
                           " 3r+4s=" + std::to_string(id.from_complement));
  return id;
}

}  // namespace dissalpha
