#include "dissalpha/random_procedure.hpp"

#include <mutex>
#include <stdexcept>

#include "dissalpha/parallel.hpp"

namespace dissalpha {

PartitionStats diss_partition_stats(const Graph& g, const VertexSet& D) {
  if (!is_dissociation_set(g, D) || D.universe() != g.order())
    throw std::invalid_argument("diss_partition_stats: D is not a dissociation set of the graph");
  const std::size_t n = g.order();
  PartitionStats st;
  st.max_degree = g.max_degree();
  st.regular = n > 0 && g.min_degree() == st.max_degree;
  st.D0 = VertexSet(n);
  st.D1 = VertexSet(n);
  st.r.assign(st.max_degree + 1, 0);
  for (Vertex v : D.members()) {
    bool paired = false;
    for (Vertex w : g.neighbors(v)) paired = paired || D.contains(w);
    (paired ? st.D1 : st.D0).insert(v);
  }
  st.p = st.D0.size();
  st.q = st.D1.size() / 2;
  std::size_t weighted = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (D.contains(v)) continue;
    std::size_t i = 0;
    for (Vertex w : g.neighbors(v)) i += st.D1.contains(w);
    ++st.r[i];
    weighted += i;
  }
  if (st.regular && st.max_degree >= 1 && weighted != 2 * (st.max_degree - 1) * st.q)
    throw std::logic_error("diss_partition_stats: sum i r_i = " + std::to_string(weighted) +
                           " differs from 2(D-1)q = " + std::to_string(2 * (st.max_degree - 1) * st.q));
  return st;
}

Rational expected_I2_exact(const PartitionStats& st) {
  if (st.max_degree == 0) throw std::invalid_argument("expected_I2_exact: maximum degree must be positive");
  const auto d = static_cast<std::int64_t>(st.max_degree);
  Rational e(static_cast<std::uint64_t>(st.p + (st.r.empty() ? 0 : st.r[0])), d + 1);
  for (std::size_t i = 1; i < st.r.size(); ++i) {
    boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << i;
    den *= d - static_cast<std::int64_t>(i) + 1;
    e += Rational(boost::multiprecision::cpp_int(static_cast<std::uint64_t>(st.r[i])), den);
  }
  return e;
}

Rational inclusion_probability(const Graph& g, const VertexSet& D, Vertex u) {
  const std::size_t deg = g.degree(u);
  std::size_t in_d = 0;
  for (Vertex w : g.neighbors(u)) in_d += D.contains(w);
  if (D.contains(u)) {
    if (in_d > 0) return Rational(0);  // u in D1
    return Rational(1, static_cast<std::int64_t>(deg) + 1);
  }
  std::size_t i = 0;  // neighbours in D1
  for (Vertex w : g.neighbors(u)) {
    if (!D.contains(w)) continue;
    for (Vertex x : g.neighbors(w))
      if (D.contains(x)) {
        ++i;
        break;
      }
  }
  boost::multiprecision::cpp_int den = boost::multiprecision::cpp_int(1) << i;
  den *= static_cast<std::int64_t>(deg - i + 1);
  return Rational(boost::multiprecision::cpp_int(1), den);
}

Rational expected_I2_per_vertex(const Graph& g, const VertexSet& D) {
  if (!is_dissociation_set(g, D)) throw std::invalid_argument("expected_I2_per_vertex: D is not a dissociation set");
  Rational e(0);
  for (Vertex u = 0; u < g.order(); ++u) e += inclusion_probability(g, D, u);
  return e;
}

namespace {

struct Layout {
  std::vector<char> in_d, in_d1;
  std::vector<std::pair<Vertex, Vertex>> pairs;  // components of G[D1]
};

Layout layout(const Graph& g, const VertexSet& D) {
  if (!is_dissociation_set(g, D) || D.universe() != g.order())
    throw std::invalid_argument("sample_procedure: D is not a dissociation set of the graph");
  Layout l;
  l.in_d.assign(g.order(), 0);
  l.in_d1.assign(g.order(), 0);
  for (Vertex v : D.members()) l.in_d[v] = 1;
  for (Vertex v : D.members())
    for (Vertex w : g.neighbors(v))
      if (l.in_d[w]) {
        l.in_d1[v] = 1;
        if (v < w) l.pairs.emplace_back(v, w);
      }
  return l;
}

ProcedureDraw draw(const Graph& g, const Layout& l, SplitMix64& rng) {
  const std::size_t n = g.order();
  ProcedureDraw out{VertexSet(n), VertexSet(n)};
  std::vector<char> in_i1(n, 0);
  for (auto [x, y] : l.pairs) {
    Vertex pick = (rng() & 1U) ? y : x;
    in_i1[pick] = 1;
    out.I1.insert(pick);
  }
  std::vector<std::uint64_t> prio(n, 0);
  for (Vertex v = 0; v < n; ++v)
    if (!l.in_d1[v]) prio[v] = rng();
  auto before = [&](Vertex a, Vertex b) { return prio[a] < prio[b] || (prio[a] == prio[b] && a < b); };
  for (Vertex u = 0; u < n; ++u) {
    if (l.in_d1[u]) continue;
    bool first = true;
    bool blocked = false;
    for (Vertex w : g.neighbors(u)) {
      if (l.in_d1[w]) {
        blocked = blocked || in_i1[w];
        continue;
      }
      if (!before(u, w)) first = false;
    }
    if (first && !(blocked && !l.in_d[u])) out.I2.insert(u);
  }
  for (Vertex u : out.I1.members())
    for (Vertex w : g.neighbors(u))
      if (out.I2.contains(w) || out.I1.contains(w))
        throw std::logic_error("sample_procedure: I1 u I2 is not independent");
  if (!is_independent_set(g, out.I2)) throw std::logic_error("sample_procedure: I2 is not independent");
  return out;
}

}  // namespace

ProcedureDraw sample_procedure(const Graph& g, const VertexSet& D, SplitMix64& rng) {
  return draw(g, layout(g, D), rng);
}

VertexSet sample_independent_set(const Graph& g, const VertexSet& D, std::uint64_t seed) {
  auto rng = SplitMix64::split(seed, 0);
  auto d = sample_procedure(g, D, rng);
  VertexSet all = d.I1;
  for (Vertex v : d.I2.members()) all.insert(v);
  return all;
}

Rational MCResult::mean() const { return Rational(sum, trials); }

Rational MCResult::stderr_squared() const {
  if (trials < 2) return Rational(0);
  const Rational t(trials);
  const Rational var = (Rational(sum_squares) - Rational(sum) * Rational(sum) / t) / (t - 1);
  return var / t;
}

bool MCResult::mean_within(std::uint64_t z) const {
  const Rational diff = mean() - exact_expectation;
  return diff * diff <= Rational(z * z) * stderr_squared();
}

bool MCResult::frequency_within(Vertex v, const Rational& p, std::uint64_t z) const {
  const Rational diff = Rational(hits.at(v), trials) - p;
  return diff * diff <= Rational(z * z) * p * (1 - p) / Rational(trials);
}

MCResult montecarlo_I2(const Graph& g, const VertexSet& D, std::uint64_t trials, std::uint64_t seed,
                       std::size_t workers) {
  if (trials == 0) throw std::invalid_argument("montecarlo_I2: trials must be positive");
  const Layout l = layout(g, D);
  MCResult res;
  res.trials = trials;
  res.seed = seed;
  res.hits.assign(g.order(), 0);
  res.exact_expectation = expected_I2_per_vertex(g, D);

  const std::uint64_t chunk = 1024;
  const std::size_t chunks = static_cast<std::size_t>((trials + chunk - 1) / chunk);
  std::mutex merge;
  parallel_for(chunks, workers == 0 ? worker_count() : workers, [&](std::size_t c) {
    std::uint64_t sum = 0, squares = 0;
    std::vector<std::uint64_t> hits(g.order(), 0);
    const std::uint64_t end = std::min<std::uint64_t>(trials, (c + 1) * chunk);
    for (std::uint64_t t = c * chunk; t < end; ++t) {
      auto rng = SplitMix64::split(seed, t);
      auto d = draw(g, l, rng);
      const std::uint64_t size = d.I2.size();
      sum += size;
      squares += size * size;
      for (Vertex v : d.I2.members()) ++hits[v];
    }
    std::lock_guard lock(merge);
    res.sum += sum;
    res.sum_squares += squares;
    for (std::size_t v = 0; v < hits.size(); ++v) res.hits[v] += hits[v];
  });
  return res;
}

}  // namespace dissalpha
