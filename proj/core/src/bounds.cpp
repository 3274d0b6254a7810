#include "dissalpha/bounds.hpp"

#include <algorithm>
#include <stdexcept>

namespace dissalpha {
namespace {

Rational frac(std::int64_t num, std::int64_t den) { return Rational(num, den); }

Rational of(std::size_t v) { return Rational(static_cast<std::uint64_t>(v)); }

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

Rational bound_basic(std::size_t diss) { return of(diss) * frac(1, 2); }

Rational bound_cubic(std::size_t diss) { return of(diss) * frac(3, 5); }

Rational bound_bipartite(std::size_t diss, std::size_t max_degree) {
  if (max_degree < 2) throw std::invalid_argument("bound_bipartite: maximum degree must be at least 2");
  const Rational c = frac(1, 2 * (static_cast<std::int64_t>(max_degree) - 1));
  return frac(1, 2) * (1 + c) * of(diss) - c;
}

Rational triangle_free_regular_factor(std::size_t degree) {
  if (degree < 3 || degree > 60)
    throw std::invalid_argument("triangle_free_regular_factor: degree must lie in 3..60");
  using boost::multiprecision::cpp_int;
  const cpp_int d = degree;
  const cpp_int top = (d - 1) * (d + 1);
  const cpp_int bottom = (cpp_int(1) << degree) * d * d + top;
  return frac(1, 2) * (1 + Rational(top, bottom));
}

Rational bound_triangle_free_cubic(std::size_t diss) { return of(diss) * frac(5, 8); }

Rational bound_triangle_free_subcubic_conjecture(std::size_t diss) { return of(diss) * frac(5, 8) - frac(1, 4); }

const BoundRecord& BoundReport::get(const std::string& name) const {
  for (const auto& b : bounds)
    if (b.name == name) return b;
  throw std::out_of_range("no bound named " + name);
}

bool BoundReport::proven_violation() const {
  return std::any_of(bounds.begin(), bounds.end(),
                     [](const BoundRecord& b) { return b.applicable && b.proven && !b.satisfied; });
}

bool BoundReport::conjecture_violation() const {
  return std::any_of(bounds.begin(), bounds.end(),
                     [](const BoundRecord& b) { return b.applicable && !b.proven && !b.satisfied; });
}

BoundReport bound_report(const GraphClass& cls, std::size_t order, std::size_t alpha, std::size_t diss) {
  BoundReport r;
  r.alpha = alpha;
  r.diss = diss;
  r.cls = cls;
  const Rational a = of(alpha);
  auto add = [&](std::string name, bool applicable, bool proven, Rational value) {
    BoundRecord b;
    b.name = std::move(name);
    b.applicable = applicable;
    b.proven = proven;
    b.value = std::move(value);
    b.satisfied = a >= b.value;
    b.tight = a == b.value;
    r.bounds.push_back(std::move(b));
  };
  const std::size_t bip_degree = std::max<std::size_t>(2, cls.max_degree);
  const bool regular_tf = cls.regular && cls.triangle_free && cls.max_degree >= 3 && cls.max_degree <= 60;

  add("basic", true, true, bound_basic(diss));
  add("cubic", cls.connected && cls.cubic && order >= 6, true, bound_cubic(diss));
  add("bipartite", cls.connected && cls.bipartite, true, bound_bipartite(diss, bip_degree));
  add("triangle_free_regular", regular_tf, true,
      regular_tf ? triangle_free_regular_factor(cls.max_degree) * of(diss) : Rational(0));
  add("triangle_free_cubic", cls.cubic && cls.triangle_free, true, bound_triangle_free_cubic(diss));
  add("triangle_free_subcubic_conjecture", cls.connected && cls.subcubic && cls.triangle_free, false,
      bound_triangle_free_subcubic_conjecture(diss));
  return r;
}

BoundReport check_all_bounds(const Graph& g, const SolveOptions& opts) {
  const std::size_t alpha = max_independent_set(g, opts).value;
  const std::size_t diss = max_dissociation_set(g, opts).value;
  return bound_report(classify(g), g.order(), alpha, diss);
}

std::uint64_t max_weight_term(std::size_t degree) {
  if (degree < 1 || degree > 40) throw std::invalid_argument("max_weight_term: degree must lie in 1..40");
  std::uint64_t best = 0;
  for (std::uint64_t i = 1; i <= degree; ++i) best = std::max(best, (std::uint64_t{1} << i) * i * (degree - i + 1));
  return best;
}

}  // namespace dissalpha
