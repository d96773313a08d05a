#include "rigdist/lawcheck.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>

#include <json.hpp>

#include "rigdist/integration.hpp"
#include "rigdist/json_io.hpp"
#include "rigdist/probability.hpp"
#include "rigdist/schwartz.hpp"
#include "rigdist/strength.hpp"

namespace rigdist {

namespace {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Oracle arithmetic: weight maps and explicit sums only. Nothing here calls
// the library's distribution combinators.

using W = std::map<Element, Coeff>;

void w_acc(const Rig& rig, W& w, const Element& x, const Coeff& c) {
  auto it = w.find(x);
  if (it == w.end())
    w.emplace(x, c);
  else
    it->second = rig.add(it->second, c);
}

W w_prune(const Rig& rig, W w) {
  for (auto it = w.begin(); it != w.end();)
    it = rig.is_zero(it->second) ? w.erase(it) : std::next(it);
  return w;
}

bool w_eq(const Rig& rig, const W& a, const W& b) {
  return w_prune(rig, a) == w_prune(rig, b);
}

W w_of(const Dist& d) {
  W w;
  for (const auto& [x, c] : d.entries()) w.emplace(x, c);
  return w;
}

Dist w_dist(const Rig& rig, const W& w) {
  std::vector<std::pair<Element, Coeff>> entries(w.begin(), w.end());
  return Dist(rig, std::move(entries));
}

Coeff w_at(const Rig& rig, const W& w, const Element& x) {
  const auto it = w.find(x);
  return it == w.end() ? rig.zero() : it->second;
}

Coeff w_total(const Rig& rig, const W& w) {
  Coeff sum = rig.zero();
  for (const auto& [x, c] : w) sum = rig.add(sum, c);
  return sum;
}

W w_push(const Rig& rig, const W& w,
         const std::function<Element(const Element&)>& f) {
  W out;
  for (const auto& [x, c] : w) w_acc(rig, out, f(x), c);
  return out;
}

Element w_embed(const Rig& rig, const W& w) {
  Element::TableRows rows;
  for (const auto& [x, c] : w_prune(rig, w))
    rows.emplace_back(x, rig.format(c));
  return Element::fn_table(std::move(rows));
}

W w_decode(const Rig& rig, const Element& e) {
  W out;
  for (const auto& [x, text] : e.rows()) out.emplace(x, rig.parse(text));
  return out;
}

W w_flatten(const Rig& rig, const W& outer) {
  W out;
  for (const auto& [key, ow] : outer)
    for (const auto& [x, iw] : w_decode(rig, key))
      w_acc(rig, out, x, rig.mul(ow, iw));
  return out;
}

W w_psi(const Rig& rig, const W& p, const W& q, bool tilde) {
  W out;
  for (const auto& [x, a] : p)
    for (const auto& [y, b] : q)
      w_acc(rig, out, Element::pair(x, y),
            tilde ? rig.mul(b, a) : rig.mul(a, b));
  return out;
}

W w_strength_left(const W& p, const Element& y) {
  W out;
  for (const auto& [x, c] : p) out.emplace(Element::pair(x, y), c);
  return out;
}

W w_strength_right(const Element& x, const W& q) {
  W out;
  for (const auto& [y, c] : q) out.emplace(Element::pair(x, y), c);
  return out;
}

// Test functions for the oracle are plain total weight maps.
Coeff w_integrate(const Rig& rig, const W& p, const W& phi) {
  Coeff sum = rig.zero();
  for (const auto& [x, c] : p) sum = rig.add(sum, rig.mul(c, phi.at(x)));
  return sum;
}

W w_act(const Rig& rig, const W& p, const W& phi) {
  W out;
  for (const auto& [x, c] : p) w_acc(rig, out, x, rig.mul(c, phi.at(x)));
  return out;
}

W w_add(const Rig& rig, const W& p, const W& q) {
  W out = p;
  for (const auto& [x, c] : q) w_acc(rig, out, x, c);
  return out;
}

W w_scalar(const Rig& rig, const W& p, const Coeff& lambda) {
  W out;
  for (const auto& [x, c] : p) out.emplace(x, rig.mul(c, lambda));
  return out;
}

std::pair<W, W> w_split(const W& p) {
  W left, right;
  for (const auto& [x, c] : p) {
    if (x.kind() == Element::Kind::left)
      left.emplace(x.tagged(), c);
    else
      right.emplace(x.tagged(), c);
  }
  return {left, right};
}

W w_merge(const W& px, const W& py) {
  W out;
  for (const auto& [x, c] : px) out.emplace(Element::tag_left(x), c);
  for (const auto& [y, c] : py) out.emplace(Element::tag_right(y), c);
  return out;
}

Coeff w_expect(const Rig& rig, const W& p) {
  Coeff sum = rig.zero();
  for (const auto& [x, c] : p)
    sum = rig.add(sum, rig.mul(c, rig.parse(x.atom_name())));
  return sum;
}

// ---------------------------------------------------------------------------
// Witness serialization.

json w_json(const Rig& rig, const W& w) {
  json rows = json::array();
  for (const auto& [x, c] : w_prune(rig, w))
    rows.push_back(json::array(
        {json::parse(element_to_json(x)), rig.format(c)}));
  return rows;
}

json map_json(const ElementMap& m) {
  json rows = json::array();
  for (const auto& [x, y] : m.pairs())
    rows.push_back(json::array({json::parse(element_to_json(x)),
                                json::parse(element_to_json(y))}));
  return rows;
}

// ---------------------------------------------------------------------------
// Input generators: exhaustive lists when the space is small enough,
// otherwise seeded samplers.

template <typename T>
struct Gen {
  std::vector<T> items;
  std::function<T(std::mt19937_64&)> sampler;  // set => sampled mode

  bool exhaustive() const { return !sampler; }
  std::size_t count() const { return items.size(); }
  T draw(std::mt19937_64& rng) const {
    if (sampler) return sampler(rng);
    return items[rng() % items.size()];
  }
};

std::size_t dist_count(std::size_t n, std::size_t c, std::size_t max_support,
                       std::size_t cap) {
  std::size_t sum = 0;
  const std::size_t k_hi = std::min(n, max_support);
  for (std::size_t k = 0; k <= k_hi; ++k) {
    // C(n, k) * c^k, saturated against cap
    std::size_t term = 1;
    for (std::size_t i = 0; i < k; ++i)
      term = term * (n - i) / (i + 1);
    for (std::size_t i = 0; i < k; ++i) {
      if (c != 0 && term > cap / c + 1) return cap + 1;
      term *= c;
    }
    sum += term;
    if (sum > cap) return cap + 1;
  }
  return sum;
}

struct Ctx {
  Rig rig;
  std::size_t size;
  std::uint64_t seed;

  FinSpace X, Y, Z;
  std::vector<Coeff> pool;          // nonzero coefficient pool
  std::vector<Coeff> pool_with_zero;

  std::mt19937_64 salted(const std::string& name) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (const char ch : name) {
      h ^= static_cast<unsigned char>(ch);
      h *= 1099511628211ULL;
    }
    return std::mt19937_64(seed ^ h);
  }

  Dist random_dist(const FinSpace& carrier, std::size_t max_support,
                   std::mt19937_64& rng) const {
    std::vector<std::pair<Element, Coeff>> entries;
    const std::size_t want = rng() % (max_support + 1);
    std::vector<Element> elems = carrier.elements();
    for (std::size_t i = 0; i < want && !elems.empty(); ++i) {
      const std::size_t j = rng() % elems.size();
      entries.emplace_back(elems[j], pool[rng() % pool.size()]);
      elems.erase(elems.begin() + j);
    }
    return Dist(rig, std::move(entries));
  }

  Gen<Dist> gen_dists(const FinSpace& carrier, std::size_t max_support,
                      std::size_t family_cap = 4000) const {
    Gen<Dist> g;
    if (rig.enumerate() &&
        dist_count(carrier.size(), pool.size(), max_support, family_cap) <=
            family_cap) {
      g.items = enumerate_dists(rig, carrier, pool, max_support, family_cap);
      return g;
    }
    g.sampler = [this, carrier, max_support](std::mt19937_64& rng) {
      return random_dist(carrier, max_support, rng);
    };
    return g;
  }

  // Distributions over embedded distributions (and one level deeper).
  Gen<Dist> gen_nested(const FinSpace& base, int depth,
                       std::size_t family_cap) const {
    Gen<Dist> inner =
        depth == 1 ? gen_dists(base, std::min<std::size_t>(size, 2))
                   : gen_nested(base, depth - 1, 4000);
    Gen<Dist> g;
    if (inner.exhaustive()) {
      std::vector<Element> keys;
      keys.reserve(inner.count());
      for (const auto& d : inner.items) keys.push_back(dist_as_element(d));
      const FinSpace key_space{std::move(keys)};
      if (dist_count(key_space.size(), pool.size(), 2, family_cap) <=
          family_cap) {
        g.items = enumerate_dists(rig, key_space, pool, 2, family_cap);
        return g;
      }
    }
    g.sampler = [this, inner](std::mt19937_64& rng) {
      std::vector<std::pair<Element, Coeff>> entries;
      const std::size_t want = rng() % 3;
      for (std::size_t i = 0; i < want; ++i)
        entries.emplace_back(dist_as_element(inner.draw(rng)),
                             pool[rng() % pool.size()]);
      return Dist(rig, std::move(entries));
    };
    return g;
  }

  // Total tables carrier -> coefficients, zero allowed as a value.
  Gen<W> gen_fns(const FinSpace& carrier, std::size_t family_cap = 4000) const {
    Gen<W> g;
    const std::size_t n = carrier.size();
    const std::size_t c = pool_with_zero.size();
    std::size_t count = 1;
    bool small = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (count > family_cap / c + 1) {
        small = false;
        break;
      }
      count *= c;
    }
    if (rig.enumerate() && small && count <= family_cap) {
      std::vector<std::size_t> odo(n, 0);
      for (std::size_t k = 0; k < count; ++k) {
        W fn;
        for (std::size_t i = 0; i < n; ++i)
          fn.emplace(carrier.elements()[i], pool_with_zero[odo[i]]);
        g.items.push_back(std::move(fn));
        for (std::size_t i = n; i-- > 0;) {
          if (++odo[i] < c) break;
          odo[i] = 0;
        }
      }
      return g;
    }
    g.sampler = [this, carrier](std::mt19937_64& rng) {
      W fn;
      for (const auto& x : carrier.elements())
        fn.emplace(x, pool_with_zero[rng() % pool_with_zero.size()]);
      return fn;
    };
    return g;
  }

  Gen<ElementMap> gen_maps(const FinSpace& dom, const FinSpace& cod) const {
    Gen<ElementMap> g;
    const std::size_t n = dom.size();
    const std::size_t c = cod.size();
    if (c == 0) {
      if (n == 0) g.items.push_back(ElementMap{});
      return g;
    }
    std::size_t count = 1;
    for (std::size_t i = 0; i < n; ++i) count *= c;
    std::vector<std::size_t> odo(n, 0);
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<std::pair<Element, Element>> pairs;
      for (std::size_t i = 0; i < n; ++i)
        pairs.emplace_back(dom.elements()[i], cod.elements()[odo[i]]);
      g.items.push_back(ElementMap::from_pairs(std::move(pairs)));
      for (std::size_t i = n; i-- > 0;) {
        if (++odo[i] < c) break;
        odo[i] = 0;
      }
    }
    return g;
  }

  Gen<Element> gen_points(const FinSpace& carrier) const {
    Gen<Element> g;
    g.items = carrier.elements();
    return g;
  }

  Gen<Coeff> gen_scalars() const {
    Gen<Coeff> g;
    g.items = pool_with_zero;
    return g;
  }

  Gen<Dist> gen_probability(const FinSpace& carrier) const {
    Gen<Dist> g;
    Gen<Dist> base = gen_dists(carrier, std::min<std::size_t>(size, 2));
    if (base.exhaustive()) {
      for (const auto& d : base.items)
        if (rig.is_one(total(d))) g.items.push_back(d);
      if (!g.items.empty()) return g;
    }
    g.sampler = [this, base, carrier](std::mt19937_64& rng) {
      for (int attempt = 0; attempt < 8; ++attempt) {
        Dist d = base.draw(rng);
        if (rig.is_one(total(d))) return d;
        if (auto inv = rig.try_invert(total(d))) return scalar_mul(d, *inv);
      }
      return Dist::dirac(rig,
                         carrier.elements()[rng() % carrier.size()]);
    };
    return g;
  }

  // Probability distributions over embedded probability distributions.
  Gen<Dist> gen_probability_nested(const FinSpace& base) const {
    Gen<Dist> inner = gen_probability(base);
    Gen<Dist> g;
    if (inner.exhaustive()) {
      std::vector<Element> keys;
      for (const auto& d : inner.items) keys.push_back(dist_as_element(d));
      const Gen<Dist> outer = gen_probability(FinSpace{std::move(keys)});
      if (outer.exhaustive()) return outer;
    }
    g.sampler = [this, inner](std::mt19937_64& rng) {
      // a point mass on an inner probability keeps the total at one in
      // every rig, and mixes two when the rig can renormalize
      Dist a = inner.draw(rng);
      Dist b = inner.draw(rng);
      Dist outer(rig, {{dist_as_element(a), pool[rng() % pool.size()]},
                       {dist_as_element(b), pool[rng() % pool.size()]}});
      if (rig.is_one(total(outer))) return outer;
      if (auto inv = rig.try_invert(total(outer)))
        return scalar_mul(outer, *inv);
      return Dist::dirac(rig, dist_as_element(a));
    };
    return g;
  }

  // Carrier of coefficient-valued atoms for the moment laws.
  FinSpace scalar_carrier() const {
    std::vector<Element> atoms;
    std::vector<Coeff> values = pool;
    values.push_back(rig.zero());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    const std::size_t take = std::min<std::size_t>(values.size(), 3);
    for (std::size_t i = 0; i < take; ++i)
      atoms.push_back(Element::atom(rig.format(values[i])));
    std::sort(atoms.begin(), atoms.end());
    atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
    return FinSpace{std::move(atoms)};
  }

  Gen<W> gen_indicators(const FinSpace& carrier) const {
    Gen<W> g;
    const std::size_t n = carrier.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      W fn;
      for (std::size_t i = 0; i < n; ++i)
        fn.emplace(carrier.elements()[i],
                   (mask >> i) & 1 ? rig.one() : rig.zero());
      g.items.push_back(std::move(fn));
    }
    return g;
  }
};

// ---------------------------------------------------------------------------
// Law runner.

constexpr std::size_t kTupleCap = 200000;
constexpr std::size_t kBudget = 500;
constexpr std::size_t kWitnessCap = 5;

class Suite {
 public:
  Suite(Ctx ctx) : ctx_(std::move(ctx)) {}

  std::vector<LawReport> take() {
    std::sort(reports_.begin(), reports_.end(),
              [](const LawReport& a, const LawReport& b) {
                return a.law < b.law;
              });
    return std::move(reports_);
  }

  template <typename A, typename F>
  void law(const char* name, bool commutative_only, const Gen<A>& ga, F&& f) {
    if (skip(commutative_only)) return;
    LawReport report{name, 0, {}};
    if (ga.exhaustive() && ga.count() <= kTupleCap) {
      for (const auto& a : ga.items) step(report, f, a);
    } else {
      auto rng = ctx_.salted(name);
      for (std::size_t i = 0; i < kBudget; ++i) step(report, f, ga.draw(rng));
    }
    reports_.push_back(std::move(report));
  }

  template <typename A, typename B, typename F>
  void law(const char* name, bool commutative_only, const Gen<A>& ga,
           const Gen<B>& gb, F&& f) {
    if (skip(commutative_only)) return;
    LawReport report{name, 0, {}};
    if (ga.exhaustive() && gb.exhaustive() &&
        ga.count() * gb.count() <= kTupleCap) {
      for (const auto& a : ga.items)
        for (const auto& b : gb.items) step(report, f, a, b);
    } else {
      auto rng = ctx_.salted(name);
      for (std::size_t i = 0; i < kBudget; ++i)
        step(report, f, ga.draw(rng), gb.draw(rng));
    }
    reports_.push_back(std::move(report));
  }

  template <typename A, typename B, typename C, typename F>
  void law(const char* name, bool commutative_only, const Gen<A>& ga,
           const Gen<B>& gb, const Gen<C>& gc, F&& f) {
    if (skip(commutative_only)) return;
    LawReport report{name, 0, {}};
    if (ga.exhaustive() && gb.exhaustive() && gc.exhaustive() &&
        ga.count() * gb.count() * gc.count() <= kTupleCap) {
      for (const auto& a : ga.items)
        for (const auto& b : gb.items)
          for (const auto& c : gc.items) step(report, f, a, b, c);
    } else {
      auto rng = ctx_.salted(name);
      for (std::size_t i = 0; i < kBudget; ++i)
        step(report, f, ga.draw(rng), gb.draw(rng), gc.draw(rng));
    }
    reports_.push_back(std::move(report));
  }

 private:
  bool skip(bool commutative_only) const {
    return commutative_only && !ctx_.rig.commutative();
  }

  template <typename F, typename... Args>
  void step(LawReport& report, F& f, const Args&... args) {
    ++report.cases;
    if (report.violations.size() >= kWitnessCap) return;
    if (auto violation = f(args...))
      report.violations.push_back(std::move(*violation));
  }

  Ctx ctx_;
  std::vector<LawReport> reports_;
};

std::optional<LawViolation> ok() { return std::nullopt; }

std::optional<LawViolation> fail(json inputs, std::string lhs,
                                 std::string rhs) {
  return LawViolation{inputs.dump(), std::move(lhs), std::move(rhs)};
}

}  // namespace

std::string report_json_line(const LawReport& report) {
  json doc;
  doc["law"] = report.law;
  doc["cases"] = report.cases;
  json violations = json::array();
  for (const auto& v : report.violations) {
    json entry;
    entry["inputs"] = json::parse(v.inputs);
    entry["lhs"] = v.lhs;
    entry["rhs"] = v.rhs;
    violations.push_back(std::move(entry));
  }
  doc["violations"] = std::move(violations);
  return doc.dump();
}

std::vector<Dist> enumerate_dists(const Rig& rig, const FinSpace& carrier,
                                  const std::vector<Coeff>& pool,
                                  std::size_t max_support, std::size_t cap) {
  std::vector<Coeff> values;
  for (const auto& c : pool)
    if (!rig.is_zero(c)) values.push_back(c);
  if (dist_count(carrier.size(), values.size(), max_support, cap) > cap)
    raise(Errc::cap_exceeded, "distribution enumeration");

  std::vector<Dist> out;
  const auto& elems = carrier.elements();
  const std::size_t n = elems.size();
  const std::size_t k_hi = std::min(n, max_support);
  std::vector<std::size_t> support;
  // supports ordered by size then lexicographic position
  std::function<void(std::size_t)> emit = [&](std::size_t start) {
    if (support.size() <= k_hi && !support.empty()) {
      std::vector<std::size_t> odo(support.size(), 0);
      const std::size_t c = values.size();
      std::size_t combos = 1;
      for (std::size_t i = 0; i < support.size(); ++i) combos *= c;
      for (std::size_t k = 0; k < combos; ++k) {
        std::vector<std::pair<Element, Coeff>> entries;
        for (std::size_t i = 0; i < support.size(); ++i)
          entries.emplace_back(elems[support[i]], values[odo[i]]);
        out.push_back(Dist(rig, std::move(entries)));
        for (std::size_t i = support.size(); i-- > 0;) {
          if (++odo[i] < c) break;
          odo[i] = 0;
        }
      }
    }
    if (support.size() == k_hi) return;
    for (std::size_t i = start; i < n; ++i) {
      support.push_back(i);
      emit(i + 1);
      support.pop_back();
    }
  };
  out.push_back(Dist::zero(rig));
  if (!values.empty()) emit(0);
  return out;
}

std::vector<LawReport> run_suite(const Rig& rig, std::size_t size,
                                 std::uint64_t seed) {
  if (size < 1 || size > 3) raise(Errc::parse, "suite size must be 1..3");

  Ctx ctx{rig, size, seed};
  const char* xs[] = {"a", "b", "c"};
  const char* ys[] = {"u", "v", "w"};
  const char* zs[] = {"m", "n", "o"};
  std::vector<Element> ex, ey, ez;
  for (std::size_t i = 0; i < size; ++i) {
    ex.push_back(Element::atom(xs[i]));
    ey.push_back(Element::atom(ys[i]));
    ez.push_back(Element::atom(zs[i]));
  }
  ctx.X = FinSpace{ex};
  ctx.Y = FinSpace{ey};
  ctx.Z = FinSpace{ez};
  // Full nonzero carrier for enumerable rigs (the witness searches must see
  // every value); a small seeded grid otherwise.
  ctx.pool = rig.enumerate()
                 ? rig.sample_pool(std::numeric_limits<std::size_t>::max(),
                                   seed)
                 : rig.sample_pool(4, seed);
  ctx.pool_with_zero = ctx.pool;
  ctx.pool_with_zero.push_back(rig.zero());
  std::sort(ctx.pool_with_zero.begin(), ctx.pool_with_zero.end());

  const Rig& R = rig;
  const std::size_t support = std::min<std::size_t>(size, 2);

  const auto DX = ctx.gen_dists(ctx.X, support);
  const auto DY = ctx.gen_dists(ctx.Y, support);
  const auto T2 = ctx.gen_nested(ctx.X, 1, 4000);
  const auto T2Y = ctx.gen_nested(ctx.Y, 1, 4000);
  const auto T3 = ctx.gen_nested(ctx.X, 2, 60000);
  const auto FX = ctx.gen_fns(ctx.X);
  const auto FY = ctx.gen_fns(ctx.Y);
  const auto FXY = ctx.gen_fns(product(ctx.X, ctx.Y));
  const auto MXY = ctx.gen_maps(ctx.X, ctx.Y);
  const auto MYZ = ctx.gen_maps(ctx.Y, ctx.Z);
  const auto PX = ctx.gen_points(ctx.X);
  const auto PY = ctx.gen_points(ctx.Y);
  const auto SC = ctx.gen_scalars();
  const auto DXY = ctx.gen_dists(coproduct(ctx.X, ctx.Y), support);
  const auto PRX = ctx.gen_probability(ctx.X);
  const auto PRY = ctx.gen_probability(ctx.Y);
  const auto PR2 = ctx.gen_probability_nested(ctx.X);
  const FinSpace RC = ctx.scalar_carrier();
  const auto DR = ctx.gen_dists(RC, support);
  const auto DRR = ctx.gen_dists(product(RC, RC), support);
  const auto FR = ctx.gen_fns(RC);
  const auto PRR = ctx.gen_probability(RC);
  const auto IND = ctx.gen_indicators(ctx.X);

  Suite suite(ctx);

  const auto djson = [&R](const Dist& d) { return json::parse(dist_to_json(d)); };

  // --- monad and functor laws -------------------------------------------

  suite.law("monad.left-unit", false, DX, [&](const Dist& p) {
    const W w = w_of(p);
    const W lhs = w_flatten(
        R, w_push(R, w, [&](const Element& x) {
          return w_embed(R, W{{x, R.one()}});
        }));
    if (w_eq(R, lhs, w)) return ok();
    return fail({{"p", djson(p)}}, w_json(R, lhs).dump(), w_json(R, w).dump());
  });

  suite.law("monad.right-unit", false, DX, [&](const Dist& p) {
    const W w = w_of(p);
    const W lhs = w_flatten(R, W{{w_embed(R, w), R.one()}});
    if (w_eq(R, lhs, w)) return ok();
    return fail({{"p", djson(p)}}, w_json(R, lhs).dump(), w_json(R, w).dump());
  });

  suite.law("monad.associativity", false, T3, [&](const Dist& m) {
    const W w = w_of(m);
    const W lhs = w_flatten(R, w_flatten(R, w));
    const W rhs = w_flatten(R, w_push(R, w, [&](const Element& key) {
                              return w_embed(R,
                                             w_flatten(R, w_decode(R, key)));
                            }));
    if (w_eq(R, lhs, rhs)) return ok();
    return fail({{"m", djson(m)}}, w_json(R, lhs).dump(), w_json(R, rhs).dump());
  });

  suite.law("functor.identity", false, DX, [&](const Dist& p) {
    const W w = w_of(p);
    const W lhs = w_push(R, w, [](const Element& x) { return x; });
    if (w_eq(R, lhs, w)) return ok();
    return fail({{"p", djson(p)}}, w_json(R, lhs).dump(), w_json(R, w).dump());
  });

  suite.law("functor.composition", false, DX, MXY, MYZ,
            [&](const Dist& p, const ElementMap& f, const ElementMap& g) {
              const W w = w_of(p);
              const W lhs = w_push(R, w, [&](const Element& x) {
                return g.apply(f.apply(x));
              });
              const W rhs =
                  w_push(R, w_push(R, w, [&](const Element& x) {
                           return f.apply(x);
                         }),
                         [&](const Element& y) { return g.apply(y); });
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)},
                           {"f", map_json(f)},
                           {"g", map_json(g)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  // --- tensorial strength -------------------------------------------------

  suite.law("strength.left-unit", false, DX, [&](const Dist& p) {
    const W w = w_of(p);
    const W lifted = w_strength_left(w, unit_element());
    const W back = w_push(R, lifted, [](const Element& e) { return e.first(); });
    if (w_eq(R, back, w)) return ok();
    return fail({{"p", djson(p)}}, w_json(R, back).dump(), w_json(R, w).dump());
  });

  suite.law("strength.right-unit", false, DY, [&](const Dist& q) {
    const W w = w_of(q);
    const W lifted = w_strength_right(unit_element(), w);
    const W back = w_push(R, lifted, [](const Element& e) { return e.second(); });
    if (w_eq(R, back, w)) return ok();
    return fail({{"q", djson(q)}}, w_json(R, back).dump(), w_json(R, w).dump());
  });

  suite.law("strength.associativity", false, DX, PY,
            [&](const Dist& p, const Element& y) {
              for (const auto& z : ctx.Z.elements()) {
                const W w = w_of(p);
                const W stepwise = w_push(
                    R, w_strength_left(w_strength_left(w, y), z),
                    [](const Element& e) {
                      return Element::pair(e.first().first(),
                                           Element::pair(e.first().second(),
                                                         e.second()));
                    });
                const W direct = w_strength_left(w, Element::pair(y, z));
                if (!w_eq(R, stepwise, direct))
                  return fail({{"p", djson(p)},
                               {"y", json::parse(element_to_json(y))},
                               {"z", json::parse(element_to_json(z))}},
                              w_json(R, stepwise).dump(),
                              w_json(R, direct).dump());
              }
              return ok();
            });

  // --- the monoidal structures -------------------------------------------

  suite.law("psi.unit-is-strength", false, PX, DY,
            [&](const Element& x, const Dist& q) {
              const W wq = w_of(q);
              const W lhs = w_psi(R, W{{x, R.one()}}, wq, false);
              const W rhs = w_strength_right(x, wq);
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"x", json::parse(element_to_json(x))},
                           {"q", djson(q)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("psi-tilde.unit-is-strength", false, DX, PY,
            [&](const Dist& p, const Element& y) {
              const W wp = w_of(p);
              const W lhs = w_psi(R, wp, W{{y, R.one()}}, true);
              const W rhs = w_strength_left(wp, y);
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)},
                           {"y", json::parse(element_to_json(y))}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("psi.linear-in-first", false, T2, DY,
            [&](const Dist& m, const Dist& q) {
              const W wm = w_of(m);
              const W wq = w_of(q);
              const W lhs = w_psi(R, w_flatten(R, wm), wq, false);
              const W rhs = w_flatten(R, w_push(R, wm, [&](const Element& key) {
                                        return w_embed(
                                            R, w_psi(R, w_decode(R, key), wq,
                                                     false));
                                      }));
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"m", djson(m)}, {"q", djson(q)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("psi.linear-in-second", true, DX, T2Y,
            [&](const Dist& p, const Dist& n) {
              const W wp = w_of(p);
              const W wn = w_of(n);
              const W lhs = w_psi(R, wp, w_flatten(R, wn), false);
              const W rhs = w_flatten(R, w_push(R, wn, [&](const Element& key) {
                                        return w_embed(
                                            R, w_psi(R, wp, w_decode(R, key),
                                                     false));
                                      }));
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)}, {"n", djson(n)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("psi.eq-psi-tilde", false, DX, DY,
            [&](const Dist& p, const Dist& q) {
              const W wp = w_of(p);
              const W wq = w_of(q);
              const W lhs = w_psi(R, wp, wq, false);
              const W rhs = w_psi(R, wp, wq, true);
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("tensor.total", false, DX, DY, [&](const Dist& p, const Dist& q) {
    const Coeff lhs = w_total(R, w_psi(R, w_of(p), w_of(q), false));
    const Coeff rhs = R.mul(w_total(R, w_of(p)), w_total(R, w_of(q)));
    if (lhs == rhs) return ok();
    return fail({{"p", djson(p)}, {"q", djson(q)}}, R.format(lhs),
                R.format(rhs));
  });

  // --- integration and the action -----------------------------------------

  suite.law("integration.unit", false, PX, FX,
            [&](const Element& x, const W& phi) {
              const Coeff lhs = w_integrate(R, W{{x, R.one()}}, phi);
              const Coeff rhs = phi.at(x);
              if (lhs == rhs) return ok();
              return fail({{"x", json::parse(element_to_json(x))},
                           {"phi", w_json(R, phi)}},
                          R.format(lhs), R.format(rhs));
            });

  suite.law("action.unit", false, DX, [&](const Dist& p) {
    W one_fn;
    for (const auto& x : ctx.X.elements()) one_fn.emplace(x, R.one());
    const W lhs = w_act(R, w_of(p), one_fn);
    if (w_eq(R, lhs, w_of(p))) return ok();
    return fail({{"p", djson(p)}}, w_json(R, lhs).dump(),
                w_json(R, w_of(p)).dump());
  });

  suite.law("action.associativity", false, DX, FX, FX,
            [&](const Dist& p, const W& phi1, const W& phi2) {
              const W lhs = w_act(R, w_act(R, w_of(p), phi1), phi2);
              W pointwise;
              for (const auto& [x, v] : phi1)
                pointwise.emplace(x, R.mul(v, phi2.at(x)));
              const W rhs = w_act(R, w_of(p), pointwise);
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)},
                           {"phi1", w_json(R, phi1)},
                           {"phi2", w_json(R, phi2)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("action.reweights-integral", true, DX, FX, FX,
            [&](const Dist& p, const W& phi1, const W& phi2) {
              const Coeff lhs = w_integrate(R, w_act(R, w_of(p), phi2), phi1);
              W pointwise;
              for (const auto& [x, v] : phi1)
                pointwise.emplace(x, R.mul(v, phi2.at(x)));
              const Coeff rhs = w_integrate(R, w_of(p), pointwise);
              if (lhs == rhs) return ok();
              return fail({{"p", djson(p)},
                           {"phi1", w_json(R, phi1)},
                           {"phi2", w_json(R, phi2)}},
                          R.format(lhs), R.format(rhs));
            });

  suite.law("action.total", false, DX, FX, [&](const Dist& p, const W& phi) {
    const Coeff lhs = w_integrate(R, w_of(p), phi);
    const Coeff rhs = w_total(R, w_act(R, w_of(p), phi));
    if (lhs == rhs) return ok();
    return fail({{"p", djson(p)}, {"phi", w_json(R, phi)}}, R.format(lhs),
                R.format(rhs));
  });

  suite.law("action.frobenius", false, DX, MXY, FY,
            [&](const Dist& p, const ElementMap& f, const W& phi) {
              W composed;
              for (const auto& x : ctx.X.elements())
                composed.emplace(x, phi.at(f.apply(x)));
              const W lhs = w_push(R, w_act(R, w_of(p), composed),
                                   [&](const Element& x) { return f.apply(x); });
              const W rhs = w_act(
                  R, w_push(R, w_of(p),
                            [&](const Element& x) { return f.apply(x); }),
                  phi);
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)},
                           {"f", map_json(f)},
                           {"phi", w_json(R, phi)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  // --- biproducts and the module structure --------------------------------

  suite.law("biproduct.split-merge", false, DXY, [&](const Dist& p) {
    const auto [left, right] = w_split(w_of(p));
    const W back = w_merge(left, right);
    if (w_eq(R, back, w_of(p))) return ok();
    return fail({{"p", djson(p)}}, w_json(R, back).dump(),
                w_json(R, w_of(p)).dump());
  });

  suite.law("biproduct.merge-split", false, DX, DY,
            [&](const Dist& px, const Dist& py) {
              const auto [left, right] = w_split(w_merge(w_of(px), w_of(py)));
              if (w_eq(R, left, w_of(px)) && w_eq(R, right, w_of(py)))
                return ok();
              return fail({{"px", djson(px)}, {"py", djson(py)}},
                          w_json(R, left).dump() + "," +
                              w_json(R, right).dump(),
                          w_json(R, w_of(px)).dump() + "," +
                              w_json(R, w_of(py)).dump());
            });

  suite.law("module.add-commutative-monoid", false, DX, DX, DX,
            [&](const Dist& p, const Dist& q, const Dist& r) {
              const W wp = w_of(p), wq = w_of(q), wr = w_of(r);
              const bool assoc =
                  w_eq(R, w_add(R, w_add(R, wp, wq), wr),
                       w_add(R, wp, w_add(R, wq, wr)));
              const bool comm = w_eq(R, w_add(R, wp, wq), w_add(R, wq, wp));
              const bool unit = w_eq(R, w_add(R, wp, W{}), wp);
              if (assoc && comm && unit) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}, {"r", djson(r)}},
                          "monoid-axiom-violated", "");
            });

  suite.law("module.scalar-action", false, DX, SC, SC,
            [&](const Dist& p, const Coeff& a, const Coeff& b) {
              const W wp = w_of(p);
              const bool assoc = w_eq(R, w_scalar(R, w_scalar(R, wp, a), b),
                                      w_scalar(R, wp, R.mul(a, b)));
              const bool unit = w_eq(R, w_scalar(R, wp, R.one()), wp);
              const bool dist_scalar =
                  w_eq(R, w_scalar(R, wp, R.add(a, b)),
                       w_add(R, w_scalar(R, wp, a), w_scalar(R, wp, b)));
              if (assoc && unit && dist_scalar) return ok();
              return fail({{"p", djson(p)},
                           {"a", R.format(a)},
                           {"b", R.format(b)}},
                          "module-axiom-violated", "");
            });

  suite.law("module.add-distributes", false, DX, DX, SC,
            [&](const Dist& p, const Dist& q, const Coeff& a) {
              const W lhs = w_scalar(R, w_add(R, w_of(p), w_of(q)), a);
              const W rhs =
                  w_add(R, w_scalar(R, w_of(p), a), w_scalar(R, w_of(q), a));
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)},
                           {"a", R.format(a)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("linear.additive", false, DX, DX, MXY,
            [&](const Dist& p, const Dist& q, const ElementMap& f) {
              const auto push = [&](const W& w) {
                return w_push(R, w, [&](const Element& x) { return f.apply(x); });
              };
              const W lhs = push(w_add(R, w_of(p), w_of(q)));
              const W rhs = w_add(R, push(w_of(p)), push(w_of(q)));
              if (w_eq(R, lhs, rhs)) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}, {"f", map_json(f)}},
                          w_json(R, lhs).dump(), w_json(R, rhs).dump());
            });

  suite.law("total.natural", false, DX, MXY,
            [&](const Dist& p, const ElementMap& f) {
              const Coeff lhs = w_total(
                  R, w_push(R, w_of(p),
                            [&](const Element& x) { return f.apply(x); }));
              const Coeff rhs = w_total(R, w_of(p));
              if (lhs == rhs) return ok();
              return fail({{"p", djson(p)}, {"f", map_json(f)}}, R.format(lhs),
                          R.format(rhs));
            });

  // --- the functional representation --------------------------------------

  suite.law("tau.monad-morphism", false, T2, FX,
            [&](const Dist& m, const W& phi) {
              const W wm = w_of(m);
              const Coeff lhs = w_integrate(R, w_flatten(R, wm), phi);
              Coeff rhs = R.zero();
              for (const auto& [key, ow] : wm)
                rhs = R.add(rhs,
                            R.mul(ow, w_integrate(R, w_decode(R, key), phi)));
              if (lhs == rhs) return ok();
              return fail({{"m", djson(m)}, {"phi", w_json(R, phi)}},
                          R.format(lhs), R.format(rhs));
            });

  suite.law("fubini", false, DX, DY, FXY,
            [&](const Dist& p, const Dist& q, const W& phi) {
              Coeff lhs = R.zero();
              for (const auto& [x, a] : w_of(p)) {
                Coeff inner = R.zero();
                for (const auto& [y, b] : w_of(q))
                  inner = R.add(inner,
                                R.mul(b, phi.at(Element::pair(x, y))));
                lhs = R.add(lhs, R.mul(a, inner));
              }
              Coeff rhs = R.zero();
              for (const auto& [y, b] : w_of(q)) {
                Coeff inner = R.zero();
                for (const auto& [x, a] : w_of(p))
                  inner = R.add(inner,
                                R.mul(a, phi.at(Element::pair(x, y))));
                rhs = R.add(rhs, R.mul(b, inner));
              }
              if (lhs == rhs) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)},
                           {"phi", w_json(R, phi)}},
                          R.format(lhs), R.format(rhs));
            });

  // --- moments and the affine part -----------------------------------------

  suite.law("moments.tau-point-value", false, DR, FR,
            [&](const Dist& p, const W& phi) {
              const Coeff lhs = w_integrate(R, w_of(p), phi);
              const W pushed = w_push(R, w_of(p), [&](const Element& x) {
                return Element::atom(R.format(phi.at(x)));
              });
              const Coeff rhs = w_expect(R, pushed);
              if (lhs == rhs) return ok();
              return fail({{"p", djson(p)}, {"phi", w_json(R, phi)}},
                          R.format(lhs), R.format(rhs));
            });

  suite.law("moments.sum-of-coordinates", false, DRR, [&](const Dist& joint) {
    const W w = w_of(joint);
    const W summed = w_push(R, w, [&](const Element& e) {
      return Element::atom(R.format(R.add(R.parse(e.first().atom_name()),
                                          R.parse(e.second().atom_name()))));
    });
    const Coeff lhs = w_expect(R, summed);
    const W m1 = w_push(R, w, [](const Element& e) { return e.first(); });
    const W m2 = w_push(R, w, [](const Element& e) { return e.second(); });
    const Coeff rhs = R.add(w_expect(R, m1), w_expect(R, m2));
    if (lhs == rhs) return ok();
    return fail({{"joint", djson(joint)}}, R.format(lhs), R.format(rhs));
  });

  suite.law("moments.affine-equivariance", true, PRR, SC, SC,
            [&](const Dist& p, const Coeff& a, const Coeff& b) {
              const W w = w_of(p);
              const Coeff lhs = R.add(R.mul(a, w_expect(R, w)), b);
              const W pushed = w_push(R, w, [&](const Element& x) {
                return Element::atom(R.format(
                    R.add(R.mul(a, R.parse(x.atom_name())), b)));
              });
              const Coeff rhs = w_expect(R, pushed);
              if (lhs == rhs) return ok();
              return fail({{"p", djson(p)},
                           {"a", R.format(a)},
                           {"b", R.format(b)}},
                          R.format(lhs), R.format(rhs));
            });

  suite.law("affine.marginals-reconstruct", false, PRX, PRY,
            [&](const Dist& p, const Dist& q) {
              const W joint = w_psi(R, w_of(p), w_of(q), false);
              const W m1 = w_push(R, joint, [](const Element& e) {
                return e.first();
              });
              const W m2 = w_push(R, joint, [](const Element& e) {
                return e.second();
              });
              if (w_eq(R, m1, w_of(p)) && w_eq(R, m2, w_of(q))) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}},
                          w_json(R, m1).dump() + "," + w_json(R, m2).dump(),
                          w_json(R, w_of(p)).dump() + "," +
                              w_json(R, w_of(q)).dump());
            });

  suite.law("affine.tensor-closed", false, PRX, PRY,
            [&](const Dist& p, const Dist& q) {
              const Coeff t =
                  w_total(R, w_psi(R, w_of(p), w_of(q), false));
              if (R.is_one(t)) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}}, R.format(t),
                          R.format(R.one()));
            });

  suite.law("affine.pushforward-closed", false, PRX, MXY,
            [&](const Dist& p, const ElementMap& f) {
              const Coeff t = w_total(
                  R, w_push(R, w_of(p),
                            [&](const Element& x) { return f.apply(x); }));
              if (R.is_one(t)) return ok();
              return fail({{"p", djson(p)}, {"f", map_json(f)}}, R.format(t),
                          R.format(R.one()));
            });

  suite.law("affine.flatten-closed", false, PR2, [&](const Dist& m) {
    const Coeff t = w_total(R, w_flatten(R, w_of(m)));
    if (R.is_one(t)) return ok();
    return fail({{"m", djson(m)}}, R.format(t), R.format(R.one()));
  });

  suite.law("affine.condition-closed", false, PRX, IND,
            [&](const Dist& p, const W& event) {
              const Coeff lambda = w_integrate(R, w_of(p), event);
              const auto inverse = R.try_invert(lambda);
              if (!inverse) return ok();  // nothing to condition on
              const Coeff t = w_total(
                  R, w_scalar(R, w_act(R, w_of(p), event), *inverse));
              if (R.is_one(t)) return ok();
              return fail({{"p", djson(p)}, {"event", w_json(R, event)}},
                          R.format(t), R.format(R.one()));
            });

  // --- library agrees with the oracle --------------------------------------

  suite.law("agree.pushforward", false, DX, MXY,
            [&](const Dist& p, const ElementMap& f) {
              const Dist lib = pushforward(f, p);
              const W oracle = w_push(R, w_of(p), [&](const Element& x) {
                return f.apply(x);
              });
              if (lib == w_dist(R, oracle)) return ok();
              return fail({{"p", djson(p)}, {"f", map_json(f)}},
                          dist_to_json(lib), w_json(R, oracle).dump());
            });

  suite.law("agree.flatten-and-bind", false, T2, [&](const Dist& m) {
    const Dist lib = flatten(m);
    const Dist oracle = w_dist(R, w_flatten(R, w_of(m)));
    std::vector<std::pair<Element, Dist>> rows;
    for (const auto& [key, ow] : m.entries())
      rows.emplace_back(key, dist_from_element(R, key));
    const Dist bound = bind(m, Kernel::from_pairs(std::move(rows)));
    if (lib == oracle && bound == oracle) return ok();
    return fail({{"m", djson(m)}}, dist_to_json(lib), dist_to_json(oracle));
  });

  suite.law("agree.psi-both-routes", false, DX, DY,
            [&](const Dist& p, const Dist& q) {
              const Dist direct = psi(p, q);
              const Dist composite = psi_via_strength(p, q);
              const Dist oracle = w_dist(R, w_psi(R, w_of(p), w_of(q), false));
              const Dist direct_t = psi_tilde(p, q);
              const Dist composite_t = psi_tilde_via_strength(p, q);
              const Dist oracle_t = w_dist(R, w_psi(R, w_of(p), w_of(q), true));
              if (direct == oracle && composite == oracle &&
                  direct_t == oracle_t && composite_t == oracle_t)
                return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)}},
                          dist_to_json(direct), dist_to_json(oracle));
            });

  suite.law("agree.act-both-routes", false, DX, FX,
            [&](const Dist& p, const W& phi) {
              std::vector<std::pair<Element, Coeff>> rows(phi.begin(),
                                                          phi.end());
              const Fn fn(R, ctx.X, std::move(rows));
              const Dist direct = act(p, fn);
              const Dist composite = act_via_strength(p, fn);
              const Dist oracle = w_dist(R, w_act(R, w_of(p), phi));
              if (direct == oracle && composite == oracle) return ok();
              return fail({{"p", djson(p)}, {"phi", w_json(R, phi)}},
                          dist_to_json(direct), dist_to_json(oracle));
            });

  suite.law("agree.integrate-both-routes", false, DX, FX,
            [&](const Dist& p, const W& phi) {
              std::vector<std::pair<Element, Coeff>> rows(phi.begin(),
                                                          phi.end());
              const Fn fn(R, ctx.X, std::move(rows));
              const Coeff direct = integrate(p, fn);
              const Coeff composite = integrate_via_flatten(p, fn);
              const Coeff oracle = w_integrate(R, w_of(p), phi);
              if (direct == oracle && composite == oracle) return ok();
              return fail({{"p", djson(p)}, {"phi", w_json(R, phi)}},
                          R.format(direct), R.format(oracle));
            });

  suite.law("agree.convolve", false, DX, DY, [&](const Dist& p, const Dist& q) {
    // convolve along the first projection; any total binary map will do
    std::vector<std::pair<Element, Element>> rows;
    for (const auto& x : ctx.X.elements())
      for (const auto& y : ctx.Y.elements())
        rows.emplace_back(Element::pair(x, y), x);
    const ElementMap m = ElementMap::from_pairs(std::move(rows));
    const Dist lib = convolve(p, q, m);
    const W oracle = w_push(R, w_psi(R, w_of(p), w_of(q), false),
                            [&](const Element& e) { return m.apply(e); });
    if (lib == w_dist(R, oracle)) return ok();
    return fail({{"p", djson(p)}, {"q", djson(q)}}, dist_to_json(lib),
                w_json(R, oracle).dump());
  });

  suite.law("agree.module-and-total", false, DX, DX, SC,
            [&](const Dist& p, const Dist& q, const Coeff& a) {
              const bool adds =
                  add(p, q) == w_dist(R, w_add(R, w_of(p), w_of(q)));
              const bool scales =
                  scalar_mul(p, a) == w_dist(R, w_scalar(R, w_of(p), a));
              const bool totals = total(p) == w_total(R, w_of(p));
              if (adds && scales && totals) return ok();
              return fail({{"p", djson(p)}, {"q", djson(q)},
                           {"a", R.format(a)}},
                          "library", "oracle");
            });

  suite.law("agree.biproduct", false, DXY, [&](const Dist& p) {
    const auto [lib_l, lib_r] = phi_split(p);
    const auto [ora_l, ora_r] = w_split(w_of(p));
    const bool split_same =
        lib_l == w_dist(R, ora_l) && lib_r == w_dist(R, ora_r);
    const bool merge_same =
        phi_merge(lib_l, lib_r) == w_dist(R, w_merge(ora_l, ora_r));
    if (split_same && merge_same) return ok();
    return fail({{"p", djson(p)}}, "library", "oracle");
  });

  return suite.take();
}

}  // namespace rigdist
