#include "rigdist/rig.hpp"

#include <algorithm>
#include <random>

namespace rigdist {

namespace detail {

class RigOps {
 public:
  explicit RigOps(std::string name, bool commutative)
      : name_(std::move(name)), commutative_(commutative) {}
  virtual ~RigOps() = default;

  const std::string& name() const { return name_; }
  bool commutative() const { return commutative_; }

  virtual Coeff zero() const = 0;
  virtual Coeff one() const = 0;
  virtual Coeff add(const Coeff& a, const Coeff& b) const = 0;
  virtual Coeff mul(const Coeff& a, const Coeff& b) const = 0;
  virtual std::optional<std::vector<Coeff>> enumerate() const {
    return std::nullopt;
  }
  virtual std::optional<Coeff> try_invert(const Coeff&) const {
    return std::nullopt;
  }
  virtual std::string format(const Coeff& a) const = 0;
  virtual Coeff parse(const std::string& text) const = 0;

  // Small fixed grid (zero excluded) backing seeded pools for rigs without a
  // finite carrier.
  virtual std::vector<Coeff> grid() const = 0;

 private:
  std::string name_;
  bool commutative_;
};

namespace {

std::int64_t parse_nonneg(const std::string& text) {
  const Rat r = rat_parse(text);
  if (r.den != 1 || r.num < 0)
    raise(Errc::parse, "expected a natural number, got '" + text + "'");
  return r.num;
}

class NatRig final : public RigOps {
 public:
  NatRig() : RigOps("nat", true) {}
  Coeff zero() const override { return Coeff(std::int64_t{0}); }
  Coeff one() const override { return Coeff(std::int64_t{1}); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    return Coeff(checked_add(a.as_int(), b.as_int()));
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    return Coeff(checked_mul(a.as_int(), b.as_int()));
  }
  std::optional<Coeff> try_invert(const Coeff& a) const override {
    if (a.as_int() == 1) return one();
    return std::nullopt;
  }
  std::string format(const Coeff& a) const override {
    return std::to_string(a.as_int());
  }
  Coeff parse(const std::string& text) const override {
    return Coeff(parse_nonneg(text));
  }
  std::vector<Coeff> grid() const override {
    return {Coeff(std::int64_t{1}), Coeff(std::int64_t{2}),
            Coeff(std::int64_t{3})};
  }
};

class RationalRig final : public RigOps {
 public:
  RationalRig() : RigOps("rational", true) {}
  Coeff zero() const override { return Coeff(Rat{0, 1}); }
  Coeff one() const override { return Coeff(Rat{1, 1}); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    return Coeff(rat_add(a.as_rat(), b.as_rat()));
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    return Coeff(rat_mul(a.as_rat(), b.as_rat()));
  }
  std::optional<Coeff> try_invert(const Coeff& a) const override {
    const Rat& r = a.as_rat();
    if (r.num == 0) return std::nullopt;
    return Coeff(Rat::make(r.den, r.num));
  }
  std::string format(const Coeff& a) const override {
    return rat_text(a.as_rat());
  }
  Coeff parse(const std::string& text) const override {
    return Coeff(rat_parse(text));
  }
  std::vector<Coeff> grid() const override {
    // Numerators -3..3, denominators 1..3; distinct normalized nonzero values.
    std::vector<Coeff> out;
    for (std::int64_t num = -3; num <= 3; ++num) {
      if (num == 0) continue;
      for (std::int64_t den = 1; den <= 3; ++den) {
        const Coeff c{Rat::make(num, den)};
        if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }
};

class BoolRig final : public RigOps {
 public:
  BoolRig() : RigOps("bool", true) {}
  Coeff zero() const override { return Coeff(false); }
  Coeff one() const override { return Coeff(true); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    return Coeff(a.as_bool() || b.as_bool());
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    return Coeff(a.as_bool() && b.as_bool());
  }
  std::optional<std::vector<Coeff>> enumerate() const override {
    return std::vector<Coeff>{Coeff(false), Coeff(true)};
  }
  std::optional<Coeff> try_invert(const Coeff& a) const override {
    if (a.as_bool()) return one();
    return std::nullopt;
  }
  std::string format(const Coeff& a) const override {
    return a.as_bool() ? "true" : "false";
  }
  Coeff parse(const std::string& text) const override {
    if (text == "true") return Coeff(true);
    if (text == "false") return Coeff(false);
    raise(Errc::parse, "expected true/false, got '" + text + "'");
  }
  std::vector<Coeff> grid() const override { return {Coeff(true)}; }
};

class TropicalRig final : public RigOps {
 public:
  TropicalRig() : RigOps("tropical", true) {}
  Coeff zero() const override { return Coeff(TropVal::inf()); }
  Coeff one() const override { return Coeff(TropVal::of(Rat{0, 1})); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    const auto& x = a.as_trop();
    const auto& y = b.as_trop();
    if (x.infinite) return b;
    if (y.infinite) return a;
    return rat_cmp(x.finite, y.finite) <= 0 ? a : b;  // min
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    const auto& x = a.as_trop();
    const auto& y = b.as_trop();
    if (x.infinite || y.infinite) return zero();
    return Coeff(TropVal::of(rat_add(x.finite, y.finite)));  // plus
  }
  std::optional<Coeff> try_invert(const Coeff& a) const override {
    // Only 0 has a min-plus reciprocal inside the nonnegative carrier.
    const auto& x = a.as_trop();
    if (!x.infinite && x.finite == Rat{0, 1}) return one();
    return std::nullopt;
  }
  std::string format(const Coeff& a) const override {
    const auto& x = a.as_trop();
    return x.infinite ? "inf" : rat_text(x.finite);
  }
  Coeff parse(const std::string& text) const override {
    if (text == "inf") return zero();
    const Rat r = rat_parse(text);
    if (r.num < 0)
      raise(Errc::parse, "tropical value must be nonnegative: '" + text + "'");
    return Coeff(TropVal::of(r));
  }
  std::vector<Coeff> grid() const override {
    std::vector<Coeff> out;
    for (const auto& r : {Rat{0, 1}, Rat{1, 2}, Rat{1, 1}, Rat{2, 1}, Rat{3, 1}})
      out.push_back(Coeff(TropVal::of(r)));
    return out;
  }
};

class ModRig final : public RigOps {
 public:
  explicit ModRig(std::uint32_t n)
      : RigOps("mod:" + std::to_string(n), true), n_(n) {}
  Coeff zero() const override { return Coeff(std::int64_t{0}); }
  Coeff one() const override { return Coeff(std::int64_t{1 % n_}); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    return Coeff((a.as_int() + b.as_int()) % n_);
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    return Coeff((a.as_int() * b.as_int()) % n_);
  }
  std::optional<std::vector<Coeff>> enumerate() const override {
    std::vector<Coeff> out;
    for (std::int64_t v = 0; v < n_; ++v) out.push_back(Coeff(v));
    return out;
  }
  std::optional<Coeff> try_invert(const Coeff& a) const override {
    // Extended gcd; inverse exists iff gcd(a, n) == 1.
    std::int64_t r0 = n_, r1 = a.as_int(), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const std::int64_t q = r0 / r1;
      std::int64_t t = r0 - q * r1;
      r0 = r1;
      r1 = t;
      t = s0 - q * s1;
      s0 = s1;
      s1 = t;
    }
    if (r0 != 1) return std::nullopt;
    return Coeff(((s0 % n_) + n_) % n_);
  }
  std::string format(const Coeff& a) const override {
    return std::to_string(a.as_int());
  }
  Coeff parse(const std::string& text) const override {
    return Coeff(parse_nonneg(text) % n_);
  }
  std::vector<Coeff> grid() const override {
    std::vector<Coeff> out;
    for (std::int64_t v = 1; v < n_; ++v) out.push_back(Coeff(v));
    return out;
  }

 private:
  std::int64_t n_;
};

class Mat2Rig final : public RigOps {
 public:
  explicit Mat2Rig(std::uint32_t cap)
      : RigOps("mat2:" + std::to_string(cap), false), cap_(cap) {}
  Coeff zero() const override { return Coeff(Mat2{}); }
  Coeff one() const override { return Coeff(Mat2{{1, 0, 0, 1}}); }
  Coeff add(const Coeff& a, const Coeff& b) const override {
    const auto& x = a.as_mat2().e;
    const auto& y = b.as_mat2().e;
    Mat2 r;
    for (int i = 0; i < 4; ++i) r.e[i] = checked_add(x[i], y[i]);
    return Coeff(r);
  }
  Coeff mul(const Coeff& a, const Coeff& b) const override {
    const auto& x = a.as_mat2().e;
    const auto& y = b.as_mat2().e;
    Mat2 r;
    r.e[0] = checked_add(checked_mul(x[0], y[0]), checked_mul(x[1], y[2]));
    r.e[1] = checked_add(checked_mul(x[0], y[1]), checked_mul(x[1], y[3]));
    r.e[2] = checked_add(checked_mul(x[2], y[0]), checked_mul(x[3], y[2]));
    r.e[3] = checked_add(checked_mul(x[2], y[1]), checked_mul(x[3], y[3]));
    return Coeff(r);
  }
  std::optional<std::vector<Coeff>> enumerate() const override {
    // Entry grid 0..cap; products may leave the grid, the ops stay total.
    std::vector<Coeff> out;
    const std::int64_t hi = cap_;
    Mat2 m;
    for (m.e[0] = 0; m.e[0] <= hi; ++m.e[0])
      for (m.e[1] = 0; m.e[1] <= hi; ++m.e[1])
        for (m.e[2] = 0; m.e[2] <= hi; ++m.e[2])
          for (m.e[3] = 0; m.e[3] <= hi; ++m.e[3]) out.push_back(Coeff(m));
    return out;
  }
  std::string format(const Coeff& a) const override {
    const auto& e = a.as_mat2().e;
    return "[[" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "],[" +
           std::to_string(e[2]) + "," + std::to_string(e[3]) + "]]";
  }
  Coeff parse(const std::string& text) const override {
    std::string s;
    for (char c : text)
      if (c != ' ') s.push_back(c);
    if (s.size() < 13 || s.substr(0, 2) != "[[" ||
        s.substr(s.size() - 2) != "]]")
      raise(Errc::parse, "bad matrix '" + text + "'");
    const auto mid = s.find("],[");
    if (mid == std::string::npos) raise(Errc::parse, "bad matrix '" + text + "'");
    const std::string row0 = s.substr(2, mid - 2);
    const std::string row1 = s.substr(mid + 3, s.size() - 2 - (mid + 3));
    Mat2 m;
    int i = 0;
    for (const auto& row : {row0, row1}) {
      const auto comma = row.find(',');
      if (comma == std::string::npos)
        raise(Errc::parse, "bad matrix '" + text + "'");
      m.e[i++] = parse_nonneg(row.substr(0, comma));
      m.e[i++] = parse_nonneg(row.substr(comma + 1));
    }
    return Coeff(m);
  }
  std::vector<Coeff> grid() const override {
    auto all = *enumerate();
    std::erase(all, zero());
    return all;
  }

 private:
  std::uint32_t cap_;
};

}  // namespace

}  // namespace detail

const std::string& Rig::name() const { return ops_->name(); }
bool Rig::commutative() const { return ops_->commutative(); }
Coeff Rig::zero() const { return ops_->zero(); }
Coeff Rig::one() const { return ops_->one(); }
Coeff Rig::add(const Coeff& a, const Coeff& b) const { return ops_->add(a, b); }
Coeff Rig::mul(const Coeff& a, const Coeff& b) const { return ops_->mul(a, b); }

Coeff Rig::pow(const Coeff& a, unsigned n) const {
  Coeff r = one();
  for (unsigned i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::optional<std::vector<Coeff>> Rig::enumerate() const {
  return ops_->enumerate();
}

std::optional<Coeff> Rig::try_invert(const Coeff& a) const {
  return ops_->try_invert(a);
}

std::string Rig::format(const Coeff& a) const { return ops_->format(a); }
Coeff Rig::parse(const std::string& text) const { return ops_->parse(text); }

std::vector<Coeff> Rig::sample_pool(std::size_t count, std::uint64_t seed) const {
  std::vector<Coeff> values;
  if (auto all = enumerate()) {
    for (const auto& c : *all)
      if (!is_zero(c)) values.push_back(c);
  } else {
    values = ops_->grid();
  }
  if (count >= values.size()) return values;
  // Deterministic Fisher-Yates prefix; std::shuffle is implementation-defined.
  std::mt19937_64 eng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(eng() % (values.size() - i));
    std::swap(values[i], values[j]);
  }
  values.resize(count);
  std::sort(values.begin(), values.end());
  return values;
}

Rig rig_natural() {
  static const Rig r{std::make_shared<detail::NatRig>()};
  return r;
}

Rig rig_rational() {
  static const Rig r{std::make_shared<detail::RationalRig>()};
  return r;
}

Rig rig_boolean() {
  static const Rig r{std::make_shared<detail::BoolRig>()};
  return r;
}

Rig rig_tropical() {
  static const Rig r{std::make_shared<detail::TropicalRig>()};
  return r;
}

Rig rig_mod(std::uint32_t n) {
  if (n < 2) raise(Errc::parse, "mod rig needs n >= 2");
  return Rig{std::make_shared<detail::ModRig>(n)};
}

Rig rig_matrix2_nat(std::uint32_t cap) {
  return Rig{std::make_shared<detail::Mat2Rig>(cap)};
}

Rig rig_by_name(const std::string& name) {
  if (name == "nat") return rig_natural();
  if (name == "rational") return rig_rational();
  if (name == "bool") return rig_boolean();
  if (name == "tropical") return rig_tropical();
  const auto colon = name.find(':');
  if (colon != std::string::npos) {
    const std::string head = name.substr(0, colon);
    const std::string arg = name.substr(colon + 1);
    if (head == "mod" || head == "mat2") {
      std::int64_t v = 0;
      try {
        v = rat_parse(arg).num;
        if (rat_parse(arg).den != 1 || v < 0) v = -1;
      } catch (const Error&) {
        v = -1;
      }
      if (v >= 0) {
        if (head == "mod") return rig_mod(static_cast<std::uint32_t>(v));
        return rig_matrix2_nat(static_cast<std::uint32_t>(v));
      }
    }
  }
  raise(Errc::parse, "unknown rig '" + name + "'");
}

namespace {

class AxiomChecker {
 public:
  AxiomChecker(const Rig& rig, RigAxiomReport& report)
      : rig_(rig), report_(report) {}

  void triple(const Coeff& a, const Coeff& b, const Coeff& c) {
    ++report_.cases;
    const auto& r = rig_;
    require("add-associativity", {a, b, c},
            r.add(r.add(a, b), c) == r.add(a, r.add(b, c)));
    require("add-commutativity", {a, b}, r.add(a, b) == r.add(b, a));
    require("add-zero-unit", {a},
            r.add(a, r.zero()) == a && r.add(r.zero(), a) == a);
    require("mul-associativity", {a, b, c},
            r.mul(r.mul(a, b), c) == r.mul(a, r.mul(b, c)));
    require("mul-one-unit", {a}, r.mul(a, r.one()) == a && r.mul(r.one(), a) == a);
    require("left-distributivity", {a, b, c},
            r.mul(a, r.add(b, c)) == r.add(r.mul(a, b), r.mul(a, c)));
    require("right-distributivity", {a, b, c},
            r.mul(r.add(a, b), c) == r.add(r.mul(a, c), r.mul(b, c)));
    require("zero-annihilates", {a},
            r.is_zero(r.mul(a, r.zero())) && r.is_zero(r.mul(r.zero(), a)));
    require("mul-commutativity", {a, b}, r.mul(a, b) == r.mul(b, a));
    if (auto inv = r.try_invert(a))
      require("invert-sound", {a}, r.is_one(r.mul(a, *inv)));
  }

 private:
  void require(const char* axiom, std::initializer_list<Coeff> witness,
               bool holds) {
    if (holds) return;
    for (const auto& v : report_.violations)
      if (v.axiom == axiom) return;  // first witness per axiom is enough
    RigAxiomViolation violation;
    violation.axiom = axiom;
    for (const auto& c : witness) violation.witness.push_back(rig_.format(c));
    report_.violations.push_back(std::move(violation));
  }

  const Rig& rig_;
  RigAxiomReport& report_;
};

}  // namespace

RigAxiomReport check_rig_axioms(const Rig& rig, std::size_t budget,
                                std::uint64_t seed) {
  RigAxiomReport report;
  AxiomChecker check(rig, report);
  if (auto all = rig.enumerate()) {
    const std::size_t n = all->size();
    if (n * n * n <= std::max<std::size_t>(budget, 2'000'000)) {
      for (const auto& a : *all)
        for (const auto& b : *all)
          for (const auto& c : *all) check.triple(a, b, c);
      return report;
    }
  }
  std::vector<Coeff> pool = rig.sample_pool(64, seed);
  pool.push_back(rig.zero());
  pool.push_back(rig.one());
  std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t i = 0; i < budget; ++i) {
    const auto& a = pool[eng() % pool.size()];
    const auto& b = pool[eng() % pool.size()];
    const auto& c = pool[eng() % pool.size()];
    check.triple(a, b, c);
  }
  return report;
}

}  // namespace rigdist
