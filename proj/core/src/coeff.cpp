#include "rigdist/coeff.hpp"

#include <charconv>
#include <numeric>

namespace rigdist {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) raise(Errc::overflow, "add");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) raise(Errc::overflow, "sub");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) raise(Errc::overflow, "mul");
  return r;
}

Rat Rat::make(std::int64_t num, std::int64_t den) {
  if (den == 0) raise(Errc::parse, "rational with zero denominator");
  if (den < 0) {
    num = checked_sub(0, num);
    den = checked_sub(0, den);
  }
  const std::int64_t g = std::gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  return Rat{num, den};
}

Rat rat_add(const Rat& a, const Rat& b) {
  return Rat::make(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                   checked_mul(a.den, b.den));
}

Rat rat_mul(const Rat& a, const Rat& b) {
  return Rat::make(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}

int rat_cmp(const Rat& a, const Rat& b) {
  const std::int64_t lhs = checked_mul(a.num, b.den);
  const std::int64_t rhs = checked_mul(b.num, a.den);
  return lhs < rhs ? -1 : lhs > rhs ? 1 : 0;
}

std::string rat_text(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

std::int64_t parse_i64(std::string_view s) {
  std::int64_t v = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last)
    raise(Errc::parse, "bad integer '" + std::string(s) + "'");
  return v;
}

}  // namespace

Rat rat_parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rat::whole(parse_i64(text));
  return Rat::make(parse_i64(std::string_view(text).substr(0, slash)),
                   parse_i64(std::string_view(text).substr(slash + 1)));
}

TropVal TropVal::of(const Rat& r) {
  if (r.num < 0) raise(Errc::parse, "tropical value must be nonnegative");
  return TropVal{false, r};
}

int Coeff::compare(const Coeff& other) const {
  if (v_.index() != other.v_.index())
    return v_.index() < other.v_.index() ? -1 : 1;
  struct Cmp {
    const Value& rhs;
    int operator()(std::int64_t a) const {
      const auto b = std::get<std::int64_t>(rhs);
      return a < b ? -1 : a > b ? 1 : 0;
    }
    int operator()(const Rat& a) const { return rat_cmp(a, std::get<Rat>(rhs)); }
    int operator()(bool a) const {
      const bool b = std::get<bool>(rhs);
      return a == b ? 0 : (!a ? -1 : 1);
    }
    int operator()(const TropVal& a) const {
      const auto& b = std::get<TropVal>(rhs);
      if (a.infinite != b.infinite) return a.infinite ? 1 : -1;  // inf last
      if (a.infinite) return 0;
      return rat_cmp(a.finite, b.finite);
    }
    int operator()(const Mat2& a) const {
      const auto& b = std::get<Mat2>(rhs);
      for (int i = 0; i < 4; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
      }
      return 0;
    }
  };
  return std::visit(Cmp{other.v_}, v_);
}

}  // namespace rigdist
