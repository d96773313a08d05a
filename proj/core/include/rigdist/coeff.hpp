#ifndef RIGDIST_COEFF_HPP
#define RIGDIST_COEFF_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <variant>

#include "rigdist/errors.hpp"

namespace rigdist {

// Checked 64-bit arithmetic. All coefficient math is exact; an overflow is a
// hard error rather than a silent wrap.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_sub(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Exact rational, stored in lowest terms with positive denominator.
struct Rat {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rat make(std::int64_t num, std::int64_t den);
  static Rat whole(std::int64_t n) { return Rat{n, 1}; }

  friend bool operator==(const Rat&, const Rat&) = default;
};

Rat rat_add(const Rat& a, const Rat& b);
Rat rat_mul(const Rat& a, const Rat& b);
int rat_cmp(const Rat& a, const Rat& b);
std::string rat_text(const Rat& r);
Rat rat_parse(const std::string& text);

// Min-plus value: a nonnegative rational, or the absorbing +infinity.
struct TropVal {
  bool infinite = true;
  Rat finite{};  // meaningful only when !infinite

  static TropVal inf() { return TropVal{true, Rat{}}; }
  static TropVal of(const Rat& r);

  friend bool operator==(const TropVal& a, const TropVal& b) {
    return a.infinite == b.infinite && (a.infinite || a.finite == b.finite);
  }
};

// 2x2 matrix with nonnegative integer entries, row-major.
struct Mat2 {
  std::array<std::int64_t, 4> e{0, 0, 0, 0};

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

// One coefficient of some rig. Which alternative is live is fixed by the rig
// that produced it; cross-rig values never meet in a well-formed program.
class Coeff {
 public:
  using Value = std::variant<std::int64_t, Rat, bool, TropVal, Mat2>;

  Coeff() : v_(std::int64_t{0}) {}
  explicit Coeff(std::int64_t n) : v_(n) {}
  explicit Coeff(Rat r) : v_(r) {}
  explicit Coeff(bool b) : v_(b) {}
  explicit Coeff(TropVal t) : v_(t) {}
  explicit Coeff(Mat2 m) : v_(m) {}

  const Value& value() const { return v_; }

  std::int64_t as_int() const { return std::get<std::int64_t>(v_); }
  const Rat& as_rat() const { return std::get<Rat>(v_); }
  bool as_bool() const { return std::get<bool>(v_); }
  const TropVal& as_trop() const { return std::get<TropVal>(v_); }
  const Mat2& as_mat2() const { return std::get<Mat2>(v_); }

  friend bool operator==(const Coeff&, const Coeff&) = default;

  // Canonical total order, used only for deterministic pools and witnesses.
  int compare(const Coeff& other) const;
  friend bool operator<(const Coeff& a, const Coeff& b) {
    return a.compare(b) < 0;
  }

 private:
  Value v_;
};

}  // namespace rigdist

#endif
