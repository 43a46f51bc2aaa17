#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace octlie {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Values that fit in a machine word pair are kept inline;
// anything larger transparently promotes to a GMP rational. All kernel
// arithmetic in this project runs on this type -- there is no floating
// point anywhere.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design
  Rational(std::int64_t n, std::int64_t d);
  explicit Rational(const mpq_class& q);

  Rational(const Rational& o);
  Rational(Rational&& o) noexcept = default;
  Rational& operator=(const Rational& o);
  Rational& operator=(Rational&& o) noexcept = default;
  ~Rational() = default;

  static Rational from_string(const std::string& s);  // "n" or "n/d"

  bool is_zero() const { return big_ ? sgn(*big_) == 0 : num_ == 0; }
  bool is_one() const { return big_ ? *big_ == 1 : (num_ == 1 && den_ == 1); }
  bool is_integer() const;
  bool is_small() const { return big_ == nullptr; }
  int sign() const;

  // Valid only when the value fits; callers gate on fits_int64().
  bool fits_int64() const;
  std::int64_t num_int64() const;
  std::int64_t den_int64() const;

  mpq_class to_mpq() const;
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  Rational abs() const;

 private:
  // Inline representation; ignored when big_ is set.
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::unique_ptr<mpq_class> big_;

  void set_from_i128(__int128 n, __int128 d);
  void promote_set(const mpq_class& q);
  void demote_if_possible();
};

Rational rational_gcd(const Rational& a, const Rational& b);  // of integers

}  // namespace octlie
