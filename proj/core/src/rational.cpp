#include "octlie/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace octlie {

namespace {

constexpr std::int64_t kMaxI64 = INT64_MAX;
constexpr std::int64_t kMinI64 = INT64_MIN;

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_i64(__int128 x) { return x >= kMinI64 && x <= kMaxI64; }

mpz_class mpz_from_i128(__int128 x) {
  bool neg = x < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : x;
  mpz_class hi(static_cast<unsigned long>(u >> 64));
  mpz_class lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
  mpz_class r = (hi << 64) + lo;
  return neg ? mpz_class(-r) : r;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  set_from_i128(n, d);
}

Rational::Rational(const mpq_class& q) {
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("Rational: zero denominator");
  promote_set(q);
  demote_if_possible();
}

Rational::Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
  if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_);
}

Rational& Rational::operator=(const Rational& o) {
  if (this == &o) return *this;
  num_ = o.num_;
  den_ = o.den_;
  big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
  return *this;
}

Rational Rational::from_string(const std::string& s) {
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: bad literal '" + s + "'");
  q.canonicalize();
  return Rational(q);
}

void Rational::set_from_i128(__int128 n, __int128 d) {
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    num_ = 0;
    den_ = 1;
    big_.reset();
    return;
  }
  __int128 g = gcd128(n, d);
  n /= g;
  d /= g;
  if (fits_i64(n) && fits_i64(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
    big_.reset();
  } else {
    mpq_class q(mpz_from_i128(n));
    q /= mpq_class(mpz_from_i128(d));
    big_ = std::make_unique<mpq_class>(std::move(q));
  }
}

void Rational::promote_set(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  big_ = std::make_unique<mpq_class>(std::move(c));
}

void Rational::demote_if_possible() {
  if (!big_) return;
  if (big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p()) {
    num_ = big_->get_num().get_si();
    den_ = big_->get_den().get_si();
    big_.reset();
  }
}

bool Rational::is_integer() const {
  return big_ ? big_->get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(*big_);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

bool Rational::fits_int64() const {
  if (!big_) return true;
  return big_->get_num().fits_slong_p() && big_->get_den().fits_slong_p();
}

std::int64_t Rational::num_int64() const {
  if (!big_) return num_;
  return big_->get_num().get_si();
}

std::int64_t Rational::den_int64() const {
  if (!big_) return den_;
  return big_->get_den().get_si();
}

mpq_class Rational::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(static_cast<long>(0));
  // Construct exactly even for INT64_MIN, which mpq_class(long, long) handles,
  // but denominators are positive so only num_ can be extreme.
  mpq_class n(mpz_from_i128(num_));
  mpq_class d(mpz_from_i128(den_));
  q = n / d;
  return q;
}

std::string Rational::to_string() const {
  if (big_) return big_->get_str();
  std::string s = std::to_string(num_);
  if (den_ != 1) s += "/" + std::to_string(den_);
  return s;
}

Rational Rational::operator-() const {
  Rational r;
  if (big_) {
    r.big_ = std::make_unique<mpq_class>(-*big_);
    r.demote_if_possible();
  } else if (num_ == kMinI64) {
    r.set_from_i128(-static_cast<__int128>(num_), den_);
  } else {
    r.num_ = -num_;
    r.den_ = den_;
  }
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  promote_set(to_mpq() + o.to_mpq());
  demote_if_possible();
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  promote_set(to_mpq() - o.to_mpq());
  demote_if_possible();
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.num_;
    __int128 d = static_cast<__int128>(den_) * o.den_;
    set_from_i128(n, d);
    return *this;
  }
  promote_set(to_mpq() * o.to_mpq());
  demote_if_possible();
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
  if (!big_ && !o.big_) {
    __int128 n = static_cast<__int128>(num_) * o.den_;
    __int128 d = static_cast<__int128>(den_) * o.num_;
    set_from_i128(n, d);
    return *this;
  }
  promote_set(to_mpq() / o.to_mpq());
  demote_if_possible();
  return *this;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational rational_gcd(const Rational& a, const Rational& b) {
  if (!a.is_integer() || !b.is_integer()) {
    throw std::invalid_argument("rational_gcd: integer inputs required");
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), mpz_class(a.to_mpq().get_num()).get_mpz_t(),
          mpz_class(b.to_mpq().get_num()).get_mpz_t());
  return Rational(mpq_class(g));
}

}  // namespace octlie
