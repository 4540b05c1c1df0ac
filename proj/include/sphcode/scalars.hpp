#pragma once

// Exact arithmetic over Q and real quadratic extensions Q(sqrt(r)).
// A QuadScalar holds a + b*sqrt(r) with arbitrary-precision rational a, b
// and a fixed square-free integer radicand r. Mixed radicands are rejected.

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace sphcode {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class field_mismatch : public std::domain_error {
 public:
  explicit field_mismatch(const std::string& what) : std::domain_error(what) {}
};

namespace detail {

// Pull square factors out of r, returning (squarefree part, extracted root).
inline std::pair<std::int64_t, std::int64_t> squarefree_split(std::int64_t r) {
  std::int64_t root = 1;
  for (std::int64_t p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      root *= p;
    }
  }
  return {r, root};
}

}  // namespace detail

class QuadScalar {
 public:
  QuadScalar() : a_(0), b_(0), r_(0) {}
  QuadScalar(long long n) : a_(n), b_(0), r_(0) {}  // NOLINT: implicit by design
  QuadScalar(Rational a) : a_(std::move(a)), b_(0), r_(0) {}

  QuadScalar(Rational a, Rational b, std::int64_t r)
      : a_(std::move(a)), b_(std::move(b)), r_(r) {
    if (r_ < 0) throw std::domain_error("QuadScalar: negative radicand");
    canonicalize();
  }

  // sqrt(q) for rational q >= 0, as an exact QuadScalar.
  static QuadScalar sqrt_rational(const Rational& q) {
    if (q < 0) throw std::domain_error("QuadScalar: sqrt of negative rational");
    if (q == 0) return QuadScalar();
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    const BigInt rad_big = num * den;
    if (rad_big > BigInt(std::int64_t(1) << 62))
      throw std::domain_error("QuadScalar: radicand too large");
    auto [r, root] = detail::squarefree_split(rad_big.convert_to<std::int64_t>());
    // sqrt(num/den) = root*sqrt(r)/den
    return QuadScalar(Rational(0), Rational(root, den), r);
  }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_coeff() const { return b_; }
  std::int64_t radicand() const { return r_; }

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  QuadScalar operator-() const {
    QuadScalar out;
    out.a_ = -a_;
    out.b_ = -b_;
    out.r_ = r_;
    return out;
  }

  QuadScalar& operator+=(const QuadScalar& o) {
    const std::int64_t r = merged_radicand(o);
    a_ += o.a_;
    b_ += o.b_;
    r_ = r;
    canonicalize();
    return *this;
  }
  QuadScalar& operator-=(const QuadScalar& o) { return *this += -o; }

  QuadScalar& operator*=(const QuadScalar& o) {
    const std::int64_t r = merged_radicand(o);
    Rational a = a_ * o.a_ + b_ * o.b_ * r;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    r_ = r;
    canonicalize();
    return *this;
  }

  QuadScalar& operator/=(const QuadScalar& o) {
    if (o.is_zero()) throw std::domain_error("QuadScalar: division by zero");
    const std::int64_t r = merged_radicand(o);
    // multiply by the conjugate; norm = a^2 - b^2 r is a nonzero rational
    Rational norm = o.a_ * o.a_ - o.b_ * o.b_ * r;
    Rational a = (a_ * o.a_ - b_ * o.b_ * r) / norm;
    Rational b = (b_ * o.a_ - a_ * o.b_) / norm;
    a_ = std::move(a);
    b_ = std::move(b);
    r_ = r;
    canonicalize();
    return *this;
  }

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  // Exact sign of a + b*sqrt(r): decided by the signs of a, b and by
  // comparing a^2 against b^2 r, never by floating point.
  int sign() const {
    const int sa = a_.sign();
    const int sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    const Rational lhs = a_ * a_;
    const Rational rhs = b_ * b_ * r_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
  }

  QuadScalar abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.r_ == y.r_;
  }
  friend bool operator!=(const QuadScalar& x, const QuadScalar& y) { return !(x == y); }
  friend bool operator<(const QuadScalar& x, const QuadScalar& y) {
    return (x - y).sign() < 0;
  }
  friend bool operator>(const QuadScalar& x, const QuadScalar& y) { return y < x; }
  friend bool operator<=(const QuadScalar& x, const QuadScalar& y) { return !(y < x); }
  friend bool operator>=(const QuadScalar& x, const QuadScalar& y) { return !(x < y); }

  double to_double() const {
    double v = a_.convert_to<double>();
    if (b_ != 0) v += b_.convert_to<double>() * std::sqrt(double(r_));
    return v;
  }

  // Canonical string form: "p/q" or "p/q+s/t*sqrt(r)" (denominator 1 omitted,
  // negative radical coefficient rendered with '-').
  std::string str() const {
    std::string out = rational_str(a_);
    if (b_ != 0) {
      Rational babs = b_ < 0 ? Rational(-b_) : b_;
      out += (b_ < 0 ? "-" : "+");
      out += rational_str(babs);
      out += "*sqrt(" + std::to_string(r_) + ")";
    }
    return out;
  }

  static QuadScalar parse(std::string_view s);

 private:
  Rational a_, b_;
  std::int64_t r_;

  void canonicalize() {
    if (r_ == 1) {
      a_ += b_;
      b_ = 0;
    }
    if (r_ == 0) b_ = 0;
    if (b_ == 0) {
      r_ = 0;
      return;
    }
    auto [r, root] = detail::squarefree_split(r_);
    if (root != 1) {
      b_ *= root;
      r_ = r;
      canonicalize();
    }
  }

  std::int64_t merged_radicand(const QuadScalar& o) const {
    if (r_ == 0 || o.r_ == 0 || r_ == o.r_) return r_ == 0 ? o.r_ : r_;
    throw field_mismatch("QuadScalar: radicand mismatch (" + std::to_string(r_) +
                         " vs " + std::to_string(o.r_) + ")");
  }

  static std::string rational_str(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    std::string out = num.str();
    if (den != 1) out += "/" + den.str();
    return out;
  }
};

namespace detail {

inline Rational parse_rational(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("scalar parse: empty rational");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(s)));
    BigInt num{std::string(s.substr(0, slash))};
    BigInt den{std::string(s.substr(slash + 1))};
    if (den == 0) throw std::invalid_argument("scalar parse: zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("scalar parse: bad rational '" + std::string(s) + "'");
  }
}

}  // namespace detail

inline QuadScalar QuadScalar::parse(std::string_view s) {
  const auto star = s.find("*sqrt(");
  if (star == std::string_view::npos) {
    return QuadScalar(detail::parse_rational(s));
  }
  if (s.empty() || s.back() != ')')
    throw std::invalid_argument("scalar parse: malformed '" + std::string(s) + "'");
  std::string_view rad_sv = s.substr(star + 6, s.size() - star - 7);
  std::int64_t r = 0;
  try {
    r = std::stoll(std::string(rad_sv));
  } catch (const std::exception&) {
    throw std::invalid_argument("scalar parse: bad radicand '" + std::string(rad_sv) + "'");
  }
  // split "<rational><sign><rational>*sqrt(r)"; the split sign is the last
  // +/- before '*' that is not a leading sign
  std::string_view head = s.substr(0, star);
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' ) {
      split = i;
      break;
    }
  }
  Rational a(0), b(0);
  if (split == std::string_view::npos) {
    b = detail::parse_rational(head);
  } else {
    a = detail::parse_rational(head.substr(0, split));
    b = detail::parse_rational(head.substr(split + 1));
    if (head[split] == '-') b = -b;
  }
  return QuadScalar(std::move(a), std::move(b), r);
}

}  // namespace sphcode
