#include "modlie/field.hpp"

#include <charconv>

namespace modlie {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = r * base % m;
    base = base * base % m;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

FieldSpec FieldSpec::gf(unsigned p) {
  if (!is_prime(p) || p > 251)
    throw InvalidParameter("field characteristic must be a prime <= 251, got " +
                           std::to_string(p));
  FieldSpec f;
  f.kind_ = Kind::prime;
  f.p_ = p;
  return f;
}

std::string FieldSpec::name() const {
  if (is_rationals()) return "Q";
  if (p_ == 2) return "gf2";
  return "gfp:" + std::to_string(p_);
}

FieldSpec FieldSpec::parse(std::string_view s) {
  if (s == "Q" || s == "q") return rationals();
  if (s == "gf2") return gf(2);
  if (s.rfind("gfp:", 0) == 0) {
    unsigned p = 0;
    auto body = s.substr(4);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc{} || ptr != body.data() + body.size())
      throw ParseError("bad field name: " + std::string(s));
    return gf(p);
  }
  throw ParseError("bad field name: " + std::string(s));
}

Scalar FieldSpec::zero() const {
  return is_prime_field() ? Scalar::prime_rep(0) : Scalar::rational(Rational(0));
}

Scalar FieldSpec::one() const {
  return is_prime_field() ? Scalar::prime_rep(1 % p_) : Scalar::rational(Rational(1));
}

Scalar FieldSpec::of_int(long long v) const {
  if (is_rationals()) return Scalar::rational(Rational(v));
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::prime_rep(static_cast<std::uint32_t>(r));
}

Scalar FieldSpec::of_rational(const Rational& q) const {
  if (is_rationals()) return Scalar::rational(q);
  // Reduce numerator/denominator mod p; denominator must be invertible.
  Rational num = numerator(q), den = denominator(q);
  auto redc = [&](const boost::multiprecision::cpp_int& z) {
    boost::multiprecision::cpp_int r = z % p_;
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  };
  std::uint32_t d = redc(den.convert_to<boost::multiprecision::cpp_int>());
  if (d == 0) throw InvalidParameter("rational has no image in GF(" + std::to_string(p_) + ")");
  Scalar n = Scalar::prime_rep(redc(num.convert_to<boost::multiprecision::cpp_int>()));
  return div(n, Scalar::prime_rep(d));
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t s = a.rep() + b.rep();
    if (s >= p_) s -= p_;
    return Scalar::prime_rep(s);
  }
  return Scalar::rational(a.rat() + b.rat());
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (is_prime_field()) {
    std::uint32_t s = a.rep() + p_ - b.rep();
    if (s >= p_) s -= p_;
    return Scalar::prime_rep(s);
  }
  return Scalar::rational(a.rat() - b.rat());
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (is_prime_field())
    return Scalar::prime_rep(static_cast<std::uint32_t>(
        std::uint64_t(a.rep()) * b.rep() % p_));
  return Scalar::rational(a.rat() * b.rat());
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (is_prime_field())
    return a.rep() == 0 ? a : Scalar::prime_rep(p_ - a.rep());
  return Scalar::rational(-a.rat());
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (a.is_zero()) throw InvalidParameter("division by zero");
  if (is_prime_field()) return Scalar::prime_rep(mod_pow(a.rep(), p_ - 2, p_));
  return Scalar::rational(Rational(1) / a.rat());
}

}  // namespace modlie
