#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "modlie/error.hpp"

namespace modlie {

using Rational = boost::multiprecision::cpp_rational;

class FieldSpec;

// A scalar of some field. Prime-field elements are stored as a canonical
// representative in [0, p); rationals are kept in lowest terms with positive
// denominator (cpp_rational canonicalizes on construction). Arithmetic goes
// through FieldSpec, which knows the modulus.
class Scalar {
 public:
  Scalar() = default;

  static Scalar prime_rep(std::uint32_t r) {
    Scalar s;
    s.v_ = r;
    return s;
  }
  static Scalar rational(Rational q) {
    Scalar s;
    s.v_ = std::move(q);
    return s;
  }

  bool holds_prime_rep() const { return std::holds_alternative<std::uint32_t>(v_); }
  std::uint32_t rep() const { return std::get<std::uint32_t>(v_); }
  const Rational& rat() const { return std::get<Rational>(v_); }

  bool is_zero() const {
    if (holds_prime_rep()) return rep() == 0;
    return rat() == 0;
  }

  bool operator==(const Scalar& o) const { return v_ == o.v_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

 private:
  std::variant<std::uint32_t, Rational> v_{std::uint32_t{0}};
};

class FieldSpec {
 public:
  enum class Kind { prime, rationals };

  static FieldSpec gf(unsigned p);
  static FieldSpec gf2() { return gf(2); }
  static FieldSpec rationals() {
    FieldSpec f;
    f.kind_ = Kind::rationals;
    f.p_ = 0;
    return f;
  }

  Kind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == Kind::prime; }
  bool is_rationals() const { return kind_ == Kind::rationals; }
  bool is_gf2() const { return kind_ == Kind::prime && p_ == 2; }
  unsigned characteristic() const { return kind_ == Kind::prime ? p_ : 0; }
  unsigned p() const { return p_; }

  // "gf2", "gfp:<p>", "Q"
  std::string name() const;
  static FieldSpec parse(std::string_view s);

  Scalar zero() const;
  Scalar one() const;
  Scalar of_int(long long v) const;
  Scalar of_rational(const Rational& q) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  bool operator==(const FieldSpec& o) const {
    return kind_ == o.kind_ && p_ == o.p_;
  }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }

 private:
  Kind kind_ = Kind::prime;
  unsigned p_ = 2;
};

}  // namespace modlie
