#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "igcount/common.hpp"

namespace igcount {

// Non-negative rational in lowest terms. Influence thresholds are exact;
// every comparison against an integer count goes through cross
// multiplication, never floating point.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(std::int64_t value) : num_(value), den_(1) { validate(); }
  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InputError("rational: zero denominator");
    validate();
    reduce();
  }

  static Rational parse(const std::string& text) {
    auto whole = [&](const std::string& part) {
      std::size_t used = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(part, &used);
      } catch (const std::logic_error&) {
        throw InputError("rational: cannot parse '" + text + "'");
      }
      if (used != part.size())
        throw InputError("rational: cannot parse '" + text + "'");
      return value;
    };
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(whole(text));
    return Rational(whole(text.substr(0, slash)),
                    whole(text.substr(slash + 1)));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  /// Smallest integer t with t >= value; the integer activation threshold.
  std::int64_t ceil() const { return (num_ + den_ - 1) / den_; }

  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ <
           static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  /// max(value - 1, 0), exact. Used by the label-decrement constructions.
  Rational decremented() const {
    if (num_ <= den_) return Rational(0);
    return Rational(num_ - den_, den_);
  }

  /// ceil(value * k) for an integer k >= 0, exact.
  std::int64_t ceil_mul(std::int64_t k) const {
    return (num_ * k + den_ - 1) / den_;
  }

 private:
  void validate() const {
    if (num_ < 0 || den_ < 0) throw InputError("rational: negative value");
  }
  void reduce() {
    auto g = std::gcd(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace igcount
