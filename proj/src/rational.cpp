#include "asdim/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

#include "asdim/errors.hpp"

namespace asdim {

namespace {

using int128 = __int128;

int128 abs128(int128 v) { return v < 0 ? -v : v; }

int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    fail(ErrorCode::Overflow, "rational out of 64-bit range");
  }
  return static_cast<long long>(v);
}

// Reduces n/d and stores it; d must be nonzero.
void assign_reduced(int128 n, int128 d, long long& out_num, long long& out_den) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    out_num = 0;
    out_den = 1;
    return;
  }
  int128 g = gcd128(n, d);
  out_num = narrow(n / g);
  out_den = narrow(d / g);
}

}  // namespace

Rational::Rational(long long n, long long d) {
  assign_reduced(n, d, num_, den_);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> long long {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      fail(ErrorCode::ParseError, "bad rational literal");
    }
    return value;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    return Rational(parse_int(text));
  }
  long long n = parse_int(text.substr(0, slash));
  long long d = parse_int(text.substr(slash + 1));
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator");
  return Rational(n, d);
}

long long Rational::floor() const {
  if (num_ >= 0) return num_ / den_;
  return -((-num_ + den_ - 1) / den_);
}

long long Rational::ceil() const {
  if (num_ >= 0) return (num_ + den_ - 1) / den_;
  return -((-num_) / den_);
}

Rational Rational::abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational& Rational::operator+=(const Rational& o) {
  if (den_ == o.den_) {
    // Common fast path for masses sharing one denominator.
    assign_reduced(static_cast<int128>(num_) + o.num_, den_, num_, den_);
    return *this;
  }
  int128 n = static_cast<int128>(num_) * o.den_ + static_cast<int128>(o.num_) * den_;
  int128 d = static_cast<int128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  if (den_ == o.den_) {
    assign_reduced(static_cast<int128>(num_) - o.num_, den_, num_, den_);
    return *this;
  }
  int128 n = static_cast<int128>(num_) * o.den_ - static_cast<int128>(o.num_) * den_;
  int128 d = static_cast<int128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  int128 n = static_cast<int128>(num_) * o.num_;
  int128 d = static_cast<int128>(den_) * o.den_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.num_ == 0) fail(ErrorCode::InvalidArgument, "division by zero");
  int128 n = static_cast<int128>(num_) * o.den_;
  int128 d = static_cast<int128>(den_) * o.num_;
  assign_reduced(n, d, num_, den_);
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  int128 lhs = static_cast<int128>(a.num_) * b.den_;
  int128 rhs = static_cast<int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidEdge: return "InvalidEdge";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotAnEdge: return "NotAnEdge";
    case ErrorCode::NotAcyclic: return "NotAcyclic";
    case ErrorCode::DegreeBound: return "DegreeBound";
    case ErrorCode::EmptyFolnerSet: return "EmptyFolnerSet";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::InvalidMass: return "InvalidMass";
    case ErrorCode::NotASubrelation: return "NotASubrelation";
    case ErrorCode::DichotomyViolation: return "DichotomyViolation";
    case ErrorCode::ConditionsFailed: return "ConditionsFailed";
    case ErrorCode::AnchorConflict: return "AnchorConflict";
    case ErrorCode::NotFunctionalGraph: return "NotFunctionalGraph";
    case ErrorCode::InsufficientInvariance: return "InsufficientInvariance";
    case ErrorCode::NotNested: return "NotNested";
    case ErrorCode::IncompletePartition: return "IncompletePartition";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Error";
}

}  // namespace asdim
