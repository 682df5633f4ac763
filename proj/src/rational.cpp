#include "gaussvd/rational.hpp"

#include <cctype>
#include <ostream>

namespace gaussvd {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::precondition: return "precondition";
    case Errc::parse: return "parse";
    case Errc::boundary_ambiguity: return "boundary_ambiguity";
    case Errc::degenerate: return "degenerate";
    case Errc::hypothesis: return "hypothesis";
    case Errc::infeasible: return "infeasible";
    case Errc::theorem_satisfied: return "theorem_satisfied";
    case Errc::internal: return "internal";
  }
  return "unknown";
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, std::size_t pos, const char* why) {
  throw Error(Errc::parse, "malformed rational \"" + std::string(text) + "\" at position " +
                               std::to_string(pos) + ": " + why);
}

std::size_t scan_digits(std::string_view text, std::size_t pos) {
  std::size_t start = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) parse_fail(text, pos, "expected a digit");
  return pos;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  std::size_t num_end = scan_digits(text, pos);
  std::string num(text.substr(0, num_end));
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  std::string den = "1";
  pos = num_end;
  if (pos < text.size()) {
    if (text[pos] != '/') parse_fail(text, pos, "unexpected character");
    std::size_t den_end = scan_digits(text, pos + 1);
    if (den_end != text.size()) parse_fail(text, den_end, "trailing characters");
    den = std::string(text.substr(pos + 1, den_end - pos - 1));
  }
  mpz_class n(num, 10);
  mpz_class d(den, 10);
  if (d == 0) parse_fail(text, pos + 1, "zero denominator");
  Rational out(n, d);
  out.canonicalize();
  return out;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Rational& value) { return value.get_d(); }

GaussianRational GaussianRational::inverse() const {
  require(!is_zero(), Errc::invalid_argument, "inverse of zero Gaussian rational");
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  if (sgn(o.im_) == 0) {
    require(sgn(o.re_) != 0, Errc::invalid_argument, "division by zero Gaussian rational");
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

int compare(const GaussianRational& a, const GaussianRational& b) {
  int c = cmp(a.re_, b.re_);
  if (c != 0) return c < 0 ? -1 : 1;
  c = cmp(a.im_, b.im_);
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string GaussianRational::to_string() const {
  if (sgn(im_) == 0) return gaussvd::to_string(re_);
  std::string imag;
  if (im_ == 1) {
    imag = "i";
  } else if (im_ == -1) {
    imag = "-i";
  } else {
    imag = gaussvd::to_string(im_) + "i";
  }
  if (sgn(re_) == 0) return imag;
  return "(" + gaussvd::to_string(re_) + (sgn(im_) > 0 ? "+" : "") + imag + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace gaussvd
