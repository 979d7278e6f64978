#include "pst/gaussian.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace pst {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  for (char c : text) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+')) {
      throw std::invalid_argument("malformed rational '" + text + "'");
    }
  }
  Rational q;
  if (q.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw std::invalid_argument("malformed rational '" + text + "'");
  }
  if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
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

GaussianRational GaussianRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (sgn(im_) == 0) return {Rational(1) / re_};
  Rational norm = re_ * re_ + im_ * im_;
  return {re_ / norm, -im_ / norm};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  return *this *= o.inverse();
}

std::string to_string(const GaussianRational& z) {
  if (z.is_real()) return z.re().get_str();
  std::string im = z.im().get_str() + " i";
  if (sgn(z.re()) == 0) return im;
  if (sgn(z.im()) > 0) return z.re().get_str() + "+" + im;
  return z.re().get_str() + im;
}

GaussianRational parse_gaussian(const std::string& text) {
  const std::string suffix = " i";
  if (text.size() < suffix.size() || text.compare(text.size() - suffix.size(), suffix.size(), suffix) != 0) {
    return {parse_rational(text)};
  }
  std::string body = text.substr(0, text.size() - suffix.size());
  // The real/imaginary split is the last sign that is not the leading one.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if (body[k] == '+' || body[k] == '-') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {Rational(0), parse_rational(body)};
  return {parse_rational(body.substr(0, split)), parse_rational(body.substr(split))};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << to_string(z); }

}  // namespace pst
