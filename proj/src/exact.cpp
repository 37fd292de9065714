#include "orbitlab/exact.hpp"

#include <algorithm>
#include <cctype>

namespace orbitlab {

Rational make_rational(const std::string& num, const std::string& den) {
  // Base 10 explicitly: the default base 0 reads a leading zero as octal.
  const mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  try {
    if (auto slash = s.find('/'); slash != std::string::npos)
      return make_rational(s.substr(0, slash), s.substr(slash + 1));
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      std::string den = "1" + std::string(s.size() - dot - 1, '0');
      if (digits == "-" || digits == "+" || digits.empty()) digits += "0";
      return make_rational(digits, den);
    }
    return make_rational(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(); }

int sign(const Rational& q) { return sgn(q); }

Gaussian& Gaussian::operator+=(const Gaussian& o) {
  re += o.re;
  im += o.im;
  return *this;
}
Gaussian& Gaussian::operator-=(const Gaussian& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}
Gaussian& Gaussian::operator*=(const Gaussian& o) {
  if (o.is_real()) {
    re *= o.re;
    im *= o.re;
    return *this;
  }
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}
Gaussian& Gaussian::operator/=(const Gaussian& o) {
  if (o.is_zero()) throw std::domain_error("Gaussian division by zero");
  if (o.is_real()) {
    re /= o.re;
    im /= o.re;
    return *this;
  }
  Rational n = o.norm();
  Rational r = (re * o.re + im * o.im) / n;
  Rational i = (im * o.re - re * o.im) / n;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
Gaussian operator-(const Gaussian& a) { return {Rational(-a.re), Rational(-a.im)}; }
Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return z.re.get_str();
  if (sgn(z.re) == 0) return z.im.get_str() + "i";
  return z.re.get_str() + (sgn(z.im) > 0 ? "+" : "") + z.im.get_str() + "i";
}

CVec to_complex(const QVec& v) {
  CVec out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

CMatrix to_complex(const QMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Gaussian(m(i, j));
  return out;
}

CMatrix conjugate(const CMatrix& m) {
  CMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).conj();
  return out;
}

CMatrix adjoint(const CMatrix& m) {
  CMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conj();
  return out;
}

}  // namespace orbitlab
