#include "chordweight/casimir_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chordweight {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

CasimirPoly::CasimirPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& q : coeffs_) q.canonicalize();
  trim();
}

CasimirPoly::CasimirPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long v : coeffs) coeffs_.emplace_back(v);
  trim();
}

CasimirPoly CasimirPoly::constant(const Rational& value) {
  return CasimirPoly(std::vector<Rational>{value});
}

CasimirPoly CasimirPoly::monomial(std::size_t power, const Rational& coeff) {
  std::vector<Rational> v(power + 1);
  v[power] = coeff;
  return CasimirPoly(std::move(v));
}

CasimirPoly CasimirPoly::c() { return monomial(1); }

Rational CasimirPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

void CasimirPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

CasimirPoly& CasimirPoly::operator+=(const CasimirPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

CasimirPoly& CasimirPoly::operator-=(const CasimirPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

CasimirPoly operator*(const CasimirPoly& a, const CasimirPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CasimirPoly(std::move(out));
}

CasimirPoly& CasimirPoly::operator*=(const CasimirPoly& rhs) {
  *this = *this * rhs;
  return *this;
}

CasimirPoly& CasimirPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& q : coeffs_) q *= scalar;
  return *this;
}

CasimirPoly CasimirPoly::operator-() const {
  CasimirPoly out = *this;
  for (auto& q : out.coeffs_) q = -q;
  return out;
}

Rational CasimirPoly::eval(const Rational& v) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * v + *it;
  return acc;
}

CasimirPoly CasimirPoly::rescale_variable(const Rational& lambda) const {
  std::vector<Rational> out(coeffs_);
  Rational power = 1;
  for (auto& q : out) {
    q *= power;
    power *= lambda;
  }
  return CasimirPoly(std::move(out));
}

CasimirPoly CasimirPoly::pow(unsigned exponent) const {
  CasimirPoly result = constant(1);
  CasimirPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

std::string CasimirPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Rational& q = coeffs_[k];
    if (q == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (q < 0) os << '-';
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    first = false;
    const bool integral = mag.get_den() == 1;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) {
      if (integral) {
        os << mag.get_str();
      } else {
        os << '(' << mag.get_str() << ')';
      }
    }
    os << 'c';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const CasimirPoly& p) { return os << p.to_string(); }

nlohmann::json to_json(const CasimirPoly& p) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& q : p.coeffs()) {
    coeffs.push_back({q.get_num().get_str(), q.get_den().get_str()});
  }
  return {{"variable", "c"}, {"coeffs", coeffs}};
}

CasimirPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("variable", "") != "c" || !j.contains("coeffs") ||
      !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON must be {\"variable\":\"c\",\"coeffs\":[...]}");
  }
  std::vector<Rational> coeffs;
  for (const auto& entry : j["coeffs"]) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() || !entry[1].is_string()) {
      throw std::invalid_argument("coefficient must be a [\"num\",\"den\"] string pair");
    }
    try {
      Integer num(entry[0].get<std::string>(), 10);
      Integer den(entry[1].get<std::string>(), 10);
      coeffs.push_back(make_rational(num, den));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("coefficient is not a decimal integer pair");
    }
  }
  return CasimirPoly(std::move(coeffs));
}

}  // namespace chordweight
