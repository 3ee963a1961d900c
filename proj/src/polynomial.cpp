#include "descpoly/polynomial.hpp"

namespace descpoly {

IntPolynomial IntPolynomial::from_coefficients(const std::vector<mpz_class>& coeffs) {
  IntPolynomial p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(static_cast<int>(i), coeffs[i]);
  return p;
}

IntPolynomial IntPolynomial::monomial(int exponent, const mpz_class& c) {
  IntPolynomial p;
  p.add_term(exponent, c);
  return p;
}

mpz_class IntPolynomial::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void IntPolynomial::add_term(int exponent, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::vector<mpz_class> IntPolynomial::coefficients() const { return coefficients(degree() + 1); }

std::vector<mpz_class> IntPolynomial::coefficients(int len) const {
  std::vector<mpz_class> out(static_cast<std::size_t>(std::max(len, 0)));
  for (const auto& [e, c] : terms_) {
    if (e < len) out[static_cast<std::size_t>(e)] = c;
  }
  return out;
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  // Horner from the top degree down
  mpz_class acc = 0;
  for (int e = degree(); e >= 0; --e) acc = acc * x + coeff(e);
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string cs = c.get_str();
    if (!out.empty()) {
      if (c < 0) {
        out += " - ";
        cs = cs.substr(1);
      } else {
        out += " + ";
      }
    }
    out += cs;
    if (e == 1) out += "x";
    if (e > 1) out += "x^" + std::to_string(e);
  }
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  }
  return out;
}

BivarPolynomial BivarPolynomial::monomial(int first, int second, const mpz_class& c) {
  BivarPolynomial p;
  p.add_term(first, second, c);
  return p;
}

mpz_class BivarPolynomial::coeff(int first, int second) const {
  auto it = terms_.find({first, second});
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void BivarPolynomial::add_term(int first, int second, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(Key{first, second}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

IntPolynomial BivarPolynomial::eval_second(const mpz_class& value) const {
  IntPolynomial out;
  for (const auto& [k, c] : terms_) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k.second));
    out.add_term(k.first, c * p);
  }
  return out;
}

IntPolynomial BivarPolynomial::eval_first(const mpz_class& value) const {
  IntPolynomial out;
  for (const auto& [k, c] : terms_) {
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), value.get_mpz_t(), static_cast<unsigned long>(k.first));
    out.add_term(k.second, c * p);
  }
  return out;
}

std::string BivarPolynomial::to_string(char first, char second) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.get_str();
    if (k.first > 0) out += std::string(1, first) + "^" + std::to_string(k.first);
    if (k.second > 0) out += std::string(1, second) + "^" + std::to_string(k.second);
  }
  return out;
}

BivarPolynomial& BivarPolynomial::operator+=(const BivarPolynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

BivarPolynomial operator*(const BivarPolynomial& a, const BivarPolynomial& b) {
  BivarPolynomial out;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  }
  return out;
}

}  // namespace descpoly
