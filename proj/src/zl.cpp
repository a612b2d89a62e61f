#include "ramsplit/zl.hpp"

#include <stdexcept>

#include "ramsplit/errors.hpp"

namespace ramsplit {

bool is_prime(std::int64_t n) noexcept {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t ell) : ell_(ell) {
  if (!is_prime(ell)) throw NotPrime("modulus " + std::to_string(ell) + " is not prime");
}

namespace {

void require_same_modulus(PrimeModulus a, PrimeModulus b) {
  if (!(a == b)) {
    throw ModulusMismatch("moduli " + std::to_string(a.ell()) + " and " + std::to_string(b.ell()) +
                          " differ");
  }
}

}  // namespace

Scalar Scalar::inverse() const {
  if (value_ == 0) throw std::domain_error("zero has no inverse mod l");
  // Fermat: x^(l-2)
  std::int64_t result = 1;
  std::int64_t base = value_;
  std::int64_t e = modulus_.ell() - 2;
  while (e > 0) {
    if (e & 1) result = result * base % modulus_.ell();
    base = base * base % modulus_.ell();
    e >>= 1;
  }
  return Scalar(modulus_, result);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  require_same_modulus(a.modulus_, b.modulus_);
  return Scalar(a.modulus_, a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  require_same_modulus(a.modulus_, b.modulus_);
  return Scalar(a.modulus_, a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  require_same_modulus(a.modulus_, b.modulus_);
  return Scalar(a.modulus_, a.value_ * b.value_);
}

GeneratorId GeneratorId::parse(const std::string& key) {
  auto colon = key.find(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == key.size()) {
    throw SchemaError("generator key '" + key + "' is not of the form space:name");
  }
  return GeneratorId{key.substr(0, colon), key.substr(colon + 1)};
}

CharClass::CharClass(PrimeModulus modulus, const Terms& terms) : modulus_(modulus) {
  for (const auto& [g, c] : terms) accumulate(g, c);
}

CharClass CharClass::generator(PrimeModulus modulus, GeneratorId g, std::int64_t coeff) {
  CharClass out(modulus);
  out.accumulate(g, coeff);
  return out;
}

std::optional<std::string> CharClass::space() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first.space;
}

Scalar CharClass::coefficient(const GeneratorId& g) const {
  auto it = terms_.find(g);
  return Scalar(modulus_, it == terms_.end() ? 0 : it->second);
}

void CharClass::accumulate(const GeneratorId& g, std::int64_t c) {
  if (!terms_.empty() && terms_.begin()->first.space != g.space) {
    throw SpaceMismatch("generator " + g.key() + " does not belong to space " +
                        terms_.begin()->first.space);
  }
  std::int64_t v = modulus_.reduce(modulus_.reduce(c) + (terms_.count(g) ? terms_.at(g) : 0));
  if (v == 0) {
    terms_.erase(g);
  } else {
    terms_[g] = v;
  }
}

CharClass CharClass::operator-() const {
  return Scalar(modulus_, -1) * *this;
}

void require_same_space(const CharClass& a, const CharClass& b) {
  auto sa = a.space();
  auto sb = b.space();
  if (sa && sb && *sa != *sb) throw SpaceMismatch("spaces " + *sa + " and " + *sb + " differ");
}

CharClass operator+(const CharClass& a, const CharClass& b) {
  require_same_modulus(a.modulus_, b.modulus_);
  require_same_space(a, b);
  CharClass out = a;
  for (const auto& [g, c] : b.terms_) out.accumulate(g, c);
  return out;
}

CharClass operator-(const CharClass& a, const CharClass& b) { return a + (-b); }

CharClass operator*(const Scalar& n, const CharClass& a) {
  require_same_modulus(n.modulus(), a.modulus_);
  CharClass out(a.modulus_);
  if (n.is_zero()) return out;
  for (const auto& [g, c] : a.terms_) out.terms_[g] = a.modulus_.reduce(c * n.value());
  return out;
}

CharClass add(const CharClass& a, const CharClass& b) { return a + b; }

CharClass scale(const Scalar& n, const CharClass& a) { return n * a; }

std::optional<Scalar> solve_ratio(const CharClass& a, const CharClass& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require_same_space(a, b);
  const PrimeModulus m = a.modulus();
  if (b.is_zero()) {
    if (a.is_zero()) return Scalar::one(m);
    return std::nullopt;
  }
  const auto& [pivot, bc] = *b.terms().begin();
  Scalar n = a.coefficient(pivot) * Scalar(m, bc).inverse();
  if (n * b == a) return n;
  return std::nullopt;
}

bool same_line(const CharClass& a, const CharClass& b) {
  require_same_modulus(a.modulus(), b.modulus());
  require_same_space(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return solve_ratio(a, b).has_value();
}

std::int64_t order(const CharClass& a) { return a.is_zero() ? 1 : a.modulus().ell(); }

}  // namespace ramsplit
