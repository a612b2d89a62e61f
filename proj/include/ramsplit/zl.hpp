#pragma once

// Arithmetic mod a prime l and free Z/l-modules on named generators.
//
// A residue field's character group H^1(k(z), Z/l) is modelled as the free
// Z/l-module on symbolic generators living in one "space" (the residue field
// label). Kummer classes of symbolic units are generators of the same kind, so
// products of units become sums of classes.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace ramsplit {

class PrimeModulus {
 public:
  /// Throws NotPrime unless ell is a prime >= 2.
  explicit PrimeModulus(std::int64_t ell);

  std::int64_t ell() const noexcept { return ell_; }
  std::int64_t reduce(std::int64_t x) const noexcept {
    x %= ell_;
    return x < 0 ? x + ell_ : x;
  }

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::int64_t ell_;
};

bool is_prime(std::int64_t n) noexcept;

/// An element of Z/l. Mixing moduli throws ModulusMismatch.
class Scalar {
 public:
  Scalar(PrimeModulus modulus, std::int64_t value)
      : modulus_(modulus), value_(modulus.reduce(value)) {}

  static Scalar zero(PrimeModulus m) { return Scalar(m, 0); }
  static Scalar one(PrimeModulus m) { return Scalar(m, 1); }

  std::int64_t value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return modulus_; }
  bool is_zero() const noexcept { return value_ == 0; }
  bool is_unit() const noexcept { return value_ != 0; }

  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(modulus_, -value_); }
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  PrimeModulus modulus_;
  std::int64_t value_;
};

struct GeneratorId {
  std::string space;
  std::string name;

  /// "space:name"
  std::string key() const { return space + ":" + name; }
  /// Inverse of key(); the space is everything before the first ':'.
  static GeneratorId parse(const std::string& key);

  friend auto operator<=>(const GeneratorId&, const GeneratorId&) = default;
};

/// Sparse Z/l-linear combination of generators from a single space.
/// Canonical form: no zero coefficients are stored, so equality is
/// term-map equality. The zero class has no space and is compatible with
/// every space.
class CharClass {
 public:
  using Terms = std::map<GeneratorId, std::int64_t>;

  explicit CharClass(PrimeModulus modulus) : modulus_(modulus) {}
  CharClass(PrimeModulus modulus, const Terms& terms);

  static CharClass generator(PrimeModulus modulus, GeneratorId g, std::int64_t coeff = 1);

  PrimeModulus modulus() const noexcept { return modulus_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Space of the generators, or nullopt for the zero class.
  std::optional<std::string> space() const;
  Scalar coefficient(const GeneratorId& g) const;

  CharClass operator-() const;
  friend CharClass operator+(const CharClass& a, const CharClass& b);
  friend CharClass operator-(const CharClass& a, const CharClass& b);
  friend CharClass operator*(const Scalar& n, const CharClass& a);
  friend bool operator==(const CharClass&, const CharClass&) = default;

 private:
  void accumulate(const GeneratorId& g, std::int64_t c);

  PrimeModulus modulus_;
  Terms terms_;
};

CharClass add(const CharClass& a, const CharClass& b);
CharClass scale(const Scalar& n, const CharClass& a);

/// True iff <a> = <b>: a = u*b or b = u*a for a unit u.
bool same_line(const CharClass& a, const CharClass& b);

/// n with a = n*b. Returns 1 when both are zero; nullopt when no n exists.
std::optional<Scalar> solve_ratio(const CharClass& a, const CharClass& b);

/// 1 for the zero class, l otherwise.
std::int64_t order(const CharClass& a);

/// Throws SpaceMismatch when both classes are nonzero and live in different spaces.
void require_same_space(const CharClass& a, const CharClass& b);

}  // namespace ramsplit
