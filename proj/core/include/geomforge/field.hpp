#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <vector>

namespace geomforge {

/// Element of GF(p^e). The stored value is the integer index sum(c_i * p^i)
/// of the residue polynomial sum(c_i * x^i), which is also the serialized form.
struct Fe {
  std::uint8_t value = 0;

  friend constexpr bool operator==(Fe, Fe) = default;
  friend constexpr auto operator<=>(Fe, Fe) = default;
};

class FieldError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// GF(p^e) built on the lexicographically least monic irreducible modulus
/// (coefficients compared from degree 0 upwards). Arithmetic is table driven;
/// tables are computed once from polynomial arithmetic and shared between copies.
class Field {
 public:
  static constexpr int kMaxOrder = 256;

  /// Throws FieldError if p is not prime, e < 1, or p^e exceeds kMaxOrder.
  static Field make(int p, int e);
  /// Field of the given prime power order.
  static Field of_order(int q);

  int p() const { return tables_->p; }
  int e() const { return tables_->e; }
  int order() const { return tables_->q; }
  /// Coefficients c_0..c_e of the monic modulus.
  const std::vector<int>& modulus() const { return tables_->modulus; }

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// Element from its serialized index.
  Fe element(int index) const;
  /// Residue of x (the generator of the extension); equals the integer p in index form.
  Fe gen() const { return element(e() == 1 ? 0 : p()); }
  /// Least-index generator of the multiplicative group.
  Fe primitive() const { return Fe{tables_->primitive}; }
  /// All elements in index order.
  std::vector<Fe> elements() const;
  /// Coefficient vector c_0..c_{e-1} of an element.
  std::vector<int> coeffs(Fe a) const;
  Fe from_coeffs(const std::vector<int>& c) const;

  Fe add(Fe a, Fe b) const { return Fe{tables_->add[idx(a, b)]}; }
  Fe sub(Fe a, Fe b) const { return add(a, neg(b)); }
  Fe neg(Fe a) const { return Fe{tables_->neg[a.value]}; }
  Fe mul(Fe a, Fe b) const { return Fe{tables_->mul[idx(a, b)]}; }
  /// Throws FieldError on zero.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const { return mul(a, inv(b)); }
  /// a^k; negative k inverts first.
  Fe pow(Fe a, long long k) const;
  /// a^(p^k), k taken modulo e.
  Fe frobenius(Fe a, int k) const;
  bool is_square(Fe a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p() == b.p() && a.e() == b.e();
  }

 private:
  struct Tables {
    int p = 0;
    int e = 0;
    int q = 0;
    std::vector<int> modulus;
    std::vector<std::uint8_t> add;
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;
    std::vector<std::uint8_t> frob;  // a -> a^p
    std::uint8_t primitive = 1;
  };

  explicit Field(std::shared_ptr<const Tables> t) : tables_(std::move(t)) {}
  std::size_t idx(Fe a, Fe b) const {
    return static_cast<std::size_t>(a.value) * static_cast<std::size_t>(tables_->q) + b.value;
  }

  std::shared_ptr<const Tables> tables_;
};

bool is_prime(long long n);
/// Splits q = p^e; throws FieldError if q is not a prime power.
std::pair<int, int> prime_power(int q);

namespace poly {
/// Dense polynomials over GF(p), lowest degree first, no trailing zeros
/// (the zero polynomial is empty).
using Poly = std::vector<int>;
Poly trim(Poly a);
Poly mul(const Poly& a, const Poly& b, int p);
Poly mod(Poly a, const Poly& m, int p);
bool is_irreducible(const Poly& monic, int p);
}  // namespace poly

}  // namespace geomforge
