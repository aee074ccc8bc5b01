#pragma once

// Arithmetic in GF(2^r), 1 <= r <= 16, polynomial basis.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hfarc {

/// Raised when an operation is called outside its contract.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FieldElement {
  std::uint32_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(std::uint32_t v) : value(v) {}

  constexpr bool is_zero() const { return value == 0; }
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

/// Degree and reduction polynomial. The polynomial is a bit mask including
/// the leading X^r term, e.g. X^3+X+1 is 0xB.
struct FieldSpec {
  int r = 0;
  std::uint32_t poly = 0;

  std::uint32_t order() const { return 1u << r; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

/// Fixed table of irreducible polynomials for r = 1..16.
std::uint32_t default_poly(int r);

/// Brute-force trial division by every monic polynomial of degree <= r/2.
bool is_irreducible(std::uint32_t poly);

/// Validates (r, poly) and returns the spec. Throws ContractError when r is
/// out of range, poly has the wrong degree, or poly is reducible.
FieldSpec field_make(int r, std::optional<std::uint32_t> poly = std::nullopt);

/// GF(2^r) with precomputed log/antilog tables. Copies share the tables.
///
/// Every operation checks that its operands are in range for this field;
/// elements produced by a different (larger) field are rejected.
class Field {
 public:
  explicit Field(FieldSpec spec);
  explicit Field(int r) : Field(field_make(r)) {}

  const FieldSpec& spec() const { return spec_; }
  int degree() const { return spec_.r; }
  std::uint32_t order() const { return spec_.order(); }

  FieldElement zero() const { return FieldElement{0}; }
  FieldElement one() const { return FieldElement{1}; }
  FieldElement element(std::uint32_t v) const;

  FieldElement add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return FieldElement{a.value ^ b.value};
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.value == 0 || b.value == 0) return FieldElement{0};
    const auto& t = *tables_;
    std::uint32_t s = t.log[a.value] + t.log[b.value];
    if (s >= order() - 1) s -= order() - 1;
    return FieldElement{t.exp[s]};
  }
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::int64_t e) const;
  /// a^(2^i); i is reduced mod r, negative i allowed.
  FieldElement frob(FieldElement a, int i) const;
  FieldElement square(FieldElement a) const { return mul(a, a); }

  /// Elements of the subfield GF(2^s), ascending; s must divide r.
  std::vector<FieldElement> subfield(int s) const;
  /// F_2-basis of the subfield GF(2^s), greedy over ascending elements.
  std::vector<FieldElement> subfield_basis(int s) const;

  /// A fixed generator of the multiplicative group.
  FieldElement generator() const { return FieldElement{tables_->generator}; }

  friend bool operator==(const Field& a, const Field& b) { return a.spec_ == b.spec_; }

 private:
  struct Tables {
    std::vector<std::uint32_t> log;
    std::vector<std::uint32_t> exp;
    std::uint32_t generator = 1;
  };

  void check(FieldElement a) const {
    if (a.value >= order()) {
      throw ContractError("field element 0x" + to_hex_(a.value) + " outside GF(2^" +
                          std::to_string(spec_.r) + ")");
    }
  }
  static std::string to_hex_(std::uint32_t v);

  FieldSpec spec_;
  std::shared_ptr<const Tables> tables_;
};

/// Carry-less product of a and b reduced modulo poly (schoolbook).
std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t poly);

/// Degree of a polynomial bit mask; -1 for the zero polynomial.
int poly_degree(std::uint32_t p);

std::string to_hex(std::uint32_t v);
std::string to_hex(FieldElement e);
/// Parses "0x1b", "1b" or decimal-free hex; throws std::invalid_argument.
std::uint32_t parse_hex(const std::string& s);

}  // namespace hfarc
