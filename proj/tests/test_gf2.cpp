#include <doctest.h>

#include <random>

#include "hfarc/gf2.hpp"
#include "oracles.hpp"

using namespace hfarc;

TEST_CASE("default polynomials are irreducible and of the right degree") {
  for (int r = 1; r <= 16; ++r) {
    const std::uint32_t p = default_poly(r);
    CHECK(31 - __builtin_clz(p) == r);
    CHECK(oracle::irreducible(p));
    CHECK(is_irreducible(p));
  }
  CHECK(default_poly(2) == 0x7);
  CHECK(default_poly(3) == 0xB);
  CHECK(default_poly(4) == 0x13);
  CHECK(default_poly(5) == 0x25);
  CHECK(default_poly(6) == 0x43);
  CHECK(default_poly(7) == 0x83);
  CHECK(default_poly(8) == 0x11B);
}

TEST_CASE("irreducibility agrees with Rabin's test on every polynomial up to degree 10") {
  for (std::uint32_t p = 2; p < (1u << 11); ++p) {
    CAPTURE(p);
    CHECK(is_irreducible(p) == oracle::irreducible(p));
  }
}

TEST_CASE("field_make") {
  CHECK(field_make(3).poly == 0xB);
  CHECK_THROWS_AS(field_make(4, 0x15), ContractError);  // (X^2+X+1)^2
  CHECK_THROWS_AS(field_make(4, 0xB), ContractError);   // wrong degree
  CHECK_THROWS_AS(field_make(0), ContractError);
  CHECK_THROWS_AS(field_make(17), ContractError);
  CHECK(field_make(1).poly == 0x3);
  CHECK(field_make(4, 0x19).poly == 0x19);  // X^4+X^3+1
  const Field f1(1);
  CHECK(f1.order() == 2);
  CHECK(f1.mul(f1.one(), f1.one()) == f1.one());
}

TEST_CASE("addition is xor") {
  const Field f(3);
  CHECK(f.add(f.element(5), f.element(5)) == f.zero());
  CHECK(f.add(f.element(5), f.zero()) == f.element(5));
  CHECK(f.add(f.element(3), f.element(6)) == f.element(5));
}

TEST_CASE("multiplication in GF(8)") {
  const Field f(3);
  CHECK(f.mul(f.element(2), f.element(4)) == f.element(3));
  CHECK(f.inv(f.one()) == f.one());
  CHECK_THROWS_AS(f.inv(f.zero()), ContractError);
  CHECK_THROWS_AS(f.add(f.element(8), f.one()), ContractError);
}

TEST_CASE("multiplication matches shift-and-add and log-table oracles exhaustively for r <= 8") {
  for (int r = 1; r <= 8; ++r) {
    const Field f(r);
    const oracle::LogTable lt(r, f.spec().poly);
    const std::uint32_t q = f.order();
    for (std::uint32_t a = 0; a < q; ++a) {
      for (std::uint32_t b = 0; b < q; ++b) {
        const std::uint32_t got = f.mul(FieldElement{a}, FieldElement{b}).value;
        if (got != oracle::mul(a, b, f.spec().poly, r) || got != lt.mul(a, b)) {
          FAIL("mismatch r=" << r << " a=" << a << " b=" << b);
        }
      }
    }
  }
}

TEST_CASE("ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (int r = 2; r <= 8; ++r) {
    const Field f(r);
    std::uniform_int_distribution<std::uint32_t> d(0, f.order() - 1);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const FieldElement a{d(rng)}, b{d(rng)}, c{d(rng)};
      bad += f.add(a, b) != f.add(b, a);
      bad += f.mul(a, b) != f.mul(b, a);
      bad += f.add(f.add(a, b), c) != f.add(a, f.add(b, c));
      bad += f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c));
      bad += f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c));
    }
    CAPTURE(r);
    CHECK(bad == 0);
  }
}

TEST_CASE("inverses and the multiplicative order, exhaustive for r <= 8") {
  for (int r = 1; r <= 8; ++r) {
    const Field f(r);
    for (std::uint32_t a = 1; a < f.order(); ++a) {
      const FieldElement x{a};
      if (f.mul(x, f.inv(x)) != f.one()) FAIL("inverse r=" << r << " a=" << a);
      if (f.pow(x, f.order() - 1) != f.one()) FAIL("order r=" << r << " a=" << a);
      if (f.div(x, x) != f.one()) FAIL("div r=" << r << " a=" << a);
    }
  }
}

TEST_CASE("squaring is additive, exhaustive for r <= 5") {
  for (int r = 1; r <= 5; ++r) {
    const Field f(r);
    for (std::uint32_t a = 0; a < f.order(); ++a) {
      for (std::uint32_t b = 0; b < f.order(); ++b) {
        const FieldElement x{a}, y{b};
        if (f.square(f.add(x, y)) != f.add(f.square(x), f.square(y))) FAIL("r=" << r);
      }
    }
  }
}

TEST_CASE("pow handles zero, negative and large exponents") {
  const Field f(4);
  const FieldElement g = f.generator();
  CHECK(f.pow(g, 0) == f.one());
  CHECK(f.pow(f.zero(), 0) == f.one());
  CHECK(f.pow(f.zero(), 5) == f.zero());
  CHECK(f.pow(g, -1) == f.inv(g));
  CHECK(f.pow(g, 15 * 1000 + 7) == f.pow(g, 7));
  CHECK_THROWS_AS(f.pow(f.zero(), -1), ContractError);
  for (std::uint32_t a = 0; a < 16; ++a) {
    CHECK(f.pow(FieldElement{a}, 5).value == oracle::pow(a, 5, 0x13, 4));
  }
}

TEST_CASE("generator has full order") {
  for (int r = 1; r <= 12; ++r) {
    const Field f(r);
    const std::uint32_t n = f.order() - 1;
    const FieldElement g = f.generator();
    for (std::uint32_t d = 1; d < n; ++d) {
      if (n % d == 0 && f.pow(g, d) == f.one()) FAIL("r=" << r << " order divides " << d);
    }
  }
}

TEST_CASE("Frobenius") {
  std::mt19937 rng(7);
  const Field f(6);
  std::uniform_int_distribution<std::uint32_t> d(0, 63);
  for (int i = 0; i < 50; ++i) {
    const FieldElement a{d(rng)};
    CHECK(f.frob(a, 6) == a);
    CHECK(f.frob(a, 1) == f.square(a));
    CHECK(f.frob(a, 2) == f.pow(a, 4));
    CHECK(f.frob(f.frob(a, 5), 1) == a);
    CHECK(f.frob(a, -1) == f.frob(a, 5));
  }
}

TEST_CASE("subfields") {
  const Field f(6);
  for (int s : {1, 2, 3, 6}) {
    const auto sub = f.subfield(s);
    CHECK(sub.size() == (1u << s));
    for (FieldElement a : sub) {
      CHECK(f.frob(a, s) == a);
      for (FieldElement b : sub) {
        CHECK(std::binary_search(sub.begin(), sub.end(), f.mul(a, b)));
        CHECK(std::binary_search(sub.begin(), sub.end(), f.add(a, b)));
      }
    }
    CHECK(f.subfield_basis(s).size() == static_cast<std::size_t>(s));
  }
  CHECK_THROWS_AS(f.subfield(4), ContractError);
}

TEST_CASE("hex helpers") {
  CHECK(to_hex(0x1bu) == "0x1b");
  CHECK(parse_hex("0x1b") == 0x1b);
  CHECK(parse_hex("1B") == 0x1b);
  CHECK_THROWS_AS(parse_hex(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_hex("0xg"), std::invalid_argument);
  CHECK_THROWS_AS(parse_hex("123456789"), std::invalid_argument);
}
