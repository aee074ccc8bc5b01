#include "hfarc/gf2.hpp"

#include <array>
#include <cstdio>

namespace hfarc {

namespace {

// Index r holds the default reduction polynomial for GF(2^r).
constexpr std::array<std::uint32_t, 17> kDefaultPolys = {
    0,
    0x3,      // X+1
    0x7,      // X^2+X+1
    0xB,      // X^3+X+1
    0x13,     // X^4+X+1
    0x25,     // X^5+X^2+1
    0x43,     // X^6+X+1
    0x83,     // X^7+X+1
    0x11B,    // X^8+X^4+X^3+X+1
    0x211,    // X^9+X^4+1
    0x409,    // X^10+X^3+1
    0x805,    // X^11+X^2+1
    0x1053,   // X^12+X^6+X^4+X+1
    0x201B,   // X^13+X^4+X^3+X+1
    0x4443,   // X^14+X^10+X^6+X+1
    0x8003,   // X^15+X+1
    0x1100B,  // X^16+X^12+X^3+X+1
};

std::uint32_t poly_mod(std::uint32_t a, std::uint32_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

}  // namespace

int poly_degree(std::uint32_t p) {
  int d = -1;
  while (p != 0) {
    ++d;
    p >>= 1;
  }
  return d;
}

std::uint32_t poly_mulmod(std::uint32_t a, std::uint32_t b, std::uint32_t poly) {
  const int r = poly_degree(poly);
  const std::uint32_t top = 1u << r;
  std::uint32_t acc = 0;
  while (b != 0) {
    if (b & 1u) acc ^= a;
    b >>= 1;
    a <<= 1;
    if (a & top) a ^= poly;
  }
  return acc;
}

std::uint32_t default_poly(int r) {
  if (r < 1 || r > 16) throw ContractError("field degree must be in [1, 16], got " + std::to_string(r));
  return kDefaultPolys[r];
}

bool is_irreducible(std::uint32_t poly) {
  const int r = poly_degree(poly);
  if (r < 1) return false;
  for (int d = 1; 2 * d <= r; ++d) {
    for (std::uint32_t low = 0; low < (1u << d); ++low) {
      if (poly_mod(poly, (1u << d) | low) == 0) return false;
    }
  }
  return true;
}

FieldSpec field_make(int r, std::optional<std::uint32_t> poly) {
  if (r < 1 || r > 16) throw ContractError("field degree must be in [1, 16], got " + std::to_string(r));
  const std::uint32_t p = poly.value_or(kDefaultPolys[r]);
  if (poly_degree(p) != r) {
    throw ContractError("reduction polynomial " + to_hex(p) + " does not have degree " + std::to_string(r));
  }
  if (!is_irreducible(p)) throw ContractError("reduction polynomial " + to_hex(p) + " is reducible");
  return FieldSpec{r, p};
}

Field::Field(FieldSpec spec) : spec_(field_make(spec.r, spec.poly)) {
  auto t = std::make_shared<Tables>();
  const std::uint32_t q = spec_.order();
  const std::uint32_t n = q - 1;
  t->log.assign(q, 0);
  t->exp.assign(n, 1);
  // Smallest element whose powers reach all of GF(q)*.
  for (std::uint32_t g = 1; g < q; ++g) {
    std::uint32_t x = g;
    std::uint32_t ord = 1;
    while (x != 1) {
      x = poly_mulmod(x, g, spec_.poly);
      ++ord;
    }
    if (ord == n) {
      t->generator = g;
      break;
    }
  }
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    t->exp[i] = x;
    t->log[x] = i;
    x = poly_mulmod(x, t->generator, spec_.poly);
  }
  tables_ = std::move(t);
}

FieldElement Field::element(std::uint32_t v) const {
  check(FieldElement{v});
  return FieldElement{v};
}

FieldElement Field::inv(FieldElement a) const {
  check(a);
  if (a.value == 0) throw ContractError("inverse of zero");
  const auto& t = *tables_;
  const std::uint32_t n = order() - 1;
  const std::uint32_t l = t.log[a.value];
  return FieldElement{t.exp[l == 0 ? 0 : n - l]};
}

FieldElement Field::pow(FieldElement a, std::int64_t e) const {
  check(a);
  if (a.value == 0) {
    if (e < 0) throw ContractError("negative power of zero");
    return FieldElement{e == 0 ? 1u : 0u};
  }
  const std::int64_t n = order() - 1;
  std::int64_t k = (static_cast<std::int64_t>(tables_->log[a.value]) * (e % n)) % n;
  if (k < 0) k += n;
  return FieldElement{tables_->exp[static_cast<std::size_t>(k)]};
}

FieldElement Field::frob(FieldElement a, int i) const {
  check(a);
  int k = i % spec_.r;
  if (k < 0) k += spec_.r;
  for (int j = 0; j < k; ++j) a = square(a);
  return a;
}

std::vector<FieldElement> Field::subfield(int s) const {
  if (s < 1 || spec_.r % s != 0) {
    throw ContractError("GF(2^" + std::to_string(s) + ") is not a subfield of GF(2^" + std::to_string(spec_.r) + ")");
  }
  std::vector<FieldElement> out;
  for (std::uint32_t v = 0; v < order(); ++v) {
    if (frob(FieldElement{v}, s) == FieldElement{v}) out.push_back(FieldElement{v});
  }
  return out;
}

std::vector<FieldElement> Field::subfield_basis(int s) const {
  std::vector<FieldElement> basis;
  std::vector<std::uint32_t> span{0};
  for (FieldElement e : subfield(s)) {
    bool in_span = false;
    for (std::uint32_t x : span) in_span = in_span || x == e.value;
    if (in_span) continue;
    basis.push_back(e);
    const std::size_t m = span.size();
    for (std::size_t i = 0; i < m; ++i) span.push_back(span[i] ^ e.value);
  }
  return basis;
}

std::string Field::to_hex_(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%x", v);
  return buf;
}

std::string to_hex(std::uint32_t v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", v);
  return buf;
}

std::string to_hex(FieldElement e) { return to_hex(e.value); }

std::uint32_t parse_hex(const std::string& s) {
  std::string body = s;
  if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X')) body = body.substr(2);
  if (body.empty() || body.size() > 8) throw std::invalid_argument("malformed hex value '" + s + "'");
  std::uint32_t v = 0;
  for (char c : body) {
    int d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw std::invalid_argument("malformed hex value '" + s + "'");
    v = (v << 4) | static_cast<std::uint32_t>(d);
  }
  return v;
}

}  // namespace hfarc
