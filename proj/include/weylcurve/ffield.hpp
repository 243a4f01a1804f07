#pragma once

// Finite fields F_{p^m} for small primes p.
//
// A field is an interned, immutable object obtained from GaloisField::get(p, m);
// elements carry a pointer to it and a packed code: the base-p integer whose
// digits are the residues c_0, ..., c_{m-1} of the representative
// c_0 + c_1 z + ... + c_{m-1} z^{m-1} modulo the field's irreducible modulus.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylcurve/error.hpp"

namespace weylcurve {

/// Largest field order constructed unless a caller passes a larger cap.
inline constexpr std::uint64_t kDefaultFieldOrderCap = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n) noexcept;

/// Lexicographically least monic irreducible polynomial of degree m over F_p,
/// coefficients listed low to high (size m + 1, last entry 1). Candidates are
/// ordered by the base-p value of (c_{m-1}, ..., c_0). For m = 1 this is "z".
std::vector<unsigned> find_irreducible(unsigned p, unsigned m,
                                       std::uint64_t cap = kDefaultFieldOrderCap);

/// Exact irreducibility test (Rabin) for a monic polynomial over F_p.
bool is_irreducible(std::span<const unsigned> monic, unsigned p);

class FieldElem;

class GaloisField {
 public:
  /// Interned field for (p, m). Thread-safe; the returned reference lives forever.
  static const GaloisField& get(unsigned p, unsigned m = 1,
                                std::uint64_t cap = kDefaultFieldOrderCap);

  GaloisField(const GaloisField&) = delete;
  GaloisField& operator=(const GaloisField&) = delete;

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint32_t order() const noexcept { return q_; }
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  FieldElem zero() const;
  FieldElem one() const;
  FieldElem from_int(long long n) const;
  FieldElem from_residues(std::span<const unsigned> residues) const;
  FieldElem element(std::uint32_t code) const;
  /// The class of z, a root of the modulus.
  FieldElem root() const;
  /// A generator of the multiplicative group.
  FieldElem primitive() const;
  /// All q elements in code order (0 first, then 1, ...).
  std::vector<FieldElem> elements() const;

  /// Accepts an integer, or comma-separated residues c_0,c_1,... optionally in brackets.
  FieldElem parse(std::string_view text) const;

  // Arithmetic on raw codes.
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t neg(std::uint32_t a) const noexcept;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;
  std::vector<unsigned> residues(std::uint32_t code) const;
  std::string format(std::uint32_t code) const;

 private:
  GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus);

  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  unsigned p_;
  unsigned m_;
  std::uint32_t q_;
  std::vector<unsigned> modulus_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // length 2(q-1), so exp_[log a + log b] needs no reduction
  std::uint32_t primitive_ = 1;
};

class FieldElem {
 public:
  /// Unbound placeholder; any arithmetic on it throws.
  FieldElem() = default;
  FieldElem(const GaloisField& field, std::uint32_t code) : field_(&field), code_(code) {}

  bool bound() const noexcept { return field_ != nullptr; }
  const GaloisField& field() const;
  std::uint32_t code() const noexcept { return code_; }
  std::vector<unsigned> residues() const { return field().residues(code_); }

  bool is_zero() const noexcept { return code_ == 0; }
  bool is_one() const noexcept { return code_ == 1; }

  FieldElem inverse() const;

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }

  friend bool operator==(const FieldElem& a, const FieldElem& b);
  friend std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b);

 private:
  const GaloisField* field_ = nullptr;
  std::uint32_t code_ = 0;
};

/// a^e; negative exponents invert (zero base then throws).
FieldElem pow(const FieldElem& a, long long e);
FieldElem frobenius(const FieldElem& a);

/// Canonical embedding of a into target, whose degree must be a multiple of a's.
/// The image of z is the smallest-code root of the source modulus in target.
FieldElem embed(const FieldElem& a, const GaloisField& target);
/// Inverse of embed: the preimage of a in sub, if a lies in the image of sub.
std::optional<FieldElem> restrict_to(const FieldElem& a, const GaloisField& sub);

std::string to_string(const FieldElem& a);
std::ostream& operator<<(std::ostream& os, const FieldElem& a);

// Ring-context hooks used by the generic containers.
inline unsigned characteristic(const FieldElem& a) { return a.field().characteristic(); }
inline FieldElem zero_like(const FieldElem& a) { return a.field().zero(); }
inline FieldElem one_like(const FieldElem& a) { return a.field().one(); }
inline FieldElem from_int_like(const FieldElem& a, long long n) { return a.field().from_int(n); }
inline bool is_zero(const FieldElem& a) { return a.is_zero(); }
inline FieldElem exact_divide(const FieldElem& a, const FieldElem& b) { return a / b; }

}  // namespace weylcurve
