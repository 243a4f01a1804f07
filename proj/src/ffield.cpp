#include "weylcurve/ffield.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <ostream>
#include <unordered_map>
#include <utility>

namespace weylcurve {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

// Dense polynomials over F_p, coefficients low to high, no trailing zeros.
using Coeffs = std::vector<unsigned>;

void trim(Coeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned result = 1, base = a % p;
  for (unsigned e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

Coeffs poly_rem(Coeffs a, const Coeffs& f, unsigned p) {
  trim(a);
  const std::size_t n = f.size() - 1;
  const unsigned lead_inv = inv_mod(f.back(), p);
  while (a.size() > n && !a.empty()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - 1 - n;
    for (std::size_t i = 0; i <= n; ++i)
      a[shift + i] = (a[shift + i] + p - factor * f[i] % p) % p;
    trim(a);
  }
  return a;
}

Coeffs poly_mulmod(const Coeffs& a, const Coeffs& b, const Coeffs& f, unsigned p) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return poly_rem(std::move(r), f, p);
}

Coeffs poly_powmod(Coeffs base, std::uint64_t e, const Coeffs& f, unsigned p) {
  Coeffs result{1};
  base = poly_rem(std::move(base), f, p);
  for (; e > 0; e >>= 1) {
    if (e & 1) result = poly_mulmod(result, base, f, p);
    base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Coeffs poly_gcd(Coeffs a, Coeffs b, unsigned p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Coeffs r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// z^(p^k) mod f by k successive p-th powers.
Coeffs frobenius_power_of_z(unsigned k, const Coeffs& f, unsigned p) {
  Coeffs h = poly_rem(Coeffs{0, 1}, f, p);
  for (unsigned i = 0; i < k; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

Coeffs subtract_z(Coeffs h, unsigned p) {
  if (h.size() < 2) h.resize(2, 0);
  h[1] = (h[1] + p - 1) % p;
  trim(h);
  return h;
}

std::uint64_t checked_power(std::uint64_t base, unsigned e, std::uint64_t cap) {
  std::uint64_t result = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (result > cap / base + 1) return cap + 1;
    result *= base;
  }
  return result;
}

}  // namespace

bool is_irreducible(std::span<const unsigned> monic, unsigned p) {
  Coeffs f(monic.begin(), monic.end());
  trim(f);
  if (f.size() < 2) return false;
  const unsigned n = static_cast<unsigned>(f.size() - 1);
  if (n == 1) return true;
  // Cheap filter: a root in F_p means a linear factor.
  for (unsigned x = 0; x < p; ++x) {
    unsigned v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (v * x + f[i]) % p;
    if (v == 0) return false;
  }
  for (unsigned r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime(r)) continue;
    Coeffs h = subtract_z(frobenius_power_of_z(n / r, f, p), p);
    Coeffs g = poly_gcd(f, h, p);
    if (g.size() > 1) return false;
  }
  return subtract_z(frobenius_power_of_z(n, f, p), p).empty();
}

std::vector<unsigned> find_irreducible(unsigned p, unsigned m, std::uint64_t cap) {
  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, m, cap);
  if (q > cap) throw CapExceeded("field F_" + std::to_string(p) + "^" + std::to_string(m), q, cap);
  for (std::uint64_t k = 0; k < q; ++k) {
    Coeffs f(m + 1, 0);
    std::uint64_t rest = k;
    for (unsigned i = 0; i < m; ++i) {
      f[i] = static_cast<unsigned>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(f, p)) return f;
  }
  throw InvariantViolation("no irreducible polynomial found");
}

// ---------------------------------------------------------------------------
// GaloisField

const GaloisField& GaloisField::get(unsigned p, unsigned m, std::uint64_t cap) {
  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<GaloisField>> registry;

  if (!is_prime(p)) throw Error("characteristic " + std::to_string(p) + " is not prime");
  if (m == 0) throw Error("extension degree must be at least 1");
  const std::uint64_t q = checked_power(p, m, cap);
  if (q > cap) throw CapExceeded("field F_" + std::to_string(p) + "^" + std::to_string(m), q, cap);

  std::lock_guard lock(mutex);
  auto& slot = registry[{p, m}];
  if (!slot) slot.reset(new GaloisField(p, m, find_irreducible(p, m, cap)));
  return *slot;
}

GaloisField::GaloisField(unsigned p, unsigned m, std::vector<unsigned> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
  for (unsigned i = 0; i < m_; ++i) q_ *= p_;
  log_.assign(q_, 0);
  exp_.assign(2 * (q_ - 1), 0);
  for (std::uint32_t g = 1; g < q_; ++g) {
    std::uint32_t x = 1;
    std::uint32_t k = 0;
    do {
      exp_[k++] = x;
      x = mul_slow(x, g);
    } while (x != 1 && k < q_ - 1);
    if (x == 1 && k == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  for (std::uint32_t k = 0; k < q_ - 1; ++k) {
    log_[exp_[k]] = k;
    exp_[k + q_ - 1] = exp_[k];
  }
}

std::uint32_t GaloisField::mul_slow(std::uint32_t a, std::uint32_t b) const {
  const Coeffs ra = residues(a), rb = residues(b);
  Coeffs prod(2 * m_, 0);
  for (unsigned i = 0; i < m_; ++i)
    for (unsigned j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + ra[i] * rb[j]) % p_;
  prod = poly_rem(std::move(prod), modulus_, p_);
  std::uint32_t code = 0;
  for (std::size_t i = prod.size(); i-- > 0;) code = code * p_ + prod[i];
  return code;
}

std::uint32_t GaloisField::add(std::uint32_t a, std::uint32_t b) const noexcept {
  if (m_ == 1) {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (p_ == 2) return a ^ b;
  std::uint32_t result = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    std::uint32_t d = a % p_ + b % p_;
    if (d >= p_) d -= p_;
    result += d * scale;
    scale *= p_;
    a /= p_;
    b /= p_;
  }
  return result;
}

std::uint32_t GaloisField::neg(std::uint32_t a) const noexcept {
  if (m_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  std::uint32_t result = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    const std::uint32_t d = a % p_;
    result += (d == 0 ? 0 : p_ - d) * scale;
    scale *= p_;
    a /= p_;
  }
  return result;
}

std::uint32_t GaloisField::sub(std::uint32_t a, std::uint32_t b) const noexcept {
  return add(a, neg(b));
}

std::uint32_t GaloisField::mul(std::uint32_t a, std::uint32_t b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

std::uint32_t GaloisField::inv(std::uint32_t a) const {
  if (a == 0) throw DivisionByZero();
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

std::vector<unsigned> GaloisField::residues(std::uint32_t code) const {
  std::vector<unsigned> r(m_);
  for (unsigned i = 0; i < m_; ++i) {
    r[i] = code % p_;
    code /= p_;
  }
  return r;
}

std::string GaloisField::format(std::uint32_t code) const {
  if (m_ == 1) return std::to_string(code);
  std::string out;
  const auto r = residues(code);
  for (unsigned i = 0; i < m_; ++i) {
    if (i) out += ',';
    out += std::to_string(r[i]);
  }
  return out;
}

FieldElem GaloisField::zero() const { return {*this, 0}; }
FieldElem GaloisField::one() const { return {*this, 1}; }

FieldElem GaloisField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return {*this, static_cast<std::uint32_t>(r)};
}

FieldElem GaloisField::from_residues(std::span<const unsigned> residues) const {
  if (residues.size() > m_)
    throw FieldMismatch("too many residues (" + std::to_string(residues.size()) +
                        ") for extension degree " + std::to_string(m_));
  std::uint32_t code = 0;
  for (std::size_t i = residues.size(); i-- > 0;) code = code * p_ + residues[i] % p_;
  return {*this, code};
}

FieldElem GaloisField::element(std::uint32_t code) const {
  if (code >= q_) throw Error("element code out of range");
  return {*this, code};
}

FieldElem GaloisField::root() const {
  if (m_ == 1) return from_int(static_cast<long long>(p_) - modulus_[0]);
  return {*this, p_};
}

FieldElem GaloisField::primitive() const { return {*this, primitive_}; }

std::vector<FieldElem> GaloisField::elements() const {
  std::vector<FieldElem> all;
  all.reserve(q_);
  for (std::uint32_t c = 0; c < q_; ++c) all.emplace_back(*this, c);
  return all;
}

FieldElem GaloisField::parse(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (!text.empty() && text.front() == '[') {
    if (text.back() != ']') throw ParseError("unterminated residue vector", text.size());
    text = strip(text.substr(1, text.size() - 2));
  }
  std::vector<long long> values;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view token = strip(text.substr(pos, comma - pos));
    long long v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last)
      throw ParseError("invalid field element '" + std::string(token) + "'", pos);
    values.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.size() == 1) return from_int(values[0]);
  std::vector<unsigned> residues;
  for (long long v : values) residues.push_back(static_cast<unsigned>(from_int(v).code()));
  return from_residues(residues);
}

// ---------------------------------------------------------------------------
// Embeddings between fields of the same characteristic

namespace {

struct Embedding {
  std::vector<std::uint32_t> forward;
  std::unordered_map<std::uint32_t, std::uint32_t> backward;
};

const Embedding& embedding_for(const GaloisField& source, const GaloisField& target) {
  static std::mutex mutex;
  static std::map<std::pair<const GaloisField*, const GaloisField*>, std::unique_ptr<Embedding>>
      cache;
  if (source.characteristic() != target.characteristic() ||
      target.degree() % source.degree() != 0)
    throw FieldMismatch("no embedding of F_" + std::to_string(source.characteristic()) + "^" +
                        std::to_string(source.degree()) + " into F_" +
                        std::to_string(target.characteristic()) + "^" +
                        std::to_string(target.degree()));

  std::lock_guard lock(mutex);
  auto& slot = cache[{&source, &target}];
  if (slot) return *slot;

  const auto& f = source.modulus();
  std::uint32_t root = 0;
  bool found = false;
  for (std::uint32_t c = 0; c < target.order() && !found; ++c) {
    std::uint32_t v = 0;
    for (std::size_t i = f.size(); i-- > 0;)
      v = target.add(target.mul(v, c), target.from_int(f[i]).code());
    if (v == 0) {
      root = c;
      found = true;
    }
  }
  if (!found) throw InvariantViolation("source modulus has no root in target field");

  auto e = std::make_unique<Embedding>();
  e->forward.resize(source.order());
  for (std::uint32_t code = 0; code < source.order(); ++code) {
    const auto r = source.residues(code);
    std::uint32_t v = 0;
    for (std::size_t i = r.size(); i-- > 0;) v = target.add(target.mul(v, root), r[i]);
    e->forward[code] = v;
    e->backward.emplace(v, code);
  }
  slot = std::move(e);
  return *slot;
}

// Brings a and b into a common field; prime-field operands are promoted, which
// keeps their code since a residue c of F_p has code c in every F_{p^m}.
const GaloisField& common_field(const FieldElem& a, const FieldElem& b) {
  const GaloisField& fa = a.field();
  const GaloisField& fb = b.field();
  if (&fa == &fb) return fa;
  if (fa.characteristic() == fb.characteristic()) {
    if (fa.degree() == 1) return fb;
    if (fb.degree() == 1) return fa;
  }
  throw FieldMismatch("mixed-field operands: F_" + std::to_string(fa.characteristic()) + "^" +
                      std::to_string(fa.degree()) + " and F_" +
                      std::to_string(fb.characteristic()) + "^" + std::to_string(fb.degree()));
}

}  // namespace

FieldElem embed(const FieldElem& a, const GaloisField& target) {
  if (&a.field() == &target) return a;
  if (a.field().degree() == 1 && a.field().characteristic() == target.characteristic())
    return {target, a.code()};
  return {target, embedding_for(a.field(), target).forward[a.code()]};
}

std::optional<FieldElem> restrict_to(const FieldElem& a, const GaloisField& sub) {
  if (&a.field() == &sub) return a;
  if (sub.degree() == 1 && sub.characteristic() == a.field().characteristic()) {
    if (a.code() < sub.order()) return FieldElem(sub, a.code());
    return std::nullopt;
  }
  const auto& e = embedding_for(sub, a.field());
  const auto it = e.backward.find(a.code());
  if (it == e.backward.end()) return std::nullopt;
  return FieldElem(sub, it->second);
}

// ---------------------------------------------------------------------------
// FieldElem

const GaloisField& FieldElem::field() const {
  if (!field_) throw Error("unbound field element");
  return *field_;
}

FieldElem FieldElem::inverse() const { return {field(), field().inv(code_)}; }

FieldElem FieldElem::operator-() const { return {field(), field().neg(code_)}; }

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  const GaloisField& f = common_field(*this, o);
  code_ = f.add(code_, o.code_);
  field_ = &f;
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  const GaloisField& f = common_field(*this, o);
  code_ = f.sub(code_, o.code_);
  field_ = &f;
  return *this;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  const GaloisField& f = common_field(*this, o);
  code_ = f.mul(code_, o.code_);
  field_ = &f;
  return *this;
}

FieldElem& FieldElem::operator/=(const FieldElem& o) {
  const GaloisField& f = common_field(*this, o);
  code_ = f.mul(code_, f.inv(o.code_));
  field_ = &f;
  return *this;
}

bool operator==(const FieldElem& a, const FieldElem& b) {
  if (a.field_ == b.field_) return a.code_ == b.code_;
  if (!a.field_ || !b.field_) return false;
  if (a.field_->characteristic() != b.field_->characteristic()) return false;
  if (a.field_->degree() == 1 || b.field_->degree() == 1) return a.code_ == b.code_;
  return false;
}

std::strong_ordering operator<=>(const FieldElem& a, const FieldElem& b) {
  if (a.field_ != b.field_ && a.field_ && b.field_) {
    if (auto c = a.field_->characteristic() <=> b.field_->characteristic(); c != 0) return c;
    if (a.field_->degree() != 1 && b.field_->degree() != 1)
      if (auto c = a.field_->degree() <=> b.field_->degree(); c != 0) return c;
  }
  return a.code_ <=> b.code_;
}

FieldElem pow(const FieldElem& a, long long e) {
  FieldElem base = e < 0 ? a.inverse() : a;
  std::uint64_t n = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1 : static_cast<std::uint64_t>(e);
  FieldElem result = a.field().one();
  for (; n > 0; n >>= 1) {
    if (n & 1) result *= base;
    base *= base;
  }
  return result;
}

FieldElem frobenius(const FieldElem& a) { return pow(a, a.field().characteristic()); }

std::string to_string(const FieldElem& a) { return a.field().format(a.code()); }

std::ostream& operator<<(std::ostream& os, const FieldElem& a) {
  return os << (a.bound() ? to_string(a) : std::string("<unbound>"));
}

}  // namespace weylcurve
