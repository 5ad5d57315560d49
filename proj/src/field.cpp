#include "wentw/field.hpp"

#include <cctype>

namespace wentw {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t(1) << 31)) throw DataError("prime field modulus too large: " + std::to_string(p));
  if (!is_prime(p)) throw DataError("field modulus is not prime: " + std::to_string(p));
  return Field(Kind::PrimeField, p);
}

std::string Field::name() const {
  return kind_ == Kind::Rationals ? "Q" : "F_" + std::to_string(p_);
}

Field Field::parse(std::string_view text) {
  if (text == "Q" || text == "QQ") return rationals();
  std::string_view digits;
  if (text.starts_with("F_"))
    digits = text.substr(2);
  else if (text.starts_with("GF(") && text.ends_with(")"))
    digits = text.substr(3, text.size() - 4);
  else if (text.starts_with("F"))
    digits = text.substr(1);
  if (digits.empty() || digits.size() > 12) throw DataError("unknown field: " + std::string(text));
  std::uint64_t p = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw DataError("unknown field: " + std::string(text));
    p = p * 10 + std::uint64_t(c - '0');
  }
  return prime(p);
}

namespace modp {
std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw std::domain_error("inverse of zero");
  // Extended Euclid on signed 64-bit values.
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return std::uint32_t(t);
}
}  // namespace modp

namespace {
std::uint32_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class m = z % mpz_class(static_cast<unsigned long>(p));
  if (m < 0) m += static_cast<unsigned long>(p);
  return std::uint32_t(m.get_ui());
}
}  // namespace

Scalar::Scalar(Field f, long v) : field_(f), value_(std::uint32_t{0}) {
  if (f.is_prime_field())
    value_ = reduce(mpz_class(v), f.characteristic());
  else
    value_ = mpq_class(v);
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f), value_(std::uint32_t{0}) {
  if (f.is_prime_field()) {
    std::uint32_t num = reduce(q.get_num(), f.characteristic());
    std::uint32_t den = reduce(q.get_den(), f.characteristic());
    if (den == 0) throw DataError("denominator not invertible in " + f.name());
    value_ = modp::mul(num, modp::inv(den, std::uint32_t(f.characteristic())), std::uint32_t(f.characteristic()));
  } else {
    mpq_class c = q;
    c.canonicalize();
    value_ = c;
  }
}

Scalar Scalar::residue(Field f, std::uint32_t r) {
  if (!f.is_prime_field() || r >= f.characteristic()) throw DataError("residue out of range");
  return Scalar(f, std::variant<std::uint32_t, mpq_class>(r));
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("scalars from different fields");
}

bool Scalar::is_zero() const {
  return field_.is_prime_field() ? residue_value() == 0 : rational_value() == 0;
}

bool Scalar::is_one() const {
  return field_.is_prime_field() ? residue_value() == 1 : rational_value() == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime_field())
    return Scalar(field_, std::variant<std::uint32_t, mpq_class>(
                              modp::add(residue_value(), o.residue_value(), std::uint32_t(field_.characteristic()))));
  return Scalar(field_, std::variant<std::uint32_t, mpq_class>(mpq_class(rational_value() + o.rational_value())));
}

Scalar Scalar::operator-(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime_field())
    return Scalar(field_, std::variant<std::uint32_t, mpq_class>(
                              modp::sub(residue_value(), o.residue_value(), std::uint32_t(field_.characteristic()))));
  return Scalar(field_, std::variant<std::uint32_t, mpq_class>(mpq_class(rational_value() - o.rational_value())));
}

Scalar Scalar::operator*(const Scalar& o) const {
  check_same(o);
  if (field_.is_prime_field())
    return Scalar(field_, std::variant<std::uint32_t, mpq_class>(
                              modp::mul(residue_value(), o.residue_value(), std::uint32_t(field_.characteristic()))));
  return Scalar(field_, std::variant<std::uint32_t, mpq_class>(mpq_class(rational_value() * o.rational_value())));
}

Scalar Scalar::operator-() const { return Scalar(field_, 0L) - *this; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (field_.is_prime_field())
    return Scalar(field_, std::variant<std::uint32_t, mpq_class>(
                              modp::inv(residue_value(), std::uint32_t(field_.characteristic()))));
  return Scalar(field_, std::variant<std::uint32_t, mpq_class>(mpq_class(1 / rational_value())));
}

bool Scalar::operator==(const Scalar& o) const { return field_ == o.field_ && value_ == o.value_; }

std::string Scalar::to_string() const {
  if (field_.is_prime_field()) return std::to_string(residue_value());
  return rational_value().get_str();
}

Scalar Scalar::parse(Field f, std::string_view text) {
  std::string s(text);
  auto bad = [&] { return DataError("malformed scalar \"" + s + "\" for field " + f.name()); };
  if (s.empty()) throw bad();
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    if (t.empty()) return false;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+') throw bad();
  if (num[0] == '+') num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0) throw bad();
  try {
    return Scalar(f, mpq_class(n, d));
  } catch (const DataError&) {
    throw bad();
  }
}

}  // namespace wentw
