#include "spin/scalar.hpp"

#include <numeric>

#include "spin/error.hpp"

namespace spin {

Field Field::prime(std::uint32_t p) {
  mpz_class z{p};
  if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 30) == 0) {
    throw InputError("field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field{p};
}

bool Field::allows_order(unsigned r) const {
  return r > 0 && (characteristic_ == 0 || r % characteristic_ != 0);
}

unsigned Field::roots_of_unity(unsigned r) const {
  if (r == 0) return 0;
  if (characteristic_ == 0) return r % 2 == 0 ? 2 : 1;
  // F_p^* is cyclic of order p-1.
  return static_cast<unsigned>(std::gcd<std::uint64_t>(r, characteristic_ - 1));
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F_" + std::to_string(characteristic_);
}

Scalar::Scalar(Field field, long value) : field_(field), value_(value) { reduce(); }

Scalar::Scalar(Field field, const mpq_class& value) : field_(field), value_(value) {
  reduce();
}

Scalar Scalar::parse(Field field, std::string_view text) {
  mpq_class q;
  std::string s{text};
  if (s.empty() || q.set_str(s, 10) != 0) {
    throw InputError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  q.canonicalize();
  if (!field.is_rational()) {
    mpz_class p{field.characteristic()};
    mpz_class den = q.get_den();
    if (den % p == 0) {
      throw InputError("coefficient '" + s + "' is not in " + field.name());
    }
  }
  return Scalar{field, q};
}

void Scalar::reduce() {
  if (field_.is_rational()) {
    value_.canonicalize();
    return;
  }
  mpz_class p{field_.characteristic()};
  mpz_class num = value_.get_num();
  mpz_class den = value_.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw DomainError("denominator not invertible in " + field_.name());
  }
  mpz_class r = (num * inv) % p;
  if (r < 0) r += p;
  value_ = mpq_class{r};
}

void Scalar::check_same(const Scalar& o) const {
  if (!(field_ == o.field_)) throw InputError("scalar field mismatch");
}

Scalar Scalar::operator-() const { return Scalar{field_, mpq_class{-value_}}; }

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  value_ += o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  value_ -= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  value_ *= o.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  if (o.is_zero()) throw DomainError("division by zero");
  value_ /= o.value_;
  reduce();
  return *this;
}

Scalar Scalar::inverse() const { return Scalar{field_, 1} / *this; }

Scalar Scalar::pow(unsigned e) const {
  Scalar result{field_, 1};
  Scalar base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

namespace {

std::optional<mpz_class> exact_root(const mpz_class& z, unsigned r) {
  if (z < 0) {
    if (r % 2 == 0) return std::nullopt;
    auto pos = exact_root(mpz_class{-z}, r);
    if (!pos) return std::nullopt;
    return mpz_class{-*pos};
  }
  mpz_class root;
  if (mpz_root(root.get_mpz_t(), z.get_mpz_t(), r) == 0) return std::nullopt;
  return root;
}

}  // namespace

std::optional<Scalar> Scalar::rth_root(unsigned r) const {
  if (r == 0) return std::nullopt;
  if (is_zero()) return *this;
  if (field_.is_rational()) {
    auto num = exact_root(value_.get_num(), r);
    auto den = exact_root(value_.get_den(), r);
    if (!num || !den) return std::nullopt;
    return Scalar{field_, mpq_class{*num, *den}};
  }
  const std::uint64_t p = field_.characteristic();
  if (std::gcd<std::uint64_t>(r, p - 1) == 1) {
    // x -> x^r is a bijection; invert the exponent modulo p-1.
    mpz_class e{r}, m{p - 1}, inv;
    mpz_invert(inv.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    mpz_class base = value_.get_num(), out, pz{p};
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), inv.get_mpz_t(), pz.get_mpz_t());
    return Scalar{field_, mpq_class{out}};
  }
  for (std::uint64_t c = 1; c < p; ++c) {
    Scalar candidate{field_, static_cast<long>(c)};
    if (candidate.pow(r) == *this) return candidate;
  }
  return std::nullopt;
}

std::string Scalar::to_string() const { return value_.get_str(); }

}  // namespace spin
