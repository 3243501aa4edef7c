#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spin/scalar.hpp"

namespace spin {

using Monomial = std::vector<std::uint32_t>;

class ArtinElement;

// k[t_1..t_m] / (monomial ideal), required to be finite dimensional and
// local.  Elements are dense coefficient vectors over the standard monomial
// basis of the quotient; basis index 0 is always the constant monomial.
class ArtinRing {
 public:
  // Throws InputError if the ideal misses a pure power of some variable,
  // contains the unit monomial, or names have the wrong arity.
  static std::shared_ptr<const ArtinRing> create(Field field, std::vector<std::string> vars,
                                                 std::vector<Monomial> ideal);

  const Field& field() const { return field_; }
  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  std::size_t variable_count() const { return vars_.size(); }

  std::optional<std::size_t> index_of(const Monomial& m) const;
  std::optional<std::size_t> variable_index(std::string_view name) const;

  // Basis index of basis[i] * basis[j], or nullopt if it lies in the ideal.
  std::optional<std::size_t> product_index(std::size_t i, std::size_t j) const {
    const auto k = products_[i * basis_.size() + j];
    if (k < 0) return std::nullopt;
    return static_cast<std::size_t>(k);
  }

  // The quotient of this ring by additional monomial generators.
  std::shared_ptr<const ArtinRing> quotient(const std::vector<Monomial>& extra) const;

  bool in_ideal(const Monomial& m) const;

 private:
  ArtinRing() = default;

  Field field_;
  std::vector<std::string> vars_;
  std::vector<Monomial> generators_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
  std::vector<std::int32_t> products_;
};

using RingPtr = std::shared_ptr<const ArtinRing>;

class ArtinElement {
 public:
  explicit ArtinElement(RingPtr ring);
  ArtinElement(RingPtr ring, std::vector<Scalar> coefficients);

  static ArtinElement zero(RingPtr ring) { return ArtinElement{std::move(ring)}; }
  static ArtinElement one(RingPtr ring);
  static ArtinElement constant(RingPtr ring, const Scalar& c);
  static ArtinElement constant(RingPtr ring, long c);
  // Image of an arbitrary monomial (zero when it lies in the ideal).
  static ArtinElement monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  static ArtinElement variable(RingPtr ring, std::string_view name);

  const RingPtr& ring() const { return ring_; }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  const Scalar& coefficient(std::size_t basis_index) const { return coeffs_[basis_index]; }
  const Scalar& constant_term() const { return coeffs_.front(); }

  bool is_zero() const;
  // In a local Artin ring every element is a unit or nilpotent, decided by
  // the constant term.
  bool is_unit() const { return !constant_term().is_zero(); }
  bool is_nilpotent() const { return constant_term().is_zero(); }

  ArtinElement operator-() const;
  ArtinElement& operator+=(const ArtinElement& o);
  ArtinElement& operator-=(const ArtinElement& o);
  ArtinElement& operator*=(const ArtinElement& o);
  ArtinElement& operator*=(const Scalar& s);

  friend ArtinElement operator+(ArtinElement a, const ArtinElement& b) { return a += b; }
  friend ArtinElement operator-(ArtinElement a, const ArtinElement& b) { return a -= b; }
  friend ArtinElement operator*(const ArtinElement& a, const ArtinElement& b);
  friend ArtinElement operator*(ArtinElement a, const Scalar& s) { return a *= s; }
  friend ArtinElement operator*(const Scalar& s, ArtinElement a) { return a *= s; }
  friend bool operator==(const ArtinElement& a, const ArtinElement& b);

  ArtinElement pow(unsigned e) const;

  // Nonzero (monomial, coefficient) pairs in basis order.
  std::vector<std::pair<Monomial, Scalar>> terms() const;
  std::string to_string() const;

 private:
  void check_ring(const ArtinElement& o) const;

  RingPtr ring_;
  std::vector<Scalar> coeffs_;
};

// Parses a polynomial expression in the ring variables ("(1+t)*(1-t)",
// "2t^2 - eps/3") and reduces it modulo the ideal.
ArtinElement normalize(const RingPtr& ring, std::string_view expression);

// Throws DomainError on a non-unit.
ArtinElement invert(const ArtinElement& a);

// The unique r-th root of gamma whose constant term is root0.
ArtinElement rth_root_lift(const ArtinElement& gamma, unsigned r, const Scalar& root0);

// A unit lambda with lambda * a_k == b_k for every equation (a_k, b_k), if
// one exists.  Decided by linear algebra over the base field.
std::optional<ArtinElement> solve_unit_multiplier(
    std::span<const std::pair<ArtinElement, ArtinElement>> equations);

// A unit lambda with b == lambda * a, if one exists.
std::optional<ArtinElement> associate_solve(const ArtinElement& a, const ArtinElement& b);

// Image of a under the projection onto a quotient ring with the same
// variables (target ideal containing the source ideal).
ArtinElement reduce_to(const ArtinElement& a, const RingPtr& target);

}  // namespace spin
