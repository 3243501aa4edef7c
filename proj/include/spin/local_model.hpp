#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spin/artin.hpp"

namespace spin {

// A = R[x,y]/(xy - pi).  Elements are finite sums c + sum a_n x^n + sum b_m y^m;
// exponents beyond the degree cap are rejected rather than truncated.
class NodalAlgebra {
 public:
  static constexpr int kDefaultDegreeCap = 64;

  static std::shared_ptr<const NodalAlgebra> create(ArtinElement pi, int degree_cap = kDefaultDegreeCap);

  const RingPtr& ring() const { return pi_.ring(); }
  const ArtinElement& pi() const { return pi_; }
  int degree_cap() const { return degree_cap_; }

 private:
  NodalAlgebra(ArtinElement pi, int cap) : pi_(std::move(pi)), degree_cap_(cap) {}

  ArtinElement pi_;
  int degree_cap_;
};

using AlgebraPtr = std::shared_ptr<const NodalAlgebra>;

// Canonical element of A.  Terms are keyed by a signed exponent k: x^k for
// k > 0, y^{-k} for k < 0, the constant for k = 0.  With this encoding
// x^a * y^b = pi^{min(a,b)} times the monomial of exponent a - b.
class NodalElement {
 public:
  explicit NodalElement(AlgebraPtr algebra);

  static NodalElement constant(AlgebraPtr algebra, const ArtinElement& c);
  static NodalElement constant(AlgebraPtr algebra, long c);
  static NodalElement x(AlgebraPtr algebra, unsigned power = 1);
  static NodalElement y(AlgebraPtr algebra, unsigned power = 1);
  // Coefficient c times x^k (k > 0), y^{-k} (k < 0) or 1 (k = 0).
  static NodalElement term(AlgebraPtr algebra, int k, const ArtinElement& c);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::map<int, ArtinElement>& terms() const { return terms_; }

  ArtinElement coefficient(int k) const;
  ArtinElement constant_term() const { return coefficient(0); }
  ArtinElement x_coefficient(unsigned n) const { return coefficient(static_cast<int>(n)); }
  ArtinElement y_coefficient(unsigned m) const { return coefficient(-static_cast<int>(m)); }

  bool is_zero() const { return terms_.empty(); }
  bool is_x_only() const { return terms_.empty() || terms_.begin()->first >= 0; }
  bool is_y_only() const { return terms_.empty() || terms_.rbegin()->first <= 0; }

  NodalElement operator-() const;
  NodalElement& operator+=(const NodalElement& o);
  NodalElement& operator-=(const NodalElement& o);
  NodalElement& operator*=(const ArtinElement& c);
  NodalElement& operator*=(const Scalar& c);

  friend NodalElement operator+(NodalElement a, const NodalElement& b) { return a += b; }
  friend NodalElement operator-(NodalElement a, const NodalElement& b) { return a -= b; }
  friend NodalElement operator*(const NodalElement& a, const NodalElement& b);
  friend NodalElement operator*(NodalElement a, const ArtinElement& c) { return a *= c; }
  friend NodalElement operator*(const ArtinElement& c, NodalElement a) { return a *= c; }
  friend NodalElement operator*(NodalElement a, const Scalar& c) { return a *= c; }
  friend bool operator==(const NodalElement& a, const NodalElement& b);

  NodalElement pow(unsigned e) const;

  // Reduction modulo the maximal ideal of R: signed exponent -> residue.
  std::map<int, Scalar> residue() const;

  std::string to_string() const;

 private:
  void add_term(int k, const ArtinElement& c);
  void check_algebra(const NodalElement& o) const;

  AlgebraPtr algebra_;
  std::map<int, ArtinElement> terms_;
};

// Parses an expression in x, y and the coefficient-ring variables.
NodalElement parse_nodal(const AlgebraPtr& algebra, std::string_view expression);

NodalElement nodal_mul(const NodalElement& a, const NodalElement& b);

// E(p,q): the image of alpha(p,q) = [[x, p], [q, y]] acting on A^2, pq = pi.
class EpqModule {
 public:
  // Throws DomainError unless p*q equals the algebra's pi.
  EpqModule(AlgebraPtr algebra, ArtinElement p, ArtinElement q);

  const AlgebraPtr& algebra() const { return algebra_; }
  const RingPtr& ring() const { return algebra_->ring(); }
  const ArtinElement& p() const { return p_; }
  const ArtinElement& q() const { return q_; }
  bool is_free() const { return p_.is_unit() || q_.is_unit(); }

 private:
  AlgebraPtr algebra_;
  ArtinElement p_;
  ArtinElement q_;
};

using NodalVector = std::pair<NodalElement, NodalElement>;

// alpha(p,q) applied to (f, g): (x f + p g, q f + y g).
NodalVector apply_alpha(const EpqModule& module, const NodalElement& f, const NodalElement& g);

// The unique (f, g) with f in R[x], g in R[y] and alpha(f, g) = vec, or
// nullopt when vec is not in E(p,q).
std::optional<NodalVector> epq_membership(const EpqModule& module, const NodalVector& vec);

// Unit mu with p' = mu p and q' = mu^{-1} q.  Both modules must be non-free
// over the same pi.
std::optional<ArtinElement> epq_isomorphic(const EpqModule& source, const EpqModule& target);

// Lift (b_0, ..., b_r) of b : E(p,q)^{(x) r} -> A.
struct SpinMapLocal {
  EpqModule module;
  unsigned r = 0;
  std::vector<NodalElement> components;
};

struct Twist {
  unsigned u = 0;
  unsigned v = 0;
  friend bool operator==(const Twist&, const Twist&) = default;
};

// b_i = a p^i x^{u-i} for i <= u and b_i = a w q^{r-i} y^{i-u} for i >= u.
// Requires u, v >= 1, u + v = r and p^u = w q^v.
SpinMapLocal make_spin_map(const EpqModule& module, unsigned r, unsigned u, unsigned v,
                           const ArtinElement& w, const NodalElement& a);

struct RelationCheck {
  bool ok = true;
  std::vector<unsigned> failing;  // indices i with p b_i != x b_{i+1} or y b_i != q b_{i+1}
};

RelationCheck check_spin_relations(const SpinMapLocal& b);

// (u, v) read off the reductions b_0 = x^u * unit, b_r = y^v * unit modulo
// the maximal ideal.  Throws DomainError if the reductions have another form.
Twist residual_twist(const SpinMapLocal& b);

unsigned cokernel_length(const SpinMapLocal& b);
bool is_good_cokernel(const SpinMapLocal& b);

enum class SpinClass { spin, quasi_spin, not_quasi_spin };
std::string to_string(SpinClass c);

struct SigmaReport {
  Twist twist;
  ArtinElement w;
  std::vector<ArtinElement> sigma;  // sigma_1 .. sigma_{r-1}
  bool good_cokernel = false;
  SpinClass classification = SpinClass::spin;
};

// Deviations of b from the induced-map relations.  Requires the spin
// relations to hold; throws DomainError otherwise.
SigmaReport extract_sigma(const SpinMapLocal& b);

// Branch swap x <-> y: E(p,q) -> E(q,p), b_i -> b_{r-i}.
SpinMapLocal swap_branches(const SpinMapLocal& b);

// Lift of a homomorphism E(p,q) -> E(p',q') given by [[phi+, psi+], [psi-, phi-]].
struct ModuleHom {
  NodalElement phi_plus;
  NodalElement phi_minus;
  NodalElement psi_plus;
  NodalElement psi_minus;
};

// Completes (phi+, phi-) with psi+ = (p/x)(phi+ - phi+(0)) and
// psi- = (q/y)(phi- - phi-(0)); nullopt unless p' phi-(0) = phi+(0) p and
// q' phi+(0) = phi-(0) q.
std::optional<ModuleHom> hom_complete(const NodalElement& phi_plus, const NodalElement& phi_minus,
                                      const EpqModule& source, const EpqModule& target);

struct LocalAutGroup {
  bool split = false;  // U_r x U_r (p = q = 0) rather than diagonal U_r
  unsigned r = 0;
  unsigned roots_in_field = 0;
  unsigned long order = 0;
  std::string description() const;
};

LocalAutGroup local_aut_group(const SpinMapLocal& b);

// When the base field holds an r-th root of w^{-1}, the rescaling lambda with
// lambda^r w = 1 and the module E(lambda p, lambda^{-1} q) it carries E(p,q) to.
struct TwistNormalization {
  ArtinElement lambda;
  EpqModule module;
};
std::optional<TwistNormalization> normalize_twist_unit(const EpqModule& module, unsigned r,
                                                       const ArtinElement& w);

}  // namespace spin
