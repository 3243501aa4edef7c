#include "spin/local_model.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "spin/error.hpp"
#include "spin/expr.hpp"

namespace spin {

std::shared_ptr<const NodalAlgebra> NodalAlgebra::create(ArtinElement pi, int degree_cap) {
  if (degree_cap < 1) throw InputError("degree cap must be positive");
  for (const auto& name : pi.ring()->variables()) {
    if (name == "x" || name == "y") {
      throw InputError("coefficient ring may not use the branch names x or y");
    }
  }
  if (pi.is_unit()) throw DomainError("pi must lie in the maximal ideal");
  return std::shared_ptr<const NodalAlgebra>(new NodalAlgebra(std::move(pi), degree_cap));
}

NodalElement::NodalElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {
  if (!algebra_) throw InputError("null nodal algebra");
}

NodalElement NodalElement::term(AlgebraPtr algebra, int k, const ArtinElement& c) {
  NodalElement e{std::move(algebra)};
  e.add_term(k, c);
  return e;
}

NodalElement NodalElement::constant(AlgebraPtr algebra, const ArtinElement& c) {
  return term(std::move(algebra), 0, c);
}

NodalElement NodalElement::constant(AlgebraPtr algebra, long c) {
  const RingPtr ring = algebra->ring();
  return term(std::move(algebra), 0, ArtinElement::constant(ring, c));
}

NodalElement NodalElement::x(AlgebraPtr algebra, unsigned power) {
  const RingPtr ring = algebra->ring();
  return term(std::move(algebra), static_cast<int>(power), ArtinElement::one(ring));
}

NodalElement NodalElement::y(AlgebraPtr algebra, unsigned power) {
  const RingPtr ring = algebra->ring();
  return term(std::move(algebra), -static_cast<int>(power), ArtinElement::one(ring));
}

void NodalElement::add_term(int k, const ArtinElement& c) {
  if (c.ring() != algebra_->ring()) throw InputError("coefficient from a different ring");
  if (std::abs(k) > algebra_->degree_cap()) {
    throw DomainError("exponent " + std::to_string(std::abs(k)) + " exceeds degree cap " +
                      std::to_string(algebra_->degree_cap()));
  }
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void NodalElement::check_algebra(const NodalElement& o) const {
  if (algebra_ != o.algebra_) throw InputError("elements belong to different nodal algebras");
}

ArtinElement NodalElement::coefficient(int k) const {
  auto it = terms_.find(k);
  if (it == terms_.end()) return ArtinElement::zero(algebra_->ring());
  return it->second;
}

NodalElement NodalElement::operator-() const {
  NodalElement e{algebra_};
  for (const auto& [k, c] : terms_) e.terms_.emplace(k, -c);
  return e;
}

NodalElement& NodalElement::operator+=(const NodalElement& o) {
  check_algebra(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

NodalElement& NodalElement::operator-=(const NodalElement& o) {
  check_algebra(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

NodalElement& NodalElement::operator*=(const ArtinElement& c) {
  NodalElement out{algebra_};
  for (const auto& [k, coeff] : terms_) out.add_term(k, coeff * c);
  *this = std::move(out);
  return *this;
}

NodalElement& NodalElement::operator*=(const Scalar& c) {
  NodalElement out{algebra_};
  for (const auto& [k, coeff] : terms_) out.add_term(k, coeff * c);
  *this = std::move(out);
  return *this;
}

NodalElement operator*(const NodalElement& a, const NodalElement& b) {
  a.check_algebra(b);
  const ArtinElement& pi = a.algebra_->pi();
  NodalElement out{a.algebra_};
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      ArtinElement c = ca * cb;
      if ((ka > 0 && kb < 0) || (ka < 0 && kb > 0)) {
        c *= pi.pow(static_cast<unsigned>(std::min(std::abs(ka), std::abs(kb))));
      }
      out.add_term(ka + kb, c);
    }
  }
  return out;
}

bool operator==(const NodalElement& a, const NodalElement& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

NodalElement NodalElement::pow(unsigned e) const {
  NodalElement result = constant(algebra_, 1);
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::map<int, Scalar> NodalElement::residue() const {
  std::map<int, Scalar> out;
  for (const auto& [k, c] : terms_) {
    if (!c.constant_term().is_zero()) out.emplace(k, c.constant_term());
  }
  return out;
}

std::string NodalElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Constant, then x-powers, then y-powers.
  std::vector<std::pair<int, const ArtinElement*>> order;
  if (auto it = terms_.find(0); it != terms_.end()) order.emplace_back(0, &it->second);
  for (const auto& [k, c] : terms_) {
    if (k > 0) order.emplace_back(k, &c);
  }
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (it->first < 0) order.emplace_back(it->first, &it->second);
  }
  for (const auto& [k, c] : order) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    if (k != 0) {
      mono = k > 0 ? "x" : "y";
      if (std::abs(k) > 1) mono += "^" + std::to_string(std::abs(k));
    }
    const std::string coeff = c->to_string();
    if (mono.empty()) {
      os << coeff;
    } else if (coeff == "1") {
      os << mono;
    } else if (c->terms().size() == 1) {
      os << coeff << '*' << mono;
    } else {
      os << '(' << coeff << ")*" << mono;
    }
  }
  return os.str();
}

namespace {

struct NodalTraits {
  AlgebraPtr algebra;
  NodalElement from_scalar(const Scalar& s) const {
    return NodalElement::constant(algebra, ArtinElement::constant(algebra->ring(), s));
  }
  NodalElement identifier(std::string_view name) const {
    if (name == "x") return NodalElement::x(algebra);
    if (name == "y") return NodalElement::y(algebra);
    return NodalElement::constant(algebra, ArtinElement::variable(algebra->ring(), name));
  }
  std::optional<Scalar> as_scalar(const NodalElement& e) const {
    if (e.is_zero()) return Scalar{algebra->ring()->field(), 0};
    if (e.terms().size() != 1 || e.terms().begin()->first != 0) return std::nullopt;
    const ArtinElement& c = e.terms().begin()->second;
    for (std::size_t i = 1; i < c.coefficients().size(); ++i) {
      if (!c.coefficient(i).is_zero()) return std::nullopt;
    }
    return c.constant_term();
  }
  Field field() const { return algebra->ring()->field(); }
};

}  // namespace

NodalElement parse_nodal(const AlgebraPtr& algebra, std::string_view expression) {
  NodalTraits traits{algebra};
  return expr::parse(traits, expression);
}

NodalElement nodal_mul(const NodalElement& a, const NodalElement& b) { return a * b; }

EpqModule::EpqModule(AlgebraPtr algebra, ArtinElement p, ArtinElement q)
    : algebra_(std::move(algebra)), p_(std::move(p)), q_(std::move(q)) {
  if (p_.ring() != algebra_->ring() || q_.ring() != algebra_->ring()) {
    throw InputError("p and q must lie in the coefficient ring of the algebra");
  }
  if (!(p_ * q_ == algebra_->pi())) {
    throw DomainError("p*q = " + (p_ * q_).to_string() + " differs from pi = " +
                      algebra_->pi().to_string());
  }
}

NodalVector apply_alpha(const EpqModule& module, const NodalElement& f, const NodalElement& g) {
  const AlgebraPtr& alg = module.algebra();
  const NodalElement x = NodalElement::x(alg);
  const NodalElement y = NodalElement::y(alg);
  return {x * f + g * module.p(), f * module.q() + y * g};
}

std::optional<NodalVector> epq_membership(const EpqModule& module, const NodalVector& vec) {
  const AlgebraPtr& alg = module.algebra();
  const auto& [first, second] = vec;
  if (first.algebra() != alg || second.algebra() != alg) {
    throw InputError("vector does not live over the module's algebra");
  }
  // x f + p g = first fixes f_n = first_{n+1}; q f + y g = second fixes
  // g_m = second_{-(m+1)}.  What remains are consistency conditions.
  NodalElement f{alg}, g{alg};
  for (const auto& [k, c] : first.terms()) {
    if (k >= 1) f += NodalElement::term(alg, k - 1, c);
  }
  for (const auto& [k, c] : second.terms()) {
    if (k <= -1) g += NodalElement::term(alg, k + 1, c);
  }
  if (!(apply_alpha(module, f, g) == vec)) return std::nullopt;
  return NodalVector{std::move(f), std::move(g)};
}

std::optional<ArtinElement> epq_isomorphic(const EpqModule& source, const EpqModule& target) {
  if (source.ring() != target.ring()) throw InputError("modules over different coefficient rings");
  if (!(source.algebra()->pi() == target.algebra()->pi())) {
    throw DomainError("modules live over different pi");
  }
  if (source.is_free() || target.is_free()) {
    throw DomainError("isomorphism criterion needs p, q, p', q' in the maximal ideal");
  }
  // mu p = p' and mu q' = q, solved jointly.
  const std::pair<ArtinElement, ArtinElement> equations[] = {{source.p(), target.p()},
                                                             {target.q(), source.q()}};
  return solve_unit_multiplier(equations);
}

SpinMapLocal make_spin_map(const EpqModule& module, unsigned r, unsigned u, unsigned v,
                           const ArtinElement& w, const NodalElement& a) {
  if (u == 0 || v == 0) throw DomainError("twist (u, v) must have u, v >= 1");
  if (u + v != r) throw DomainError("twist must satisfy u + v = r");
  if (!module.ring()->field().allows_order(r)) {
    throw DomainError("r = " + std::to_string(r) + " is not invertible in the base field");
  }
  if (!w.is_unit()) throw DomainError("w must be a unit");
  if (a.algebra() != module.algebra()) throw InputError("a lives over a different algebra");
  if (!a.constant_term().is_unit()) throw DomainError("a must be a unit of A");
  if (!(module.p().pow(u) == w * module.q().pow(v))) {
    throw DomainError("p^u != w q^v");
  }
  const AlgebraPtr& alg = module.algebra();
  SpinMapLocal b{module, r, {}};
  b.components.reserve(r + 1);
  for (unsigned i = 0; i <= r; ++i) {
    if (i <= u) {
      b.components.push_back(a * NodalElement::x(alg, u - i) * module.p().pow(i));
    } else {
      b.components.push_back(a * NodalElement::y(alg, i - u) * (w * module.q().pow(r - i)));
    }
  }
  return b;
}

RelationCheck check_spin_relations(const SpinMapLocal& b) {
  if (b.components.size() != b.r + 1) {
    throw InputError("expected " + std::to_string(b.r + 1) + " components, got " +
                     std::to_string(b.components.size()));
  }
  const AlgebraPtr& alg = b.module.algebra();
  const NodalElement x = NodalElement::x(alg);
  const NodalElement y = NodalElement::y(alg);
  RelationCheck out;
  for (unsigned i = 0; i < b.r; ++i) {
    const auto& bi = b.components[i];
    const auto& next = b.components[i + 1];
    const bool first = bi * b.module.p() == x * next;
    const bool second = y * bi == next * b.module.q();
    if (!first || !second) {
      out.ok = false;
      out.failing.push_back(i);
    }
  }
  return out;
}

Twist residual_twist(const SpinMapLocal& b) {
  if (b.components.size() != b.r + 1 || b.r == 0) throw InputError("malformed spin map");
  if (b.module.is_free()) throw DomainError("E(p,q) is free here: p or q is a unit");
  const auto head = b.components.front().residue();
  const auto tail = b.components.back().residue();
  if (head.empty()) throw DomainError("b_0 vanishes modulo the maximal ideal");
  if (tail.empty()) throw DomainError("b_r vanishes modulo the maximal ideal");
  if (head.begin()->first <= 0) {
    throw DomainError(head.begin()->first == 0 && head.size() == 1
                          ? "b_0 is a unit modulo the maximal ideal (u = 0)"
                          : "b_0 modulo the maximal ideal is not x^u times a unit series");
  }
  if (tail.rbegin()->first >= 0) {
    throw DomainError(tail.rbegin()->first == 0 && tail.size() == 1
                          ? "b_r is a unit modulo the maximal ideal (v = 0)"
                          : "b_r modulo the maximal ideal is not y^v times a unit series");
  }
  for (unsigned i = 1; i < b.r; ++i) {
    if (!b.components[i].residue().empty()) {
      throw DomainError("b_" + std::to_string(i) + " does not vanish modulo the maximal ideal");
    }
  }
  return Twist{static_cast<unsigned>(head.begin()->first),
               static_cast<unsigned>(-tail.rbegin()->first)};
}

unsigned cokernel_length(const SpinMapLocal& b) {
  const Twist t = residual_twist(b);
  return t.u + t.v - 1;
}

bool is_good_cokernel(const SpinMapLocal& b) { return cokernel_length(b) == b.r - 1; }

std::string to_string(SpinClass c) {
  switch (c) {
    case SpinClass::spin:
      return "spin";
    case SpinClass::quasi_spin:
      return "quasi-spin";
    case SpinClass::not_quasi_spin:
      return "not-quasi-spin";
  }
  return "unknown";
}

SigmaReport extract_sigma(const SpinMapLocal& b) {
  const auto relations = check_spin_relations(b);
  if (!relations.ok) {
    throw DomainError("spin relations fail at index " + std::to_string(relations.failing.front()));
  }
  const Twist twist = residual_twist(b);
  const NodalElement& head = b.components.front();
  const NodalElement& tail = b.components.back();
  const ArtinElement b0u = head.x_coefficient(twist.u);
  const ArtinElement brv = tail.y_coefficient(twist.v);
  if (!b0u.is_unit() || !brv.is_unit()) throw DomainError("b_{0,u} and b_{r,-v} must be units");
  const ArtinElement w = brv * invert(b0u);
  const ArtinElement w_inv = invert(w);
  const ArtinElement& pi = b.module.algebra()->pi();
  const int r = static_cast<int>(b.r);
  const int u = static_cast<int>(twist.u);

  SigmaReport report{twist, w, {}, twist.u + twist.v == b.r, SpinClass::spin};
  for (int i = 1; i < r; ++i) {
    if (i < u) {
      report.sigma.push_back(head.coefficient(i) -
                             pi.pow(static_cast<unsigned>(u - i)) * w_inv * tail.coefficient(i - r));
    } else if (i > u) {
      report.sigma.push_back(tail.coefficient(i - r) -
                             w * pi.pow(static_cast<unsigned>(i - u)) * head.coefficient(i));
    } else {
      report.sigma.push_back(ArtinElement::zero(b.module.ring()));
    }
  }
  const bool any_unit = std::any_of(report.sigma.begin(), report.sigma.end(),
                                    [](const ArtinElement& s) { return s.is_unit(); });
  const bool all_zero = std::all_of(report.sigma.begin(), report.sigma.end(),
                                    [](const ArtinElement& s) { return s.is_zero(); });
  if (!report.good_cokernel || any_unit) {
    report.classification = SpinClass::not_quasi_spin;
  } else if (!all_zero) {
    report.classification = SpinClass::quasi_spin;
  }
  return report;
}

namespace {

NodalElement swap_xy(const NodalElement& e) {
  NodalElement out{e.algebra()};
  for (const auto& [k, c] : e.terms()) out += NodalElement::term(e.algebra(), -k, c);
  return out;
}

}  // namespace

SpinMapLocal swap_branches(const SpinMapLocal& b) {
  SpinMapLocal out{EpqModule{b.module.algebra(), b.module.q(), b.module.p()}, b.r, {}};
  for (auto it = b.components.rbegin(); it != b.components.rend(); ++it) {
    out.components.push_back(swap_xy(*it));
  }
  return out;
}

std::optional<ModuleHom> hom_complete(const NodalElement& phi_plus, const NodalElement& phi_minus,
                                      const EpqModule& source, const EpqModule& target) {
  const AlgebraPtr& alg = source.algebra();
  if (target.ring() != source.ring() || phi_plus.algebra() != alg || phi_minus.algebra() != alg) {
    throw InputError("homomorphism data over different algebras");
  }
  if (!phi_plus.is_x_only()) throw InputError("phi+ must lie in R[x]");
  if (!phi_minus.is_y_only()) throw InputError("phi- must lie in R[y]");
  const ArtinElement c_plus = phi_plus.constant_term();
  const ArtinElement c_minus = phi_minus.constant_term();
  if (!(target.p() * c_minus == c_plus * source.p())) return std::nullopt;
  if (!(target.q() * c_plus == c_minus * source.q())) return std::nullopt;

  NodalElement psi_plus{alg}, psi_minus{alg};
  for (const auto& [k, c] : phi_plus.terms()) {
    if (k >= 1) psi_plus += NodalElement::term(alg, k - 1, c * source.p());
  }
  for (const auto& [k, c] : phi_minus.terms()) {
    if (k <= -1) psi_minus += NodalElement::term(alg, k + 1, c * source.q());
  }
  return ModuleHom{phi_plus, phi_minus, std::move(psi_plus), std::move(psi_minus)};
}

std::string LocalAutGroup::description() const {
  const std::string ur = "U_" + std::to_string(r);
  return split ? ur + " x " + ur : ur;
}

LocalAutGroup local_aut_group(const SpinMapLocal& b) {
  const auto relations = check_spin_relations(b);
  if (!relations.ok) throw DomainError("not a valid spin map: relations fail");
  residual_twist(b);
  LocalAutGroup g;
  g.r = b.r;
  g.split = b.module.p().is_zero() && b.module.q().is_zero();
  g.roots_in_field = b.module.ring()->field().roots_of_unity(b.r);
  g.order = g.split ? static_cast<unsigned long>(g.roots_in_field) * g.roots_in_field
                    : g.roots_in_field;
  return g;
}

std::optional<TwistNormalization> normalize_twist_unit(const EpqModule& module, unsigned r,
                                                       const ArtinElement& w) {
  const ArtinElement target = invert(w);
  const auto root0 = target.constant_term().rth_root(r);
  if (!root0) return std::nullopt;
  ArtinElement lambda = rth_root_lift(target, r, *root0);
  EpqModule moved{module.algebra(), lambda * module.p(), invert(lambda) * module.q()};
  return TwistNormalization{std::move(lambda), std::move(moved)};
}

}  // namespace spin
