#include "spin/artin.hpp"

#include <algorithm>
#include <sstream>

#include "spin/error.hpp"
#include "spin/expr.hpp"
#include "spin/linalg.hpp"

namespace spin {

namespace {

bool divides(const Monomial& g, const Monomial& m) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i] > m[i]) return false;
  }
  return true;
}

std::uint32_t degree(const Monomial& m) {
  std::uint32_t d = 0;
  for (auto e : m) d += e;
  return d;
}

}  // namespace

std::shared_ptr<const ArtinRing> ArtinRing::create(Field field, std::vector<std::string> vars,
                                                   std::vector<Monomial> ideal) {
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (vars[i].empty()) throw InputError("empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (vars[i] == vars[j]) throw InputError("duplicate variable '" + vars[i] + "'");
    }
  }
  const std::size_t m = vars.size();
  std::vector<std::uint32_t> bound(m, 0);
  for (const auto& g : ideal) {
    if (g.size() != m) {
      throw InputError("ideal generator has " + std::to_string(g.size()) + " exponents, expected " +
                       std::to_string(m));
    }
    if (degree(g) == 0) throw InputError("ideal contains 1; the quotient ring is zero");
    std::size_t nonzero = 0, where = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (g[i] != 0) {
        ++nonzero;
        where = i;
      }
    }
    if (nonzero == 1 && (bound[where] == 0 || g[where] < bound[where])) bound[where] = g[where];
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (bound[i] == 0) {
      throw InputError("ideal must contain a pure power of '" + vars[i] +
                       "' for the quotient to be finite dimensional");
    }
  }

  auto ring = std::shared_ptr<ArtinRing>(new ArtinRing());
  ring->field_ = field;
  ring->vars_ = std::move(vars);
  ring->generators_ = std::move(ideal);

  // Enumerate the box below the pure powers, keeping standard monomials.
  Monomial cur(m, 0);
  while (true) {
    if (!ring->in_ideal(cur)) ring->basis_.push_back(cur);
    std::size_t i = 0;
    while (i < m) {
      if (++cur[i] < bound[i]) break;
      cur[i] = 0;
      ++i;
    }
    if (i == m) break;
  }
  std::stable_sort(ring->basis_.begin(), ring->basis_.end(), [](const Monomial& a, const Monomial& b) {
    const auto da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  for (std::size_t i = 0; i < ring->basis_.size(); ++i) ring->index_.emplace(ring->basis_[i], i);

  const std::size_t dim = ring->basis_.size();
  ring->products_.assign(dim * dim, -1);
  Monomial prod(m);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k < m; ++k) prod[k] = ring->basis_[i][k] + ring->basis_[j][k];
      if (auto idx = ring->index_of(prod)) ring->products_[i * dim + j] = static_cast<std::int32_t>(*idx);
    }
  }
  return ring;
}

std::optional<std::size_t> ArtinRing::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> ArtinRing::variable_index(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

bool ArtinRing::in_ideal(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

std::shared_ptr<const ArtinRing> ArtinRing::quotient(const std::vector<Monomial>& extra) const {
  auto gens = generators_;
  gens.insert(gens.end(), extra.begin(), extra.end());
  return create(field_, vars_, std::move(gens));
}

ArtinElement::ArtinElement(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw InputError("null ring");
  coeffs_.assign(ring_->dimension(), Scalar{ring_->field(), 0});
}

ArtinElement::ArtinElement(RingPtr ring, std::vector<Scalar> coefficients)
    : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (!ring_) throw InputError("null ring");
  if (coeffs_.size() != ring_->dimension()) throw InputError("coefficient vector has wrong length");
  for (const auto& c : coeffs_) {
    if (!(c.field() == ring_->field())) throw InputError("coefficient from a different field");
  }
}

ArtinElement ArtinElement::one(RingPtr ring) { return constant(std::move(ring), 1); }

ArtinElement ArtinElement::constant(RingPtr ring, const Scalar& c) {
  ArtinElement e{std::move(ring)};
  e.coeffs_[0] = c;
  return e;
}

ArtinElement ArtinElement::constant(RingPtr ring, long c) {
  const Field f = ring->field();
  return constant(std::move(ring), Scalar{f, c});
}

ArtinElement ArtinElement::monomial(RingPtr ring, const Monomial& m, const Scalar& c) {
  if (m.size() != ring->variable_count()) throw InputError("monomial has wrong arity");
  ArtinElement e{ring};
  if (auto idx = ring->index_of(m)) e.coeffs_[*idx] = c;
  return e;
}

ArtinElement ArtinElement::variable(RingPtr ring, std::string_view name) {
  const auto idx = ring->variable_index(name);
  if (!idx) throw InputError("unknown variable '" + std::string(name) + "'");
  Monomial m(ring->variable_count(), 0);
  m[*idx] = 1;
  const Field f = ring->field();
  return monomial(std::move(ring), m, Scalar{f, 1});
}

bool ArtinElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

void ArtinElement::check_ring(const ArtinElement& o) const {
  if (ring_ != o.ring_) throw InputError("elements belong to different rings");
}

ArtinElement ArtinElement::operator-() const {
  ArtinElement e = *this;
  for (auto& c : e.coeffs_) c = -c;
  return e;
}

ArtinElement& ArtinElement::operator+=(const ArtinElement& o) {
  check_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

ArtinElement& ArtinElement::operator-=(const ArtinElement& o) {
  check_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

ArtinElement& ArtinElement::operator*=(const ArtinElement& o) {
  *this = *this * o;
  return *this;
}

ArtinElement& ArtinElement::operator*=(const Scalar& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ArtinElement operator*(const ArtinElement& a, const ArtinElement& b) {
  a.check_ring(b);
  ArtinElement out{a.ring_};
  const std::size_t dim = a.coeffs_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      if (auto k = a.ring_->product_index(i, j)) out.coeffs_[*k] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

bool operator==(const ArtinElement& a, const ArtinElement& b) {
  return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
}

ArtinElement ArtinElement::pow(unsigned e) const {
  ArtinElement result = one(ring_);
  ArtinElement base = *this;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

std::vector<std::pair<Monomial, Scalar>> ArtinElement::terms() const {
  std::vector<std::pair<Monomial, Scalar>> out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) out.emplace_back(ring_->basis()[i], coeffs_[i]);
  }
  return out;
}

std::string ArtinElement::to_string() const {
  const auto ts = terms();
  if (ts.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : ts) {
    std::string coeff = c.to_string();
    const bool negative = !coeff.empty() && coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_var = false;
    std::ostringstream vars;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      if (has_var) vars << '*';
      vars << ring_->variables()[k];
      if (mono[k] > 1) vars << '^' << mono[k];
      has_var = true;
    }
    if (!has_var) {
      os << coeff;
    } else {
      if (coeff != "1") os << coeff << '*';
      os << vars.str();
    }
  }
  return os.str();
}

namespace {

struct RingTraits {
  RingPtr ring;
  ArtinElement from_scalar(const Scalar& s) const { return ArtinElement::constant(ring, s); }
  ArtinElement identifier(std::string_view name) const { return ArtinElement::variable(ring, name); }
  std::optional<Scalar> as_scalar(const ArtinElement& e) const {
    for (std::size_t i = 1; i < e.coefficients().size(); ++i) {
      if (!e.coefficient(i).is_zero()) return std::nullopt;
    }
    return e.constant_term();
  }
  Field field() const { return ring->field(); }
};

}  // namespace

ArtinElement normalize(const RingPtr& ring, std::string_view expression) {
  RingTraits traits{ring};
  return expr::parse(traits, expression);
}

ArtinElement invert(const ArtinElement& a) {
  if (!a.is_unit()) throw DomainError("cannot invert non-unit " + a.to_string());
  // a = c(1 + n) with n nilpotent; (1+n)^{-1} = sum (-n)^k.
  const Scalar c_inv = a.constant_term().inverse();
  const ArtinElement n = a * c_inv - ArtinElement::one(a.ring());
  const ArtinElement minus_n = -n;
  ArtinElement sum = ArtinElement::one(a.ring());
  ArtinElement power = minus_n;
  for (std::size_t k = 0; k <= a.ring()->dimension() && !power.is_zero(); ++k) {
    sum += power;
    power *= minus_n;
  }
  return sum * c_inv;
}

ArtinElement rth_root_lift(const ArtinElement& gamma, unsigned r, const Scalar& root0) {
  const RingPtr& ring = gamma.ring();
  if (!ring->field().allows_order(r)) {
    throw DomainError("r = " + std::to_string(r) + " is not invertible in " + ring->field().name());
  }
  if (!(root0.field() == ring->field())) throw InputError("root0 lies in a different field");
  if (!(root0.pow(r) == gamma.constant_term())) {
    throw DomainError("root0^r does not match the constant term of " + gamma.to_string());
  }
  if (root0.is_zero()) throw DomainError("rth_root_lift needs a unit");
  // Newton step lambda - (lambda^r - gamma) / (r lambda^{r-1}); each step at
  // least doubles the power of the maximal ideal the error lies in.
  const Scalar r_scalar{ring->field(), static_cast<long>(r)};
  ArtinElement lambda = ArtinElement::constant(ring, root0);
  for (std::size_t iter = 0; iter <= ring->dimension() + 1; ++iter) {
    const ArtinElement err = lambda.pow(r) - gamma;
    if (err.is_zero()) return lambda;
    lambda -= err * invert(lambda.pow(r - 1) * r_scalar);
  }
  throw DomainError("r-th root lift did not converge");
}

std::optional<ArtinElement> solve_unit_multiplier(
    std::span<const std::pair<ArtinElement, ArtinElement>> equations) {
  if (equations.empty()) throw InputError("no equations");
  const RingPtr& ring = equations.front().first.ring();
  const Field field = ring->field();
  const std::size_t dim = ring->dimension();

  ScalarMatrix matrix;
  std::vector<Scalar> rhs;
  for (const auto& [a, b] : equations) {
    if (a.ring() != ring || b.ring() != ring) throw InputError("elements belong to different rings");
    // Column j is a * basis_j.
    std::vector<ArtinElement> columns;
    columns.reserve(dim);
    for (std::size_t j = 0; j < dim; ++j) {
      columns.push_back(a * ArtinElement::monomial(ring, ring->basis()[j], Scalar{field, 1}));
    }
    for (std::size_t i = 0; i < dim; ++i) {
      std::vector<Scalar> row;
      row.reserve(dim);
      for (std::size_t j = 0; j < dim; ++j) row.push_back(columns[j].coefficient(i));
      matrix.push_back(std::move(row));
      rhs.push_back(b.coefficient(i));
    }
  }
  const auto solution = solve_linear(matrix, rhs, dim, field);
  if (!solution) return std::nullopt;

  // The unit condition is the constant coordinate being nonzero.
  std::vector<Scalar> x = solution->particular;
  if (x[0].is_zero()) {
    const auto it = std::find_if(solution->kernel.begin(), solution->kernel.end(),
                                 [](const std::vector<Scalar>& v) { return !v[0].is_zero(); });
    if (it == solution->kernel.end()) return std::nullopt;
    for (std::size_t j = 0; j < dim; ++j) x[j] += (*it)[j];
  }
  return ArtinElement{ring, std::move(x)};
}

std::optional<ArtinElement> associate_solve(const ArtinElement& a, const ArtinElement& b) {
  const std::pair<ArtinElement, ArtinElement> eq{a, b};
  return solve_unit_multiplier(std::span{&eq, 1});
}

ArtinElement reduce_to(const ArtinElement& a, const RingPtr& target) {
  const RingPtr& source = a.ring();
  if (!(source->field() == target->field()) || source->variables() != target->variables()) {
    throw InputError("target ring is not a quotient of the source ring");
  }
  for (const auto& g : source->generators()) {
    if (!target->in_ideal(g)) throw InputError("target ideal does not contain the source ideal");
  }
  ArtinElement out{target};
  for (const auto& [mono, c] : a.terms()) out += ArtinElement::monomial(target, mono, c);
  return out;
}

}  // namespace spin
