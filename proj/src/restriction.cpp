#include "sphdim/restriction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sphdim {

namespace {

std::string describe(const SphericalPair& p) { return p.id; }

std::string coeff_label(const std::vector<Rational>& coords,
                        const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Rational& c = coords[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? "+" : "-";
    else if (c < 0) s += "-";
    Rational a = abs(c);
    if (a != 1) s += to_string(a);
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

}  // namespace

ExactVector PairAnalysis::restrict(const ExactVector& v) const {
  return project_onto_span(a_basis, v);
}

ExactVector PairAnalysis::weight_from_coeffs(
    const std::vector<long>& coeffs) const {
  if (coeffs.size() != mu.size())
    throw std::invalid_argument("weight coefficients: expected " +
                                std::to_string(mu.size()) + " entries");
  ExactVector lam(rs.ambient_dim);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] < 0)
      throw std::invalid_argument("weight coefficients must be nonnegative");
    lam += Rational(coeffs[i]) * mu[i];
  }
  return lam;
}

const RestrictedRootDatum* PairAnalysis::find(const ExactVector& xi) const {
  for (const auto& d : data)
    if (d.xi == xi) return &d;
  return nullptr;
}

ExactVector PairAnalysis::resolve(const XiExpr& expr) const {
  if (expr.simple_index >= 0) {
    ExactVector r =
        restrict(rs.simple_roots.at(static_cast<std::size_t>(expr.simple_index)));
    return Rational(expr.multiplier) * r;
  }
  ExactVector v(rs.ambient_dim);
  for (std::size_t i = 0; i < expr.coeffs.size(); ++i)
    v += Rational(expr.coeffs[i]) * pair.a_basis.at(i);
  return Rational(expr.multiplier) * v;
}

PairAnalysis analyze(const SphericalPair& pair,
                     std::optional<Rational> scale_override) {
  PairAnalysis a;
  a.pair = pair;
  a.rs = build_root_system(pair.type, pair.rank);
  if (pair.twist) a.rs = apply_signed_permutation(*pair.twist, a.rs);
  a.rs.form_scale = scale_override ? *scale_override
                                   : normalized_form(a.rs, pair.delta0);
  a.fundamental = fundamental_weights(a.rs);
  for (const auto& g : pair.generators) {
    ExactVector m(a.rs.ambient_dim);
    for (std::size_t i = 0; i < g.size(); ++i)
      m += Rational(g[i]) * a.fundamental[i];
    a.mu.push_back(std::move(m));
  }

  // c: common kernel of Delta_0 inside the span of the simple roots.
  {
    Matrix span_basis = nullspace(
        nullspace(a.rs.simple_roots, a.rs.ambient_dim), a.rs.ambient_dim);
    // span_basis spans the same space as the simple roots (double
    // complement); intersect with the kernel of the Delta_0 pairings by
    // solving in its coordinates.
    Matrix rows;
    for (auto i : pair.delta0) {
      const ExactVector& alpha = a.rs.simple_roots.at(i);
      ExactVector row(span_basis.size());
      for (std::size_t k = 0; k < span_basis.size(); ++k)
        row[k] = dot(alpha, span_basis[k]);
      rows.push_back(std::move(row));
    }
    for (const auto& coeff : nullspace(rows, span_basis.size())) {
      ExactVector v(a.rs.ambient_dim);
      for (std::size_t k = 0; k < span_basis.size(); ++k)
        v += coeff[k] * span_basis[k];
      a.c_basis.push_back(std::move(v));
    }
  }

  // c0: kernel of the generator pairings inside c.
  {
    Matrix rows;
    for (const auto& m : a.mu) {
      ExactVector row(a.c_basis.size());
      for (std::size_t k = 0; k < a.c_basis.size(); ++k)
        row[k] = dot(m, a.c_basis[k]);
      rows.push_back(std::move(row));
    }
    for (const auto& coeff : nullspace(rows, a.c_basis.size())) {
      ExactVector v(a.rs.ambient_dim);
      for (std::size_t k = 0; k < a.c_basis.size(); ++k)
        v += coeff[k] * a.c_basis[k];
      a.c0_basis.push_back(std::move(v));
    }
  }

  // a: orthogonal complement of c0 in c.
  {
    Matrix rows;
    for (const auto& y : a.c0_basis) {
      ExactVector row(a.c_basis.size());
      for (std::size_t k = 0; k < a.c_basis.size(); ++k)
        row[k] = dot(y, a.c_basis[k]);
      rows.push_back(std::move(row));
    }
    for (const auto& coeff : nullspace(rows, a.c_basis.size())) {
      ExactVector v(a.rs.ambient_dim);
      for (std::size_t k = 0; k < a.c_basis.size(); ++k)
        v += coeff[k] * a.c_basis[k];
      a.a_basis.push_back(std::move(v));
    }
  }
  if (a.a_basis.size() != pair.spherical_rank)
    throw std::runtime_error(describe(pair) + ": dim a = " +
                             std::to_string(a.a_basis.size()) +
                             " does not equal the spherical rank " +
                             std::to_string(pair.spherical_rank));

  // The catalog basis, when present, must span the same subspace.
  if (!pair.a_basis.empty()) {
    if (pair.a_basis.size() != a.a_basis.size())
      throw std::runtime_error(describe(pair) + ": catalog a-basis size");
    for (const auto& v : pair.a_basis)
      if (project_onto_span(a.a_basis, v) != v)
        throw std::runtime_error(describe(pair) +
                                 ": catalog a-basis vector " + v.str() +
                                 " is not in the computed subspace a");
    a.report_basis = pair.a_basis;
  }

  // Nests: group positive roots by their projection onto a.
  std::map<ExactVector, Matrix> nests;
  for (const auto& alpha : a.rs.positive_roots) {
    ExactVector xi = a.restrict(alpha);
    if (xi.is_zero()) a.psi_plus.push_back(alpha);
    else nests[xi].push_back(alpha);
  }

  a.rho_g = a.rs.rho();
  a.rho_m = half_sum(a.psi_plus, a.rs.ambient_dim);
  a.delta = ExactVector(a.rs.ambient_dim);
  for (const auto& [xi, nest] : nests)
    a.delta += rat(static_cast<long>(nest.size()), 2) * xi;

  // Principal element of m': solve <h | alpha> = 2 on Delta_0 within its
  // span; zero when Delta_0 is empty.
  a.h_m0 = ExactVector(a.rs.ambient_dim);
  if (!pair.delta0.empty()) {
    Matrix d0;
    for (auto i : pair.delta0) d0.push_back(a.rs.simple_roots.at(i));
    Matrix gram(d0.size(), ExactVector(d0.size()));
    ExactVector rhs(d0.size());
    for (std::size_t i = 0; i < d0.size(); ++i) {
      for (std::size_t j = 0; j < d0.size(); ++j)
        gram[i][j] = a.rs.form(d0[i], d0[j]);
      rhs[i] = 2;
    }
    ExactVector coeff = solve(gram, rhs);
    for (std::size_t i = 0; i < d0.size(); ++i) a.h_m0 += coeff[i] * d0[i];
  }
  a.pi_m0 = a.rho_m - Rational(1, 2) * a.h_m0;

  // Default report basis: the distinct nonzero restrictions of the simple
  // roots, which are independent for every catalog pair.
  std::vector<std::string> names;
  if (a.report_basis.empty()) {
    for (std::size_t i = 0; i < a.rs.simple_roots.size(); ++i) {
      ExactVector r = a.restrict(a.rs.simple_roots[i]);
      if (r.is_zero()) continue;
      bool seen = false;
      for (const auto& b : a.report_basis) seen = seen || b == r;
      if (!seen) {
        a.report_basis.push_back(r);
        names.push_back("l" + std::to_string(i + 1));
      }
    }
    if (a.report_basis.size() != a.a_basis.size())
      throw std::runtime_error(describe(pair) +
                               ": simple restrictions do not span a");
  } else {
    for (std::size_t i = 0; i < a.report_basis.size(); ++i)
      names.push_back("xi" + std::to_string(i + 1));
  }

  for (auto& [xi, nest] : nests) {
    RestrictedRootDatum d;
    d.xi = xi;
    d.nest = nest;
    d.delta_pairing = a.rs.form(a.delta, xi);
    Rational min_h;
    bool first = true;
    for (const auto& alpha : nest) {
      d.shifts.push_back(a.rs.form(a.rho_m, alpha));
      Rational h = a.rs.form(a.h_m0, alpha);
      if (first || h < min_h) {
        min_h = h;
        first = false;
      }
    }
    for (const auto& alpha : nest)
      if (a.rs.form(a.h_m0, alpha) == min_h) d.basic_roots.push_back(alpha);
    if (!is_integer(min_h))
      throw std::runtime_error(describe(pair) + ": non-integer h-eigenvalue");
    d.k_xi = static_cast<long>(-min_h.get_num().get_si());
    auto half = Rational(1, 2) * xi;
    auto third = Rational(1, 3) * xi;
    d.divisibility = nests.count(third) ? 3 : nests.count(half) ? 2 : 1;
    auto coords = coordinates_in_basis(a.report_basis, xi);
    if (!coords)
      throw std::runtime_error(describe(pair) +
                               ": restricted root outside the report basis");
    d.coords = *coords;
    d.label = coeff_label(d.coords, names);
    a.data.push_back(std::move(d));
  }

  std::sort(a.data.begin(), a.data.end(),
            [](const RestrictedRootDatum& x, const RestrictedRootDatum& y) {
              if (x.divisibility != y.divisibility)
                return x.divisibility < y.divisibility;
              return x.coords < y.coords;
            });

  // Classification per divisibility family.
  a.classified = !scale_override.has_value();
  std::map<ExactVector, std::size_t> index;
  for (std::size_t i = 0; i < a.data.size(); ++i) index[a.data[i].xi] = i;
  for (auto& d : a.data) {
    if (!a.classified) break;
    if (d.divisibility != 1) continue;
    FamilyShiftData f;
    f.y = d.delta_pairing;
    f.shifts[0] = d.shifts;
    std::vector<std::size_t> members{index.at(d.xi)};
    for (int m = 2; m <= 3; ++m) {
      auto it = index.find(Rational(m) * d.xi);
      if (it == index.end()) continue;
      f.shifts[m - 1] = a.data[it->second].shifts;
      members.push_back(it->second);
    }
    WFormMatch match = match_W_form(f);
    Klass k;
    if (match.matches_regular != match.matches_singular) {
      k = match.matches_regular ? Klass::Regular : Klass::Singular;
    } else {
      // Functional tie (W and W_sing coincide); the transcribed table label
      // decides, defaulting to regular.
      k = Klass::Regular;
      for (const auto& row : a.pair.expected_table)
        if (row.klass && a.resolve(row.xi) == d.xi) k = *row.klass;
    }
    d.family_signature = match.signature;
    for (auto i : members) a.data[i].klass = k;
  }

  // Marked Satake diagram.
  for (std::size_t i = 0; i < a.rs.simple_roots.size(); ++i) {
    SatakeMarking m;
    m.node = i;
    m.black = a.pair.delta0.count(i) > 0;
    if (!m.black) {
      const ExactVector& alpha = a.rs.simple_roots[i];
      m.h_value = a.rs.form(a.h_m0, alpha);
      if (!a.pi_m0.is_zero()) m.pi_value = a.rs.form(a.pi_m0, alpha);
      ExactVector r = a.restrict(alpha);
      for (std::size_t j = 0; j < a.rs.simple_roots.size(); ++j) {
        if (j == i || a.pair.delta0.count(j)) continue;
        if (a.restrict(a.rs.simple_roots[j]) == r) {
          m.arrow = j;
          break;
        }
      }
    }
    a.satake.push_back(std::move(m));
  }
  return a;
}

// --------------------------------------------------------------------------
// Structural checks
// --------------------------------------------------------------------------

namespace {
void fail(std::vector<std::string>& out, const PairAnalysis& a,
          const std::string& msg) {
  out.push_back(a.pair.id + ": " + msg);
}
}  // namespace

std::vector<std::string> check_excellence(const PairAnalysis& a) {
  std::vector<std::string> out;
  const auto& gens = a.pair.generators;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      for (std::size_t k = 0; k < gens[i].size(); ++k)
        if (gens[i][k] > 0 && gens[j][k] > 0)
          fail(out, a, "generator supports intersect at node " +
                           std::to_string(k + 1));
  for (std::size_t i = 0; i < a.mu.size(); ++i)
    if (!is_dominant(a.rs, a.mu[i]))
      fail(out, a, "generator " + std::to_string(i + 1) + " not dominant");
  if (a.pair.generators.size() != a.pair.spherical_rank)
    fail(out, a, "generator count != spherical rank");
  // Delta_0 must be exactly the simple roots orthogonal to every generator.
  for (std::size_t j = 0; j < a.rs.simple_roots.size(); ++j) {
    bool orthogonal = true;
    for (const auto& m : a.mu)
      orthogonal =
          orthogonal && a.rs.form(m, a.rs.coroot(a.rs.simple_roots[j])) == 0;
    if (orthogonal != (a.pair.delta0.count(j) > 0))
      fail(out, a, "Delta_0 membership wrong at node " + std::to_string(j + 1));
  }
  return out;
}

std::vector<std::string> check_dimension_counts(const PairAnalysis& a) {
  std::vector<std::string> out;
  std::set<std::size_t> support;
  for (const auto& g : a.pair.generators)
    for (std::size_t k = 0; k < g.size(); ++k)
      if (g[k] > 0) support.insert(k);
  const std::size_t d = support.size();
  if (a.c_basis.size() != d)
    fail(out, a, "dim c = " + std::to_string(a.c_basis.size()) +
                     ", expected " + std::to_string(d));
  if (a.c0_basis.size() != d - a.pair.spherical_rank)
    fail(out, a, "dim c0 = " + std::to_string(a.c0_basis.size()) +
                     ", expected " + std::to_string(d - a.pair.spherical_rank));
  if (a.a_basis.size() != a.pair.spherical_rank)
    fail(out, a, "dim a != spherical rank");
  return out;
}

std::vector<std::string> check_rho_decomposition(const PairAnalysis& a) {
  std::vector<std::string> out;
  if (a.rho_g != a.delta + a.rho_m)
    fail(out, a, "rho_g != delta + rho_m");
  if (a.rs.form(a.delta, a.rho_m) != 0)
    fail(out, a, "<delta | rho_m> != 0");
  return out;
}

bool verify_rho_decomposition(const PairAnalysis& a) {
  return check_rho_decomposition(a).empty();
}

std::vector<std::string> check_nest_partition(const PairAnalysis& a) {
  std::vector<std::string> out;
  // Psi+ must be exactly the positive roots in the span of Delta_0.
  Matrix d0;
  for (auto i : a.pair.delta0) d0.push_back(a.rs.simple_roots.at(i));
  std::size_t span_count = 0;
  for (const auto& alpha : a.rs.positive_roots)
    if (!d0.empty() && project_onto_span(d0, alpha) == alpha) ++span_count;
  if (span_count != a.psi_plus.size())
    fail(out, a, "Psi+ does not match span(Delta_0) roots");

  std::size_t total = 0;
  std::set<ExactVector> seen;
  for (const auto& d : a.data) {
    total += d.nest.size();
    for (const auto& alpha : d.nest) {
      if (!a.rs.is_positive_root(alpha)) fail(out, a, "nest element not a positive root");
      if (!seen.insert(alpha).second) fail(out, a, "nests overlap");
    }
  }
  if (total + a.psi_plus.size() != a.rs.positive_roots.size())
    fail(out, a, "nests do not partition Phi+ minus Psi+");
  return out;
}

std::vector<std::string> check_eigenvalue_structure(const PairAnalysis& a) {
  std::vector<std::string> out;
  for (const auto& d : a.data) {
    std::multiset<Rational> eigen;
    for (const auto& alpha : d.nest) {
      Rational h = a.rs.form(a.h_m0, alpha);
      if (!is_integer(h)) {
        fail(out, a, "non-integer eigenvalue in nest " + d.label);
        continue;
      }
      eigen.insert(h);
    }
    for (const auto& e : eigen)
      if (e < -d.k_xi || e > d.k_xi)
        fail(out, a, "eigenvalue outside [-k,k] in nest " + d.label);
    for (long e = -d.k_xi; e <= d.k_xi; e += 2)
      if (!eigen.count(Rational(e)))
        fail(out, a,
             "missing eigenvalue " + std::to_string(e) + " in nest " + d.label);
    if (d.multiplicity() < d.k_xi + 1)
      fail(out, a, "multiplicity < k+1 in nest " + d.label);
  }
  return out;
}

std::vector<std::string> check_shift_symmetry(const PairAnalysis& a) {
  std::vector<std::string> out;
  for (const auto& d : a.data) {
    std::multiset<Rational> s(d.shifts.begin(), d.shifts.end()), neg;
    for (const auto& x : d.shifts) neg.insert(-x);
    if (s != neg) fail(out, a, "shift multiset not symmetric for " + d.label);
  }
  return out;
}

std::vector<std::string> check_m_invariance(const PairAnalysis& a) {
  std::vector<std::string> out;
  Matrix psi_all = a.psi_plus;
  for (const auto& b : a.psi_plus) psi_all.push_back(-b);
  for (const auto& d : a.data) {
    std::set<ExactVector> nest(d.nest.begin(), d.nest.end());
    for (const auto& alpha : d.nest)
      for (const auto& beta : psi_all) {
        ExactVector s = alpha + beta;
        if (a.rs.is_root(s) && !nest.count(s))
          fail(out, a, "nest " + d.label + " not m-invariant");
      }
  }
  return out;
}

std::vector<std::string> check_pole_freedom(const PairAnalysis& a) {
  std::vector<std::string> out;
  for (const auto& d : a.data)
    for (const auto& s : d.shifts)
      if (d.delta_pairing + s <= 0)
        fail(out, a, "nonpositive denominator in nest " + d.label);
  return out;
}

std::vector<std::string> check_expected_table(const PairAnalysis& a) {
  std::vector<std::string> out;
  for (const auto& row : a.pair.expected_table) {
    ExactVector xi = a.resolve(row.xi);
    const RestrictedRootDatum* d = a.find(xi);
    if (!d) {
      fail(out, a, "table row " + row.xi.label + ": no such restricted root");
      continue;
    }
    auto complain = [&](const std::string& what, const std::string& got,
                        const std::string& want) {
      fail(out, a, "table row " + row.xi.label + ": " + what + " = " + got +
                       ", table says " + want);
    };
    if (d->multiplicity() != row.multiplicity)
      complain("multiplicity", std::to_string(d->multiplicity()),
               std::to_string(row.multiplicity));
    if (row.basic_count &&
        static_cast<long>(d->basic_roots.size()) != *row.basic_count)
      complain("basic root count", std::to_string(d->basic_roots.size()),
               std::to_string(*row.basic_count));
    if (row.delta_pairing && d->delta_pairing != *row.delta_pairing)
      complain("<delta|xi>", to_string(d->delta_pairing),
               to_string(*row.delta_pairing));
    if (row.h_basic && Rational(-d->k_xi) != *row.h_basic)
      complain("<h|basic>", to_string(Rational(-d->k_xi)),
               to_string(*row.h_basic));
    if (row.klass && d->klass != *row.klass)
      complain("class", klass_name(d->klass), klass_name(*row.klass));
  }
  return out;
}

std::vector<std::string> check_all(const PairAnalysis& a) {
  std::vector<std::string> out;
  for (auto&& chunk :
       {check_excellence(a), check_dimension_counts(a), check_rho_decomposition(a),
        check_nest_partition(a), check_eigenvalue_structure(a),
        check_shift_symmetry(a), check_m_invariance(a), check_pole_freedom(a),
        check_expected_table(a)})
    out.insert(out.end(), chunk.begin(), chunk.end());
  return out;
}

bool verify_nest_conjugation(const PairAnalysis& a, const SignedPermutation& w,
                             const ExactVector& xi, const ExactVector& eta) {
  const RestrictedRootDatum* src = a.find(xi);
  const RestrictedRootDatum* dst = a.find(eta);
  if (!src || !dst)
    throw std::invalid_argument("verify_nest_conjugation: unknown root");
  // Hypotheses: w permutes Delta_0 and maps basic root to basic root.
  std::set<ExactVector> d0;
  for (auto i : a.pair.delta0) d0.insert(a.rs.simple_roots.at(i));
  for (const auto& alpha : d0)
    if (!d0.count(w.apply(alpha)))
      throw std::invalid_argument(
          "verify_nest_conjugation: w does not fix Delta_0 setwise");
  if (src->basic_roots.size() != 1 || dst->basic_roots.size() != 1)
    throw std::invalid_argument(
        "verify_nest_conjugation: basic roots not unique");
  if (w.apply(src->basic_roots[0]) != dst->basic_roots[0])
    throw std::invalid_argument(
        "verify_nest_conjugation: w does not map basic root to basic root");
  // Conclusion: w maps the nest onto the target nest preserving shifts.
  if (src->nest.size() != dst->nest.size()) return false;
  std::set<ExactVector> target(dst->nest.begin(), dst->nest.end());
  for (const auto& mu : src->nest) {
    ExactVector img = w.apply(mu);
    if (!target.count(img)) return false;
    if (a.rs.form(a.rho_m, img) != a.rs.form(a.rho_m, mu)) return false;
  }
  return true;
}

}  // namespace sphdim
