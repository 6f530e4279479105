#include "sphdim/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace sphdim {

namespace {

constexpr auto kReg = Klass::Regular;
constexpr auto kSing = Klass::Singular;

std::set<std::size_t> idx(std::initializer_list<long> one_based) {
  std::set<std::size_t> s;
  for (long i : one_based) s.insert(static_cast<std::size_t>(i - 1));
  return s;
}

std::set<std::size_t> idx_range(long lo, long hi) {  // 1-based, inclusive
  std::set<std::size_t> s;
  for (long i = lo; i <= hi; ++i) s.insert(static_cast<std::size_t>(i - 1));
  return s;
}

// Fundamental-weight coefficient vector from 1-based (index, coeff) pairs.
std::vector<long> gen(std::size_t rank,
                      std::initializer_list<std::pair<long, long>> parts) {
  std::vector<long> g(rank, 0);
  for (auto [i, c] : parts) g[static_cast<std::size_t>(i - 1)] = c;
  return g;
}

struct RowBuilder {
  SphericalPair* pair;

  ExpectedRow& add() {
    pair->expected_table.emplace_back();
    return pair->expected_table.back();
  }

  // Row keyed by coefficients in the pair's a-basis.
  void basis(std::string label, std::vector<long> coeffs, long mult,
             std::optional<long> nbasic, std::optional<Rational> delta,
             std::optional<Rational> h, std::optional<Klass> k) {
    ExpectedRow& r = add();
    r.xi.coeffs = std::move(coeffs);
    r.xi.label = std::move(label);
    r.multiplicity = mult;
    r.basic_count = nbasic;
    r.delta_pairing = std::move(delta);
    r.h_basic = std::move(h);
    r.klass = k;
  }

  // Row keyed by a multiple of the restriction of the 1-based simple root i.
  void simple(std::string label, long i, int multiplier, long mult,
              std::optional<long> nbasic, std::optional<Rational> h,
              std::optional<Klass> k) {
    ExpectedRow& r = add();
    r.xi.simple_index = static_cast<int>(i - 1);
    r.xi.multiplier = multiplier;
    r.xi.label = std::move(label);
    r.multiplicity = mult;
    r.basic_count = nbasic;
    r.h_basic = std::move(h);
    r.klass = k;
  }
};

void require(bool ok, const std::string& family, const std::string& what) {
  if (!ok)
    throw std::invalid_argument("instantiate(" + family +
                                "): constraint violated: " + what);
}

long get_param(const std::map<std::string, long>& params,
               const std::string& family, const std::string& name) {
  auto it = params.find(name);
  if (it == params.end())
    throw std::invalid_argument("instantiate(" + family +
                                "): missing parameter " + name);
  return it->second;
}

std::string instance_id(const std::string& family,
                        const std::vector<std::string>& names,
                        const std::map<std::string, long>& params) {
  if (names.empty()) return family;
  std::ostringstream os;
  os << family << "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) os << ",";
    os << names[i] << "=" << params.at(names[i]);
  }
  os << ")";
  return os.str();
}

ExactVector frac(std::size_t dim,
                 std::initializer_list<std::pair<long, Rational>> parts) {
  ExactVector v(dim);
  for (const auto& [i, c] : parts) v[static_cast<std::size_t>(i - 1)] = c;
  return v;
}

void basis_row(RowBuilder& rb, std::vector<long> coeffs, long mult,
               long nbasic, Rational delta, Rational h, Klass k) {
  std::string label;
  {
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      long c = coeffs[i];
      if (c == 0) continue;
      if (!s.empty()) s += c > 0 ? "+" : "-";
      else if (c < 0) s += "-";
      long a = std::abs(c);
      if (a != 1) s += std::to_string(a);
      s += "xi" + std::to_string(i + 1);
    }
    label = s.empty() ? "0" : s;
  }
  rb.basis(label, std::move(coeffs), mult, nbasic, std::move(delta),
           std::move(h), k);
}

// ---------------------------------------------------------------------------
// Rank-one pairs
// ---------------------------------------------------------------------------

SphericalPair make_aiv(long l) {
  require(l >= 1, "AIV", "l >= 1");
  SphericalPair p;
  p.family = "AIV";
  p.params = {{"l", l}};
  p.type = LieType::A;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = 1;
  RowBuilder rb{&p};
  const std::size_t dim = p.rank + 1;
  if (l == 1) {
    p.generators = {gen(p.rank, {{1, 2}})};
    p.a_basis = {frac(dim, {{1, 1}, {2, -1}})};
    basis_row(rb, {1}, 1, 1, 1, 0, kReg);
  } else {
    p.generators = {gen(p.rank, {{1, 1}, {l, 1}})};
    if (l >= 3) p.delta0 = idx_range(2, l - 1);
    p.a_basis = {frac(dim, {{1, Rational(1, 2)}, {l + 1, Rational(-1, 2)}})};
    basis_row(rb, {1}, 2 * l - 2, 2, rat(l, 2), 2 - l, kReg);
    basis_row(rb, {2}, 1, 1, l, 0, kReg);
  }
  return p;
}

SphericalPair make_bii(long l) {
  require(l >= 2, "BII", "l >= 2");
  SphericalPair p;
  p.family = "BII";
  p.params = {{"l", l}};
  p.type = LieType::B;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = 1;
  p.generators = {gen(p.rank, {{1, 1}})};
  p.delta0 = idx_range(2, l);
  p.a_basis = {frac(p.rank, {{1, 1}})};
  RowBuilder rb{&p};
  if (l >= 3)
    basis_row(rb, {1}, 2 * l - 1, 1, rat(2 * l - 1, 2), 2 - 2 * l, kReg);
  else  // single-length Delta_0, form scaled to 2
    basis_row(rb, {1}, 3, 1, 3, -2, kReg);
  return p;
}

SphericalPair make_dii(long l) {
  require(l >= 2, "DII", "l >= 2");
  SphericalPair p;
  p.family = "DII";
  p.params = {{"l", l}};
  p.type = LieType::D;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = 1;
  p.a_basis = {frac(p.rank, {{1, 1}})};
  RowBuilder rb{&p};
  if (l >= 3) {
    p.generators = {gen(p.rank, {{1, 1}})};
    p.delta0 = idx_range(2, l);
    basis_row(rb, {1}, 2 * l - 2, 1, l - 1, 4 - 2 * l, kReg);
  } else {  // g = D2 = A1 x A1
    p.generators = {gen(p.rank, {{1, 1}, {2, 1}})};
    basis_row(rb, {1}, 2, 2, 1, 0, kReg);
  }
  return p;
}

SphericalPair make_cii_rk1(long l) {
  require(l >= 3, "CII-rk1", "l >= 3");
  SphericalPair p;
  p.family = "CII-rk1";
  p.params = {{"l", l}};
  p.type = LieType::C;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = 1;
  p.generators = {gen(p.rank, {{2, 1}})};
  p.delta0 = idx({1});
  for (long i = 3; i <= l; ++i) p.delta0.insert(static_cast<std::size_t>(i - 1));
  p.a_basis = {frac(p.rank, {{1, Rational(1, 2)}, {2, Rational(1, 2)}})};
  RowBuilder rb{&p};
  basis_row(rb, {1}, 4 * (l - 2), 1, rat(2 * l - 1, 2), 4 - 2 * l, kReg);
  basis_row(rb, {2}, 3, 1, 2 * l - 1, -2, kReg);
  return p;
}

SphericalPair make_fii() {
  SphericalPair p;
  p.family = "FII";
  p.type = LieType::F4;
  p.rank = 4;
  p.symmetric = true;
  p.spherical_rank = 1;
  p.generators = {gen(4, {{4, 1}})};
  p.delta0 = idx({1, 2, 3});
  p.a_basis = {frac(4, {{1, Rational(1, 2)}})};
  RowBuilder rb{&p};
  basis_row(rb, {1}, 8, 1, Rational(11, 4), -6, kReg);
  basis_row(rb, {2}, 7, 1, Rational(11, 2), -6, kReg);
  return p;
}

SphericalPair make_b3g2() {
  SphericalPair p;
  p.family = "B3G2";
  p.type = LieType::B;
  p.rank = 3;
  p.symmetric = false;
  p.spherical_rank = 1;
  p.generators = {gen(3, {{3, 1}})};
  p.delta0 = idx({1, 2});
  p.a_basis = {
      frac(3, {{1, Rational(1, 3)}, {2, Rational(1, 3)}, {3, Rational(1, 3)}})};
  RowBuilder rb{&p};
  basis_row(rb, {1}, 3, 1, Rational(3, 2), -2, kReg);
  basis_row(rb, {2}, 3, 1, 3, -2, kReg);
  return p;
}

SphericalPair make_g2a2() {
  SphericalPair p;
  p.family = "G2A2";
  p.type = LieType::G2;
  p.rank = 2;
  p.symmetric = false;
  p.spherical_rank = 1;
  p.generators = {gen(2, {{1, 1}})};
  p.delta0 = idx({2});
  p.a_basis = {frac(3, {{2, Rational(-1, 2)}, {3, Rational(1, 2)}})};
  RowBuilder rb{&p};
  basis_row(rb, {1}, 2, 1, Rational(5, 6), -1, kReg);
  basis_row(rb, {2}, 1, 1, Rational(5, 3), 0, kReg);
  basis_row(rb, {3}, 2, 1, Rational(5, 2), -1, kReg);
  return p;
}

// ---------------------------------------------------------------------------
// Higher-rank non-symmetric pairs
// ---------------------------------------------------------------------------

SphericalPair make_slpq(long pp, long qq) {
  require(pp >= 1 && pp < qq, "slpq", "1 <= p < q");
  SphericalPair p;
  p.family = "slpq";
  p.params = {{"p", pp}, {"q", qq}};
  const long n = pp + qq;
  const long l = n - 1;
  p.type = LieType::A;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = false;
  p.spherical_rank = static_cast<std::size_t>(pp + 1);
  for (long i = 1; i <= pp - 1; ++i)
    p.generators.push_back(gen(p.rank, {{i, 1}, {n - i, 1}}));
  p.generators.push_back(gen(p.rank, {{pp, 1}}));
  p.generators.push_back(gen(p.rank, {{qq, 1}}));
  if (qq - 1 >= pp + 1) p.delta0 = idx_range(pp + 1, qq - 1);
  const std::size_t dim = static_cast<std::size_t>(n);
  for (long i = 1; i <= pp; ++i)
    p.a_basis.push_back(
        frac(dim, {{i, Rational(1, 2)}, {n + 1 - i, Rational(-1, 2)}}));
  {
    ExactVector v(dim);
    for (long i = 1; i <= pp; ++i) {
      v[static_cast<std::size_t>(i - 1)] = rat(1, 2 * pp);
      v[static_cast<std::size_t>(n - i)] = rat(1, 2 * pp);
    }
    for (long i = pp + 1; i <= qq; ++i)
      v[static_cast<std::size_t>(i - 1)] = rat(-1, qq - pp);
    p.a_basis.push_back(std::move(v));
  }
  RowBuilder rb{&p};
  auto e = [&](long i, long j, long c) {  // coeff vector with entries at i, j
    std::vector<long> v(p.spherical_rank, 0);
    v[static_cast<std::size_t>(i - 1)] += 1;
    if (j) v[static_cast<std::size_t>(j - 1)] += c;
    else v[static_cast<std::size_t>(i - 1)] += c - 1;
    return v;
  };
  for (long i = 1; i <= pp; ++i)
    for (long j = i + 1; j <= pp; ++j) {
      basis_row(rb, e(i, j, -1), 2, 2, j - i, 0, kReg);
      basis_row(rb, e(i, j, 1), 2, 2, pp + qq + 1 - i - j, 0, kReg);
    }
  for (long i = 1; i <= pp; ++i) {
    basis_row(rb, e(i, pp + 1, -1), qq - pp, 1,
              rat(pp + qq + 1 - 2 * i, 2), -(qq - pp - 1), kSing);
    basis_row(rb, e(i, pp + 1, 1), qq - pp, 1,
              rat(pp + qq + 1 - 2 * i, 2), -(qq - pp - 1), kSing);
    basis_row(rb, e(i, 0, 2), 1, 1, pp + qq + 1 - 2 * i, 0, kReg);
  }
  return p;
}

SphericalPair make_slsp(long n) {
  require(n >= 1, "SL-Sp", "n >= 1");
  SphericalPair p;
  p.family = "SL-Sp";
  p.params = {{"n", n}};
  p.type = LieType::A;
  p.rank = static_cast<std::size_t>(2 * n);
  p.symmetric = false;
  p.spherical_rank = p.rank;
  for (std::size_t i = 1; i <= p.rank; ++i)
    p.generators.push_back(gen(p.rank, {{static_cast<long>(i), 1}}));
  RowBuilder rb{&p};
  for (std::size_t i = 1; i <= p.rank; ++i)
    rb.simple("l" + std::to_string(i), static_cast<long>(i), 1, 1, 1,
              std::nullopt, kReg);
  return p;
}

SphericalPair make_sosl(long pp) {
  require(pp >= 1, "SO-SL", "p >= 1");
  SphericalPair p;
  p.family = "SO-SL";
  p.params = {{"p", pp}};
  const long l = 2 * pp + 1;
  p.type = LieType::D;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = false;
  p.spherical_rank = static_cast<std::size_t>(pp + 1);
  // Positive system twisted by negating the even coordinates.
  SignedPermutation w(p.rank);
  for (long i = 2; i <= l; i += 2) w.flip(static_cast<std::size_t>(i - 1));
  p.twist = w;
  for (long i = 1; i <= pp; ++i)
    p.generators.push_back(gen(p.rank, {{2 * i, 1}}));
  p.generators.push_back(gen(p.rank, {{2 * pp + 1, 1}}));
  for (long i = 1; i <= 2 * pp - 1; i += 2)
    p.delta0.insert(static_cast<std::size_t>(i - 1));
  for (long i = 1; i <= pp; ++i)
    p.a_basis.push_back(frac(
        p.rank, {{2 * i - 1, Rational(1, 2)}, {2 * i, Rational(-1, 2)}}));
  p.a_basis.push_back(frac(p.rank, {{l, 1}}));
  RowBuilder rb{&p};
  auto coeffs = [&](long i, long j, long ci, long cj) {
    std::vector<long> v(p.spherical_rank, 0);
    v[static_cast<std::size_t>(i - 1)] += ci;
    v[static_cast<std::size_t>(j - 1)] += cj;
    return v;
  };
  for (long i = 1; i <= pp; ++i)
    for (long j = i + 1; j <= pp; ++j) {
      basis_row(rb, coeffs(i, j, 1, -1), 4, 1, 2 * (j - i), -2, kReg);
      basis_row(rb, coeffs(i, j, 1, 1), 4, 1, 4 * pp + 3 - 2 * (i + j), -2,
                kReg);
    }
  for (long i = 1; i <= pp; ++i) {
    basis_row(rb, coeffs(i, pp + 1, 1, -1), 2, 1,
              rat(4 * pp + 3 - 4 * i, 2), -1, kSing);
    basis_row(rb, coeffs(i, pp + 1, 1, 1), 2, 1,
              rat(4 * pp + 3 - 4 * i, 2), -1, kSing);
    basis_row(rb, coeffs(i, i, 1, 1), 1, 1, 4 * pp + 3 - 4 * i, 0, kReg);
  }
  return p;
}

SphericalPair make_sogl(long n) {
  require(n >= 2, "SO-GL", "n >= 2");
  SphericalPair p;
  p.family = "SO-GL";
  p.params = {{"n", n}};
  p.type = LieType::B;
  p.rank = static_cast<std::size_t>(n);
  p.symmetric = false;
  p.spherical_rank = p.rank;
  for (long i = 1; i < n; ++i) p.generators.push_back(gen(p.rank, {{i, 1}}));
  p.generators.push_back(gen(p.rank, {{n, 2}}));
  RowBuilder rb{&p};
  for (long i = 1; i <= n; ++i)
    rb.simple("l" + std::to_string(i), i, 1, 1, 1, std::nullopt, kReg);
  return p;
}

SphericalPair make_b4b3() {
  SphericalPair p;
  p.family = "B4B3";
  p.type = LieType::B;
  p.rank = 4;
  p.symmetric = false;
  p.spherical_rank = 2;
  p.generators = {gen(4, {{1, 1}}), gen(4, {{4, 1}})};
  p.delta0 = idx({2, 3});
  p.a_basis = {frac(4, {{1, 1}}),
               frac(4, {{2, Rational(1, 3)},
                        {3, Rational(1, 3)},
                        {4, Rational(1, 3)}})};
  RowBuilder rb{&p};
  basis_row(rb, {1, 0}, 1, 1, Rational(7, 2), 0, kReg);
  basis_row(rb, {0, 1}, 3, 1, Rational(3, 2), -2, kReg);
  basis_row(rb, {1, -1}, 3, 1, 2, -2, kReg);
  basis_row(rb, {1, 1}, 3, 1, 5, -2, kReg);
  basis_row(rb, {0, 2}, 3, 1, 3, -2, kReg);
  return p;
}

SphericalPair make_d4g2() {
  SphericalPair p;
  p.family = "D4G2";
  p.type = LieType::D;
  p.rank = 4;
  p.symmetric = false;
  p.spherical_rank = 3;
  p.generators = {gen(4, {{1, 1}}), gen(4, {{3, 1}}), gen(4, {{4, 1}})};
  p.delta0 = idx({2});
  p.a_basis = {frac(4, {{1, 1}}),
               frac(4, {{2, Rational(1, 2)}, {3, Rational(1, 2)}}),
               frac(4, {{4, 1}})};
  RowBuilder rb{&p};
  basis_row(rb, {1, -1, 0}, 2, 1, Rational(3, 2), -1, kSing);
  basis_row(rb, {0, 1, -1}, 2, 1, Rational(3, 2), -1, kSing);
  basis_row(rb, {0, 1, 1}, 2, 1, Rational(3, 2), -1, kSing);
  basis_row(rb, {1, 0, -1}, 1, 1, 3, 0, kReg);
  basis_row(rb, {1, 0, 1}, 1, 1, 3, 0, kReg);
  basis_row(rb, {0, 2, 0}, 1, 1, 3, 0, kReg);
  basis_row(rb, {1, 1, 0}, 2, 1, Rational(9, 2), -1, kSing);
  return p;
}

SphericalPair make_cglc(long l) {
  // l = 2 coincides with SO-GL(n=2) under Sp4 ~ Spin5; keep one entry.
  if (l == 2) {
    SphericalPair p = make_sogl(2);
    p.family = "Cglc";
    p.params = {{"l", 2}};
    return p;
  }
  require(l >= 2, "Cglc", "l >= 2");
  SphericalPair p;
  p.family = "Cglc";
  p.params = {{"l", l}};
  p.type = LieType::C;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = false;
  p.spherical_rank = 2;
  p.generators = {gen(p.rank, {{1, 2}}), gen(p.rank, {{2, 1}})};
  p.delta0 = idx_range(3, l);
  p.a_basis = {frac(p.rank, {{1, 1}}), frac(p.rank, {{2, 1}})};
  RowBuilder rb{&p};
  basis_row(rb, {1, -1}, 1, 1, 1, 0, kReg);
  basis_row(rb, {1, 1}, 1, 1, 2 * l - 1, 0, kReg);
  for (long i = 1; i <= 2; ++i) {
    std::vector<long> c{i == 1 ? 1L : 0L, i == 2 ? 1L : 0L};
    basis_row(rb, c, 2 * l - 4, 1, l + 1 - i, 5 - 2 * l, kSing);
    std::vector<long> c2{i == 1 ? 2L : 0L, i == 2 ? 2L : 0L};
    basis_row(rb, c2, 1, 1, 2 * (l + 1 - i), 0, kSing);
  }
  return p;
}

SphericalPair make_e6d5() {
  SphericalPair p;
  p.family = "E6D5";
  p.type = LieType::E6;
  p.rank = 6;
  p.symmetric = false;
  p.spherical_rank = 3;
  p.generators = {gen(6, {{1, 1}}), gen(6, {{2, 1}}), gen(6, {{6, 1}})};
  p.delta0 = idx({3, 4, 5});
  const Rational q(1, 4), h(1, 2);
  p.a_basis = {
      frac(8, {{1, -q}, {2, -q}, {3, -q}, {4, -q},
               {5, -h}, {6, -h}, {7, -h}, {8, h}}),
      frac(8, {{1, h}, {2, h}, {3, h}, {4, h}}),
      frac(8, {{1, -q}, {2, -q}, {3, -q}, {4, -q}, {5, 1}}),
  };
  RowBuilder rb{&p};
  basis_row(rb, {1, 0, 0}, 4, 1, Rational(5, 2), -3, kSing);
  basis_row(rb, {0, 0, 1}, 4, 1, Rational(5, 2), -3, kSing);
  basis_row(rb, {1, 1, 0}, 4, 1, Rational(11, 2), -3, kSing);
  basis_row(rb, {0, 1, 1}, 4, 1, Rational(11, 2), -3, kSing);
  basis_row(rb, {0, 1, 0}, 6, 1, 3, -4, kReg);
  basis_row(rb, {1, 1, 1}, 6, 1, 8, -4, kReg);
  basis_row(rb, {1, 0, 1}, 1, 1, 5, 0, kReg);
  basis_row(rb, {1, 2, 1}, 1, 1, 11, 0, kReg);
  return p;
}

// ---------------------------------------------------------------------------
// Higher-rank symmetric pairs
// ---------------------------------------------------------------------------

SphericalPair make_aii(long r) {
  require(r >= 2, "AII", "r >= 2");
  SphericalPair p;
  p.family = "AII";
  p.params = {{"r", r}};
  p.type = LieType::A;
  p.rank = static_cast<std::size_t>(2 * r + 1);
  p.symmetric = true;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i <= r; ++i)
    p.generators.push_back(gen(p.rank, {{2 * i, 1}}));
  for (long i = 1; i <= 2 * r + 1; i += 2)
    p.delta0.insert(static_cast<std::size_t>(i - 1));
  RowBuilder rb{&p};
  for (long i = 1; i <= r; ++i)
    rb.simple("l" + std::to_string(2 * i), 2 * i, 1, 4, 1, -2, kReg);
  return p;
}

SphericalPair make_aiii(long l, long r) {
  require(r >= 2 && l >= 2 * r - 1, "AIII", "r >= 2 and l >= 2r-1");
  SphericalPair p;
  p.family = "AIII";
  p.params = {{"l", l}, {"r", r}};
  p.type = LieType::A;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i < r; ++i)
    p.generators.push_back(gen(p.rank, {{i, 1}, {l + 1 - i, 1}}));
  if (l == 2 * r - 1)
    p.generators.push_back(gen(p.rank, {{r, 2}}));
  else
    p.generators.push_back(gen(p.rank, {{r, 1}, {l + 1 - r, 1}}));
  if (l - r >= r + 1) p.delta0 = idx_range(r + 1, l - r);
  RowBuilder rb{&p};
  if (l == 2 * r - 1) {
    for (long i = 1; i < r; ++i)
      rb.simple("l" + std::to_string(i), i, 1, 2, 2, std::nullopt, kReg);
    rb.simple("l" + std::to_string(r), r, 1, 1, 1, std::nullopt, kReg);
  } else {
    for (long i = 1; i < r; ++i)
      rb.simple("l" + std::to_string(i), i, 1, 2, 2, 0, kReg);
    rb.simple("l" + std::to_string(r), r, 1, 2 * (l - 2 * r + 1), 2,
              -(l - 2 * r), kReg);
    rb.simple("2l" + std::to_string(r), r, 2, 1, 1, 0, kReg);
  }
  return p;
}

SphericalPair make_bi(long l, long r) {
  require(r >= 2 && r < l, "BI", "2 <= r < l");
  SphericalPair p;
  p.family = "BI";
  p.params = {{"l", l}, {"r", r}};
  p.type = LieType::B;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i < r; ++i) p.generators.push_back(gen(p.rank, {{i, 2}}));
  p.generators.push_back(gen(p.rank, {{r, 1}}));
  p.delta0 = idx_range(r + 1, l);
  RowBuilder rb{&p};
  for (long i = 1; i < r; ++i)
    rb.simple("l" + std::to_string(i), i, 1, 1, 1, 0, kReg);
  rb.simple("l" + std::to_string(r), r, 1, 2 * (l - r) + 1, 1, -2 * (l - r),
            kReg);
  return p;
}

SphericalPair make_cii(long l, long r) {
  require(r >= 2 && l >= 2 * r, "CII", "r >= 2 and l >= 2r");
  SphericalPair p;
  p.family = "CII";
  p.params = {{"l", l}, {"r", r}};
  p.type = LieType::C;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i <= r; ++i)
    p.generators.push_back(gen(p.rank, {{2 * i, 1}}));
  for (long i = 1; i <= 2 * r - 1; i += 2)
    p.delta0.insert(static_cast<std::size_t>(i - 1));
  for (long i = 2 * r + 1; i <= l; ++i)
    p.delta0.insert(static_cast<std::size_t>(i - 1));
  RowBuilder rb{&p};
  for (long i = 1; i < r; ++i)
    rb.simple("l" + std::to_string(2 * i), 2 * i, 1, 4, 1, -2, kReg);
  if (l == 2 * r) {
    rb.simple("l" + std::to_string(2 * r), 2 * r, 1, 3, 1, -2, kReg);
  } else {
    rb.simple("l" + std::to_string(2 * r), 2 * r, 1, 4 * (l - 2 * r), 1,
              -2 * (l - 2 * r), kReg);
    rb.simple("2l" + std::to_string(2 * r), 2 * r, 2, 3, 1, -2, kReg);
  }
  return p;
}

SphericalPair make_di(long l, long r) {
  require(l >= 3 && r >= 2 && r < l, "DI", "2 <= r < l, l >= 3");
  SphericalPair p;
  p.family = "DI";
  p.params = {{"l", l}, {"r", r}};
  p.type = LieType::D;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i < r; ++i) p.generators.push_back(gen(p.rank, {{i, 2}}));
  if (r <= l - 2) {
    p.generators.push_back(gen(p.rank, {{r, 1}}));
    p.delta0 = idx_range(r + 1, l);
  } else {
    p.generators.push_back(gen(p.rank, {{l - 1, 1}, {l, 1}}));
  }
  RowBuilder rb{&p};
  for (long i = 1; i < r; ++i)
    rb.simple("l" + std::to_string(i), i, 1, 1, 1, 0, kReg);
  if (r == l - 1)
    rb.simple("l" + std::to_string(r), l - 1, 1, 2, 2, 0, kReg);
  else
    rb.simple("l" + std::to_string(r), r, 1, 2 * (l - r), 1,
              -2 * (l - r - 1), kReg);
  return p;
}

SphericalPair make_diii(long l) {
  require(l >= 4, "DIII", "l >= 4");
  SphericalPair p;
  p.family = "DIII";
  p.params = {{"l", l}};
  p.type = LieType::D;
  p.rank = static_cast<std::size_t>(l);
  p.symmetric = true;
  const long r = l / 2;
  p.spherical_rank = static_cast<std::size_t>(r);
  for (long i = 1; i < r; ++i)
    p.generators.push_back(gen(p.rank, {{2 * i, 1}}));
  RowBuilder rb{&p};
  if (l == 2 * r) {
    p.generators.push_back(gen(p.rank, {{l, 2}}));
    for (long i = 1; i <= l - 1; i += 2)
      p.delta0.insert(static_cast<std::size_t>(i - 1));
    for (long i = 1; i < r; ++i)
      rb.simple("l" + std::to_string(2 * i), 2 * i, 1, 4, 1, -2, kReg);
    rb.simple("l" + std::to_string(l), l, 1, 1, 1, 0, kReg);
  } else {
    p.generators.push_back(gen(p.rank, {{l - 1, 1}, {l, 1}}));
    for (long i = 1; i <= l - 2; i += 2)
      p.delta0.insert(static_cast<std::size_t>(i - 1));
    for (long i = 1; i < r; ++i)
      rb.simple("l" + std::to_string(2 * i), 2 * i, 1, 4, 1, -2, kReg);
    rb.simple("l" + std::to_string(2 * r), l, 1, 4, 2, -1, kReg);
    rb.simple("2l" + std::to_string(2 * r), l, 2, 1, 1, 0, kReg);
  }
  return p;
}

SphericalPair make_exceptional_symmetric(const std::string& family) {
  SphericalPair p;
  p.family = family;
  p.symmetric = true;
  RowBuilder rb{&p};
  auto simple = [&](long i, int mult, long m, long nb, std::optional<Rational> h) {
    rb.simple((mult == 2 ? "2l" : "l") + std::to_string(i), i, mult, m, nb, h,
              kReg);
  };
  if (family == "EII") {
    p.type = LieType::E6;
    p.rank = 6;
    p.spherical_rank = 4;
    p.generators = {gen(6, {{1, 1}, {6, 1}}), gen(6, {{3, 1}, {5, 1}}),
                    gen(6, {{4, 2}}), gen(6, {{2, 2}})};
    simple(1, 1, 2, 2, 0);
    simple(2, 1, 1, 1, 0);
    simple(3, 1, 2, 2, 0);
    simple(4, 1, 1, 1, 0);
  } else if (family == "EIII") {
    p.type = LieType::E6;
    p.rank = 6;
    p.spherical_rank = 2;
    p.generators = {gen(6, {{1, 1}, {6, 1}}), gen(6, {{2, 1}})};
    p.delta0 = idx({3, 4, 5});
    simple(2, 1, 6, 1, -4);
    simple(1, 1, 8, 2, -3);
    simple(1, 2, 1, 1, 0);
  } else if (family == "EIV") {
    p.type = LieType::E6;
    p.rank = 6;
    p.spherical_rank = 2;
    p.generators = {gen(6, {{1, 1}}), gen(6, {{6, 1}})};
    p.delta0 = idx({2, 3, 4, 5});
    simple(1, 1, 8, 1, -6);
    simple(6, 1, 8, 1, -6);
  } else if (family == "EVI") {
    p.type = LieType::E7;
    p.rank = 7;
    p.spherical_rank = 4;
    p.generators = {gen(7, {{1, 2}}), gen(7, {{3, 2}}), gen(7, {{4, 1}}),
                    gen(7, {{6, 1}})};
    p.delta0 = idx({2, 5, 7});
    simple(1, 1, 1, 1, 0);
    simple(3, 1, 1, 1, 0);
    simple(4, 1, 4, 1, -2);
    simple(6, 1, 4, 1, -2);
  } else if (family == "EVII") {
    p.type = LieType::E7;
    p.rank = 7;
    p.spherical_rank = 3;
    p.generators = {gen(7, {{1, 1}}), gen(7, {{6, 1}}), gen(7, {{7, 2}})};
    p.delta0 = idx({2, 3, 4, 5});
    simple(1, 1, 8, 1, -6);
    simple(6, 1, 8, 1, -6);
    simple(7, 1, 1, 1, 0);
  } else if (family == "EIX") {
    p.type = LieType::E8;
    p.rank = 8;
    p.spherical_rank = 4;
    p.generators = {gen(8, {{1, 1}}), gen(8, {{6, 1}}), gen(8, {{7, 2}}),
                    gen(8, {{8, 2}})};
    p.delta0 = idx({2, 3, 4, 5});
    simple(1, 1, 8, 1, -6);
    simple(6, 1, 8, 1, -6);
    simple(7, 1, 1, 1, 0);
    simple(8, 1, 1, 1, 0);
  } else {
    throw std::invalid_argument("unknown exceptional symmetric family " +
                                family);
  }
  return p;
}

// Split pairs: Delta_0 empty, generators 2w_i, all nests singletons.
SphericalPair make_split(const std::string& family, LieType type, long rank) {
  SphericalPair p;
  p.family = family;
  p.type = type;
  p.rank = static_cast<std::size_t>(rank);
  p.symmetric = true;
  p.spherical_rank = p.rank;
  for (long i = 1; i <= rank; ++i)
    p.generators.push_back(gen(p.rank, {{i, 2}}));
  RowBuilder rb{&p};
  for (long i = 1; i <= rank; ++i)
    rb.simple("l" + std::to_string(i), i, 1, 1, 1, 0, kReg);
  return p;
}

}  // namespace

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> fams = {
      {"AIV", "SL(l+1)/GL(l)", {"l"}, "l >= 1"},
      {"BII", "SO(2l+1)/SO(2l)", {"l"}, "l >= 2"},
      {"DII", "SO(2l)/SO(2l-1)", {"l"}, "l >= 2"},
      {"CII-rk1", "Sp(2l)/Sp(2)xSp(2l-2)", {"l"}, "l >= 3"},
      {"FII", "F4/Spin(9)", {}, ""},
      {"B3G2", "Spin(7)/G2", {}, ""},
      {"G2A2", "G2/SL(3)", {}, ""},
      {"slpq", "SL(p+q)/SL(p)xSL(q)", {"p", "q"}, "1 <= p < q"},
      {"SL-Sp", "SL(2n+1)/Sp(2n)", {"n"}, "n >= 1"},
      {"SO-SL", "Spin(4p+2)/SL(2p+1)", {"p"}, "p >= 1"},
      {"SO-GL", "Spin(2n+1)/GL(n)", {"n"}, "n >= 2"},
      {"B4B3", "Spin(9)/Spin(7)", {}, ""},
      {"D4G2", "Spin(8)/G2", {}, ""},
      {"Cglc", "Sp(2l)/(C*xSp(2l-2))", {"l"}, "l >= 2 (l = 2 aliases SO-GL n=2)"},
      {"E6D5", "E6/Spin(10)", {}, ""},
      {"AII", "SL(2r+2)/Sp(2r+2)", {"r"}, "r >= 2"},
      {"AIII", "SL(l+1)/S(GL(r)xGL(l+1-r))", {"l", "r"}, "r >= 2, l >= 2r-1"},
      {"BI", "SO(2l+1)/SO(r)xSO(2l+1-r)", {"l", "r"}, "2 <= r < l"},
      {"CII", "Sp(2l)/Sp(2r)xSp(2l-2r)", {"l", "r"}, "r >= 2, l >= 2r"},
      {"DI", "SO(2l)/SO(r)xSO(2l-r)", {"l", "r"}, "2 <= r < l, l >= 3"},
      {"DIII", "SO(2l)/GL(l)", {"l"}, "l >= 4"},
      {"EII", "E6/SL(6)xSL(2)", {}, ""},
      {"EIII", "E6/SO(10)xSO(2)", {}, ""},
      {"EIV", "E6/F4", {}, ""},
      {"EVI", "E7/SO(12)xSL(2)", {}, ""},
      {"EVII", "E7/E6xSO(2)", {}, ""},
      {"EIX", "E8/E7xSL(2)", {}, ""},
      {"AI", "SL(l+1)/SO(l+1)", {"l"}, "l >= 2"},
      {"DI-split", "SO(2l)/SO(l)xSO(l)", {"l"}, "l >= 4"},
      {"EI", "E6/Sp(8)", {}, ""},
      {"EV", "E7/SL(8)", {}, ""},
      {"EVIII", "E8/SO(16)", {}, ""},
      {"FI", "F4/Sp(6)xSL(2)", {}, ""},
      {"G", "G2/SL(2)xSL(2)", {}, ""},
  };
  return fams;
}

SphericalPair instantiate(const std::string& family_id,
                          const std::map<std::string, long>& params) {
  const FamilyInfo* info = nullptr;
  for (const auto& f : families())
    if (f.id == family_id) info = &f;
  if (!info)
    throw std::invalid_argument("unknown pair family: " + family_id);
  auto param = [&](const char* name) {
    return get_param(params, family_id, name);
  };
  SphericalPair p;
  if (family_id == "AIV") p = make_aiv(param("l"));
  else if (family_id == "BII") p = make_bii(param("l"));
  else if (family_id == "DII") p = make_dii(param("l"));
  else if (family_id == "CII-rk1") p = make_cii_rk1(param("l"));
  else if (family_id == "FII") p = make_fii();
  else if (family_id == "B3G2") p = make_b3g2();
  else if (family_id == "G2A2") p = make_g2a2();
  else if (family_id == "slpq") p = make_slpq(param("p"), param("q"));
  else if (family_id == "SL-Sp") p = make_slsp(param("n"));
  else if (family_id == "SO-SL") p = make_sosl(param("p"));
  else if (family_id == "SO-GL") p = make_sogl(param("n"));
  else if (family_id == "B4B3") p = make_b4b3();
  else if (family_id == "D4G2") p = make_d4g2();
  else if (family_id == "Cglc") p = make_cglc(param("l"));
  else if (family_id == "E6D5") p = make_e6d5();
  else if (family_id == "AII") p = make_aii(param("r"));
  else if (family_id == "AIII") p = make_aiii(param("l"), param("r"));
  else if (family_id == "BI") p = make_bi(param("l"), param("r"));
  else if (family_id == "CII") p = make_cii(param("l"), param("r"));
  else if (family_id == "DI") p = make_di(param("l"), param("r"));
  else if (family_id == "DIII") p = make_diii(param("l"));
  else if (family_id == "AI") {
    long l = param("l");
    require(l >= 2, "AI", "l >= 2");
    p = make_split("AI", LieType::A, l);
    p.params = {{"l", l}};
  } else if (family_id == "DI-split") {
    long l = param("l");
    require(l >= 4, "DI-split", "l >= 4");
    p = make_split("DI-split", LieType::D, l);
    p.params = {{"l", l}};
  } else if (family_id == "EI") p = make_split("EI", LieType::E6, 6);
  else if (family_id == "EV") p = make_split("EV", LieType::E7, 7);
  else if (family_id == "EVIII") p = make_split("EVIII", LieType::E8, 8);
  else if (family_id == "FI") p = make_split("FI", LieType::F4, 4);
  else if (family_id == "G") p = make_split("G", LieType::G2, 2);
  else p = make_exceptional_symmetric(family_id);
  p.id = instance_id(p.family, info->param_names, p.params);
  return p;
}

std::vector<SphericalPair> catalog() {
  std::vector<SphericalPair> out;
  auto add = [&](const std::string& fam,
                 std::initializer_list<std::pair<const char*, long>> ps) {
    std::map<std::string, long> m;
    for (auto& [k, v] : ps) m[k] = v;
    out.push_back(instantiate(fam, m));
  };
  for (long l : {1, 2, 3, 5, 8}) add("AIV", {{"l", l}});
  for (long l : {2, 3, 4, 5, 6}) add("BII", {{"l", l}});
  for (long l : {2, 3, 5}) add("DII", {{"l", l}});
  for (long l : {3, 4, 5}) add("CII-rk1", {{"l", l}});
  add("FII", {});
  add("B3G2", {});
  add("G2A2", {});
  add("slpq", {{"p", 1}, {"q", 3}});
  add("slpq", {{"p", 2}, {"q", 4}});
  add("slpq", {{"p", 2}, {"q", 5}});
  for (long n : {1, 2, 3}) add("SL-Sp", {{"n", n}});
  for (long pp : {1, 2}) add("SO-SL", {{"p", pp}});
  for (long n : {2, 3, 4}) add("SO-GL", {{"n", n}});
  add("B4B3", {});
  add("D4G2", {});
  for (long l : {3, 4, 5}) add("Cglc", {{"l", l}});
  add("E6D5", {});
  for (long r : {2, 3}) add("AII", {{"r", r}});
  add("AIII", {{"l", 3}, {"r", 2}});
  add("AIII", {{"l", 5}, {"r", 2}});
  add("AIII", {{"l", 6}, {"r", 3}});
  add("BI", {{"l", 4}, {"r", 2}});
  add("BI", {{"l", 5}, {"r", 3}});
  add("BI", {{"l", 5}, {"r", 2}});
  add("BI", {{"l", 6}, {"r", 2}});
  add("BI", {{"l", 4}, {"r", 3}});
  add("CII", {{"l", 5}, {"r", 2}});
  add("CII", {{"l", 4}, {"r", 2}});
  add("CII", {{"l", 7}, {"r", 3}});
  add("DI", {{"l", 5}, {"r", 2}});
  add("DI", {{"l", 4}, {"r", 2}});
  add("DI", {{"l", 4}, {"r", 3}});
  for (long l : {4, 5, 6, 7}) add("DIII", {{"l", l}});
  add("EII", {});
  add("EIII", {});
  add("EIV", {});
  add("EVI", {});
  add("EVII", {});
  add("EIX", {});
  for (long l : {2, 3, 4}) add("AI", {{"l", l}});
  for (long l : {4, 5}) add("DI-split", {{"l", l}});
  add("EI", {});
  add("EV", {});
  add("EVIII", {});
  add("FI", {});
  add("G", {});
  return out;
}

std::vector<std::vector<long>> enumerate_coefficients(std::size_t rank,
                                                      long max_total) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(rank, 0);
  auto rec = [&](auto&& self, std::size_t pos, long remaining) -> void {
    if (pos == rank) {
      out.push_back(cur);
      return;
    }
    for (long k = 0; k <= remaining; ++k) {
      cur[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    cur[pos] = 0;
  };
  if (max_total >= 0) rec(rec, 0, max_total);
  return out;
}

}  // namespace sphdim
