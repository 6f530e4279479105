#include "sphdim/root_system.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sphdim {

std::string lie_type_name(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
    case LieType::E8: return "E8";
    case LieType::F4: return "F4";
    case LieType::G2: return "G2";
  }
  return "?";
}

std::optional<LieType> lie_type_from_name(const std::string& name) {
  if (name == "A") return LieType::A;
  if (name == "B") return LieType::B;
  if (name == "C") return LieType::C;
  if (name == "D") return LieType::D;
  if (name == "E6") return LieType::E6;
  if (name == "E7") return LieType::E7;
  if (name == "E8") return LieType::E8;
  if (name == "F4") return LieType::F4;
  if (name == "G2") return LieType::G2;
  return std::nullopt;
}

SignedPermutation::SignedPermutation(std::size_t dim) : images_(dim) {
  for (std::size_t i = 0; i < dim; ++i) images_[i] = {i, 1};
}

bool SignedPermutation::is_valid() const {
  std::vector<bool> seen(images_.size(), false);
  for (const auto& im : images_) {
    if (im.index >= images_.size() || seen[im.index]) return false;
    if (im.sign != 1 && im.sign != -1) return false;
    seen[im.index] = true;
  }
  return true;
}

ExactVector SignedPermutation::apply(const ExactVector& v) const {
  if (v.dim() != images_.size())
    throw std::invalid_argument("signed permutation: dimension mismatch");
  ExactVector out(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const Image& im = images_[i];
    out[im.index] = im.sign > 0 ? v[i] : -v[i];
  }
  return out;
}

ExactVector RootSystem::coroot(const ExactVector& alpha) const {
  Rational len = form(alpha, alpha);
  if (len == 0) throw std::invalid_argument("coroot of zero vector");
  return (2 / len) * alpha;
}

ExactVector RootSystem::rho() const {
  return half_sum(positive_roots, ambient_dim);
}

bool RootSystem::is_root(const ExactVector& v) const {
  for (const auto& a : positive_roots)
    if (a == v || a == -v) return true;
  return false;
}

bool RootSystem::is_positive_root(const ExactVector& v) const {
  for (const auto& a : positive_roots)
    if (a == v) return true;
  return false;
}

ExactVector half_sum(const Matrix& roots, std::size_t ambient_dim) {
  ExactVector s(ambient_dim);
  for (const auto& a : roots) s += a;
  s *= Rational(1, 2);
  return s;
}

namespace {

ExactVector ev(std::size_t dim, std::initializer_list<int> entries) {
  ExactVector v(dim);
  std::size_t i = 0;
  for (int e : entries) v[i++] = e;
  return v;
}

void build_classical(RootSystem& rs) {
  const std::size_t l = rs.rank;
  const std::size_t n = rs.ambient_dim;
  auto e = [&](std::size_t i) { return unit_vector(n, i); };
  switch (rs.type) {
    case LieType::A:
      for (std::size_t i = 0; i + 1 < n; ++i)
        rs.simple_roots.push_back(e(i) - e(i + 1));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          rs.positive_roots.push_back(e(i) - e(j));
      break;
    case LieType::B:
      for (std::size_t i = 0; i + 1 < l; ++i)
        rs.simple_roots.push_back(e(i) - e(i + 1));
      rs.simple_roots.push_back(e(l - 1));
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
        rs.positive_roots.push_back(e(i));
      }
      break;
    case LieType::C:
      for (std::size_t i = 0; i + 1 < l; ++i)
        rs.simple_roots.push_back(e(i) - e(i + 1));
      rs.simple_roots.push_back(Rational(2) * e(l - 1));
      for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
        rs.positive_roots.push_back(Rational(2) * e(i));
      }
      break;
    case LieType::D:
      for (std::size_t i = 0; i + 1 < l; ++i)
        rs.simple_roots.push_back(e(i) - e(i + 1));
      rs.simple_roots.push_back(e(l - 2) + e(l - 1));
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
          rs.positive_roots.push_back(e(i) - e(j));
          rs.positive_roots.push_back(e(i) + e(j));
        }
      break;
    default:
      throw std::logic_error("build_classical: not a classical type");
  }
}

// E8 simple roots per the planche; E6/E7 take the leading subsets.
void add_e_simple_roots(RootSystem& rs, std::size_t count) {
  ExactVector a1(8);
  a1[0] = Rational(1, 2);
  a1[7] = Rational(1, 2);
  for (std::size_t i = 1; i <= 6; ++i) a1[i] = Rational(-1, 2);
  rs.simple_roots.push_back(a1);
  rs.simple_roots.push_back(ev(8, {1, 1}));
  for (std::size_t k = 3; k <= count; ++k) {
    ExactVector a(8);
    a[k - 3] = -1;
    a[k - 2] = 1;
    rs.simple_roots.push_back(a);
  }
}

void build_e6(RootSystem& rs) {
  add_e_simple_roots(rs, 6);
  auto e = [&](std::size_t i) { return unit_vector(8, i); };
  for (std::size_t j = 1; j < 5; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      rs.positive_roots.push_back(e(j) - e(i));
      rs.positive_roots.push_back(e(j) + e(i));
    }
  // (1/2)(e8 - e7 - e6 + sum +-e_i), even number of minus signs among e1..e5
  for (unsigned mask = 0; mask < 32; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    ExactVector v(8);
    v[7] = Rational(1, 2);
    v[6] = Rational(-1, 2);
    v[5] = Rational(-1, 2);
    for (std::size_t i = 0; i < 5; ++i)
      v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    rs.positive_roots.push_back(v);
  }
}

void build_e7(RootSystem& rs) {
  add_e_simple_roots(rs, 7);
  auto e = [&](std::size_t i) { return unit_vector(8, i); };
  for (std::size_t j = 1; j < 6; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      rs.positive_roots.push_back(e(j) - e(i));
      rs.positive_roots.push_back(e(j) + e(i));
    }
  rs.positive_roots.push_back(e(7) - e(6));
  // (1/2)(e8 - e7 + sum +-e_i), odd number of minus signs among e1..e6
  for (unsigned mask = 0; mask < 64; ++mask) {
    if (__builtin_popcount(mask) % 2 != 1) continue;
    ExactVector v(8);
    v[7] = Rational(1, 2);
    v[6] = Rational(-1, 2);
    for (std::size_t i = 0; i < 6; ++i)
      v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    rs.positive_roots.push_back(v);
  }
}

void build_e8(RootSystem& rs) {
  add_e_simple_roots(rs, 8);
  auto e = [&](std::size_t i) { return unit_vector(8, i); };
  for (std::size_t j = 1; j < 8; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      rs.positive_roots.push_back(e(j) - e(i));
      rs.positive_roots.push_back(e(j) + e(i));
    }
  // (1/2)(e8 + sum +-e_i), even number of minus signs among e1..e7
  for (unsigned mask = 0; mask < 128; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    ExactVector v(8);
    v[7] = Rational(1, 2);
    for (std::size_t i = 0; i < 7; ++i)
      v[i] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    rs.positive_roots.push_back(v);
  }
}

void build_f4(RootSystem& rs) {
  auto e = [&](std::size_t i) { return unit_vector(4, i); };
  rs.simple_roots.push_back(e(1) - e(2));
  rs.simple_roots.push_back(e(2) - e(3));
  rs.simple_roots.push_back(e(3));
  ExactVector a4(4);
  a4[0] = Rational(1, 2);
  a4[1] = Rational(-1, 2);
  a4[2] = Rational(-1, 2);
  a4[3] = Rational(-1, 2);
  rs.simple_roots.push_back(a4);
  for (std::size_t i = 0; i < 4; ++i) rs.positive_roots.push_back(e(i));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j) {
      rs.positive_roots.push_back(e(i) - e(j));
      rs.positive_roots.push_back(e(i) + e(j));
    }
  for (unsigned mask = 0; mask < 8; ++mask) {
    ExactVector v(4);
    v[0] = Rational(1, 2);
    for (std::size_t i = 0; i < 3; ++i)
      v[i + 1] = (mask >> i) & 1 ? Rational(-1, 2) : Rational(1, 2);
    rs.positive_roots.push_back(v);
  }
}

void build_g2(RootSystem& rs) {
  // Integer vectors with coordinates summing to zero.
  ExactVector a1 = ev(3, {1, -1, 0});
  ExactVector a2 = ev(3, {-2, 1, 1});
  rs.simple_roots.push_back(a1);
  rs.simple_roots.push_back(a2);
  rs.positive_roots.push_back(a1);
  rs.positive_roots.push_back(a2);
  rs.positive_roots.push_back(a1 + a2);
  rs.positive_roots.push_back(Rational(2) * a1 + a2);
  rs.positive_roots.push_back(Rational(3) * a1 + a2);
  rs.positive_roots.push_back(Rational(3) * a1 + Rational(2) * a2);
}

}  // namespace

std::size_t expected_positive_root_count(LieType type, std::size_t rank) {
  switch (type) {
    case LieType::A: return rank * (rank + 1) / 2;
    case LieType::B:
    case LieType::C: return rank * rank;
    case LieType::D: return rank * (rank - 1);
    case LieType::E6: return 36;
    case LieType::E7: return 63;
    case LieType::E8: return 120;
    case LieType::F4: return 24;
    case LieType::G2: return 6;
  }
  return 0;
}

RootSystem build_root_system(LieType type, std::size_t rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.form_scale = standard_form_scale(type);
  auto reject = [&](const char* why) {
    throw std::invalid_argument("build_root_system(" + lie_type_name(type) +
                                "," + std::to_string(rank) + "): " + why);
  };
  switch (type) {
    case LieType::A:
      if (rank < 1) reject("rank must be >= 1");
      rs.ambient_dim = rank + 1;
      build_classical(rs);
      break;
    case LieType::B:
    case LieType::C:
      if (rank < 2) reject("rank must be >= 2");
      rs.ambient_dim = rank;
      build_classical(rs);
      break;
    case LieType::D:
      if (rank < 2) reject("rank must be >= 2");
      rs.ambient_dim = rank;
      build_classical(rs);
      break;
    case LieType::E6:
      if (rank != 6) reject("rank must be 6");
      rs.ambient_dim = 8;
      build_e6(rs);
      break;
    case LieType::E7:
      if (rank != 7) reject("rank must be 7");
      rs.ambient_dim = 8;
      build_e7(rs);
      break;
    case LieType::E8:
      if (rank != 8) reject("rank must be 8");
      rs.ambient_dim = 8;
      build_e8(rs);
      break;
    case LieType::F4:
      if (rank != 4) reject("rank must be 4");
      rs.ambient_dim = 4;
      build_f4(rs);
      break;
    case LieType::G2:
      if (rank != 2) reject("rank must be 2");
      rs.ambient_dim = 3;
      build_g2(rs);
      break;
  }
  if (rs.positive_roots.size() != expected_positive_root_count(type, rank))
    throw std::logic_error("positive root count mismatch for " +
                           lie_type_name(type));
  return rs;
}

RootSystem apply_signed_permutation(const SignedPermutation& w,
                                    const RootSystem& rs) {
  if (!w.is_valid())
    throw std::invalid_argument("apply_signed_permutation: not a bijection");
  RootSystem out = rs;
  for (auto& a : out.simple_roots) a = w.apply(a);
  for (auto& a : out.positive_roots) a = w.apply(a);
  return out;
}

Rational standard_form_scale(LieType type) {
  return type == LieType::G2 ? Rational(1, 3) : Rational(1);
}

Rational normalized_form(const RootSystem& rs,
                         const std::set<std::size_t>& delta0_indices) {
  const Rational std_scale = standard_form_scale(rs.type);
  if (delta0_indices.empty()) return std_scale;

  Matrix roots;
  for (auto i : delta0_indices) roots.push_back(rs.simple_roots.at(i));

  std::set<Rational> lengths;
  for (const auto& a : roots) lengths.insert(dot(a, a));

  // Connected components of the Delta_0 subdiagram.
  std::vector<int> comp(roots.size(), -1);
  int ncomp = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (comp[i] >= 0) continue;
    comp[i] = ncomp;
    std::vector<std::size_t> stack{i};
    while (!stack.empty()) {
      std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t v = 0; v < roots.size(); ++v)
        if (comp[v] < 0 && dot(roots[u], roots[v]) != 0) {
          comp[v] = ncomp;
          stack.push_back(v);
        }
    }
    ++ncomp;
  }

  if (lengths.size() == 1) {
    const Rational len = *lengths.begin();
    // The long simple root of a C system never forces the scale; the C
    // convention keeps the short roots at squared length two.
    if (rs.type == LieType::C && len == 4) return std_scale;
    return 2 / len;
  }

  // Two lengths.  Look for a component carrying both; when the lengths are
  // split across components the ambient type settles the convention.
  const Rational short_len = *lengths.begin();
  const Rational long_len = *lengths.rbegin();
  for (int c = 0; c < ncomp; ++c) {
    std::size_t n_short = 0, n_long = 0;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      if (comp[i] != c) continue;
      if (dot(roots[i], roots[i]) == short_len) ++n_short;
      else ++n_long;
    }
    if (n_short == 0 || n_long == 0) continue;
    bool b_kind;
    if (n_long == 1 && n_short == 1)
      b_kind = rs.type != LieType::C;
    else
      b_kind = n_short == 1;  // B_k: one short; C_k: one long
    return b_kind ? 2 / long_len : 2 / short_len;
  }
  return rs.type == LieType::C ? 2 / short_len : 2 / long_len;
}

Matrix fundamental_weights(const RootSystem& rs) {
  const std::size_t l = rs.rank;
  // Solve in the basis of simple roots: weights live in their span.
  // Row j of sys holds <a_k | a_j^vee>, so sys.c = e_i gives w_i = sum c_k a_k.
  Matrix sys(l, ExactVector(l));
  for (std::size_t j = 0; j < l; ++j) {
    ExactVector cj = rs.coroot(rs.simple_roots[j]);
    for (std::size_t k = 0; k < l; ++k)
      sys[j][k] = rs.form(rs.simple_roots[k], cj);
  }
  Matrix weights;
  for (std::size_t i = 0; i < l; ++i) {
    ExactVector c = solve(sys, unit_vector(l, i));
    ExactVector w(rs.ambient_dim);
    for (std::size_t k = 0; k < l; ++k) w += c[k] * rs.simple_roots[k];
    weights.push_back(std::move(w));
  }
  return weights;
}

bool is_dominant(const RootSystem& rs, const ExactVector& lambda) {
  for (const auto& a : rs.simple_roots)
    if (!is_nonneg_integer(rs.form(lambda, rs.coroot(a)))) return false;
  return true;
}

Integer weyl_dimension(const RootSystem& rs, const ExactVector& lambda) {
  if (!is_dominant(rs, lambda))
    throw std::invalid_argument("weyl_dimension: non-dominant weight");
  ExactVector rho_g = rs.rho();
  Rational d(1);
  for (const auto& a : rs.positive_roots)
    d *= rs.form(lambda + rho_g, a) / rs.form(rho_g, a);
  if (!is_integer(d) || d <= 0)
    throw std::logic_error("weyl_dimension: product is not a positive integer");
  return d.get_num();
}

}  // namespace sphdim
