#include <doctest.h>

#include "sphdim/report.hpp"
#include "sphdim/restriction.hpp"

using namespace sphdim;

namespace {

PairAnalysis get(const std::string& fam,
                 std::initializer_list<std::pair<const char*, long>> ps = {}) {
  std::map<std::string, long> m;
  for (auto& [k, v] : ps) m[k] = v;
  return analyze(instantiate(fam, m));
}

ExactVector ev(std::initializer_list<long> entries) {
  std::vector<Rational> v;
  for (long e : entries) v.emplace_back(e);
  return ExactVector(v);
}

const RestrictedRootDatum& datum(const PairAnalysis& a,
                                 const std::string& label) {
  for (const auto& d : a.data)
    if (d.label == label) return d;
  throw std::runtime_error("no restricted root " + label + " in " + a.pair.id);
}

}  // namespace

TEST_CASE("subspace dimensions follow the support counts") {
  PairAnalysis fii = get("FII");
  CHECK(fii.c_basis.size() == 1);
  CHECK(fii.c0_basis.empty());
  CHECK(fii.a_basis.size() == 1);

  PairAnalysis aiv = get("AIV", {{"l", 4}});
  CHECK(aiv.c_basis.size() == 2);
  CHECK(aiv.c0_basis.size() == 1);
  CHECK(aiv.a_basis.size() == 1);

  // Empty Delta_0: c is the whole Cartan of the trace-zero space.
  PairAnalysis slsp = get("SL-Sp", {{"n", 2}});
  CHECK(slsp.pair.delta0.empty());
  CHECK(slsp.c_basis.size() == 4);
  CHECK(slsp.c0_basis.empty());
}

TEST_CASE("c0 basis for A-type pairs") {
  // AIV l=4: c0 spanned by (l-1)e1 - 2(e2+...+el) + (l-1)e(l+1).
  PairAnalysis aiv = get("AIV", {{"l", 4}});
  ExactVector y = ev({3, -2, -2, -2, 3});
  REQUIRE(aiv.c0_basis.size() == 1);
  CHECK(project_onto_span(aiv.c0_basis, y) == y);
  CHECK(project_onto_span(aiv.a_basis, y).is_zero());

  // slpq p=2,q=4: c0 contains alpha1 - alpha5 (as form vectors).
  PairAnalysis slpq = get("slpq", {{"p", 2}, {"q", 4}});
  REQUIRE(slpq.c0_basis.size() == 1);
  ExactVector v = ev({1, -1, 0, 0, -1, 1});
  CHECK(project_onto_span(slpq.c0_basis, v) == v);
}

TEST_CASE("restriction is orthogonal projection onto a") {
  PairAnalysis aiv = get("AIV", {{"l", 4}});
  // roots in the span of Delta_0 restrict to zero
  CHECK(aiv.restrict(ev({0, 1, -1, 0, 0})).is_zero());
  ExactVector xi1 = aiv.pair.a_basis[0];
  CHECK(aiv.restrict(ev({1, -1, 0, 0, 0})) == xi1);
  CHECK(aiv.restrict(ev({0, 0, 0, 1, -1})) == xi1);

  PairAnalysis fii = get("FII");
  CHECK(fii.restrict(fii.rs.simple_roots[3]) ==
        ExactVector({Rational(1, 2), 0, 0, 0}));
}

TEST_CASE("nests, multiplicities and basic roots for the rank-one pairs") {
  PairAnalysis aiv = get("AIV", {{"l", 4}});
  const auto& d1 = datum(aiv, "xi1");
  CHECK(d1.multiplicity() == 6);
  CHECK(d1.basic_roots.size() == 2);
  // beta1 = alpha1, gamma1 = alpha_l
  CHECK((d1.basic_roots[0] == aiv.rs.simple_roots[0] ||
         d1.basic_roots[0] == aiv.rs.simple_roots[3]));
  CHECK(datum(aiv, "2xi1").multiplicity() == 1);

  PairAnalysis fii = get("FII");
  CHECK(datum(fii, "xi1").multiplicity() == 8);
  CHECK(datum(fii, "2xi1").multiplicity() == 7);
  CHECK(fii.delta == Rational(11) * fii.pair.a_basis[0]);

  PairAnalysis g2a2 = get("G2A2");
  CHECK(datum(g2a2, "xi1").multiplicity() == 2);
  CHECK(datum(g2a2, "2xi1").multiplicity() == 1);
  CHECK(datum(g2a2, "3xi1").multiplicity() == 2);
  CHECK(datum(g2a2, "3xi1").divisibility == 3);
}

TEST_CASE("EIII nest multiplicities (l2:6, l1:8, 2l1:1)") {
  PairAnalysis eiii = get("EIII");
  ExactVector l1 = eiii.restrict(eiii.rs.simple_roots[0]);
  ExactVector l2 = eiii.restrict(eiii.rs.simple_roots[1]);
  CHECK(eiii.find(l2)->multiplicity() == 6);
  CHECK(eiii.find(l1)->multiplicity() == 8);
  CHECK(eiii.find(Rational(2) * l1)->multiplicity() == 1);
  CHECK(eiii.find(l1)->basic_roots.size() == 2);
  // Restrictions of alpha1 and alpha6 agree (Satake arrow).
  CHECK(eiii.restrict(eiii.rs.simple_roots[5]) == l1);
}

TEST_CASE("principal element and pi element") {
  PairAnalysis b3g2 = get("B3G2");
  ExactVector a1 = b3g2.rs.simple_roots[0], a2 = b3g2.rs.simple_roots[1];
  CHECK(b3g2.h_m0 == Rational(2) * a1 + Rational(2) * a2);
  CHECK(b3g2.pi_m0.is_zero());  // simply-laced Delta_0

  PairAnalysis eiv = get("EIV");
  const auto& s = eiv.rs.simple_roots;
  CHECK(eiv.h_m0 == Rational(6) * s[2] + Rational(10) * s[3] +
                        Rational(6) * s[1] + Rational(6) * s[4]);

  PairAnalysis bii = get("BII", {{"l", 4}});
  CHECK(bii.pi_m0 == ExactVector({0, Rational(-1, 2), Rational(-1, 2),
                                  Rational(-1, 2)}));

  PairAnalysis cii = get("CII-rk1", {{"l", 4}});
  CHECK(cii.pi_m0 == ExactVector({0, 0, Rational(1, 2), Rational(1, 2)}));

  PairAnalysis slsp = get("SL-Sp", {{"n", 1}});
  CHECK(slsp.h_m0.is_zero());
}

TEST_CASE("shift multisets") {
  // B II: -l+3/2, ..., -1/2, 0, 1/2, ..., l-3/2
  PairAnalysis bii = get("BII", {{"l", 4}});
  std::multiset<Rational> want{0};
  for (int j = 1; j <= 5; j += 2) {
    want.insert(Rational(j, 2));
    want.insert(Rational(-j, 2));
  }
  const auto& d = datum(bii, "xi1");
  CHECK(std::multiset<Rational>(d.shifts.begin(), d.shifts.end()) == want);

  // F II nest(xi1): +-1/4, +-3/4, +-7/4, +-9/4
  PairAnalysis fii = get("FII");
  std::multiset<Rational> fwant;
  for (int j : {1, 3, 7, 9}) {
    fwant.insert(Rational(j, 4));
    fwant.insert(Rational(-j, 4));
  }
  const auto& f = datum(fii, "xi1");
  CHECK(std::multiset<Rational>(f.shifts.begin(), f.shifts.end()) == fwant);

  // Sp(2l)/(C* x Sp(2l-2)) nest(xi_i): gap at zero
  PairAnalysis cglc = get("Cglc", {{"l", 4}});
  const auto& c = datum(cglc, "xi1");
  std::multiset<Rational> cwant;
  for (int j = 1; j <= 2; ++j) {
    cwant.insert(j);
    cwant.insert(-j);
  }
  CHECK(std::multiset<Rational>(c.shifts.begin(), c.shifts.end()) == cwant);
}

TEST_CASE("classification: rank-one pairs are all regular") {
  for (const char* fam : {"FII", "B3G2", "G2A2"}) {
    PairAnalysis a = get(fam);
    for (const auto& d : a.data) CHECK(d.klass == Klass::Regular);
  }
  PairAnalysis aiv = get("AIV", {{"l", 5}});
  for (const auto& d : aiv.data) CHECK(d.klass == Klass::Regular);
}

TEST_CASE("classification: slpq singular and D4G2/regular split") {
  PairAnalysis slpq = get("slpq", {{"p", 2}, {"q", 4}});
  CHECK(datum(slpq, "xi1-xi3").klass == Klass::Singular);
  CHECK(datum(slpq, "xi1+xi3").klass == Klass::Singular);
  CHECK(datum(slpq, "xi1-xi2").klass == Klass::Regular);
  CHECK(datum(slpq, "2xi1").klass == Klass::Regular);

  PairAnalysis d4g2 = get("D4G2");
  CHECK(datum(d4g2, "xi1-xi3").klass == Klass::Regular);
  CHECK(datum(d4g2, "2xi2").klass == Klass::Regular);
  CHECK(datum(d4g2, "xi1-xi2").klass == Klass::Singular);
  CHECK(datum(d4g2, "xi1+xi2").klass == Klass::Singular);
}

TEST_CASE("satake markings") {
  PairAnalysis aiv = get("AIV", {{"l", 5}});
  CHECK(aiv.satake[0].h_value == Rational(2 - 5));
  CHECK(aiv.satake[4].h_value == Rational(2 - 5));
  CHECK(aiv.satake[1].black);
  REQUIRE(aiv.satake[0].arrow.has_value());
  CHECK(*aiv.satake[0].arrow == 4);
  CHECK_FALSE(aiv.satake[0].pi_value.has_value());

  PairAnalysis e6d5 = get("E6D5");
  CHECK(e6d5.satake[0].h_value == Rational(-3));
  CHECK(e6d5.satake[5].h_value == Rational(-3));
  CHECK(e6d5.satake[1].h_value == Rational(-4));

  PairAnalysis bii = get("BII", {{"l", 4}});
  CHECK(bii.satake[0].h_value == Rational(-6));  // -2l+2
  REQUIRE(bii.satake[0].pi_value.has_value());
  CHECK(*bii.satake[0].pi_value == Rational(1, 2));
}

TEST_CASE("rho decomposition holds and is orthogonal") {
  for (const char* fam : {"FII", "B3G2", "D4G2", "E6D5"}) {
    PairAnalysis a = get(fam);
    CHECK(verify_rho_decomposition(a));
  }
  PairAnalysis b3g2 = get("B3G2");
  CHECK(b3g2.delta == Rational(9, 2) * b3g2.pair.a_basis[0]);
  CHECK(b3g2.rho_m ==
        b3g2.rs.simple_roots[0] + b3g2.rs.simple_roots[1]);
  // Empty Delta_0: delta = rho_g, rho_m = 0.
  PairAnalysis slsp = get("SL-Sp", {{"n", 2}});
  CHECK(slsp.rho_m.is_zero());
  CHECK(slsp.delta == slsp.rho_g);
}

TEST_CASE("structural checks pass on a sample of pairs") {
  for (const char* fam : {"FII", "B3G2", "G2A2", "B4B3", "D4G2", "E6D5",
                          "EIII", "EIV", "EII"}) {
    PairAnalysis a = get(fam);
    CHECK(check_all(a).empty());
  }
  CHECK(check_all(get("slpq", {{"p", 2}, {"q", 5}})).empty());
  CHECK(check_all(get("BII", {{"l", 2}})).empty());
  CHECK(check_all(get("BI", {{"l", 4}, {"r", 3}})).empty());
}

TEST_CASE("nest conjugation checks") {
  // Identity maps every nest to itself.
  PairAnalysis bi = get("BI", {{"l", 5}, {"r", 2}});
  ExactVector lr = bi.restrict(bi.rs.simple_roots[1]);
  SignedPermutation id(5);
  CHECK(verify_nest_conjugation(bi, id, lr, lr));

  // B I: transposition i <-> r maps nest(xi_i) to nest(lambda_r).
  SignedPermutation w(5);
  w.swap(0, 1);
  ExactVector xi1 = bi.restrict(ev({1, 0, -1, 0, 0}));  // e1 - e(r+1)
  CHECK(verify_nest_conjugation(bi, w, xi1, lr));

  // Hypothesis violation: a permutation moving Delta_0 is rejected.
  SignedPermutation bad(5);
  bad.swap(2, 4);
  bad.swap(1, 3);
  CHECK_THROWS_AS(verify_nest_conjugation(bi, bad, xi1, lr),
                  std::invalid_argument);
}

TEST_CASE("degenerate pipeline: empty Delta_0 gives multiplicity-one nests") {
  for (const auto& a :
       {get("SL-Sp", {{"n", 2}}), get("SO-GL", {{"n", 3}})}) {
    CHECK(a.psi_plus.empty());
    CHECK(a.data.size() == a.rs.positive_roots.size());
    for (const auto& d : a.data) {
      CHECK(d.multiplicity() == 1);
      CHECK(d.klass == Klass::Regular);
    }
  }
}

TEST_CASE("complete tables sum to |Phi+| - |Psi+|") {
  // The rank-one and higher-rank non-symmetric tables list all of Sigma+.
  for (const auto& pair : catalog()) {
    if (pair.family == "AII" || pair.family == "AIII" || pair.family == "BI" ||
        pair.family == "CII" || pair.family == "DI" || pair.family == "DIII" ||
        pair.family == "DI-split" || pair.family == "AI" ||
        pair.family[0] == 'E' || pair.family == "FI" || pair.family == "G")
      continue;  // symmetric tables cover only the simple restricted roots
    if (pair.family == "SL-Sp" || pair.family == "SO-GL") continue;
    PairAnalysis a = analyze(pair);
    long sum = 0;
    for (const auto& row : pair.expected_table) sum += row.multiplicity;
    CHECK(sum == static_cast<long>(a.rs.positive_roots.size() -
                                   a.psi_plus.size()));
  }
}

TEST_CASE("DIII odd case has one-dimensional c0") {
  PairAnalysis a = get("DIII", {{"l", 5}});
  CHECK(a.c_basis.size() == 3);
  CHECK(a.c0_basis.size() == 1);
  CHECK(a.a_basis.size() == 2);
}

TEST_CASE("satake arrows join white nodes with equal restriction") {
  PairAnalysis eiii = get("EIII");
  REQUIRE(eiii.satake[0].arrow.has_value());
  CHECK(*eiii.satake[0].arrow == 5);

  PairAnalysis aiii = get("AIII", {{"l", 5}, {"r", 2}});
  REQUIRE(aiii.satake[0].arrow.has_value());
  CHECK(*aiii.satake[0].arrow == 4);  // alpha1 <-> alpha5
  REQUIRE(aiii.satake[1].arrow.has_value());
  CHECK(*aiii.satake[1].arrow == 3);  // alpha2 <-> alpha4

  // No arrows when all restrictions are distinct.
  PairAnalysis b4b3 = get("B4B3");
  for (const auto& m : b4b3.satake) CHECK_FALSE(m.arrow.has_value());
}

TEST_CASE("report order is by divisibility class then basis coordinates") {
  for (const char* fam : {"D4G2", "E6D5", "G2A2"}) {
    PairAnalysis a = get(fam);
    for (std::size_t i = 1; i < a.data.size(); ++i) {
      const auto& x = a.data[i - 1];
      const auto& y = a.data[i];
      bool ordered = x.divisibility < y.divisibility ||
                     (x.divisibility == y.divisibility && x.coords < y.coords);
      CHECK(ordered);
    }
  }
}

TEST_CASE("non-default instantiations satisfy every structural check") {
  struct Case {
    const char* fam;
    std::map<std::string, long> ps;
  };
  for (const auto& tc : std::initializer_list<Case>{
           {"slpq", {{"p", 1}, {"q", 2}}},   // singular/regular tie, q-p = 1
           {"slpq", {{"p", 3}, {"q", 7}}},
           {"BI", {{"l", 6}, {"r", 5}}},     // r = l-1, rescaled form
           {"DI", {{"l", 6}, {"r", 5}}},
           {"DI", {{"l", 3}, {"r", 2}}},
           {"AIII", {{"l", 4}, {"r", 2}}},   // l = 2r boundary
           {"CII", {{"l", 6}, {"r", 3}}},    // l = 2r boundary
           {"DIII", {{"l", 9}}},
           {"Cglc", {{"l", 6}}},
           {"SO-SL", {{"p", 3}}}}) {
    PairAnalysis a = analyze(instantiate(tc.fam, tc.ps));
    CHECK(check_all(a).empty());
    CHECK(verify_sweep(a, 1).all_match);
  }
}

TEST_CASE("the golden checks have teeth") {
  // A corrupted table value is reported.
  SphericalPair fii = instantiate("FII", {});
  fii.expected_table[0].multiplicity = 9;
  PairAnalysis a = analyze(fii);
  CHECK_FALSE(check_expected_table(a).empty());

  SphericalPair fii2 = instantiate("FII", {});
  fii2.expected_table[1].delta_pairing = Rational(6);
  CHECK_FALSE(check_expected_table(analyze(fii2)).empty());

  // A wrong Delta_0 violates its defining orthogonality.
  SphericalPair bad = instantiate("FII", {});
  bad.delta0 = {0, 1};  // drops alpha3
  bool caught = false;
  try {
    caught = !check_all(analyze(bad)).empty();
  } catch (const std::exception&) {
    caught = true;
  }
  CHECK(caught);

  // A wrong generator set is flagged too.
  SphericalPair bad2 = instantiate("B4B3", {});
  bad2.generators[0] = {0, 1, 0, 0};  // support meets Delta_0
  bool failed = false;
  try {
    failed = !check_all(analyze(bad2)).empty();
  } catch (const std::exception&) {
    failed = true;
  }
  CHECK(failed);
}

TEST_CASE("BI pi pairings: 1/2 at node r, -1/2 at node l") {
  PairAnalysis bi = get("BI", {{"l", 5}, {"r", 3}});
  CHECK(bi.rs.form(bi.pi_m0, bi.rs.simple_roots[2]) == Rational(1, 2));
  CHECK(bi.rs.form(bi.pi_m0, bi.rs.simple_roots[4]) == Rational(-1, 2));
  REQUIRE(bi.satake[2].pi_value.has_value());
  CHECK(*bi.satake[2].pi_value == Rational(1, 2));
}

TEST_CASE("DII at l=2 runs through the generic engine") {
  PairAnalysis a = get("DII", {{"l", 2}});
  REQUIRE(a.data.size() == 1);
  CHECK(a.data[0].multiplicity() == 2);
  CHECK(a.data[0].basic_roots.size() == 2);
  CHECK(a.rho_m.is_zero());
  CHECK(a.delta == a.rho_g);
  CHECK(a.c0_basis.size() == 1);
}

TEST_CASE("explicit principal elements") {
  // A-type: h = sum (j-1)(l-j) alpha_j over the interior block, at l = 5.
  PairAnalysis aiv = get("AIV", {{"l", 5}});
  const auto& s = aiv.rs.simple_roots;
  CHECK(aiv.h_m0 == Rational(3) * s[1] + Rational(4) * s[2] +
                        Rational(3) * s[3]);
  // B-type: h = (2l-2)e2 + (2l-4)e3 + ... + 2el, at l = 4.
  PairAnalysis bii = get("BII", {{"l", 4}});
  CHECK(bii.h_m0 == ExactVector({0, 6, 4, 2}));
  // E7 with three sl2 ideals: h = a2 + a5 + a7.
  PairAnalysis evi = get("EVI");
  const auto& t = evi.rs.simple_roots;
  CHECK(evi.h_m0 == t[1] + t[4] + t[6]);
  // C-type with sl2 blocks and a small symplectic tail, at (l,r) = (5,2).
  PairAnalysis cii = get("CII", {{"l", 5}, {"r", 2}});
  CHECK(cii.h_m0 == ExactVector({1, -1, 1, -1, 1}));
}

TEST_CASE("white markings are negative exactly at nodes adjacent to Delta_0") {
  for (const auto& pair : catalog()) {
    PairAnalysis a = analyze(pair);
    for (const auto& m : a.satake) {
      if (m.black) continue;
      bool adjacent = false;
      for (auto i : pair.delta0)
        adjacent = adjacent ||
                   dot(a.rs.simple_roots[m.node], a.rs.simple_roots[i]) != 0;
      if (adjacent) {
        CHECK(m.h_value < 0);
      } else {
        CHECK(m.h_value == 0);
        if (m.pi_value) CHECK(*m.pi_value == 0);
      }
    }
  }
}

TEST_CASE("a, c0 and span(Delta_0) decompose the Cartan orthogonally") {
  for (const char* fam : {"E6D5", "B4B3", "EIII", "G2A2"}) {
    PairAnalysis a = get(fam);
    Matrix d0;
    for (auto i : a.pair.delta0) d0.push_back(a.rs.simple_roots[i]);
    for (const auto& alpha : a.rs.positive_roots) {
      ExactVector sum = a.restrict(alpha) +
                        project_onto_span(a.c0_basis, alpha) +
                        project_onto_span(d0, alpha);
      CHECK(sum == alpha);
    }
    // The three pieces are pairwise orthogonal.
    for (const auto& x : a.a_basis) {
      for (const auto& y : a.c0_basis) CHECK(dot(x, y) == 0);
      for (const auto& y : d0) CHECK(dot(x, y) == 0);
    }
    for (const auto& x : a.c0_basis)
      for (const auto& y : d0) CHECK(dot(x, y) == 0);
  }
}
