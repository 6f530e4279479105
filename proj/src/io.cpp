#include "sphdim/io.hpp"
#include <algorithm>

#include <iomanip>
#include <sstream>

namespace sphdim {

using nlohmann::json;

json rational_json(const Rational& r) { return to_string(r); }

json vector_json(const ExactVector& v) {
  json arr = json::array();
  for (std::size_t i = 0; i < v.dim(); ++i) arr.push_back(rational_json(v[i]));
  return arr;
}

json pair_json(const SphericalPair& p) {
  json j;
  j["id"] = p.id;
  j["family"] = p.family;
  j["params"] = p.params;
  j["group"] = {{"type", lie_type_name(p.type)}, {"rank", p.rank}};
  json d0 = json::array();
  for (auto i : p.delta0) d0.push_back(i + 1);
  j["delta0"] = d0;
  j["generators"] = p.generators;
  j["spherical_rank"] = p.spherical_rank;
  j["symmetric"] = p.symmetric;
  if (!p.a_basis.empty()) {
    json ab = json::array();
    for (const auto& v : p.a_basis) ab.push_back(vector_json(v));
    j["a_basis"] = ab;
  }
  json rows = json::array();
  for (const auto& row : p.expected_table) {
    json r;
    r["label"] = row.xi.label;
    r["multiplicity"] = row.multiplicity;
    if (row.basic_count) r["basic_roots"] = *row.basic_count;
    if (row.delta_pairing) r["delta_pairing"] = rational_json(*row.delta_pairing);
    if (row.h_basic) r["h_basic"] = rational_json(*row.h_basic);
    if (row.klass) r["class"] = klass_name(*row.klass);
    rows.push_back(std::move(r));
  }
  j["expected_table"] = rows;
  return j;
}

json analysis_json(const PairAnalysis& a) {
  json j;
  j["pair"] = pair_json(a.pair);
  j["form_scale"] = rational_json(a.rs.form_scale);
  j["rho_g"] = vector_json(a.rho_g);
  j["rho_m"] = vector_json(a.rho_m);
  j["delta"] = vector_json(a.delta);
  j["h_m0"] = vector_json(a.h_m0);
  j["pi_m0"] = vector_json(a.pi_m0);
  json roots = json::array();
  for (const auto& d : a.data) {
    json r;
    r["label"] = d.label;
    r["xi"] = vector_json(d.xi);
    r["class"] = klass_name(d.klass);
    r["divisibility"] = d.divisibility;
    r["multiplicity"] = d.multiplicity();
    r["delta_pairing"] = rational_json(d.delta_pairing);
    r["k"] = d.k_xi;
    r["basic_roots"] = d.basic_roots.size();
    json shifts = json::array();
    for (const auto& s : d.shifts) shifts.push_back(rational_json(s));
    r["shifts"] = shifts;
    json nest = json::array();
    for (const auto& alpha : d.nest) nest.push_back(vector_json(alpha));
    r["nest"] = nest;
    roots.push_back(std::move(r));
  }
  j["restricted_roots"] = roots;
  json satake = json::array();
  for (const auto& m : a.satake) {
    json s;
    s["node"] = m.node + 1;
    s["color"] = m.black ? "black" : "white";
    if (!m.black) {
      s["h"] = rational_json(m.h_value);
      if (m.pi_value) s["pi"] = rational_json(*m.pi_value);
      if (m.arrow) s["arrow"] = *m.arrow + 1;
    }
    satake.push_back(std::move(s));
  }
  j["satake"] = satake;
  return j;
}

json report_json(const PairAnalysis& a, const DimensionReport& r) {
  json j;
  j["pair"] = a.pair.id;
  j["lambda"] = r.lambda_coeffs;
  json factors = json::array();
  for (std::size_t i = 0; i < a.data.size(); ++i)
    factors.push_back(
        {{"xi", a.data[i].label}, {"value", rational_json(r.factors[i])}});
  j["factors"] = factors;
  j["restricted"] = rational_json(r.restricted_product);
  j["closed_form"] = rational_json(r.w_product);
  j["oracle"] = r.oracle.get_str();
  j["match"] = r.matches;
  return j;
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string pad(const std::string& s, std::size_t w) {
  return s.size() >= w ? s + " " : s + std::string(w - s.size() + 1, ' ');
}

std::string shifts_str(std::vector<Rational> shifts) {
  std::sort(shifts.begin(), shifts.end());
  std::string s = "{";
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (i) s += ",";
    s += to_string(shifts[i]);
  }
  return s + "}";
}

std::string group_name(LieType t, std::size_t rank) {
  std::string name = lie_type_name(t);
  if (name.size() == 1) name += std::to_string(rank);
  return name;
}

}  // namespace

std::string describe_text(const PairAnalysis& a) {
  std::ostringstream os;
  const auto& p = a.pair;
  os << p.id << "  group " << group_name(p.type, p.rank)
     << "  spherical rank " << p.spherical_rank
     << (p.symmetric ? "  symmetric" : "  non-symmetric") << "\n";
  os << "generators:";
  for (std::size_t i = 0; i < p.generators.size(); ++i) {
    os << "  mu" << i + 1 << " =";
    bool first = true;
    for (std::size_t k = 0; k < p.generators[i].size(); ++k) {
      long c = p.generators[i][k];
      if (c == 0) continue;
      os << (first ? " " : " + ");
      if (c != 1) os << c << "*";
      os << "w" << k + 1;
      first = false;
    }
  }
  os << "\n";
  os << "Delta_0: {";
  bool first = true;
  for (auto i : p.delta0) {
    if (!first) os << ",";
    os << i + 1;
    first = false;
  }
  os << "}  form scale " << to_string(a.rs.form_scale) << "\n";
  os << "restricted roots:\n";
  os << "  " << pad("r/s", 4) << pad("root", 18) << pad("mult", 5)
     << pad("<delta|xi>", 10) << pad("#basic", 6) << pad("<h|beta>", 8)
     << "shifts\n";
  for (const auto& d : a.data) {
    os << "  " << pad(d.klass == Klass::Regular ? "(r)" : "(s)", 4)
       << pad(d.label, 18) << pad(std::to_string(d.multiplicity()), 5)
       << pad(to_string(d.delta_pairing), 10)
       << pad(std::to_string(d.basic_roots.size()), 6)
       << pad(to_string(Rational(-d.k_xi)), 8) << shifts_str(d.shifts)
       << "\n";
  }
  os << "satake:\n";
  for (const auto& m : a.satake) {
    os << "  node " << m.node + 1 << ": " << (m.black ? "black" : "white");
    if (!m.black) {
      if (m.pi_value)
        os << "  (" << to_string(m.h_value) << "," << to_string(*m.pi_value)
           << ")";
      else
        os << "  " << to_string(m.h_value);
      if (m.arrow) os << "  <-> node " << *m.arrow + 1;
    }
    os << "\n";
  }
  return os.str();
}

std::string report_text(const PairAnalysis& a, const DimensionReport& r) {
  std::ostringstream os;
  os << a.pair.id << "  lambda = (";
  for (std::size_t i = 0; i < r.lambda_coeffs.size(); ++i) {
    if (i) os << ",";
    os << r.lambda_coeffs[i];
  }
  os << ")\n";
  for (std::size_t i = 0; i < a.data.size(); ++i)
    os << "  d_{" << a.data[i].label << "} = " << to_string(r.factors[i])
       << "\n";
  os << "restricted product = " << to_string(r.restricted_product) << "\n";
  os << "closed form        = " << to_string(r.w_product) << "\n";
  os << "weyl dimension     = " << r.oracle.get_str() << "\n";
  os << "match: " << (r.matches ? "yes" : "NO") << "\n";
  return os.str();
}

std::string sweep_csv(const PairAnalysis& a,
                      const std::vector<DimensionReport>& reports) {
  std::ostringstream os;
  os << "pair,k,restricted,oracle,match\n";
  for (const auto& r : reports) {
    os << a.pair.id << ",\"";
    for (std::size_t i = 0; i < r.lambda_coeffs.size(); ++i) {
      if (i) os << " ";
      os << r.lambda_coeffs[i];
    }
    os << "\"," << to_string(r.restricted_product) << ","
       << r.oracle.get_str() << "," << (r.matches ? "true" : "false") << "\n";
  }
  return os.str();
}

std::string catalog_text(const std::vector<SphericalPair>& pairs) {
  std::ostringstream os;
  for (const auto& p : pairs) {
    std::string group = group_name(p.type, p.rank);
    os << pad(p.id, 16) << pad(group, 5)
       << "rank " << p.spherical_rank << "  "
       << (p.symmetric ? "symmetric" : "non-symmetric") << "\n";
  }
  return os.str();
}

}  // namespace sphdim
