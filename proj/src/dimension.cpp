#include "sphdim/dimension.hpp"

#include <stdexcept>

namespace sphdim {

bool is_halfinteger(const Rational& t) {
  return t >= 0 && (t.get_den() == 1 || t.get_den() == 2);
}

Rational phi(const Rational& x, const Rational& t) {
  if (!is_halfinteger(t))
    throw std::invalid_argument("phi: t must be a nonnegative half-integer");
  Rational p(1);
  for (Rational j = -t; j <= t; j += 1) p *= x + j;
  return p;
}

Rational phi_ratio(const Rational& x, const Rational& y, const Rational& t) {
  Rational den = phi(y, t);
  if (den == 0) throw std::domain_error("Phi: pole, phi(y;t) = 0");
  return phi(x + y, t) / den;
}

bool regular_signature_admissible(const Signature& s) {
  if (s.m < 1) return false;
  if (s.m2 == 0 && s.m3 == 0) return true;
  if (s.m2 == 1 && s.m3 == 0) return s.m >= 2 && s.m % 2 == 0;
  if (s.m2 == 3 && s.m3 == 0) return (s.m >= 2 && s.m % 2 == 0) || s.m == 3;
  if (s.m2 == 7 && s.m3 == 0) return s.m == 8;
  if (s.m2 == 1 && s.m3 == 2) return s.m == 2;
  return false;
}

bool singular_signature_admissible(const Signature& s) {
  if (s.m < 1 || s.m3 != 0) return false;
  if (s.m2 == 0) return true;
  if (s.m2 == 1) return s.m % 2 == 0;
  return false;
}

Rational W_regular(const Rational& x, const Rational& y, const Signature& s) {
  if (!regular_signature_admissible(s))
    throw std::invalid_argument("W_regular: inadmissible signature (" +
                                std::to_string(s.m) + "," +
                                std::to_string(s.m2) + "," +
                                std::to_string(s.m3) + ")");
  const Rational half(1, 2);
  if (s.m2 == 0 && s.m3 == 0) {
    if (s.m == 1) return phi_ratio(x, y);
    if (s.m == 2) {
      Rational p = phi_ratio(x, y);
      return p * p;
    }
    if (s.m == 3) return phi_ratio(x, y, Rational(1));
    return phi_ratio(x, y) * phi_ratio(x, y, rat(s.m, 2) - 1);
  }
  if (s.m2 == 1 && s.m3 == 0) {
    Rational p = phi_ratio(x, y, rat(s.m, 4) - half);
    return phi_ratio(x, y) * p * p;
  }
  if (s.m2 == 3 && s.m3 == 0 && s.m != 3) {
    return phi_ratio(x, y, rat(s.m, 4) - half) *
           phi_ratio(x, y, rat(s.m, 4) + half) /
           phi_ratio(x, y, half) * phi_ratio(2 * x, 2 * y, Rational(1));
  }
  if (s.m == 3 && s.m2 == 3) {
    return phi_ratio(x, y, Rational(1)) * phi_ratio(2 * x, 2 * y, Rational(1));
  }
  if (s.m == 8 && s.m2 == 7) {
    return phi_ratio(x, y) * phi_ratio(2 * x, 2 * y, Rational(3, 2)) *
           phi_ratio(2 * x, 2 * y, Rational(9, 2));
  }
  // (2,1,2)
  return phi_ratio(x, y, half) * phi_ratio(2 * x, 2 * y) *
         phi_ratio(3 * x, 3 * y, half);
}

Rational W_singular(const Rational& x, const Rational& y, const Signature& s) {
  if (!singular_signature_admissible(s))
    throw std::invalid_argument("W_singular: inadmissible signature (" +
                                std::to_string(s.m) + "," +
                                std::to_string(s.m2) + ")");
  if (s.m2 == 0) return phi_ratio(x, y, rat(s.m, 2) - Rational(1, 2));
  return phi_ratio(x, y, rat(s.m, 2));
}

Rational nest_factor_from_shifts(const Rational& pairing_lam,
                                 const Rational& pairing_delta,
                                 const std::vector<Rational>& shifts) {
  Rational p(1);
  for (const auto& s : shifts) {
    Rational den = pairing_delta + s;
    if (den == 0)
      throw std::logic_error("nest factor: zero denominator at shift " +
                             to_string(s));
    p *= (pairing_lam + s) / den;
  }
  return p;
}

Rational family_factor(const FamilyShiftData& f, const Rational& x) {
  Rational p(1);
  for (int d = 1; d <= 3; ++d) {
    if (f.shifts[d - 1].empty()) continue;
    p *= nest_factor_from_shifts(d * (x + f.y), d * f.y, f.shifts[d - 1]);
  }
  return p;
}

WFormMatch match_W_form(const FamilyShiftData& f) {
  WFormMatch out;
  out.signature = f.signature();
  const long degree = out.signature.m + out.signature.m2 + out.signature.m3;
  auto agrees = [&](auto&& w_eval) {
    try {
      for (long k = 0; k <= degree; ++k) {
        Rational x(k);
        if (family_factor(f, x) != w_eval(x)) return false;
      }
    } catch (const std::domain_error&) {
      return false;  // candidate form has a pole at this y, actual does not
    }
    return true;
  };
  if (regular_signature_admissible(out.signature))
    out.matches_regular =
        agrees([&](const Rational& x) { return W_regular(x, f.y, out.signature); });
  if (singular_signature_admissible(out.signature))
    out.matches_singular =
        agrees([&](const Rational& x) { return W_singular(x, f.y, out.signature); });
  if (!out.matches_regular && !out.matches_singular)
    throw std::runtime_error(
        "match_W_form: shift data matches no closed form (m=" +
        std::to_string(out.signature.m) + ", m2=" +
        std::to_string(out.signature.m2) + ", m3=" +
        std::to_string(out.signature.m3) + ", y=" + to_string(f.y) + ")");
  return out;
}

std::string klass_name(Klass k) {
  return k == Klass::Regular ? "regular" : "singular";
}

}  // namespace sphdim
