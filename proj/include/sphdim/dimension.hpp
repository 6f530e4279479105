#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sphdim/rational.hpp"

namespace sphdim {

// Half-integer t >= 0 is passed as a Rational with denominator 1 or 2.
bool is_halfinteger(const Rational& t);

// phi(x;t) = (x-t)(x-t+1)...(x+t), the monic polynomial with zeros at
// t, t-1, ..., -t; phi(x;0) = x.
Rational phi(const Rational& x, const Rational& t);

// Phi(x,y;t) = phi(x+y;t)/phi(y;t), normalized so Phi(0,y;t) = 1.
// Throws std::domain_error when phi(y;t) = 0.
Rational phi_ratio(const Rational& x, const Rational& y,
                   const Rational& t = Rational(0));

// Multiplicity signature (m, m2, m3) of a divisibility family.
struct Signature {
  long m = 0;
  long m2 = 0;
  long m3 = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

bool regular_signature_admissible(const Signature& s);
bool singular_signature_admissible(const Signature& s);

// Regular dimension function W(x,y;m,m2,m3); throws std::invalid_argument on
// an inadmissible signature.
Rational W_regular(const Rational& x, const Rational& y, const Signature& s);

// Singular dimension function W_sing(x,y;m,m2) (m3 must be 0).
Rational W_singular(const Rational& x, const Rational& y, const Signature& s);

// One nest's factor: prod over shifts s of (pairing_lam + s)/(pairing_delta
// + s), where pairing_lam = <lambda+delta|xi> and pairing_delta = <delta|xi>.
Rational nest_factor_from_shifts(const Rational& pairing_lam,
                                 const Rational& pairing_delta,
                                 const std::vector<Rational>& shifts);

// Shift data for a full divisibility family {xi, 2xi, 3xi}: shifts[d-1] is
// the multiset for d*xi (empty when absent), y = <delta|xi>.
struct FamilyShiftData {
  Rational y;
  std::vector<Rational> shifts[3];
  Signature signature() const {
    return {static_cast<long>(shifts[0].size()),
            static_cast<long>(shifts[1].size()),
            static_cast<long>(shifts[2].size())};
  }
};

// Combined factor of the family at formal x = <lambda|xi>.
Rational family_factor(const FamilyShiftData& f, const Rational& x);

enum class Klass { Regular, Singular };

struct WFormMatch {
  Signature signature;
  bool matches_regular = false;
  bool matches_singular = false;
};

// Decides which closed forms the family's combined shift product equals, by
// exact evaluation at degree+1 points (the two sides are polynomials in x
// over constant denominators).  Throws std::runtime_error when neither form
// matches.
WFormMatch match_W_form(const FamilyShiftData& f);

std::string klass_name(Klass k);

}  // namespace sphdim
