#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sp4bg {

enum class errc {
  mixed_rings,
  not_a_unit,
  unsupported_ring,
  unsupported_residue,
  not_pseudo_good,
  division_by_zero,
  not_euclidean_here,
  not_symplectic,
  not_a_field,
  not_in_borel,
  two_is_unit,
  not_in_congruence_subgroup,
  residual_not_identity,
  unsupported_field,
  too_large,
  parse_error,
  invalid_argument,
};

inline std::string_view to_string(errc code) {
  switch (code) {
    case errc::mixed_rings: return "MixedRings";
    case errc::not_a_unit: return "NotAUnit";
    case errc::unsupported_ring: return "UnsupportedRing";
    case errc::unsupported_residue: return "UnsupportedResidue";
    case errc::not_pseudo_good: return "NotPseudoGood";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::not_euclidean_here: return "NotEuclideanHere";
    case errc::not_symplectic: return "NotSymplectic";
    case errc::not_a_field: return "NotAField";
    case errc::not_in_borel: return "NotInBorel";
    case errc::two_is_unit: return "TwoIsUnit";
    case errc::not_in_congruence_subgroup: return "NotInCongruenceSubgroup";
    case errc::residual_not_identity: return "ResidualNotIdentity";
    case errc::unsupported_field: return "UnsupportedField";
    case errc::too_large: return "TooLarge";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sp4bg
