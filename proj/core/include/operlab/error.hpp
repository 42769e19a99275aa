#pragma once

#include <stdexcept>
#include <string>

namespace operlab {

// Stable machine-readable codes for every failure mode named in the
// module contracts.  Messages are for humans; tests match on codes.
enum class errc {
  non_separable_reduction,
  non_split_reduction,
  zero_input,
  prime_too_small,
  unrealized_family,
  not_regular,
  not_dormant,
  not_dormant_mod_p,
  repeated_eigenvalues,
  singular_matrix,
  supersingular,
  supersingular_input,
  unsupported_form,
  level_out_of_range,
  side_mismatch,
  extension_too_large,
  validation,
  verification,
  internal,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::non_separable_reduction: return "NonSeparableReduction";
    case errc::non_split_reduction: return "NonSplitReduction";
    case errc::zero_input: return "ZeroInput";
    case errc::prime_too_small: return "PrimeTooSmall";
    case errc::unrealized_family: return "UnrealizedFamily";
    case errc::not_regular: return "NotRegular";
    case errc::not_dormant: return "NotDormant";
    case errc::not_dormant_mod_p: return "NotDormantModP";
    case errc::repeated_eigenvalues: return "RepeatedEigenvalues";
    case errc::singular_matrix: return "Singular";
    case errc::supersingular: return "Supersingular";
    case errc::supersingular_input: return "SupersingularInput";
    case errc::unsupported_form: return "UnsupportedForm";
    case errc::level_out_of_range: return "LevelOutOfRange";
    case errc::side_mismatch: return "SideMismatch";
    case errc::extension_too_large: return "ExtensionTooLarge";
    case errc::validation: return "ValidationError";
    case errc::verification: return "VerificationError";
    case errc::internal: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

}  // namespace operlab
