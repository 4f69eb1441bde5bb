#pragma once

#include <stdexcept>
#include <string>

namespace gl2gauss {

enum class Errc {
  NonUnit,
  BadArgument,
  BadConductor,
  ConstructionFailed,
  NotInSubgroup,
  DecompositionFailed,
  TooLarge,
  InexactDivision,
  NotFound,
  NotUnique,
  UnsupportedFamily,
  DivisibilityFailed,
  Overflow,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

/// Default ceiling on the number of group elements any enumeration may visit.
inline constexpr long long kDefaultEnumerationCap = 2'000'000;

}  // namespace gl2gauss
