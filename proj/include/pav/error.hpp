#ifndef PAV_ERROR_HPP
#define PAV_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace pav {

enum class ErrorCode {
  // path validation
  BadStep,
  OddLength,
  NegativeExcursion,
  NotBalanced,
  TooLarge,
  // permutations and bijections
  NotAPermutation,
  IndexOutOfRange,
  EmptySet,
  Not321Avoiding,
  Not231Avoiding,
  NotReconstructible,
  // exact formulas
  RangeError,
  DomainError,
  // experiments
  EmptySample,
  BadConfig,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every recoverable failure in the library is reported as a pav::Error
/// carrying one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pav

#endif  // PAV_ERROR_HPP
