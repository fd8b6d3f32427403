#pragma once

#include <stdexcept>
#include <string>

namespace slicesim {

// All domain failures carry a stable short code; the sequence engine maps
// codes into trace outcomes, the CLI maps them onto exit codes.
class SliceError : public std::runtime_error {
 public:
  SliceError(std::string code, const std::string& what)
      : std::runtime_error(code + ": " + what), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define SLICESIM_ERROR(Name)                            \
  class Name : public SliceError {                      \
   public:                                              \
    explicit Name(const std::string& what)              \
        : SliceError(#Name, what) {}                    \
  }

SLICESIM_ERROR(InsufficientResources);
SLICESIM_ERROR(IncompatibleProfile);
SLICESIM_ERROR(NotShareable);
SLICESIM_ERROR(UnknownHolder);
SLICESIM_ERROR(InvalidTransition);
SLICESIM_ERROR(UnclassifiableRequest);
SLICESIM_ERROR(RequestDiscarded);
SLICESIM_ERROR(MalformedRequest);
SLICESIM_ERROR(TenantMismatch);
SLICESIM_ERROR(InactiveNsi);
SLICESIM_ERROR(MnoUnreachable);
SLICESIM_ERROR(GrantRefused);
SLICESIM_ERROR(MalformedTrace);
SLICESIM_ERROR(ReplayDivergence);
SLICESIM_ERROR(ParseError);
SLICESIM_ERROR(SchemaViolation);
SLICESIM_ERROR(DanglingReference);
SLICESIM_ERROR(ExpectationMismatch);
SLICESIM_ERROR(InvariantViolation);
SLICESIM_ERROR(ContractViolation);

#undef SLICESIM_ERROR

}  // namespace slicesim
