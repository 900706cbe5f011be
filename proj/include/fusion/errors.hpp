#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

// Every failure the library reports derives from Error; the kind string is
// what the command line maps to exit codes.
class Error : public std::runtime_error {
public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

private:
  std::string kind_;
};

#define FUSION_ERROR(Name)                                                    \
  struct Name : Error {                                                       \
    explicit Name(const std::string& w) : Error(#Name, w) {}                  \
  }

FUSION_ERROR(ClosureBound);
FUSION_ERROR(UnknownEntry);
FUSION_ERROR(NotNormal);
FUSION_ERROR(NotSubmodule);
FUSION_ERROR(SizeBound);
FUSION_ERROR(DegreeMissing);
FUSION_ERROR(IntegralityViolation);
FUSION_ERROR(NoSolution);
FUSION_ERROR(NotAdapted);
FUSION_ERROR(MismatchedData);
FUSION_ERROR(InvalidArgument);

#undef FUSION_ERROR

}  // namespace fusion
