#pragma once

#include <stdexcept>
#include <string>

namespace liecheck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LIECHECK_DEFINE_ERROR(Name)         \
  class Name : public Error {               \
   public:                                  \
    explicit Name(const std::string& what)  \
        : Error(#Name ": " + what) {}       \
  }

LIECHECK_DEFINE_ERROR(InvalidType);
LIECHECK_DEFINE_ERROR(BudgetExceeded);
LIECHECK_DEFINE_ERROR(ShortRoot);
LIECHECK_DEFINE_ERROR(DuplicateMinimal);
LIECHECK_DEFINE_ERROR(JacobiFailure);
LIECHECK_DEFINE_ERROR(BNotStable);
LIECHECK_DEFINE_ERROR(NotReduced);
LIECHECK_DEFINE_ERROR(UnsupportedType);
LIECHECK_DEFINE_ERROR(ConfigError);
LIECHECK_DEFINE_ERROR(IoError);
// Broken internal invariant (failed exact division, non-integral constant).
LIECHECK_DEFINE_ERROR(InternalError);

#undef LIECHECK_DEFINE_ERROR

}  // namespace liecheck
