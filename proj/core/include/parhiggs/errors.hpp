#pragma once

#include <stdexcept>
#include <string>

namespace parhiggs {

// Base of every domain error raised by the library. The CLI maps these to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define PARHIGGS_DEFINE_ERROR(Name)        \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  };

PARHIGGS_DEFINE_ERROR(InvalidInput)
PARHIGGS_DEFINE_ERROR(PoleOrderTooHigh)
PARHIGGS_DEFINE_ERROR(NoSolution)
PARHIGGS_DEFINE_ERROR(NonUnique)
PARHIGGS_DEFINE_ERROR(EigenvalueNotInField)
PARHIGGS_DEFINE_ERROR(FlagNotEigenline)
PARHIGGS_DEFINE_ERROR(ConditionViolated)
PARHIGGS_DEFINE_ERROR(DegenerateResidue)
PARHIGGS_DEFINE_ERROR(SemistableInput)
PARHIGGS_DEFINE_ERROR(IterationBound)
PARHIGGS_DEFINE_ERROR(NegativeArea)

#undef PARHIGGS_DEFINE_ERROR

class OnWall : public Error {
 public:
  OnWall(int wall, const std::string& what) : Error(what), wall_(wall) {}
  int wall() const { return wall_; }

 private:
  int wall_;
};

}  // namespace parhiggs
