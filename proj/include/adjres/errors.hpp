#pragma once

#include <stdexcept>
#include <string>

namespace adjres {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define ADJRES_DEFINE_ERROR(Name)                                        \
  struct Name : Error {                                                  \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
  }

ADJRES_DEFINE_ERROR(RankOutOfRange);
ADJRES_DEFINE_ERROR(DimensionMismatch);
ADJRES_DEFINE_ERROR(EmptyParabolic);
ADJRES_DEFINE_ERROR(NotDominant);
ADJRES_DEFINE_ERROR(NotPDominant);
ADJRES_DEFINE_ERROR(POutOfRange);
ADJRES_DEFINE_ERROR(IndexOutOfRange);
ADJRES_DEFINE_ERROR(UnsupportedShape);
ADJRES_DEFINE_ERROR(NegativeMultiplicity);
ADJRES_DEFINE_ERROR(ComputeExcluded);
ADJRES_DEFINE_ERROR(ConventionError);
ADJRES_DEFINE_ERROR(CancellationMismatch);
ADJRES_DEFINE_ERROR(DegreeBoundExceeded);
ADJRES_DEFINE_ERROR(SizeOutOfRange);

#undef ADJRES_DEFINE_ERROR

}  // namespace adjres
