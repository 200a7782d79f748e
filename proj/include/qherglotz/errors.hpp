#pragma once

#include <stdexcept>
#include <string>

namespace qherglotz {

// Base of every error raised by the library. Subclasses name the violated
// precondition so callers (and the CLI) can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define QHERGLOTZ_DEFINE_ERROR(Name)   \
  class Name : public Error {          \
   public:                             \
    using Error::Error;                \
  }

// quatcore
QHERGLOTZ_DEFINE_ERROR(SymmetryViolation);
QHERGLOTZ_DEFINE_ERROR(FrameError);
QHERGLOTZ_DEFINE_ERROR(ShapeError);

// qlinalg
QHERGLOTZ_DEFINE_ERROR(NotHermitian);
QHERGLOTZ_DEFINE_ERROR(NoConvergence);
QHERGLOTZ_DEFINE_ERROR(NotPSD);
QHERGLOTZ_DEFINE_ERROR(BlockNotPSD);
QHERGLOTZ_DEFINE_ERROR(SingularMatrix);

// moments
QHERGLOTZ_DEFINE_ERROR(SupportExceeded);
QHERGLOTZ_DEFINE_ERROR(NotPD);
QHERGLOTZ_DEFINE_ERROR(CompletionFailure);

// measures
QHERGLOTZ_DEFINE_ERROR(NotQPositive);
QHERGLOTZ_DEFINE_ERROR(SupportOverlap);

// realize
QHERGLOTZ_DEFINE_ERROR(NotJUnitary);
QHERGLOTZ_DEFINE_ERROR(NotCoisometry);
QHERGLOTZ_DEFINE_ERROR(DegenerateSeed);
QHERGLOTZ_DEFINE_ERROR(SpanDeficient);
QHERGLOTZ_DEFINE_ERROR(NoUnitaryAlignment);

// slicefn
QHERGLOTZ_DEFINE_ERROR(OutOfDomain);

#undef QHERGLOTZ_DEFINE_ERROR

}  // namespace qherglotz
