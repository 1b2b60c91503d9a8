#ifndef CLUSTVAL_ERRORS_HPP
#define CLUSTVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace clustval {

// Base class for all validation/ingestion failures raised by the library.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

#define CLUSTVAL_DEFINE_ERROR(Name)                                     \
    class Name : public ValidationError {                               \
    public:                                                             \
        explicit Name(const std::string& msg) : ValidationError(msg) {} \
    }

CLUSTVAL_DEFINE_ERROR(InputTooSmall);
CLUSTVAL_DEFINE_ERROR(MalformedInput);
CLUSTVAL_DEFINE_ERROR(AsymmetricInput);
CLUSTVAL_DEFINE_ERROR(NegativeDissimilarity);
CLUSTVAL_DEFINE_ERROR(BadDiagonal);
CLUSTVAL_DEFINE_ERROR(NoWithinPairs);
CLUSTVAL_DEFINE_ERROR(RequiresTwoClusters);
CLUSTVAL_DEFINE_ERROR(DegenerateCorrelation);
CLUSTVAL_DEFINE_ERROR(InsufficientClusterSizes);
CLUSTVAL_DEFINE_ERROR(KOutOfRange);
CLUSTVAL_DEFINE_ERROR(DegenerateCalibration);
CLUSTVAL_DEFINE_ERROR(KNotInCollection);
CLUSTVAL_DEFINE_ERROR(MissingIndex);
CLUSTVAL_DEFINE_ERROR(BadWeight);

#undef CLUSTVAL_DEFINE_ERROR

} // namespace clustval

#endif
