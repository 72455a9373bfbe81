#ifndef TAVC_ERRORS_HPP
#define TAVC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace tavc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define TAVC_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                     \
    public:                                                         \
        explicit Name(const std::string& msg) : Error(msg) {}       \
    }

// Linear-algebra / model errors.
TAVC_DEFINE_ERROR(SingularSystem);
TAVC_DEFINE_ERROR(NonConvergence);
TAVC_DEFINE_ERROR(TooManyStates);
TAVC_DEFINE_ERROR(InvalidExponents);

// Trajectory errors.
TAVC_DEFINE_ERROR(OutOfRange);

// PDMP simulation errors.
TAVC_DEFINE_ERROR(ThinningBoundViolated);
TAVC_DEFINE_ERROR(ZeroGradient);

// Diffusion errors.
TAVC_DEFINE_ERROR(NumericalBlowup);
TAVC_DEFINE_ERROR(QuadratureFailure);

// Splitting errors.
TAVC_DEFINE_ERROR(DegenerateSmallSet);
TAVC_DEFINE_ERROR(NegativeResidual);
TAVC_DEFINE_ERROR(EnvelopeViolation);
TAVC_DEFINE_ERROR(RejectionBudgetExceeded);
TAVC_DEFINE_ERROR(InsufficientCycles);

// Output-analysis errors.
TAVC_DEFINE_ERROR(TooFewBatches);
TAVC_DEFINE_ERROR(InsufficientReplicates);
TAVC_DEFINE_ERROR(WindowTooLarge);
TAVC_DEFINE_ERROR(DomainError);

// CLI / experiment errors.
TAVC_DEFINE_ERROR(ConfigError);
TAVC_DEFINE_ERROR(UnknownKind);

#undef TAVC_DEFINE_ERROR

} // namespace tavc

#endif
