#pragma once

#include <stdexcept>
#include <string>

namespace mellin {

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define MELLIN_ERROR(Name)                                                  \
    class Name : public Error {                                             \
    public:                                                                 \
        explicit Name(const std::string& what) : Error(#Name, what) {}      \
    }

MELLIN_ERROR(DomainError);
MELLIN_ERROR(PrecisionOverflow);
MELLIN_ERROR(UnstableEvaluation);
MELLIN_ERROR(ConvergenceError);
MELLIN_ERROR(SlowDecay);
MELLIN_ERROR(DecayViolation);
MELLIN_ERROR(PoleOnContour);
MELLIN_ERROR(ResidueMismatch);
MELLIN_ERROR(NonIntegrableSingularity);
MELLIN_ERROR(InvalidParams);
MELLIN_ERROR(EvaluationFailed);
MELLIN_ERROR(PrecisionCeiling);
MELLIN_ERROR(ConfigError);

#undef MELLIN_ERROR

}  // namespace mellin
