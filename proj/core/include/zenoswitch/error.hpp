#pragma once

#include <stdexcept>
#include <string>

namespace zeno {

// Base of every numerical failure raised by the library. name() is the
// stable identifier printed by the command-line runner.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* name() const noexcept { return "Error"; }
};

#define ZENO_DEFINE_ERROR(Type)                                   \
    class Type : public Error {                                   \
    public:                                                       \
        using Error::Error;                                       \
        const char* name() const noexcept override { return #Type; } \
    }

ZENO_DEFINE_ERROR(DomainError);
ZENO_DEFINE_ERROR(DivergentPeriod);
ZENO_DEFINE_ERROR(StepSizeUnderflow);
ZENO_DEFINE_ERROR(NonFinite);
ZENO_DEFINE_ERROR(GridTooCoarse);
ZENO_DEFINE_ERROR(NonConvergence);

#undef ZENO_DEFINE_ERROR

}  // namespace zeno
