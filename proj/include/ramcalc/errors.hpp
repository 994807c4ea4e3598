#pragma once

#include <stdexcept>
#include <string>

namespace ram {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define RAM_ERROR(name)                      \
    struct name : Error {                    \
        explicit name(const std::string& w)  \
            : Error(#name ": " + w) {}       \
    };

RAM_ERROR(DomainError)
RAM_ERROR(NotHerbrandShaped)
RAM_ERROR(TameConflict)
RAM_ERROR(EmptyTower)
RAM_ERROR(InfiniteWildExponent)
RAM_ERROR(NoAdmissibleM)
RAM_ERROR(UncoveredCase)
RAM_ERROR(ConstraintViolation)
RAM_ERROR(MalformedProfile)
RAM_ERROR(NotIntegralFirstJump)
RAM_ERROR(TooFewJumps)
RAM_ERROR(InconsistentLayer)
RAM_ERROR(NotSingleJump)
RAM_ERROR(ParseError)
RAM_ERROR(ValidationError)
RAM_ERROR(IoError)

#undef RAM_ERROR

// what() without the leading error name.
inline std::string bare_message(const Error& e) {
    std::string s = e.what();
    auto colon = s.find(": ");
    return colon == std::string::npos ? s : s.substr(colon + 2);
}

}  // namespace ram
