#pragma once

#include <stdexcept>
#include <string>

namespace flagtri {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define FLAGTRI_ERROR(Name)                       \
    struct Name : Error {                         \
        using Error::Error;                       \
    }

FLAGTRI_ERROR(NotAClique);
FLAGTRI_ERROR(TooFewVertices);
FLAGTRI_ERROR(NotPure);
FLAGTRI_ERROR(BadLength);
FLAGTRI_ERROR(NotPalindromic);
FLAGTRI_ERROR(OutOfClass);
FLAGTRI_ERROR(BadPartition);
FLAGTRI_ERROR(BadInput);
FLAGTRI_ERROR(BadFormat);
FLAGTRI_ERROR(BadCliqueFunction);
FLAGTRI_ERROR(KPlusOneClique);
FLAGTRI_ERROR(TooLargeForExact);
FLAGTRI_ERROR(NotExtremal);
FLAGTRI_ERROR(NonImprovingMove);
FLAGTRI_ERROR(BadReplacement);

#undef FLAGTRI_ERROR

}  // namespace flagtri
