#pragma once

#include <stdexcept>
#include <string>

namespace rivetkey {

// Error taxonomy. DataError covers malformed inputs (schemas, mismatched
// ids, contract violations in files); RuntimeError covers failures that
// arise while producing outputs. The CLI maps these to exit codes 2 and 3.

class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

class RuntimeFailure : public std::runtime_error {
public:
    explicit RuntimeFailure(const std::string& msg) : std::runtime_error(msg) {}
};

#define RIVETKEY_DEFINE_ERROR(Name, Base)                       \
    class Name : public Base {                                  \
    public:                                                     \
        explicit Name(const std::string& msg)                   \
            : Base(std::string(#Name) + ": " + msg) {}          \
    }

RIVETKEY_DEFINE_ERROR(SchemaError, DataError);
RIVETKEY_DEFINE_ERROR(InsufficientGroups, DataError);
RIVETKEY_DEFINE_ERROR(LengthMismatch, DataError);
RIVETKEY_DEFINE_ERROR(NonpositiveScale, DataError);
RIVETKEY_DEFINE_ERROR(UnknownId, DataError);
RIVETKEY_DEFINE_ERROR(MissingHeadRadius, DataError);
RIVETKEY_DEFINE_ERROR(ConfigError, DataError);
RIVETKEY_DEFINE_ERROR(CheckpointMismatch, DataError);
RIVETKEY_DEFINE_ERROR(InvertedPair, DataError);
RIVETKEY_DEFINE_ERROR(KeypointOutsideRoi, DataError);
RIVETKEY_DEFINE_ERROR(KeypointOutOfBounds, DataError);
RIVETKEY_DEFINE_ERROR(ShapeError, DataError);
RIVETKEY_DEFINE_ERROR(EmptyDataset, DataError);

RIVETKEY_DEFINE_ERROR(GeometryOverflow, RuntimeFailure);
RIVETKEY_DEFINE_ERROR(KeypointEjected, RuntimeFailure);
RIVETKEY_DEFINE_ERROR(IoError, RuntimeFailure);

#undef RIVETKEY_DEFINE_ERROR

}  // namespace rivetkey
