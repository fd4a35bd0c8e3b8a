#pragma once

#include <stdexcept>
#include <string>

namespace lgdrate {

// Base of all library errors. Two families map onto the CLI exit codes:
// DataError -> 3 (bad inputs), NumericalError -> 4 (computation failed).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DataError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

// Ingest / input validation
class SchemaError : public DataError {
public:
    using DataError::DataError;
};
class IntegrityError : public DataError {
public:
    using DataError::DataError;
};
class ValueError : public DataError {
public:
    using DataError::DataError;
};
class BalanceNotPositive : public DataError {
public:
    using DataError::DataError;
};
class EvaluationTimeOutOfRange : public DataError {
public:
    using DataError::DataError;
};
class NoCurveData : public DataError {
public:
    using DataError::DataError;
};
class UnknownGrade : public DataError {
public:
    using DataError::DataError;
};
class EmptySample : public DataError {
public:
    using DataError::DataError;
};
class SpecInfeasible : public DataError {
public:
    using DataError::DataError;
};

// Numerics
class DegenerateSeries : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class DegenerateDenominator : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class InfeasibleMoments : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class DegenerateMean : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class NumericalDomain : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class EmptyRecoveries : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class McpNonPositive : public NumericalError {
public:
    using NumericalError::NumericalError;
};
class NoRootInBracket : public NumericalError {
public:
    using NumericalError::NumericalError;
};

} // namespace lgdrate
