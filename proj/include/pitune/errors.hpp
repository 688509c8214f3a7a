#ifndef PITUNE_ERRORS_HPP
#define PITUNE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pitune {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ingestion
class MissingColumnError : public Error { public: using Error::Error; };
class NonNumericError : public Error { public: using Error::Error; };
class MissingValueError : public Error { public: using Error::Error; };
class EmptyDatasetError : public Error { public: using Error::Error; };

// Splits
class DegenerateSplitError : public Error { public: using Error::Error; };
class EmptyOutOfBagError : public Error { public: using Error::Error; };
class BadFoldCountError : public Error { public: using Error::Error; };
class TooFewRowsError : public Error { public: using Error::Error; };

// Forest / intervals
class DimensionMismatchError : public Error { public: using Error::Error; };
class EmptyValuesError : public Error { public: using Error::Error; };
class ImpureLeafError : public Error { public: using Error::Error; };

// Statistics
class ShapeError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };

} // namespace pitune

#endif
