#ifndef DATAFAIR_ERRORS_HPP
#define DATAFAIR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace datafair {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// core
struct InvalidDataset : Error { using Error::Error; };
struct DegenerateSplit : Error { using Error::Error; };
struct InsufficientData : Error { using Error::Error; };

// learners
struct SingleClassLabels : Error { using Error::Error; };
struct NonFiniteFeature : Error { using Error::Error; };
struct HoldoutTooSmall : Error { using Error::Error; };

// estimators
struct EmptyGroup : Error { using Error::Error; };
struct EmptyPositiveGroup : Error { using Error::Error; };
struct NonBinaryLabels : Error { using Error::Error; };
struct KTooLarge : Error { using Error::Error; };

// sim
struct UnknownSpec : Error { using Error::Error; };
struct InvalidDistribution : Error { using Error::Error; };

// cli / ingestion
struct SchemaMismatch : Error { using Error::Error; };
struct NonBinaryAfterMapping : Error { using Error::Error; };
struct EmptyAfterCleaning : Error { using Error::Error; };

}  // namespace datafair

#endif
