#ifndef DATAFAIR_SPLIT_HPP
#define DATAFAIR_SPLIT_HPP

#include <cstdint>

#include "datafair/types.hpp"

namespace datafair {

// Uniformly random partition without replacement; train gets floor(ratio*n)
// rows. Both parts must contain both group values (and both outcome values
// when stratify_outcome is set), else DegenerateSplit.
SplitPair split_sample(const Dataset& data, double ratio, std::uint64_t seed,
                       bool stratify_outcome = false);

}  // namespace datafair

#endif
