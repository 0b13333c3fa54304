#ifndef HOPMC_ERRORS_HPP
#define HOPMC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hopmc {

// All library errors derive from Error. The category separates caller
// mistakes (bad files, invalid sets, contract violations) from conditions
// detected while computing, so the CLI can map them to distinct exit codes.
class Error : public std::runtime_error {
 public:
  enum class Category { validation, runtime };

  Error(Category cat, const std::string& what)
      : std::runtime_error(what), category_(cat) {}

  Category category() const { return category_; }

 private:
  Category category_;
};

#define HOPMC_DEFINE_ERROR(NAME, CATEGORY)                      \
  class NAME : public Error {                                   \
   public:                                                      \
    explicit NAME(const std::string& what)                      \
        : Error(Error::Category::CATEGORY, what) {}             \
  }

// Malformed input files (graph/regions/families); message carries file:line.
HOPMC_DEFINE_ERROR(ParseError, validation);
// Network/RegionSpec structural violations.
HOPMC_DEFINE_ERROR(InvalidNetwork, validation);
HOPMC_DEFINE_ERROR(InvalidRegionSpec, validation);
// A supplied set fails its bound-respecting validation.
HOPMC_DEFINE_ERROR(InvalidPathset, validation);
HOPMC_DEFINE_ERROR(InvalidCutset, validation);
// Two sets of the same region share an edge where disjointness is required.
HOPMC_DEFINE_ERROR(OverlapWithinRegion, validation);
// A factorized probability was requested on a region family with overlap.
HOPMC_DEFINE_ERROR(FamilyNotDisjoint, validation);
// The union of family edges is too large for the sub-configuration table.
HOPMC_DEFINE_ERROR(OmegaTooLarge, validation);
// Exhaustive enumeration refused (too many edges).
HOPMC_DEFINE_ERROR(TooManyEdges, validation);
// Conditional sampling denominator vanished: the fixed edges already force
// membership in the excluded event set.
HOPMC_DEFINE_ERROR(ZeroConditional, runtime);
// The excluded events cover (numerically) the whole configuration space,
// leaving nothing to sample.
HOPMC_DEFINE_ERROR(DegenerateFamilies, runtime);

#undef HOPMC_DEFINE_ERROR

}  // namespace hopmc

#endif
