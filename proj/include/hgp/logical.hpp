#pragma once

#include "hgp/css.hpp"
#include "hgp/gf2.hpp"

namespace hgp {

// Which stabilizer sector measures the simulated errors. Sector X means
// Z-type errors checked by h_x, harmless exactly when they lie in the row
// space of h_z (and symmetrically for sector Z).
enum class Sector { x, z };

// Row-space membership tester for one generator matrix. The echelon basis
// is built once and shared read-only across workers; a query reduces the
// residual against it, which is the rank comparison rank([M; r]) > rank(M)
// done incrementally.
class LogicalOracle {
public:
    explicit LogicalOracle(const Gf2Matrix& generators);
    LogicalOracle(const CssCode& css, Sector sector);  // sector x -> row space of h_z

    // True iff residual is NOT a product of the generators.
    bool is_logical(const BitVec& residual) const { return !space_.contains(residual); }

    int64_t rank() const { return space_.rank(); }

private:
    Gf2Echelon space_;
};

// Checks the syndrome precondition before classifying. Throws
// std::invalid_argument when the residual has a nonzero syndrome in the
// given sector (the caller must report such trials as detected failures).
bool is_logical_failure(const CssCode& css, const BitVec& residual, Sector sector);

}  // namespace hgp
