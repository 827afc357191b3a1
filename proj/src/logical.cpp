#include "hgp/logical.hpp"

#include <stdexcept>

namespace hgp {

namespace {

Gf2Echelon build_space(const Gf2Matrix& generators) {
    Gf2Echelon ech(generators.cols);
    for (int64_t r = 0; r < generators.rows; ++r) ech.insert_row(generators, r);
    return ech;
}

}  // namespace

LogicalOracle::LogicalOracle(const Gf2Matrix& generators) : space_(build_space(generators)) {}

LogicalOracle::LogicalOracle(const CssCode& css, Sector sector)
    : space_(build_space(sector == Sector::x ? css.h_z : css.h_x)) {}

bool is_logical_failure(const CssCode& css, const BitVec& residual, Sector sector) {
    const Gf2Matrix& checks = sector == Sector::x ? css.h_x : css.h_z;
    if (syndrome_of(checks, residual).any())
        throw std::invalid_argument("is_logical_failure: residual has nonzero syndrome");
    LogicalOracle oracle(css, sector);
    return oracle.is_logical(residual);
}

}  // namespace hgp
