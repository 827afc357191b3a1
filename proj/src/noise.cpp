#include "hgp/noise.hpp"

#include <cmath>
#include <stdexcept>

namespace hgp {

BitVec sample_error(int64_t length, double p, Rng& rng) {
    if (!(p >= 0.0 && p < 1.0)) throw std::invalid_argument("sample_error: need 0 <= p < 1");
    BitVec e(length);
    if (p == 0.0) return e;
    double denom = std::log1p(-p);
    int64_t i = -1;
    while (true) {
        double u = 1.0 - rng.uniform();  // (0, 1]
        double gap = std::floor(std::log(u) / denom);
        if (gap >= static_cast<double>(length)) break;  // avoids int64 overflow on tiny p
        i += 1 + static_cast<int64_t>(gap);
        if (i >= length) break;
        e.set(i, true);
    }
    return e;
}

}  // namespace hgp
