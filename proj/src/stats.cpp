#include "hgp/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace hgp {

double probit(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("probit: need 0 < q < 1");

    // Acklam's piecewise rational approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double q_low = 0.02425;

    if (q < q_low) {
        double r = std::sqrt(-2.0 * std::log(q));
        return (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    if (q > 1.0 - q_low) {
        double r = std::sqrt(-2.0 * std::log(1.0 - q));
        return -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
               ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    double r = q - 0.5;
    double s = r * r;
    return (((((a[0] * s + a[1]) * s + a[2]) * s + a[3]) * s + a[4]) * s + a[5]) * r /
           (((((b[0] * s + b[1]) * s + b[2]) * s + b[3]) * s + b[4]) * s + 1.0);
}

WilsonInterval wilson_interval(int64_t failures, int64_t trials, double level) {
    if (trials < 1 || failures < 0 || failures > trials)
        throw std::invalid_argument("wilson_interval: need 0 <= failures <= trials, trials >= 1");
    if (!(level > 0.0 && level < 1.0))
        throw std::invalid_argument("wilson_interval: need 0 < level < 1");

    double z = probit(0.5 + level / 2.0);
    double n = static_cast<double>(trials);
    double ph = static_cast<double>(failures) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (ph + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(ph * (1.0 - ph) / n + z2 / (4.0 * n * n)) / denom;
    double low = center - half;
    double high = center + half;
    if (failures == 0) low = 0.0;
    if (failures == trials) high = 1.0;
    if (low < 0.0) low = 0.0;
    if (high > 1.0) high = 1.0;
    return {low, high};
}

double two_proportion_z(int64_t f1, int64_t n1, int64_t f2, int64_t n2) {
    if (n1 < 1 || n2 < 1) throw std::invalid_argument("two_proportion_z: empty sample");
    double p1 = static_cast<double>(f1) / static_cast<double>(n1);
    double p2 = static_cast<double>(f2) / static_cast<double>(n2);
    double pool = static_cast<double>(f1 + f2) / static_cast<double>(n1 + n2);
    double var = pool * (1.0 - pool) * (1.0 / n1 + 1.0 / n2);
    if (var <= 0.0) return 0.0;
    return (p1 - p2) / std::sqrt(var);
}

}  // namespace hgp
