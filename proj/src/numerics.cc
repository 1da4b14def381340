#include "trilam/numerics.hh"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace trilam {

GoldenResult golden_max(const std::function<double(double)> &f, double a, double b, double xtol) {
    const double R = 0.6180339887498949, C = 1.0 - R;
    double x0 = a, x3 = b;
    double x1 = x0 + C * (x3 - x0);
    double x2 = x3 - C * (x3 - x0);
    double f1 = f(x1), f2 = f(x2);
    while (std::fabs(x3 - x0) > xtol) {
        if (f1 > f2) {
            x3 = x2; x2 = x1; f2 = f1;
            x1 = R * x2 + C * x0;
            f1 = f(x1);
        } else {
            x0 = x1; x1 = x2; f1 = f2;
            x2 = R * x1 + C * x3;
            f2 = f(x2);
        }
    }
    // include the endpoints in the final comparison: clamped maxima sit there
    double xa = a, fa = f(a);
    double xb = b, fb = f(b);
    GoldenResult best{x1, f1};
    if (f2 > best.f) best = {x2, f2};
    if (fa > best.f) best = {xa, fa};
    if (fb > best.f) best = {xb, fb};
    return best;
}

double bisect_root(const std::function<double(double)> &f, double a, double b, double xtol) {
    double fa = f(a), fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw std::runtime_error("bisect_root: interval endpoints do not bracket a root");
    for (int it = 0; it < 200 && std::fabs(b - a) > xtol; ++it) {
        double m = 0.5 * (a + b);
        double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m; fa = fm;
        } else {
            b = m; fb = fm;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace trilam
