#include "secrecy/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <sstream>
#include <stdexcept>

namespace secrecy {

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           double abs_tol, int max_depth) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    double err = 0.0;
    // boost's tolerance is relative on the interval estimate; request tight and
    // verify the reported absolute error ourselves.
    const double value = GK::integrate(f, a, b, max_depth, 1e-12, &err);
    if (!(err <= abs_tol) && !(err <= 1e-12 * std::abs(value))) {
        std::ostringstream msg;
        msg << "quadrature did not converge: achieved " << err << ", requested " << abs_tol;
        throw std::runtime_error(msg.str());
    }
    return {value, err};
}

QuadratureResult integrate_to_inf(const std::function<double(double)>& f, double a,
                                  double abs_tol, int max_depth) {
    auto g = [&f, a](double t) {
        const double om = 1.0 - t;
        const double x = a + t / om;
        return f(x) / (om * om);
    };
    return integrate(g, 0.0, 1.0, abs_tol, max_depth);
}

}  // namespace secrecy
