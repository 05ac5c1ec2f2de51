#include "lucasbt/series.hpp"

#include <stdexcept>
#include <utility>

#include "lucasbt/errors.hpp"

namespace lucasbt {

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("series order must be at least 1");
}

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order, Rational(0)) {
    if (order == 0)
        throw std::invalid_argument("series order must be at least 1");
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
    if (f.order() != g.order())
        throw std::invalid_argument("series orders must match");
    std::vector<Rational> out(f.order(), Rational(0));
    for (std::size_t i = 0; i < f.order(); ++i) {
        if (f[i] == 0)
            continue;
        for (std::size_t j = 0; i + j < g.order(); ++j)
            out[i + j] += f[i] * g[j];
    }
    return PowerSeries(std::move(out));
}

PowerSeries series_inverse(const PowerSeries& f) {
    if (f[0] == 0)
        throw DegenerateDenominatorError("series with zero constant term has no reciprocal");
    // Forward substitution on f*g == 1: the x^m coefficient of the
    // product must vanish for m >= 1.
    std::vector<Rational> g(f.order(), Rational(0));
    Rational unit_inv = 1 / f[0];
    g[0] = unit_inv;
    for (std::size_t m = 1; m < f.order(); ++m) {
        Rational acc(0);
        for (std::size_t i = 1; i <= m; ++i)
            acc += f[i] * g[m - i];
        g[m] = -unit_inv * acc;
    }
    return PowerSeries(std::move(g));
}

std::vector<Rational> gf_expand(const TransformParams& params, std::size_t count) {
    if (count == 0)
        return {};
    Rational trace(params.trace());
    Rational det(params.det());

    std::vector<Rational> num_coeffs(count, Rational(0));
    num_coeffs[0] = 2;
    if (count > 1)
        num_coeffs[1] = -trace;

    std::vector<Rational> den_coeffs(count, Rational(0));
    den_coeffs[0] = 1;
    if (count > 1)
        den_coeffs[1] = -trace;
    if (count > 2)
        den_coeffs[2] = det;

    PowerSeries expansion = series_mul(PowerSeries(std::move(num_coeffs)),
                                       series_inverse(PowerSeries(std::move(den_coeffs))));
    for (const Rational& c : expansion.coeffs())
        if (c.get_den() != 1)
            throw InternalInconsistencyError("gf_expand: non-integral coefficient");
    return expansion.coeffs();
}

} // namespace lucasbt
