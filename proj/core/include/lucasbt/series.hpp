#ifndef LUCASBT_SERIES_HPP
#define LUCASBT_SERIES_HPP

#include <cstddef>
#include <vector>

#include "lucasbt/quadfield.hpp"
#include "lucasbt/transform.hpp"

namespace lucasbt {

// A formal power series over Q truncated after x^(order-1); coeffs()
// always has exactly `order` entries and order is at least 1.
class PowerSeries {
public:
    // Coefficient list, lowest degree first; must be nonempty.
    explicit PowerSeries(std::vector<Rational> coeffs);

    // Zero series of the given order (order >= 1).
    explicit PowerSeries(std::size_t order);

    std::size_t order() const { return coeffs_.size(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_[i]; }

    friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

private:
    std::vector<Rational> coeffs_;
};

// Cauchy product.  The orders must match; there is no implicit
// re-truncation, a mismatch throws std::invalid_argument.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);

// Multiplicative inverse of f, truncated to f.order().  Requires a
// nonzero constant term; f[0] == 0 throws DegenerateDenominatorError.
PowerSeries series_inverse(const PowerSeries& f);

// First `count` Maclaurin coefficients of
//
//   (2 - (2r+k) x) / (1 - (2r+k) x + (r^2+kr-1) x^2)
//
// the ordinary generating function of the r-fold transform of the
// weight-k Lucas sequence, computed as numerator times reciprocal of
// denominator.  Every returned coefficient has denominator 1; that is
// checked before returning, staying Rational makes the check a real one.
std::vector<Rational> gf_expand(const TransformParams& params, std::size_t count);

} // namespace lucasbt

#endif
