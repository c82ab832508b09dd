#include "wsflow/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

namespace wsflow {
namespace {

constexpr double kIntTol = 1e-12;

// log|Gamma(x)| together with the sign of Gamma(x); x must not be a pole.
struct LogGamma {
    double log_abs;
    int sign;
};

LogGamma log_gamma_signed(double x) {
    if (x <= 0.0 && is_nonpositive_integer(x)) {
        throw std::domain_error("gamma pole at nonpositive integer");
    }
    const double lg = std::lgamma(x);
    int sign = 1;
    if (x < 0.0) {
        // Gamma alternates sign between consecutive negative integers:
        // negative on (-1,0), positive on (-2,-1), ...
        const double k = std::ceil(-x);
        sign = (static_cast<long long>(k) % 2 == 0) ? 1 : -1;
    }
    return {lg, sign};
}

double terminating_series_at(double a, double b, double c, double x) {
    // one of a,b is a nonpositive integer; sum the finite series exactly
    double neg = a;
    double other = b;
    if (!is_nonpositive_integer(a) || (is_nonpositive_integer(b) && b > a)) {
        neg = b;
        other = a;
    }
    const long long m = static_cast<long long>(std::llround(-neg));
    double term = 1.0;
    double sum = 1.0;
    for (long long k = 0; k < m; ++k) {
        const double kk = static_cast<double>(k);
        term *= (neg + kk) * (other + kk) / ((c + kk) * (kk + 1.0)) * x;
        sum += term;
    }
    return sum;
}

double power_series(double a, double b, double c, double x) {
    const double rel_tol = 1e-15;
    double term = 1.0;
    double sum = 1.0;
    // once k exceeds the parameter magnitudes the term magnitudes decline
    // monotonically
    const double settle = std::max({std::abs(a), std::abs(b), std::abs(c)}) + 2.0;
    // asymptotic term ratio is x (1 - (cab+1)/k), so the tail behind term k is
    // about |term| / ((1-x) + (cab+1)/k); plain term smallness is not enough
    // near x = 1 where the terms decay only algebraically
    const double decay = std::max(c - a - b + 1.0, 0.0);
    const long long max_terms = 50'000'000;
    double carry = 0.0;  // compensated sum; slow algebraic tails add millions of terms
    for (long long k = 0; k < max_terms; ++k) {
        const double kk = static_cast<double>(k);
        term *= (a + kk) * (b + kk) / ((c + kk) * (kk + 1.0)) * x;
        const double y = term - carry;
        const double t = sum + y;
        carry = (t - sum) - y;
        sum = t;
        if (kk > settle && std::abs(term) <= rel_tol * std::abs(sum)) {
            const double tail = 2.0 * std::abs(term) / ((1.0 - x) + decay / (kk + 1.0));
            if (tail <= 1e-14 * std::abs(sum)) return sum;
        }
    }
    throw std::domain_error("2F1: series did not converge");
}

} // namespace

bool is_nonpositive_integer(double x) {
    return x <= kIntTol && std::abs(x - std::round(x)) < kIntTol;
}

double gamma_ratio_gauss(double a, double b, double c) {
    const LogGamma num1 = log_gamma_signed(c);
    const LogGamma num2 = log_gamma_signed(c - a - b);
    const LogGamma den1 = log_gamma_signed(c - a);
    const LogGamma den2 = log_gamma_signed(c - b);
    const double log_val = num1.log_abs + num2.log_abs - den1.log_abs - den2.log_abs;
    const int sign = num1.sign * num2.sign * den1.sign * den2.sign;
    return sign * std::exp(log_val);
}

double hypergeom_2f1_at_1(double a, double b, double c) {
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (terminating) {
        return terminating_series_at(a, b, c, 1.0);
    }
    if (c > a + b && c > 0.0 && !is_nonpositive_integer(c)) {
        return gamma_ratio_gauss(a, b, c);
    }
    throw std::domain_error("2F1 at 1: neither Gauss nor terminating branch applies");
}

double hypergeom_2f1(double a, double b, double c, double x) {
    if (is_nonpositive_integer(c)) {
        throw std::domain_error("2F1: c is a nonpositive integer");
    }
    const bool terminating = is_nonpositive_integer(a) || is_nonpositive_integer(b);
    if (terminating) {
        return terminating_series_at(a, b, c, x);
    }
    if (x == 1.0) return hypergeom_2f1_at_1(a, b, c);
    if (x < 0.0 || x >= 1.0) {
        throw std::domain_error("2F1: series requires x in [0,1] or a terminating branch");
    }
    const double cab = c - a - b;
    if (x > 0.7 && std::abs(cab - std::round(cab)) > 1e-8) {
        // connection formula in 1-x; the direct series is impractically slow
        // near x = 1 when c-a-b is small
        const double coeff_a = gamma_ratio_gauss(a, b, c);
        const LogGamma num1 = log_gamma_signed(c);
        const LogGamma num2 = log_gamma_signed(-cab);
        const LogGamma den1 = log_gamma_signed(a);
        const LogGamma den2 = log_gamma_signed(b);
        const double coeff_b = num1.sign * num2.sign * den1.sign * den2.sign *
                               std::exp(num1.log_abs + num2.log_abs - den1.log_abs - den2.log_abs);
        const double y = 1.0 - x;
        return coeff_a * power_series(a, b, a + b - c + 1.0, y) +
               coeff_b * std::pow(y, cab) * power_series(c - a, c - b, cab + 1.0, y);
    }
    return power_series(a, b, c, x);
}

} // namespace wsflow
