#ifndef COPIC_COST_HPP
#define COPIC_COST_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <vector>

namespace copic {

/**
 * An exact cost value: an arbitrary-precision rational or the sentinel +inf.
 *
 * Finite arithmetic never rounds. The sentinel absorbs addition
 * (`+inf + x = +inf`), compares greater than every finite value and never
 * appears with a negative sign; operations that would produce -inf
 * (negation, subtracting the sentinel, scaling it by a non-positive factor)
 * throw DomainError.
 */
class Cost {
public:
    /// Zero.
    Cost() : value_(0), finite_(true) {}
    Cost(long v) : value_(v), finite_(true) {} // NOLINT: implicit by design
    explicit Cost(const mpq_class& v) : value_(v), finite_(true) { value_.canonicalize(); }

    static Cost infinity();
    static Cost from_fraction(long numerator, long denominator);

    /// Parses "inf", a decimal string ("-3.5", "2") or a fraction ("7/2").
    static Cost parse(const std::string& text);

    bool is_infinite() const { return !finite_; }
    bool is_finite() const { return finite_; }
    bool is_zero() const { return finite_ && value_ == 0; }
    bool is_negative() const { return finite_ && value_ < 0; }
    bool is_positive() const { return !finite_ || value_ > 0; }

    /// The rational value. Throws DomainError on the sentinel.
    const mpq_class& rational() const;

    Cost& operator+=(const Cost& rhs);
    Cost& operator-=(const Cost& rhs);
    Cost& operator*=(const Cost& rhs);
    Cost& operator/=(const Cost& rhs);
    Cost operator-() const;

    friend Cost operator+(Cost lhs, const Cost& rhs) { return lhs += rhs; }
    friend Cost operator-(Cost lhs, const Cost& rhs) { return lhs -= rhs; }
    friend Cost operator*(Cost lhs, const Cost& rhs) { return lhs *= rhs; }
    friend Cost operator/(Cost lhs, const Cost& rhs) { return lhs /= rhs; }

    friend bool operator==(const Cost& lhs, const Cost& rhs);
    friend bool operator<(const Cost& lhs, const Cost& rhs);
    friend bool operator!=(const Cost& lhs, const Cost& rhs) { return !(lhs == rhs); }
    friend bool operator>(const Cost& lhs, const Cost& rhs) { return rhs < lhs; }
    friend bool operator<=(const Cost& lhs, const Cost& rhs) { return !(rhs < lhs); }
    friend bool operator>=(const Cost& lhs, const Cost& rhs) { return !(lhs < rhs); }

    /// "inf", an exact decimal when the denominator is of the form 2^a 5^b,
    /// otherwise "p/q". parse(str()) round-trips exactly.
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Cost& c);

private:
    mpq_class value_;
    bool finite_;
};

using CostVector = std::vector<Cost>;
using CostMatrix = std::vector<std::vector<Cost>>;

Cost min(const Cost& a, const Cost& b);
Cost max(const Cost& a, const Cost& b);
Cost abs(const Cost& a);

/// Sum of w over the indices in s. s must index into w.
Cost sum_over(const CostVector& w, const std::vector<int>& s);

} // namespace copic

#endif // COPIC_COST_HPP
