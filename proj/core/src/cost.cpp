#include "copic/cost.hpp"

#include <cctype>
#include <ostream>

#include "copic/errors.hpp"

namespace copic {

Cost Cost::infinity() {
    Cost c;
    c.finite_ = false;
    return c;
}

Cost Cost::from_fraction(long numerator, long denominator) {
    if (denominator == 0) throw DomainError("zero denominator");
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return Cost(q);
}

const mpq_class& Cost::rational() const {
    if (!finite_) throw DomainError("rational() on infinite cost");
    return value_;
}

Cost Cost::parse(const std::string& text) {
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) throw DomainError("empty cost string");
    if (s == "inf" || s == "+inf") return infinity();
    if (s == "-inf") throw DomainError("negative infinity is not a valid cost");

    if (s.find('/') != std::string::npos) {
        try {
            mpq_class q(s, 10);
            if (q.get_den() == 0) throw DomainError("zero denominator in '" + text + "'");
            q.canonicalize();
            return Cost(q);
        } catch (const std::invalid_argument&) {
            throw DomainError("invalid cost string '" + text + "'");
        }
    }

    // Decimal: [+-]digits[.digits]
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string int_part, frac_part;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) int_part.push_back(s[pos++]);
    if (pos < s.size() && s[pos] == '.') {
        ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) frac_part.push_back(s[pos++]);
    }
    if (pos != s.size() || (int_part.empty() && frac_part.empty()))
        throw DomainError("invalid cost string '" + text + "'");

    mpz_class numerator(int_part.empty() ? std::string("0") : int_part, 10);
    mpz_class denominator(1);
    for (char digit : frac_part) {
        numerator = numerator * 10 + (digit - '0');
        denominator *= 10;
    }
    if (negative) numerator = -numerator;
    mpq_class q(numerator, denominator);
    q.canonicalize();
    return Cost(q);
}

Cost& Cost::operator+=(const Cost& rhs) {
    if (!finite_ || !rhs.finite_) {
        finite_ = false;
        value_ = 0;
        return *this;
    }
    value_ += rhs.value_;
    return *this;
}

Cost& Cost::operator-=(const Cost& rhs) {
    if (rhs.is_infinite()) throw DomainError("cannot subtract infinity");
    if (!finite_) return *this;
    value_ -= rhs.value_;
    return *this;
}

Cost& Cost::operator*=(const Cost& rhs) {
    if (!finite_ || !rhs.finite_) {
        if (!finite_ && !rhs.finite_) return *this; // inf * inf = inf
        // Only a strictly positive finite factor may scale the sentinel.
        const Cost& factor = finite_ ? *this : rhs;
        if (factor.value_ <= 0)
            throw DomainError("infinity scaled by a non-positive factor");
        finite_ = false;
        value_ = 0;
        return *this;
    }
    value_ *= rhs.value_;
    return *this;
}

Cost& Cost::operator/=(const Cost& rhs) {
    if (!finite_ || !rhs.finite_) throw DomainError("division involving infinity");
    if (rhs.value_ == 0) throw DomainError("division by zero");
    value_ /= rhs.value_;
    return *this;
}

Cost Cost::operator-() const {
    if (!finite_) throw DomainError("cannot negate infinity");
    return Cost(mpq_class(-value_));
}

bool operator==(const Cost& lhs, const Cost& rhs) {
    if (lhs.finite_ != rhs.finite_) return false;
    if (!lhs.finite_) return true;
    return lhs.value_ == rhs.value_;
}

bool operator<(const Cost& lhs, const Cost& rhs) {
    if (!lhs.finite_) return false;
    if (!rhs.finite_) return true;
    return lhs.value_ < rhs.value_;
}

std::string Cost::str() const {
    if (!finite_) return "inf";
    mpz_class num = value_.get_num();
    mpz_class den = value_.get_den();
    if (den == 1) return num.get_str();

    // den = 2^a 5^b admits an exact decimal expansion of width max(a, b).
    mpz_class d = den;
    unsigned twos = 0, fives = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++twos;
    }
    while (d % 5 == 0) {
        d /= 5;
        ++fives;
    }
    if (d != 1) return num.get_str() + "/" + den.get_str();

    unsigned digits = std::max(twos, fives);
    mpz_class scale = 1;
    for (unsigned i = 0; i < digits; ++i) scale *= 10;
    mpz_class scaled = num * scale / den; // exact by construction
    bool negative = scaled < 0;
    std::string body = (negative ? mpz_class(-scaled) : scaled).get_str();
    if (body.size() <= digits) body.insert(0, digits + 1 - body.size(), '0');
    body.insert(body.size() - digits, ".");
    return (negative ? "-" : "") + body;
}

std::ostream& operator<<(std::ostream& os, const Cost& c) { return os << c.str(); }

Cost min(const Cost& a, const Cost& b) { return b < a ? b : a; }
Cost max(const Cost& a, const Cost& b) { return a < b ? b : a; }

Cost abs(const Cost& a) { return a.is_negative() ? -a : a; }

Cost sum_over(const CostVector& w, const std::vector<int>& s) {
    Cost total;
    for (int i : s) {
        if (i < 0 || static_cast<std::size_t>(i) >= w.size())
            throw DomainError("index out of range in sum_over");
        total += w[static_cast<std::size_t>(i)];
    }
    return total;
}

} // namespace copic
