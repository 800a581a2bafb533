#pragma once

#include "twocubes/forms.hpp"

namespace twocubes {

/// Quotient of two binary forms. Kept fully reduced (gcd(num, den) constant)
/// with the denominator scaled so its first nonzero coefficient is 1; this
/// makes the representation unique, so equality is structural.
class FormFraction {
public:
    /// 0 / 1.
    FormFraction();
    /// value / 1.
    FormFraction(const BinaryForm& value);
    explicit FormFraction(const QOmega& c);
    /// num / den; throws std::domain_error when den is the zero form.
    FormFraction(BinaryForm num, BinaryForm den);

    const BinaryForm& num() const { return num_; }
    const BinaryForm& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// deg(num) - deg(den); throws std::domain_error on zero.
    int ratio_degree() const;

    FormFraction& operator+=(const FormFraction& o);
    FormFraction& operator-=(const FormFraction& o);
    FormFraction& operator*=(const FormFraction& o);
    /// Throws std::domain_error on division by zero.
    FormFraction& operator/=(const FormFraction& o);

    friend FormFraction operator+(FormFraction u, const FormFraction& v) { return u += v; }
    friend FormFraction operator-(FormFraction u, const FormFraction& v) { return u -= v; }
    friend FormFraction operator*(FormFraction u, const FormFraction& v) { return u *= v; }
    friend FormFraction operator/(FormFraction u, const FormFraction& v) { return u /= v; }
    FormFraction operator-() const;

    friend bool operator==(const FormFraction& u, const FormFraction& v) {
        return u.num_ == v.num_ && u.den_ == v.den_;
    }
    friend bool operator!=(const FormFraction& u, const FormFraction& v) { return !(u == v); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    FormFraction inverse() const;

    std::string str() const;

private:
    void reduce();

    BinaryForm num_;
    BinaryForm den_;
};

std::ostream& operator<<(std::ostream& os, const FormFraction& f);

}  // namespace twocubes
