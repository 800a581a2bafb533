#include "twocubes/fraction.hpp"

#include <ostream>
#include <stdexcept>
#include <utility>

namespace twocubes {

FormFraction::FormFraction() : num_(), den_(BinaryForm::constant(QOmega(1))) {}

FormFraction::FormFraction(const BinaryForm& value)
    : num_(value), den_(BinaryForm::constant(QOmega(1))) {}

FormFraction::FormFraction(const QOmega& c)
    : num_(c.is_zero() ? BinaryForm() : BinaryForm::constant(c)),
      den_(BinaryForm::constant(QOmega(1))) {}

FormFraction::FormFraction(BinaryForm num, BinaryForm den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("FormFraction: zero denominator");
    reduce();
}

void FormFraction::reduce() {
    if (num_.is_zero()) {
        den_ = BinaryForm::constant(QOmega(1));
        return;
    }
    BinaryForm g = form_gcd(num_, den_);
    if (!g.is_constant()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    ScaledForm nd = normalize_scale(den_);
    den_ = nd.form;
    num_ = nd.scale.inverse() * num_;
}

int FormFraction::ratio_degree() const {
    if (is_zero()) throw std::domain_error("FormFraction: zero has no ratio degree");
    return num_.degree() - den_.degree();
}

FormFraction& FormFraction::operator+=(const FormFraction& o) {
    BinaryForm n = num_ * o.den_ + o.num_ * den_;
    BinaryForm d = den_ * o.den_;
    *this = FormFraction(std::move(n), std::move(d));
    return *this;
}

FormFraction& FormFraction::operator-=(const FormFraction& o) { return *this += -o; }

FormFraction& FormFraction::operator*=(const FormFraction& o) {
    *this = FormFraction(num_ * o.num_, den_ * o.den_);
    return *this;
}

FormFraction& FormFraction::operator/=(const FormFraction& o) { return *this *= o.inverse(); }

FormFraction FormFraction::operator-() const {
    FormFraction out = *this;
    out.num_ = -out.num_;
    return out;
}

FormFraction FormFraction::inverse() const {
    if (is_zero()) throw std::domain_error("FormFraction: inverse of zero");
    return FormFraction(den_, num_);
}

std::string FormFraction::str() const {
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const FormFraction& f) { return os << f.str(); }

}  // namespace twocubes
