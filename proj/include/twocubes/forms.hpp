#pragma once

#include "twocubes/eisenstein.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace twocubes {

/// Homogeneous polynomial in x and y over Q(w), stored densely: coeff(i)
/// multiplies x^(degree-i) * y^i. The zero form is the unique form with an
/// empty coefficient vector; it carries no degree.
class BinaryForm {
public:
    /// The zero form.
    BinaryForm() = default;

    /// A form of the given degree; coeffs.size() must be degree + 1 (throws
    /// std::invalid_argument otherwise). An all-zero vector collapses to the
    /// zero form.
    BinaryForm(int degree, std::vector<QOmega> coeffs);

    static BinaryForm zero() { return BinaryForm(); }
    static BinaryForm constant(const QOmega& c);
    /// c * x^xexp * y^yexp.
    static BinaryForm monomial(const QOmega& c, int xexp, int yexp);
    static BinaryForm var_x() { return monomial(QOmega(1), 1, 0); }
    static BinaryForm var_y() { return monomial(QOmega(1), 0, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// True for the zero form and for degree-0 forms.
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Throws std::domain_error on the zero form.
    int degree() const;

    /// Coefficient of x^(degree-i) * y^i; 0 <= i <= degree.
    const QOmega& coeff(int i) const;
    /// Coefficient of x^xexp * y^yexp; zero when the exponents do not sum to
    /// the degree.
    QOmega coeff_xy(int xexp, int yexp) const;
    const std::vector<QOmega>& coeffs() const { return coeffs_; }

    /// Index of the first nonzero coefficient (throws on the zero form).
    int first_nonzero_index() const;
    /// The first nonzero coefficient (throws on the zero form).
    const QOmega& leading_coeff() const { return coeff(first_nonzero_index()); }

    BinaryForm& operator+=(const BinaryForm& o);
    BinaryForm& operator-=(const BinaryForm& o);

    friend BinaryForm operator+(BinaryForm u, const BinaryForm& v) { return u += v; }
    friend BinaryForm operator-(BinaryForm u, const BinaryForm& v) { return u -= v; }
    friend BinaryForm operator*(const BinaryForm& u, const BinaryForm& v);
    friend BinaryForm operator*(const QOmega& c, const BinaryForm& f);
    BinaryForm operator-() const;

    friend bool operator==(const BinaryForm& u, const BinaryForm& v) {
        return u.coeffs_ == v.coeffs_;
    }
    friend bool operator!=(const BinaryForm& u, const BinaryForm& v) { return !(u == v); }

    /// Textual form: `+`-joined terms `(c)*x^a*y^b`, descending x-powers,
    /// exponent-1 hats and exponent-0 factors omitted; the zero form is `0`.
    /// Round-trips bit-exactly through parse().
    std::string str() const;

    /// Parses the textual form (liberal in signs and omitted `(...)` around
    /// single-component coefficients). Throws std::invalid_argument on
    /// garbage or inhomogeneous input.
    static BinaryForm parse(const std::string& text);

private:
    void collapse_if_zero();

    // Empty for the zero form; otherwise degree + 1 entries.
    std::vector<QOmega> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const BinaryForm& f);

/// f(u, v) for forms u, v of equal degree (throws std::invalid_argument on a
/// degree mismatch; u, v of degree e turn degree-d f into a degree-d*e form).
BinaryForm substitute(const BinaryForm& f, const BinaryForm& u, const BinaryForm& v);

/// f(x0, y0).
QOmega evaluate(const BinaryForm& f, const QOmega& x0, const QOmega& y0);

/// f(y, x).
BinaryForm swap_vars(const BinaryForm& f);

/// d/dx and d/dy (the zero form for constants).
BinaryForm derivative_x(const BinaryForm& f);
BinaryForm derivative_y(const BinaryForm& f);

/// Monic-style normalization: scales f so its first nonzero coefficient is 1.
/// Returns the scaled form and the scale that was divided out. Throws
/// std::domain_error on the zero form.
struct ScaledForm {
    BinaryForm form;
    QOmega scale;
};
ScaledForm normalize_scale(const BinaryForm& f);

/// Greatest common divisor, normalized so its first nonzero coefficient is 1.
/// gcd(f, 0) is the normalization of f; gcd(0, 0) throws std::domain_error.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);

/// f / g when g divides f exactly; throws std::domain_error otherwise (and on
/// g = 0).
BinaryForm divide_exact(const BinaryForm& f, const BinaryForm& g);

/// True iff g | f (g = 0 divides only f = 0).
bool form_divides(const BinaryForm& g, const BinaryForm& f);

/// Residue class mod 3 of the exponents of one variable across the nonzero
/// terms of a form: a fixed class, or Mixed when several classes occur.
enum class ExponentClass { Zero, One, Two, Mixed };

struct ShapeMod3 {
    ExponentClass x;
    ExponentClass y;
};

/// Shape report for a nonzero form (throws std::domain_error on the zero
/// form).
ShapeMod3 shape_mod3(const BinaryForm& f);

std::string to_string(ExponentClass c);

}  // namespace twocubes
