#include "sl2lab/scalar.hpp"

namespace sl2lab {

namespace {

// "i", "3*i", "1/2*i" for a nonzero rational b (sign excluded).
std::string imag_magnitude(const Rational& b) {
    Rational a = b.abs();
    if (a.is_one()) return "i";
    return a.str() + "*i";
}

}  // namespace

std::string scalar_str(const GaussianRational& s) {
    if (s.is_zero()) return "0";
    if (s.is_real()) return s.re.str();
    if (s.is_imaginary()) {
        std::string m = imag_magnitude(s.im);
        return s.im.sign() < 0 ? "-" + m : m;
    }
    std::string out = s.re.str();
    out += s.im.sign() < 0 ? "-" : "+";
    out += imag_magnitude(s.im);
    return out;
}

}  // namespace sl2lab
