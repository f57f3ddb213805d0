#include "jetline/gaussian_rational.hpp"

#include <ostream>

namespace jetline {

GaussianRational::GaussianRational(long num, long den) : re_(num, den), im_(0) {
    if (den == 0) throw UsageError("rational with zero denominator");
    re_.canonicalize();
}

mpq_class GaussianRational::norm() const {
    mpq_class n = re_ * re_ + im_ * im_;
    return n;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw SingularityError("inverse of zero");
    mpq_class n = norm();
    return {mpq_class(re_ / n), mpq_class(-im_ / n)};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational base = *this, acc = 1;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

namespace {

mpq_class parse_rational(const std::string& s) {
    if (s.empty()) throw UsageError("empty rational literal");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-' || c == '+'))
            throw UsageError("bad rational literal: " + s);
    }
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw UsageError("bad rational literal: " + s);
    if (q.get_den() == 0) throw UsageError("zero denominator in literal: " + s);
    q.canonicalize();
    return q;
}

std::string rational_str(const mpq_class& q) {
    return q.get_str();
}

}  // namespace

GaussianRational GaussianRational::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw UsageError("empty scalar literal");

    if (s.back() != 'i') return {parse_rational(s)};

    s.pop_back();  // strip 'i'
    // Split at the sign that separates the real part from the imaginary part.
    // That sign is a '+' or '-' which is neither leading nor right after '/'.
    std::size_t split = std::string::npos;
    for (std::size_t p = 1; p < s.size(); ++p) {
        if ((s[p] == '+' || s[p] == '-') && s[p - 1] != '/' && s[p - 1] != '+' && s[p - 1] != '-')
            split = p;  // keep the last candidate: "1/2+3/4" splits before "3/4"
    }
    if (split == std::string::npos) {
        // Pure imaginary literal like "1/2i" or "-i".
        std::string im = s.empty() ? "1" : s;
        if (im == "-" || im == "+") im += "1";
        return {mpq_class(0), parse_rational(im)};
    }
    std::string re = s.substr(0, split);
    std::string im = s.substr(split);
    if (im == "-" || im == "+") im += "1";
    return {parse_rational(re), parse_rational(im)};
}

std::string GaussianRational::str() const {
    if (im_ == 0) return rational_str(re_);
    std::string out = rational_str(re_);
    if (im_ > 0) out += "+";
    out += rational_str(im_) + "i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& v) {
    return os << v.str();
}

}  // namespace jetline
