#include "jetline/poly.hpp"

namespace jetline {

GQ Poly::eval(const GQ& z) const {
    GQ acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<GQ> d(c_.size() - 1);
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = GQ(long(j)) * c_[j];
    return Poly(std::move(d));
}

Poly Poly::shifted(const GQ& z0) const {
    // Horner in (t + z0): repeatedly multiply by (t + z0) and add.
    Poly acc;
    const Poly t_plus_z0(std::vector<GQ>{z0, GQ(1)});
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t_plus_z0 + Poly(*it);
    return acc;
}

Poly Poly::operator-() const {
    std::vector<GQ> d(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) d[j] = -c_[j];
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), GQ(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] -= o.c_[j];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<GQ> d(a.c_.size() + b.c_.size() - 1, GQ(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
}

Poly operator*(const GQ& s, const Poly& p) {
    std::vector<GQ> d(p.c_.size());
    for (std::size_t j = 0; j < p.c_.size(); ++j) d[j] = s * p.c_[j];
    return Poly(std::move(d));
}

void Poly::divmod(const Poly& a, const Poly& b, Poly& q, Poly& r) {
    if (b.is_zero()) throw UsageError("polynomial division by zero");
    std::vector<GQ> rem = a.c_;
    const int db = b.degree();
    const GQ lead_inv = b.leading().inverse();
    std::vector<GQ> quot;
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr >= db) quot.assign(dr - db + 1, GQ(0));
    while (dr >= db) {
        while (dr >= 0 && rem[dr] == GQ(0)) --dr;
        if (dr < db) break;
        GQ f = rem[dr] * lead_inv;
        quot[dr - db] = f;
        for (int j = 0; j <= db; ++j) rem[dr - db + j] -= f * b.c_[j];
        --dr;
    }
    q = Poly(std::move(quot));
    r = Poly(std::move(rem));
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly q, r;
        divmod(a, b, q, r);
        a = std::move(b);
        b = r.monic();  // keep coefficients small
    }
    return a.monic();
}

Poly Poly::monic() const {
    if (is_zero()) return Poly();
    return leading().inverse() * (*this);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int j = degree(); j >= 0; --j) {
        if (coeff(j) == GQ(0)) continue;
        if (!out.empty()) out += " + ";
        out += "(" + coeff(j).str() + ")";
        if (j == 1) out += "*z";
        if (j > 1) out += "*z^" + std::to_string(j);
    }
    return out;
}

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw UsageError("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
        Poly q, r;
        Poly::divmod(num_, g, q, r);
        num_ = q;
        Poly::divmod(den_, g, q, r);
        den_ = q;
    }
    // Make the denominator monic.
    GQ lead = den_.leading();
    if (lead != GQ(1)) {
        GQ inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

GQ RatFun::eval(const GQ& z) const {
    GQ d = den_.eval(z);
    if (d.is_zero()) throw SingularityError("rational function evaluated at a pole");
    return num_.eval(z) / d;
}

RatFun RatFun::derivative() const {
    return RatFun(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun& RatFun::operator+=(const RatFun& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw SingularityError("division by zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    reduce();
    return *this;
}

std::string RatFun::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ") / (" + den_.str() + ")";
}

}  // namespace jetline
