#pragma once

#include <vector>

#include "infhecke/rational.hpp"

namespace infhecke {

/// Univariate exact-rational polynomial in the Casimir multiple Delta.
/// Models z, f_n, g_n, omega_z and friends. No trailing zero coefficients;
/// degree() of the zero polynomial is the sentinel -1.
class DeltaPoly {
  public:
    DeltaPoly() = default;
    explicit DeltaPoly(Rational c) { setCoeff(0, std::move(c)); }

    static DeltaPoly zero() { return DeltaPoly(); }
    static DeltaPoly one() { return DeltaPoly(Rational(1)); }
    static DeltaPoly delta() { return power(1); }
    static DeltaPoly power(unsigned k, Rational c = Rational(1)) {
        DeltaPoly p;
        p.setCoeff(k, std::move(c));
        return p;
    }

    bool isZero() const { return c_.empty(); }
    bool isConstant() const { return c_.size() <= 1; }
    /// -1 stands for the degree of the zero polynomial.
    int degree() const { return int(c_.size()) - 1; }

    Rational coeff(unsigned k) const {
        return k < c_.size() ? c_[k] : Rational(0);
    }
    Rational leadingCoeff() const { return c_.empty() ? Rational(0) : c_.back(); }

    void setCoeff(unsigned k, Rational v) {
        if (k >= c_.size()) {
            if (v == 0) return;
            c_.resize(k + 1, Rational(0));
        }
        c_[k] = std::move(v);
        trim();
    }

    DeltaPoly& operator+=(const DeltaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        trim();
        return *this;
    }
    DeltaPoly& operator-=(const DeltaPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
        for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
        trim();
        return *this;
    }
    DeltaPoly& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
    friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
    friend DeltaPoly operator-(DeltaPoly a) { return a *= Rational(-1); }
    friend DeltaPoly operator*(DeltaPoly a, const Rational& s) { return a *= s; }
    friend DeltaPoly operator*(const Rational& s, DeltaPoly a) { return a *= s; }

    friend DeltaPoly operator*(const DeltaPoly& a, const DeltaPoly& b) {
        DeltaPoly r;
        if (a.isZero() || b.isZero()) return r;
        r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        r.trim();
        return r;
    }

    /// Multiply by Delta^k.
    DeltaPoly shifted(unsigned k) const {
        DeltaPoly r;
        if (isZero()) return r;
        r.c_.assign(c_.size() + k, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

    DeltaPoly pow(unsigned n) const {
        DeltaPoly r = one();
        for (unsigned i = 0; i < n; ++i) r = r * *this;
        return r;
    }

    friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;  // c_[k] = coefficient of Delta^k
};

}  // namespace infhecke
