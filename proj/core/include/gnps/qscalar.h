// Copyright 2026 The gnps Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GNPS_QSCALAR_H
#define GNPS_QSCALAR_H

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

#include <gmpxx.h>

namespace gnps {

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An exact element a + b*sqrt(2) of the real field Q(sqrt2).
///
/// Both components are GMP rationals kept in canonical form (lowest terms,
/// positive denominator), so equality is structural.
class QScalar {
   public:
    QScalar() = default;
    QScalar(long a) : a_(a) {}
    QScalar(mpq_class a, mpq_class b = 0);

    /// a/b as an exact rational; throws ArithmeticError when den == 0.
    static QScalar ratio(long num, long den);
    static QScalar sqrt2() { return QScalar(0, 1); }
    /// 1/sqrt(2) = sqrt(2)/2.
    static QScalar inv_sqrt2() { return QScalar(0, mpq_class(1, 2)); }

    const mpq_class &rational_part() const { return a_; }
    const mpq_class &sqrt2_part() const { return b_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }
    /// Exact sign of a + b*sqrt2: -1, 0 or +1.
    int sign() const;

    QScalar inv() const;
    QScalar conjugate_sqrt2() const { return QScalar(a_, -b_); }
    double to_double() const;

    QScalar &operator+=(const QScalar &o);
    QScalar &operator-=(const QScalar &o);
    QScalar &operator*=(const QScalar &o);
    QScalar &operator/=(const QScalar &o) { return *this *= o.inv(); }

    friend QScalar operator+(QScalar x, const QScalar &y) { return x += y; }
    friend QScalar operator-(QScalar x, const QScalar &y) { return x -= y; }
    friend QScalar operator*(QScalar x, const QScalar &y) { return x *= y; }
    friend QScalar operator/(QScalar x, const QScalar &y) { return x /= y; }
    QScalar operator-() const { return QScalar(-a_, -b_); }

    friend bool operator==(const QScalar &x, const QScalar &y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const QScalar &x, const QScalar &y) { return !(x == y); }
    friend bool operator<(const QScalar &x, const QScalar &y) { return (x - y).sign() < 0; }
    friend bool operator>(const QScalar &x, const QScalar &y) { return y < x; }
    friend bool operator<=(const QScalar &x, const QScalar &y) { return !(y < x); }
    friend bool operator>=(const QScalar &x, const QScalar &y) { return !(x < y); }

    /// Canonical text: "p/q+r/s*sqrt2" with zero parts omitted, "0" for zero.
    std::string str() const;
    /// Accepts the canonical grammar plus "sqrt2" as shorthand for "1*sqrt2".
    static QScalar parse(std::string_view text);

   private:
    mpq_class a_{0};
    mpq_class b_{0};
};

std::ostream &operator<<(std::ostream &out, const QScalar &x);

/// Nonnegative square root when it lies in Q(sqrt2), otherwise nullopt.
std::optional<QScalar> sqrt_exact(const QScalar &x);

/// Complex number with both parts in Q(sqrt2).
class CScalar {
   public:
    CScalar() = default;
    CScalar(long re) : re_(re) {}
    CScalar(QScalar re, QScalar im = QScalar()) : re_(std::move(re)), im_(std::move(im)) {}

    static CScalar i() { return CScalar(QScalar(), QScalar(1)); }

    const QScalar &re() const { return re_; }
    const QScalar &im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }
    CScalar conj() const { return CScalar(re_, -im_); }
    /// |z|^2 = re^2 + im^2.
    QScalar norm2() const { return re_ * re_ + im_ * im_; }
    CScalar inv() const;
    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    CScalar &operator+=(const CScalar &o);
    CScalar &operator-=(const CScalar &o);
    CScalar &operator*=(const CScalar &o);
    CScalar &operator/=(const CScalar &o) { return *this *= o.inv(); }

    friend CScalar operator+(CScalar x, const CScalar &y) { return x += y; }
    friend CScalar operator-(CScalar x, const CScalar &y) { return x -= y; }
    friend CScalar operator*(CScalar x, const CScalar &y) { return x *= y; }
    friend CScalar operator/(CScalar x, const CScalar &y) { return x /= y; }
    CScalar operator-() const { return CScalar(-re_, -im_); }

    friend bool operator==(const CScalar &x, const CScalar &y) { return x.re_ == y.re_ && x.im_ == y.im_; }
    friend bool operator!=(const CScalar &x, const CScalar &y) { return !(x == y); }

    std::string str() const;

   private:
    QScalar re_;
    QScalar im_;
};

std::ostream &operator<<(std::ostream &out, const CScalar &x);

/// Floating-point amplitude used only for inputs outside Q(sqrt2).
using FScalar = std::complex<double>;

/// Global tolerance for the floating-point path (default 1e-9).
double float_tolerance();
void set_float_tolerance(double tol);

// Uniform scalar interface used by the templated kernels. Exact overloads
// ignore the tolerance; floating overloads compare against float_tolerance().

inline bool is_zero(const QScalar &x) { return x.is_zero(); }
inline bool is_zero(const CScalar &x) { return x.is_zero(); }
bool is_zero(double x);
bool is_zero(const FScalar &x);

inline QScalar conj(const QScalar &x) { return x; }
inline CScalar conj(const CScalar &x) { return x.conj(); }
inline double conj(double x) { return x; }
inline FScalar conj(const FScalar &x) { return std::conj(x); }

inline QScalar norm2(const CScalar &x) { return x.norm2(); }
inline double norm2(const FScalar &x) { return std::norm(x); }

inline QScalar real_part(const CScalar &x) { return x.re(); }
inline QScalar imag_part(const CScalar &x) { return x.im(); }
inline double real_part(const FScalar &x) { return x.real(); }
inline double imag_part(const FScalar &x) { return x.imag(); }

inline double to_double(const QScalar &x) { return x.to_double(); }
inline double to_double(double x) { return x; }
inline FScalar to_float(const CScalar &x) { return x.to_complex(); }
inline FScalar to_float(const FScalar &x) { return x; }

/// Real field paired with each amplitude type.
template <class S>
struct RealOf;
template <>
struct RealOf<CScalar> {
    using type = QScalar;
};
template <>
struct RealOf<FScalar> {
    using type = double;
};
template <class S>
using real_of_t = typename RealOf<S>::type;

template <class S>
inline constexpr bool is_exact_v = std::is_same_v<S, CScalar>;

}  // namespace gnps

#endif
