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

#include "gnps/qscalar.h"

#include <atomic>
#include <cctype>
#include <cmath>
#include <ostream>

namespace gnps {

namespace {

std::atomic<double> g_float_tolerance{1e-9};

mpq_class parse_rational(std::string_view text, std::string_view whole) {
    std::string s(text);
    if (!s.empty() && s[0] == '+') {
        s.erase(0, 1);
    }
    size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (start == s.size()) {
        throw ParseError("malformed scalar '" + std::string(whole) + "'");
    }
    size_t slash = std::string::npos;
    for (size_t k = start; k < s.size(); k++) {
        char c = s[k];
        if (c == '/') {
            if (slash != std::string::npos || k == start || k + 1 == s.size()) {
                throw ParseError("malformed scalar '" + std::string(whole) + "'");
            }
            slash = k;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw ParseError("malformed scalar '" + std::string(whole) + "'");
        }
    }
    if (slash != std::string::npos) {
        mpz_class den(s.substr(slash + 1));
        if (den == 0) {
            throw ParseError("zero denominator in '" + std::string(whole) + "'");
        }
    }
    mpq_class q(s, 10);
    q.canonicalize();
    return q;
}

}  // namespace

double float_tolerance() {
    return g_float_tolerance.load(std::memory_order_relaxed);
}

void set_float_tolerance(double tol) {
    if (!(tol > 0)) {
        throw std::invalid_argument("float tolerance must be positive");
    }
    g_float_tolerance.store(tol, std::memory_order_relaxed);
}

bool is_zero(double x) {
    return std::abs(x) <= float_tolerance();
}

bool is_zero(const FScalar &x) {
    return std::abs(x) <= float_tolerance();
}

QScalar::QScalar(mpq_class a, mpq_class b) : a_(std::move(a)), b_(std::move(b)) {
    a_.canonicalize();
    b_.canonicalize();
}

QScalar QScalar::ratio(long num, long den) {
    if (den == 0) {
        throw ArithmeticError("division by zero");
    }
    mpq_class q(num, den);
    q.canonicalize();
    return QScalar(q);
}

int QScalar::sign() const {
    int sa = sgn(a_);
    int sb = sgn(b_);
    if (sb == 0) {
        return sa;
    }
    if (sa == 0 || sa == sb) {
        return sb;
    }
    // Opposite signs: the larger of a^2 and 2 b^2 wins; they are never equal.
    mpq_class a2 = a_ * a_;
    mpq_class b2 = 2 * b_ * b_;
    return a2 > b2 ? sa : sb;
}

QScalar QScalar::inv() const {
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    mpq_class den = a_ * a_ - 2 * b_ * b_;
    return QScalar(mpq_class(a_ / den), mpq_class(-b_ / den));
}

double QScalar::to_double() const {
    return a_.get_d() + b_.get_d() * std::sqrt(2.0);
}

QScalar &QScalar::operator+=(const QScalar &o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

QScalar &QScalar::operator-=(const QScalar &o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

QScalar &QScalar::operator*=(const QScalar &o) {
    if (is_zero() || o.is_zero()) {
        a_ = 0;
        b_ = 0;
        return *this;
    }
    if (sgn(o.b_) == 0) {
        if (o.a_ != 1) {
            a_ *= o.a_;
            b_ *= o.a_;
        }
        return *this;
    }
    if (sgn(b_) == 0) {
        b_ = a_ * o.b_;
        a_ *= o.a_;
        return *this;
    }
    mpq_class a = a_ * o.a_ + 2 * b_ * o.b_;
    mpq_class b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
}

std::string QScalar::str() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    if (sgn(a_) != 0) {
        out = a_.get_str();
    }
    if (sgn(b_) != 0) {
        if (!out.empty() && sgn(b_) > 0) {
            out += '+';
        }
        out += b_.get_str();
        out += "*sqrt2";
    }
    return out;
}

QScalar QScalar::parse(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            s += c;
        }
    }
    if (s.empty()) {
        throw ParseError("empty scalar");
    }
    constexpr std::string_view kRoot = "sqrt2";
    size_t root = s.find(kRoot);
    if (root == std::string::npos) {
        return QScalar(parse_rational(s, text));
    }
    if (root + kRoot.size() != s.size()) {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    std::string body = s.substr(0, root);
    mpq_class rational = 0;
    mpq_class coeff = 1;
    if (!body.empty() && body.back() == '*') {
        body.pop_back();
        size_t split = body.find_last_of("+-");
        if (split != std::string::npos && split > 0) {
            rational = parse_rational(body.substr(0, split), text);
            coeff = parse_rational(body.substr(split), text);
        } else {
            coeff = parse_rational(body, text);
        }
    } else if (!body.empty()) {
        char last = body.back();
        if (last != '+' && last != '-') {
            throw ParseError("malformed scalar '" + std::string(text) + "'");
        }
        coeff = last == '-' ? -1 : 1;
        body.pop_back();
        if (!body.empty()) {
            rational = parse_rational(body, text);
        }
    }
    return QScalar(rational, coeff);
}

std::ostream &operator<<(std::ostream &out, const QScalar &x) {
    return out << x.str();
}

CScalar CScalar::inv() const {
    if (is_zero()) {
        throw ArithmeticError("division by zero");
    }
    QScalar n = norm2().inv();
    return CScalar(re_ * n, -(im_ * n));
}

CScalar &CScalar::operator+=(const CScalar &o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

CScalar &CScalar::operator-=(const CScalar &o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

CScalar &CScalar::operator*=(const CScalar &o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    QScalar re = re_ * o.re_ - im_ * o.im_;
    QScalar im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

std::string CScalar::str() const {
    if (im_.is_zero()) {
        return re_.str();
    }
    std::string im = "(" + im_.str() + ")*i";
    if (re_.is_zero()) {
        return im;
    }
    return re_.str() + "+" + im;
}

std::ostream &operator<<(std::ostream &out, const CScalar &x) {
    return out << x.str();
}

}  // namespace gnps

namespace gnps {

namespace {

std::optional<mpq_class> rational_sqrt(const mpq_class &q) {
    if (sgn(q) < 0) {
        return std::nullopt;
    }
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    mpz_class n;
    mpz_class d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    mpq_class r(n, d);
    r.canonicalize();
    return r;
}

}  // namespace

std::optional<QScalar> sqrt_exact(const QScalar &x) {
    int s = x.sign();
    if (s < 0) {
        return std::nullopt;
    }
    if (s == 0) {
        return QScalar();
    }
    const mpq_class &a = x.rational_part();
    const mpq_class &b = x.sqrt2_part();
    // (c + d sqrt2)^2 = c^2 + 2 d^2 + 2 c d sqrt2.
    if (sgn(b) == 0) {
        if (auto c = rational_sqrt(a)) {
            return QScalar(*c, 0);
        }
        if (auto d = rational_sqrt(a / 2)) {
            return QScalar(0, *d);
        }
        return std::nullopt;
    }
    auto disc = rational_sqrt(a * a - 2 * b * b);
    if (!disc) {
        return std::nullopt;
    }
    for (const mpq_class &c2 : {mpq_class((a + *disc) / 2), mpq_class((a - *disc) / 2)}) {
        auto c = rational_sqrt(c2);
        if (!c || sgn(*c) == 0) {
            continue;
        }
        mpq_class d = b / (2 * *c);
        QScalar r(*c, d);
        if (r.sign() < 0) {
            r = -r;
        }
        if (r * r == x) {
            return r;
        }
    }
    return std::nullopt;
}

}  // namespace gnps
