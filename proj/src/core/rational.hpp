/*
 * Copyright 2026 The conemm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conemm {

enum class ErrorCode {
    parse_error,
    invalid_argument,
    hypothesis_failed,
    search_exhausted,
    budget_exhausted,
    guard_violation,
    internal_error,
};

/// Library-wide exception. The C API maps codes onto conemm_status values.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. All arithmetic is exact; there is no floating-point path
/// anywhere in the library.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}
    Rational(long num, long den);

    /// Parses "p", "-p" or "p/q" with decimal digits and q > 0.
    /// Anything else (floats, exponents, zero denominators, stray
    /// whitespace) raises ErrorCode::parse_error.
    static Rational parse(std::string_view text);

    static Rational from_mpq(mpq_class value);

    /// Lowest-terms textual form, "p" or "p/q".
    std::string str() const;

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_positive() const { return sgn(v_) > 0; }
    bool is_negative() const { return sgn(v_) < 0; }
    int sign() const { return sgn(v_); }

    Rational abs() const { return from_mpq(::abs(v_)); }
    Rational reciprocal() const;

    /// base^exponent for a non-negative integer exponent.
    static Rational pow(const Rational& base, unsigned exponent);

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }

    const mpq_class& raw() const { return v_; }

    friend Rational operator+(const Rational& a, const Rational& b) { return from_mpq(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return from_mpq(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return from_mpq(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a) { return from_mpq(-a.v_); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    mpq_class v_;
};

using RationalVector = std::vector<Rational>;

/// A weighted ratio b/a where a may be zero: division of a positive number
/// by zero is the distinguished value +infinity, used only in comparisons.
class RatioValue {
public:
    static RatioValue infinity() { return RatioValue(true, Rational()); }
    static RatioValue finite(Rational value) { return RatioValue(false, std::move(value)); }

    /// num/den with den == 0 mapping to +infinity; num must be positive.
    static RatioValue of(const Rational& num, const Rational& den);

    bool is_infinite() const { return infinite_; }

    const Rational& value() const;

    friend bool operator==(const RatioValue& a, const RatioValue& b);
    friend bool operator<(const RatioValue& a, const RatioValue& b);
    friend bool operator>(const RatioValue& a, const RatioValue& b) { return b < a; }
    friend bool operator<=(const RatioValue& a, const RatioValue& b) { return !(b < a); }
    friend bool operator>=(const RatioValue& a, const RatioValue& b) { return !(a < b); }
    friend bool operator!=(const RatioValue& a, const RatioValue& b) { return !(a == b); }

private:
    RatioValue(bool infinite, Rational value) : infinite_(infinite), value_(std::move(value)) {}

    bool infinite_;
    Rational value_;
};

/// Dense row-major matrix of rationals.
class Matrix {
public:
    Matrix() = default;
    Matrix(int rows, int cols);

    static Matrix from_rows(const std::vector<RationalVector>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    const Rational& at(int i, int j) const { return cells_[index(i, j)]; }
    Rational& at(int i, int j) { return cells_[index(i, j)]; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
    }

private:
    std::size_t index(int i, int j) const;

    int rows_ = 0;
    int cols_ = 0;
    RationalVector cells_;
};

}  // namespace conemm
