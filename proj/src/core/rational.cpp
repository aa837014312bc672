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

#include "core/rational.hpp"

namespace conemm {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) {
        throw Error(ErrorCode::invalid_argument, "rational with zero denominator");
    }
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    bool has_den = false;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        has_den = true;
    }
    bool negative = false;
    if (!num_part.empty() && num_part.front() == '-') {
        negative = true;
        num_part.remove_prefix(1);
    }
    if (!all_digits(num_part) || (has_den && !all_digits(den_part))) {
        throw Error(ErrorCode::parse_error,
                    "malformed rational '" + std::string(text) + "': rationals only, as \"p\" or \"p/q\"");
    }
    mpz_class num(std::string(num_part), 10);
    mpz_class den(1);
    if (has_den) {
        den = mpz_class(std::string(den_part), 10);
        if (sgn(den) == 0) {
            throw Error(ErrorCode::parse_error,
                        "malformed rational '" + std::string(text) + "': zero denominator");
        }
    }
    if (negative) num = -num;
    mpq_class v(num, den);
    v.canonicalize();
    return from_mpq(std::move(v));
}

Rational Rational::from_mpq(mpq_class value) {
    Rational r;
    r.v_ = std::move(value);
    return r;
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) {
        throw Error(ErrorCode::invalid_argument, "reciprocal of zero");
    }
    mpq_class inv(v_.get_den(), v_.get_num());
    inv.canonicalize();
    return from_mpq(std::move(inv));
}

Rational Rational::pow(const Rational& base, unsigned exponent) {
    Rational result(1);
    Rational acc = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) result *= acc;
        acc *= acc;
        e >>= 1u;
    }
    return result;
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw Error(ErrorCode::invalid_argument, "division by zero");
    }
    return Rational::from_mpq(a.v_ / b.v_);
}

RatioValue RatioValue::of(const Rational& num, const Rational& den) {
    if (!num.is_positive()) {
        throw Error(ErrorCode::internal_error, "ratio numerator must be positive");
    }
    if (den.is_zero()) return infinity();
    return finite(num / den);
}

const Rational& RatioValue::value() const {
    if (infinite_) {
        throw Error(ErrorCode::internal_error, "value() on infinite ratio");
    }
    return value_;
}

bool operator==(const RatioValue& a, const RatioValue& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ && b.infinite_;
    return a.value_ == b.value_;
}

bool operator<(const RatioValue& a, const RatioValue& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw Error(ErrorCode::invalid_argument, "negative matrix dimension");
    }
    cells_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational());
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows) {
    const int q = static_cast<int>(rows.size());
    const int r = q == 0 ? 0 : static_cast<int>(rows.front().size());
    Matrix m(q, r);
    for (int i = 0; i < q; ++i) {
        if (static_cast<int>(rows[i].size()) != r) {
            throw Error(ErrorCode::invalid_argument, "ragged coefficient rows");
        }
        for (int j = 0; j < r; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::size_t Matrix::index(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) {
        throw Error(ErrorCode::internal_error, "matrix index out of range");
    }
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

}  // namespace conemm
