#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace lrw {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator; zero is 0/1.
class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
    Rational(long num, long den);
    explicit Rational(mpq_class value);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed
    /// input or a zero denominator.
    static Rational parse(std::string_view text);

    [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
    [[nodiscard]] int sign() const { return sgn(value_); }
    [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
    [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
    [[nodiscard]] const mpq_class& raw() const { return value_; }
    [[nodiscard]] std::string str() const { return value_.get_str(); }

    Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
    Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
    Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class value_{0};
};

using RatVector = std::vector<Rational>;

[[nodiscard]] bool is_zero(std::span<const Rational> v);
[[nodiscard]] RatVector unit_vector(std::size_t n, std::size_t i);
RatVector& axpy(RatVector& y, const Rational& a, std::span<const Rational> x);  // y += a*x

/// Dense row-major rational matrix.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<RatVector>& rows, std::size_t cols);
    static RatMatrix from_columns(const std::vector<RatVector>& cols, std::size_t rows);

    [[nodiscard]] std::size_t rows() const { return rows_; }
    [[nodiscard]] std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    [[nodiscard]] RatVector row(std::size_t r) const;
    [[nodiscard]] RatVector column(std::size_t c) const;
    [[nodiscard]] const std::vector<Rational>& entries() const { return entries_; }

    [[nodiscard]] RatMatrix transpose() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] std::size_t rank() const;

    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatVector operator*(const RatMatrix& a, std::span<const Rational> x);
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator-(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

struct RrefResult {
    RatMatrix matrix;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form, leftmost-nonzero pivoting.
[[nodiscard]] RrefResult rref(const RatMatrix& m);

/// A linear subspace of Q^n held by its RREF basis, so equal subspaces have
/// identical representations.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim = 0);

    static Subspace span(std::size_t ambient_dim, const std::vector<RatVector>& vectors);
    static Subspace full(std::size_t ambient_dim);

    [[nodiscard]] std::size_t ambient_dim() const { return ambient_; }
    [[nodiscard]] std::size_t dim() const { return basis_.size(); }
    [[nodiscard]] const std::vector<RatVector>& basis() const { return basis_; }
    [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

    [[nodiscard]] bool contains(std::span<const Rational> v) const;
    /// Coefficients of v in basis(), or nullopt if v is outside the span.
    [[nodiscard]] std::optional<RatVector> coordinates(std::span<const Rational> v) const;
    [[nodiscard]] RatVector combine(std::span<const Rational> coords) const;

    [[nodiscard]] Subspace operator+(const Subspace& other) const;
    friend bool operator==(const Subspace&, const Subspace&) = default;

private:
    std::size_t ambient_ = 0;
    std::vector<RatVector> basis_;
    std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace nullspace(const RatMatrix& m);
[[nodiscard]] Subspace column_space(const RatMatrix& m);

/// Some solution of m x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
[[nodiscard]] std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

/// Inverse of a square matrix; throws std::domain_error when singular.
[[nodiscard]] RatMatrix inverse(const RatMatrix& m);

}  // namespace lrw
