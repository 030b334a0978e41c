#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qtutte {

/// Field element: the coefficient vector of a polynomial in F_p[t]/(modulus),
/// packed as base-p digits (constant term is the lowest digit). Elements of the
/// prime subfield therefore keep their integer value.
using FqElem = std::uint32_t;

struct FieldSpec {
    std::uint32_t p = 2;
    std::uint32_t m = 1;
    /// Coefficients low to high, monic, degree m. May be empty when m == 1 or
    /// when a built-in modulus exists for (p, m).
    std::vector<std::uint32_t> modulus;

    bool operator==(const FieldSpec&) const = default;
};

bool is_prime(std::uint64_t v);

/// Built-in moduli for (2,2), (2,3), (2,4), (3,2). Throws FieldError otherwise.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

/// Trial division by every monic polynomial of degree <= deg/2.
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

class Field {
public:
    /// Validates the field parameters and fills in a default modulus if needed.
    static std::shared_ptr<const Field> make(FieldSpec spec);
    /// F_q for a prime power q, using default moduli for proper powers.
    static std::shared_ptr<const Field> of_order(std::uint32_t q);

    const FieldSpec& spec() const { return spec_; }
    std::uint32_t p() const { return spec_.p; }
    std::uint32_t m() const { return spec_.m; }
    std::uint32_t order() const { return order_; }
    bool valid(FqElem a) const { return a < order_; }

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;

    std::string describe() const;

private:
    explicit Field(FieldSpec spec);
    FqElem mul_slow(FqElem a, FqElem b) const;

    FieldSpec spec_;
    std::uint32_t order_ = 0;
    std::vector<std::uint32_t> log_;
    std::vector<FqElem> exp_;
};

using FieldPtr = std::shared_ptr<const Field>;

bool same_field(const Field& a, const Field& b);

/// Row-list matrix over a finite field.
class FqMatrix {
public:
    FqMatrix() = default;
    FqMatrix(FieldPtr field, std::size_t cols, std::vector<std::vector<FqElem>> rows);

    const FieldPtr& field() const { return field_; }
    std::size_t cols() const { return cols_; }
    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<std::vector<FqElem>>& rows() const { return rows_; }
    const std::vector<FqElem>& row(std::size_t i) const { return rows_[i]; }

    bool operator==(const FqMatrix& o) const;

    /// Row-major entries, used as the canonical ordering key.
    std::vector<FqElem> flattened() const;
    /// Rows as digit strings joined by commas; "0" for no rows.
    std::string to_string() const;

private:
    FieldPtr field_;
    std::size_t cols_ = 0;
    std::vector<std::vector<FqElem>> rows_;
};

struct RrefResult {
    FqMatrix basis;
    std::size_t rank = 0;
};

RrefResult rref(const FqMatrix& a);
std::size_t matrix_rank(const FqMatrix& a);

FqMatrix row_space_sum(const FqMatrix& a, const FqMatrix& b);
FqMatrix row_space_intersection(const FqMatrix& a, const FqMatrix& b);
/// {v : v . u = 0 for all rows u} under the standard dot product, in RREF.
FqMatrix orthogonal_complement(const FqMatrix& a);
/// Ordinary product a * b (a.cols() must equal b.num_rows()).
FqMatrix multiply(const FqMatrix& a, const FqMatrix& b);
FqMatrix transpose(const FqMatrix& a);
/// Reinterpret a matrix over the prime field F_p inside an extension of F_p.
FqMatrix embed(const FqMatrix& a, const FieldPtr& target);

/// All k-dimensional subspaces of F^n in RREF, sorted by flattened entries.
std::vector<FqMatrix> enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t k);

}  // namespace qtutte
