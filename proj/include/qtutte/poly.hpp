#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qtutte {

using BigInt = boost::multiprecision::cpp_int;

class QMatroid;
struct IntervalPartition;

/// Sparse polynomial in x, y with integer coefficients. Zero coefficients are
/// never stored; terms iterate by (i, j) ascending.
class BivariatePoly {
public:
    using Terms = std::map<std::pair<int, int>, BigInt>;

    BivariatePoly() = default;
    static BivariatePoly monomial(int i, int j, const BigInt& c = 1);
    static BivariatePoly constant(const BigInt& c) { return monomial(0, 0, c); }
    /// Accepts text such as "x^2 + 4x + y + 1", "xy^2", "3*x*y - 2", "y²".
    static BivariatePoly parse(const std::string& text);

    void add_term(int i, int j, const BigInt& c);
    BigInt coeff(int i, int j) const;
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int deg_x() const;
    int deg_y() const;

    BigInt evaluate(const BigInt& x, const BigInt& y) const;
    /// f(y, x).
    BivariatePoly swapped() const;

    /// Graded order: total degree descending, then x-degree descending.
    std::string to_string() const;

    BivariatePoly& operator+=(const BivariatePoly& o);
    BivariatePoly& operator-=(const BivariatePoly& o);
    friend BivariatePoly operator+(BivariatePoly a, const BivariatePoly& b) { return a += b; }
    friend BivariatePoly operator-(BivariatePoly a, const BivariatePoly& b) { return a -= b; }
    friend BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
    friend BivariatePoly operator*(const BigInt& c, const BivariatePoly& a);
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }

private:
    Terms terms_;
};

using CoeffMatrix = std::vector<std::vector<BigInt>>;

/// Gaussian binomial [n, k]_q; q == 1 gives the ordinary binomial, k > n gives 0.
BigInt q_binomial(int n, int k, int q);
BigInt alpha_coeff(int n, int m, int i, int j, int q);
BigInt beta_coeff(int a, int b, int c, int d, int q);

enum class Kernel { Alpha, Beta };

/// sum_{i,j} f_ij sum_{a<=i, b<=j} gamma(i,j;a,b) x^a y^b.
BivariatePoly transform(Kernel kernel, int q, const BivariatePoly& f);

/// Checks sum_{c,d} alpha(a,b;c,d) beta(c,d;e,f) = delta for every
/// a <= a_max, b <= b_max, e <= a, f <= b. `checked` receives the tuple count.
bool inversion_check(int a_max, int b_max, int q, std::size_t* checked = nullptr);

/// 1 for Boolean lattices, q otherwise.
int lattice_q(const QMatroid& m);

/// sum_z x^{r(1)-r(z)} y^{nu(z)}.
BivariatePoly rank_polynomial(const QMatroid& m);
/// sum over parts [a,b] of x^{r(b)-r(a)} y^{nu(b)-nu(a)}. Throws
/// PartitionError when p is not a Tutte partition of m.
BivariatePoly tutte_from_partition(const QMatroid& m, const IntervalPartition& p);
/// beta_q * rho.
BivariatePoly tutte_polynomial(const QMatroid& m);

BigInt evaluate(const BivariatePoly& f, const BigInt& x, const BigInt& y);
/// Dense matrix with entry (i, j) = coefficient of x^i y^j. Dimensions default
/// to (deg_x + 1) x (deg_y + 1).
CoeffMatrix coeff_matrix(const BivariatePoly& f, std::size_t rows = 0, std::size_t cols = 0);
/// tr(A B^T) = sum A_ij B_ij. Throws DimensionError on shape mismatch.
BigInt trace_pairing(const CoeffMatrix& a, const CoeffMatrix& b);

enum class BaseCountMethod { RankPoly, Trace };
/// rho(0,0), or <tau, Q> with Q_ij = q^{ij}.
BigInt count_bases(const QMatroid& m, BaseCountMethod method);

/// rho(M*; x, y) = rho(M; y, x) and tau(M*; x, y) = tau(M; y, x).
bool dual_polynomials_check(const QMatroid& m);

}  // namespace qtutte
