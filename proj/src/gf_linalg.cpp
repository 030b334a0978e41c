#include "qtutte/gf_linalg.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qtutte/errors.hpp"

namespace qtutte {

namespace {

constexpr std::uint64_t kMaxOrder = 65536;

using Poly = std::vector<std::uint32_t>;  // low to high

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo monic-or-not b over F_p.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    Poly d = b;
    trim(d);
    if (d.empty()) throw FieldError("polynomial division by zero");
    std::uint32_t lead = d.back();
    std::uint32_t lead_inv = 1;
    for (std::uint32_t c = 1; c < p; ++c) {
        if ((std::uint64_t(c) * lead) % p == 1) {
            lead_inv = c;
            break;
        }
    }
    while (a.size() >= d.size()) {
        std::uint32_t factor = std::uint32_t((std::uint64_t(a.back()) * lead_inv) % p);
        std::size_t shift = a.size() - d.size();
        for (std::size_t i = 0; i < d.size(); ++i) {
            std::uint64_t sub = (std::uint64_t(factor) * d[i]) % p;
            a[shift + i] = std::uint32_t((a[shift + i] + p - sub) % p);
        }
        trim(a);
    }
    return a;
}

Poly decode(FqElem a, std::uint32_t p, std::uint32_t m) {
    Poly out(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        out[i] = a % p;
        a /= p;
    }
    return out;
}

FqElem encode(const Poly& a, std::uint32_t p) {
    FqElem out = 0;
    for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
    return out;
}

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}


}  // namespace

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m) {
    if (m == 1) return {0, 1};
    if (p == 2 && m == 2) return {1, 1, 1};
    if (p == 2 && m == 3) return {1, 1, 0, 1};
    if (p == 2 && m == 4) return {1, 1, 0, 0, 1};
    if (p == 3 && m == 2) return {1, 0, 1};
    throw FieldError("no built-in modulus for F_" + std::to_string(p) + "^" + std::to_string(m) +
                     "; supply one");
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
    Poly f = poly;
    trim(f);
    if (f.size() < 2) return false;
    std::size_t deg = f.size() - 1;
    if (deg == 1) return true;
    // every monic divisor of degree d, 1 <= d <= deg/2
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = ipow(p, std::uint32_t(d));
        for (std::uint64_t low = 0; low < count; ++low) {
            Poly g(d + 1, 0);
            std::uint64_t v = low;
            for (std::size_t i = 0; i < d; ++i) {
                g[i] = std::uint32_t(v % p);
                v /= p;
            }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
    order_ = std::uint32_t(ipow(spec_.p, spec_.m));
    if (spec_.m == 1) return;  // plain modular arithmetic
    // log/exp tables from a primitive element
    std::uint32_t n = order_ - 1;
    for (FqElem g = 2; g < order_; ++g) {
        std::vector<FqElem> ex;
        ex.reserve(n);
        FqElem cur = 1;
        bool ok = true;
        for (std::uint32_t k = 0; k < n; ++k) {
            if (k > 0 && cur == 1) {
                ok = false;
                break;
            }
            ex.push_back(cur);
            cur = mul_slow(cur, g);
        }
        if (!ok || cur != 1) continue;
        exp_ = std::move(ex);
        log_.assign(order_, 0);
        for (std::uint32_t k = 0; k < n; ++k) log_[exp_[k]] = k;
        return;
    }
    throw FieldError("no primitive element found; modulus not irreducible?");
}

std::shared_ptr<const Field> Field::make(FieldSpec spec) {
    if (!is_prime(spec.p)) throw FieldError("characteristic " + std::to_string(spec.p) + " is not prime");
    if (spec.m < 1) throw FieldError("extension degree must be >= 1");
    if (spec.m > 16 || ipow(spec.p, spec.m) > kMaxOrder)
        throw FieldError("field order exceeds 65536");
    if (spec.modulus.empty()) {
        spec.modulus = default_modulus(spec.p, spec.m);
    }
    if (spec.m == 1 && spec.modulus.size() == 2 && spec.modulus[1] == 1) {
        spec.modulus = {0, 1};  // irrelevant for prime fields; normalise
    }
    if (spec.modulus.size() != spec.m + 1) throw FieldError("modulus must have degree m");
    for (auto c : spec.modulus)
        if (c >= spec.p) throw FieldError("modulus coefficient out of range");
    if (spec.modulus.back() != 1) throw FieldError("modulus must be monic");
    if (!is_irreducible(spec.p, spec.modulus)) throw FieldError("modulus is reducible over F_p");

    static std::mutex mu;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, std::vector<std::uint32_t>>,
                    std::shared_ptr<const Field>>
        cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(spec.p, spec.m, spec.modulus);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::shared_ptr<const Field> f(new Field(spec));
    cache.emplace(key, f);
    return f;
}

std::shared_ptr<const Field> Field::of_order(std::uint32_t q) {
    if (q < 2) throw FieldError("field order must be >= 2");
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (q % p != 0) continue;
        if (!is_prime(p)) throw FieldError("bad order");
        std::uint32_t m = 0;
        std::uint32_t v = q;
        while (v % p == 0) {
            v /= p;
            ++m;
        }
        if (v != 1) throw FieldError(std::to_string(q) + " is not a prime power");
        return make(FieldSpec{p, m, {}});
    }
    throw FieldError("bad order");
}

FqElem Field::add(FqElem a, FqElem b) const {
    if (spec_.m == 1) return (a + b) % spec_.p;
    if (spec_.p == 2) return a ^ b;
    FqElem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        out += ((a % spec_.p + b % spec_.p) % spec_.p) * scale;
        a /= spec_.p;
        b /= spec_.p;
        scale *= spec_.p;
    }
    return out;
}

FqElem Field::neg(FqElem a) const {
    if (spec_.m == 1) return (spec_.p - a) % spec_.p;
    if (spec_.p == 2) return a;
    FqElem out = 0, scale = 1;
    for (std::uint32_t i = 0; i < spec_.m; ++i) {
        out += ((spec_.p - a % spec_.p) % spec_.p) * scale;
        a /= spec_.p;
        scale *= spec_.p;
    }
    return out;
}

FqElem Field::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem Field::mul_slow(FqElem a, FqElem b) const {
    Poly x = decode(a, spec_.p, spec_.m), y = decode(b, spec_.p, spec_.m);
    Poly prod(2 * spec_.m, 0);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < y.size(); ++j)
            prod[i + j] = std::uint32_t((prod[i + j] + std::uint64_t(x[i]) * y[j]) % spec_.p);
    return encode(poly_mod(prod, spec_.modulus, spec_.p), spec_.p);
}

FqElem Field::mul(FqElem a, FqElem b) const {
    if (spec_.m == 1) return FqElem((std::uint64_t(a) * b) % spec_.p);
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (order_ - 1)];
}

FqElem Field::inv(FqElem a) const {
    if (a == 0) throw FieldError("inverse of zero");
    if (spec_.m == 1) {
        // Fermat: a^(p-2)
        std::uint64_t r = 1, base = a, e = spec_.p - 2;
        while (e) {
            if (e & 1) r = r * base % spec_.p;
            base = base * base % spec_.p;
            e >>= 1;
        }
        return FqElem(r);
    }
    return exp_[(order_ - 1 - log_[a]) % (order_ - 1)];
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << spec_.p;
    if (spec_.m > 1) os << "^" << spec_.m;
    return os.str();
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a.spec() == b.spec(); }

FqMatrix::FqMatrix(FieldPtr field, std::size_t cols, std::vector<std::vector<FqElem>> rows)
    : field_(std::move(field)), cols_(cols), rows_(std::move(rows)) {
    if (!field_) throw FieldError("matrix without a field");
    for (const auto& r : rows_) {
        if (r.size() != cols_)
            throw DimensionError("row of length " + std::to_string(r.size()) + " in a matrix with " +
                                 std::to_string(cols_) + " columns");
        for (auto v : r)
            if (!field_->valid(v))
                throw FieldError("entry " + std::to_string(v) + " is not an element of " + field_->describe());
    }
}

bool FqMatrix::operator==(const FqMatrix& o) const {
    if (!field_ || !o.field_) return field_ == o.field_ && cols_ == o.cols_ && rows_ == o.rows_;
    return same_field(*field_, *o.field_) && cols_ == o.cols_ && rows_ == o.rows_;
}

std::vector<FqElem> FqMatrix::flattened() const {
    std::vector<FqElem> out;
    out.reserve(rows_.size() * cols_);
    for (const auto& r : rows_) out.insert(out.end(), r.begin(), r.end());
    return out;
}

std::string FqMatrix::to_string() const {
    if (rows_.empty()) return "0";
    bool wide = field_ && field_->order() > 10;
    std::string out;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) out += ',';
        for (std::size_t j = 0; j < cols_; ++j) {
            if (wide && j) out += '.';
            out += std::to_string(rows_[i][j]);
        }
    }
    return out;
}

RrefResult rref(const FqMatrix& a) {
    const Field& f = *a.field();
    std::vector<std::vector<FqElem>> m = a.rows();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < a.cols() && rank < m.size(); ++col) {
        std::size_t piv = rank;
        while (piv < m.size() && m[piv][col] == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[rank]);
        FqElem s = f.inv(m[rank][col]);
        if (s != 1)
            for (auto& v : m[rank]) v = f.mul(v, s);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == rank || m[i][col] == 0) continue;
            FqElem c = m[i][col];
            for (std::size_t j = col; j < a.cols(); ++j) {
                if (m[rank][j] != 0) m[i][j] = f.sub(m[i][j], f.mul(c, m[rank][j]));
            }
        }
        ++rank;
    }
    m.resize(rank);
    return {FqMatrix(a.field(), a.cols(), std::move(m)), rank};
}

std::size_t matrix_rank(const FqMatrix& a) { return rref(a).rank; }

namespace {

void require_compatible(const FqMatrix& a, const FqMatrix& b) {
    if (!same_field(*a.field(), *b.field())) throw FieldError("matrices over different fields");
    if (a.cols() != b.cols()) throw DimensionError("matrices in different ambient spaces");
}

}  // namespace

FqMatrix row_space_sum(const FqMatrix& a, const FqMatrix& b) {
    require_compatible(a, b);
    auto rows = a.rows();
    rows.insert(rows.end(), b.rows().begin(), b.rows().end());
    return rref(FqMatrix(a.field(), a.cols(), std::move(rows))).basis;
}

FqMatrix row_space_intersection(const FqMatrix& a, const FqMatrix& b) {
    require_compatible(a, b);
    // Zassenhaus: rows [a | a] and [b | 0]; the rows with zero left half
    // after elimination span the intersection in their right half.
    std::size_t n = a.cols();
    std::vector<std::vector<FqElem>> rows;
    for (const auto& r : a.rows()) {
        std::vector<FqElem> v(r);
        v.insert(v.end(), r.begin(), r.end());
        rows.push_back(std::move(v));
    }
    for (const auto& r : b.rows()) {
        std::vector<FqElem> v(r);
        v.resize(2 * n, 0);
        rows.push_back(std::move(v));
    }
    auto red = rref(FqMatrix(a.field(), 2 * n, std::move(rows))).basis;
    std::vector<std::vector<FqElem>> out;
    for (const auto& r : red.rows()) {
        if (std::all_of(r.begin(), r.begin() + long(n), [](FqElem v) { return v == 0; }))
            out.emplace_back(r.begin() + long(n), r.end());
    }
    return rref(FqMatrix(a.field(), n, std::move(out))).basis;
}

FqMatrix orthogonal_complement(const FqMatrix& a) {
    const Field& f = *a.field();
    auto red = rref(a).basis;
    std::size_t n = a.cols();
    std::vector<int> pivot_of_col(n, -1);
    for (std::size_t i = 0; i < red.num_rows(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (red.row(i)[j] != 0) {
                pivot_of_col[j] = int(i);
                break;
            }
        }
    }
    std::vector<std::vector<FqElem>> basis;
    for (std::size_t free = 0; free < n; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<FqElem> v(n, 0);
        v[free] = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (pivot_of_col[j] >= 0) v[j] = f.neg(red.row(std::size_t(pivot_of_col[j]))[free]);
        }
        basis.push_back(std::move(v));
    }
    return rref(FqMatrix(a.field(), n, std::move(basis))).basis;
}

FqMatrix multiply(const FqMatrix& a, const FqMatrix& b) {
    if (!same_field(*a.field(), *b.field())) throw FieldError("matrices over different fields");
    if (a.cols() != b.num_rows())
        throw DimensionError("cannot multiply " + std::to_string(a.num_rows()) + "x" + std::to_string(a.cols()) +
                             " by " + std::to_string(b.num_rows()) + "x" + std::to_string(b.cols()));
    const Field& f = *a.field();
    std::vector<std::vector<FqElem>> out(a.num_rows(), std::vector<FqElem>(b.cols(), 0));
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            FqElem c = a.row(i)[k];
            if (c == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (b.row(k)[j] != 0) out[i][j] = f.add(out[i][j], f.mul(c, b.row(k)[j]));
        }
    return FqMatrix(a.field(), b.cols(), std::move(out));
}

FqMatrix transpose(const FqMatrix& a) {
    std::vector<std::vector<FqElem>> out(a.cols(), std::vector<FqElem>(a.num_rows(), 0));
    for (std::size_t i = 0; i < a.num_rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out[j][i] = a.row(i)[j];
    return FqMatrix(a.field(), a.num_rows(), std::move(out));
}

FqMatrix embed(const FqMatrix& a, const FieldPtr& target) {
    const Field& src = *a.field();
    if (same_field(src, *target)) return a;
    if (src.m() != 1 || src.p() != target->p())
        throw FieldError("cannot embed " + src.describe() + " into " + target->describe());
    return FqMatrix(target, a.cols(), a.rows());
}

std::vector<FqMatrix> enumerate_subspaces(const FieldPtr& field, std::size_t n, std::size_t k) {
    if (k > n) throw DimensionError("subspace dimension " + std::to_string(k) + " exceeds " + std::to_string(n));
    const std::uint32_t q = field->order();
    std::vector<FqMatrix> out;
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
        // free slots: row i, columns after piv[i] that are not pivots
        std::vector<std::pair<std::size_t, std::size_t>> slots;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = piv[i] + 1; j < n; ++j)
                if (!std::binary_search(piv.begin(), piv.end(), j)) slots.emplace_back(i, j);
        std::vector<FqElem> fill(slots.size(), 0);
        while (true) {
            std::vector<std::vector<FqElem>> rows(k, std::vector<FqElem>(n, 0));
            for (std::size_t i = 0; i < k; ++i) rows[i][piv[i]] = 1;
            for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = fill[s];
            out.emplace_back(field, n, std::move(rows));
            std::size_t s = 0;
            while (s < fill.size() && ++fill[s] == q) fill[s++] = 0;
            if (s == fill.size()) break;
        }
        // next combination
        std::size_t i = k;
        while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++piv[i - 1];
        for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
    std::sort(out.begin(), out.end(),
              [](const FqMatrix& a, const FqMatrix& b) { return a.flattened() < b.flattened(); });
    return out;
}

}  // namespace qtutte
