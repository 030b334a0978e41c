#include "qtutte/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <tuple>

#include "qtutte/errors.hpp"
#include "qtutte/partition.hpp"
#include "qtutte/qmatroid.hpp"

namespace qtutte {

BivariatePoly BivariatePoly::monomial(int i, int j, const BigInt& c) {
    BivariatePoly p;
    p.add_term(i, j, c);
    return p;
}

void BivariatePoly::add_term(int i, int j, const BigInt& c) {
    if (i < 0 || j < 0) throw DimensionError("negative exponent");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BigInt BivariatePoly::coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? BigInt(0) : it->second;
}

int BivariatePoly::deg_x() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int BivariatePoly::deg_y() const {
    int d = 0;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

BigInt BivariatePoly::evaluate(const BigInt& x, const BigInt& y) const {
    BigInt total = 0;
    for (const auto& [k, c] : terms_) {
        BigInt t = c;
        for (int e = 0; e < k.first; ++e) t *= x;
        for (int e = 0; e < k.second; ++e) t *= y;
        total += t;
    }
    return total;
}

BivariatePoly BivariatePoly::swapped() const {
    BivariatePoly p;
    for (const auto& [k, c] : terms_) p.add_term(k.second, k.first, c);
    return p;
}

BivariatePoly& BivariatePoly::operator+=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

BivariatePoly& BivariatePoly::operator-=(const BivariatePoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly p;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) p.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return p;
}

BivariatePoly operator*(const BigInt& c, const BivariatePoly& a) {
    BivariatePoly p;
    for (const auto& [k, v] : a.terms_) p.add_term(k.first, k.second, c * v);
    return p;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, BigInt>> order(terms_.begin(), terms_.end());
    std::sort(order.begin(), order.end(), [](const auto& l, const auto& r) {
        int dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [k, c] : order) {
        BigInt mag = c < 0 ? BigInt(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        if (k.first == 1) mono += "x";
        else if (k.first > 1) mono += "x^" + std::to_string(k.first);
        if (k.second == 1) mono += "y";
        else if (k.second > 1) mono += "y^" + std::to_string(k.second);
        if (mono.empty() || mag != 1) out += mag.str();
        out += mono;
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(const std::string& s) {
        // normalise superscript digits and drop whitespace
        static const std::pair<const char*, char> sup[] = {
            {"⁰", '0'}, {"¹", '1'}, {"²", '2'}, {"³", '3'}, {"⁴", '4'},
            {"⁵", '5'}, {"⁶", '6'}, {"⁷", '7'}, {"⁸", '8'}, {"⁹", '9'}};
        for (std::size_t i = 0; i < s.size();) {
            bool hit = false;
            for (const auto& [u, d] : sup) {
                std::size_t len = std::char_traits<char>::length(u);
                if (s.compare(i, len, u) == 0) {
                    if (!prev_sup_) text_ += '^';
                    text_ += d;
                    prev_sup_ = true;
                    i += len;
                    hit = true;
                    break;
                }
            }
            if (hit) continue;
            prev_sup_ = false;
            if (!std::isspace(static_cast<unsigned char>(s[i]))) text_ += s[i];
            ++i;
        }
    }

    BivariatePoly run() {
        BivariatePoly p;
        if (text_.empty()) fail("empty polynomial");
        bool first = true;
        while (pos_ < text_.size() || first) {
            int sign = 1;
            if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) {
                sign = text_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                fail("expected + or -");
            }
            first = false;
            term(p, sign);
        }
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("cannot parse polynomial '" + text_ + "': " + why + " at offset " + std::to_string(pos_));
    }

    bool digit() const { return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])); }

    std::string number() {
        std::string s;
        while (digit()) s += text_[pos_++];
        return s;
    }

    void term(BivariatePoly& p, int sign) {
        BigInt c = 1;
        bool any = false;
        if (digit()) {
            c = BigInt(number());
            any = true;
        }
        int i = 0, j = 0;
        while (pos_ < text_.size()) {
            char ch = text_[pos_];
            if (ch == '*') {
                ++pos_;
                continue;
            }
            if (ch != 'x' && ch != 'y') break;
            ++pos_;
            int e = 1;
            if (pos_ < text_.size() && text_[pos_] == '^') {
                ++pos_;
                if (!digit()) fail("expected exponent");
                e = std::stoi(number());
            }
            (ch == 'x' ? i : j) += e;
            any = true;
        }
        if (!any) fail("expected a term");
        p.add_term(i, j, sign * c);
    }

    std::string text_;
    std::size_t pos_ = 0;
    bool prev_sup_ = false;
};

BigInt ipow(int base, long e) {
    BigInt r = 1;
    for (long k = 0; k < e; ++k) r *= base;
    return r;
}

}  // namespace

BivariatePoly BivariatePoly::parse(const std::string& text) { return PolyParser(text).run(); }

BigInt q_binomial(int n, int k, int q) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (q < 1) throw DimensionError("q must be >= 1");
    static std::mutex mu;
    static std::map<int, std::vector<std::vector<BigInt>>> cache;  // q -> triangle
    std::lock_guard<std::mutex> lock(mu);
    auto& table = cache[q];
    // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j]
    while (int(table.size()) <= n) {
        int m = int(table.size());
        std::vector<BigInt> row(std::size_t(m) + 1);
        row[0] = 1;
        row[std::size_t(m)] = 1;
        for (int j = 1; j < m; ++j)
            row[std::size_t(j)] = table[std::size_t(m - 1)][std::size_t(j - 1)] +
                                  ipow(q, j) * table[std::size_t(m - 1)][std::size_t(j)];
        table.push_back(std::move(row));
    }
    return table[std::size_t(n)][std::size_t(k)];
}

BigInt alpha_coeff(int n, int m, int i, int j, int q) {
    if (i < 0 || j < 0 || i > n || j > m) return 0;
    return q_binomial(n, i, q) * q_binomial(m, j, q) * ipow(q, long(n - i) * long(m - j));
}

BigInt beta_coeff(int a, int b, int c, int d, int q) {
    if (c < 0 || d < 0 || c > a || d > b) return 0;
    const int s = a - c, t = b - d;
    const int diff = s > t ? s - t : t - s;
    BigInt v = q_binomial(a, c, q) * q_binomial(b, d, q) * ipow(q, long(diff) * long(diff - 1) / 2) *
               (1 + ipow(q, diff) - ipow(q, std::max(s, t)));
    return (s + t) % 2 ? BigInt(-v) : v;
}

BivariatePoly transform(Kernel kernel, int q, const BivariatePoly& f) {
    BivariatePoly out;
    for (const auto& [k, c] : f.terms()) {
        const int i = k.first, j = k.second;
        for (int a = 0; a <= i; ++a)
            for (int b = 0; b <= j; ++b) {
                BigInt g = kernel == Kernel::Alpha ? alpha_coeff(i, j, a, b, q) : beta_coeff(i, j, a, b, q);
                out.add_term(a, b, c * g);
            }
    }
    return out;
}

bool inversion_check(int a_max, int b_max, int q, std::size_t* checked) {
    std::size_t count = 0;
    bool ok = true;
    for (int a = 0; a <= a_max; ++a)
        for (int b = 0; b <= b_max; ++b)
            for (int e = 0; e <= a; ++e)
                for (int f = 0; f <= b; ++f) {
                    BigInt s = 0;
                    for (int c = e; c <= a; ++c)
                        for (int d = f; d <= b; ++d) s += alpha_coeff(a, b, c, d, q) * beta_coeff(c, d, e, f, q);
                    ++count;
                    if (s != ((a == e && b == f) ? 1 : 0)) ok = false;
                }
    if (checked) *checked = count;
    return ok;
}

int lattice_q(const QMatroid& m) { return m.lattice().kind() == LatticeKind::Boolean ? 1 : int(m.lattice().q()); }

BivariatePoly rank_polynomial(const QMatroid& m) {
    const auto& lat = m.lattice();
    const int r1 = m.full_rank();
    std::map<std::pair<int, int>, std::uint64_t> counts;
    for (Index z = 0; z < lat.size(); ++z) ++counts[{r1 - m.rank(z), m.nullity(z)}];
    BivariatePoly p;
    for (const auto& [k, c] : counts) p.add_term(k.first, k.second, BigInt(c));
    return p;
}

BivariatePoly tutte_from_partition(const QMatroid& m, const IntervalPartition& p) {
    auto v = verify_tutte_partition(m, p);
    if (!v.ok) throw PartitionError("not a Tutte partition: " + v.message);
    BivariatePoly out;
    for (const auto& part : p.parts) {
        int dr = m.rank(part.interval.top) - m.rank(part.interval.bottom);
        int dn = m.nullity(part.interval.top) - m.nullity(part.interval.bottom);
        out.add_term(dr, dn, 1);
    }
    return out;
}

BivariatePoly tutte_polynomial(const QMatroid& m) { return transform(Kernel::Beta, lattice_q(m), rank_polynomial(m)); }

BigInt evaluate(const BivariatePoly& f, const BigInt& x, const BigInt& y) { return f.evaluate(x, y); }

CoeffMatrix coeff_matrix(const BivariatePoly& f, std::size_t rows, std::size_t cols) {
    if (rows == 0) rows = std::size_t(f.deg_x()) + 1;
    if (cols == 0) cols = std::size_t(f.deg_y()) + 1;
    CoeffMatrix out(rows, std::vector<BigInt>(cols, 0));
    for (const auto& [k, c] : f.terms()) {
        if (std::size_t(k.first) >= rows || std::size_t(k.second) >= cols)
            throw DimensionError("term x^" + std::to_string(k.first) + "y^" + std::to_string(k.second) +
                                 " does not fit a " + std::to_string(rows) + "x" + std::to_string(cols) + " matrix");
        out[std::size_t(k.first)][std::size_t(k.second)] = c;
    }
    return out;
}

BigInt trace_pairing(const CoeffMatrix& a, const CoeffMatrix& b) {
    if (a.size() != b.size()) throw DimensionError("pairing of matrices with different row counts");
    BigInt s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) throw DimensionError("pairing of matrices with different column counts");
        for (std::size_t j = 0; j < a[i].size(); ++j) s += a[i][j] * b[i][j];
    }
    return s;
}

BigInt count_bases(const QMatroid& m, BaseCountMethod method) {
    if (method == BaseCountMethod::RankPoly) return rank_polynomial(m).coeff(0, 0);
    const int r = m.full_rank(), nu = m.full_nullity(), q = lattice_q(m);
    CoeffMatrix qm(std::size_t(r) + 1, std::vector<BigInt>(std::size_t(nu) + 1));
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= nu; ++j) qm[std::size_t(i)][std::size_t(j)] = ipow(q, long(i) * long(j));
    return trace_pairing(coeff_matrix(tutte_polynomial(m), std::size_t(r) + 1, std::size_t(nu) + 1), qm);
}

bool dual_polynomials_check(const QMatroid& m) {
    QMatroid d = m.dual();
    return rank_polynomial(d) == rank_polynomial(m).swapped() && tutte_polynomial(d) == tutte_polynomial(m).swapped();
}

}  // namespace qtutte
