#include "meyerlab/exactnum/number_field.hpp"

#include "meyerlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace meyerlab {

struct NumberField::Data {
    std::vector<Integer> min_poly;
    RationalPoly poly;
    std::vector<RationalPoly> sturm;
    int real_roots = 0;
    std::vector<std::vector<Rational>> reduced;  // theta^d .. theta^{2d-2}
};

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
    Integer m = abs(n);
    if (m > Integer("1000000000000000000"))
        throw Unsupported("constant term too large for the exact irreducibility check");
    std::vector<Integer> small, large;
    for (Integer i = 1; i * i <= m; ++i) {
        if (m % i == 0) {
            small.push_back(i);
            if (i * i != m) large.push_back(m / i);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool has_rational_root(const std::vector<Integer>& c) {
    // Monic integer polynomial: rational roots are integer divisors of c0.
    if (c[0] == 0) return true;
    RationalPoly p(std::vector<Rational>(c.begin(), c.end()));
    for (const auto& d : positive_divisors(c[0])) {
        if (p.eval(Rational(d)) == 0 || p.eval(Rational(-d)) == 0) return true;
    }
    return false;
}

bool is_perfect_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

// X^4 + a3 X^3 + a2 X^2 + a1 X + a0 = (X^2 + bX + c)(X^2 + dX + e) over Z.
bool has_quadratic_factor(const std::vector<Integer>& a) {
    const Integer& a0 = a[0];
    const Integer& a1 = a[1];
    const Integer& a2 = a[2];
    const Integer& a3 = a[3];
    for (const auto& pd : positive_divisors(a0)) {
        for (int s : {1, -1}) {
            Integer c = pd * s;
            Integer e = a0 / c;
            if (e != c) {
                // b + d = a3, b e + c d = a1  =>  b (e - c) = a1 - c a3
                Integer num = a1 - c * a3;
                Integer den = e - c;
                if (num % den != 0) continue;
                Integer b = num / den;
                Integer d = a3 - b;
                if (b * d + c + e == a2) return true;
            } else {
                if (a1 != c * a3) continue;
                // b, d roots of t^2 - a3 t + (a2 - 2c)
                Integer disc = a3 * a3 - 4 * (a2 - 2 * c);
                if (is_perfect_square(disc)) {
                    Integer r;
                    mpz_sqrt(r.get_mpz_t(), disc.get_mpz_t());
                    if ((a3 + r) % 2 == 0) return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

NumberField::NumberField(std::vector<Integer> min_poly) {
    if (min_poly.size() < 2) throw UsageError("minimal polynomial must have degree >= 1");
    if (min_poly.back() != 1) throw UsageError("minimal polynomial must be monic");
    const int d = static_cast<int>(min_poly.size()) - 1;
    if (d >= 2 && has_rational_root(min_poly)) throw UsageError("minimal polynomial has a rational root");
    if (d == 4 && has_quadratic_factor(min_poly)) throw UsageError("minimal polynomial factors into quadratics");

    auto data = std::make_shared<Data>();
    data->min_poly = std::move(min_poly);
    data->poly = RationalPoly(std::vector<Rational>(data->min_poly.begin(), data->min_poly.end()));
    data->sturm = sturm_sequence(data->poly);
    data->real_roots = sign_variations_at_infinity(data->sturm, false) - sign_variations_at_infinity(data->sturm, true);

    // theta^d = -(c0 + c1 theta + ... + c_{d-1} theta^{d-1}); higher powers by shifting.
    std::vector<Rational> cur(static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) cur[static_cast<std::size_t>(i)] = -Rational(data->min_poly[static_cast<std::size_t>(i)]);
    for (int k = d; k <= 2 * d - 2 || k == d; ++k) {
        data->reduced.push_back(cur);
        std::vector<Rational> next(static_cast<std::size_t>(d));
        Rational top = cur[static_cast<std::size_t>(d - 1)];
        for (int i = d - 1; i >= 1; --i) next[static_cast<std::size_t>(i)] = cur[static_cast<std::size_t>(i - 1)];
        for (int i = 0; i < d; ++i) next[static_cast<std::size_t>(i)] -= top * Rational(data->min_poly[static_cast<std::size_t>(i)]);
        cur = std::move(next);
    }
    data_ = std::move(data);
}

NumberField NumberField::rationals() {
    static const NumberField f({Integer(0), Integer(1)});
    return f;
}
NumberField NumberField::golden() {
    static const NumberField f({Integer(-1), Integer(-1), Integer(1)});
    return f;
}
NumberField NumberField::sqrt2() {
    static const NumberField f({Integer(-2), Integer(0), Integer(1)});
    return f;
}
NumberField NumberField::sqrt5() {
    static const NumberField f({Integer(-5), Integer(0), Integer(1)});
    return f;
}

int NumberField::degree() const { return static_cast<int>(data_->min_poly.size()) - 1; }
const std::vector<Integer>& NumberField::min_poly() const { return data_->min_poly; }
const RationalPoly& NumberField::min_poly_q() const { return data_->poly; }
const std::vector<RationalPoly>& NumberField::sturm() const { return data_->sturm; }
int NumberField::real_root_count() const { return data_->real_roots; }

const std::vector<Rational>& NumberField::reduced_power(int k) const {
    return data_->reduced.at(static_cast<std::size_t>(k - degree()));
}

std::string NumberField::describe() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < data_->min_poly.size(); ++i) os << (i ? "," : "") << data_->min_poly[i].get_str();
    os << "]";
    return os.str();
}

bool NumberField::operator==(const NumberField& other) const {
    return data_ == other.data_ || data_->min_poly == other.data_->min_poly;
}

// ---------------------------------------------------------------------------

namespace {

void require_same_field(const NFElem& a, const NFElem& b) {
    if (a.field() != b.field()) throw UsageError("number field mismatch");
}

RationalMatrix multiplication_matrix(const NFElem& x) {
    const int d = x.field().degree();
    RationalMatrix m(static_cast<std::size_t>(d), std::vector<Rational>(static_cast<std::size_t>(d)));
    NFElem basis = NFElem::from_rational(x.field(), Rational(1));
    NFElem theta = NFElem::generator(x.field());
    for (int j = 0; j < d; ++j) {
        NFElem col = x * basis;
        for (int i = 0; i < d; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col.coeff(i);
        basis = basis * theta;
    }
    return m;
}

}  // namespace

NFElem::NFElem(NumberField field) : field_(std::move(field)), coeffs_(static_cast<std::size_t>(field_.degree())) {}

NFElem::NFElem(NumberField field, std::vector<Rational> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() > static_cast<std::size_t>(field_.degree()))
        throw UsageError("element has more coefficients than the field degree");
    coeffs_.resize(static_cast<std::size_t>(field_.degree()));
}

NFElem NFElem::from_rational(NumberField field, const Rational& q) {
    NFElem x(std::move(field));
    x.coeffs_[0] = q;
    return x;
}

NFElem NFElem::generator(NumberField field) {
    NFElem x(field);
    if (field.degree() == 1) {
        x.coeffs_[0] = -Rational(field.min_poly()[0]);
    } else {
        x.coeffs_[1] = 1;
    }
    return x;
}

bool NFElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q == 0; });
}

bool NFElem::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& q) { return q == 0; });
}

NFElem NFElem::operator-() const {
    NFElem r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

NFElem& NFElem::operator+=(const NFElem& o) {
    require_same_field(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
    require_same_field(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    return *this;
}

NFElem operator+(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    r += b;
    return r;
}

NFElem operator-(const NFElem& a, const NFElem& b) {
    NFElem r = a;
    r -= b;
    return r;
}

NFElem operator*(const NFElem& a, const NFElem& b) {
    require_same_field(a, b);
    const int d = a.field_.degree();
    if (d == 1) return NFElem::from_rational(a.field_, a.coeffs_[0] * b.coeffs_[0]);
    std::vector<Rational> prod(static_cast<std::size_t>(2 * d - 1));
    for (int i = 0; i < d; ++i) {
        if (a.coeffs_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j)
            prod[static_cast<std::size_t>(i + j)] += a.coeffs_[static_cast<std::size_t>(i)] * b.coeffs_[static_cast<std::size_t>(j)];
    }
    NFElem r(a.field_);
    for (int i = 0; i < d; ++i) r.coeffs_[static_cast<std::size_t>(i)] = prod[static_cast<std::size_t>(i)];
    for (int k = d; k <= 2 * d - 2; ++k) {
        const Rational& c = prod[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        const auto& red = a.field_.reduced_power(k);
        for (int i = 0; i < d; ++i) r.coeffs_[static_cast<std::size_t>(i)] += c * red[static_cast<std::size_t>(i)];
    }
    return r;
}

NFElem operator*(const Rational& s, const NFElem& a) {
    NFElem r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

NFElem operator/(const NFElem& a, const NFElem& b) { return a * b.inverse(); }

bool NFElem::operator==(const NFElem& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

NFElem NFElem::inverse() const {
    if (is_zero()) throw UsageError("inverse of zero");
    if (field_.degree() == 1) return from_rational(field_, 1 / coeffs_[0]);
    std::vector<Rational> rhs(coeffs_.size());
    rhs[0] = 1;
    return NFElem(field_, solve(multiplication_matrix(*this), std::move(rhs)));
}

RationalPoly NFElem::charpoly() const {
    // Faddeev-LeVerrier on the multiplication matrix.
    const auto a = multiplication_matrix(*this);
    const std::size_t n = a.size();
    std::vector<Rational> c(n + 1);
    c[n] = 1;
    RationalMatrix m(n, std::vector<Rational>(n));
    for (std::size_t k = 1; k <= n; ++k) {
        RationalMatrix next(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational s(0);
                for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
                next[i][j] = s;
            }
            next[i][i] += c[n - k + 1];
        }
        m = std::move(next);
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
        c[n - k] = -tr / static_cast<long>(k);
    }
    return RationalPoly(std::move(c));
}

Rational NFElem::norm() const {
    if (field_.degree() == 1) return coeffs_[0];
    return determinant(multiplication_matrix(*this));
}

Rational NFElem::trace() const {
    const auto m = multiplication_matrix(*this);
    Rational t(0);
    for (std::size_t i = 0; i < m.size(); ++i) t += m[i][i];
    return t;
}

bool NFElem::is_integral() const {
    const auto cp = charpoly();
    return std::all_of(cp.coeffs().begin(), cp.coeffs().end(), [](const Rational& q) { return q.get_den() == 1; });
}

bool NFElem::has_integer_coeffs() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

NFElem NFElem::conjugate() const {
    if (field_.degree() != 2) throw Unsupported("Galois conjugate implemented for quadratic fields only");
    // theta' = -c1 - theta
    const Rational tr = -Rational(field_.min_poly()[1]);
    return NFElem(field_, {coeffs_[0] + coeffs_[1] * tr, -coeffs_[1]});
}

NFElem nf_mul(const NFElem& a, const NFElem& b) { return a * b; }
NFElem nf_add(const NFElem& a, const NFElem& b) { return a + b; }
NFElem nf_inv(const NFElem& a) { return a.inverse(); }

int lex_compare(const NFElem& a, const NFElem& b) {
    const auto& ca = a.coeffs();
    const auto& cb = b.coeffs();
    for (std::size_t i = 0; i < std::min(ca.size(), cb.size()); ++i) {
        int c = cmp(ca[i], cb[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    return ca.size() < cb.size() ? -1 : (ca.size() > cb.size() ? 1 : 0);
}

std::string to_string(const NFElem& x) {
    std::string out;
    for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
        if (i) out += ':';
        out += to_fraction_string(x.coeffs()[i]);
    }
    return out;
}

NFElem parse_element(const NumberField& field, std::string_view text) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(':', start);
        coeffs.push_back(parse_rational(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    if (coeffs.size() > static_cast<std::size_t>(field.degree()))
        throw UsageError("element '" + std::string(text) + "' has too many coefficients for the field");
    return NFElem(field, std::move(coeffs));
}

Rational determinant(RationalMatrix m) {
    const std::size_t n = m.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

std::vector<Rational> solve(RationalMatrix m, std::vector<Rational> rhs) {
    const std::size_t n = m.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0) ++pivot;
        if (pivot == n) throw UsageError("singular system");
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rational f = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
            rhs[r] -= f * rhs[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
    return rhs;
}

}  // namespace meyerlab
