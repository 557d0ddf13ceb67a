#include "meyerlab/cps/scheme.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/padic.hpp"
#include "meyerlab/parallel.hpp"

#include <algorithm>
#include <sstream>

namespace meyerlab::cps {

CutProjectScheme CutProjectScheme::galois(const NumberField& field, std::size_t dim) {
    if (field.degree() != 2 || !field.is_totally_real())
        throw UsageError("GALOIS schemes need a real quadratic field");
    if (dim == 0) throw UsageError("GALOIS scheme dimension must be >= 1");
    // Embedding matrix of the Z-basis (1, theta) has determinant theta_int - theta_phys,
    // nonzero iff the discriminant is.
    const auto& c = field.min_poly();
    if (c[1] * c[1] - 4 * c[0] == 0) throw UsageError("degenerate embedding matrix");
    CutProjectScheme s;
    s.kind = SchemeKind::Galois;
    s.field = field;
    s.dim = dim;
    s.ambient = Ambient{field, real_place(field, 1), real_place(field, 0), GroupLaw::Abelian, dim};
    return s;
}

CutProjectScheme CutProjectScheme::zs(std::vector<Integer> primes) {
    if (primes.empty()) throw UsageError("ZS scheme needs at least one prime");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (!is_prime(primes[i])) throw UsageError(primes[i].get_str() + " is not prime");
        for (std::size_t j = 0; j < i; ++j)
            if (primes[i] == primes[j]) throw UsageError("ZS primes must be distinct");
    }
    CutProjectScheme s;
    s.kind = SchemeKind::ZS;
    s.primes = std::move(primes);
    return s;
}

std::string CutProjectScheme::describe() const {
    std::ostringstream os;
    if (kind == SchemeKind::ZS) {
        os << "zs:";
        for (std::size_t i = 0; i < primes.size(); ++i) os << (i ? "," : "") << primes[i].get_str();
    } else {
        os << "galois:";
        const auto& c = field.min_poly();
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i].get_str();
        os << ":" << dim;
    }
    return os.str();
}

void CutProjectScheme::check_window(const Window& w) const {
    w.validate();
    if (kind == SchemeKind::Galois) {
        if (w.real_boxes.size() != dim || !w.padic_balls.empty())
            throw UsageError("GALOIS window needs exactly " + std::to_string(dim) + " real half-widths");
        return;
    }
    if (!w.real_boxes.empty() || w.padic_balls.size() != primes.size())
        throw UsageError("ZS window needs one p-adic ball per scheme prime");
    for (std::size_t i = 0; i < primes.size(); ++i)
        if (w.padic_balls[i].prime != primes[i]) throw UsageError("ZS window primes must follow the scheme order");
}

bool CutProjectScheme::in_lattice(const Point& p) const {
    if (p.size() != dim) return false;
    for (const auto& c : p) {
        if (c.field() != field) return false;
        if (kind == SchemeKind::Galois) {
            if (!c.has_integer_coeffs()) return false;
        } else {
            Integer den = c.rational_value().get_den();
            for (const auto& q : primes)
                while (den % q == 0) den /= q;
            if (den != 1) return false;
        }
    }
    return true;
}

bool CutProjectScheme::in_window(const Point& p, const Window& w, long max_precision) const {
    if (!in_lattice(p)) return false;
    if (kind == SchemeKind::Galois) {
        for (std::size_t i = 0; i < dim; ++i)
            if (compare_abs_to(p[i], w.real_boxes[i], internal(), max_precision) == AbsComparison::Greater) return false;
        return true;
    }
    for (const auto& ball : w.padic_balls) {
        auto v = padic_valuation(p[0].rational_value(), ball.prime);
        if (v && *v < -ball.level) return false;
    }
    return true;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

}  // namespace

NumberField parse_field_spec(const std::string& name) {
    if (name == "golden") return NumberField::golden();
    if (name == "sqrt2") return NumberField::sqrt2();
    if (name == "sqrt5") return NumberField::sqrt5();
    if (name == "rationals") return NumberField::rationals();
    std::vector<Integer> coeffs;
    for (const auto& c : split(name, ',')) {
        try {
            coeffs.emplace_back(c);
        } catch (const std::exception&) {
            throw UsageError("malformed field '" + name + "'");
        }
    }
    return NumberField(std::move(coeffs));
}

CutProjectScheme parse_scheme(const std::string& text) {
    auto parts = split(text, ':');
    if (parts.size() < 2) throw UsageError("malformed scheme '" + text + "'");
    if (parts[0] == "zs") {
        std::vector<Integer> primes;
        for (const auto& p : split(parts[1], ',')) {
            try {
                primes.emplace_back(p);
            } catch (const std::exception&) {
                throw UsageError("malformed prime '" + p + "' in scheme");
            }
        }
        return CutProjectScheme::zs(std::move(primes));
    }
    if (parts[0] == "galois") {
        std::size_t n = 1;
        if (parts.size() >= 3) {
            try {
                n = std::stoul(parts[2]);
            } catch (const std::exception&) {
                throw UsageError("malformed scheme dimension in '" + text + "'");
            }
        }
        return CutProjectScheme::galois(parse_field_spec(parts[1]), n);
    }
    throw UsageError("unknown scheme kind '" + parts[0] + "'");
}

std::vector<NFElem> enumerate_quadratic(const Ambient& ambient, const Rational& radius, const Rational& c,
                                        const EnumerationOptions& opts) {
    const NumberField& field = ambient.field;
    if (field.degree() != 2 || !ambient.internal) throw UsageError("quadratic enumeration needs a GALOIS ambient");
    if (radius < 0 || c < 0) return {};
    const RealEmbedding& phys = ambient.physical;
    const RealEmbedding& inter = *ambient.internal;
    const NFElem theta = NFElem::generator(field);
    const Interval t1 = eval_embedding(theta, phys, 96);
    const Interval t2 = eval_embedding(theta, inter, 96);
    // x = a + b theta: b (theta1 - theta2) = sigma1(x) - sigma2(x), so |b| <= (R + c) / |theta1 - theta2|.
    const Rational gap = abs(t1 - t2).mignitude();
    const Integer bmax = floor_of((radius + c) / gap);
    const Integer span = 2 * bmax + 1;
    if (span > Integer(static_cast<unsigned long>(opts.max_candidates)))
        throw ResourceError("coefficient box exceeds the enumeration limit");
    const std::size_t rows = span.get_ui();

    std::vector<std::pair<Integer, Integer>> row_bounds(rows);
    Integer total(0);
    for (std::size_t i = 0; i < rows; ++i) {
        Integer b = -bmax + Integer(static_cast<unsigned long>(i));
        Interval bt1 = Rational(b) * t1;
        Interval bt2 = Rational(b) * t2;
        Rational lo = std::max(-radius - bt1.hi, -c - bt2.hi);
        Rational hi = std::min(radius - bt1.lo, c - bt2.lo);
        row_bounds[i] = {ceil_of(lo), floor_of(hi)};
        if (row_bounds[i].second >= row_bounds[i].first) total += row_bounds[i].second - row_bounds[i].first + 1;
    }
    if (total > Integer(static_cast<unsigned long>(opts.max_candidates)))
        throw ResourceError("coefficient box exceeds the enumeration limit");

    std::vector<std::vector<NFElem>> found(rows);
    parallel_for(rows, opts.threads, [&](std::size_t i) {
        Integer b = -bmax + Integer(static_cast<unsigned long>(i));
        for (Integer a = row_bounds[i].first; a <= row_bounds[i].second; ++a) {
            NFElem x(field, {Rational(a), Rational(b)});
            if (compare_abs_to(x, radius, phys) == AbsComparison::Greater) continue;
            if (compare_abs_to(x, c, inter) == AbsComparison::Greater) continue;
            found[i].push_back(std::move(x));
        }
    });
    std::vector<NFElem> out;
    for (auto& row : found)
        for (auto& x : row) out.push_back(std::move(x));
    std::sort(out.begin(), out.end(), [](const NFElem& a, const NFElem& b) { return lex_compare(a, b) < 0; });
    return out;
}

namespace {

Patch zs_patch(const CutProjectScheme& scheme, const Window& window, const Rational& radius, const EnumerationOptions& opts) {
    // Every admissible q has denominator dividing D = prod p^{max(k_p, 0)}; scan n / D
    // with |n / D| <= R and keep those meeting each valuation bound.
    Integer D(1);
    for (const auto& ball : window.padic_balls)
        for (long i = 0; i < ball.level; ++i) D *= ball.prime;
    const Integer nmax = floor_of(radius * Rational(D));
    const Integer span = 2 * nmax + 1;
    if (span > Integer(static_cast<unsigned long>(opts.max_candidates)))
        throw ResourceError("ZS candidate range exceeds the enumeration limit");
    const std::size_t count = span.get_ui();
    std::vector<char> keep(count, 0);
    parallel_for(count, opts.threads, [&](std::size_t i) {
        Rational q(-nmax + Integer(static_cast<unsigned long>(i)), D);
        q.canonicalize();
        for (const auto& ball : window.padic_balls) {
            auto v = padic_valuation(q, ball.prime);
            if (v && *v < -ball.level) return;
        }
        keep[i] = 1;
    });
    Patch patch{scheme.ambient, radius, scheme.describe() + " window " + window.describe(), {}};
    for (std::size_t i = 0; i < count; ++i) {
        if (!keep[i]) continue;
        Rational q(-nmax + Integer(static_cast<unsigned long>(i)), D);
        q.canonicalize();
        patch.points.push_back({NFElem::from_rational(scheme.field, q)});
    }
    patch.normalize();
    return patch;
}

}  // namespace

Patch model_set_patch(const CutProjectScheme& scheme, const Window& window, const Rational& radius,
                      const EnumerationOptions& opts) {
    if (radius <= 0) throw UsageError("patch radius must be > 0");
    scheme.check_window(window);
    if (scheme.kind == SchemeKind::ZS) return zs_patch(scheme, window, radius, opts);

    std::vector<std::vector<NFElem>> axes;
    std::size_t total = 1;
    for (std::size_t i = 0; i < scheme.dim; ++i) {
        axes.push_back(enumerate_quadratic(scheme.ambient, radius, window.real_boxes[i], opts));
        total *= axes.back().size();
        if (total > opts.max_candidates) throw ResourceError("patch size exceeds the enumeration limit");
    }
    Patch patch{scheme.ambient, radius, scheme.describe() + " window " + window.describe(), {}};
    patch.points.reserve(total);
    std::vector<std::size_t> idx(scheme.dim, 0);
    for (std::size_t n = 0; n < total; ++n) {
        Point p;
        p.reserve(scheme.dim);
        for (std::size_t i = 0; i < scheme.dim; ++i) p.push_back(axes[i][idx[i]]);
        patch.points.push_back(std::move(p));
        for (std::size_t i = scheme.dim; i-- > 0;) {
            if (++idx[i] < axes[i].size()) break;
            idx[i] = 0;
        }
    }
    patch.normalize();
    return patch;
}

}  // namespace meyerlab::cps
