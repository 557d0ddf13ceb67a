#include "meyerlab/cps/certificate.hpp"

#include "meyerlab/errors.hpp"
#include "meyerlab/exactnum/padic.hpp"

namespace meyerlab::cps {

namespace {

Integer int_pow(const Integer& p, long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

Rational rational_pow(const Integer& p, long e) {
    if (e >= 0) return Rational(int_pow(p, e));
    Rational r(Integer(1), int_pow(p, -e));
    r.canonicalize();
    return r;
}

bool valuation_at_least(const Rational& q, const Integer& p, long bound) {
    auto v = padic_valuation(q, p);
    return !v || *v >= bound;
}

std::vector<Point> product_of(const std::vector<std::vector<NFElem>>& axes) {
    std::vector<Point> out{Point{}};
    for (const auto& axis : axes) {
        std::vector<Point> next;
        for (const auto& p : out)
            for (const auto& t : axis) {
                Point q = p;
                q.push_back(t);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    return out;
}

}  // namespace

GlobalCoveringCertificate global_covering_certificate(const CutProjectScheme& scheme, const Window& outer, const Window& inner,
                                                      const GlobalCoverOptions& opts) {
    scheme.check_window(outer);
    scheme.check_window(inner);
    GlobalCoveringCertificate cert;
    cert.scheme = scheme.describe();
    cert.outer = outer;
    cert.inner = inner;
    if (outer.subset_of(inner)) {
        cert.trivial = true;
        cert.translates.push_back(scheme.ambient.identity());
        return cert;
    }
    if (scheme.kind == SchemeKind::Galois) {
        std::vector<std::vector<NFElem>> axes;
        for (std::size_t i = 0; i < scheme.dim; ++i) {
            cert.real_covers.push_back(cover_interval(scheme.ambient, outer.real_boxes[i], inner.real_boxes[i], opts.interval));
            axes.push_back(cert.real_covers.back().translates());
        }
        cert.translates = product_of(axes);
        return cert;
    }
    // ZS: W1/W2 = prod_p p^{-k1}Z_p / p^{-k2}Z_p, cyclic of order N = prod p^{d_p},
    // d_p = max(k1 - k2, 0). The multiples j*m, 0 <= j < N, of
    // m = prod_{d_p>0} p^{-k1_p} * prod_{d_p=0} p^{max(0,-k2_p)} hit every class (CRT).
    Rational step(1);
    Integer count(1);
    for (std::size_t i = 0; i < outer.padic_balls.size(); ++i) {
        const auto& p = outer.padic_balls[i].prime;
        const long k1 = outer.padic_balls[i].level;
        const long k2 = inner.padic_balls[i].level;
        if (k1 > k2) {
            step *= rational_pow(p, -k1);
            count *= int_pow(p, k1 - k2);
        } else {
            step *= rational_pow(p, std::max(0L, -k2));
        }
    }
    if (count > 1'000'000) throw ResourceError("coset cover larger than 10^6 translates");
    cert.coset_step = step;
    cert.coset_count = count.get_ui();
    for (std::size_t j = 0; j < cert.coset_count; ++j)
        cert.translates.push_back({NFElem::from_rational(scheme.field, step * static_cast<long>(j))});
    return cert;
}

bool replay(const GlobalCoveringCertificate& cert, const CutProjectScheme& scheme) {
    if (cert.scheme != scheme.describe()) return false;
    try {
        scheme.check_window(cert.outer);
        scheme.check_window(cert.inner);
    } catch (const UsageError&) {
        return false;
    }
    for (const auto& t : cert.translates)
        if (!scheme.in_lattice(t)) return false;
    if (cert.trivial) return cert.outer.subset_of(cert.inner) && !cert.translates.empty();

    if (scheme.kind == SchemeKind::Galois) {
        if (cert.real_covers.size() != scheme.dim) return false;
        std::vector<std::vector<NFElem>> axes;
        for (std::size_t i = 0; i < scheme.dim; ++i) {
            const auto& c = cert.real_covers[i];
            if (c.target != cert.outer.real_boxes[i] || c.halfwidth != cert.inner.real_boxes[i]) return false;
            if (!replay(c, scheme.ambient)) return false;
            axes.push_back(c.translates());
        }
        return product_of(axes) == cert.translates;
    }

    // ZS: distinct classes, right count, every translate inside W1 + W2.
    Integer index(1);
    for (std::size_t i = 0; i < cert.outer.padic_balls.size(); ++i) {
        const long k1 = cert.outer.padic_balls[i].level;
        const long k2 = cert.inner.padic_balls[i].level;
        if (k1 > k2) index *= int_pow(cert.outer.padic_balls[i].prime, k1 - k2);
    }
    if (Integer(static_cast<unsigned long>(cert.translates.size())) != index) return false;
    for (const auto& t : cert.translates) {
        for (std::size_t i = 0; i < cert.outer.padic_balls.size(); ++i) {
            const auto& p = cert.outer.padic_balls[i].prime;
            const long k1 = cert.outer.padic_balls[i].level;
            const long k2 = cert.inner.padic_balls[i].level;
            const long bound = k1 > k2 ? -k1 : -k2;
            if (!valuation_at_least(t[0].rational_value(), p, bound)) return false;
        }
    }
    for (std::size_t a = 0; a < cert.translates.size(); ++a)
        for (std::size_t b = a + 1; b < cert.translates.size(); ++b) {
            Rational d = cert.translates[a][0].rational_value() - cert.translates[b][0].rational_value();
            bool distinct = false;
            for (const auto& ball : cert.inner.padic_balls)
                if (!valuation_at_least(d, ball.prime, -ball.level)) distinct = true;
            if (!distinct) return false;
        }
    return true;
}

ApproximateLatticeCertificate approximate_lattice_certificate(const CutProjectScheme& scheme, const Window& window,
                                                              const Rational& patch_radius, const EnumerationOptions& enumeration,
                                                              const GlobalCoverOptions& opts) {
    scheme.check_window(window);
    ApproximateLatticeCertificate cert;
    cert.window = window;
    cert.doubled = window_product(window, window);
    cert.cover = global_covering_certificate(scheme, cert.doubled, window, opts);
    cert.patch_radius = patch_radius;
    Patch patch = model_set_patch(scheme, window, patch_radius, enumeration);
    cert.delone = verify::delone_certify(patch, patch_radius / 2);
    return cert;
}

bool replay(const ApproximateLatticeCertificate& cert, const CutProjectScheme& scheme) {
    if (!(window_product(cert.window, cert.window) == cert.doubled)) return false;
    if (!(cert.cover.outer == cert.doubled) || !(cert.cover.inner == cert.window)) return false;
    return replay(cert.cover, scheme);
}

}  // namespace meyerlab::cps
