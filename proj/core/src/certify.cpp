#include "orbita/certify.hpp"

#include <cfloat>
#include <cmath>

namespace orbita {

DescentCertificate certify_descent(const Morphism& f) {
    if (f.dim() != 1) throw std::invalid_argument("certify_descent: P^1 only");
    const unsigned d = f.degree();
    if (d < 2) throw domain_error("certify_descent: degree hypothesis d >= 2 violated");
    BinaryForm F = f.forms()[0].to_binary();
    BinaryForm G = f.forms()[1].to_binary();
    SylvesterCofactors cf = solve_sylvester_cofactors(F, G); // throws if Res = 0

    DescentCertificate cert;
    cert.d = d;
    cert.resultant = cf.res;
    cert.norm_x = cf.px.l1_norm() + cf.qx.l1_norm();
    cert.norm_y = cf.py.l1_norm() + cf.qy.l1_norm();
    cert.B = std::max(cert.norm_x, cert.norm_y);
    if (cert.B < 1) cert.B = 1;
    cert.M = iroot_floor(cert.B, d - 1);
    if (cert.M < 1) cert.M = 1;
    return cert;
}

CanonicalHeightValue canonical_height(const Morphism& f, const DescentCertificate& cert,
                                      const ProjPoint& p, double target_radius,
                                      size_t coord_bit_limit) {
    if (target_radius <= 0)
        throw std::invalid_argument("canonical_height: target radius must be positive");
    const double d = static_cast<double>(cert.d);
    // One-step defect: -log B <= log H(f(P)) - d log H(P) <= log max_i ||F_i||_1.
    const double C = std::max(log_approx(cert.B), log_approx(f.max_l1_norm()));

    unsigned n_iter = 0;
    double bound = C / (d - 1.0);
    while (bound > target_radius / 2 && n_iter < 64) {
        bound /= d;
        ++n_iter;
    }
    if (bound > target_radius / 2)
        throw domain_error("canonical_height: iteration budget exceeded");

    ProjPoint q = p;
    for (unsigned i = 0; i < n_iter; ++i) {
        q = f.evaluate(q);
        for (const auto& c : q.coords()) {
            if (mpz_sizeinbase(c.get_mpz_t(), 2) > coord_bit_limit)
                throw domain_error("canonical_height: iteration budget exceeded");
        }
    }
    double h = log_approx(std::max(q.height(), BigInt(1)));
    CanonicalHeightValue out;
    out.value = h / std::pow(d, static_cast<double>(n_iter));
    // factor 2 slack absorbs double rounding in the log evaluations
    out.radius = 2.0 * bound + 8.0 * DBL_EPSILON * (std::fabs(out.value) + 1.0);
    out.iterations = n_iter;
    return out;
}

} // namespace orbita
