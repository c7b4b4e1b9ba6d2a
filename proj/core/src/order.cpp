#include "lfds/order.hpp"

#include <stdexcept>

#include "lfds/errors.hpp"
#include "lfds/intfactor.hpp"

namespace lfds {

Int order_irreducible(const GrPoly& F, const GrPoly& G) {
    if (F.precision() != 1 || G.precision() != 1)
        throw std::invalid_argument("order_irreducible: precision must be 1");
    if (G.is_zero()) throw std::invalid_argument("order_irreducible: G must be nonzero");
    if (G.degree() == 0) return 1;
    if (field_gcd(F, G).degree() != 0)
        throw std::domain_error("order_irreducible: gcd(F, G) != 1");

    Int bound = int_pow(F.spec()->q(), static_cast<uint64_t>(G.degree())) - 1;
    if (bound >= (Int(1) << 63))
        throw resource_error("order_irreducible: q^deg(G) - 1 exceeds the supported 63-bit range");
    uint64_t ord = static_cast<uint64_t>(bound);

    const GrPoly one = GrPoly::one(F.spec(), 1);
    const GrPoly Fr = poly_rem(F, G);
    for (const auto& [rho, mult] : int_factorize(ord)) {
        for (int i = 0; i < mult; ++i) {
            uint64_t candidate = ord / rho;
            if (mod_pow(Fr, Int(candidate), G) == one)
                ord = candidate;
            else
                break;
        }
    }
    return Int(ord);
}

OrderRecord order_prime_power(const GrPoly& F, const GrPoly& G, const Int& base_order, int t) {
    if (t < 1) throw std::invalid_argument("order_prime_power: exponent must be >= 1");
    if (G.degree() < 1) throw std::invalid_argument("order_prime_power: G must be nonconstant");

    const GrPoly Gt = poly_pow(G, t);
    GrPoly w = mod_pow(F, base_order, Gt) - GrPoly::one(F.spec(), 1);

    int s;
    if (w.is_zero()) {
        s = t;  // true saturation is >= t
    } else {
        s = 0;
        while (true) {
            auto [q, r] = poly_divmod(w, G);
            if (!r.is_zero()) break;
            ++s;
            w = std::move(q);
        }
        if (s < 1)
            throw std::domain_error("order_prime_power: base_order is not the order of F mod G");
    }

    const int64_t p = F.spec()->p();
    Int order = base_order;
    Int coverage = s;
    while (coverage < t) {
        coverage *= p;
        order *= p;
    }
    return {base_order, t, s, order};
}

Int order_composite(const GrPoly& F, const GrPoly& M, uint64_t seed) {
    if (F.precision() != 1 || M.precision() != 1)
        throw std::invalid_argument("order_composite: precision must be 1");
    if (M.is_zero()) throw std::invalid_argument("order_composite: M must be nonzero");
    if (M.degree() == 0) return 1;
    if (field_gcd(F, M).degree() != 0)
        throw std::domain_error("order_composite: gcd(F, M) != 1");

    Int result = 1;
    for (const auto& [g, k] : factor(M, seed).factors) {
        Int base = order_irreducible(F, g);
        result = int_lcm(result, order_prime_power(F, g, base, k).order);
    }
    return result;
}

bool omega_step(const GrPoly& f, const GrPoly& m, const GrPoly& witness, const Int& prev_order,
                int eps) {
    if (eps < 2) throw std::invalid_argument("omega_step: eps must be >= 2");
    const auto& spec = f.spec();
    const int64_t p = spec->p();
    for (int64_t c : witness.raw())
        if (c >= p) throw std::invalid_argument("omega_step: witness coefficients must lie in [0, p)");

    const GrPoly me = m.project(eps);
    const GrPoly fe = f.project(eps);
    const GrPoly wit = witness.precision() == eps
                           ? witness
                           : (witness.precision() < eps ? witness.lift_reinterpret(eps)
                                                        : witness.project(eps));
    const Int step_pow = int_pow(Int(p), static_cast<uint64_t>(eps - 1));
    const GrPoly w = mod_pow(wit, step_pow, me);
    const GrPoly c = poly_rem(mod_pow(fe, prev_order, me) * w, me);
    return c != w;
}

}  // namespace lfds
