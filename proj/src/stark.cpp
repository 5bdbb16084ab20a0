#include "zzlattice/stark.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace zzlattice {
namespace stark {

double conditional_stark_shift(double eps, double delta) {
    if (delta == 0.0)
        throw ConfigError(
            "delta_t: must be nonzero (a resonant drive is outside the "
            "dispersive model's validity)");
    return eps * eps / delta;
}

double cancellation_drive(double eps0, double eps1) {
    return -(eps0 + eps1) / 2.0;
}

StarkReport evaluate(const StarkInputs& in) {
    if (in.delta_t == 0.0)
        throw ConfigError(
            "delta_t: must be nonzero (a resonant drive is outside the "
            "dispersive model's validity)");

    const double ratio =
        std::max(std::abs(in.eps0), std::abs(in.eps1)) / std::abs(in.delta_t);
    if (ratio >= 0.5) {
        std::ostringstream os;
        os << "eps/delta_t: perturbative validity needs max|eps|/|delta_t| < "
              "0.5, got "
           << ratio;
        throw ConfigError(os.str());
    }

    StarkReport rep;
    rep.delta0 = conditional_stark_shift(in.eps0, in.delta_t);
    rep.delta1 = conditional_stark_shift(in.eps1, in.delta_t);
    rep.mu = in.eps0 * in.eps1 / 2.0;
    rep.zeta_diff_form = rep.delta0 - rep.delta1;
    rep.zeta_mu_form = 2.0 * rep.mu * (in.eps0 + in.eps1) / in.delta_t;
    rep.form_discrepancy = rep.zeta_mu_form - rep.zeta_diff_form;
    rep.zeta_with_target =
        (2.0 * rep.mu / in.delta_t) * (in.eps0 + in.eps1 + 2.0 * in.eps_t);
    rep.perturbative_warning = ratio > 0.2;
    rep.target_tone_warning = std::abs(in.eps_t) / std::abs(in.delta_t) > 0.1;
    return rep;
}

double zz_from_stark(const StarkInputs& in) {
    StarkInputs no_target = in;
    no_target.eps_t = 0.0;
    return evaluate(no_target).zeta_mu_form;
}

double zz_with_target_drive(const StarkInputs& in) {
    return evaluate(in).zeta_with_target;
}

}  // namespace stark
}  // namespace zzlattice
