#pragma once

#include "zzlattice/errors.hpp"

namespace zzlattice {
namespace stark {

// Closed-form off-resonant Stark model. All inputs share one unit (MHz here);
// outputs are in the same unit. eps0/eps1 are the qubit-state-conditioned
// effective drive amplitudes on the target, eps_t an additional direct target
// tone, delta_t the drive-target detuning.
struct StarkInputs {
    double eps0 = 0.0;
    double eps1 = 0.0;
    double eps_t = 0.0;
    double delta_t = 0.0;
};

struct StarkReport {
    double delta0 = 0.0;  // conditional shift for control |0>
    double delta1 = 0.0;  // conditional shift for control |1>
    double mu = 0.0;      // eps0*eps1/2
    // The two printed closed forms of the no-target-drive ZZ rate. They are
    // not algebraically equal; both are reported with their discrepancy, and
    // the mu-form is the canonical return value.
    double zeta_diff_form = 0.0;  // delta0 - delta1 = (eps0^2 - eps1^2)/delta_t
    double zeta_mu_form = 0.0;    // 2*mu*(eps0 + eps1)/delta_t
    double form_discrepancy = 0.0;
    // With the direct target tone: zeta = (2*mu/delta_t)*(eps0+eps1+2*eps_t).
    double zeta_with_target = 0.0;
    bool perturbative_warning = false;  // max|eps|/|delta_t| > 0.2
    bool target_tone_warning = false;   // |eps_t|/|delta_t| > 0.1
};

// Second-order shift eps^2/delta. Throws ConfigError when delta == 0
// (resonant drive is outside the model's validity).
double conditional_stark_shift(double eps, double delta);

// Canonical ZZ value without a target tone (mu-form).
double zz_from_stark(const StarkInputs& in);

// ZZ with the direct target tone included.
double zz_with_target_drive(const StarkInputs& in);

// Target-tone amplitude that nulls zz_with_target_drive: -(eps0+eps1)/2.
double cancellation_drive(double eps0, double eps1);

// Full report. Enforces the perturbative guard max|eps|/|delta_t| < 0.5
// (ConfigError beyond it) and sets soft warning flags.
StarkReport evaluate(const StarkInputs& in);

}  // namespace stark
}  // namespace zzlattice
