//! Large-n behaviour of the entropy: phase function, limiting divergence,
//! zero subsequences and the trigonometric-sum identities behind them.

pub mod angle;
pub mod identities;
pub mod limits;
pub mod phase;
pub mod subsequence;

pub use angle::{continued_fraction_guess, test_angles, AngleClass, RationalAngle};
pub use identities::{identity_suite, CheckKind, IdentityCheck};
pub use limits::{
    chebyshev_t_limit, d_infinity, divergence_error, lambda_two_limits_check,
    lambda_two_limits_with, odd_gap_bound, periodic_average, s_hat_ks, s_hat_n_empirical,
    PeriodicAverage, IRRATIONAL_D_INFINITY, IRRATIONAL_S_HAT,
};
pub use phase::{
    asymptotic_pn, default_epsilon_schedule, hilbert_phase_term, phase, pv_integral_oracle,
};
pub use subsequence::{
    max_gap_over_zeros, primes, subsequence, zero_entropy_gap, SubsequenceItem, SubsequenceKind,
};
