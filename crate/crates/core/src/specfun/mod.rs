//! Gamma, log-gamma, Riemann zeta and the Dirichlet eta and lambda functions
//! on real arguments.
//!
//! | Function | Domain |
//! |----------|--------|
//! | [`gamma`] | x ∉ {0, −1, −2, …} |
//! | [`log_gamma`] | x > 0 |
//! | [`zeta`] | x > 1, four evaluation routes ([`ZetaRoute`]) |
//! | [`eta`], [`lambda`] | x > 1 |

mod gamma;
mod zeta;

pub use gamma::{gamma, ln_gamma_abs, log_gamma, GAMMA_MAX_ARG};
pub use zeta::{eta, lambda, riemann_zeta, zeta, ZetaRoute, MAX_SERIES_TERMS};

/// Even-index Bernoulli numbers B₀, B₂, …, B₄₀.
pub(crate) const BERNOULLI_EVEN: [f64; 21] = [
    1.0,
    0.16666666666666666,
    -0.03333333333333333,
    0.023809523809523808,
    -0.03333333333333333,
    0.07575757575757576,
    -0.2531135531135531,
    1.1666666666666667,
    -7.092156862745098,
    54.971177944862156,
    -529.1242424242424,
    6192.123188405797,
    -86580.25311355312,
    1425517.1666666667,
    -27298231.067816094,
    601580873.9006424,
    -15116315767.092157,
    429614643061.1667,
    -13711655205088.332,
    488332318973593.2,
    -1.9296579341940068e16,
];
