//! Closed-form values and upper bounds for `P{C_s > 0}` on the unit-area
//! region.

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundKind {
    Exact,
    UpperBound,
    Asymptotic,
}

impl BoundKind {
    pub fn name(&self) -> &'static str {
        match self {
            BoundKind::Exact => "exact",
            BoundKind::UpperBound => "upper-bound",
            BoundKind::Asymptotic => "asymptotic",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        [
            BoundKind::Exact,
            BoundKind::UpperBound,
            BoundKind::Asymptotic,
        ]
        .into_iter()
        .find(|k| k.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundResult {
    pub value: f64,
    pub kind: BoundKind,
}

impl BoundResult {
    fn new(value: f64, kind: BoundKind) -> Self {
        debug_assert!((0.0..=1.0).contains(&value), "{value}");
        Self {
            value: value.clamp(0.0, 1.0),
            kind,
        }
    }
}

/// One transmitter, `n_E` IUD eavesdroppers: the receiver must be the closest
/// of `1 + n_E` exchangeable points to the transmitter.
pub fn exact_single_tx_iud_eve(n_e: usize) -> BoundResult {
    BoundResult::new(1.0 / (1.0 + n_e as f64), BoundKind::Exact)
}

/// `1 - (n_E / (1 + n_E))^n_T`, ignoring overlap between secrecy disks.
pub fn ub_iud_iud(n_t: usize, n_e: usize) -> BoundResult {
    // (n_E/(1+n_E))^n_T = exp(n_T * ln(1 - 1/(1+n_E)))
    let miss = (n_t as f64 * (-1.0 / (1.0 + n_e as f64)).ln_1p()).exp();
    BoundResult::new(-(miss - 1.0), BoundKind::UpperBound)
}

/// Limit of [`ub_iud_iud`] as both counts grow with `n_T / n_E = k`.
pub fn ub_asymptotic(k: f64) -> BoundResult {
    BoundResult::new(-(-k).exp_m1(), BoundKind::Asymptotic)
}

/// Poisson transmitters with rate `lambda_T`, `n_E` IUD eavesdroppers:
/// `1 - exp(-lambda_T / (1 + n_E))`.
pub fn ub_poisson_tx_iud_eve(lambda_t: f64, n_e: usize) -> BoundResult {
    BoundResult::new(
        -(-lambda_t / (1.0 + n_e as f64)).exp_m1(),
        BoundKind::UpperBound,
    )
}

/// One transmitter, Poisson eavesdroppers: `E[1/(1 + L_E)] =
/// (1 - exp(-lambda_E)) / lambda_E`, extended by continuity to 1 at 0.
pub fn exact_single_tx_poisson_eve(lambda_e: f64) -> BoundResult {
    let value = if lambda_e < 1e-8 {
        // series 1 - x/2 + x^2/6; the closed form loses digits near 0
        1.0 - lambda_e / 2.0 + lambda_e * lambda_e / 6.0
    } else {
        -(-lambda_e).exp_m1() / lambda_e
    };
    BoundResult::new(value, BoundKind::Exact)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn single_tx_iud() {
        assert_eq!(exact_single_tx_iud_eve(0).value, 1.0);
        assert_eq!(exact_single_tx_iud_eve(1).value, 0.5);
        close(exact_single_tx_iud_eve(9).value, 0.1, 1e-15);
        assert_eq!(exact_single_tx_iud_eve(3).kind, BoundKind::Exact);
    }

    #[test]
    fn iud_iud_bound() {
        close(ub_iud_iud(1, 1).value, 0.5, 1e-15);
        close(ub_iud_iud(2, 1).value, 0.75, 1e-15);
        close(
            ub_iud_iud(10, 10).value,
            1.0 - (10.0f64 / 11.0).powi(10),
            1e-14,
        );
        close(ub_iud_iud(10, 10).value, 0.61446, 1e-5);
        assert_eq!(ub_iud_iud(5, 0).value, 1.0);
        assert_eq!(ub_iud_iud(2, 1).kind, BoundKind::UpperBound);
    }

    #[test]
    fn asymptotic_bound() {
        assert_eq!(ub_asymptotic(0.0).value, 0.0);
        close(ub_asymptotic(1.0).value, 0.63212, 1e-5);
        close(ub_asymptotic(2.0).value, 0.86466, 1e-5);
    }

    #[test]
    fn poisson_tx_bound() {
        assert_eq!(ub_poisson_tx_iud_eve(0.0, 3).value, 0.0);
        close(ub_poisson_tx_iud_eve(2.0, 1).value, 0.63212, 1e-5);
        close(ub_poisson_tx_iud_eve(1.0, 1).value, 0.39347, 1e-5);
    }

    #[test]
    fn single_tx_poisson() {
        assert_eq!(exact_single_tx_poisson_eve(0.0).value, 1.0);
        close(exact_single_tx_poisson_eve(1e-12).value, 1.0, 1e-11);
        close(exact_single_tx_poisson_eve(1.0).value, 0.63212, 1e-5);
        close(exact_single_tx_poisson_eve(2.0).value, 0.43233, 1e-5);
        // both branches track 1 - x/2 around the switch point
        for x in [0.99e-8, 1.01e-8] {
            close(exact_single_tx_poisson_eve(x).value, 1.0 - x / 2.0, 1e-15);
        }
    }

    #[test]
    fn first_bound_reduces_to_exact_law() {
        for n in 0..200 {
            close(
                ub_iud_iud(1, n).value,
                exact_single_tx_iud_eve(n).value,
                1e-15,
            );
        }
    }

    #[test]
    fn monotone_in_arguments() {
        for n_e in 0..30 {
            for n_t in 1..30 {
                assert!(ub_iud_iud(n_t + 1, n_e).value >= ub_iud_iud(n_t, n_e).value);
                assert!(ub_iud_iud(n_t, n_e + 1).value <= ub_iud_iud(n_t, n_e).value);
            }
            for i in 0..40 {
                let l = i as f64 * 0.5;
                assert!(
                    ub_poisson_tx_iud_eve(l + 0.5, n_e).value
                        >= ub_poisson_tx_iud_eve(l, n_e).value
                );
                assert!(
                    ub_poisson_tx_iud_eve(l, n_e + 1).value <= ub_poisson_tx_iud_eve(l, n_e).value
                );
            }
        }
    }

    #[test]
    fn finite_bound_approaches_asymptote() {
        let n = 100_000usize;
        for k in [0.5, 1.0, 2.0] {
            let n_t = (k * n as f64).ceil() as usize;
            close(ub_iud_iud(n_t, n).value, ub_asymptotic(k).value, 1e-3);
        }
    }

    #[test]
    fn kind_names() {
        for k in [
            BoundKind::Exact,
            BoundKind::UpperBound,
            BoundKind::Asymptotic,
        ] {
            assert_eq!(BoundKind::from_name(k.name()), Some(k));
        }
    }
}
