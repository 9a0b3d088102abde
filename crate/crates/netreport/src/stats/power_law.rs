//! Maximum-likelihood exponent for a discrete power-law degree tail.

/// Fitted exponent together with what the fit was based on.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PowerLawFit {
    pub gamma: f64,
    /// Smallest degree included in the fit.
    pub d_min: usize,
    /// Number of degrees at or above `d_min`.
    pub included: usize,
}

/// Fit `gamma = 1 + n / sum(ln(d / d_min))` over degrees `>= d_min`.
///
/// `d_min` defaults to the smallest positive degree. Zero degrees never
/// enter the fit. Returns the reason as an error when the sequence has no
/// positive degrees or the log-sum vanishes (every included degree equals
/// `d_min`, so the exponent is unbounded).
pub fn estimate_exponent(
    degrees: &[usize],
    d_min: Option<usize>,
) -> Result<PowerLawFit, String> {
    let d_min = match d_min {
        Some(d) if d >= 1 => d,
        Some(_) => return Err("minimum degree must be at least 1".to_string()),
        None => match degrees.iter().copied().filter(|&d| d > 0).min() {
            Some(d) => d,
            None => return Err("no positive degrees".to_string()),
        },
    };
    let mut included = 0usize;
    let mut log_sum = 0.0f64;
    for &d in degrees {
        if d >= d_min {
            included += 1;
            log_sum += (d as f64 / d_min as f64).ln();
        }
    }
    if included == 0 {
        return Err(format!("no degrees at or above the minimum degree {d_min}"));
    }
    if log_sum <= 0.0 {
        return Err(format!(
            "zero log-sum: every included degree equals the minimum degree {d_min}"
        ));
    }
    Ok(PowerLawFit { gamma: 1.0 + included as f64 / log_sum, d_min, included })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sequence_matches_closed_form() {
        // Degrees 1, 1, 2, 4 with d_min 1: gamma = 1 + 4 / ln 8.
        let fit = estimate_exponent(&[1, 1, 2, 4], None).expect("fit");
        assert_eq!(fit.d_min, 1);
        assert_eq!(fit.included, 4);
        assert!((fit.gamma - (1.0 + 4.0 / 8f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn explicit_minimum_restricts_the_tail() {
        // Degrees 2, 2, 4 with d_min 2: gamma = 1 + 3 / ln 2.
        let fit = estimate_exponent(&[2, 2, 4], Some(2)).expect("fit");
        assert_eq!(fit.included, 3);
        assert!((fit.gamma - (1.0 + 3.0 / 2f64.ln())).abs() < 1e-12);

        // Same data, higher cut: only 2 and 4 survive a cut at 2 in the
        // first sequence.
        let fit = estimate_exponent(&[1, 1, 2, 4], Some(2)).expect("fit");
        assert_eq!(fit.included, 2);
        assert!((fit.gamma - (1.0 + 2.0 / 2f64.ln())).abs() < 1e-12);
    }

    #[test]
    fn zero_degrees_are_excluded() {
        let with_zeros = estimate_exponent(&[0, 0, 1, 1, 2, 4], None).expect("fit");
        let without = estimate_exponent(&[1, 1, 2, 4], None).expect("fit");
        assert_eq!(with_zeros, without);
    }

    #[test]
    fn constant_sequence_has_no_exponent() {
        let err = estimate_exponent(&[3, 3, 3], None).expect_err("degenerate");
        assert!(err.contains("zero log-sum"));
    }

    #[test]
    fn empty_and_all_zero_sequences_fail() {
        assert!(estimate_exponent(&[], None).is_err());
        assert!(estimate_exponent(&[0, 0], None).is_err());
    }

    #[test]
    fn minimum_above_all_degrees_fails() {
        let err = estimate_exponent(&[1, 2, 3], Some(10)).expect_err("no tail");
        assert!(err.contains("at or above"));
    }
}
