//! Sampled checks of the strong-matrix-norm axioms.

use crate::error::Result;
use crate::graded::GradedOperator;
use crate::linalg;
use crate::report::{PropertyCheck, Report};
use crate::scalar::{lit, to_f64, CMat, Real};

use super::strong::{corner_embed, cross_embed, direct_sum, scalar_compress, strong_norm};

pub const DIRECT_SUM: &str = "direct-sum (SigmaM1)";
pub const COMPRESSION: &str = "scalar compression (SigmaM2)";
pub const HERMITIAN_CORNER: &str = "hermitian corner (hSigmaM*)";
pub const DISPLAY_CHAIN: &str = "cross-diagonal chain";
pub const DERIVED_IS_OPERATOR: &str = "derived norm = operator norm";

/// Runs every axiom on the samples. Direct sums pair consecutive samples on a
/// common base space, or a sample with a multiple of its involute; compressions use every scalar whose column count
/// matches a sample's level.
pub fn check_sigma_axioms<T: Real>(samples: &[GradedOperator<T>], scalars: &[CMat<T>], tol: T) -> Result<Report> {
    let inner = tol * lit(0.1);
    let s = |x: &GradedOperator<T>| -> Result<f64> { Ok(to_f64(strong_norm(x, inner)?.value)) };
    let tol = to_f64(tol);

    let mut m1 = PropertyCheck::new(DIRECT_SUM);
    let mut m2 = PropertyCheck::new(COMPRESSION);
    let mut h = PropertyCheck::new(HERMITIAN_CORNER);
    let mut chain = PropertyCheck::new(DISPLAY_CHAIN);
    let mut derived = PropertyCheck::new(DERIVED_IS_OPERATOR);

    for (i, x) in samples.iter().enumerate() {
        let sx = s(x)?;

        let y = match samples.get(i + 1).filter(|y| y.space().base() == x.space().base()) {
            Some(y) => y.clone(),
            None => x.superinvolve().scale(crate::scalar::cx(0.5, -0.25)),
        };
        let lhs = s(&direct_sum(x, &y)?)?;
        m1.record(i, tol - (lhs - sx.max(s(&y)?)).abs());

        for (j, a) in scalars.iter().enumerate() {
            if a.ncols() != x.space().level {
                continue;
            }
            let na = to_f64(linalg::op_norm(a));
            let lhs = s(&scalar_compress(a, x)?)?;
            m2.record(i * scalars.len() + j, na * na * sx + tol - lhs);
        }

        let herm = x.hermitian_part();
        let corner = 2.0 * s(&corner_embed(&herm))?;
        h.record(i, tol - (s(&herm)? - corner).abs());

        let (off, diag) = cross_embed(x);
        let (sd, so) = (s(&diag)?, s(&off)?);
        let dx = 2.0 * s(&corner_embed(x))?;
        let op = to_f64(x.op_norm());
        let margin = [tol - (sx - sd).abs(), tol - (sd - so).abs(), dx + tol - so, tol - (dx - op).abs()]
            .into_iter()
            .fold(f64::INFINITY, f64::min);
        chain.record(i, margin);
        derived.record(i, tol - (dx - op).abs());
    }

    let mut r = Report::default();
    for c in [m1, m2, h, chain, derived] {
        r.push(c);
    }
    Ok(r)
}
