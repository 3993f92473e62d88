//! Diagonal norms of cyclic group algebras.

use crate::error::Result;
use crate::group::{delta_k_norm, dual_involution_check, CyclicGroupElement, GroupNormMode, MAX_ORDER, MAX_POWER};
use crate::report::{PropertyCheck, Report};
use crate::rng;

use super::{golden, SuiteConfig};

pub fn run(cfg: &SuiteConfig) -> Result<Report> {
    let mut rep = Report::default();
    let budgets = &cfg.budgets;

    let mut gens = PropertyCheck::new("generators have norm 1 for n <= 4, k <= 3, both modes [1e-6]");
    let mut idx = 0;
    for n in 1..=MAX_ORDER {
        for g in 0..n {
            let c = CyclicGroupElement::<f64>::generator(n, g)?;
            for k in 1..=MAX_POWER {
                for mode in [GroupNormMode::Haagerup, GroupNormMode::Projective] {
                    let (lo, hi) = delta_k_norm(&c, k, mode, budgets)?.ends();
                    gens.record(idx, 1e-6 - (lo - 1.0).abs().max((hi - 1.0).abs()));
                    idx += 1;
                }
            }
        }
    }
    rep.push(gens);

    let mut mono = PropertyCheck::new("norm sequence is nondecreasing in k, both modes [1e-6]");
    let mut dft = PropertyCheck::new("k=1 brackets equal the DFT peak [1e-10]");
    let mut inv = PropertyCheck::new("dual involution is involutive, antilinear and isometric at k=2 [1e-5]");
    for i in 0..cfg.share(20) {
        let mut r = rng::derive_rng(cfg.stream(41), i as u64);
        let n = 1 + (rng::uniform::<f64>(&mut r, 0.0, MAX_ORDER as f64) as usize).min(MAX_ORDER - 1);
        let c = CyclicGroupElement::<f64>::random(n, &mut r)?;
        let mut margin = f64::INFINITY;
        for mode in [GroupNormMode::Haagerup, GroupNormMode::Projective] {
            let brackets = (1..=MAX_POWER).map(|k| delta_k_norm(&c, k, mode, budgets)).collect::<Result<Vec<_>>>()?;
            for w in brackets.windows(2) {
                margin = margin.min(w[1].upper - w[0].lower + 1e-6);
            }
            let (lo, hi) = brackets[0].ends();
            let peak = c.dft_norm();
            dft.record(i, 1e-10 - (lo - peak).abs().max((hi - peak).abs()));
        }
        mono.record(i, margin);
        let rep_inv = dual_involution_check(&c, 2, GroupNormMode::Haagerup, budgets, 1e-5)?;
        let m = if rep_inv.involutive && rep_inv.antilinear { 1e-5 - rep_inv.lower_gap.max(rep_inv.upper_gap) } else { -1.0 };
        inv.record(i, m);
    }
    rep.push(mono);
    rep.push(dft);
    rep.push(inv);

    rep.push(golden::group(budgets));
    Ok(rep)
}
