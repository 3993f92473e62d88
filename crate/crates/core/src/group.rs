//! Diagonal elements `Σ c_g g⊗…⊗g` of tensor powers of `C*(ℤ/n)`, realized
//! through the regular representation.

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng;
use crate::scalar::{cabs, cis, creal, lit, CMat, Cx, Real};
use crate::tensor::{
    apply_link, haagerup_norm, optimal_link, projective_norm, Method, NormBracket, TensorConfig, TensorElement,
    UpperWitness,
};

pub const MAX_ORDER: usize = 4;
pub const MAX_POWER: usize = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CyclicGroupElement<T: Real> {
    n: usize,
    coeffs: Vec<Cx<T>>,
}

impl<T: Real> CyclicGroupElement<T> {
    pub fn new(coeffs: Vec<Cx<T>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::EmptyDim);
        }
        if coeffs.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite);
        }
        Ok(Self { n: coeffs.len(), coeffs })
    }

    /// The group element `g` itself.
    pub fn generator(n: usize, g: usize) -> Result<Self> {
        if n == 0 || g >= n {
            return Err(Error::InvalidConfig(format!("group element {g} of ℤ/{n}")));
        }
        let mut c = vec![Cx::new(T::zero(), T::zero()); n];
        c[g] = creal(T::one());
        Self::new(c)
    }

    pub fn random(n: usize, rng: &mut rng::SampleRng) -> Result<Self> {
        Self::new((0..n).map(|_| rng::complex_normal(rng)).collect())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &[Cx<T>] {
        &self.coeffs
    }

    /// `Σ c_g g ↦ Σ c̄_g g⁻¹`.
    pub fn dual_involution(&self) -> Self {
        let n = self.n;
        let coeffs = (0..n).map(|g| self.coeffs[(n - g) % n].conj()).collect();
        Self { n, coeffs }
    }

    pub fn scaled(&self, s: Cx<T>) -> Self {
        Self { n: self.n, coeffs: self.coeffs.iter().map(|c| *c * s).collect() }
    }

    /// `max_χ |Σ c_g χ(g)|`, the norm in `C*(ℤ/n)`.
    pub fn dft_norm(&self) -> T {
        (0..self.n).map(|j| cabs(self.character_sum(j))).fold(T::zero(), T::max)
    }

    fn character_sum(&self, j: usize) -> Cx<T> {
        let step = T::two_pi() / lit(self.n as f64);
        self.coeffs
            .iter()
            .enumerate()
            .fold(Cx::new(T::zero(), T::zero()), |s, (g, c)| s + *c * cis(step * lit(((g * j) % self.n) as f64)))
    }
}

/// `g ↦ diag(ζ^{gj})_{j}`, `ζ = e^{2πi/n}`.
pub fn regular_rep<T: Real>(n: usize) -> Result<Vec<CMat<T>>> {
    if n == 0 {
        return Err(Error::EmptyDim);
    }
    let step = T::two_pi() / lit(n as f64);
    Ok((0..n)
        .map(|g| {
            let d: Vec<_> = (0..n).map(|j| cis(step * lit(((g * j) % n) as f64))).collect();
            linalg::diag_from(&d)
        })
        .collect())
}

/// `Σ c_g g^{⊗k}` with the group elements carrying nonzero coefficients.
#[derive(Debug, Clone)]
pub struct DiagonalTensor<T: Real> {
    pub power: usize,
    pub order: usize,
    /// `(c_g, image of g)` for every `g` with `c_g ≠ 0`.
    pub terms: Vec<(Cx<T>, CMat<T>)>,
}

impl<T: Real> DiagonalTensor<T> {
    /// The element as a matrix of size `n^k`.
    pub fn kron_matrix(&self) -> CMat<T> {
        let n = self.order;
        let size = n.pow(self.power as u32);
        self.terms.iter().fold(linalg::zeros(size, size), |acc, (c, u)| {
            let mut m = u.clone();
            for _ in 1..self.power {
                m = linalg::kron(&m, u);
            }
            acc + m * *c
        })
    }

    /// Two-fold element `Σ c_g g ⊗ g`.
    pub fn as_pair(&self) -> Result<TensorElement<T>> {
        let n = self.order;
        TensorElement::new(n, n, self.terms.iter().map(|(c, u)| (u * *c, u.clone())).collect())
    }
}

pub fn delta_k_element<T: Real>(c: &CyclicGroupElement<T>, k: usize) -> Result<DiagonalTensor<T>> {
    if k == 0 {
        return Err(Error::InvalidConfig("tensor power must be at least 1".into()));
    }
    let reps = regular_rep::<T>(c.order())?;
    let terms = c
        .coeffs()
        .iter()
        .zip(reps)
        .filter(|(c, _)| c.norm_sqr() > T::zero())
        .map(|(c, u)| (*c, u))
        .collect();
    Ok(DiagonalTensor { power: k, order: c.order(), terms })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupNormMode {
    Haagerup,
    Projective,
}

impl GroupNormMode {
    pub fn name(&self) -> &'static str {
        match self {
            GroupNormMode::Haagerup => "haagerup",
            GroupNormMode::Projective => "projective",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "haagerup" => Ok(GroupNormMode::Haagerup),
            "projective" => Ok(GroupNormMode::Projective),
            other => Err(Error::Unknown { what: "group norm mode", value: other.into() }),
        }
    }
}

const SPATIAL_NOTE: &str = "spatial: largest character sum";
const CHAIN_ROUNDS: usize = 6;

/// Row `[c_g g]`, block diagonal `⊕ g`, column `[g]`: a chain for `Σ c_g g⊗g⊗g`.
fn triple_chain<T: Real>(d: &DiagonalTensor<T>) -> (CMat<T>, CMat<T>, CMat<T>) {
    let n = d.order;
    let r = d.terms.len();
    let mut row = linalg::zeros::<T>(n, r * n);
    let mut col = linalg::zeros::<T>(r * n, n);
    let mids: Vec<&CMat<T>> = d.terms.iter().map(|(_, u)| u).collect();
    for (k, (c, u)) in d.terms.iter().enumerate() {
        row.view_mut((0, k * n), (n, n)).copy_from(&(u * *c));
        col.view_mut((k * n, 0), (n, n)).copy_from(u);
    }
    (row, linalg::block_diag(&mids), col)
}

/// Chain of three factors, each link re-balanced in turn by the convex solve.
fn triple_haagerup<T: Real>(d: &DiagonalTensor<T>, cfg: &TensorConfig) -> UpperWitness<T> {
    let r = d.terms.len();
    let (mut x1, mut x2, mut x3) = triple_chain(d);
    let value = |a: &CMat<T>, b: &CMat<T>, c: &CMat<T>| linalg::op_norm(a) * linalg::op_norm(b) * linalg::op_norm(c);
    let mut best = value(&x1, &x2, &x3);
    for _ in 0..CHAIN_ROUNDS {
        let before = best;
        if let Some((a, b)) = optimal_link(&x1, &x2, r, 10 * cfg.iterations).ok().and_then(|g| apply_link(&x1, &x2, &g)) {
            let v = value(&a, &b, &x3);
            if v < best {
                (x1, x2, best) = (a, b, v);
            }
        }
        if let Some((b, c)) = optimal_link(&x2, &x3, r, 10 * cfg.iterations).ok().and_then(|g| apply_link(&x2, &x3, &g)) {
            let v = value(&x1, &b, &c);
            if v < best {
                (x2, x3, best) = (b, c, v);
            }
        }
        if before - best <= lit::<T>(1e-12) * before {
            break;
        }
    }
    UpperWitness::Chain(vec![x1, x2, x3])
}

/// Weighted terms `(Σ_g |G_gk c_g|, Σ_g (G⁻¹)_kg g)` for `Σ_g (c_g g⊗g) ⊗ g`;
/// the weights bound the projective norms of the left cofactors since
/// `‖g⊗g‖_∧ = 1`.
fn triple_projective_terms<T: Real>(d: &DiagonalTensor<T>, g: &CMat<T>) -> Option<(T, Vec<(T, CMat<T>)>)> {
    let gi = g.clone().try_inverse()?;
    let r = d.terms.len();
    let n = d.order;
    let terms: Vec<(T, CMat<T>)> = (0..r)
        .map(|k| {
            let w = (0..r).fold(T::zero(), |s, j| s + cabs(g[(j, k)] * d.terms[j].0));
            let m = (0..r).fold(linalg::zeros::<T>(n, n), |acc, j| acc + &d.terms[j].1 * gi[(k, j)]);
            (w, m)
        })
        .collect();
    let v = UpperWitness::WeightedSum(terms.clone()).value();
    v.is_finite().then_some((v, terms))
}

fn triple_projective<T: Real>(d: &DiagonalTensor<T>, cfg: &TensorConfig) -> UpperWitness<T> {
    let r = d.terms.len();
    let mut best = triple_projective_terms(d, &linalg::identity(r)).expect("identity is invertible");
    for restart in 1..cfg.restarts {
        let mut rg = rng::derive_rng(cfg.seed, restart as u64);
        let mut g = linalg::identity::<T>(r) + rng::gaussian_matrix::<T>(&mut rg, r, r) * creal(lit::<T>(0.5));
        let Some(mut cur) = triple_projective_terms(d, &g) else { continue };
        let mut step = lit::<T>(0.3);
        for _ in 0..cfg.iterations {
            let z = rng::gaussian_matrix::<T>(&mut rg, r, r);
            let z = &z * creal(step / linalg::op_norm(&z).max(lit(1e-300)));
            let cand = &g * (linalg::identity::<T>(r) + z);
            match triple_projective_terms(d, &cand) {
                Some(v) if v.0 < cur.0 => {
                    (g, cur) = (cand, v);
                    step = (step * lit(1.3)).min(T::one());
                }
                _ => step = (step * lit(0.8)).max(lit(1e-7)),
            }
        }
        if cur.0 < best.0 {
            best = cur;
        }
    }
    UpperWitness::WeightedSum(best.1)
}

/// Norm bracket of `Σ c_g g^{⊗k}` for `k ≤ 3`, `n ≤ 4`.
pub fn delta_k_norm<T: Real>(
    c: &CyclicGroupElement<T>,
    k: usize,
    mode: GroupNormMode,
    cfg: &TensorConfig,
) -> Result<NormBracket<T>> {
    cfg.validate()?;
    if k == 0 || k > MAX_POWER || c.order() > MAX_ORDER {
        return Err(Error::Budget(format!("need 1 ≤ k ≤ {MAX_POWER} and n ≤ {MAX_ORDER}, got k = {k}, n = {}", c.order())));
    }
    let d = delta_k_element(c, k)?;
    let lower = linalg::op_norm(&d.kron_matrix());
    if d.terms.is_empty() {
        return Ok(NormBracket { lower, upper: T::zero(), method: Method::Spatial, upper_witness: UpperWitness::Zero, lower_witness: SPATIAL_NOTE.into() });
    }
    let spatial = |method, upper_witness: UpperWitness<T>| {
        let upper = upper_witness.value();
        Ok(NormBracket { lower, upper, method, upper_witness, lower_witness: SPATIAL_NOTE.into() })
    };
    match (k, mode) {
        (1, _) => spatial(Method::Spatial, UpperWitness::Chain(vec![d.kron_matrix()])),
        (2, GroupNormMode::Haagerup) => {
            let br = haagerup_norm(&d.as_pair()?, cfg)?;
            Ok(NormBracket { lower, lower_witness: SPATIAL_NOTE.into(), ..br })
        }
        (2, GroupNormMode::Projective) => {
            let br = projective_norm(&d.as_pair()?, cfg)?;
            Ok(NormBracket { lower, lower_witness: SPATIAL_NOTE.into(), ..br })
        }
        (_, GroupNormMode::Haagerup) => {
            // Projective decompositions bound the Haagerup norm as well.
            let chain = triple_haagerup(&d, cfg);
            let proj = triple_projective(&d, cfg);
            if proj.value() < chain.value() {
                spatial(Method::FactorizationSearch, proj)
            } else {
                spatial(Method::ChainFactorization, chain)
            }
        }
        (_, GroupNormMode::Projective) => spatial(Method::FactorizationSearch, triple_projective(&d, cfg)),
    }
}

/// Outcome of [`dual_involution_check`].
#[derive(Debug, Clone, PartialEq)]
pub struct InvolutionReport {
    pub involutive: bool,
    pub antilinear: bool,
    pub lower_gap: f64,
    pub upper_gap: f64,
    pub isometric: bool,
}

impl InvolutionReport {
    pub fn passed(&self) -> bool {
        self.involutive && self.antilinear && self.isometric
    }
}

/// Compares the brackets of `c` and its dual involute under identical budgets.
pub fn dual_involution_check<T: Real>(
    c: &CyclicGroupElement<T>,
    k: usize,
    mode: GroupNormMode,
    cfg: &TensorConfig,
    tol: f64,
) -> Result<InvolutionReport> {
    let s = c.dual_involution();
    let involutive = s.dual_involution() == *c;
    let lambda = Cx::new(lit::<T>(0.6), lit::<T>(-0.8));
    let lhs = c.scaled(lambda).dual_involution();
    let rhs = s.scaled(lambda.conj());
    let antilinear = lhs.coeffs().iter().zip(rhs.coeffs()).all(|(a, b)| cabs(*a - *b) <= lit(1e-14));
    let (b1, b2) = (delta_k_norm(c, k, mode, cfg)?, delta_k_norm(&s, k, mode, cfg)?);
    let (l1, u1) = b1.ends();
    let (l2, u2) = b2.ends();
    let (lower_gap, upper_gap) = ((l1 - l2).abs(), (u1 - u2).abs());
    Ok(InvolutionReport { involutive, antilinear, lower_gap, upper_gap, isometric: lower_gap <= tol && upper_gap <= tol })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::cx;

    fn cfg() -> TensorConfig {
        TensorConfig { restarts: 8, iterations: 200, ..Default::default() }
    }

    #[test]
    fn regular_rep_small_orders() {
        assert_eq!(regular_rep::<f64>(1).unwrap(), vec![linalg::identity(1)]);
        let r2 = regular_rep::<f64>(2).unwrap();
        assert!(linalg::max_abs(&(&r2[1] - linalg::diag_from(&[cx(1.0, 0.0), cx(-1.0, 0.0)]))) < 1e-15);
    }

    #[test]
    fn generators_have_norm_one() {
        for n in 1..=4 {
            for g in 0..n {
                let c = CyclicGroupElement::<f64>::generator(n, g).unwrap();
                for k in 1..=3 {
                    for mode in [GroupNormMode::Haagerup, GroupNormMode::Projective] {
                        let br = delta_k_norm(&c, k, mode, &cfg()).unwrap();
                        assert!((br.lower - 1.0).abs() < 1e-6 && (br.upper - 1.0).abs() < 1e-6, "{n} {g} {k} {mode:?} {br:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn two_point_dft() {
        for c in [[1.0, 1.0], [1.0, -1.0]] {
            let e = CyclicGroupElement::new(c.iter().map(|&x| cx::<f64>(x, 0.0)).collect()).unwrap();
            assert!((e.dft_norm() - 2.0).abs() < 1e-15);
            let br = delta_k_norm(&e, 1, GroupNormMode::Haagerup, &cfg()).unwrap();
            assert!((br.upper - 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn involution_on_a_generator() {
        let c = CyclicGroupElement::<f64>::generator(3, 1).unwrap();
        assert_eq!(c.dual_involution(), CyclicGroupElement::generator(3, 2).unwrap());
        let rep = dual_involution_check(&c, 2, GroupNormMode::Haagerup, &cfg(), 1e-5).unwrap();
        assert!(rep.passed(), "{rep:?}");
    }

    #[test]
    fn power_is_capped() {
        let c = CyclicGroupElement::<f64>::generator(5, 1).unwrap();
        assert!(matches!(delta_k_norm(&c, 1, GroupNormMode::Haagerup, &cfg()), Err(Error::Budget(_))));
    }
}
