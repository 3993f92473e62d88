//! Seeded random graded operators.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::linalg;
use crate::rng::{self, SampleRng};
use crate::scalar::{creal, CMat, Real};

use super::calculus::iota_inverse;
use super::operator::GradedOperator;
use super::space::GradedSpace;
use super::unitary::OmegaUnitary;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RandomKind {
    Generic,
    Hermitian,
    EpsPositive,
    Superpositive,
    Superunitary,
    EvenUnitary,
}

impl RandomKind {
    pub const ALL: [RandomKind; 6] = [
        RandomKind::Generic,
        RandomKind::Hermitian,
        RandomKind::EpsPositive,
        RandomKind::Superpositive,
        RandomKind::Superunitary,
        RandomKind::EvenUnitary,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RandomKind::Generic => "generic",
            RandomKind::Hermitian => "hermitian",
            RandomKind::EpsPositive => "eps_positive",
            RandomKind::Superpositive => "superpositive",
            RandomKind::Superunitary => "superunitary",
            RandomKind::EvenUnitary => "even_unitary",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s || k.name().replace('_', "-") == s)
            .ok_or_else(|| Error::Unknown { what: "random kind", value: s.to_string() })
    }
}

/// Deterministic sample of `kind` on `space` from `seed`.
pub fn random_graded<T: Real>(kind: RandomKind, space: GradedSpace, seed: u64) -> GradedOperator<T> {
    sample_graded(kind, space, &mut rng::derive_rng(seed, 0))
}

pub fn sample_graded<T: Real>(kind: RandomKind, space: GradedSpace, rng: &mut SampleRng) -> GradedOperator<T> {
    let n = space.size();
    let data = match kind {
        RandomKind::Generic => rng::gaussian_matrix(rng, n, n),
        RandomKind::Hermitian => {
            let g = GradedOperator::new(space, rng::gaussian_matrix(rng, n, n)).expect("square sample");
            return g.hermitian_part();
        }
        RandomKind::EpsPositive => {
            let rank = 1 + (rng::uniform::<f64>(rng, 0.0, n as f64) as usize).min(n - 1);
            space.epsilon::<T>() * rng::random_psd::<T>(rng, n, rank)
        }
        RandomKind::Superpositive => {
            let rank = 1 + (rng::uniform::<f64>(rng, 0.0, n as f64) as usize).min(n - 1);
            let p = GradedOperator::new(space, rng::random_psd(rng, n, rank)).expect("square sample");
            return iota_inverse(&p);
        }
        RandomKind::Superunitary => {
            let strength = rng::uniform::<T>(rng, 0.1, 1.5);
            pseudo_unitary(space, rng, strength)
        }
        RandomKind::EvenUnitary => pseudo_unitary(space, rng, T::zero()),
    };
    GradedOperator::new(space, data).expect("sample has the space's shape")
}

fn split_indices(space: &GradedSpace) -> (Vec<usize>, Vec<usize>) {
    let sig = space.signature();
    let plus = (0..sig.len()).filter(|&i| sig[i] > 0).collect();
    let minus = (0..sig.len()).filter(|&i| sig[i] < 0).collect();
    (plus, minus)
}

/// Places an even-by-even and odd-by-odd block into the grading eigenbasis
/// and rotates back to the standard basis.
fn from_eigenbasis<T: Real>(space: &GradedSpace, m: CMat<T>) -> CMat<T> {
    let w = space.frame::<T>();
    &w * m * w.adjoint()
}

/// `u · exp(H) · v` with `u, v` even Haar unitaries and `H` an odd hermitian
/// matrix whose off-diagonal block has operator norm `strength`. The result
/// preserves the indefinite form `⟨·, ε·⟩` and has norm `e^{strength}`.
pub fn pseudo_unitary<T: Real>(space: GradedSpace, rng: &mut SampleRng, strength: T) -> CMat<T> {
    let (plus, minus) = split_indices(&space);
    let n = space.size();
    let even = |rng: &mut SampleRng| {
        let (a, b) = (rng::haar_unitary::<T>(rng, plus.len()), rng::haar_unitary::<T>(rng, minus.len()));
        let mut m = linalg::zeros::<T>(n, n);
        for (i, &r) in plus.iter().enumerate() {
            for (j, &c) in plus.iter().enumerate() {
                m[(r, c)] = a[(i, j)];
            }
        }
        for (i, &r) in minus.iter().enumerate() {
            for (j, &c) in minus.iter().enumerate() {
                m[(r, c)] = b[(i, j)];
            }
        }
        m
    };
    let u = even(rng);
    let v = even(rng);
    let mut h = linalg::zeros::<T>(n, n);
    if !plus.is_empty() && !minus.is_empty() && strength > T::zero() {
        let b = rng::gaussian_matrix::<T>(rng, plus.len(), minus.len());
        let b = &b * creal(strength / linalg::op_norm(&b));
        for (i, &r) in plus.iter().enumerate() {
            for (j, &c) in minus.iter().enumerate() {
                h[(r, c)] = b[(i, j)];
                h[(c, r)] = b[(i, j)].conj();
            }
        }
    }
    let (vals, vecs) = linalg::eigh(&h);
    let ex = DVector::from_iterator(n, vals.iter().map(|&l| creal(l.exp())));
    let boost = &vecs * linalg::diag_from(ex.as_slice()) * vecs.adjoint();
    from_eigenbasis(&space, u * boost * v)
}

/// `ι⁻¹(U)` for Haar `U`: unitary for the twisted product `∗₋₁`.
pub fn iota_unitary<T: Real>(space: GradedSpace, rng: &mut SampleRng) -> GradedOperator<T> {
    let u = GradedOperator::new(space, rng::haar_unitary(rng, space.size())).expect("square sample");
    iota_inverse(&u)
}

/// `γ⁻¹ h γ⁻¹` with `γ² = ω⁻¹` and `h` a self-adjoint matrix of norm `radius`.
pub fn omega_hermitian<T: Real>(w: &OmegaUnitary<T>, rng: &mut SampleRng, radius: T) -> GradedOperator<T> {
    let n = w.space().size();
    let h = rng::random_hermitian::<T>(rng, n);
    let h = &h * creal(radius / linalg::op_norm(&h));
    let g = w.inverse_sqrt().adjoint();
    GradedOperator::new(w.space(), &g * h * &g).expect("square sample")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graded::calculus::{is_epsilon_positive, is_superpositive};
    use crate::graded::unitary::{is_pseudo_unitary, is_superunitary};

    #[test]
    fn kinds_satisfy_their_predicates() {
        for (i, sp) in [GradedSpace::diag(2, 2).unwrap(), GradedSpace::swap(2).unwrap(), GradedSpace::diag(3, 0).unwrap()]
            .into_iter()
            .enumerate()
        {
            let seed = 40 + i as u64;
            assert!(random_graded::<f64>(RandomKind::Hermitian, sp, seed).is_hermitian(1e-12));
            assert!(is_epsilon_positive(&random_graded::<f64>(RandomKind::EpsPositive, sp, seed), 1e-9));
            assert!(is_superpositive(&random_graded::<f64>(RandomKind::Superpositive, sp, seed), 1e-9));
            let u = random_graded::<f64>(RandomKind::Superunitary, sp, seed);
            assert!(is_superunitary(&u, 1e-9) && is_pseudo_unitary(&u, 1e-9));
            let e = random_graded::<f64>(RandomKind::EvenUnitary, sp, seed);
            assert!((e.op_norm() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn same_seed_same_sample() {
        let sp = GradedSpace::diag(1, 2).unwrap();
        assert_eq!(
            random_graded::<f64>(RandomKind::Generic, sp, 9),
            random_graded::<f64>(RandomKind::Generic, sp, 9)
        );
    }

    #[test]
    fn omega_hermitian_samples_are_fixed() {
        let sp = GradedSpace::diag(2, 1).unwrap();
        let mut r = rng::derive_rng(5, 0);
        let w = OmegaUnitary::new(sp, rng::random_phase(&mut r), rng::random_phase(&mut r)).unwrap();
        let x = omega_hermitian::<f64>(&w, &mut r, 0.9);
        assert!(x.is_omega_hermitian(&w, 1e-12).unwrap());
        assert!((x.op_norm() - 0.9).abs() < 1e-12);
    }
}
