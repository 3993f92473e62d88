//! A small primal barrier solver for `min cᵀx` subject to hermitian linear
//! matrix inequalities `F₀ + Σ xᵢ Fᵢ ⪰ 0`. Sized for a few hundred variables.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{lit, CMat, Real};

/// One constraint block `F₀ + Σ xᵢ Fᵢ ⪰ 0`, with `Fᵢ` listed only for the
/// variables that enter it.
#[derive(Debug, Clone)]
pub struct LmiBlock<T: Real> {
    pub constant: CMat<T>,
    pub terms: Vec<(usize, CMat<T>)>,
}

impl<T: Real> LmiBlock<T> {
    pub fn eval(&self, x: &[T]) -> CMat<T> {
        let mut f = self.constant.clone();
        for (i, fi) in &self.terms {
            f += fi * crate::scalar::creal(x[*i]);
        }
        f
    }

    fn dim(&self) -> usize {
        self.constant.nrows()
    }
}

#[derive(Debug, Clone)]
pub struct LmiProblem<T: Real> {
    pub cost: Vec<T>,
    pub blocks: Vec<LmiBlock<T>>,
}

#[derive(Debug, Clone)]
pub struct LmiSolution<T: Real> {
    pub x: Vec<T>,
    pub objective: T,
    /// Duality gap bound `ν/t` of the last centering; only a bound when the
    /// centering converged.
    pub gap: T,
    pub newton_steps: usize,
    /// False when the Newton budget ran out first; `x` is still strictly feasible.
    pub converged: bool,
}

#[derive(Debug, Clone, Copy)]
pub struct LmiConfig {
    pub gap_tol: f64,
    pub max_newton: usize,
    pub growth: f64,
}

impl Default for LmiConfig {
    fn default() -> Self {
        Self { gap_tol: 1e-10, max_newton: 2000, growth: 10.0 }
    }
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).fold(T::zero(), |s, (&u, &v)| s + u * v)
}

impl<T: Real> LmiProblem<T> {
    fn barrier_dim(&self) -> usize {
        self.blocks.iter().map(LmiBlock::dim).sum()
    }

    /// `−Σ log det F_b(x)`, or `None` outside the interior.
    fn barrier(&self, x: &[T]) -> Option<T> {
        let mut total = T::zero();
        for b in &self.blocks {
            let l = linalg::cholesky_lower(&b.eval(x))?;
            for k in 0..l.nrows() {
                total -= lit::<T>(2.0) * l[(k, k)].re.ln();
            }
        }
        Some(total)
    }

    /// Gradient and Hessian of the barrier at an interior point.
    fn derivatives(&self, x: &[T]) -> Option<(DVector<T>, DMatrix<T>)> {
        let m = x.len();
        let mut g = DVector::<T>::zeros(m);
        let mut h = DMatrix::<T>::zeros(m, m);
        for b in &self.blocks {
            let l = linalg::cholesky_lower(&b.eval(x))?;
            let zs: Vec<(usize, CMat<T>)> = b
                .terms
                .iter()
                .map(|(i, fi)| {
                    let w = l.solve_lower_triangular(fi).expect("cholesky factor is invertible");
                    let z = l.solve_lower_triangular(&w.adjoint()).expect("cholesky factor is invertible");
                    (*i, z.adjoint())
                })
                .collect();
            for (a, (i, zi)) in zs.iter().enumerate() {
                g[*i] -= zi.trace().re;
                for (j, zj) in &zs[..=a] {
                    let v = zi.dotc(zj).re;
                    h[(*i, *j)] += v;
                    if i != j {
                        h[(*j, *i)] += v;
                    }
                }
            }
        }
        Some((g, h))
    }

    /// Barrier method from a strictly feasible `x0`.
    pub fn solve(&self, x0: Vec<T>, cfg: &LmiConfig) -> Result<LmiSolution<T>> {
        let m = self.cost.len();
        if x0.len() != m {
            return Err(Error::DimMismatch(format!("start has {} entries, problem has {m} variables", x0.len())));
        }
        if self.barrier(&x0).is_none() {
            return Err(Error::Numerical("barrier start is not strictly feasible".into()));
        }
        let nu = lit::<T>(self.barrier_dim() as f64);
        let cost = DVector::from_column_slice(&self.cost);
        let mut x = x0;
        let mut t = T::one();
        let mut steps = 0usize;
        loop {
            let mut progressed = false;
            // Centering by damped Newton.
            loop {
                if steps >= cfg.max_newton {
                    let objective = dot(&self.cost, &x);
                    return Ok(LmiSolution { x, objective, gap: nu / t, newton_steps: steps, converged: false });
                }
                let (gb, mut h) = self.derivatives(&x).ok_or_else(|| Error::Numerical("left the interior".into()))?;
                let g = &cost * t + gb;
                let scale = (0..m).fold(T::zero(), |s, i| s.max(h[(i, i)].abs()));
                for i in 0..m {
                    h[(i, i)] += lit::<T>(1e-14) * (T::one() + scale);
                }
                let dx = match h.clone().cholesky() {
                    Some(c) => c.solve(&(-&g)),
                    None => return Err(Error::Numerical("singular barrier hessian".into())),
                };
                steps += 1;
                let decrement = -g.dot(&dx);
                if decrement <= lit(1e-12) {
                    break;
                }
                let phi0 = t * dot(&self.cost, &x) + self.barrier(&x).expect("interior");
                let xmax = x.iter().fold(T::one(), |a, v| a.max(v.abs()));
                let dmax = dx.iter().fold(T::zero(), |a, v| a.max(v.abs()));
                let mut s = T::one();
                let mut moved = false;
                while s * dmax > lit::<T>(1e-15) * xmax {
                    let cand: Vec<T> = x.iter().zip(dx.iter()).map(|(&a, &d)| a + s * d).collect();
                    if let Some(b) = self.barrier(&cand) {
                        let phi = t * dot(&self.cost, &cand) + b;
                        if phi <= phi0 - lit::<T>(0.25) * s * decrement {
                            x = cand;
                            moved = true;
                            break;
                        }
                    }
                    s *= lit(0.5);
                }
                progressed |= moved;
                if !moved || decrement <= lit(1e-9) {
                    break;
                }
            }
            let gap = nu / t;
            let objective = dot(&self.cost, &x);
            if gap <= lit::<T>(cfg.gap_tol) * (T::one() + objective.abs()) || !progressed {
                return Ok(LmiSolution { x, objective, gap, newton_steps: steps, converged: progressed });
            }
            t *= lit(cfg.growth);
        }
    }
}

/// Real coordinates for `r × r` hermitian matrices: diagonal entries, then
/// the real and imaginary parts of each strict upper entry.
pub fn hermitian_basis<T: Real>(r: usize) -> Vec<CMat<T>> {
    let mut out = Vec::with_capacity(r * r);
    for i in 0..r {
        out.push(linalg::unit(r, i, i));
    }
    for i in 0..r {
        for j in i + 1..r {
            out.push(linalg::unit::<T>(r, i, j) + linalg::unit::<T>(r, j, i));
            let mut h = linalg::zeros::<T>(r, r);
            h[(i, j)] = crate::scalar::cx(0.0, 1.0);
            h[(j, i)] = crate::scalar::cx(0.0, -1.0);
            out.push(h);
        }
    }
    out
}

/// Inverse of [`hermitian_basis`] expansion.
pub fn hermitian_from_coords<T: Real>(coords: &[T], r: usize) -> CMat<T> {
    hermitian_basis::<T>(r)
        .iter()
        .zip(coords)
        .fold(linalg::zeros(r, r), |acc, (b, &c)| acc + b * crate::scalar::creal(c))
}

/// Coordinates of the identity scaled by `s`.
pub fn identity_coords<T: Real>(r: usize, s: T) -> Vec<T> {
    let mut v = vec![T::zero(); r * r];
    v[..r].iter_mut().for_each(|c| *c = s);
    v
}
