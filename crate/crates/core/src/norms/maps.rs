//! Linear maps between matrix spaces, given on a basis of their domain.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::graded::{GradedOperator, GradedSpace};
use crate::linalg;
use crate::scalar::{creal, lit, CMat, Cx, Real};

const INDEPENDENCE_TOL: f64 = 1e-10;
const DOMAIN_TOL: f64 = 1e-9;

/// A linear map extended from its values on `domain_basis`.
#[derive(Debug, Clone)]
pub struct LinearMapSpec<T: Real> {
    domain_basis: Vec<CMat<T>>,
    images: Vec<CMat<T>>,
    domain: GradedSpace,
    codomain: GradedSpace,
    /// Pseudo-inverse of the column-stacked basis.
    coords: CMat<T>,
    stacked: CMat<T>,
}

impl<T: Real> LinearMapSpec<T> {
    pub fn new(
        domain_basis: Vec<CMat<T>>,
        images: Vec<CMat<T>>,
        domain: GradedSpace,
        codomain: GradedSpace,
    ) -> Result<Self> {
        if domain_basis.is_empty() {
            return Err(Error::EmptyDomain);
        }
        if domain_basis.len() != images.len() {
            return Err(Error::DimMismatch(format!(
                "{} basis elements but {} images",
                domain_basis.len(),
                images.len()
            )));
        }
        let (dn, cn) = (domain.base_size(), codomain.base_size());
        if domain.level != 1 || codomain.level != 1 {
            return Err(Error::InvalidConfig("maps are specified at matrix level one".into()));
        }
        for b in &domain_basis {
            if b.shape() != (dn, dn) || !linalg::all_finite(b) {
                return Err(Error::DimMismatch(format!("basis element must be a finite {dn}x{dn} matrix")));
            }
        }
        for b in &images {
            if b.shape() != (cn, cn) || !linalg::all_finite(b) {
                return Err(Error::DimMismatch(format!("image must be a finite {cn}x{cn} matrix")));
            }
        }
        let k = domain_basis.len();
        let mut stacked = linalg::zeros::<T>(dn * dn, k);
        for (j, b) in domain_basis.iter().enumerate() {
            stacked.set_column(j, &linalg::vec_of(b));
        }
        let svd = linalg::thin_svd(&stacked);
        let (smax, smin) = (svd.max(), svd.s.last().copied().unwrap_or(T::zero()));
        if k > dn * dn || smin <= lit::<T>(INDEPENDENCE_TOL) * smax {
            return Err(Error::DependentBasis);
        }
        let inv = DMatrix::from_diagonal(&DVector::from_iterator(k, svd.s.iter().map(|&s| creal(T::one() / s))));
        let coords = &svd.v * inv * svd.u.adjoint();
        Ok(Self { domain_basis, images, domain, codomain, coords, stacked })
    }

    /// The map given by `f` on every matrix unit of `space`.
    pub fn from_fn(space: GradedSpace, codomain: GradedSpace, f: impl Fn(&CMat<T>) -> CMat<T>) -> Result<Self> {
        let basis = full_basis::<T>(space.base_size());
        let images = basis.iter().map(&f).collect();
        Self::new(basis, images, space, codomain)
    }

    pub fn identity(space: GradedSpace) -> Result<Self> {
        Self::from_fn(space, space, |x| x.clone())
    }

    pub fn scaling(space: GradedSpace, c: Cx<T>) -> Result<Self> {
        Self::from_fn(space, space, |x| x * c)
    }

    /// `x ↦ εxε`.
    pub fn grading_automorphism(space: GradedSpace) -> Result<Self> {
        let e = space.epsilon::<T>();
        Self::from_fn(space, space, |x| &e * x * &e)
    }

    /// `x ↦ u x u†`.
    pub fn conjugation(space: GradedSpace, u: &CMat<T>) -> Result<Self> {
        if u.shape() != (space.size(), space.size()) {
            return Err(Error::DimMismatch("conjugating unitary has the wrong size".into()));
        }
        Self::from_fn(space, space, |x| u * x * u.adjoint())
    }

    /// Projection with kernel spanned by the bottom-right matrix unit and range
    /// the matrices vanishing in that corner: `x ↦ x − x_mm e_mm`.
    pub fn corner_projection(space: GradedSpace) -> Result<Self> {
        let m = space.base_size();
        Self::from_fn(space, space, |x| {
            let mut y = x.clone();
            y[(m - 1, m - 1)] = Cx::new(T::zero(), T::zero());
            y
        })
    }

    /// Projection with kernel spanned by `e_{m−1,m−1} − e_{mm}` and range the
    /// matrices whose last two diagonal entries agree: both entries are
    /// replaced by their mean.
    pub fn diagonal_pair_projection(space: GradedSpace) -> Result<Self> {
        let m = space.base_size();
        if m < 2 {
            return Err(Error::InvalidConfig("needs matrices of size at least 2".into()));
        }
        Self::from_fn(space, space, |x| {
            let mut y = x.clone();
            let avg = (x[(m - 2, m - 2)] + x[(m - 1, m - 1)]) * lit::<T>(0.5);
            y[(m - 2, m - 2)] = avg;
            y[(m - 1, m - 1)] = avg;
            y
        })
    }

    /// The same map on the span of `basis`, which must lie in the current domain.
    pub fn restrict(&self, basis: Vec<CMat<T>>) -> Result<Self> {
        let images = basis.iter().map(|b| self.apply(b)).collect::<Result<Vec<_>>>()?;
        Self::new(basis, images, self.domain, self.codomain)
    }

    pub fn domain(&self) -> GradedSpace {
        self.domain
    }

    pub fn codomain(&self) -> GradedSpace {
        self.codomain
    }

    pub fn domain_basis(&self) -> &[CMat<T>] {
        &self.domain_basis
    }

    pub fn images(&self) -> &[CMat<T>] {
        &self.images
    }

    pub fn rank(&self) -> usize {
        self.domain_basis.len()
    }

    /// Coefficients of `x` in the domain basis.
    pub fn coordinates(&self, x: &CMat<T>) -> Result<Vec<Cx<T>>> {
        let n = self.domain.base_size();
        if x.shape() != (n, n) {
            return Err(Error::DimMismatch(format!("expected a {n}x{n} matrix")));
        }
        let v = linalg::vec_of(x);
        let c = &self.coords * &v;
        let resid = (&self.stacked * &c - &v).norm();
        let scale = T::one() + v.norm();
        if resid > lit::<T>(DOMAIN_TOL) * scale {
            return Err(Error::NotInDomain(crate::scalar::to_f64(resid)));
        }
        Ok(c.iter().copied().collect())
    }

    pub fn apply(&self, x: &CMat<T>) -> Result<CMat<T>> {
        let c = self.coordinates(x)?;
        let n = self.codomain.base_size();
        Ok(self.images.iter().zip(c).fold(linalg::zeros(n, n), |acc, (img, ci)| acc + img * ci))
    }

    /// `φ_n`, applied block by block to an operator at any level.
    pub fn apply_level(&self, x: &GradedOperator<T>) -> Result<GradedOperator<T>> {
        if x.space().base() != self.domain {
            return Err(Error::DimMismatch("operator does not live on the map's domain".into()));
        }
        let n = x.space().level;
        let mut grid = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(self.apply(x.block(i, j).data())?);
            }
            grid.push(row);
        }
        GradedOperator::new(self.codomain.amplified(n), linalg::from_blocks(&grid)?)
    }

    /// A random element of the domain span: Gaussian coefficients.
    pub fn sample_domain(&self, rng: &mut crate::rng::SampleRng) -> CMat<T> {
        let n = self.domain.base_size();
        self.domain_basis
            .iter()
            .fold(linalg::zeros(n, n), |acc, b| acc + b * crate::rng::complex_normal::<T>(rng))
    }

    /// Whether the domain span is closed under the superinvolution.
    pub fn is_star_closed(&self) -> bool {
        let e = self.domain.epsilon::<T>();
        self.domain_basis.iter().all(|b| self.coordinates(&(&e * b.adjoint() * &e)).is_ok())
    }
}

/// Matrix units `e_ij` in column-major order of `(i, j)`.
pub fn full_basis<T: Real>(n: usize) -> Vec<CMat<T>> {
    let mut out = Vec::with_capacity(n * n);
    for j in 0..n {
        for i in 0..n {
            out.push(linalg::unit(n, i, j));
        }
    }
    out
}

/// Matrix units `e_ij` with `i ≥ j`.
pub fn lower_triangular_basis<T: Real>(n: usize) -> Vec<CMat<T>> {
    full_basis::<T>(n)
        .into_iter()
        .enumerate()
        .filter(|(k, _)| k % n >= k / n)
        .map(|(_, b)| b)
        .collect()
}
