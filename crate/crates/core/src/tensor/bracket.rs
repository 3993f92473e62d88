use crate::error::{Error, Result};
use crate::linalg;
use crate::scalar::{CMat, Real};

/// Budgets for the tensor-norm searches.
#[derive(Debug, Clone, PartialEq)]
pub struct TensorConfig {
    pub restarts: usize,
    pub iterations: usize,
    /// Extra cancelling pairs appended to the minimal decomposition.
    pub padding: usize,
    pub seed: u64,
}

impl Default for TensorConfig {
    fn default() -> Self {
        Self { restarts: 32, iterations: 500, padding: 0, seed: 0 }
    }
}

impl TensorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts < 8 || self.iterations < 200 {
            return Err(Error::InvalidConfig(format!(
                "need restarts ≥ 8 and iterations ≥ 200, got {} and {}",
                self.restarts, self.iterations
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// Operator norm of the Kronecker matrix.
    Spatial,
    /// Barrier solve over the Gram matrix of the middle change of basis.
    ConvexFactorization,
    /// Local search over re-weighted decompositions.
    FactorizationSearch,
    /// Spatial lower bound with sampled dual functionals.
    HeuristicDualLower,
    /// Alternating convex solves along a chain of factors.
    ChainFactorization,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Spatial => "spatial",
            Method::ConvexFactorization => "convex-factorization",
            Method::FactorizationSearch => "factorization-search",
            Method::HeuristicDualLower => "heuristic-dual-lower",
            Method::ChainFactorization => "chain-factorization",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        [
            Method::Spatial,
            Method::ConvexFactorization,
            Method::FactorizationSearch,
            Method::HeuristicDualLower,
            Method::ChainFactorization,
        ]
        .into_iter()
        .find(|m| m.name() == s)
        .ok_or_else(|| Error::Unknown { what: "method", value: s.into() })
    }
}

/// A decomposition whose size re-evaluates to the upper bound.
#[derive(Debug, Clone, PartialEq)]
pub enum UpperWitness<T: Real> {
    /// Row operator `X ∈ M_{n,r}(M_a)` and column operator `Y ∈ M_{r,n}(M_b)`,
    /// sized `n·a × r·a` and `r·b × n·b`; the bound is `‖X‖·‖Y‖`.
    Factorization { left: CMat<T>, right: CMat<T> },
    /// `Σ a_k ⊗ b_k` with bound `Σ ‖a_k‖·‖b_k‖`.
    Terms(Vec<(CMat<T>, CMat<T>)>),
    /// Matrices whose product of operator norms is the bound.
    Chain(Vec<CMat<T>>),
    /// `Σ w_k ‖m_k‖`, each weight already bounding the norm of a cofactor.
    WeightedSum(Vec<(T, CMat<T>)>),
    /// The element is zero.
    Zero,
}

impl<T: Real> UpperWitness<T> {
    pub fn value(&self) -> T {
        match self {
            UpperWitness::Factorization { left, right } => linalg::op_norm(left) * linalg::op_norm(right),
            UpperWitness::Terms(ts) => ts.iter().fold(T::zero(), |s, (a, b)| s + linalg::op_norm(a) * linalg::op_norm(b)),
            UpperWitness::Chain(ms) => ms.iter().fold(T::one(), |s, m| s * linalg::op_norm(m)),
            UpperWitness::WeightedSum(ws) => ws.iter().fold(T::zero(), |s, (w, m)| s + *w * linalg::op_norm(m)),
            UpperWitness::Zero => T::zero(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            UpperWitness::Factorization { .. } => "factorization",
            UpperWitness::Terms(_) => "terms",
            UpperWitness::Chain(_) => "chain",
            UpperWitness::WeightedSum(_) => "weighted_sum",
            UpperWitness::Zero => "zero",
        }
    }
}

/// Certified interval for a norm value.
#[derive(Debug, Clone, PartialEq)]
pub struct NormBracket<T: Real> {
    pub lower: T,
    pub upper: T,
    pub method: Method,
    pub upper_witness: UpperWitness<T>,
    pub lower_witness: String,
}

impl<T: Real> NormBracket<T> {
    pub fn gap(&self) -> T {
        self.upper - self.lower
    }

    pub fn contains(&self, v: T, tol: T) -> bool {
        self.lower - tol <= v && v <= self.upper + tol
    }

    /// Both ends of the bracket as `f64`.
    pub fn ends(&self) -> (f64, f64) {
        (crate::scalar::to_f64(self.lower), crate::scalar::to_f64(self.upper))
    }
}
