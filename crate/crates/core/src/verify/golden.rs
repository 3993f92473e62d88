//! Small hand-checkable instances with known answers, one check per module.

use crate::graded::{
    fiber_iso, graded_abs, graded_spectrum, iota, iota_inverse, iota_unitary, is_epsilon_positive, is_superpositive,
    is_superunitary, kappa_conjugate, lemma2_check, lemma2_gap, lemma2_search, random_graded, standard_form_embed,
    swap_double, twisted_product, GradedOperator, GradedSpace, OmegaUnitary, RandomKind,
};
use crate::group::{delta_k_element, delta_k_norm, dual_involution_check, regular_rep, CyclicGroupElement, GroupNormMode};
use crate::linalg::{self, complex_matrix, real_matrix};
use crate::norms::{
    big_r_norm, derived_matrix_norm, hermitian_contractive_check, numerical_radius, rsc_check, seminorm_p_omega,
    sigma_strong_norm, strong_norm, LinearMapSpec, RscConfig,
};
use crate::report::PropertyCheck;
use crate::rng;
use crate::scalar::{cis, creal, cx, CMat, Cx};
use crate::tensor::{
    dual_symmetrized_haagerup, finite_dim_cstar_tensor, haagerup_norm, projective_norm, star_tensor,
    symmetrized_haagerup, PositivityCheck, StarMode, TensorConfig, TensorElement,
};

use super::Cases;

/// The element that is ε-positive but not superpositive.
pub const SEPARATING: [[f64; 2]; 2] = [[1.0, 1.0], [-1.0, -1.0]];

fn sp11() -> GradedSpace {
    GradedSpace::diag(1, 1).expect("valid")
}

fn op(rows: &[&[f64]]) -> GradedOperator<f64> {
    GradedOperator::new(sp11(), real_matrix(rows)).expect("2x2")
}

fn cop(rows: &[&[(f64, f64)]]) -> GradedOperator<f64> {
    GradedOperator::new(sp11(), complex_matrix(rows)).expect("2x2")
}

pub fn separating() -> GradedOperator<f64> {
    op(&[&SEPARATING[0], &SEPARATING[1]])
}

fn same(a: &CMat<f64>, b: &CMat<f64>, tol: f64) -> bool {
    a.shape() == b.shape() && linalg::max_abs(&(a - b)) <= tol
}

fn sorted_re(v: &[Cx<f64>]) -> Vec<f64> {
    let mut r: Vec<f64> = v.iter().map(|z| z.re).collect();
    r.sort_by(f64::total_cmp);
    r
}

fn values_match(got: &[f64], want: &[f64], tol: f64) -> bool {
    got.len() == want.len() && got.iter().zip(want).all(|(a, b)| (a - b).abs() <= tol)
}

pub fn graded_core(tol: f64) -> PropertyCheck {
    let mut c = Cases::new("graded-core worked examples");
    let x = separating();
    let nil = op(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let one = GradedOperator::<f64>::identity(sp11());
    let eps = GradedOperator::<f64>::grading(sp11());
    let flip = op(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let mut r = rng::derive_rng(0x601d, 0);
    let g = random_graded::<f64>(RandomKind::Generic, GradedSpace::diag(2, 1).expect("valid"), 5);

    c.case("superinvolution fixes 1", one.superinvolve() == one);
    c.case("separating element is hermitian", x.superinvolve() == x);
    c.case("superinvolution of the nilpotent", same(nil.superinvolve().data(), &real_matrix(&[&[0.0, 0.0], &[-1.0, 0.0]]), 0.0));

    let sp = g.space();
    c.attempt("omega = 1 gives the adjoint", || Ok(g.omega_involve(&OmegaUnitary::one(sp))? == g.adjoint()));
    c.attempt("omega = eps gives the superinvolution", || {
        Ok(same(g.omega_involve(&OmegaUnitary::grading(sp))?.data(), g.superinvolve().data(), 1e-15))
    });
    c.attempt("omega = diag(1, i) on the flip", || {
        let w = OmegaUnitary::new(sp11(), cx(1.0, 0.0), cx(0.0, 1.0))?;
        let want = complex_matrix(&[&[(0.0, 0.0), (0.0, 1.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        Ok(same(flip.omega_involve(&w)?.data(), &want, 1e-15))
    });

    let bd = op(&[&[2.0, 0.0], &[0.0, -3.0]]);
    c.case("block-diagonal operator is even", bd.even_part() == bd && linalg::max_abs(bd.odd_part().data()) == 0.0);
    c.case("even part of the separating element", same(x.even_part().data(), &real_matrix(&[&[1.0, 0.0], &[0.0, -1.0]]), 0.0));
    c.case("odd part of the separating element", same(x.odd_part().data(), &real_matrix(&[&[0.0, 1.0], &[-1.0, 0.0]]), 0.0));
    c.case("eps is even", eps.even_part() == eps);
    c.case("parts add back", same(&(g.even_part().data() + g.odd_part().data()), g.data(), 0.0));

    c.case("separating element passes is_hermitian", x.is_hermitian(tol));
    c.case("nilpotent fails is_hermitian", !nil.is_hermitian(tol));
    c.attempt("standard form is hermitian", || {
        let a = rng::random_hermitian::<f64>(&mut r, 2);
        let b = rng::random_hermitian::<f64>(&mut r, 2);
        Ok(standard_form_embed(&a, &b, tol)?.is_hermitian(tol))
    });

    c.attempt("graded spectrum of the separating element is {0, 2}", || {
        Ok(values_match(&sorted_re(&graded_spectrum(&x)?), &[0.0, 2.0], 1e-10))
    });
    c.attempt("graded spectrum of eps is {1, 1}", || Ok(values_match(&sorted_re(&graded_spectrum(&eps)?), &[1.0, 1.0], 1e-12)));
    c.attempt("graded spectrum of [[0,i],[i,0]] is {-1, 1}", || {
        let y = cop(&[&[(0.0, 0.0), (0.0, 1.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        Ok(values_match(&sorted_re(&graded_spectrum(&y)?), &[-1.0, 1.0], 1e-12))
    });

    c.case("separating element is eps-positive", is_epsilon_positive(&x, tol));
    c.case("eps is eps-positive", is_epsilon_positive(&eps, tol));
    c.case("-eps is not eps-positive", !is_epsilon_positive(&eps.scale(creal(-1.0)), tol));

    c.case("iota fixes even operators", iota(&bd) == bd);
    c.case(
        "iota of the separating element",
        same(iota(&x).data(), &complex_matrix(&[&[(1.0, 0.0), (0.0, 1.0)], &[(0.0, -1.0), (-1.0, 0.0)]]), 1e-15),
    );
    c.case(
        "iota of [[0,-i],[-i,0]] is the flip",
        same(iota(&cop(&[&[(0.0, 0.0), (0.0, -1.0)], &[(0.0, -1.0), (0.0, 0.0)]])).data(), flip.data(), 1e-15),
    );
    c.case("iota_inverse undoes iota", iota_inverse(&iota(&g)) == g || same(iota_inverse(&iota(&g)).data(), g.data(), 1e-15));

    c.case("1 is superpositive", is_superpositive(&one, tol));
    c.case("separating element is not superpositive", !is_superpositive(&x, tol));
    let d = GradedOperator::new(sp11(), linalg::diag_from(&[creal(0.5), creal(2.0)])).expect("2x2");
    c.case("iota_inverse of a PSD diagonal is superpositive", is_superpositive(&iota_inverse(&d), tol));

    let s = random_graded::<f64>(RandomKind::Superpositive, sp11(), 11);
    c.case("graded_abs fixes superpositive elements", same(graded_abs(&s).data(), s.data(), 1e-9));
    let u = iota_unitary::<f64>(GradedSpace::diag(2, 1).expect("valid"), &mut r);
    c.case("graded_abs of an iota-unitary is 1", same(graded_abs(&u).data(), &linalg::identity(3), 1e-9));
    c.case(
        "graded_abs of the separating element is sqrt(2)",
        same(graded_abs(&x).data(), &(linalg::identity::<f64>(2) * creal(2f64.sqrt())), 1e-9),
    );

    let h = random_graded::<f64>(RandomKind::Generic, sp11(), 12);
    c.attempt("omega = 1 twisted product is the product", || Ok(twisted_product(&g, &g, creal(1.0))? == g.mul(&g)?));
    c.attempt("flip twisted with itself at -1 is -1", || {
        Ok(same(twisted_product(&flip, &flip, creal(-1.0))?.data(), &(linalg::identity::<f64>(2) * creal(-1.0)), 0.0))
    });
    c.attempt("even left factor kills the twist", || {
        Ok(same(twisted_product(&bd, &h, cis(0.7))?.data(), bd.mul(&h)?.data(), 1e-14))
    });

    c.case("fiber_iso at 1 is the identity", fiber_iso(&g, creal(1.0)) == g);
    c.case("fiber_iso at -1 is iota", same(fiber_iso(&g, creal(-1.0)).data(), iota(&g).data(), 1e-15));
    let near = fiber_iso(&g, cis(std::f64::consts::TAU - 1e-9));
    let minus = g.even_part().data() - g.odd_part().data();
    c.case("fiber_iso just below a full turn is x0 - x1", same(near.data(), &minus, 1e-8));

    c.attempt("standard form of (0, 1)", || {
        let y = standard_form_embed(&real_matrix(&[&[0.0]]), &real_matrix(&[&[1.0]]), tol)?;
        let want = complex_matrix(&[&[(0.0, 0.0), (0.0, 1.0)], &[(0.0, 1.0), (0.0, 0.0)]]);
        Ok(same(y.data(), &want, 0.0) && values_match(&sorted_re(&graded_spectrum(&y)?), &[-1.0, 1.0], 1e-12))
    });
    c.attempt("standard form with b = 0 doubles the spectrum", || {
        let a = real_matrix::<f64>(&[&[1.0, 2.0], &[2.0, -3.0]]);
        let y = standard_form_embed(&a, &linalg::zeros(2, 2), tol)?;
        let mut want: Vec<f64> = linalg::eigvalsh(&a).iter().flat_map(|&l| [l, -l]).collect();
        want.sort_by(f64::total_cmp);
        Ok(same(y.data(), &linalg::block_diag(&[&a, &a]), 0.0) && values_match(&sorted_re(&graded_spectrum(&y)?), &want, 1e-12))
    });
    c.attempt("standard form of zeros is zero", || {
        Ok(linalg::max_abs(standard_form_embed::<f64>(&linalg::zeros(2, 2), &linalg::zeros(2, 2), tol)?.data()) == 0.0)
    });
    c.case(
        "standard form rejects a non-self-adjoint block",
        standard_form_embed(nil.data(), &linalg::zeros(2, 2), tol).is_err(),
    );

    c.attempt("self-involute swap double is fixed", || {
        let y = real_matrix::<f64>(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let z = swap_double(&y, &y)?;
        Ok(z.superinvolve() == z)
    });
    c.attempt("swap double of the nilpotent", || {
        let n = nil.data().clone();
        Ok(swap_double(&n, &n.adjoint())?.superinvolve() == swap_double(&n.adjoint(), &n)?)
    });
    c.attempt("swap double of 1 is 1", || Ok(same(swap_double::<f64>(&linalg::identity(2), &linalg::identity(2))?.data(), &linalg::identity(4), 0.0)));

    c.case("kappa conjugation is isometric", (linalg::op_norm(&kappa_conjugate(&g)) - g.op_norm()).abs() <= 1e-12);
    c.case("kappa conjugation sends eps to 1", same(&kappa_conjugate(&eps), &linalg::identity(2), 1e-15));
    let eh = op(&[&[2.0, 0.0], &[0.0, 5.0]]);
    let k = kappa_conjugate(&eh);
    c.case("kappa conjugate of an even hermitian is self-adjoint", same(&k, &k.adjoint(), 1e-15));
    c.case("kappa conjugate of 0 is 0", linalg::max_abs(&kappa_conjugate(&GradedOperator::<f64>::zero(sp11()))) == 0.0);

    let ev = random_graded::<f64>(RandomKind::EvenUnitary, GradedSpace::diag(2, 2).expect("valid"), 3);
    c.case("even unitary is superunitary with norm 1", is_superunitary(&ev, tol) && (ev.op_norm() - 1.0).abs() <= 1e-12);
    let t: f64 = 0.7;
    let boost = op(&[&[t.cosh(), t.sinh()], &[t.sinh(), t.cosh()]]);
    c.case("boost is superunitary", is_superunitary(&boost, tol));
    c.close("boost norm is e^t", boost.op_norm(), t.exp(), 1e-12);
    c.case("flip is not superunitary", !is_superunitary(&flip, tol));

    let grid: Vec<f64> = (0..41).map(|k| -10.0 + 0.5 * k as f64).collect();
    let we = OmegaUnitary::grading(sp11());
    c.attempt("lemma 2 holds with equality for eps", || {
        let eq = grid.iter().try_fold(true, |acc, &t| {
            Ok::<_, crate::Error>(acc && (lemma2_gap(&eps, &we, t)? - (1.0 + t * t).sqrt()).abs() <= 1e-12)
        })?;
        Ok(eq && lemma2_check(&eps, &we, &grid, 1e-9)?)
    });
    c.attempt("1.5 times a hermitian contraction violates lemma 2", || {
        let hc = random_graded::<f64>(RandomKind::Hermitian, sp11(), 21);
        let hc = hc.scale(creal(1.5 / hc.op_norm()));
        Ok(lemma2_search(&hc, &we, &grid, 1e-9)?.is_some() && lemma2_check(&hc, &we, &grid, 1e-9)?)
    });
    c.attempt("non-hermitian contraction violates lemma 2", || {
        Ok(lemma2_search(&nil, &we, &grid, 1e-9)?.is_some() && lemma2_check(&nil, &we, &grid, 1e-9)?)
    });

    let s22 = GradedSpace::diag(2, 2).expect("valid");
    c.case("random hermitian (2,2) seed 42 is hermitian", random_graded::<f64>(RandomKind::Hermitian, s22, 42).is_hermitian(tol));
    c.case("random superpositive (1,1) seed 7 is superpositive", is_superpositive(&random_graded::<f64>(RandomKind::Superpositive, sp11(), 7), tol));
    c.case(
        "random_graded is deterministic",
        random_graded::<f64>(RandomKind::Generic, s22, 9) == random_graded::<f64>(RandomKind::Generic, s22, 9),
    );
    c.finish()
}

/// Frozen values of an independent numerical-radius computation.
pub const RADIUS_ORACLE: [(&str, &[&[(f64, f64)]], f64); 4] = [
    ("jordan3", &[&[(1.0, 0.0), (1.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (1.0, 0.0), (1.0, 0.0)], &[(0.0, 0.0), (0.0, 0.0), (1.0, 0.0)]], 1.7071067811865475),
    (
        "upper_cplx",
        &[&[(0.0, 1.0), (2.0, 0.0), (0.0, 0.0)], &[(0.0, 0.0), (-1.0, 0.0), (1.0, -1.0)], &[(0.5, 0.0), (0.0, 0.0), (2.0, 0.0)]],
        2.2509044255253254,
    ),
    ("rot_shift", &[&[(0.0, 0.0), (2.0, 0.0)], &[(0.0, 0.5), (1.0, 0.0)]], 1.7385485327684072),
    ("skewish", &[&[(1.0, 0.0), (3.0, 0.0)], &[(-1.0, 0.0), (0.0, 1.0)]], 2.5979648227763468),
];

pub fn norms(tol: f64) -> PropertyCheck {
    let mut c = Cases::new("norms worked examples and radius oracle [1e-9 oracle, 1e-6 examples]");
    let rt = 1e-11;
    let radius = |m: &CMat<f64>| numerical_radius(m, rt).map(|r| r.value).unwrap_or(f64::NAN);
    for (name, rows, want) in RADIUS_ORACLE {
        c.close(&format!("radius oracle {name}"), radius(&complex_matrix(rows)), want, 1e-9);
    }
    c.close("w of the 2x2 nilpotent", radius(&real_matrix(&[&[0.0, 1.0], &[0.0, 0.0]])), 0.5, 1e-9);
    c.close("w of I", radius(&linalg::identity(3)), 1.0, 1e-9);
    c.close("w of diag(3, -1)", radius(&real_matrix(&[&[3.0, 0.0], &[0.0, -1.0]])), 3.0, 1e-9);

    let x = separating();
    let one = GradedOperator::<f64>::identity(sp11());
    let flip = op(&[&[0.0, 1.0], &[1.0, 0.0]]);
    let nil = op(&[&[0.0, 1.0], &[0.0, 0.0]]);
    let strong = |y: &GradedOperator<f64>| strong_norm(y, rt).map(|r| r.value).unwrap_or(f64::NAN);
    let sigma = |y: &GradedOperator<f64>| sigma_strong_norm(y, rt).map(|r| r.value).unwrap_or(f64::NAN);
    let derived = |y: &GradedOperator<f64>| derived_matrix_norm(y, rt).unwrap_or(f64::NAN);
    c.close("strong norm of the separating element", strong(&x), 2.0, 1e-6);
    c.close("strong norm of 1", strong(&one), 1.0, 1e-6);
    c.close("strong norm of the odd flip", strong(&flip), 1.0, 1e-6);
    let even = op(&[&[1.0, 0.0], &[0.0, -4.0]]);
    c.close("sigma norm of an even element", sigma(&even), strong(&even), 1e-6);
    c.close("sigma norm of the separating element", sigma(&x), 2f64.sqrt(), 1e-6);
    c.close("sigma norm of 0", sigma(&GradedOperator::zero(sp11())), 0.0, 1e-12);
    c.close("derived norm of the nilpotent", derived(&nil), 1.0, 1e-6);
    c.close("derived norm of 1", derived(&one), 1.0, 1e-6);
    c.close("derived norm of the separating element", derived(&x), 2.0, 1e-6);

    let h = random_graded::<f64>(RandomKind::Hermitian, GradedSpace::diag(2, 1).expect("valid"), 4);
    c.close("p_1 of a hermitian element", seminorm_p_omega(&h, creal(1.0), rt).unwrap_or(f64::NAN), h.op_norm(), 1e-6);
    let g = random_graded::<f64>(RandomKind::Generic, GradedSpace::diag(2, 1).expect("valid"), 4);
    let skew = g.sub(&g.superinvolve()).expect("same space");
    c.close("p_1 of a skew element", seminorm_p_omega(&skew, creal(1.0), rt).unwrap_or(f64::NAN), 0.0, 1e-9);
    c.close("R of the nilpotent equals its strong norm", big_r_norm(&nil, 128).map(|s| s.value).unwrap_or(f64::NAN), strong(&nil), 1e-6);

    c.attempt("identity is witnessed on the full space", || {
        let id = LinearMapSpec::<f64>::identity(GradedSpace::diag(2, 1)?)?;
        Ok(rsc_check(&id, &RscConfig { num_eta: 100, xi_budget: 100, seed: 1, tol, signed: false })?.fraction() == 1.0)
    });
    c.attempt("identity is hermitian contractive", || {
        let id = LinearMapSpec::<f64>::identity(GradedSpace::diag(2, 1)?)?;
        Ok(hermitian_contractive_check(&id, 2, 200, 1, 1e-7)?.passed())
    });
    c.attempt("doubling is not hermitian contractive", || {
        let two = LinearMapSpec::<f64>::scaling(sp11(), creal(2.0))?;
        Ok(hermitian_contractive_check(&two, 1, 20, 1, 1e-7)?.violations > 0)
    });
    c.finish()
}

fn e(n: usize, i: usize, j: usize) -> CMat<f64> {
    linalg::unit(n, i, j)
}

/// `Σ_i e_{i0} ⊗ e_{0i}` in `M_n ⊗ M_n`.
pub fn flip_sum(n: usize) -> TensorElement<f64> {
    TensorElement::new(n, n, (0..n).map(|i| (e(n, i, 0), e(n, 0, i))).collect()).expect("valid")
}

/// Frozen Haagerup values from an independent convex solve and direct search.
pub fn haagerup_oracle() -> Vec<(&'static str, TensorElement<f64>, f64)> {
    let c = |rows: &[&[(f64, f64)]]| complex_matrix::<f64>(rows);
    let r = |rows: &[&[f64]]| real_matrix::<f64>(rows);
    let three = TensorElement::new(
        2,
        2,
        vec![
            (r(&[&[1.0, 2.0], &[0.0, 1.0]]), r(&[&[0.0, 1.0], &[1.0, 0.0]])),
            (c(&[&[(0.0, 0.0), (0.0, 1.0)], &[(1.0, 0.0), (0.0, 0.0)]]), r(&[&[1.0, 0.0], &[0.0, -1.0]])),
            (r(&[&[1.0, 0.0], &[1.0, 1.0]]), c(&[&[(2.0, 0.0), (0.0, 0.0)], &[(0.0, 1.0), (1.0, 0.0)]])),
        ],
    )
    .expect("valid");
    let two = TensorElement::new(
        2,
        3,
        vec![
            (r(&[&[1.0, -1.0], &[0.0, 2.0]]), r(&[&[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0], &[0.0, 1.0, 0.0]])),
            (c(&[&[(0.0, 0.0), (1.0, 0.0)], &[(1.0, 0.0), (0.0, 1.0)]]), r(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 2.0]])),
        ],
    )
    .expect("valid");
    let transposed = TensorElement::new(3, 3, (0..3).map(|i| (e(3, 0, i), e(3, i, 0))).collect()).expect("valid");
    vec![
        ("three_terms_2x2", three, 6.5555222688),
        ("two_terms_2x3", two, 5.0124006567),
        ("transposed_flip_3", transposed, 3.0),
    ]
}

pub fn tensor(cfg: &TensorConfig, tol: f64) -> PropertyCheck {
    let mut c = Cases::new("tensor-norm worked examples and Haagerup oracle [1e-6]");
    let i2 = linalg::identity::<f64>(2);
    let unit = TensorElement::new(2, 2, vec![(i2.clone(), i2.clone())]).expect("valid").ungraded().expect("valid");
    let a = complex_matrix::<f64>(&[&[(1.0, 0.0), (2.0, -1.0)], &[(0.0, 0.0), (0.5, 0.0)]]);
    let b = real_matrix::<f64>(&[&[0.0, 3.0, 0.0], &[1.0, 0.0, 1.0], &[0.0, 0.0, -1.0]]);
    let ab = linalg::op_norm(&a) * linalg::op_norm(&b);
    let elem = TensorElement::new(2, 3, vec![(a.clone(), b.clone())]).expect("valid");
    let ends = |r: crate::Result<crate::tensor::NormBracket<f64>>| r.map(|b| b.ends()).unwrap_or((f64::NAN, f64::NAN));

    c.close("injective norm of 1 (x) 1", unit.injective_norm(), 1.0, 1e-12);
    c.close("injective norm of an elementary tensor", elem.injective_norm(), ab, 1e-12);
    c.close("injective norm of the flip sum", flip_sum(2).injective_norm(), 1.0, 1e-12);

    let (lo, hi) = ends(haagerup_norm(&elem, cfg));
    c.close("Haagerup lower on an elementary tensor", lo, ab, 1e-6);
    c.close("Haagerup upper on an elementary tensor", hi, ab, 1e-6);
    let (lo, hi) = ends(projective_norm(&elem, cfg));
    c.close("projective lower on an elementary tensor", lo, ab, 1e-6);
    c.close("projective upper on an elementary tensor", hi, ab, 1e-6);
    for n in [2, 3] {
        let (lo, hi) = ends(haagerup_norm(&flip_sum(n), cfg));
        c.close(&format!("Haagerup lower of the flip sum n={n}"), lo, 1.0, 1e-6);
        c.close(&format!("Haagerup upper of the flip sum n={n}"), hi, 1.0, 1e-6);
    }
    let diag = TensorElement::new(2, 2, vec![(e(2, 0, 0), e(2, 0, 0)), (e(2, 1, 1), e(2, 1, 1))]).expect("valid");
    let (lo, hi) = ends(haagerup_norm(&diag, cfg));
    c.close("Haagerup lower of e11(x)e11 + e22(x)e22", lo, 1.0, 1e-6);
    c.close("Haagerup upper of e11(x)e11 + e22(x)e22", hi, 1.0, 1e-6);
    for (name, t, want) in haagerup_oracle() {
        let (lo, hi) = ends(haagerup_norm(&t, cfg));
        c.close(&format!("Haagerup oracle {name}"), hi, want, 1e-6);
        c.case(&format!("Haagerup oracle {name} lies above the lower end"), lo <= want + 1e-9);
    }

    let herm = TensorElement::new(2, 2, vec![(separating().into_data(), i2.clone())])
        .and_then(|t| t.with_gradings(Some(sp11()), Some(GradedSpace::diag(2, 0).expect("valid"))))
        .expect("valid");
    c.attempt("hermitian element is fixed by the product star", || Ok(star_tensor(&herm, StarMode::Product)? == herm));
    c.attempt("symmetrized norm of a hermitian element is its Haagerup norm", || {
        let (s, h) = (symmetrized_haagerup(&herm, cfg)?.upper, haagerup_norm(&herm, cfg)?.upper);
        Ok((s - h).abs() <= 1e-9)
    });
    c.attempt("symmetrized norm picks the larger involute on the flip sum", || {
        let t = flip_sum(2).ungraded()?;
        let h = haagerup_norm(&t, cfg)?.upper;
        let hs = haagerup_norm(&star_tensor(&t, StarMode::Product)?, cfg)?.upper;
        let s = symmetrized_haagerup(&t, cfg)?.upper;
        Ok(hs > h + 1e-3 && (s - hs).abs() <= 1e-12 && (hs - 2.0).abs() <= 1e-6)
    });
    let (lo, hi) = ends(symmetrized_haagerup(&unit, cfg));
    c.case("symmetrized norm of 1 (x) 1 is 1", (lo - 1.0).abs() <= 1e-6 && (hi - 1.0).abs() <= 1e-6);

    let graded = elem.clone().with_gradings(Some(sp11()), Some(GradedSpace::diag(2, 1).expect("valid"))).expect("valid");
    for mode in StarMode::ALL {
        c.attempt(&format!("{} star is involutive", mode.name()), || {
            let t = if mode == StarMode::AdjointSpace { &herm } else { &graded };
            Ok(star_tensor(&star_tensor(t, mode)?, mode)?.distance(t)? <= 1e-15)
        });
    }
    c.attempt("product star of an elementary tensor", || {
        let s = star_tensor(&graded, StarMode::Product)?;
        let wa = GradedOperator::new(sp11(), a.clone())?.superinvolve();
        let wb = GradedOperator::new(GradedSpace::diag(2, 1)?, b.clone())?.superinvolve();
        Ok(s.terms().len() == 1 && s.terms()[0].a == *wa.data() && s.terms()[0].b == *wb.data())
    });
    let (lo, hi) = ends(projective_norm(&unit, cfg));
    c.case("projective norm of 1 (x) 1 is 1", (lo - 1.0).abs() <= 1e-6 && (hi - 1.0).abs() <= 1e-6);

    c.attempt("dual bracket of 1 (x) 1 contains 1", || Ok(dual_symmetrized_haagerup(&unit, cfg)?.contains(1.0, 1e-9)));
    c.attempt("dual bracket of an elementary tensor contains its norm", || {
        Ok(dual_symmetrized_haagerup(&elem, cfg)?.contains(ab, 1e-6))
    });

    c.attempt("1 (x) 1 is eps-positive and superpositive", || {
        Ok(finite_dim_cstar_tensor(&unit, PositivityCheck::EpsPositive, tol)?
            && finite_dim_cstar_tensor(&unit, PositivityCheck::Superpositive, tol)?)
    });
    c.attempt("product of even eps-positive factors is eps-positive", || {
        let pa = op(&[&[2.0, 0.0], &[0.0, -1.0]]);
        let pb = GradedOperator::new(GradedSpace::diag(1, 2)?, linalg::diag_from(&[creal(1.0), creal(-3.0), creal(-0.5)]))?;
        let ok = is_epsilon_positive(&pa, tol) && is_epsilon_positive(&pb, tol);
        let t = TensorElement::new(2, 3, vec![(pa.into_data(), pb.data().clone())])?
            .with_gradings(Some(sp11()), Some(pb.space()))?;
        Ok(ok && finite_dim_cstar_tensor(&t, PositivityCheck::EpsPositive, tol)?)
    });
    c.attempt("separating element tensored with 1 keeps the separation", || {
        let t = TensorElement::new(2, 2, vec![(separating().into_data(), i2.clone())])?
            .with_gradings(Some(sp11()), Some(GradedSpace::diag(2, 0)?))?;
        Ok(finite_dim_cstar_tensor(&t, PositivityCheck::EpsPositive, tol)?
            && !finite_dim_cstar_tensor(&t, PositivityCheck::Superpositive, tol)?)
    });
    c.finish()
}

pub fn group(cfg: &TensorConfig) -> PropertyCheck {
    let mut c = Cases::new("group-diagonal worked examples");
    let c2 = |v: &[(f64, f64)]| CyclicGroupElement::<f64>::new(v.iter().map(|&(r, i)| cx(r, i)).collect()).expect("valid");
    c.attempt("regular representation of Z/1", || Ok(regular_rep::<f64>(1)? == vec![linalg::identity(1)]));
    c.attempt("regular representation of Z/2", || {
        let r = regular_rep::<f64>(2)?;
        Ok(r[0] == linalg::identity(2) && same(&r[1], &linalg::diag_from(&[creal(1.0), creal(-1.0)]), 1e-15))
    });
    c.attempt("regular representation of Z/3 at the generator", || {
        let z = cis(std::f64::consts::TAU / 3.0);
        Ok(same(&regular_rep::<f64>(3)?[1], &linalg::diag_from(&[creal(1.0), z, z * z]), 1e-15))
    });
    c.attempt("a group element gives one elementary term of unitaries", || {
        let d = delta_k_element(&CyclicGroupElement::<f64>::generator(4, 3)?, 3)?;
        let u = &d.terms[0].1;
        Ok(d.terms.len() == 1 && same(&(u * u.adjoint()), &linalg::identity(4), 1e-14))
    });
    for (label, v) in [("(1, 1)", [(1.0, 0.0), (1.0, 0.0)]), ("(1, -1)", [(1.0, 0.0), (-1.0, 0.0)])] {
        let el = c2(&v);
        let r = delta_k_norm(&el, 1, GroupNormMode::Haagerup, cfg).map(|b| b.ends());
        let (lo, hi) = r.unwrap_or((f64::NAN, f64::NAN));
        c.close(&format!("k=1 norm of {label} lower"), lo, 2.0, 1e-10);
        c.close(&format!("k=1 norm of {label} upper"), hi, 2.0, 1e-10);
    }
    c.attempt("(1, 1) norm does not drop from k=1 to k=2", || {
        let el = c2(&[(1.0, 0.0), (1.0, 0.0)]);
        let k1 = delta_k_norm(&el, 1, GroupNormMode::Haagerup, cfg)?.lower;
        Ok(k1 <= delta_k_norm(&el, 2, GroupNormMode::Haagerup, cfg)?.upper + 1e-6)
    });
    c.case("real symmetric coefficients are fixed", {
        let el = c2(&[(0.5, 0.0), (2.0, 0.0), (-1.0, 0.0), (2.0, 0.0)]);
        el.dual_involution() == el
    });
    c.attempt("a group element maps to its inverse with norm 1 on both sides", || {
        let g = CyclicGroupElement::<f64>::generator(3, 1)?;
        let ok = g.dual_involution() == CyclicGroupElement::generator(3, 2)?;
        let rep = dual_involution_check(&g, 2, GroupNormMode::Haagerup, cfg, 1e-6)?;
        let b = delta_k_norm(&g.dual_involution(), 2, GroupNormMode::Haagerup, cfg)?;
        Ok(ok && rep.passed() && (b.upper - 1.0).abs() <= 1e-6)
    });
    c.attempt("random n=3, k=2 brackets agree under the involution", || {
        let mut r = rng::derive_rng(0x3003, 0);
        let el = CyclicGroupElement::<f64>::random(3, &mut r)?;
        Ok(dual_involution_check(&el, 2, GroupNormMode::Haagerup, cfg, 1e-5)?.passed())
    });
    c.finish()
}
