//! The property registry. Each property draws its inputs from the trial's
//! own random stream and records one or more scaled checks.

use crate::ensemble::{self, TrialRng};
use crate::error::Result;
use crate::kernel::{abs_op, hermitian_eig, operator_norm, polar, sqrt_psd, svd};
use crate::matrix::{self, Matrix, C64};
use crate::nuclear::{
    adjoint_rep, compose_rep, k_map, mix_rep, nuclear_apply, nuclear_norm, optimal_rep, rep_cost,
};
use crate::schatten::{
    basis_trace_sums, dual_attainment, factor_hs, hs_inner, hs_norm, schatten_norm, trace,
    trace_norm,
};
use crate::spectrum;
use crate::tensor::{
    apply_linearized, bilinearize, coeff_matrix, injective_norm, linearize, mix_representation,
    projective_norm, BilinearForm, BilinearMap, TensorElement,
};

use super::reports::{density_report, shift_report};

/// Which configured tolerance a property is judged against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ToleranceClass {
    Algebraic,
    Stochastic,
}

pub struct Property {
    pub id: &'static str,
    /// The result the property exercises.
    pub anchor: &'static str,
    pub class: ToleranceClass,
    pub min_dim: usize,
    pub max_dim: usize,
    /// Deliberately false assertion used to check that failures surface.
    pub mutant: bool,
    pub(crate) run: fn(&mut Trial) -> Result<()>,
}

impl Property {
    pub fn applies_to(&self, dim: usize) -> bool {
        (self.min_dim..=self.max_dim).contains(&dim)
    }
}

pub(crate) struct Check {
    pub label: &'static str,
    /// Slack divided by the check's tolerance multiplier.
    pub violation: f64,
}

pub struct Trial {
    pub rng: TrialRng,
    pub dim: usize,
    pub index: usize,
    pub(crate) checks: Vec<Check>,
    pub(crate) witness: Option<Matrix>,
}

const TINY: f64 = 1e-300;

impl Trial {
    pub(crate) fn new(rng: TrialRng, dim: usize, index: usize) -> Self {
        Trial {
            rng,
            dim,
            index,
            checks: Vec::new(),
            witness: None,
        }
    }

    fn record(&mut self, label: &'static str, slack: f64, factor: f64) {
        let violation = if slack.is_nan() {
            f64::MAX
        } else {
            slack / factor
        };
        self.checks.push(Check { label, violation });
    }

    /// `lhs ≤ rhs` up to `factor·tol` relative to the larger magnitude.
    fn le(&mut self, label: &'static str, lhs: f64, rhs: f64, factor: f64) {
        let scale = lhs.abs().max(rhs.abs()).max(TINY);
        self.record(label, (lhs - rhs) / scale, factor);
    }

    /// `lhs ≤ rhs` up to `factor·tol·scale`.
    fn le_scaled(&mut self, label: &'static str, lhs: f64, rhs: f64, scale: f64, factor: f64) {
        self.record(label, (lhs - rhs) / scale.max(TINY), factor);
    }

    /// `|a − b| ≤ factor·tol·scale`.
    fn close(&mut self, label: &'static str, a: f64, b: f64, scale: f64, factor: f64) {
        self.record(label, (a - b).abs() / scale.max(TINY), factor);
    }

    fn close_c(&mut self, label: &'static str, a: C64, b: C64, scale: f64, factor: f64) {
        self.record(label, (a - b).norm() / scale.max(TINY), factor);
    }

    fn witness(&mut self, m: &Matrix) {
        self.witness = Some(m.clone());
    }

    fn ginibre(&mut self) -> Matrix {
        ensemble::ginibre(&mut self.rng, self.dim, self.dim)
    }

    /// Ginibre draw, rank-deficient on every fourth trial.
    fn operator(&mut self) -> Matrix {
        let t = if self.index % 4 == 3 && self.dim >= 2 {
            ensemble::low_rank(&mut self.rng, self.dim, self.dim / 2)
        } else {
            self.ginibre()
        };
        self.witness(&t);
        t
    }

    fn unit(&mut self, n: usize) -> Vec<C64> {
        ensemble::unit_vector(&mut self.rng, n)
    }
}

fn matrix_trace_product(a: &Matrix, b: &Matrix) -> C64 {
    // tr(AB) without forming AB
    let n = a.rows();
    let mut s = C64::new(0.0, 0.0);
    for i in 0..n {
        for j in 0..n {
            s += a[(i, j)] * b[(j, i)];
        }
    }
    s
}

fn norm_chain(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let op = operator_norm(&a)?;
    let hs = hs_norm(&a);
    let tr = trace_norm(&a)?;
    t.le("op <= hs", op, hs, 1.0);
    t.le("hs <= tr", hs, tr, 1.0);
    t.le("hs^2 <= op*tr", hs * hs, op * tr, 1.0);
    Ok(())
}

fn ideal_bounds(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let s = t.ginibre();
    let sn = operator_norm(&s)?;
    let (a1, a2) = (trace_norm(&a)?, hs_norm(&a));
    let (sa, as_) = (&s * &a, &a * &s);
    t.le("|ST|1 <= |S||T|1", trace_norm(&sa)?, sn * a1, 1.0);
    t.le("|TS|1 <= |S||T|1", trace_norm(&as_)?, sn * a1, 1.0);
    t.le("|ST|2 <= |S||T|2", hs_norm(&sa), sn * a2, 1.0);
    t.le("|TS|2 <= |S||T|2", hs_norm(&as_), sn * a2, 1.0);
    Ok(())
}

fn adjoint_invariance(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let adj = a.adjoint();
    let a1 = trace_norm(&a)?;
    let a2 = hs_norm(&a);
    t.close("|T*|1 = |T|1", trace_norm(&adj)?, a1, a1, 0.1);
    t.close("|T*|2 = |T|2", hs_norm(&adj), a2, a2, 0.1);
    Ok(())
}

fn triangle(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let b = t.operator();
    let sum = &a + &b;
    t.le(
        "|S+T|1 <= |S|1+|T|1",
        trace_norm(&sum)?,
        trace_norm(&a)? + trace_norm(&b)?,
        1.0,
    );
    t.le(
        "|S+T|2 <= |S|2+|T|2",
        hs_norm(&sum),
        hs_norm(&a) + hs_norm(&b),
        1.0,
    );
    Ok(())
}

fn trace_identities(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let s = t.ginibre();
    let a1 = trace_norm(&a)?;
    let sn = operator_norm(&s)?;
    let ta = trace(&a)?;
    t.close_c(
        "tr(TS) = tr(ST)",
        trace(&(&a * &s))?,
        trace(&(&s * &a))?,
        hs_norm(&a) * hs_norm(&s),
        1.0,
    );
    t.close_c(
        "tr(T*) = conj tr(T)",
        trace(&a.adjoint())?,
        ta.conj(),
        a1,
        1.0,
    );
    t.le("|tr T| <= |T|1", ta.norm(), a1, 1.0);
    let s_abs = &s * &abs_op(&a)?;
    t.le("|tr(S|T|)| <= |S||T|1", trace(&s_abs)?.norm(), sn * a1, 1.0);
    let q = ensemble::haar_unitary(&mut t.rng, t.dim);
    let conj = &(&q.adjoint() * &a) * &q;
    t.close_c("tr(Q*TQ) = tr(T)", trace(&conj)?, ta, a1, 1.0);
    Ok(())
}

fn hs_identities(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let s = t.ginibre();
    let a2 = hs_norm(&a);
    let sq = a2 * a2;
    let sigma = svd(&a)?.singular_values;
    let abs = abs_op(&a)?;
    t.close(
        "|T|2^2 = tr(T*T)",
        trace(&(&a.adjoint() * &a))?.re,
        sq,
        sq,
        1.0,
    );
    t.close(
        "|T|2^2 = ||T|^2|1",
        trace_norm(&(&abs * &abs))?,
        sq,
        sq,
        1.0,
    );
    t.close(
        "|T|2^2 = sum sigma^2",
        sigma.iter().map(|x| x * x).sum(),
        sq,
        sq,
        1.0,
    );
    t.close("|T|2 = ||T||2", hs_norm(&abs), a2, a2, 1.0);
    t.close_c(
        "<T;T>2 = |T|2^2",
        hs_inner(&a, &a)?,
        C64::new(sq, 0.0),
        sq,
        1.0,
    );
    t.le(
        "|<T;S>2| <= |T|2|S|2",
        hs_inner(&a, &s)?.norm(),
        a2 * hs_norm(&s),
        1.0,
    );
    Ok(())
}

fn abs_polar(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let op = operator_norm(&a)?;
    let abs = abs_op(&a)?;
    t.close("|T| = ||T||", operator_norm(&abs)?, op, op, 1.0);
    t.close("|T| = |T*|", operator_norm(&a.adjoint())?, op, op, 1.0);
    for _ in 0..20 {
        let x = t.unit(t.dim);
        let lhs = matrix::norm(&a.mul_vec(&x));
        let rhs = matrix::norm(&abs.mul_vec(&x));
        t.close("|Tx| = ||T|x|", lhs, rhs, op, 1.0);
    }

    let f = svd(&a)?;
    t.close(
        "svd reconstruction",
        (&f.reconstruct() - &a).frobenius_norm(),
        0.0,
        op,
        1.0,
    );
    t.close("U*U = I", f.u.orthonormality_defect(), 0.0, 1.0, 1.0);
    t.close("V*V = I", f.v.orthonormality_defect(), 0.0, 1.0, 1.0);

    let p = polar(&a)?;
    t.close(
        "WP = T",
        operator_norm(&(&p.reconstruct() - &a))?,
        0.0,
        op,
        1.0,
    );
    t.close("P = |T|", operator_norm(&(&p.p - &abs))?, 0.0, op, 1.0);
    let proj = &p.w.adjoint() * &p.w;
    t.close(
        "W*W idempotent",
        operator_norm(&(&(&proj * &proj) - &proj))?,
        0.0,
        1.0,
        1.0,
    );
    t.close(
        "W*W P = P",
        operator_norm(&(&(&proj * &p.p) - &p.p))?,
        0.0,
        op,
        1.0,
    );
    let rank = f.rank(1e-10) as f64;
    t.close(
        "tr(W*W) = rank",
        trace(&proj)?.re,
        rank,
        rank.max(1.0),
        10.0,
    );

    let gram = &a.adjoint() * &a;
    let e = hermitian_eig(&gram)?;
    let gn = op * op;
    t.close(
        "eig reconstruction",
        (&e.reconstruct() - &gram).frobenius_norm(),
        0.0,
        gn,
        1.0,
    );
    t.close("Q*Q = I", e.vectors.orthonormality_defect(), 0.0, 1.0, 1.0);
    let root = sqrt_psd(&gram)?;
    t.close(
        "sqrt(P)^2 = P",
        operator_norm(&(&(&root * &root) - &gram))?,
        0.0,
        gn,
        10.0,
    );
    if t.index % 4 != 3 {
        // full rank: the two routes to |T| agree
        t.close(
            "sqrt(T*T) = |T|",
            operator_norm(&(&root - &abs))?,
            0.0,
            op,
            10.0,
        );
    }
    Ok(())
}

fn factorization(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let op = operator_norm(&a)?;
    let a1 = trace_norm(&a)?;
    let f = factor_hs(&a)?;
    t.close(
        "AB = T",
        operator_norm(&(&(&f.a * &f.b) - &a))?,
        0.0,
        op,
        1.0,
    );
    t.close(
        "|A|2 |B|2 = |T|1",
        hs_norm(&f.a) * hs_norm(&f.b),
        a1,
        a1,
        10.0,
    );
    Ok(())
}

fn basis_independence(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let a1 = trace_norm(&a)?;
    let ta = trace(&a)?;
    for _ in 0..50 {
        let b = ensemble::haar_unitary(&mut t.rng, t.dim);
        let s = basis_trace_sums(&a, &b)?;
        t.close("sum <|T|b;b> = |T|1", s.abs_diag_of_abs, a1, a1, 1.0);
        t.le("sum |<Tb;b>| <= |T|1", s.abs_sum, a1, 1.0);
        t.close_c("sum <Tb;b> = tr T", s.sum, ta, a1, 1.0);
    }
    Ok(())
}

fn duality(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let a1 = trace_norm(&a)?;
    let d = dual_attainment(&a)?;
    t.close("Re tr(ST) = |T|1", d.value, a1, a1, 10.0);
    t.le("|S| <= 1", operator_norm(&d.s)?, 1.0, 1.0);
    for _ in 0..500 {
        let c = ensemble::unitary_times_diagonal(&mut t.rng, t.dim);
        let v = matrix_trace_product(&c, &a).re;
        t.le("Re tr(S'T) <= attained", v, d.value, 10.0);
    }
    Ok(())
}

fn lidskii(t: &mut Trial) -> Result<()> {
    let a = t.ginibre();
    t.witness(&a);
    let eig = spectrum::eigenvalues(&a)?;
    let sum: C64 = eig.iter().sum();
    let scale = trace_norm(&a)?;
    t.close_c("tr T = sum of eigenvalues", trace(&a)?, sum, scale, 100.0);
    Ok(())
}

fn density(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let sigma = svd(&a)?.singular_values;
    let a1: f64 = sigma.iter().sum();
    let steps = density_report(&a)?;
    for w in steps.windows(2) {
        t.le_scaled(
            "residual nonincreasing",
            w[1].residual,
            w[0].residual,
            a1,
            1.0,
        );
    }
    for s in &steps {
        let suffix: f64 = sigma[s.k..].iter().sum();
        t.close("residual = suffix sum", s.residual, suffix, a1, 1.0);
    }
    t.close(
        "final residual = 0",
        steps.last().map_or(0.0, |s| s.residual),
        0.0,
        a1,
        1.0,
    );
    Ok(())
}

fn nuclear_trace(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let a1 = trace_norm(&a)?;
    let op = operator_norm(&a)?;
    t.close("|T|N = |T|1", nuclear_norm(&a)?, a1, a1, 1.0);
    let rep = optimal_rep(&a)?;
    t.close("optimal cost = |T|1", rep_cost(&rep), a1, a1, 1.0);
    t.close(
        "optimal rep reconstructs T",
        operator_norm(&(&rep.to_matrix() - &a))?,
        0.0,
        op,
        1.0,
    );
    let r = rep.len();
    for i in 0..1000 {
        let g = ensemble::ginibre(&mut t.rng, r, r);
        let mixed = match mix_rep(&rep, &g) {
            Ok(m) => m,
            // Ginibre draws are almost surely invertible; skip the null event
            Err(crate::Error::SingularMix) => continue,
            Err(e) => return Err(e),
        };
        t.le("mixed cost >= |T|1", a1, rep_cost(&mixed), 1.0);
        if i < 10 {
            let inv = crate::kernel::inverse(&g).ok_or(crate::Error::SingularMix)?;
            let cond = operator_norm(&g)? * operator_norm(&inv)?;
            let d = operator_norm(&(&mixed.to_matrix() - &a))?;
            t.close("mixed rep represents T", d, 0.0, op * cond, 1.0);
        }
    }
    let terms = 1 + t.index % (2 * t.dim);
    let any = ensemble::random_rep(&mut t.rng, t.dim, terms);
    t.le(
        "rep cost >= |T|N",
        nuclear_norm(&any.to_matrix())?,
        rep_cost(&any),
        1.0,
    );
    Ok(())
}

fn nuclear_triangle(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    let b = t.ginibre();
    let (ra, rb) = (optimal_rep(&a)?, optimal_rep(&b)?);
    let cat = ra.concat(&rb)?;
    let (ca, cb) = (rep_cost(&ra), rep_cost(&rb));
    t.close(
        "cost(concat) = sum of costs",
        rep_cost(&cat),
        ca + cb,
        ca + cb,
        1.0,
    );
    let sum = &a + &b;
    let d = operator_norm(&(&cat.to_matrix() - &sum))?;
    t.close(
        "concat represents S+T",
        d,
        0.0,
        operator_norm(&a)? + operator_norm(&b)?,
        1.0,
    );
    let na = nuclear_norm(&a)?;
    t.le(
        "|S+T|N <= |S|N+|T|N",
        nuclear_norm(&sum)?,
        na + nuclear_norm(&b)?,
        1.0,
    );
    t.le("|T| <= |T|N", operator_norm(&a)?, na, 1.0);
    Ok(())
}

fn random_element(t: &mut Trial, dim_y: usize) -> TensorElement {
    let pairs = 1 + t.index % (2 * t.dim);
    ensemble::random_tensor(&mut t.rng, t.dim, dim_y, pairs)
}

fn kmap_contraction(t: &mut Trial) -> Result<()> {
    let f = random_element(t, t.dim);
    let g = random_element(t, t.dim);
    let k = k_map(&f);
    t.witness(&k);
    t.le(
        "|K(F)| <= |F|proj",
        operator_norm(&k)?,
        projective_norm(&f)?,
        1.0,
    );
    let sum = k_map(&f.concat(&g)?);
    let scale = operator_norm(&k)? + operator_norm(&k_map(&g))?;
    t.close(
        "K linear",
        operator_norm(&(&sum - &(&k + &k_map(&g))))?,
        0.0,
        scale,
        1.0,
    );

    let x = ensemble::gaussian_vector(&mut t.rng, t.dim);
    let y = ensemble::gaussian_vector(&mut t.rng, t.dim);
    let expected = matrix::norm(&x) * matrix::norm(&y);
    let single = TensorElement::single(x, y)?;
    t.close(
        "|K(x⊗y)| = |x||y|",
        operator_norm(&k_map(&single))?,
        expected,
        expected,
        1.0,
    );
    t.close(
        "|x⊗y|proj = |x||y|",
        projective_norm(&single)?,
        expected,
        expected,
        1.0,
    );
    Ok(())
}

fn crossnorm_sandwich(t: &mut Trial) -> Result<()> {
    let dim_y = t.dim + t.index % 2;
    let f = random_element(t, dim_y);
    let inj = injective_norm(&f)?;
    let proj = projective_norm(&f)?;
    t.le("inj <= proj", inj, proj, 1.0);
    t.le(
        "proj <= representation cost",
        proj,
        f.representation_cost(),
        1.0,
    );
    for _ in 0..50 {
        // Σᵢ g(xᵢ)h(yᵢ) evaluated pair by pair
        let g = t.unit(t.dim);
        let h = t.unit(dim_y);
        let v: C64 = f
            .pairs()
            .iter()
            .map(|p| matrix::bilinear(&g, &p.x) * matrix::bilinear(&h, &p.y))
            .sum();
        t.le("|sum g(x)h(y)| <= inj", v.norm(), inj, 1.0);
    }

    let x = ensemble::gaussian_vector(&mut t.rng, t.dim);
    let y = ensemble::gaussian_vector(&mut t.rng, dim_y);
    let expected = matrix::norm(&x) * matrix::norm(&y);
    let single = TensorElement::single(x, y)?;
    t.close(
        "|x⊗y|inj = |x||y|",
        injective_norm(&single)?,
        expected,
        expected,
        0.1,
    );
    t.close(
        "|x⊗y|proj = |x||y|",
        projective_norm(&single)?,
        expected,
        expected,
        0.1,
    );
    Ok(())
}

fn representation_invariance(t: &mut Trial) -> Result<()> {
    let f = random_element(t, t.dim + 1);
    let c = coeff_matrix(&f);
    let scale = c.frobenius_norm();
    let (inj, proj) = (injective_norm(&f)?, projective_norm(&f)?);
    let r = f.len() + 2;
    let g = ensemble::ginibre(&mut t.rng, r, r);
    let mixed = mix_representation(&f, &g)?;
    let cond = operator_norm(&g)? * operator_norm(&crate::kernel::inverse(&g).unwrap())?;
    // the mixed coefficients carry rounding amplified by cond(G)
    let d = (&coeff_matrix(&mixed) - &c).frobenius_norm();
    t.close("C(mixed) = C(F)", d, 0.0, scale * cond, 1.0);
    t.close(
        "proj(mixed) = proj(F)",
        projective_norm(&mixed)?,
        proj,
        proj * cond,
        1.0,
    );
    t.close(
        "inj(mixed) = inj(F)",
        injective_norm(&mixed)?,
        inj,
        inj * cond,
        1.0,
    );
    t.le(
        "proj <= cost(mixed)",
        proj,
        mixed.representation_cost(),
        1.0,
    );

    let padded = f.padded(f.len() + 3);
    t.close(
        "C(padded) = C(F)",
        (&coeff_matrix(&padded) - &c).frobenius_norm(),
        0.0,
        scale,
        1.0,
    );
    t.close(
        "proj(padded) = proj(F)",
        projective_norm(&padded)?,
        proj,
        proj,
        1.0,
    );
    let n = f.len();
    let reverse = Matrix::from_fn(n, n, |i, j| {
        C64::new(if i + j == n - 1 { 1.0 } else { 0.0 }, 0.0)
    });
    let reordered = mix_representation(&f, &reverse)?;
    t.close(
        "C(reordered) = C(F)",
        (&coeff_matrix(&reordered) - &c).frobenius_norm(),
        0.0,
        scale,
        1.0,
    );
    t.close(
        "inj(reordered) = inj(F)",
        injective_norm(&reordered)?,
        inj,
        inj,
        1.0,
    );
    Ok(())
}

fn composition(t: &mut Trial) -> Result<()> {
    let terms = 1 + t.index % (2 * t.dim);
    let rep = ensemble::random_rep(&mut t.rng, t.dim, terms);
    let a = rep.to_matrix();
    t.witness(&a);
    let l = t.ginibre();
    let r = t.ginibre();
    let (ln, rn) = (operator_norm(&l)?, operator_norm(&r)?);
    let cost = rep_cost(&rep);
    let c = compose_rep(&l, &rep, &r)?;
    let target = &(&l * &a) * &r;
    let d = operator_norm(&(&c.to_matrix() - &target))?;
    t.close("compose = L T R", d, 0.0, ln * cost * rn, 1.0);
    t.le(
        "cost(LTR) <= |L| cost |R|",
        rep_cost(&c),
        ln * cost * rn,
        1.0,
    );

    let adj = adjoint_rep(&rep);
    let d = operator_norm(&(&adj.to_matrix() - &a.adjoint()))?;
    t.close("adjoint rep = T*", d, 0.0, cost, 0.1);
    t.close("cost(adjoint) = cost", rep_cost(&adj), cost, cost, 0.1);

    let x = t.unit(t.dim);
    let lhs = nuclear_apply(&rep, &x)?;
    let rhs = a.mul_vec(&x);
    let diff: Vec<C64> = lhs.iter().zip(&rhs).map(|(p, q)| p - q).collect();
    t.close("apply = matrix action", matrix::norm(&diff), 0.0, cost, 0.1);
    Ok(())
}

fn bilinear_isometry(t: &mut Trial) -> Result<()> {
    let m = ensemble::ginibre(&mut t.rng, t.dim, t.dim + 1);
    t.witness(&m);
    let phi = BilinearForm::new(m.clone());
    let lin = linearize(&phi);
    t.close(
        "bilinearize(linearize) = id",
        (&bilinearize(&lin).coeffs - &m).frobenius_norm(),
        0.0,
        1.0,
        1.0,
    );
    let norm = phi.norm()?;
    for _ in 0..10 {
        let f = random_element(t, t.dim + 1);
        let v = apply_linearized(&lin, &f)?;
        let by_pairs: C64 = f.pairs().iter().map(|p| phi.eval(&p.x, &p.y)).sum();
        t.close_c(
            "Phi(F) = sum phi(x,y)",
            v,
            by_pairs,
            norm * f.representation_cost(),
            1.0,
        );
        t.le(
            "|Phi(F)| <= |phi| |F|proj",
            v.norm(),
            norm * projective_norm(&f)?,
            1.0,
        );
    }
    let s = svd(&m)?;
    let x: Vec<C64> = s.u.col(0).into_iter().map(|z| z.conj()).collect();
    let top = TensorElement::single(x, s.v.col(0))?;
    t.close(
        "sup attained on x⊗y",
        apply_linearized(&lin, &top)?.norm(),
        norm,
        norm,
        1.0,
    );
    Ok(())
}

fn bilinear_vector_bound(t: &mut Trial) -> Result<()> {
    let outputs = 1 + t.index % 3;
    let slices = (0..outputs)
        .map(|_| ensemble::ginibre(&mut t.rng, t.dim, t.dim + 1))
        .collect();
    let map = BilinearMap::new(slices)?;
    let lower = map.norm_lower_bound(&mut t.rng, 20, 100)?;
    for _ in 0..5 {
        let f = random_element(t, t.dim + 1);
        let v = matrix::norm(&map.apply(&f)?);
        t.le(
            "|Phi(F)| <= |phi| |F|proj",
            v,
            lower * projective_norm(&f)?,
            1.0,
        );
    }
    for _ in 0..20 {
        let x = t.unit(t.dim);
        let y = t.unit(t.dim + 1);
        t.le(
            "|phi(x,y)| <= |phi|",
            matrix::norm(&map.eval(&x, &y)),
            lower,
            1.0,
        );
    }
    Ok(())
}

fn shift(t: &mut Trial) -> Result<()> {
    let n = t.dim;
    let r = shift_report(n)?;
    let expected = (n - 1) as f64;
    // absolute bound of 1e-12 at the default tolerance
    t.close("abs diagonal sum = 0", r.abs_diag_sum, 0.0, 1.0, 1e-3);
    t.close("|S|1 = n-1", r.trace_norm, expected, expected, 1.0);
    let s = crate::schatten::shift_matrix(n)?;
    t.witness(&s);
    let q = ensemble::haar_unitary(&mut t.rng, n);
    let sums = basis_trace_sums(&s, &q)?;
    t.le("sum |<Sb;b>| <= |S|1", sums.abs_sum, r.trace_norm, 1.0);
    t.close(
        "sum <|S|b;b> = n-1",
        sums.abs_diag_of_abs,
        expected,
        expected,
        1.0,
    );
    Ok(())
}

fn mutant_trace_le_operator(t: &mut Trial) -> Result<()> {
    let a = t.operator();
    t.le(
        "|T|1 <= |T| (false)",
        trace_norm(&a)?,
        schatten_norm(&a, f64::INFINITY)?,
        1.0,
    );
    Ok(())
}

const ANY: usize = usize::MAX;

macro_rules! property {
    ($id:ident, $anchor:expr) => {
        property!($id, $anchor, ToleranceClass::Algebraic, 1, ANY, false)
    };
    ($id:ident, $anchor:expr, $class:expr, $min:expr, $max:expr, $mutant:expr) => {
        Property {
            id: stringify!($id),
            anchor: $anchor,
            class: $class,
            min_dim: $min,
            max_dim: $max,
            mutant: $mutant,
            run: $id,
        }
    };
}

static REGISTRY: [Property; 21] = [
    property!(norm_chain, "trace class inside Hilbert-Schmidt: ‖T‖ ≤ ‖T‖₂ ≤ ‖T‖₁, ‖T‖₂² ≤ ‖T‖‖T‖₁"),
    property!(ideal_bounds, "ideal property: ‖ST‖_p, ‖TS‖_p ≤ ‖S‖‖T‖_p for p = 1, 2"),
    property!(adjoint_invariance, "adjoint invariance: ‖T*‖₁ = ‖T‖₁, ‖T*‖₂ = ‖T‖₂"),
    property!(triangle, "triangle inequality for ‖·‖₁ and ‖·‖₂"),
    property!(trace_identities, "trace: tr(TS) = tr(ST), tr(T*) = conj tr(T), |tr T| ≤ ‖T‖₁, |tr(S|T|)| ≤ ‖S‖‖T‖₁, basis independence"),
    property!(hs_identities, "Hilbert-Schmidt inner product: ⟨T;T⟩₂ = tr(T*T) = ‖T‖₂² = ‖|T|²‖₁, Schwarz"),
    property!(abs_polar, "modulus and polar decomposition: ‖Tx‖ = ‖|T|x‖, ‖T‖ = ‖|T|‖ = ‖T*‖, T = W|T|"),
    property!(factorization, "trace class as products of Hilbert-Schmidt operators: T = AB, ‖A‖₂‖B‖₂ = ‖T‖₁"),
    property!(basis_independence, "trace-norm basis sums: Σ⟨|T|b;b⟩ = ‖T‖₁, Σ|⟨Tb;b⟩| ≤ ‖T‖₁"),
    property!(duality, "trace duality: sup over ‖S‖ ≤ 1 of |tr(ST)| equals ‖T‖₁ and is attained"),
    property!(lidskii, "trace equals the sum of eigenvalues", ToleranceClass::Algebraic, 1, 4, false),
    property!(density, "finite-rank truncations converge in ‖·‖₁"),
    property!(nuclear_trace, "nuclear norm equals trace norm; every representation costs at least ‖T‖₁"),
    property!(nuclear_triangle, "nuclear norm triangle inequality and ‖T‖ ≤ ‖T‖_N"),
    property!(kmap_contraction, "tensors of functionals to operators is a contraction of norm one"),
    property!(crossnorm_sandwich, "injective ≤ projective, both equal ‖x‖‖y‖ on single tensors"),
    property!(representation_invariance, "crossnorms do not depend on the representation"),
    property!(composition, "‖LTR‖_N ≤ ‖L‖‖T‖_N‖R‖ and the adjoint representation"),
    property!(bilinear_isometry, "bounded bilinear forms are isometric to functionals on the projective tensor product"),
    property!(bilinear_vector_bound, "vector-valued bilinear maps: ‖Φ(F)‖ ≤ ‖φ‖‖F‖∧", ToleranceClass::Stochastic, 1, ANY, false),
    property!(shift, "truncated unilateral shift: zero diagonal, trace norm n − 1", ToleranceClass::Algebraic, 2, ANY, false),
];

static MUTANTS: [Property; 1] = [property!(
    mutant_trace_le_operator,
    "deliberately false: ‖T‖₁ ≤ ‖T‖",
    ToleranceClass::Algebraic,
    1,
    ANY,
    true
)];

/// Every property, the mutation check last.
pub fn registry() -> impl Iterator<Item = &'static Property> {
    REGISTRY.iter().chain(MUTANTS.iter())
}

pub fn find(id: &str) -> Option<&'static Property> {
    registry().find(|p| p.id == id)
}

/// The properties run by `"all"`.
pub fn default_properties() -> impl Iterator<Item = &'static Property> {
    REGISTRY.iter()
}
