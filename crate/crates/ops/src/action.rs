//! Generator actions on Laurent polynomials and word evaluation.

use cyclodaha_core::{Field, LaurentPoly, Monomial, Subst};

use crate::coef::Param;
use crate::error::OpsError;
use crate::expr::OperatorExpr;
use crate::gen::Gen;
use crate::rep::{Family, Rep};

type P<F> = LaurentPoly<F>;

fn mul_var<F: Field>(p: &P<F>, i: usize, e: i32) -> P<F> {
    let mut m = Monomial::one(p.nvars());
    m.0[i] = e;
    p.shift(&m)
}

fn hecke_t<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    // T_i = 𝐭 s_i − (𝐭 − 𝐭⁻¹) X_{i+1} (1 − s_i)/(X_i − X_{i+1})
    let (tt, _, d) = rep.tt_data()?;
    let mut out = p.swap(a, a + 1).scale(&tt);
    let dd = mul_var(&p.divided_difference(a, a + 1, &F::one()), a + 1, 1);
    out.add_scaled(&dd, &(-d));
    Ok(out)
}

fn hecke_tinv<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let (_, _, d) = rep.tt_data()?;
    let mut out = hecke_t(rep, a, p)?;
    out.add_scaled(p, &(-d));
    Ok(out)
}

/// `(ωf)(X) = f(qX_N, X_1, …, X_{N−1})`.
fn omega<F: Field>(rep: &Rep<F>, p: &P<F>) -> Result<P<F>, OpsError> {
    let n = p.nvars();
    let q = rep.get(Param::Q)?;
    let mut rules = Vec::with_capacity(n);
    rules.push(Subst::Var { target: n - 1, scale: q.clone() });
    for k in 1..n {
        rules.push(Subst::keep(k - 1));
    }
    Ok(p.substitute(&rules)?)
}

fn omega_inv<F: Field>(rep: &Rep<F>, p: &P<F>) -> Result<P<F>, OpsError> {
    let n = p.nvars();
    let qi = rep.get(Param::Q)?.inv().ok_or(OpsError::SingularCoefficient)?;
    let mut rules = Vec::with_capacity(n);
    for k in 0..n - 1 {
        rules.push(Subst::keep(k + 1));
    }
    rules.push(Subst::Var { target: 0, scale: qi });
    Ok(p.substitute(&rules)?)
}

/// `Y_i = 𝐭^{N−1} T_i⁻¹…T_{N−1}⁻¹ ω T_1…T_{i−1}`.
fn daha_y<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let n = rep.n();
    let mut f = p.clone();
    for b in (0..a).rev() {
        f = hecke_t(rep, b, &f)?;
    }
    f = omega(rep, &f)?;
    for b in (a..n - 1).rev() {
        f = hecke_tinv(rep, b, &f)?;
    }
    let tt = rep.get(Param::Tt)?;
    Ok(f.scale(&tt.pow(n as i64 - 1).unwrap()))
}

/// `Y_i⁻¹ = 𝐭^{−(N−1)} T_{i−1}⁻¹…T_1⁻¹ ω⁻¹ T_{N−1}…T_i`.
fn daha_yinv<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let n = rep.n();
    let mut f = p.clone();
    for b in a..n - 1 {
        f = hecke_t(rep, b, &f)?;
    }
    f = omega_inv(rep, &f)?;
    for b in 0..a {
        f = hecke_tinv(rep, b, &f)?;
    }
    let tt = rep.get(Param::Tt)?;
    Ok(f.scale(&tt.pow(1 - n as i64).ok_or(OpsError::SingularCoefficient)?))
}

/// `Π_{i=1}^{l} (op − Z_i)` with `op` a commuting single operator.
fn root_product<F: Field>(
    rep: &Rep<F>,
    roots: impl Fn(usize) -> Param,
    op: &dyn Fn(&P<F>) -> Result<P<F>, OpsError>,
    p: &P<F>,
) -> Result<P<F>, OpsError> {
    let mut f = p.clone();
    for r in 1..=rep.l() {
        let z = rep.get(roots(r))?.clone();
        let mut g = op(&f)?;
        g.add_scaled(&f, &(-z));
        f = g;
    }
    Ok(f)
}

fn daha_pi<F: Field>(rep: &Rep<F>, p: &P<F>) -> Result<P<F>, OpsError> {
    let mut f = p.clone();
    for b in (0..rep.n() - 1).rev() {
        f = hecke_t(rep, b, &f)?;
    }
    Ok(mul_var(&f, 0, 1))
}

fn daha_pi_inv<F: Field>(rep: &Rep<F>, p: &P<F>) -> Result<P<F>, OpsError> {
    let mut f = mul_var(p, 0, -1);
    for b in 0..rep.n() - 1 {
        f = hecke_tinv(rep, b, &f)?;
    }
    Ok(f)
}

/// `D_1^{(l)} = X_1⁻¹ Π (Y_1 − Z_i)`, conjugated by `T_{i−1}⁻¹…T_1⁻¹`.
fn daha_dl<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let mut f = p.clone();
    for b in (0..a).rev() {
        f = hecke_tinv(rep, b, &f)?;
    }
    f = root_product(rep, Param::Z, &|g| daha_y(rep, 0, g), &f)?;
    f = mul_var(&f, 0, -1);
    for b in 0..a {
        f = hecke_tinv(rep, b, &f)?;
    }
    Ok(f)
}

/// Rational Dunkl operator `ħ∂_i − k Σ_{j≠i} (1 − s_ij)/(X_i − X_j)`.
fn dunkl<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let hbar = rep.get(Param::Hbar)?;
    let k = rep.get(Param::K)?;
    let mut out = p.partial(a).scale(hbar);
    let mk = -k.clone();
    for j in 0..p.nvars() {
        if j != a {
            out.add_scaled(&p.divided_difference(a, j, &F::one()), &mk);
        }
    }
    Ok(out)
}

/// `y_i = X_i D_i − k Σ_{j<i} s_ij`.
fn dtrig<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let k = rep.get(Param::K)?;
    let mut out = mul_var(&dunkl(rep, a, p)?, a, 1);
    let mk = -k.clone();
    for j in 0..a {
        out.add_scaled(&p.swap(a, j), &mk);
    }
    Ok(out)
}

fn deg_pi<F: Field>(p: &P<F>) -> P<F> {
    let mut f = p.clone();
    for b in (0..p.nvars() - 1).rev() {
        f = f.swap(b, b + 1);
    }
    mul_var(&f, 0, 1)
}

fn deg_pi_inv<F: Field>(p: &P<F>) -> P<F> {
    let mut f = mul_var(p, 0, -1);
    for b in 0..p.nvars() - 1 {
        f = f.swap(b, b + 1);
    }
    f
}

/// Degenerate `D_1^{(l)} = X_1⁻¹ Π (y_1 − z_i)`, with `D_i = s_{1i} D_1 s_{1i}`.
fn deg_dl<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let mut f = if a == 0 { p.clone() } else { p.swap(0, a) };
    f = root_product(rep, Param::Zlow, &|g| dtrig(rep, 0, g), &f)?;
    f = mul_var(&f, 0, -1);
    Ok(if a == 0 { f } else { f.swap(0, a) })
}

/// Dunkl–Opdam operator over `Q(ζ_l)`.
fn dunkl_opdam<F: Field>(rep: &Rep<F>, a: usize, p: &P<F>) -> Result<P<F>, OpsError> {
    let hbar = rep.get(Param::Hbar)?;
    let k = rep.get(Param::K)?;
    let zeta = rep.get(Param::Zeta)?;
    let l = rep.l();
    let mut out = p.partial(a).scale(hbar);
    let mut cyc = P::zero(p.nvars());
    let mut cur = p.clone();
    for j in 0..l {
        cyc.add_scaled(&cur, rep.get(Param::C(j))?);
        cur = cur.scale_var(a, zeta)?;
    }
    out.add_scaled(&mul_var(&cyc, a, -1), &(-F::one()));
    let mk = -k.clone();
    let mut zm = F::one();
    for _ in 0..l {
        for r in 0..p.nvars() {
            if r != a {
                out.add_scaled(&p.divided_difference(a, r, &zm), &mk);
            }
        }
        zm = zm * zeta;
    }
    Ok(out)
}

fn check<F: Field>(rep: &Rep<F>, g: Gen) -> Result<(), OpsError> {
    if !g.allowed_in(rep.family()) {
        return Err(OpsError::FamilyMismatch { gen: g.to_string(), family: rep.family().to_string() });
    }
    if !g.index_valid(rep.n()) {
        return Err(OpsError::IndexOutOfRange { gen: g.to_string(), n: rep.n() });
    }
    Ok(())
}

/// Apply one generator in `rep`'s polynomial representation.
pub fn apply_generator<F: Field>(rep: &Rep<F>, g: Gen, p: &P<F>) -> Result<P<F>, OpsError> {
    check(rep, g)?;
    let fam = rep.family();
    Ok(match g {
        Gen::S(i) => p.swap(i - 1, i),
        Gen::Sij(i, j) => p.swap(i - 1, j - 1),
        Gen::X(i) => mul_var(p, i - 1, 1),
        Gen::Xinv(i) => mul_var(p, i - 1, -1),
        Gen::T(i) => hecke_t(rep, i - 1, p)?,
        Gen::Tinv(i) => hecke_tinv(rep, i - 1, p)?,
        Gen::Y(i) => daha_y(rep, i - 1, p)?,
        Gen::Yinv(i) => daha_yinv(rep, i - 1, p)?,
        Gen::Omega => omega(rep, p)?,
        Gen::OmegaInv => omega_inv(rep, p)?,
        Gen::Tau(j) => p.scale_var(j - 1, rep.get(Param::Q)?)?,
        Gen::Pi if fam == Family::Daha => daha_pi(rep, p)?,
        Gen::Pi => deg_pi(p),
        Gen::PiInv if fam == Family::Daha => daha_pi_inv(rep, p)?,
        Gen::PiInv => deg_pi_inv(p),
        Gen::PiMinus if fam == Family::Daha => {
            let f = root_product(rep, Param::Z, &|h| daha_y(rep, 0, h), p)?;
            daha_pi_inv(rep, &f)?
        }
        Gen::PiMinus => deg_pi_inv(&root_product(rep, Param::Zlow, &|h| dtrig(rep, 0, h), p)?),
        Gen::Dl(i) if fam == Family::Daha => daha_dl(rep, i - 1, p)?,
        Gen::Dl(i) => deg_dl(rep, i - 1, p)?,
        Gen::Dunkl(i) => dunkl(rep, i - 1, p)?,
        Gen::Dtrig(i) | Gen::Ylow(i) => dtrig(rep, i - 1, p)?,
        Gen::DO(i) => dunkl_opdam(rep, i - 1, p)?,
        Gen::Sigma(i) => p.scale_var(i - 1, rep.get(Param::Zeta)?)?,
    })
}

/// Evaluate a linear combination of words on `p`.
///
/// Terms are grouped by their rightmost letters so that shared suffixes are
/// applied once.
pub fn apply_expr<F: Field>(rep: &Rep<F>, e: &OperatorExpr, p: &P<F>) -> Result<P<F>, OpsError> {
    let mut terms: Vec<(F, &[Gen])> = Vec::with_capacity(e.len());
    for (w, c) in e.terms() {
        let v = rep.eval(c)?;
        if !v.is_zero() {
            terms.push((v, w.as_slice()));
        }
    }
    for g in e.generators() {
        check(rep, g)?;
    }
    eval_suffix_tree(rep, &terms, p)
}

fn eval_suffix_tree<F: Field>(rep: &Rep<F>, terms: &[(F, &[Gen])], p: &P<F>) -> Result<P<F>, OpsError> {
    let mut out = P::zero(p.nvars());
    let mut groups: Vec<(Gen, Vec<(F, &[Gen])>)> = Vec::new();
    for (c, w) in terms {
        match w.split_last() {
            None => out.add_scaled(p, c),
            Some((last, rest)) => match groups.iter_mut().find(|(g, _)| g == last) {
                Some((_, v)) => v.push((c.clone(), rest)),
                None => groups.push((*last, vec![(c.clone(), rest)])),
            },
        }
    }
    for (g, sub) in groups {
        let gp = apply_generator(rep, g, p)?;
        if gp.is_zero() {
            continue;
        }
        let r = eval_suffix_tree(rep, &sub, &gp)?;
        out = &out + &r;
    }
    Ok(out)
}
