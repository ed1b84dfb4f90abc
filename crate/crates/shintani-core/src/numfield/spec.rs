use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Embeddings, FieldElement, NumberField, NumberFieldError};
use crate::exact::{MatQ, PolyFp, PolyQ};
use crate::realalg::{interval_det, interval_log, sign_decide, PrecisionBudget, RealAlgError};
use crate::shintani::TieBreak;

/// A totally real field together with the unit data the constructions need.
#[derive(Debug, Clone)]
pub struct FieldSpec {
    pub name: String,
    pub discriminant: BigInt,
    /// Rows are the integral basis elements in the power basis.
    pub integral_basis: MatQ,
    pub fundamental_units: Option<Vec<FieldElement>>,
    pub totally_positive_units: Vec<FieldElement>,
    pub q2: u64,
    pub tie_break: TieBreak,
    field: NumberField,
}

impl FieldSpec {
    /// Checks shapes only; mathematical invariants are checked by [`validate_field_spec`].
    pub fn new(
        name: impl Into<String>,
        min_poly: PolyQ,
        discriminant: BigInt,
        integral_basis: Option<MatQ>,
        fundamental_units: Option<Vec<FieldElement>>,
        totally_positive_units: Vec<FieldElement>,
    ) -> Result<Self, NumberFieldError> {
        if !min_poly.has_integer_coeffs() {
            return Err(NumberFieldError::NonIntegralPoly);
        }
        let field = NumberField::new(min_poly)?;
        let n = field.degree();
        let integral_basis = integral_basis.unwrap_or_else(|| MatQ::identity(n));
        if integral_basis.rows() != n || integral_basis.cols() != n {
            return Err(NumberFieldError::Shape("integral basis must be n x n"));
        }
        for e in totally_positive_units.iter().chain(fundamental_units.iter().flatten()) {
            field.check(e)?;
        }
        if totally_positive_units.len() != n - 1 {
            return Err(NumberFieldError::UnitCount { expected: n - 1, found: totally_positive_units.len() });
        }
        if let Some(f) = &fundamental_units {
            if f.len() != n - 1 {
                return Err(NumberFieldError::UnitCount { expected: n - 1, found: f.len() });
            }
        }
        Ok(FieldSpec {
            name: name.into(),
            discriminant,
            integral_basis,
            fundamental_units,
            totally_positive_units,
            q2: 1,
            tie_break: TieBreak::default(),
            field,
        })
    }

    pub fn with_q2(mut self, q2: u64) -> Self {
        self.q2 = q2;
        self
    }

    pub fn with_tie_break(mut self, t: TieBreak) -> Self {
        self.tie_break = t;
        self
    }

    /// Same field with the totally positive units replaced (e.g. reordered).
    pub fn with_totally_positive_units(mut self, units: Vec<FieldElement>) -> Result<Self, NumberFieldError> {
        if units.len() != self.degree() - 1 {
            return Err(NumberFieldError::UnitCount { expected: self.degree() - 1, found: units.len() });
        }
        for e in &units {
            self.field.check(e)?;
        }
        self.totally_positive_units = units;
        Ok(self)
    }

    pub fn field(&self) -> &NumberField {
        &self.field
    }

    pub fn min_poly(&self) -> &PolyQ {
        self.field.min_poly()
    }

    pub fn degree(&self) -> usize {
        self.field.degree()
    }

    /// `[O_F : Z[theta]]`, if the discriminant data is consistent.
    pub fn index(&self) -> Result<BigInt, NumberFieldError> {
        let dg = self.min_poly().discriminant().to_integer();
        let d = &self.discriminant;
        if d.is_zero() || !dg.is_multiple_of(d) {
            return Err(NumberFieldError::Discriminant(format!("disc(g) = {dg} is not a multiple of d_F = {d}")));
        }
        let q = &dg / d;
        if q.is_negative() {
            return Err(NumberFieldError::Discriminant(format!("disc(g)/d_F = {q} is negative")));
        }
        let r = q.sqrt();
        if &r * &r != q {
            return Err(NumberFieldError::Discriminant(format!("disc(g)/d_F = {q} is not a square")));
        }
        Ok(r)
    }

    /// Coordinates of `a` in the integral basis.
    pub fn integral_coords(&self, a: &FieldElement) -> Vec<BigRational> {
        self.integral_basis.transpose().solve(a.coords()).expect("integral basis is invertible")
    }

    pub fn is_algebraic_integer(&self, a: &FieldElement) -> bool {
        self.integral_coords(a).iter().all(BigRational::is_integer)
    }

    pub fn embeddings(&self) -> Result<Embeddings, NumberFieldError> {
        Embeddings::new(self.min_poly())
    }

    /// Signs of `sigma_1(a), ..., sigma_n(a)`.
    pub fn signs(&self, emb: &Embeddings, a: &FieldElement, budget: PrecisionBudget) -> Result<Vec<i32>, RealAlgError> {
        (0..self.degree())
            .map(|i| {
                sign_decide(
                    "an embedding of a unit",
                    |bits| Ok(emb.refined(bits).eval(a, i)),
                    budget,
                )
            })
            .collect()
    }

    pub fn is_totally_positive(&self, emb: &Embeddings, a: &FieldElement, budget: PrecisionBudget) -> Result<bool, RealAlgError> {
        Ok(self.signs(emb, a, budget)?.iter().all(|&s| s > 0))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub valid: bool,
    pub index: Option<BigInt>,
    pub checks: Vec<Check>,
    pub warnings: Vec<String>,
    /// Some check failed only because a sign could not be decided within the precision cap.
    pub undecided: bool,
}

impl ValidationReport {
    fn push(&mut self, name: &str, result: Result<(), String>) {
        let (ok, message) = match result {
            Ok(()) => (true, String::from("ok")),
            Err(m) => (false, m),
        };
        self.valid &= ok;
        self.checks.push(Check { name: name.into(), ok, message });
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            out.push(d.clone());
            let e = &n / &d;
            if e != d {
                out.push(e);
            }
        }
        d += 1;
    }
    out
}

fn integer_coeffs(g: &PolyQ) -> Vec<BigInt> {
    g.integer_coeffs().expect("integral polynomial")
}

fn has_integer_root(g: &PolyQ) -> bool {
    let c = integer_coeffs(g);
    if c[0].is_zero() {
        return true;
    }
    divisors(&c[0]).into_iter().any(|d| {
        g.eval(&BigRational::from_integer(d.clone())).is_zero()
            || g.eval(&BigRational::from_integer(-d)).is_zero()
    })
}

/// Monic quartic splits as a product of two monic integral quadratics.
fn quartic_splits(g: &PolyQ) -> bool {
    let a = integer_coeffs(g);
    let (a0, a1, a2, a3) = (&a[0], &a[1], &a[2], &a[3]);
    for c0 in divisors(a0) {
        for c in [c0.clone(), -c0] {
            let e = a0 / &c;
            // (x^2 + b x + c)(x^2 + d x + e)
            if e != c {
                let num = a1 - &c * a3;
                let den = &e - &c;
                if !num.is_multiple_of(&den) {
                    continue;
                }
                let b = num / den;
                let d = a3 - &b;
                if &b * &d + &c + &e == *a2 {
                    return true;
                }
            } else {
                if *a1 != &c * a3 {
                    continue;
                }
                // b + d = a3, b d = a2 - 2c
                let disc: BigInt = a3 * a3 - BigInt::from(4) * (a2 - BigInt::from(2) * &c);
                if !disc.is_negative() {
                    let r = disc.sqrt();
                    if &r * &r == disc && (a3 + &r).is_even() {
                        return true;
                    }
                }
            }
        }
    }
    false
}

fn small_primes(limit: u64) -> impl Iterator<Item = u64> {
    (2..limit).filter(|&p| (2..p).take_while(|d| d * d <= p).all(|d| p % d != 0))
}

/// Irreducibility over Q. Exact for degree <= 4; for higher degree only the sufficient
/// test "irreducible modulo some small prime" is available, and failure to find one is a warning.
fn check_irreducible(g: &PolyQ, warnings: &mut Vec<String>) -> Result<(), String> {
    let n = g.degree().unwrap_or(0);
    let disc = g.discriminant().to_integer();
    for p in small_primes(200) {
        if disc.is_multiple_of(&BigInt::from(p)) {
            continue;
        }
        if PolyFp::reduce(g, p).is_some_and(|r| r.is_irreducible()) {
            return Ok(());
        }
    }
    if n >= 2 && has_integer_root(g) {
        return Err(String::from("minimal polynomial has a rational root"));
    }
    match n {
        1..=3 => Ok(()),
        4 if quartic_splits(g) => Err(String::from("minimal polynomial factors into two quadratics")),
        4 => Ok(()),
        _ => {
            warnings.push(format!(
                "irreducibility of a degree-{n} polynomial could not be certified (no rational roots, \
                 but reducible modulo every small prime tried)"
            ));
            Ok(())
        }
    }
}

/// Runs every invariant of a field specification and reports each check separately.
pub fn validate_field_spec(spec: &FieldSpec, budget: PrecisionBudget) -> ValidationReport {
    let mut rep = ValidationReport { valid: true, index: None, checks: Vec::new(), warnings: Vec::new(), undecided: false };
    let g = spec.min_poly();
    let n = spec.degree();
    let nf = spec.field();
    let mut warnings = Vec::new();

    rep.push("monic_integral", Ok(()));
    let irreducible = check_irreducible(g, &mut warnings);
    let irreducible_ok = irreducible.is_ok();
    rep.push("irreducible", irreducible);
    rep.warnings.append(&mut warnings);

    let emb = if irreducible_ok {
        match spec.embeddings() {
            Ok(e) => {
                rep.push("totally_real", Ok(()));
                Some(e)
            }
            Err(e) => {
                rep.push("totally_real", Err(format!("{e}")));
                None
            }
        }
    } else {
        None
    };

    match spec.index() {
        Ok(idx) => {
            let basis_det = spec.integral_basis.det().unwrap_or_else(|_| BigRational::zero());
            let basis_ok = if basis_det.is_zero() {
                Err(String::from("integral basis is singular"))
            } else if basis_det.abs() * BigRational::from_integer(idx.clone()) != BigRational::one() {
                Err(format!("integral basis has determinant {basis_det}, expected 1/{idx}"))
            } else if spec.integral_basis.inverse().ok().and_then(|m| m.to_int()).is_none() {
                Err(String::from("integral basis does not contain Z[theta]"))
            } else {
                Ok(())
            };
            rep.push("discriminant", if spec.discriminant.is_positive() {
                Ok(())
            } else {
                Err(String::from("discriminant of a totally real field must be positive"))
            });
            rep.push("integral_basis", basis_ok);
            rep.index = Some(idx);
        }
        Err(e) => rep.push("discriminant", Err(format!("{e}"))),
    }

    let mut units_ok = true;
    for (label, units) in [
        ("totally_positive_units", Some(&spec.totally_positive_units)),
        ("fundamental_units", spec.fundamental_units.as_ref()),
    ] {
        let Some(units) = units else { continue };
        let mut problems = Vec::new();
        for (i, u) in units.iter().enumerate() {
            if !spec.is_algebraic_integer(u) {
                problems.push(format!("unit {} is not an algebraic integer", i + 1));
            } else if !nf.is_unit_norm(u) {
                problems.push(format!("unit {} has norm {}", i + 1, nf.norm(u)));
            } else if label == "totally_positive_units" {
                if let Some(emb) = &emb {
                    match spec.is_totally_positive(emb, u, budget) {
                        Ok(true) => {}
                        Ok(false) => problems.push(format!("unit {} is not totally positive", i + 1)),
                        Err(e) => {
                            rep.undecided |= matches!(e, RealAlgError::SignUndecided { .. });
                            problems.push(format!("unit {}: {e}", i + 1));
                        }
                    }
                }
            }
        }
        units_ok &= problems.is_empty();
        rep.push(label, if problems.is_empty() { Ok(()) } else { Err(problems.join("; ")) });
    }

    if let (Some(emb), true, true) = (&emb, units_ok, n >= 2) {
        let res = log_regulator_sign(spec, emb, &spec.totally_positive_units, budget).map(|_| ()).map_err(|e| {
            rep.undecided |= matches!(e, RealAlgError::SignUndecided { .. });
            format!("totally positive units are not independent: {e}")
        });
        rep.push("units_independent", res);
    }

    rep.push("q2", if spec.q2 >= 1 { Ok(()) } else { Err(String::from("q2 must be positive")) });
    rep.warnings.push(String::from("narrow class number 1 is asserted by the field file, not verified"));
    rep
}

/// Sign of `det(log|sigma_i(u_j)|)` over `i, j < n`.
pub fn log_regulator_sign(
    spec: &FieldSpec,
    emb: &Embeddings,
    units: &[FieldElement],
    budget: PrecisionBudget,
) -> Result<i32, RealAlgError> {
    let n = spec.degree();
    if n == 1 {
        return Ok(1);
    }
    sign_decide(
        "the logarithmic unit determinant",
        |bits| {
            let r = emb.refined(bits);
            let mut rows = Vec::with_capacity(n - 1);
            for i in 0..n - 1 {
                let mut row = Vec::with_capacity(n - 1);
                for u in units.iter().take(n - 1) {
                    let v = r.eval(u, i).abs();
                    if v.lower().signum() <= 0 {
                        // not yet separated from zero: return an enclosure that contains zero
                        return Ok(crate::realalg::DyadicInterval::point(crate::realalg::Dyadic::zero()));
                    }
                    row.push(interval_log(&v, r.precision())?);
                }
                rows.push(row);
            }
            Ok(interval_det(&rows, r.precision()))
        },
        budget,
    )
}

/// Whether `p` stays prime in `O_F`; requires `p` not dividing the index.
pub fn is_inert(spec: &FieldSpec, p: u64) -> Result<bool, NumberFieldError> {
    if !is_prime(p) {
        return Err(NumberFieldError::NotPrime(p));
    }
    let idx = spec.index()?;
    if idx.is_multiple_of(&BigInt::from(p)) {
        return Err(NumberFieldError::PrimeDividesIndex { p, index: idx });
    }
    let g = PolyFp::reduce(spec.min_poly(), p).ok_or(NumberFieldError::NonIntegralPoly)?;
    Ok(g.is_irreducible())
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.checked_mul(d).is_some_and(|s| s <= p) {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}
