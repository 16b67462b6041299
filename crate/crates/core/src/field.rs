//! Arithmetic in GF(p^d) and the groups built from it.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{d-1} p^{d-1}`
//! of its coefficient vector, so elements are enumerated in a fixed order.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::arith;
use crate::group::{abelian, cyclic, semidirect_product, FiniteGroup, GroupAction, GroupElement, GroupError};

/// Largest field order supported.
pub const MAX_FIELD_ORDER: u64 = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{d} exceeds {MAX_FIELD_ORDER}")]
    SizeLimit { p: u64, d: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("no element of order {q}: {q} does not divide {order_minus_one}")]
    NoSuchOrder { q: u64, order_minus_one: u64 },
    #[error(transparent)]
    Group(#[from] GroupError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElement(u32);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Mul,
    Inv,
    Pow(u64),
}

/// GF(p^d) with a fixed monic irreducible modulus.
#[derive(Clone)]
pub struct FiniteField {
    p: u64,
    d: u32,
    /// Coefficients of the modulus, constant term first, length `d + 1`.
    modulus: Vec<u64>,
    order: u64,
    /// Discrete-log tables relative to a primitive element.
    exp: Arc<Vec<u32>>,
    log: Arc<Vec<u32>>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}^{}) mod {}", self.p, self.d, format_poly(&self.modulus))
    }
}

fn format_poly(c: &[u64]) -> String {
    let mut terms = Vec::new();
    for (i, &k) in c.iter().enumerate().rev() {
        if k == 0 {
            continue;
        }
        let coef = if k == 1 && i > 0 { String::new() } else { k.to_string() };
        terms.push(match i {
            0 => coef,
            1 => format!("{coef}x"),
            _ => format!("{coef}x^{i}"),
        });
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

fn poly_trim(mut a: Vec<u64>) -> Vec<u64> {
    while a.len() > 1 && *a.last().unwrap() == 0 {
        a.pop();
    }
    a
}

/// Remainder of `a` modulo the monic polynomial `m` over GF(p).
fn poly_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm && r.len() > 1 {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    if r.is_empty() {
        r.push(0);
    }
    poly_trim(r)
}

fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Monic polynomial of degree `deg` whose lower coefficients encode `code` in base `p`.
fn monic_from_code(code: u64, deg: u32, p: u64) -> Vec<u64> {
    let mut c = Vec::with_capacity(deg as usize + 1);
    let mut x = code;
    for _ in 0..deg {
        c.push(x % p);
        x /= p;
    }
    c.push(1);
    c
}

fn is_irreducible(m: &[u64], p: u64) -> bool {
    let deg = (m.len() - 1) as u32;
    for k in 1..=deg / 2 {
        for code in 0..p.pow(k) {
            let f = monic_from_code(code, k, p);
            if poly_rem(m, &f, p) == [0] {
                return false;
            }
        }
    }
    true
}

/// Builds GF(p^d) using the least monic irreducible modulus, ordering
/// candidates by the base-`p` integer encoding of their lower coefficients.
pub fn make_field(p: u64, d: u32) -> Result<FiniteField, FieldError> {
    if !arith::is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if d == 0 {
        return Err(FieldError::ZeroDegree);
    }
    let order = match p.checked_pow(d) {
        Some(q) if q <= MAX_FIELD_ORDER => q,
        _ => return Err(FieldError::SizeLimit { p, d }),
    };
    let modulus = if d == 1 {
        vec![0, 1]
    } else {
        (0..order)
            .map(|code| monic_from_code(code, d, p))
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists")
    };
    let mut field = FiniteField { p, d, modulus, order, exp: Arc::new(Vec::new()), log: Arc::new(Vec::new()) };
    field.build_log_tables();
    Ok(field)
}

impl FiniteField {
    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    /// Modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn modulus_string(&self) -> String {
        format_poly(&self.modulus)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.order as u32).map(FieldElement)
    }

    pub fn element(&self, coeffs: &[u64]) -> FieldElement {
        let mut code = 0u64;
        for &c in coeffs.iter().take(self.d as usize).rev() {
            code = code * self.p + c % self.p;
        }
        FieldElement(code as u32)
    }

    pub fn from_index(&self, index: usize) -> FieldElement {
        assert!((index as u64) < self.order, "field index out of range");
        FieldElement(index as u32)
    }

    pub fn coefficients(&self, a: FieldElement) -> Vec<u64> {
        let mut x = a.0 as u64;
        (0..self.d)
            .map(|_| {
                let c = x % self.p;
                x /= self.p;
                c
            })
            .collect()
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (x, y) = (self.coefficients(a), self.coefficients(b));
        let sum: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.element(&sum)
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let x: Vec<u64> = self.coefficients(a).iter().map(|u| (self.p - u) % self.p).collect();
        self.element(&x)
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    /// Product by polynomial multiplication and reduction.
    fn mul_poly(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let prod = poly_mul(&self.coefficients(a), &self.coefficients(b), self.p);
        self.element(&poly_rem(&prod, &self.modulus, self.p))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.0 == 0 || b.0 == 0 {
            return FieldElement::ZERO;
        }
        let n = self.order - 1;
        let l = (self.log[a.index()] as u64 + self.log[b.index()] as u64) % n;
        FieldElement(self.exp[l as usize])
    }

    pub fn pow(&self, a: FieldElement, k: u64) -> FieldElement {
        let mut result = FieldElement::ONE;
        let mut base = a;
        let mut e = k;
        while e > 0 {
            if e & 1 == 1 {
                result = self.mul(result, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        result
    }

    /// `a^(q-2)`.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.order - 2))
    }

    /// Multiplicative order of a nonzero element.
    pub fn multiplicative_order(&self, a: FieldElement) -> Result<u64, FieldError> {
        if a.0 == 0 {
            return Err(FieldError::DivisionByZero);
        }
        let n = self.order - 1;
        Ok(arith::divisors(n).into_iter().find(|&k| self.pow(a, k) == FieldElement::ONE).expect("a^(q-1) = 1"))
    }

    fn build_log_tables(&mut self) {
        let n = self.order - 1;
        let mut exp = vec![0u32; n as usize];
        let mut log = vec![0u32; self.order as usize];
        // Find a primitive element by slow multiplication, then tabulate its powers.
        for g in 1..self.order as u32 {
            let g = FieldElement(g);
            let mut x = FieldElement::ONE;
            let mut seen = 0u64;
            let mut ok = true;
            for k in 0..n {
                if k > 0 && x == FieldElement::ONE {
                    ok = false;
                    break;
                }
                exp[k as usize] = x.0;
                log[x.index()] = k as u32;
                x = self.mul_poly(x, g);
                seen += 1;
            }
            if ok && seen == n && x == FieldElement::ONE {
                break;
            }
        }
        self.exp = Arc::new(exp);
        self.log = Arc::new(log);
    }

    /// First nonzero element (in index order) of multiplicative order exactly `q`.
    pub fn element_of_order(&self, q: u64) -> Result<FieldElement, FieldError> {
        let n = self.order - 1;
        if q == 0 || n % q != 0 {
            return Err(FieldError::NoSuchOrder { q, order_minus_one: n });
        }
        for a in 1..self.order as u32 {
            let a = FieldElement(a);
            if self.multiplicative_order(a)? == q {
                return Ok(a);
            }
        }
        unreachable!("the multiplicative group is cyclic")
    }

    pub fn format(&self, a: FieldElement) -> String {
        format_poly(&self.coefficients(a))
    }
}

/// One arithmetic operation; `b` is ignored for `Inv` and `Pow`.
pub fn field_arithmetic(
    field: &FiniteField,
    a: FieldElement,
    b: FieldElement,
    op: FieldOp,
) -> Result<FieldElement, FieldError> {
    Ok(match op {
        FieldOp::Add => field.add(a, b),
        FieldOp::Mul => field.mul(a, b),
        FieldOp::Inv => field.inv(a)?,
        FieldOp::Pow(k) => field.pow(a, k),
    })
}

/// The group of maps `x ↦ a x + b` over GF(p^d) with `a^q = 1`, built as
/// `GF(p^d)^+ ⋊ C_q` where the generator of `C_q` multiplies by an element
/// of order `q`.
pub fn affine_frobenius_group(p: u64, d: u32, q: u64) -> Result<FiniteGroup, FieldError> {
    let field = make_field(p, d)?;
    let zeta = field.element_of_order(q)?;
    // Field addition is coordinate-wise, matching the index encoding of abelian([p; d]).
    let translations = abelian(&vec![p; d as usize])?;
    let scalars = cyclic(q)?;
    let map: Vec<u32> = field.elements().map(|b| field.mul(zeta, b).0).collect();
    let gen = GroupElement::new(1 % q as usize);
    let act = GroupAction::from_generators(&translations, &scalars, &[(gen, map)])?;
    let g = semidirect_product(&translations, &scalars, &act)?;
    Ok(g.renamed(format!("Aff({p},{d},{q})")))
}

mod psl {
    //! 3x3 matrices over GF(4) packed two bits per entry, row-major.

    const W: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

    pub fn entry(m: u64, i: usize, j: usize) -> u8 {
        ((m >> (2 * (3 * i + j))) & 3) as u8
    }

    pub fn pack(e: [[u8; 3]; 3]) -> u64 {
        let mut m = 0u64;
        for i in 0..3 {
            for j in 0..3 {
                m |= (e[i][j] as u64) << (2 * (3 * i + j));
            }
        }
        m
    }

    pub fn mul(a: u64, b: u64) -> u64 {
        let mut e = [[0u8; 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                let mut acc = 0u8;
                for k in 0..3 {
                    acc ^= W[entry(a, i, k) as usize][entry(b, k, j) as usize];
                }
                *cell = acc;
            }
        }
        pack(e)
    }

    pub fn scale(m: u64, s: u8) -> u64 {
        let mut e = [[0u8; 3]; 3];
        for (i, row) in e.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = W[s as usize][entry(m, i, j) as usize];
            }
        }
        pack(e)
    }

    /// Least key among the scalar multiples by the cube roots of unity.
    pub fn canonical(m: u64) -> u64 {
        m.min(scale(m, 2)).min(scale(m, 3))
    }

    pub fn identity() -> u64 {
        pack([[1, 0, 0], [0, 1, 0], [0, 0, 1]])
    }

    /// Transvections `I + t e_ij` for `i != j`, `t ∈ {1, ω}`.
    pub fn transvections() -> Vec<u64> {
        let mut out = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                if i == j {
                    continue;
                }
                for t in [1u8, 2] {
                    let mut e = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
                    e[i][j] = t;
                    out.push(pack(e));
                }
            }
        }
        out
    }

    /// Action on the 21 points of the projective plane over GF(4), as a
    /// permutation of point indices; points are normalized column vectors.
    pub fn projective_points() -> Vec<[u8; 3]> {
        let mut pts = Vec::new();
        for a in 0..4u8 {
            for b in 0..4u8 {
                for c in 0..4u8 {
                    let v = [a, b, c];
                    let lead = v.iter().find(|&&x| x != 0);
                    if lead == Some(&1) {
                        pts.push(v);
                    }
                }
            }
        }
        pts
    }

    pub fn apply(m: u64, v: [u8; 3]) -> [u8; 3] {
        let mut out = [0u8; 3];
        for (i, slot) in out.iter_mut().enumerate() {
            for (k, &x) in v.iter().enumerate() {
                *slot ^= W[entry(m, i, k) as usize][x as usize];
            }
        }
        normalize(out)
    }

    fn normalize(v: [u8; 3]) -> [u8; 3] {
        // Inverses in GF(4): 1 -> 1, ω -> ω², ω² -> ω.
        const INV: [u8; 4] = [0, 1, 3, 2];
        let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
        let s = INV[lead as usize];
        [W[s as usize][v[0] as usize], W[s as usize][v[1] as usize], W[s as usize][v[2] as usize]]
    }
}

/// PSL(3,4): SL(3,4) modulo its scalar center, generated by transvections.
/// Each element is stored as the least packed matrix among its scalar multiples.
pub fn psl_3_4() -> Result<FiniteGroup, FieldError> {
    let gens: Vec<u64> = psl::transvections().into_iter().map(psl::canonical).collect();
    let op = Arc::new(|a: u64, b: u64| psl::canonical(psl::mul(a, b)));
    let g = FiniteGroup::from_key_closure("PSL(3,4)", psl::canonical(psl::identity()), &gens, op)?;
    Ok(g)
}

/// The same group acting on the 21 points of the projective plane over GF(4).
pub fn psl_3_4_on_points() -> Result<FiniteGroup, FieldError> {
    use crate::group::{permutation_group, Permutation};
    let pts = psl::projective_points();
    let gens = psl::transvections()
        .into_iter()
        .map(|m| {
            let images: Vec<usize> = pts
                .iter()
                .map(|&v| {
                    let w = psl::apply(m, v);
                    pts.iter().position(|&u| u == w).expect("image is a point")
                })
                .collect();
            Permutation::new(images)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(permutation_group(&gens)?.renamed("PSL(3,4) on points"))
}
