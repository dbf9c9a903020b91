//! Arithmetic in finite fields GF(p^t).
//!
//! Elements are stored as packed coefficient vectors: the element
//! `c_0 + c_1 x + ... + c_{t-1} x^{t-1}` has code `c_0 + c_1 p + ... + c_{t-1} p^{t-1}`.
//! Fields of order at most 256 with `t > 1` cache their addition and
//! multiplication tables; everything else is computed from the coefficients.

mod conway;
pub mod poly;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest field order accepted by [`Field::new`].
pub const MAX_FIELD_ORDER: u64 = 1 << 20;
/// Largest order for which the defining polynomial comes from the built-in table.
pub const TABLE_LIMIT: u64 = 1 << 16;
const CACHE_LIMIT: u32 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("NotPrime: {0} is not a prime")]
    NotPrime(u64),
    #[error("FieldTooLarge: {p}^{t} exceeds 2^20")]
    FieldTooLarge { p: u64, t: u32 },
    #[error("BadParameter: extension degree must be at least 1")]
    ZeroDegree,
    #[error("DivideByZero")]
    DivideByZero,
    #[error("NoEmbedding: GF({sub}) does not embed in GF({sup})")]
    NoEmbedding { sub: u32, sup: u32 },
    #[error("BadElement: {0}")]
    BadElement(String),
}

/// A field element, meaningful only together with the [`Field`] it came from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn code(self) -> u32 {
        self.0
    }

    pub fn from_code(code: u32) -> Elem {
        Elem(code)
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
    Inv,
    Pow(u64),
}

enum Arith {
    Prime,
    Cached {
        add: Vec<u32>,
        mul: Vec<u32>,
        neg: Vec<u32>,
        inv: Vec<u32>,
    },
    Slow,
}

struct Inner {
    p: u32,
    t: u32,
    q: u32,
    poly: Vec<u32>,
    arith: Arith,
}

/// The field GF(p^t) with its canonical defining polynomial.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.p == other.0.p && self.0.t == other.0.t)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q` into `(p, t)` with `q = p^t`, if `q` is a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let mut t = 0;
    let mut r = q;
    while r.is_multiple_of(p) {
        r /= p;
        t += 1;
    }
    (r == 1).then_some((p, t))
}

impl Field {
    /// Builds GF(p^t).
    pub fn new(p: u64, t: u32) -> Result<Field, FieldError> {
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if t == 0 {
            return Err(FieldError::ZeroDegree);
        }
        let q = (p as u128).checked_pow(t).unwrap_or(u128::MAX);
        if q > MAX_FIELD_ORDER as u128 {
            return Err(FieldError::FieldTooLarge { p, t });
        }
        let (p, q) = (p as u32, q as u32);
        if t == 1 {
            return Ok(Field(Arc::new(Inner {
                p,
                t,
                q,
                poly: vec![0, 1],
                arith: Arith::Prime,
            })));
        }
        let prime = Field::new(p as u64, 1)?;
        let poly = match conway::CONWAY.iter().find(|(pp, tt, _)| *pp == p && *tt == t) {
            Some((_, _, c)) => c.to_vec(),
            None => least_irreducible(&prime, t),
        };
        let as_elems: Vec<Elem> = poly.iter().map(|&c| Elem(c)).collect();
        assert!(
            poly::is_irreducible(&prime, &as_elems),
            "defining polynomial for GF({p}^{t}) is reducible"
        );
        let mut inner = Inner {
            p,
            t,
            q,
            poly,
            arith: Arith::Slow,
        };
        if q <= CACHE_LIMIT {
            inner.arith = build_tables(&inner);
        }
        Ok(Field(Arc::new(inner)))
    }

    /// Builds the field of order `q`.
    pub fn with_order(q: u64) -> Result<Field, FieldError> {
        match prime_power(q) {
            Some((p, t)) => Field::new(p, t),
            None => Err(FieldError::NotPrime(q)),
        }
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.0.p
    }

    #[inline]
    pub fn t(&self) -> u32 {
        self.0.t
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.0.q
    }

    /// Coefficients of the defining polynomial, low degree first, including the leading 1.
    pub fn defining_poly(&self) -> &[u32] {
        &self.0.poly
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.t == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.q()).map(Elem)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Elem> {
        (1..self.q()).map(Elem)
    }

    /// The image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Elem {
        Elem(n.rem_euclid(self.p() as i64) as u32)
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Elem, FieldError> {
        if coeffs.len() > self.t() as usize {
            return Err(FieldError::BadElement(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.t()
            )));
        }
        let p = self.p();
        let mut code = 0u32;
        for &c in coeffs.iter().rev() {
            if c >= p {
                return Err(FieldError::BadElement(format!("coefficient {c} not below {p}")));
            }
            code = code * p + c;
        }
        Ok(Elem(code))
    }

    pub fn coeffs(&self, a: Elem) -> Vec<u32> {
        let p = self.p();
        let mut c = a.0;
        (0..self.t())
            .map(|_| {
                let d = c % p;
                c /= p;
                d
            })
            .collect()
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.arith {
            Arith::Prime => {
                let s = a.0 + b.0;
                Elem(if s >= self.0.p { s - self.0.p } else { s })
            }
            Arith::Cached { add, .. } => Elem(add[(a.0 * self.0.q + b.0) as usize]),
            Arith::Slow => self.slow_add(a, b),
        }
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        match &self.0.arith {
            Arith::Prime => Elem(if a.0 == 0 { 0 } else { self.0.p - a.0 }),
            Arith::Cached { neg, .. } => Elem(neg[a.0 as usize]),
            Arith::Slow => self.slow_neg(a),
        }
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        match &self.0.arith {
            Arith::Prime => Elem(((a.0 as u64 * b.0 as u64) % self.0.p as u64) as u32),
            Arith::Cached { mul, .. } => Elem(mul[(a.0 * self.0.q + b.0) as usize]),
            Arith::Slow => self.slow_mul(a, b),
        }
    }

    pub fn inv(&self, a: Elem) -> Result<Elem, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivideByZero);
        }
        Ok(match &self.0.arith {
            Arith::Cached { inv, .. } => Elem(inv[a.0 as usize]),
            _ => self.pow(a, self.q() as u64 - 2),
        })
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation.
    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        let mut base = a;
        let mut acc = Elem::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Applies a binary or unary field operation; `b` is ignored for `Inv` and `Pow`.
    pub fn apply(&self, op: FieldOp, a: Elem, b: Elem) -> Result<Elem, FieldError> {
        match op {
            FieldOp::Add => Ok(self.add(a, b)),
            FieldOp::Sub => Ok(self.sub(a, b)),
            FieldOp::Mul => Ok(self.mul(a, b)),
            FieldOp::Div => self.div(a, b),
            FieldOp::Inv => self.inv(a),
            FieldOp::Pow(e) => Ok(self.pow(a, e)),
        }
    }

    /// `dst += c * src`, elementwise.
    #[inline]
    pub fn axpy(&self, dst: &mut [Elem], c: Elem, src: &[Elem]) {
        if c.is_zero() {
            return;
        }
        match &self.0.arith {
            Arith::Prime => {
                let p = self.0.p as u64;
                let c = c.0 as u64;
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 = ((d.0 as u64 + c * s.0 as u64) % p) as u32;
                    }
                }
            }
            Arith::Cached { add, mul, .. } => {
                let q = self.0.q as usize;
                let row = &mul[c.0 as usize * q..(c.0 as usize + 1) * q];
                for (d, s) in dst.iter_mut().zip(src) {
                    if s.0 != 0 {
                        d.0 = add[d.0 as usize * q + row[s.0 as usize] as usize];
                    }
                }
            }
            Arith::Slow => {
                for (d, s) in dst.iter_mut().zip(src) {
                    *d = self.add(*d, self.mul(c, *s));
                }
            }
        }
    }

    /// `v *= c`, elementwise.
    pub fn scale(&self, v: &mut [Elem], c: Elem) {
        for x in v.iter_mut() {
            *x = self.mul(*x, c);
        }
    }

    /// Text form: a decimal integer for prime fields, comma-separated coefficients otherwise.
    pub fn format_elem(&self, a: Elem) -> String {
        if self.is_prime_field() {
            a.0.to_string()
        } else {
            self.coeffs(a)
                .iter()
                .map(u32::to_string)
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    pub fn parse_elem(&self, s: &str) -> Result<Elem, FieldError> {
        let bad = || FieldError::BadElement(s.to_string());
        let coeffs = s
            .trim()
            .split(',')
            .map(|c| c.trim().parse::<u32>().map_err(|_| bad()))
            .collect::<Result<Vec<_>, _>>()?;
        if self.is_prime_field() && coeffs.len() != 1 {
            return Err(bad());
        }
        if !self.is_prime_field() && coeffs.len() != self.t() as usize {
            return Err(bad());
        }
        self.from_coeffs(&coeffs)
    }

    fn slow_add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p();
        let (mut x, mut y, mut out, mut place) = (a.0, b.0, 0u32, 1u32);
        for _ in 0..self.t() {
            out += ((x % p + y % p) % p) * place;
            x /= p;
            y /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    fn slow_neg(&self, a: Elem) -> Elem {
        let p = self.p();
        let (mut x, mut out, mut place) = (a.0, 0u32, 1u32);
        for _ in 0..self.t() {
            out += ((p - x % p) % p) * place;
            x /= p;
            place = place.wrapping_mul(p);
        }
        Elem(out)
    }

    fn slow_mul(&self, a: Elem, b: Elem) -> Elem {
        let p = self.p() as u64;
        let t = self.t() as usize;
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let mut prod = vec![0u64; 2 * t - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        let poly = &self.0.poly;
        for k in (t..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            for (j, &f) in poly.iter().enumerate().take(t) {
                let idx = k - t + j;
                prod[idx] = (prod[idx] + (p - c) * f as u64) % p;
            }
            prod[k] = 0;
        }
        let mut code = 0u64;
        for &c in prod[..t].iter().rev() {
            code = code * p + c;
        }
        Elem(code as u32)
    }
}

fn build_tables(inner: &Inner) -> Arith {
    let slow = Field(Arc::new(Inner {
        p: inner.p,
        t: inner.t,
        q: inner.q,
        poly: inner.poly.clone(),
        arith: Arith::Slow,
    }));
    let q = inner.q as usize;
    let mut add = vec![0u32; q * q];
    let mut mul = vec![0u32; q * q];
    let mut neg = vec![0u32; q];
    let mut inv = vec![0u32; q];
    for a in 0..q {
        neg[a] = slow.slow_neg(Elem(a as u32)).0;
        for b in 0..q {
            add[a * q + b] = slow.slow_add(Elem(a as u32), Elem(b as u32)).0;
            mul[a * q + b] = slow.slow_mul(Elem(a as u32), Elem(b as u32)).0;
        }
    }
    for a in 1..q {
        inv[a] = (1..q)
            .find(|&b| mul[a * q + b] == 1)
            .expect("nonzero element without inverse") as u32;
    }
    Arith::Cached { add, mul, neg, inv }
}

/// Least monic irreducible of degree `t` over the prime field, ordering the
/// lower coefficients by their packed code.
fn least_irreducible(prime: &Field, t: u32) -> Vec<u32> {
    let p = prime.p() as u64;
    let count = p.pow(t);
    for code in 0..count {
        let mut coeffs = Vec::with_capacity(t as usize + 1);
        let mut c = code;
        for _ in 0..t {
            coeffs.push((c % p) as u32);
            c /= p;
        }
        coeffs.push(1);
        if coeffs[0] == 0 {
            continue;
        }
        let elems: Vec<Elem> = coeffs.iter().map(|&x| Elem(x)).collect();
        if poly::is_irreducible(prime, &elems) {
            return coeffs;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// An injective ring homomorphism GF(p^s) -> GF(p^e).
#[derive(Clone, Debug)]
pub struct Embedding {
    sub: Field,
    sup: Field,
    images: Vec<Elem>,
}

impl Embedding {
    pub fn apply(&self, a: Elem) -> Elem {
        self.images[a.0 as usize]
    }

    pub fn source(&self) -> &Field {
        &self.sub
    }

    pub fn target(&self) -> &Field {
        &self.sup
    }
}

/// Embeds `sub` into `sup` by sending the generator of `sub` to the least root
/// (by code) of its defining polynomial in `sup`; the prime subfield and the
/// case `sub == sup` map identically.
pub fn subfield_embed(sub: &Field, sup: &Field) -> Result<Embedding, FieldError> {
    if sub.p() != sup.p() || !sup.t().is_multiple_of(sub.t()) {
        return Err(FieldError::NoEmbedding {
            sub: sub.q(),
            sup: sup.q(),
        });
    }
    let images = if sub == sup || sub.is_prime_field() {
        sub.elements().collect()
    } else {
        let poly = sub.defining_poly();
        let root = sup
            .elements()
            .find(|&r| {
                let mut acc = Elem::ZERO;
                for &c in poly.iter().rev() {
                    acc = sup.add(sup.mul(acc, r), Elem(c));
                }
                acc.is_zero()
            })
            .expect("a subfield's defining polynomial splits in the larger field");
        sub.elements()
            .map(|a| {
                let mut acc = Elem::ZERO;
                for c in sub.coeffs(a).into_iter().rev() {
                    acc = sup.add(sup.mul(acc, root), Elem(c));
                }
                acc
            })
            .collect()
    };
    Ok(Embedding {
        sub: sub.clone(),
        sup: sup.clone(),
        images,
    })
}
