//! Univariate polynomials over a [`Field`], stored low degree first with no
//! trailing zeros. The zero polynomial is the empty vector.

use rand::Rng;

use super::{Elem, Field};

pub type Poly = Vec<Elem>;

pub fn trim(mut f: Poly) -> Poly {
    while f.last().is_some_and(|c| c.is_zero()) {
        f.pop();
    }
    f
}

/// Degree, with `None` for the zero polynomial.
pub fn degree(f: &[Elem]) -> Option<usize> {
    f.iter().rposition(|c| !c.is_zero())
}

pub fn one() -> Poly {
    vec![Elem::ONE]
}

/// The polynomial `x`.
pub fn x() -> Poly {
    vec![Elem::ZERO, Elem::ONE]
}

pub fn add(k: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or_default();
            let y = b.get(i).copied().unwrap_or_default();
            k.add(x, y)
        })
        .collect();
    trim(out)
}

pub fn sub(k: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let nb: Poly = b.iter().map(|&c| k.neg(c)).collect();
    add(k, a, &nb)
}

pub fn mul(k: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Elem::ZERO; a.len() + b.len() - 1];
    for (i, &c) in a.iter().enumerate() {
        k.axpy(&mut out[i..i + b.len()], c, b);
    }
    trim(out)
}

pub fn scale(k: &Field, a: &[Elem], c: Elem) -> Poly {
    trim(a.iter().map(|&x| k.mul(x, c)).collect())
}

/// Scales to leading coefficient 1; the zero polynomial is returned unchanged.
pub fn monic(k: &Field, a: &[Elem]) -> Poly {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(k, a, k.inv(lead).expect("trimmed polynomial has nonzero lead")),
    }
}

/// Quotient and remainder. Panics on division by zero.
pub fn divrem(k: &Field, a: &[Elem], b: &[Elem]) -> (Poly, Poly) {
    let db = degree(b).expect("polynomial division by zero");
    let inv_lead = k.inv(b[db]).expect("nonzero lead");
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quo = vec![Elem::ZERO; r.len() - db];
    while r.len() > db {
        let dr = r.len() - 1;
        let c = k.mul(r[dr], inv_lead);
        quo[dr - db] = c;
        let nc = k.neg(c);
        k.axpy(&mut r[dr - db..=dr], nc, &b[..=db]);
        r = trim(r);
    }
    (trim(quo), r)
}

pub fn rem(k: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    divrem(k, a, b).1
}

/// Monic greatest common divisor.
pub fn gcd(k: &Field, a: &[Elem], b: &[Elem]) -> Poly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let r = rem(k, &a, &b);
        a = b;
        b = r;
    }
    monic(k, &a)
}

pub fn mulmod(k: &Field, a: &[Elem], b: &[Elem], m: &[Elem]) -> Poly {
    rem(k, &mul(k, a, b), m)
}

pub fn powmod(k: &Field, base: &[Elem], mut e: u64, m: &[Elem]) -> Poly {
    let mut acc = rem(k, &one(), m);
    let mut b = rem(k, base, m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(k, &acc, &b, m);
        }
        b = mulmod(k, &b, &b, m);
        e >>= 1;
    }
    acc
}

pub fn derivative(k: &Field, a: &[Elem]) -> Poly {
    trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| k.mul(k.from_int(i as i64), c))
            .collect(),
    )
}

pub fn eval(k: &Field, a: &[Elem], x: Elem) -> Elem {
    a.iter().rev().fold(Elem::ZERO, |acc, &c| k.add(k.mul(acc, x), c))
}

/// p-th root of a polynomial whose derivative vanishes.
fn pth_root(k: &Field, a: &[Elem]) -> Poly {
    let p = k.p() as usize;
    let e = k.q() as u64 / k.p() as u64;
    trim(a.iter().step_by(p).map(|&c| k.pow(c, e)).collect())
}

/// Square-free factorisation of a monic polynomial: pairs `(g, m)` with
/// `f = prod g^m` and each `g` square-free.
pub fn squarefree(k: &Field, f: &[Elem]) -> Vec<(Poly, u32)> {
    let f = monic(k, f);
    let mut out = Vec::new();
    if degree(&f).unwrap_or(0) == 0 {
        return out;
    }
    let d = derivative(k, &f);
    if d.is_empty() {
        for (g, m) in squarefree(k, &pth_root(k, &f)) {
            out.push((g, m * k.p()));
        }
        return out;
    }
    let mut c = gcd(k, &f, &d);
    let mut w = divrem(k, &f, &c).0;
    let mut i = 1;
    while degree(&w).unwrap_or(0) > 0 {
        let y = gcd(k, &w, &c);
        let fac = divrem(k, &w, &y).0;
        if degree(&fac).unwrap_or(0) > 0 {
            out.push((monic(k, &fac), i));
        }
        w = y;
        c = divrem(k, &c, &w).0;
        i += 1;
    }
    if degree(&c).unwrap_or(0) > 0 {
        for (g, m) in squarefree(k, &pth_root(k, &monic(k, &c))) {
            out.push((g, m * k.p()));
        }
    }
    out
}

/// Distinct-degree factorisation of a monic square-free polynomial.
pub fn distinct_degree(k: &Field, f: &[Elem]) -> Vec<(Poly, usize)> {
    let mut out = Vec::new();
    let mut rest = monic(k, f);
    let q = k.q() as u64;
    let mut h = rem(k, &x(), &rest);
    let mut i = 1;
    while degree(&rest).unwrap_or(0) >= 2 * i {
        h = powmod(k, &h, q, &rest);
        let g = gcd(k, &rest, &sub(k, &h, &x()));
        if degree(&g).unwrap_or(0) > 0 {
            rest = divrem(k, &rest, &g).0;
            h = rem(k, &h, &rest);
            out.push((g, i));
        }
        i += 1;
    }
    if let Some(dr) = degree(&rest) {
        if dr > 0 {
            out.push((rest, dr));
        }
    }
    out
}

/// Splits a monic product of distinct irreducibles of degree `d`.
pub fn equal_degree<R: Rng>(k: &Field, f: &[Elem], d: usize, rng: &mut R) -> Vec<Poly> {
    let n = degree(f).expect("nonzero");
    if n == d {
        return vec![monic(k, f)];
    }
    let q = k.q() as u64;
    loop {
        let a: Poly = trim((0..n).map(|_| Elem(rng.gen_range(0..k.q()))).collect());
        if degree(&a).unwrap_or(0) == 0 {
            continue;
        }
        let b = if q % 2 == 1 {
            // a^((q^d - 1)/2) = (a^(1 + q + ... + q^(d-1)))^((q-1)/2)
            let mut c = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                c = powmod(k, &c, q, f);
                norm = mulmod(k, &norm, &c, f);
            }
            sub(k, &powmod(k, &norm, (q - 1) / 2, f), &one())
        } else {
            let mut c = a.clone();
            let mut tr = a.clone();
            for _ in 1..(k.t() as usize * d) {
                c = mulmod(k, &c, &c, f);
                tr = add(k, &tr, &c);
            }
            tr
        };
        let g = gcd(k, f, &b);
        let dg = degree(&g).unwrap_or(0);
        if dg > 0 && dg < n {
            let h = divrem(k, f, &g).0;
            let mut out = equal_degree(k, &g, d, rng);
            out.extend(equal_degree(k, &monic(k, &h), d, rng));
            return out;
        }
    }
}

/// Distinct monic irreducible factors with multiplicities, sorted by
/// degree and then coefficients.
pub fn factor<R: Rng>(k: &Field, f: &[Elem], rng: &mut R) -> Vec<(Poly, u32)> {
    let mut out: Vec<(Poly, u32)> = Vec::new();
    for (g, m) in squarefree(k, f) {
        for (h, d) in distinct_degree(k, &g) {
            for irr in equal_degree(k, &h, d, rng) {
                match out.iter_mut().find(|(e, _)| *e == irr) {
                    Some(entry) => entry.1 += m,
                    None => out.push((irr, m)),
                }
            }
        }
    }
    out.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| a.0.iter().rev().cmp(b.0.iter().rev()))
    });
    out
}

/// Rabin-style test: `f` of degree `n` is irreducible iff `x^(q^n) = x mod f`
/// and `gcd(x^(q^(n/r)) - x, f) = 1` for each prime `r | n`.
pub fn is_irreducible(k: &Field, f: &[Elem]) -> bool {
    let f = monic(k, &trim(f.to_vec()));
    let n = match degree(&f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(n) => n,
    };
    let q = k.q() as u64;
    let mut frob = vec![rem(k, &x(), &f)];
    for _ in 0..n {
        let last = frob.last().unwrap().clone();
        frob.push(powmod(k, &last, q, &f));
    }
    if frob[n] != rem(k, &x(), &f) {
        return false;
    }
    let mut m = n;
    let mut r = 2;
    let mut primes = Vec::new();
    while m > 1 {
        if m % r == 0 {
            primes.push(r);
            while m % r == 0 {
                m /= r;
            }
        }
        r += 1;
    }
    primes.into_iter().all(|r| {
        let g = gcd(k, &f, &sub(k, &frob[n / r], &x()));
        degree(&g) == Some(0)
    })
}
