//! Closed-form values and bounds. Characteristic `p = 0` is accepted
//! wherever the characteristic enters only through divisibility.

use super::LinDimError;
use crate::gfq::is_prime;

fn divides(p: u64, x: u64) -> bool {
    if p == 0 {
        x == 0
    } else {
        x.is_multiple_of(p)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn bad(msg: impl Into<String>) -> LinDimError {
    LinDimError::BadParameter(msg.into())
}

fn check_char(p: u64) -> Result<(), LinDimError> {
    if p != 0 && !is_prime(p) {
        return Err(bad(format!("characteristic {p} is not 0 or a prime")));
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * u128::from(n - i) / u128::from(i + 1);
    }
    u64::try_from(r).ok()
}

/// `(r, t)` with `q = r^t`, `r` prime.
fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let r = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut t = 0;
    let mut x = q;
    while x.is_multiple_of(r) {
        x /= r;
        t += 1;
    }
    (x == 1).then_some((r, t))
}

fn isqrt_exact(x: u64) -> Option<u64> {
    let r = (x as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&s| s.checked_mul(s) == Some(x))
}

/// Wreath product `K wr L` on `k * l` points in its block action.
pub fn formula_wreath_imprimitive(
    k: u64,
    l: u64,
    k_is_regular: bool,
    lindim_k: u64,
    p: u64,
) -> Result<u64, LinDimError> {
    check_char(p)?;
    if k < 2 || l < 1 {
        return Err(bad(format!("need k >= 2 and l >= 1, got k={k}, l={l}")));
    }
    if k_is_regular && k == p {
        Ok(l + 1)
    } else {
        l.checked_mul(lindim_k).ok_or_else(|| bad("value overflows"))
    }
}

/// `S_k wr S_l` on `k^l` points in product action.
pub fn formula_wreath_product(k: u64, l: u64, p: u64) -> Result<u64, LinDimError> {
    check_char(p)?;
    if k < 3 || l < 2 {
        return Err(bad(format!("need k >= 3 and l >= 2, got k={k}, l={l}")));
    }
    if divides(p, k) {
        Ok((k - 2) * l + 1)
    } else {
        Ok((k - 1) * l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SnCase {
    /// `S_n` on `n` points.
    Natural { n: u64 },
    /// `S_n` or `A_n` on `k`-subsets.
    KSets { n: u64, k: u64 },
    /// `S_n` on partitions into `n / k` blocks of size `k`.
    Uniform { n: u64, k: u64 },
}

pub fn formula_sn_family(case: SnCase, p: u64) -> Result<u64, LinDimError> {
    check_char(p)?;
    let out = |msg: String| Err(LinDimError::OutOfTheoremRange(msg));
    match case {
        SnCase::Natural { n } => {
            if n <= 2 {
                return out(format!("natural action needs n > 2, got {n}"));
            }
            Ok(n - 1)
        }
        SnCase::KSets { n, k } => {
            if n < 10 || k < 1 || 2 * k >= n {
                return out(format!("k-sets need n >= 10 and 1 <= k < n/2, got n={n}, k={k}"));
            }
            if divides(p, n) && divides(p, k) {
                Ok(n - 2)
            } else {
                Ok(n - 1)
            }
        }
        SnCase::Uniform { n, k } => {
            if n < 9 || k < 2 || n % k != 0 || n / k < 2 {
                return out(format!(
                    "uniform partitions need n >= 9 and k | n with k, n/k > 1, got n={n}, k={k}"
                ));
            }
            if p != 0 && p <= n {
                return out(format!("characteristic {p} divides the order of S_{n}"));
            }
            Ok((n * n - 3 * n) / 2)
        }
    }
}

/// Almost simple 2-transitive actions with an exceptional linear dimension,
/// named by socle and degree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoTransitive {
    /// `PSL_d(q)` on the points of projective space.
    ProjectiveSpace { d: u32, q: u64 },
    /// `A_7` on 15 points.
    Alternating7On15,
    /// `Sp_{2d}(2)` on `2^{2d-1} - 2^{d-1}` points.
    SymplecticMinus { d: u32 },
    /// `Sp_{2d}(2)` on `2^{2d-1} + 2^{d-1}` points.
    SymplecticPlus { d: u32 },
    /// `PSL_2(q)` on the projective line; `in_psigmal` when `G <= PSigmaL_2(q)`.
    ProjectiveLine { q: u64, in_psigmal: bool },
    /// `Suz(q)` on `q^2 + 1` points.
    Suzuki { q: u64 },
    /// `PSU_3(q)` on `q^3 + 1` points.
    Unitary { q: u64 },
    /// `Ree(q)` on `q^3 + 1` points.
    Ree { q: u64 },
    Mathieu22,
    Mathieu23,
    Mathieu24,
    Mathieu11On12,
    Psl2Of11On11,
    HigmanSims,
    Conway3,
}

impl TwoTransitive {
    /// Degree of the action.
    pub fn degree(&self) -> Result<u64, LinDimError> {
        let overflow = || bad("degree overflows");
        let pow = |b: u64, e: u32| b.checked_pow(e).ok_or_else(overflow);
        Ok(match *self {
            TwoTransitive::ProjectiveSpace { d, q } => {
                if q < 2 {
                    return Err(bad(format!("bad q={q}")));
                }
                (pow(q, d)? - 1) / (q - 1)
            }
            TwoTransitive::Alternating7On15 => 15,
            TwoTransitive::SymplecticMinus { d } | TwoTransitive::SymplecticPlus { d } => {
                if d < 1 {
                    return Err(bad("need d >= 1"));
                }
                let (a, b) = (pow(2, 2 * d - 1)?, pow(2, d - 1)?);
                if matches!(self, TwoTransitive::SymplecticMinus { .. }) {
                    a - b
                } else {
                    a + b
                }
            }
            TwoTransitive::ProjectiveLine { q, .. } => q + 1,
            TwoTransitive::Suzuki { q } => pow(q, 2)? + 1,
            TwoTransitive::Unitary { q } | TwoTransitive::Ree { q } => pow(q, 3)? + 1,
            TwoTransitive::Mathieu22 => 22,
            TwoTransitive::Mathieu23 => 23,
            TwoTransitive::Mathieu24 => 24,
            TwoTransitive::Mathieu11On12 => 12,
            TwoTransitive::Psl2Of11On11 => 11,
            TwoTransitive::HigmanSims => 176,
            TwoTransitive::Conway3 => 276,
        })
    }
}

/// The tabulated value over a field of characteristic `p` and degree `t`
/// over its prime field, if the case's conditions hold.
pub fn formula_2transitive_table(case: TwoTransitive, p: u64, t: u32) -> Result<u64, LinDimError> {
    check_char(p)?;
    let violation = |msg: String| Err(LinDimError::ConditionViolation(msg));
    let need_char = |want: u64| -> Result<(), LinDimError> {
        if p == want {
            Ok(())
        } else {
            Err(LinDimError::ConditionViolation(format!("needs p = {want}, got p = {p}")))
        }
    };
    let sporadic = |want: u64, value: u64| need_char(want).map(|_| value);
    match case {
        TwoTransitive::ProjectiveSpace { d, q } => {
            let Some((r, e)) = prime_power(q) else {
                return Err(bad(format!("q={q} is not a prime power")));
            };
            if d < 3 {
                return violation(format!("needs d >= 3, got d = {d}"));
            }
            if r != p {
                return violation(format!("needs q a power of p = {p}, got q = {q}"));
            }
            let b = binomial(u64::from(d) + p - 2, u64::from(d) - 1).ok_or_else(|| bad("value overflows"))?;
            b.checked_pow(e).ok_or_else(|| bad("value overflows"))
        }
        TwoTransitive::Alternating7On15 => sporadic(2, 4),
        TwoTransitive::SymplecticMinus { d } => {
            need_char(2)?;
            if d < 3 {
                return violation(format!("needs d >= 3, got d = {d}"));
            }
            Ok(2 * u64::from(d) + 1)
        }
        TwoTransitive::SymplecticPlus { d } => {
            need_char(2)?;
            if d < 2 {
                return violation(format!("needs d >= 2, got d = {d}"));
            }
            Ok(2 * u64::from(d) + 1)
        }
        TwoTransitive::ProjectiveLine { q, in_psigmal } => {
            if prime_power(q).is_none() {
                return Err(bad(format!("q={q} is not a prime power")));
            }
            if !in_psigmal {
                return violation("needs G inside PSigmaL_2(q)".into());
            }
            match q % 8 {
                1 | 7 => need_char(2)?,
                3 | 5 => {
                    if p != 2 || !t.is_multiple_of(2) {
                        return violation(format!("needs GF(4) inside the field, got p = {p}, t = {t}"));
                    }
                }
                _ => return violation(format!("needs q odd, got q = {q}")),
            }
            Ok(q.div_ceil(2))
        }
        TwoTransitive::Suzuki { q } => {
            let m = isqrt_exact(2 * q).ok_or_else(|| bad(format!("2q = {} is not a square", 2 * q)))?;
            if !divides(p, q + 1 + m) {
                return violation(format!("needs p | q+1+m = {}", q + 1 + m));
            }
            Ok(m * (q - 1) / 2 + 1)
        }
        TwoTransitive::Unitary { q } => {
            if !divides(p, q + 1) {
                return violation(format!("needs p | q+1 = {}", q + 1));
            }
            Ok(q * q - q + 1)
        }
        TwoTransitive::Ree { q } => {
            let m = isqrt_exact(3 * q).ok_or_else(|| bad(format!("3q = {} is not a square", 3 * q)))?;
            if p == 2 {
                Ok(q * q - q + 1)
            } else if divides(p, q + 1) {
                Ok((m * q * q - m) / 6 + (q * q - q) / 2 + 1)
            } else if divides(p, q + m + 1) {
                Ok(m * (q * q - 1) / 3 + 1)
            } else {
                violation(format!("needs p = 2, p | q+1 or p | q+m+1, got p = {p}"))
            }
        }
        TwoTransitive::Mathieu22 => sporadic(2, 10),
        TwoTransitive::Mathieu23 => sporadic(2, 11),
        TwoTransitive::Mathieu24 => sporadic(2, 12),
        TwoTransitive::Mathieu11On12 => sporadic(3, 6),
        TwoTransitive::Psl2Of11On11 => sporadic(3, 5),
        TwoTransitive::HigmanSims => match p {
            2 => Ok(21),
            3 => Ok(49),
            _ => violation(format!("needs p = 2 or 3, got p = {p}")),
        },
        TwoTransitive::Conway3 => match p {
            2 => Ok(23),
            3 => Ok(126),
            _ => violation(format!("needs p = 2 or 3, got p = {p}")),
        },
    }
}

/// The value for every almost simple 2-transitive action not covered by the table.
pub fn default_2transitive(n: u64) -> u64 {
    n.saturating_sub(1)
}

/// The tabulated value when its conditions hold, otherwise `n - 1`.
pub fn lindim_2transitive(case: TwoTransitive, p: u64, t: u32) -> Result<u64, LinDimError> {
    match formula_2transitive_table(case, p, t) {
        Err(LinDimError::ConditionViolation(_)) => Ok(default_2transitive(case.degree()?)),
        other => other,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AffineBound {
    pub value: u64,
    /// The bound is attained: the field of definition equals the field.
    pub exact: bool,
}

/// Upper bound for `AGL(d, p^e)` on its `p^(ed)` points over `GF(p^t)`.
pub fn bound_affine(d: u64, e: u64, t: u64) -> AffineBound {
    let r = e / gcd(e, t);
    AffineBound {
        value: d * r + 1,
        exact: t == e,
    }
}

/// `(max, sum)` of the per-orbit values.
pub fn bounds_intransitive(values: &[u64]) -> (u64, u64) {
    (values.iter().copied().max().unwrap_or(0), values.iter().sum())
}

/// The sum of the per-orbit values, valid for direct products acting on a
/// disjoint union with the stated stabilizer hypothesis.
pub fn exact_direct_product(values: &[u64], hypothesis_holds: bool) -> Result<u64, LinDimError> {
    if !hypothesis_holds {
        return Err(bad("the direct-product hypothesis is not asserted"));
    }
    Ok(values.iter().sum())
}
