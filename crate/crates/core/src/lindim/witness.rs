use std::collections::HashMap;
use std::fmt;

use super::{LinDimError, LinDimValue, Method};
use crate::gfq::{Elem, Field};
use crate::linalg::{format_matrix, format_vector, parse_matrix, parse_vector, Matrix, Subspace};
use crate::perm::GroupAction;

/// A representation `rho` together with injective, spanning point images `phi`
/// satisfying `phi[x^g] = phi[x] rho[g]`, plus the kernel it was cut from.
#[derive(Debug, Clone, PartialEq)]
pub struct WitnessCertificate {
    pub value: LinDimValue,
    pub method: Method,
    pub seed: u64,
    pub complete: bool,
    pub field: Field,
    pub dim: usize,
    /// One `dim x dim` matrix per generator of the action.
    pub rho: Vec<Matrix>,
    /// One vector per point, in label order.
    pub phi: Vec<Vec<Elem>>,
    pub kernel: Subspace,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessFailure {
    ShapeMismatch(String),
    IntertwineFailure { gen: usize, point: usize },
    NotInjective { a: usize, b: usize },
    NotSpanning { rank: usize, dim: usize },
}

impl fmt::Display for WitnessFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WitnessFailure::ShapeMismatch(msg) => write!(f, "ShapeMismatch: {msg}"),
            WitnessFailure::IntertwineFailure { gen, point } => write!(
                f,
                "IntertwineFailure: generator {} at point {}",
                gen + 1,
                point + 1
            ),
            WitnessFailure::NotInjective { a, b } => {
                write!(f, "NotInjective: points {} and {} share an image", a + 1, b + 1)
            }
            WitnessFailure::NotSpanning { rank, dim } => {
                write!(f, "NotSpanning: images span {rank} of {dim} dimensions")
            }
        }
    }
}

impl std::error::Error for WitnessFailure {}

/// Checks shapes, injectivity, intertwining and spanning, in that order,
/// and reports the first failure.
pub fn witness_verify(c: &WitnessCertificate, a: &GroupAction) -> Result<(), WitnessFailure> {
    let shape = |msg: String| Err(WitnessFailure::ShapeMismatch(msg));
    let gens = a.induced_gens();
    if c.rho.len() != gens.len() {
        return shape(format!("{} rho matrices for {} generators", c.rho.len(), gens.len()));
    }
    if c.phi.len() != a.size() {
        return shape(format!("{} phi vectors for {} points", c.phi.len(), a.size()));
    }
    for (i, m) in c.rho.iter().enumerate() {
        if m.rows() != c.dim || m.cols() != c.dim || m.field() != &c.field {
            return shape(format!(
                "rho {} is {}x{} over GF({}), expected {}x{} over GF({})",
                i + 1,
                m.rows(),
                m.cols(),
                m.field().q(),
                c.dim,
                c.dim,
                c.field.q()
            ));
        }
    }
    if let Some(x) = c.phi.iter().position(|v| v.len() != c.dim) {
        return shape(format!("phi {} has length {}, expected {}", x + 1, c.phi[x].len(), c.dim));
    }

    let mut seen: HashMap<&[Elem], usize> = HashMap::with_capacity(c.phi.len());
    for (b, v) in c.phi.iter().enumerate() {
        if let Some(&a) = seen.get(v.as_slice()) {
            return Err(WitnessFailure::NotInjective { a, b });
        }
        seen.insert(v, b);
    }

    for (gi, (p, m)) in gens.iter().zip(&c.rho).enumerate() {
        for x in 0..a.size() {
            if c.phi[p.apply(x)] != m.vec_mul(&c.phi[x]) {
                return Err(WitnessFailure::IntertwineFailure { gen: gi, point: x });
            }
        }
    }

    if c.dim > 0 {
        let rank = Subspace::from_rows(&c.field, c.dim, c.phi.clone()).dim();
        if rank < c.dim {
            return Err(WitnessFailure::NotSpanning { rank, dim: c.dim });
        }
    }
    Ok(())
}

pub fn witness_is_valid(c: &WitnessCertificate, a: &GroupAction) -> bool {
    witness_verify(c, a).is_ok()
}

/// The structured text form; `labels` are written next to the phi vectors.
pub fn format_witness(c: &WitnessCertificate, a: &GroupAction) -> String {
    let mut out = format!(
        "lindim {} method {} seed {} complete {}\nrho\n",
        c.value, c.method, c.seed, c.complete
    );
    for m in &c.rho {
        out.push_str(&format_matrix(m));
    }
    out.push_str("phi\n");
    for (x, v) in c.phi.iter().enumerate() {
        let label = a.labels().get(x).map_or_else(|| (x + 1).to_string(), ToString::to_string);
        out.push_str(&format!("{label} : {}\n", format_vector(&c.field, v)));
    }
    out.push_str("kernel\n");
    for row in c.kernel.basis_rows() {
        out.push_str(&format_vector(&c.field, row));
        out.push('\n');
    }
    out
}

/// Reads the text form back. Labels are informational and not checked.
pub fn parse_witness(text: &str) -> Result<WitnessCertificate, LinDimError> {
    let bad = |msg: String| LinDimError::Parse(msg);
    let lines: Vec<&str> = text.lines().map(str::trim_end).collect();
    let mut pos = 0;
    let mut next = |what: &str| -> Result<&str, LinDimError> {
        let line = lines
            .get(pos)
            .copied()
            .ok_or_else(|| bad(format!("unexpected end of witness, expected {what}")))?;
        pos += 1;
        Ok(line)
    };

    let header: Vec<&str> = next("header")?.split_whitespace().collect();
    let ["lindim", value, "method", method, "seed", seed, "complete", complete] = header[..] else {
        return Err(bad("header must be `lindim <v> method <tag> seed <s> complete <bool>`".into()));
    };
    let value: LinDimValue = value.parse().map_err(bad)?;
    let method = Method::from_tag(method).ok_or_else(|| bad(format!("unknown method {method:?}")))?;
    let seed: u64 = seed.parse().map_err(|_| bad(format!("bad seed {seed:?}")))?;
    let complete: bool = complete
        .parse()
        .map_err(|_| bad(format!("bad complete flag {complete:?}")))?;
    if next("rho")?.trim() != "rho" {
        return Err(bad("expected `rho` section".into()));
    }

    let mut rho = Vec::new();
    loop {
        let head = next("matrix header or `phi`")?.trim();
        if head == "phi" {
            break;
        }
        let dims: Vec<u64> = head
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad(format!("bad matrix header {head:?}"))))
            .collect::<Result<_, _>>()?;
        let [rows, _, q] = dims[..] else {
            return Err(bad(format!("bad matrix header {head:?}")));
        };
        let f = Field::with_order(q).map_err(|e| bad(e.to_string()))?;
        let body = rows as usize + usize::from(!f.is_prime_field());
        let mut block = format!("{head}\n");
        for _ in 0..body {
            block.push_str(next("matrix row")?);
            block.push('\n');
        }
        rho.push(parse_matrix(&block).map_err(|e| bad(e.to_string()))?);
    }
    let first = rho.first().ok_or_else(|| bad("witness has no rho matrices".into()))?;
    let field = first.field().clone();
    let dim = first.rows();

    let mut phi = Vec::new();
    loop {
        let line = next("phi line or `kernel`")?;
        if line.trim() == "kernel" {
            break;
        }
        let (_, vec) = line
            .split_once(':')
            .ok_or_else(|| bad(format!("phi line without `:`: {line:?}")))?;
        phi.push(parse_vector(&field, vec).map_err(|e| bad(e.to_string()))?);
    }
    let n = phi.len();
    let mut rows = Vec::new();
    for line in lines[pos..].iter().filter(|l| !l.trim().is_empty()) {
        let v = parse_vector(&field, line).map_err(|e| bad(e.to_string()))?;
        if v.len() != n {
            return Err(bad(format!("kernel row has length {}, expected {n}", v.len())));
        }
        rows.push(v);
    }
    Ok(WitnessCertificate {
        value,
        method,
        seed,
        complete,
        field: field.clone(),
        dim,
        rho,
        phi,
        kernel: Subspace::from_rows(&field, n, rows),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::unit_vector;
    use crate::perm::PermGroup;
    use crate::permmod::FGModule;

    fn permutation_witness(a: &GroupAction, f: &Field) -> WitnessCertificate {
        let m = FGModule::permutation(a, f);
        let n = a.size();
        WitnessCertificate {
            value: LinDimValue::Exact(n),
            method: Method::GeneralLattice,
            seed: 0,
            complete: false,
            field: f.clone(),
            dim: n,
            rho: m.gens().to_vec(),
            phi: (0..n).map(|x| unit_vector(n, x)).collect(),
            kernel: Subspace::zero(f, n),
        }
    }

    #[test]
    fn permutation_module_verifies() {
        let a = GroupAction::natural(&PermGroup::symmetric(4));
        let c = permutation_witness(&a, &Field::new(3, 1).unwrap());
        assert_eq!(witness_verify(&c, &a), Ok(()));
    }

    #[test]
    fn diagnostics() {
        let a = GroupAction::natural(&PermGroup::cyclic(4));
        let f = Field::new(2, 1).unwrap();
        let good = permutation_witness(&a, &f);

        let mut same = good.clone();
        same.phi = vec![unit_vector(4, 0); 4];
        assert_eq!(witness_verify(&same, &a), Err(WitnessFailure::NotInjective { a: 0, b: 1 }));

        let mut frozen = good.clone();
        frozen.rho[0] = Matrix::identity(&f, 4);
        assert!(matches!(
            witness_verify(&frozen, &a),
            Err(WitnessFailure::IntertwineFailure { gen: 0, .. })
        ));

        let mut short = good.clone();
        short.phi.pop();
        assert!(matches!(witness_verify(&short, &a), Err(WitnessFailure::ShapeMismatch(_))));
    }

    #[test]
    fn not_spanning() {
        // trivial group on two points, images 0 and e_0 inside GF(2)^2
        let a = GroupAction::natural(&PermGroup::trivial(2));
        let f = Field::new(2, 1).unwrap();
        let c = WitnessCertificate {
            value: LinDimValue::Exact(2),
            method: Method::Oracle,
            seed: 0,
            complete: true,
            field: f.clone(),
            dim: 2,
            rho: vec![Matrix::identity(&f, 2)],
            phi: vec![vec![Elem::ZERO; 2], unit_vector(2, 0)],
            kernel: Subspace::zero(&f, 2),
        };
        assert_eq!(witness_verify(&c, &a), Err(WitnessFailure::NotSpanning { rank: 1, dim: 2 }));
    }

    #[test]
    fn text_round_trip() {
        for q in [3u64, 4] {
            let f = Field::with_order(q).unwrap();
            let a = GroupAction::ksubsets(&PermGroup::symmetric(4), 2).unwrap();
            let mut c = permutation_witness(&a, &f);
            c.kernel = Subspace::from_rows(&f, 6, vec![vec![Elem::ONE; 6]]);
            let text = format_witness(&c, &a);
            assert!(text.starts_with("lindim 6 method general-lattice seed 0 complete false\nrho\n"));
            assert_eq!(parse_witness(&text).unwrap(), c);
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_witness("").is_err());
        assert!(parse_witness("lindim x method oracle seed 0 complete true\nrho\nphi\nkernel\n").is_err());
        assert!(parse_witness("lindim 1 method oracle seed 0 complete true\nrho\nphi\nkernel\n").is_err());
    }
}
