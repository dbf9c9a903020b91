use super::{LinalgError, Matrix};
use crate::gfq::{Elem, Field};

pub fn format_vector(f: &Field, v: &[Elem]) -> String {
    v.iter()
        .map(|&e| f.format_elem(e))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn parse_vector(f: &Field, s: &str) -> Result<Vec<Elem>, LinalgError> {
    s.split_whitespace()
        .map(|tok| f.parse_elem(tok).map_err(|e| LinalgError::Parse(e.to_string())))
        .collect()
}

/// `rows cols q`, then `poly c_0 ... c_t` for extension fields, then one line per row.
pub fn format_matrix(m: &Matrix) -> String {
    let f = m.field();
    let mut out = format!("{} {} {}\n", m.rows(), m.cols(), f.q());
    if !f.is_prime_field() {
        let coeffs: Vec<String> = f.defining_poly().iter().map(u32::to_string).collect();
        out.push_str(&format!("poly {}\n", coeffs.join(" ")));
    }
    for i in 0..m.rows() {
        out.push_str(&format_vector(f, m.row(i)));
        out.push('\n');
    }
    out
}

pub fn parse_matrix(text: &str) -> Result<Matrix, LinalgError> {
    let bad = |msg: &str| LinalgError::Parse(msg.to_string());
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header: Vec<u64> = lines
        .next()
        .ok_or_else(|| bad("empty matrix text"))?
        .split_whitespace()
        .map(|x| x.parse().map_err(|_| bad("bad header")))
        .collect::<Result<_, _>>()?;
    let [rows, cols, q] = header[..] else {
        return Err(bad("header must be `rows cols q`"));
    };
    let f = Field::with_order(q).map_err(|e| LinalgError::Parse(e.to_string()))?;
    let mut body: Vec<&str> = lines.collect();
    if !f.is_prime_field() {
        let first = body.first().copied().unwrap_or("");
        let Some(rest) = first.strip_prefix("poly") else {
            return Err(bad("missing poly line"));
        };
        let coeffs: Vec<u32> = rest
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| bad("bad poly line")))
            .collect::<Result<_, _>>()?;
        if coeffs != f.defining_poly() {
            return Err(bad("defining polynomial differs from the canonical one"));
        }
        body.remove(0);
    }
    if body.len() != rows as usize {
        return Err(bad("row count does not match header"));
    }
    let mut data = Vec::with_capacity((rows * cols) as usize);
    for line in body {
        let row = parse_vector(&f, line)?;
        if row.len() != cols as usize {
            return Err(bad("row length does not match header"));
        }
        data.extend(row);
    }
    Ok(Matrix::from_data(&f, rows as usize, cols as usize, data))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_prime_and_extension() {
        for q in [5u64, 8] {
            let f = Field::with_order(q).unwrap();
            let data = (0..6).map(|i| Elem::from_code(i % f.q())).collect();
            let m = Matrix::from_data(&f, 2, 3, data);
            let text = format_matrix(&m);
            assert_eq!(parse_matrix(&text).unwrap(), m);
        }
    }

    #[test]
    fn rejects_wrong_shape() {
        assert!(parse_matrix("2 2 3\n1 2\n").is_err());
        assert!(parse_matrix("1 2 3\n1 2 0\n").is_err());
        assert!(parse_matrix("1 1 4\n1,0\n").is_err());
    }
}
