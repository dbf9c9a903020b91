use super::{PermError, PermGroup, Permutation};

/// Cycle notation with 1-based points; the identity is `()`.
pub fn format_cycles(p: &Permutation) -> String {
    let cycles = p.cycles();
    if cycles.is_empty() {
        return "()".to_string();
    }
    cycles
        .iter()
        .map(|c| {
            let pts: Vec<String> = c.iter().map(|x| (x + 1).to_string()).collect();
            format!("({})", pts.join(","))
        })
        .collect()
}

/// Parses 1-based cycle notation such as `(1,2,3)(4,5)`.
pub fn parse_cycles(n: usize, s: &str) -> Result<Permutation, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut cycles = Vec::new();
    let mut rest = s.as_str();
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .ok_or_else(|| format!("expected '(' in {s:?}"))?;
        let end = body.find(')').ok_or_else(|| format!("unclosed cycle in {s:?}"))?;
        let inner = &body[..end];
        if !inner.is_empty() {
            let pts = inner
                .split(',')
                .map(|t| match t.parse::<usize>() {
                    Ok(x) if x >= 1 && x <= n => Ok(x - 1),
                    _ => Err(format!("bad point {t:?} for degree {n}")),
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(pts);
        }
        rest = &body[end + 1..];
    }
    Permutation::from_cycles(n, &cycles).map_err(|e| e.to_string())
}

/// Parses the group file format: a `degree n` line followed by `gen ...` lines.
/// `#` starts a comment.
pub fn parse_group_file(text: &str) -> Result<PermGroup, PermError> {
    let mut degree = None;
    let mut gens = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| PermError::Parse { line: line_no, msg };
        if let Some(rest) = line.strip_prefix("degree") {
            if degree.is_some() {
                return Err(err("duplicate degree line".into()));
            }
            let n = rest
                .trim()
                .parse::<usize>()
                .map_err(|_| err(format!("bad degree {:?}", rest.trim())))?;
            degree = Some(n);
        } else if let Some(rest) = line.strip_prefix("gen") {
            let n = degree.ok_or_else(|| err("gen before degree".into()))?;
            gens.push(parse_cycles(n, rest).map_err(err)?);
        } else {
            return Err(err(format!("unrecognised line {line:?}")));
        }
    }
    let degree = degree.ok_or(PermError::Parse {
        line: 0,
        msg: "missing degree line".into(),
    })?;
    PermGroup::new(degree, gens)
}

pub fn write_group_file(g: &PermGroup) -> String {
    let mut out = format!("degree {}\n", g.degree());
    for p in g.gens() {
        out.push_str(&format!("gen {}\n", format_cycles(p)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# comment\ndegree 5\ngen (1,2,3,4,5)\ngen (1,2) # trailing\n";
        let g = parse_group_file(text).unwrap();
        assert_eq!(g.order(), 120);
        let again = parse_group_file(&write_group_file(&g)).unwrap();
        assert_eq!(again.gens(), g.gens());
    }

    #[test]
    fn reports_line() {
        let err = parse_group_file("degree 3\ngen (1,4)\n").unwrap_err();
        assert!(matches!(err, PermError::Parse { line: 2, .. }));
        assert!(parse_group_file("gen (1,2)").is_err());
        assert!(parse_group_file("degree 3\ngen (1,2)(2,3)").is_err());
    }

    #[test]
    fn identity_text() {
        assert_eq!(format_cycles(&Permutation::identity(3)), "()");
        assert!(parse_cycles(3, "()").unwrap().is_identity());
    }
}
