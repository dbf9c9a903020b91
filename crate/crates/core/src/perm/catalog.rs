//! Built-in groups: transitive groups of degree at most 7, a few named
//! groups, and the families `S<n>`, `A<n>`, `C<n>`, `D<n>`.

use super::{parse_group_file, PermError, PermGroup};

static FILES: &[(&str, &str)] = &[
    ("A7_15", include_str!("../../catalog/A7_15.grp")),
    ("M11", include_str!("../../catalog/M11.grp")),
    ("M11_12", include_str!("../../catalog/M11_12.grp")),
    ("PSL27_8", include_str!("../../catalog/PSL27_8.grp")),
    ("PSL32", include_str!("../../catalog/PSL32.grp")),
    ("PSL211_11", include_str!("../../catalog/PSL211_11.grp")),
    ("T1_1", include_str!("../../catalog/T1_1.grp")),
    ("T2_1", include_str!("../../catalog/T2_1.grp")),
    ("T3_1", include_str!("../../catalog/T3_1.grp")),
    ("T3_2", include_str!("../../catalog/T3_2.grp")),
    ("T4_1", include_str!("../../catalog/T4_1.grp")),
    ("T4_2", include_str!("../../catalog/T4_2.grp")),
    ("T4_3", include_str!("../../catalog/T4_3.grp")),
    ("T4_4", include_str!("../../catalog/T4_4.grp")),
    ("T4_5", include_str!("../../catalog/T4_5.grp")),
    ("T5_1", include_str!("../../catalog/T5_1.grp")),
    ("T5_2", include_str!("../../catalog/T5_2.grp")),
    ("T5_3", include_str!("../../catalog/T5_3.grp")),
    ("T5_4", include_str!("../../catalog/T5_4.grp")),
    ("T5_5", include_str!("../../catalog/T5_5.grp")),
    ("T6_1", include_str!("../../catalog/T6_1.grp")),
    ("T6_2", include_str!("../../catalog/T6_2.grp")),
    ("T6_3", include_str!("../../catalog/T6_3.grp")),
    ("T6_4", include_str!("../../catalog/T6_4.grp")),
    ("T6_5", include_str!("../../catalog/T6_5.grp")),
    ("T6_6", include_str!("../../catalog/T6_6.grp")),
    ("T6_7", include_str!("../../catalog/T6_7.grp")),
    ("T6_8", include_str!("../../catalog/T6_8.grp")),
    ("T6_9", include_str!("../../catalog/T6_9.grp")),
    ("T6_10", include_str!("../../catalog/T6_10.grp")),
    ("T6_11", include_str!("../../catalog/T6_11.grp")),
    ("T6_12", include_str!("../../catalog/T6_12.grp")),
    ("T6_13", include_str!("../../catalog/T6_13.grp")),
    ("T6_14", include_str!("../../catalog/T6_14.grp")),
    ("T6_15", include_str!("../../catalog/T6_15.grp")),
    ("T6_16", include_str!("../../catalog/T6_16.grp")),
    ("T7_1", include_str!("../../catalog/T7_1.grp")),
    ("T7_2", include_str!("../../catalog/T7_2.grp")),
    ("T7_3", include_str!("../../catalog/T7_3.grp")),
    ("T7_4", include_str!("../../catalog/T7_4.grp")),
    ("T7_5", include_str!("../../catalog/T7_5.grp")),
    ("T7_6", include_str!("../../catalog/T7_6.grp")),
    ("T7_7", include_str!("../../catalog/T7_7.grp")),
];

/// Names of the built-in group files.
pub fn names() -> Vec<&'static str> {
    FILES.iter().map(|(n, _)| *n).collect()
}

/// Text of a built-in group file.
pub fn source(name: &str) -> Option<&'static str> {
    FILES.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

/// Looks up a built-in group or a family member such as `S5` or `D4`.
pub fn get(name: &str) -> Result<PermGroup, PermError> {
    if let Some(text) = source(name) {
        return parse_group_file(text);
    }
    let unknown = || PermError::UnknownGroup(name.to_string());
    let (family, rest) = name.split_at(name.chars().next().map_or(0, char::len_utf8));
    let n: usize = rest.parse().map_err(|_| unknown())?;
    if n == 0 || n > 64 {
        return Err(unknown());
    }
    match family {
        "S" => Ok(PermGroup::symmetric(n)),
        "A" => Ok(PermGroup::alternating(n)),
        "C" => Ok(PermGroup::cyclic(n)),
        "D" => Ok(PermGroup::dihedral(n)),
        _ => Err(unknown()),
    }
}

/// The transitive groups of degree `n` in catalogue order, as `(name, group)`.
pub fn transitive(n: usize) -> Vec<(&'static str, PermGroup)> {
    let prefix = format!("T{n}_");
    FILES
        .iter()
        .filter(|(name, _)| name.starts_with(&prefix))
        .map(|(name, text)| (*name, parse_group_file(text).expect("catalogue file")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transitive_counts_and_orders() {
        let counts = [1, 1, 2, 5, 5, 16, 7];
        for (n, &c) in (1..=7).zip(&counts) {
            let groups = transitive(n);
            assert_eq!(groups.len(), c, "degree {n}");
            for (name, g) in &groups {
                assert!(g.is_transitive(), "{name}");
            }
        }
        let orders: Vec<u128> = transitive(6).iter().map(|(_, g)| g.order()).collect();
        assert_eq!(
            orders,
            vec![6, 6, 12, 12, 18, 24, 24, 24, 36, 36, 48, 60, 72, 120, 360, 720]
        );
    }

    #[test]
    fn named_orders() {
        for (name, order, degree) in [
            ("PSL32", 168u128, 7),
            ("PSL27_8", 168, 8),
            ("A7_15", 2520, 15),
            ("M11", 7920, 11),
            ("M11_12", 7920, 12),
            ("PSL211_11", 660, 11),
        ] {
            let g = get(name).unwrap();
            assert_eq!((g.order(), g.degree()), (order, degree), "{name}");
            assert!(g.is_primitive(), "{name}");
        }
    }

    #[test]
    fn families() {
        assert_eq!(get("S7").unwrap().order(), 5040);
        assert_eq!(get("D6").unwrap().order(), 12);
        assert!(matches!(get("X3"), Err(PermError::UnknownGroup(_))));
        assert!(get("S").is_err());
    }
}
