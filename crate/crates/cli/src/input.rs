//! Group sources, action descriptors and field specs as given on the command line.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use lindim_core::gfq::{prime_power, Field};
use lindim_core::perm::{catalog, parse_group_file, GroupAction, PermGroup};

/// Anything wrong with the inputs themselves; reported with exit code 1.
#[derive(Debug)]
pub struct InputError(pub String);

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSource {
    File(PathBuf),
    Catalog(String),
}

impl GroupSource {
    pub fn load(&self) -> Result<PermGroup, InputError> {
        match self {
            GroupSource::File(path) => read_group(path),
            GroupSource::Catalog(name) => Ok(catalog::get(name)?),
        }
    }

    /// `n` when the source names the symmetric group `S<n>` in the catalogue.
    pub fn symmetric_degree(&self) -> Option<u64> {
        match self {
            GroupSource::Catalog(name) => symmetric_degree(name),
            GroupSource::File(_) => None,
        }
    }

    pub fn describe(&self) -> String {
        match self {
            GroupSource::File(path) => path.display().to_string(),
            GroupSource::Catalog(name) => name.clone(),
        }
    }
}

fn symmetric_degree(name: &str) -> Option<u64> {
    name.strip_prefix('S')?.parse().ok()
}

fn read_group(path: &Path) -> Result<PermGroup, InputError> {
    let text = fs::read_to_string(path)
        .map_err(|e| InputError(format!("cannot read {}: {e}", path.display())))?;
    parse_group_file(&text).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ActionSpec {
    Natural,
    KSets(usize),
    Cosets(PathBuf),
    WreathImprimitive(String, String),
    WreathProduct(String, String),
    Partitions(usize),
    Regular,
}

impl FromStr for ActionSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (head, arg) = match s.split_once(':') {
            Some((h, a)) => (h, Some(a)),
            None => (s, None),
        };
        let number = |a: Option<&str>| -> Result<usize, String> {
            let a = a.ok_or_else(|| format!("{head} needs a parameter, as in {head}:2"))?;
            match a.parse::<usize>() {
                Ok(k) if k >= 1 => Ok(k),
                _ => Err(format!("{head}: expected a positive integer, got {a:?}")),
            }
        };
        let pair = |a: Option<&str>| -> Result<(String, String), String> {
            let a = a.ok_or_else(|| format!("{head} needs two catalogue names, as in {head}:S3,S2"))?;
            match a.split_once(',') {
                Some((k, l)) if !k.is_empty() && !l.is_empty() => Ok((k.to_string(), l.to_string())),
                _ => Err(format!("{head}: expected K,L, got {a:?}")),
            }
        };
        let bare = |spec: ActionSpec| match arg {
            None => Ok(spec),
            Some(_) => Err(format!("{head} takes no parameter")),
        };
        match head {
            "natural" => bare(ActionSpec::Natural),
            "regular" => bare(ActionSpec::Regular),
            "ksets" => Ok(ActionSpec::KSets(number(arg)?)),
            "partitions" => Ok(ActionSpec::Partitions(number(arg)?)),
            "cosets" => match arg {
                Some(p) if !p.is_empty() => Ok(ActionSpec::Cosets(PathBuf::from(p))),
                _ => Err("cosets needs a subgroup file, as in cosets:h.grp".into()),
            },
            "wreath-imp" => pair(arg).map(|(k, l)| ActionSpec::WreathImprimitive(k, l)),
            "wreath-prod" => pair(arg).map(|(k, l)| ActionSpec::WreathProduct(k, l)),
            _ => Err(format!(
                "unknown action {s:?}; expected natural, ksets:k, cosets:<file>, \
                 wreath-imp:K,L, wreath-prod:K,L, partitions:k or regular"
            )),
        }
    }
}

impl ActionSpec {
    pub fn needs_group(&self) -> bool {
        !matches!(self, ActionSpec::WreathImprimitive(..) | ActionSpec::WreathProduct(..))
    }

    pub fn build(&self, source: Option<&GroupSource>) -> Result<GroupAction, InputError> {
        let group = || -> Result<PermGroup, InputError> {
            source
                .ok_or_else(|| InputError("this action needs --group or --catalog".into()))?
                .load()
        };
        let action = match self {
            ActionSpec::Natural => GroupAction::natural(&group()?),
            ActionSpec::Regular => GroupAction::regular(&group()?)?,
            ActionSpec::KSets(k) => GroupAction::ksubsets(&group()?, *k)?,
            ActionSpec::Partitions(k) => GroupAction::uniform_partitions(&group()?, *k)?,
            ActionSpec::Cosets(path) => {
                let sub = read_group(path)?;
                GroupAction::cosets(&group()?, sub.gens())?
            }
            ActionSpec::WreathImprimitive(k, l) => {
                GroupAction::wreath_imprimitive(&catalog::get(k)?, &catalog::get(l)?)?
            }
            ActionSpec::WreathProduct(k, l) => {
                GroupAction::wreath_product(&catalog::get(k)?, &catalog::get(l)?)?
            }
        };
        Ok(action)
    }

    /// Short case label for reports.
    pub fn case_name(&self, source: Option<&GroupSource>) -> String {
        let g = source.map(GroupSource::describe).unwrap_or_default();
        match self {
            ActionSpec::Natural => g,
            ActionSpec::Regular => format!("{g}-regular"),
            ActionSpec::KSets(k) => format!("{g}-{k}sets"),
            ActionSpec::Partitions(k) => format!("{g}-partitions{k}"),
            ActionSpec::Cosets(p) => format!("{g}-cosets:{}", p.display()),
            ActionSpec::WreathImprimitive(k, l) => format!("{k}wr{l}-imprimitive"),
            ActionSpec::WreathProduct(k, l) => format!("{k}wr{l}-product"),
        }
    }

    /// Symmetric-group degree of both wreath factors, when both are `S<n>`.
    pub fn symmetric_factors(&self) -> Option<(u64, u64)> {
        match self {
            ActionSpec::WreathImprimitive(k, l) | ActionSpec::WreathProduct(k, l) => {
                Some((symmetric_degree(k)?, symmetric_degree(l)?))
            }
            _ => None,
        }
    }
}

/// Parses `q`, `p` or `p^t`.
pub fn parse_field(s: &str) -> Result<Field, String> {
    let q = match s.split_once('^') {
        Some((p, t)) => {
            let p: u64 = p.trim().parse().map_err(|_| format!("bad characteristic in {s:?}"))?;
            let t: u32 = t.trim().parse().map_err(|_| format!("bad exponent in {s:?}"))?;
            return Field::new(p, t).map_err(|e| e.to_string());
        }
        None => s.trim().parse::<u64>().map_err(|_| format!("bad field order {s:?}"))?,
    };
    let (p, t) = prime_power(q).ok_or_else(|| format!("{q} is not a prime power"))?;
    Field::new(p, t).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn action_descriptors() {
        assert_eq!("natural".parse(), Ok(ActionSpec::Natural));
        assert_eq!("ksets:2".parse(), Ok(ActionSpec::KSets(2)));
        assert_eq!(
            "wreath-prod:S3,S2".parse(),
            Ok(ActionSpec::WreathProduct("S3".into(), "S2".into()))
        );
        assert!("ksets".parse::<ActionSpec>().is_err());
        assert!("ksets:0".parse::<ActionSpec>().is_err());
        assert!("regular:3".parse::<ActionSpec>().is_err());
        assert!("wreath-imp:S3".parse::<ActionSpec>().is_err());
        assert!("orbit".parse::<ActionSpec>().is_err());
    }

    #[test]
    fn field_specs() {
        assert_eq!(parse_field("2").unwrap().q(), 2);
        assert_eq!(parse_field("8").unwrap().t(), 3);
        assert_eq!(parse_field("3^2").unwrap().q(), 9);
        assert!(parse_field("6").is_err());
        assert!(parse_field("4^2").is_err());
        assert!(parse_field("x").is_err());
    }

    #[test]
    fn symmetric_names() {
        assert_eq!(symmetric_degree("S5"), Some(5));
        assert_eq!(symmetric_degree("PSL32"), None);
        assert_eq!(
            "wreath-imp:S3,C2".parse::<ActionSpec>().unwrap().symmetric_factors(),
            None
        );
    }
}
