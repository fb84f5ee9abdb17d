//! `key=value` parameter maps and their translation into core types.

use std::collections::BTreeMap;

use gek_core::entropy::EntropySpec;
use gek_core::formal_series::parse_rational;
use gek_core::group_log::{GroupFunction, GroupLogarithm};
use num_rational::BigRational;

pub type Params = BTreeMap<String, f64>;

fn split_pairs(text: &str) -> Result<Vec<(String, String)>, String> {
    let mut out: Vec<(String, String)> = Vec::new();
    for item in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (k, v) = item.split_once('=').ok_or_else(|| format!("--params: expected key=value, got {item:?}"))?;
        let k = k.trim().to_string();
        if out.iter().any(|(seen, _)| *seen == k) {
            return Err(format!("--params: duplicate key {k:?}"));
        }
        out.push((k, v.trim().to_string()));
    }
    Ok(out)
}

pub fn parse_params(text: &str) -> Result<Params, String> {
    split_pairs(text)?
        .into_iter()
        .map(|(k, v)| {
            let x: f64 = v.parse().map_err(|_| format!("--params: {k}={v} is not a number"))?;
            if !x.is_finite() {
                return Err(format!("--params: {k}={v} is not finite"));
            }
            Ok((k, x))
        })
        .collect()
}

pub fn parse_rational_params(text: &str) -> Result<BTreeMap<String, BigRational>, String> {
    split_pairs(text)?
        .into_iter()
        .map(|(k, v)| parse_rational(&v).map(|r| (k.clone(), r)).map_err(|e| format!("--params: {k}: {e}")))
        .collect()
}

/// Rejects unknown keys and reports missing ones.
pub fn check_keys<V>(
    params: &BTreeMap<String, V>,
    required: &[&str],
    optional: &[&str],
    what: &str,
) -> Result<(), String> {
    if let Some(unknown) = params.keys().find(|k| !required.contains(&k.as_str()) && !optional.contains(&k.as_str())) {
        let mut allowed: Vec<&str> = required.to_vec();
        allowed.extend_from_slice(optional);
        return Err(format!("unknown parameter {unknown:?} for {what} (allowed: {})", allowed.join(", ")));
    }
    if let Some(missing) = required.iter().find(|k| !params.contains_key(**k)) {
        return Err(format!("missing parameter {missing:?} for {what}"));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    Identity,
    Tsallis,
    Kaniadakis,
    Abel,
}

impl GroupKind {
    pub fn parse(name: &str) -> Result<Self, String> {
        match name {
            "identity" | "id" => Ok(GroupKind::Identity),
            "tsallis" | "multiplicative" => Ok(GroupKind::Tsallis),
            "kaniadakis" => Ok(GroupKind::Kaniadakis),
            "abel" => Ok(GroupKind::Abel),
            other => Err(format!("unknown group function {other:?} (expected identity, tsallis, kaniadakis, abel)")),
        }
    }

    pub fn keys(self) -> &'static [&'static str] {
        match self {
            GroupKind::Identity => &[],
            GroupKind::Tsallis => &["q"],
            GroupKind::Kaniadakis => &["k"],
            GroupKind::Abel => &["a", "b"],
        }
    }

    /// Builds `G` from already key-checked parameters.
    pub fn build(self, p: &Params) -> Result<GroupFunction, String> {
        let r = match self {
            GroupKind::Identity => Ok(GroupFunction::Identity),
            GroupKind::Tsallis => GroupFunction::multiplicative(p["q"]),
            GroupKind::Kaniadakis => GroupFunction::kaniadakis(p["k"]),
            GroupKind::Abel => GroupFunction::abel(p["a"], p["b"]),
        };
        r.map_err(|e| e.to_string())
    }
}

/// Family name, optional group function and numeric parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct FamilySelection {
    pub family: String,
    pub g: Option<GroupKind>,
    pub params: Params,
}

impl FamilySelection {
    pub fn new(family: &str, g: Option<&str>, params: Params) -> Result<Self, String> {
        let family = match family {
            "von_neumann" => "boltzmann",
            other => other,
        }
        .to_string();
        let takes_g = matches!(family.as_str(), "zg" | "alt_z");
        let g = match (takes_g, g) {
            (true, Some(name)) => Some(GroupKind::parse(name)?),
            (true, None) => return Err(format!("--g is required for family {family}")),
            (false, Some(_)) => return Err(format!("--g is only used by zg and alt_z, not {family}")),
            (false, None) => None,
        };
        let selection = FamilySelection { family, g, params };
        selection.check()?;
        Ok(selection)
    }

    fn required_keys(&self) -> Result<Vec<&'static str>, String> {
        Ok(match self.family.as_str() {
            "boltzmann" => vec![],
            "renyi" => vec!["alpha"],
            "tsallis_aq" => vec!["a", "q"],
            "landsberg_vedral" => vec!["q"],
            "zq" => vec!["q", "alpha"],
            "zk" => vec!["k", "alpha"],
            "zab" => vec!["a", "b", "alpha"],
            "zg" | "alt_z" => {
                let mut keys = self.g.map(GroupKind::keys).unwrap_or(&[]).to_vec();
                keys.push("alpha");
                keys
            }
            other => {
                return Err(format!(
                    "unknown family {other:?} (expected boltzmann, renyi, tsallis_aq, landsberg_vedral, zq, zk, zab, zg, alt_z)"
                ))
            }
        })
    }

    fn check(&self) -> Result<(), String> {
        check_keys(&self.params, &self.required_keys()?, &[], &self.family)
    }

    pub fn with(&self, key: &str, value: f64) -> Result<Self, String> {
        let mut next = self.clone();
        next.params.insert(key.to_string(), value);
        next.check()?;
        Ok(next)
    }

    pub fn build(&self) -> Result<EntropySpec, String> {
        let p = &self.params;
        let spec = match self.family.as_str() {
            "boltzmann" => Ok(EntropySpec::Boltzmann),
            "renyi" => EntropySpec::renyi(p["alpha"]),
            "tsallis_aq" => EntropySpec::tsallis_aq(p["a"], p["q"]),
            "landsberg_vedral" => EntropySpec::landsberg_vedral(p["q"]),
            "zq" => EntropySpec::z_q(p["q"], p["alpha"]),
            "zk" => EntropySpec::z_k(p["k"], p["alpha"]),
            "zab" => EntropySpec::z_ab(p["a"], p["b"], p["alpha"]),
            "zg" | "alt_z" => {
                let g = self.g.expect("checked in new").build(p)?;
                if self.family == "zg" {
                    EntropySpec::z_g(g, p["alpha"])
                } else {
                    EntropySpec::alt_z(g, p["alpha"])
                }
            }
            other => return Err(format!("unknown family {other:?}")),
        };
        spec.map_err(|e| e.to_string())
    }
}

/// `G` plus an optional `gamma` for the logarithm.
pub fn group_logarithm(family: &str, params: &Params) -> Result<GroupLogarithm, String> {
    let kind = GroupKind::parse(family)?;
    check_keys(params, kind.keys(), &["gamma"], family)?;
    let g = kind.build(params)?;
    match params.get("gamma") {
        Some(&gamma) => GroupLogarithm::with_gamma(g, gamma).map_err(|e| e.to_string()),
        None => Ok(GroupLogarithm::new(g)),
    }
}

/// Inclusive range `key=start:stop:step`.
pub fn parse_sweep(text: &str) -> Result<(String, Vec<f64>), String> {
    let bad = || format!("--param: expected key=start:stop:step, got {text:?}");
    let (key, range) = text.split_once('=').ok_or_else(bad)?;
    let parts: Vec<f64> =
        range.split(':').map(|s| s.trim().parse::<f64>()).collect::<Result<_, _>>().map_err(|_| bad())?;
    let [start, stop, step] = parts[..] else { return Err(bad()) };
    if !(step > 0.0 && start.is_finite() && stop.is_finite()) || stop < start {
        return Err(format!("--param: malformed sweep range {range:?} (need start <= stop, step > 0)"));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize + 1;
    if count > 1_000_000 {
        return Err(format!("--param: sweep of {count} points is too long"));
    }
    Ok((key.trim().to_string(), (0..count).map(|i| start + i as f64 * step).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builds_families() {
        let p = parse_params("a=0.3,b=-0.2,alpha=0.5").unwrap();
        let sel = FamilySelection::new("zab", None, p).unwrap();
        assert_eq!(sel.build().unwrap(), EntropySpec::z_ab(0.3, -0.2, 0.5).unwrap());

        let p = parse_params("k=0.3,alpha=0.5").unwrap();
        let sel = FamilySelection::new("zg", Some("kaniadakis"), p).unwrap();
        assert!(sel.build().is_ok());
    }

    #[test]
    fn rejects_bad_keys_and_values() {
        assert!(FamilySelection::new("renyi", None, parse_params("beta=2").unwrap()).is_err());
        assert!(FamilySelection::new("renyi", None, parse_params("").unwrap()).is_err());
        assert!(FamilySelection::new("nope", None, parse_params("").unwrap()).is_err());
        assert!(FamilySelection::new("zg", None, parse_params("alpha=0.5").unwrap()).is_err());
        assert!(parse_params("alpha").is_err());
        assert!(parse_params("alpha=x").is_err());
        assert!(parse_params("alpha=1,alpha=2").is_err());
        let sel = FamilySelection::new("zq", None, parse_params("q=0.5,alpha=1").unwrap()).unwrap();
        assert!(sel.build().is_err());
    }

    #[test]
    fn sweeps() {
        let (k, v) = parse_sweep("alpha=0.1:0.9:0.05").unwrap();
        assert_eq!(k, "alpha");
        assert_eq!(v.len(), 17);
        assert!((v[16] - 0.9).abs() < 1e-12);
        assert!(parse_sweep("alpha=0.9:0.1:0.1").is_err());
        assert!(parse_sweep("alpha=0.1:0.9").is_err());
    }
}
