//! JSON job configurations: group specifications, ramification and
//! character data (RSC/ESC), Cartan input, and the knobs shared by the
//! command-line surface.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Character, Elem, Group};
use crate::quantum_group::{cartan_to_esc, FlData};
use crate::scalar::Scalar;
use crate::structure::{Esc, EscItem, Rsc, RscClass};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobConfig {
    /// What this configuration certifies, in mathematical terms.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub description: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scalar: Option<ScalarMode>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group: Option<GroupSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ramification: Option<Vec<RamificationEntry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rsc: Option<RscSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub esc: Option<EscSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cartan: Option<CartanSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cutoff: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ScalarMode {
    Rational,
    Cyclotomic { order: u64 },
    RationalFunction,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupSpec {
    Abelian { factors: Vec<u64> },
    Cayley { table: Vec<Vec<usize>> },
    FreeAbelian { rank: usize },
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RamificationEntry {
    /// A member of the conjugacy class, as an element literal.
    pub rep: String,
    pub r: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RscSpec {
    pub classes: Vec<RscClassSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RscClassSpec {
    pub rep: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    pub chars: Vec<CharacterSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EscSpec {
    pub items: Vec<EscItemSpec>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EscItemSpec {
    pub g: String,
    pub chi: CharacterSpec,
}

/// A character literal: an exponent vector against the invariant factors,
/// a list of scalar literals (values on free abelian generators), or an
/// explicit element → value table.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CharacterSpec {
    Exponents(Vec<u64>),
    Values(Vec<String>),
    Table(BTreeMap<String, String>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CartanSpec {
    #[serde(rename = "A")]
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    /// Scalar literal for the deformation parameter; defaults to the
    /// generic q = v².
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<String>,
}

impl JobConfig {
    pub fn from_json(text: &str) -> Result<JobConfig> {
        serde_json::from_str(text).map_err(|e| Error::Config(format!("bad configuration: {e}")))
    }

    pub fn build_group(&self) -> Result<Group> {
        let spec = self
            .group
            .as_ref()
            .ok_or_else(|| Error::Config("configuration needs a `group`".into()))?;
        match spec {
            GroupSpec::Abelian { factors } => Group::abelian(factors.clone()),
            GroupSpec::Cayley { table } => Group::cayley(table.clone()),
            GroupSpec::FreeAbelian { rank } => Group::free_abelian(*rank),
        }
    }

    pub fn build_ramification(&self, group: &Group) -> Result<Vec<(Elem, usize)>> {
        let entries = self
            .ramification
            .as_ref()
            .ok_or_else(|| Error::Config("configuration needs a `ramification`".into()))?;
        entries
            .iter()
            .map(|e| Ok((group.normalize(&Elem::parse(&e.rep)?), e.r)))
            .collect()
    }

    pub fn build_rsc(&self) -> Result<Rsc> {
        let group = self.build_group()?;
        let spec = self
            .rsc
            .as_ref()
            .ok_or_else(|| Error::Config("configuration needs an `rsc`".into()))?;
        let mut classes = Vec::new();
        let all_classes = if group.is_cayley() {
            Some(group.conjugacy_classes()?)
        } else {
            None
        };
        for class_spec in &spec.classes {
            let rep = group.normalize(&Elem::parse(&class_spec.rep)?);
            if let Some(r) = class_spec.r {
                if r != class_spec.chars.len() {
                    return Err(Error::Config(format!(
                        "class {}: r = {r} but {} characters given",
                        class_spec.rep,
                        class_spec.chars.len()
                    )));
                }
            }
            let class = match &all_classes {
                Some(cs) => cs
                    .iter()
                    .find(|c| c.members.contains(&rep))
                    .ok_or_else(|| {
                        Error::Config(format!("no conjugacy class contains {rep}"))
                    })?
                    .clone(),
                None => {
                    if !group.is_central(&rep) {
                        return Err(Error::Config(format!("{rep} is not central")));
                    }
                    crate::group::ConjClass::central(&group, rep)
                }
            };
            let characters: Result<Vec<Character>> = class_spec
                .chars
                .iter()
                .map(|c| build_character(&group, c))
                .collect();
            classes.push(RscClass {
                class,
                characters: characters?,
            });
        }
        Rsc::new(group, classes)
    }

    pub fn build_esc(&self) -> Result<Esc> {
        let group = self.build_group()?;
        let spec = self
            .esc
            .as_ref()
            .ok_or_else(|| Error::Config("configuration needs an `esc`".into()))?;
        let items: Result<Vec<EscItem>> = spec
            .items
            .iter()
            .map(|item| {
                Ok(EscItem {
                    g: group.normalize(&Elem::parse(&item.g)?),
                    chi: build_character(&group, &item.chi)?,
                })
            })
            .collect();
        Esc::new(group, items?)
    }

    pub fn build_fl(&self) -> Result<FlData> {
        let spec = self
            .cartan
            .as_ref()
            .ok_or_else(|| Error::Config("configuration needs a `cartan`".into()))?;
        let q = match &spec.q {
            Some(text) => text.parse::<Scalar>()?,
            None => Scalar::q(),
        };
        cartan_to_esc(&spec.a, &spec.d, &q)
    }
}

pub fn build_character(group: &Group, spec: &CharacterSpec) -> Result<Character> {
    match spec {
        CharacterSpec::Exponents(exps) => {
            let factors = group.abelian_factors().ok_or_else(|| {
                Error::Config("exponent characters need an abelian group".into())
            })?;
            if exps.len() != factors.len() {
                return Err(Error::Config(format!(
                    "character arity {} does not match the {} invariant factors",
                    exps.len(),
                    factors.len()
                )));
            }
            Ok(Character::exponents(factors.to_vec(), exps.clone()))
        }
        CharacterSpec::Values(values) => {
            let parsed: Result<Vec<Scalar>> = values.iter().map(|v| v.parse()).collect();
            let parsed = parsed?;
            if parsed.iter().any(Scalar::is_zero) {
                return Err(Error::Config("character values must be nonzero".into()));
            }
            Ok(Character::generator_values(parsed))
        }
        CharacterSpec::Table(table) => {
            let mut values = BTreeMap::new();
            for (k, v) in table {
                values.insert(Elem::parse(k)?, v.parse::<Scalar>()?);
            }
            Ok(Character::table(values))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_group_specs() {
        let cfg = JobConfig::from_json(r#"{"group": {"kind":"abelian","factors":[2,4]}}"#).unwrap();
        let g = cfg.build_group().unwrap();
        assert_eq!(g.order(), Some(8));
        let cfg = JobConfig::from_json(r#"{"group": {"kind":"free_abelian","rank":2}}"#).unwrap();
        assert!(cfg.build_group().unwrap().is_free_abelian());
    }

    #[test]
    fn parse_esc_spec() {
        let cfg = JobConfig::from_json(
            r#"{
                "group": {"kind":"abelian","factors":[4]},
                "esc": {"items": [{"g": "g^[1]", "chi": [1]}]}
            }"#,
        )
        .unwrap();
        let esc = cfg.build_esc().unwrap();
        assert_eq!(esc.len(), 1);
        assert_eq!(esc.q_i(0), Scalar::zeta(4));
    }

    #[test]
    fn parse_rsc_with_table_character() {
        let cfg = JobConfig::from_json(
            r#"{
                "group": {"kind":"abelian","factors":[2]},
                "rsc": {"classes": [{"rep": "g^[0]", "r": 2, "chars": [[0],[1]]}]}
            }"#,
        )
        .unwrap();
        let rsc = cfg.build_rsc().unwrap();
        assert_eq!(rsc.total_ramification(), 2);
    }

    #[test]
    fn parse_cartan() {
        let cfg = JobConfig::from_json(
            r#"{"cartan": {"A": [[2,-1],[-1,2]], "d": [1,1]}}"#,
        )
        .unwrap();
        let fl = cfg.build_fl().unwrap();
        assert_eq!(fl.n, 2);
        assert_eq!(fl.r[0][1], 2);
    }

    #[test]
    fn bad_config_is_rejected() {
        assert!(JobConfig::from_json(r#"{"grupo": 3}"#).is_err());
        let cfg = JobConfig::from_json(
            r#"{
                "group": {"kind":"abelian","factors":[2]},
                "rsc": {"classes": [{"rep": "g^[0]", "r": 1, "chars": [[0],[1]]}]}
            }"#,
        )
        .unwrap();
        assert!(cfg.build_rsc().is_err());
    }
}
