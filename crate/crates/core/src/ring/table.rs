//! Atom and bundle tables.
//!
//! An [`AtomTable`] names the generators a class may mention. Three kinds of
//! names are always present without being declared:
//!
//! - `PT`, the class of a point (the ring identity),
//! - `MU<n>` for every `n >= 1`, the class of `n` points permuted cyclically by
//!   `μ_n` (`MU1` is the point itself),
//! - `GM`, sugar for `L - 1`.
//!
//! Everything else comes from a JSON document of the form
//! `{"atoms":[{"name","euler","mu_order","poincare"?,"dim"?}], "bundles":[{"name","euler_sign"}]}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::RingError;

pub const POINT: &str = "PT";
pub const GM: &str = "GM";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub name: String,
    #[serde(default)]
    pub euler: Option<i64>,
    #[serde(default = "default_mu_order")]
    pub mu_order: u32,
    /// Laurent polynomial in `q`, exponent to coefficient.
    #[serde(default)]
    pub poincare: Option<BTreeMap<i64, i64>>,
    #[serde(default)]
    pub dim: Option<u32>,
}

fn default_mu_order() -> u32 {
    1
}

impl Atom {
    /// The class `[μ_n]` of `n` points with cyclic monodromy.
    pub fn mu(n: u32) -> Atom {
        Atom {
            name: format!("MU{n}"),
            euler: Some(i64::from(n)),
            mu_order: n,
            poincare: None,
            dim: Some(0),
        }
    }

    pub fn is_monodromic(&self) -> bool {
        self.mu_order > 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleGenerator {
    pub name: String,
    #[serde(default = "default_sign")]
    pub euler_sign: i8,
}

fn default_sign() -> i8 {
    1
}

/// What a name inside `[...]` stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AtomDef {
    Point,
    /// `L - 1`.
    Gm,
    Atom(Atom),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AtomTable {
    atoms: BTreeMap<String, Atom>,
    bundles: BTreeMap<String, BundleGenerator>,
}

#[derive(Deserialize)]
struct RawTable {
    #[serde(default)]
    atoms: Vec<RawAtom>,
    #[serde(default)]
    bundles: Vec<BundleGenerator>,
}

#[derive(Deserialize)]
struct RawAtom {
    name: String,
    #[serde(default)]
    euler: Option<i64>,
    #[serde(default = "default_mu_order")]
    mu_order: u32,
    #[serde(default)]
    poincare: Option<BTreeMap<String, i64>>,
    #[serde(default)]
    dim: Option<u32>,
}

/// Parses `MU<n>` into `n`.
fn builtin_mu(name: &str) -> Option<u32> {
    let digits = name.strip_prefix("MU")?;
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    digits.parse().ok()
}

pub(crate) fn is_valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl AtomTable {
    /// The table holding only the built-in names.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_json(text: &str) -> Result<Self, RingError> {
        let raw: RawTable = serde_json::from_str(text).map_err(|e| RingError::Table(e.to_string()))?;
        let mut table = AtomTable::new();
        for a in raw.atoms {
            let mut poincare = None;
            if let Some(p) = a.poincare {
                let mut poly = BTreeMap::new();
                for (exp, coeff) in p {
                    let e: i64 = exp.trim().parse().map_err(|_| {
                        RingError::Table(format!("atom {}: poincare exponent {exp:?} is not an integer", a.name))
                    })?;
                    if coeff != 0 {
                        *poly.entry(e).or_insert(0) += coeff;
                    }
                }
                poly.retain(|_, c| *c != 0);
                poincare = Some(poly);
            }
            table.insert_atom(Atom {
                name: a.name,
                euler: a.euler,
                mu_order: a.mu_order,
                poincare,
                dim: a.dim,
            })?;
        }
        for b in raw.bundles {
            table.insert_bundle(b)?;
        }
        Ok(table)
    }

    pub fn insert_atom(&mut self, atom: Atom) -> Result<(), RingError> {
        if !is_valid_name(&atom.name) {
            return Err(RingError::Table(format!("invalid atom name {:?}", atom.name)));
        }
        if atom.mu_order == 0 {
            return Err(RingError::Table(format!("atom {}: mu_order must be at least 1", atom.name)));
        }
        // Built-in names may be restated but not redefined.
        if atom.name == POINT || atom.name == GM {
            return Err(RingError::Table(format!("atom name {} is reserved", atom.name)));
        }
        if let Some(n) = builtin_mu(&atom.name) {
            if atom.mu_order != n || atom.euler.is_some_and(|e| e != i64::from(n)) {
                return Err(RingError::Table(format!(
                    "atom {} conflicts with the built-in class of {n} points with μ_{n}-monodromy",
                    atom.name
                )));
            }
            return Ok(());
        }
        if self.atoms.contains_key(&atom.name) {
            return Err(RingError::Table(format!("duplicate atom name {}", atom.name)));
        }
        self.atoms.insert(atom.name.clone(), atom);
        Ok(())
    }

    pub fn insert_bundle(&mut self, bundle: BundleGenerator) -> Result<(), RingError> {
        if !is_valid_name(&bundle.name) {
            return Err(RingError::Table(format!("invalid bundle name {:?}", bundle.name)));
        }
        if bundle.euler_sign != 1 && bundle.euler_sign != -1 {
            return Err(RingError::Table(format!("bundle {}: euler_sign must be +1 or -1", bundle.name)));
        }
        if self.bundles.contains_key(&bundle.name) {
            return Err(RingError::Table(format!("duplicate bundle name {}", bundle.name)));
        }
        self.bundles.insert(bundle.name.clone(), bundle);
        Ok(())
    }

    pub fn with_bundle(mut self, name: &str, euler_sign: i8) -> Self {
        self.insert_bundle(BundleGenerator { name: name.to_string(), euler_sign })
            .expect("valid bundle");
        self
    }

    pub fn lookup(&self, name: &str) -> Option<AtomDef> {
        if name == POINT {
            return Some(AtomDef::Point);
        }
        if name == GM {
            return Some(AtomDef::Gm);
        }
        if let Some(n) = builtin_mu(name) {
            return Some(if n == 1 { AtomDef::Point } else { AtomDef::Atom(Atom::mu(n)) });
        }
        self.atoms.get(name).cloned().map(AtomDef::Atom)
    }

    pub fn atom(&self, name: &str) -> Option<Atom> {
        match self.lookup(name)? {
            AtomDef::Atom(a) => Some(a),
            _ => None,
        }
    }

    pub fn bundle(&self, name: &str) -> Option<&BundleGenerator> {
        self.bundles.get(name)
    }

    pub fn atoms(&self) -> impl Iterator<Item = &Atom> {
        self.atoms.values()
    }

    pub fn bundles(&self) -> impl Iterator<Item = &BundleGenerator> {
        self.bundles.values()
    }
}
