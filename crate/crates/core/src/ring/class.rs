use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::table::{Atom, AtomTable};
use super::{HalfInt, RingError};

/// An atom as it appears inside a term: its name plus the order of its
/// monodromy, so that ⊙ can check its precondition without a table.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomKey {
    pub name: String,
    pub mu_order: u32,
}

impl AtomKey {
    pub fn is_monodromic(&self) -> bool {
        self.mu_order > 1
    }
}

impl From<&Atom> for AtomKey {
    fn from(a: &Atom) -> Self {
        AtomKey { name: a.name.clone(), mu_order: a.mu_order }
    }
}

/// A monomial `L^{p/2} ⊙ [A_1]^{e_1} ⊙ ... ⊙ u_{g_1} ⊙ ...`.
///
/// Ordering is lexicographic on atoms, then the Lefschetz exponent, then units.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Term {
    atoms: BTreeMap<AtomKey, u32>,
    lpow: HalfInt,
    units: BTreeSet<String>,
}

impl Term {
    pub fn one() -> Self {
        Term::default()
    }

    pub fn lefschetz(lpow: HalfInt) -> Self {
        Term { lpow, ..Term::default() }
    }

    pub fn atom(key: AtomKey) -> Self {
        Term { atoms: BTreeMap::from([(key, 1)]), ..Term::default() }
    }

    pub fn unit(name: &str) -> Self {
        Term { units: BTreeSet::from([name.to_string()]), ..Term::default() }
    }

    pub fn atoms(&self) -> &BTreeMap<AtomKey, u32> {
        &self.atoms
    }

    pub fn lpow(&self) -> HalfInt {
        self.lpow
    }

    pub fn units(&self) -> &BTreeSet<String> {
        &self.units
    }

    /// The unique atom with nontrivial monodromy, if any.
    pub fn monodromic_atom(&self) -> Option<&AtomKey> {
        self.atoms.keys().find(|k| k.is_monodromic())
    }

    pub fn is_pure_lefschetz(&self) -> bool {
        self.atoms.is_empty() && self.units.is_empty()
    }

    pub fn with_lpow(&self, lpow: HalfInt) -> Term {
        Term { lpow, ..self.clone() }
    }

    /// `self ⊙ other`. Fails when both sides carry a monodromic atom.
    pub fn smash(&self, other: &Term) -> Result<Term, RingError> {
        if let (Some(a), Some(b)) = (self.monodromic_atom(), other.monodromic_atom()) {
            return Err(RingError::UnsupportedSmash { left: a.name.clone(), right: b.name.clone() });
        }
        let mut atoms = self.atoms.clone();
        for (k, e) in &other.atoms {
            *atoms.entry(k.clone()).or_insert(0) += e;
        }
        let units = self.units.symmetric_difference(&other.units).cloned().collect();
        Ok(Term { atoms, lpow: self.lpow + other.lpow, units })
    }
}

/// An element of the localized equivariant Grothendieck ring, modulo the
/// relations making Υ multiplicative.
///
/// Stored as a map from [`Term`] to nonzero integer coefficient; zero
/// coefficients are never stored, so structural equality is ring equality
/// on normal forms.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MotivicClass {
    terms: BTreeMap<Term, BigInt>,
}

impl MotivicClass {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_term(Term::one(), BigInt::one())
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Self::from_term(Term::one(), n.into())
    }

    /// `L^{p}` for a half-integer `p`.
    pub fn lefschetz(lpow: HalfInt) -> Self {
        Self::from_term(Term::lefschetz(lpow), BigInt::one())
    }

    /// `L^{twice/2}`.
    pub fn lefschetz_half(twice: i64) -> Self {
        Self::lefschetz(HalfInt::from_twice(twice))
    }

    /// `L - 1`, the class of the multiplicative group.
    pub fn gm() -> Self {
        Self::lefschetz(HalfInt::from_int(1)) - Self::one()
    }

    /// `1 - L`.
    pub fn one_minus_l() -> Self {
        -Self::gm()
    }

    /// The class of an atom. `MU1` and other names for the point are not
    /// atoms; resolve them through [`AtomTable::lookup`] first.
    pub fn atom(atom: &Atom) -> Self {
        Self::from_term(Term::atom(atom.into()), BigInt::one())
    }

    /// The built-in class `[μ_n]`; `mu(1)` is the point.
    pub fn mu(n: u32) -> Self {
        assert!(n >= 1, "μ_0 is not a group");
        if n == 1 {
            Self::one()
        } else {
            Self::atom(&Atom::mu(n))
        }
    }

    /// The bare unit symbol `u_g`.
    pub fn unit(name: &str) -> Self {
        Self::from_term(Term::unit(name), BigInt::one())
    }

    pub fn from_term(term: Term, coeff: BigInt) -> Self {
        let mut c = Self::zero();
        c.add_term(term, coeff);
        c
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Term, BigInt)>) -> Self {
        let mut c = Self::zero();
        for (t, k) in terms {
            c.add_term(t, k);
        }
        c
    }

    pub fn add_term(&mut self, term: Term, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(term) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Term, &BigInt)> {
        self.terms.iter()
    }

    pub fn has_units(&self) -> bool {
        self.terms.keys().any(|t| !t.units.is_empty())
    }

    pub fn has_monodromy(&self) -> bool {
        self.terms.keys().any(|t| t.monodromic_atom().is_some())
    }

    /// True when every term is a bare Lefschetz power.
    pub fn is_lefschetz_polynomial(&self) -> bool {
        self.terms.keys().all(Term::is_pure_lefschetz)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        MotivicClass { terms: self.terms.iter().map(|(t, c)| (t.clone(), c * k)).collect() }
    }

    /// `L^{p} ⊙ self`. Lefschetz powers are central, so this never fails.
    pub fn twist(&self, lpow: HalfInt) -> Self {
        MotivicClass {
            terms: self.terms.iter().map(|(t, c)| (t.with_lpow(t.lpow + lpow), c.clone())).collect(),
        }
    }

    /// The ⊙ product.
    pub fn smash(&self, other: &MotivicClass) -> Result<MotivicClass, RingError> {
        let mut out = MotivicClass::zero();
        for (ta, ca) in &self.terms {
            for (tb, cb) in &other.terms {
                out.add_term(ta.smash(tb)?, ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^{⊙k}`, with `x^0 = 1`.
    pub fn smash_pow(&self, k: u32) -> Result<MotivicClass, RingError> {
        let mut acc = MotivicClass::one();
        for _ in 0..k {
            acc = acc.smash(self)?;
        }
        Ok(acc)
    }

    /// Applies `[μ_2] = 1 - L^{1/2}` to every occurrence of the built-in
    /// two-point cover.
    pub fn rewrite_mu2(&self) -> MotivicClass {
        let mu2 = AtomKey::from(&Atom::mu(2));
        let mut out = MotivicClass::zero();
        for (t, c) in &self.terms {
            let Some(&e) = t.atoms.get(&mu2) else {
                out.add_term(t.clone(), c.clone());
                continue;
            };
            // e > 1 cannot arise: [μ_2] ⊙ [μ_2] is never formed.
            let mut rest = t.clone();
            rest.atoms.remove(&mu2);
            let mut expanded = MotivicClass::from_term(rest, c.clone());
            let factor = MotivicClass::one() - MotivicClass::lefschetz_half(1);
            for _ in 0..e {
                expanded = expanded.smash(&factor).expect("Lefschetz factor is never monodromic");
            }
            out = out + expanded;
        }
        out
    }
}

impl Add for MotivicClass {
    type Output = MotivicClass;
    fn add(mut self, rhs: MotivicClass) -> MotivicClass {
        for (t, c) in rhs.terms {
            self.add_term(t, c);
        }
        self
    }
}

impl Add for &MotivicClass {
    type Output = MotivicClass;
    fn add(self, rhs: &MotivicClass) -> MotivicClass {
        self.clone() + rhs.clone()
    }
}

impl Neg for MotivicClass {
    type Output = MotivicClass;
    fn neg(self) -> MotivicClass {
        MotivicClass { terms: self.terms.into_iter().map(|(t, c)| (t, -c)).collect() }
    }
}

impl Neg for &MotivicClass {
    type Output = MotivicClass;
    fn neg(self) -> MotivicClass {
        -self.clone()
    }
}

impl Sub for MotivicClass {
    type Output = MotivicClass;
    fn sub(self, rhs: MotivicClass) -> MotivicClass {
        self + (-rhs)
    }
}

impl Sub for &MotivicClass {
    type Output = MotivicClass;
    fn sub(self, rhs: &MotivicClass) -> MotivicClass {
        self.clone() - rhs.clone()
    }
}

impl std::iter::Sum for MotivicClass {
    fn sum<I: Iterator<Item = MotivicClass>>(iter: I) -> MotivicClass {
        iter.fold(MotivicClass::zero(), |a, b| a + b)
    }
}

/// `Υ(P)` for the bundle generator `g` over `base`: `base ⊙ u_g`.
///
/// Since unit symbols combine by symmetric difference, `u_g ⊙ u_g = 1`.
pub fn upsilon(table: &AtomTable, generator: &str, base: &MotivicClass) -> Result<MotivicClass, RingError> {
    if table.bundle(generator).is_none() {
        return Err(RingError::UnknownUnit(generator.to_string()));
    }
    if base.has_units() {
        return Err(RingError::BaseHasUnits);
    }
    base.smash(&MotivicClass::unit(generator))
}

/// `L^{-1/2} ⊙ ([X] - [P])` for an explicit base class `[X]` and total space
/// class `[P]` with its `μ_2`-action.
pub fn upsilon_from_cover(base: &MotivicClass, cover: &MotivicClass) -> MotivicClass {
    (base - cover).twist(HalfInt::from_twice(-1))
}
