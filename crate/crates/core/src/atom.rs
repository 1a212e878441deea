//! Atom interning and the namespace for atoms introduced by transformations.
//!
//! Every [`Program`](crate::Program) owns a [`SymbolTable`]. Tables are
//! append-only: a transformation clones the table of its input and only adds
//! new symbols, so an [`AtomId`] keeps its meaning across a program and every
//! program derived from it.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use thiserror::Error;

/// Prefixes that user atoms may not start with.
pub const RESERVED_PREFIXES: [&str; 5] = ["k_", "kp_", "kpn_", "not1_", "not2_"];

/// Dense handle of an interned atom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct AtomId(u32);

impl AtomId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Where an atom comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Origin {
    User,
    /// `not1_a`, standing for `¬a` under `K`.
    NotOnce(AtomId),
    /// `not2_a`, standing for `¬¬a` under `K`.
    NotTwice(AtomId),
    /// `k_a`, the objective proxy of `K a`.
    K(AtomId),
    /// `kp_a`: `K a` is a propagated consequence.
    Kp(AtomId),
    /// `kpn_a`: `K ¬a` is a propagated consequence.
    KpNotAtom(AtomId),
    /// `kpn_R<i>`: the body of rule `i` is false in every interpretation.
    /// The upper-case `R` keeps these apart from `kpn_` of a user atom such
    /// as `r3`, since user atoms start with a lower-case letter.
    KpNotRule(usize),
}

impl Origin {
    /// The atom this one was derived from, if any.
    pub fn base(self) -> Option<AtomId> {
        match self {
            Origin::NotOnce(a)
            | Origin::NotTwice(a)
            | Origin::K(a)
            | Origin::Kp(a)
            | Origin::KpNotAtom(a) => Some(a),
            Origin::User | Origin::KpNotRule(_) => None,
        }
    }

    fn prefix(self) -> &'static str {
        match self {
            Origin::User => "",
            Origin::NotOnce(_) => "not1_",
            Origin::NotTwice(_) => "not2_",
            Origin::K(_) => "k_",
            Origin::Kp(_) => "kp_",
            Origin::KpNotAtom(_) | Origin::KpNotRule(_) => "kpn_",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SymbolError {
    #[error("atom `{0}` uses a reserved prefix (k_, kp_, kpn_, not1_, not2_)")]
    ReservedPrefix(String),
    #[error("derived atom `{0}` collides with an existing atom of different origin")]
    Collision(String),
    #[error("unknown atom id {0}")]
    UnknownAtom(u32),
}

/// Returns true if `name` starts with one of [`RESERVED_PREFIXES`].
pub fn is_reserved(name: &str) -> bool {
    RESERVED_PREFIXES.iter().any(|p| name.starts_with(p))
}

/// Bijective map between atom names and [`AtomId`]s.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymbolTable {
    names: Vec<String>,
    origins: Vec<Origin>,
    index: BTreeMap<String, AtomId>,
}

impl SymbolTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Interns a user atom. Re-interning an existing user atom returns its id.
    pub fn user(&mut self, name: &str) -> Result<AtomId, SymbolError> {
        if is_reserved(name) {
            return Err(SymbolError::ReservedPrefix(name.to_string()));
        }
        match self.index.get(name) {
            Some(&id) if self.origins[id.index()] == Origin::User => Ok(id),
            Some(_) => Err(SymbolError::Collision(name.to_string())),
            None => Ok(self.push(name.to_string(), Origin::User)),
        }
    }

    /// Returns the deterministic derived atom for `origin`, creating it on
    /// first use.
    pub fn derived(&mut self, origin: Origin) -> Result<AtomId, SymbolError> {
        let name = match origin {
            Origin::User => return Err(SymbolError::Collision(String::new())),
            Origin::KpNotRule(i) => format!("kpn_R{i}"),
            _ => {
                let base = origin.base().expect("derived origin has a base");
                let base_name = self
                    .names
                    .get(base.index())
                    .ok_or(SymbolError::UnknownAtom(base.0))?;
                format!("{}{}", origin.prefix(), base_name)
            }
        };
        match self.index.get(&name) {
            Some(&id) if self.origins[id.index()] == origin => Ok(id),
            Some(_) => Err(SymbolError::Collision(name)),
            None => Ok(self.push(name, origin)),
        }
    }

    fn push(&mut self, name: String, origin: Origin) -> AtomId {
        let id = AtomId(u32::try_from(self.names.len()).expect("symbol table overflow"));
        self.index.insert(name.clone(), id);
        self.names.push(name);
        self.origins.push(origin);
        id
    }

    pub fn lookup(&self, name: &str) -> Option<AtomId> {
        self.index.get(name).copied()
    }

    /// Looks up a derived atom without creating it.
    pub fn lookup_derived(&self, origin: Origin) -> Option<AtomId> {
        let name = match origin {
            Origin::User => return None,
            Origin::KpNotRule(i) => format!("kpn_R{i}"),
            _ => format!("{}{}", origin.prefix(), self.names.get(origin.base()?.index())?),
        };
        self.lookup(&name).filter(|id| self.origins[id.index()] == origin)
    }

    /// # Panics
    ///
    /// Panics if `id` was not issued by this table or one it was cloned from.
    pub fn name(&self, id: AtomId) -> &str {
        &self.names[id.index()]
    }

    pub fn origin(&self, id: AtomId) -> Origin {
        self.origins[id.index()]
    }

    pub fn is_user(&self, id: AtomId) -> bool {
        self.origin(id) == Origin::User
    }

    /// Follows `origin` links down to the user atom an atom talks about.
    pub fn root(&self, mut id: AtomId) -> AtomId {
        while let Some(base) = self.origin(id).base() {
            id = base;
        }
        id
    }

    pub fn iter(&self) -> impl Iterator<Item = (AtomId, &str, Origin)> + '_ {
        self.names
            .iter()
            .zip(&self.origins)
            .enumerate()
            .map(|(i, (n, o))| (AtomId(i as u32), n.as_str(), *o))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derived_names() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let k = t.derived(Origin::K(a)).unwrap();
        assert_eq!(t.name(k), "k_a");
        for (origin, name) in [
            (Origin::NotOnce(a), "not1_a"),
            (Origin::NotTwice(a), "not2_a"),
            (Origin::Kp(a), "kp_a"),
            (Origin::KpNotAtom(a), "kpn_a"),
            (Origin::KpNotRule(3), "kpn_R3"),
        ] {
            let id = t.derived(origin).unwrap();
            assert_eq!(t.name(id), name);
        }
        // idempotent
        assert_eq!(t.derived(Origin::K(a)).unwrap(), k);
        assert_eq!(t.origin(k).base(), Some(a));
    }

    #[test]
    fn nested_derivations_keep_roots() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let n = t.derived(Origin::NotOnce(a)).unwrap();
        let kn = t.derived(Origin::K(n)).unwrap();
        assert_eq!(t.name(kn), "k_not1_a");
        assert_eq!(t.root(kn), a);
        assert_eq!(t.lookup_derived(Origin::K(n)), Some(kn));
        assert_eq!(t.lookup_derived(Origin::Kp(n)), None);
    }

    #[test]
    fn reserved_prefixes_are_rejected() {
        let mut t = SymbolTable::new();
        for name in ["k_x", "kp_x", "kpn_r1", "not1_a", "not2_b"] {
            assert_eq!(t.user(name), Err(SymbolError::ReservedPrefix(name.into())));
        }
        assert!(t.user("kx").is_ok());
        assert!(t.user("knot").is_ok());
    }

    #[test]
    fn rule_atoms_do_not_clash_with_atom_proxies() {
        let mut t = SymbolTable::new();
        let r3 = t.user("r3").unwrap();
        let atom_proxy = t.derived(Origin::KpNotAtom(r3)).unwrap();
        let rule_proxy = t.derived(Origin::KpNotRule(3)).unwrap();
        assert_ne!(atom_proxy, rule_proxy);
        assert_eq!(t.name(atom_proxy), "kpn_r3");
    }

    #[test]
    fn interning_is_bijective() {
        let mut t = SymbolTable::new();
        let a = t.user("a").unwrap();
        let b = t.user("b").unwrap();
        assert_ne!(a, b);
        assert_eq!(t.user("a").unwrap(), a);
        assert_eq!(t.lookup("b"), Some(b));
    }
}
