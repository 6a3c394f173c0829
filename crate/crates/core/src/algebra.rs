//! Quantifier symbols, the two implication chains, and the operators of the
//! extended square of opposition.
//!
//! A [`QuantitySystem`] fixes which quantifiers exist and in what order. The
//! 5-quantity system orders the affirmatives `A P T K I` and the negatives
//! `E B D G O`; the 2-quantity system keeps only `A I` and `E O`. Ranks are
//! always relative to the system, so the mirror of `A` is `I` in both.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("unknown quantifier `{0}`")]
    UnknownQuantifier(String),
    #[error("quantifier `{name}` is not part of the {system}-quantity system")]
    NotInSystem { name: &'static str, system: usize },
    #[error("unsupported quantity system size {0} (expected 2 or 5)")]
    UnsupportedSize(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Polarity {
    Affirmative,
    Negative,
}

impl Polarity {
    pub fn flip(self) -> Polarity {
        match self {
            Polarity::Affirmative => Polarity::Negative,
            Polarity::Negative => Polarity::Affirmative,
        }
    }
}

impl fmt::Display for Polarity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Polarity::Affirmative => f.write_str("affirmative"),
            Polarity::Negative => f.write_str("negative"),
        }
    }
}

/// One of the ten quantifier letters.
///
/// Declaration order is the affirmative chain followed by the negative chain,
/// which is also the order used when tables are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Quantifier {
    A,
    P,
    T,
    K,
    I,
    E,
    B,
    D,
    G,
    O,
}

impl Quantifier {
    pub const ALL: [Quantifier; 10] = [
        Quantifier::A,
        Quantifier::P,
        Quantifier::T,
        Quantifier::K,
        Quantifier::I,
        Quantifier::E,
        Quantifier::B,
        Quantifier::D,
        Quantifier::G,
        Quantifier::O,
    ];

    /// The concrete-syntax token for this quantifier.
    pub fn surface_name(self) -> &'static str {
        match self {
            Quantifier::A => "all",
            Quantifier::P => "almost_all",
            Quantifier::T => "most",
            Quantifier::K => "many",
            Quantifier::I => "some",
            Quantifier::E => "no",
            Quantifier::B => "few",
            Quantifier::D => "most_not",
            Quantifier::G => "many_not",
            Quantifier::O => "some_not",
        }
    }

    pub fn letter(self) -> char {
        match self {
            Quantifier::A => 'A',
            Quantifier::P => 'P',
            Quantifier::T => 'T',
            Quantifier::K => 'K',
            Quantifier::I => 'I',
            Quantifier::E => 'E',
            Quantifier::B => 'B',
            Quantifier::D => 'D',
            Quantifier::G => 'G',
            Quantifier::O => 'O',
        }
    }

    pub fn polarity(self) -> Polarity {
        match self {
            Quantifier::A | Quantifier::P | Quantifier::T | Quantifier::K | Quantifier::I => Polarity::Affirmative,
            _ => Polarity::Negative,
        }
    }

    pub fn is_affirmative(self) -> bool {
        self.polarity() == Polarity::Affirmative
    }

    pub fn is_negative(self) -> bool {
        self.polarity() == Polarity::Negative
    }

    /// Resolves a surface name (`"almost_all"`) or a single letter (`"P"`).
    pub fn from_token(token: &str) -> Option<Quantifier> {
        Quantifier::ALL
            .into_iter()
            .find(|q| q.surface_name() == token || (token.len() == 1 && token.starts_with(q.letter())))
    }
}

impl fmt::Display for Quantifier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.surface_name())
    }
}

const FIVE_AFFIRMATIVE: [Quantifier; 5] = [Quantifier::A, Quantifier::P, Quantifier::T, Quantifier::K, Quantifier::I];
const FIVE_NEGATIVE: [Quantifier; 5] = [Quantifier::E, Quantifier::B, Quantifier::D, Quantifier::G, Quantifier::O];
const TWO_AFFIRMATIVE: [Quantifier; 2] = [Quantifier::A, Quantifier::I];
const TWO_NEGATIVE: [Quantifier; 2] = [Quantifier::E, Quantifier::O];

/// The pair of ordered chains that fixes which quantifiers are available.
///
/// Index 0 of each chain is the logically strongest quantifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantitySystem {
    affirmative: &'static [Quantifier],
    negative: &'static [Quantifier],
}

impl Default for QuantitySystem {
    fn default() -> Self {
        QuantitySystem::five()
    }
}

impl QuantitySystem {
    pub const fn five() -> QuantitySystem {
        QuantitySystem { affirmative: &FIVE_AFFIRMATIVE, negative: &FIVE_NEGATIVE }
    }

    pub const fn two() -> QuantitySystem {
        QuantitySystem { affirmative: &TWO_AFFIRMATIVE, negative: &TWO_NEGATIVE }
    }

    pub fn with_size(n: usize) -> Result<QuantitySystem, AlgebraError> {
        match n {
            2 => Ok(QuantitySystem::two()),
            5 => Ok(QuantitySystem::five()),
            other => Err(AlgebraError::UnsupportedSize(other)),
        }
    }

    /// Length of each chain.
    pub fn size(&self) -> usize {
        self.affirmative.len()
    }

    pub fn chain(&self, polarity: Polarity) -> &'static [Quantifier] {
        match polarity {
            Polarity::Affirmative => self.affirmative,
            Polarity::Negative => self.negative,
        }
    }

    pub fn affirmative(&self) -> &'static [Quantifier] {
        self.affirmative
    }

    pub fn negative(&self) -> &'static [Quantifier] {
        self.negative
    }

    /// All quantifiers of the system, affirmatives first.
    pub fn quantifiers(&self) -> impl Iterator<Item = Quantifier> + '_ {
        self.affirmative.iter().chain(self.negative.iter()).copied()
    }

    pub fn contains(&self, q: Quantifier) -> bool {
        self.chain(q.polarity()).contains(&q)
    }

    /// Rank of `q` within its polarity chain.
    pub fn index_of(&self, q: Quantifier) -> Result<usize, AlgebraError> {
        self.chain(q.polarity())
            .iter()
            .position(|&c| c == q)
            .ok_or(AlgebraError::NotInSystem { name: q.surface_name(), system: self.size() })
    }

    pub fn at(&self, polarity: Polarity, index: usize) -> Option<Quantifier> {
        self.chain(polarity).get(index).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<Quantifier, AlgebraError> {
        let q = Quantifier::from_token(name).ok_or_else(|| AlgebraError::UnknownQuantifier(name.to_string()))?;
        self.index_of(q)?;
        Ok(q)
    }

    /// Same rank, opposite polarity.
    pub fn contrary(&self, q: Quantifier) -> Result<Quantifier, AlgebraError> {
        let index = self.index_of(q)?;
        Ok(self.chain(q.polarity().flip())[index])
    }

    /// Same polarity, rank reflected about the centre of the chain.
    pub fn mirror(&self, q: Quantifier) -> Result<Quantifier, AlgebraError> {
        let index = self.index_of(q)?;
        Ok(self.chain(q.polarity())[self.size() - 1 - index])
    }

    pub fn contradictory(&self, q: Quantifier) -> Result<Quantifier, AlgebraError> {
        self.mirror(self.contrary(q)?)
    }

    /// Chain order: `q1` implies `q2` iff both share a polarity and `q1` is
    /// at least as strong. Cross-polarity pairs are unrelated.
    pub fn implies(&self, q1: Quantifier, q2: Quantifier) -> Result<bool, AlgebraError> {
        let i1 = self.index_of(q1)?;
        let i2 = self.index_of(q2)?;
        Ok(q1.polarity() == q2.polarity() && i1 <= i2)
    }

    /// Every quantifier of the system implied by `q`, including `q` itself,
    /// strongest first.
    pub fn weakenings(&self, q: Quantifier) -> Result<&'static [Quantifier], AlgebraError> {
        let index = self.index_of(q)?;
        Ok(&self.chain(q.polarity())[index..])
    }

    /// Every quantifier of the system that implies `q`, including `q` itself.
    pub fn strengthenings(&self, q: Quantifier) -> Result<&'static [Quantifier], AlgebraError> {
        let index = self.index_of(q)?;
        Ok(&self.chain(q.polarity())[..=index])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Quantifier::*;

    #[test]
    fn lookup_by_name_and_letter() {
        let five = QuantitySystem::five();
        assert_eq!(five.lookup("all"), Ok(A));
        assert_eq!(five.lookup("few"), Ok(B));
        assert_eq!(five.lookup("T"), Ok(T));
        assert_eq!(QuantitySystem::two().lookup("most"), Err(AlgebraError::NotInSystem { name: "most", system: 2 }));
        assert_eq!(five.lookup("every"), Err(AlgebraError::UnknownQuantifier("every".into())));
        assert!(five.lookup("").is_err());
    }

    #[test]
    fn chains_have_expected_order() {
        let five = QuantitySystem::five();
        assert_eq!(five.affirmative(), &[A, P, T, K, I]);
        assert_eq!(five.negative(), &[E, B, D, G, O]);
        let two = QuantitySystem::two();
        assert_eq!(two.affirmative(), &[A, I]);
        assert_eq!(two.negative(), &[E, O]);
        assert_eq!(QuantitySystem::with_size(3), Err(AlgebraError::UnsupportedSize(3)));
    }

    #[test]
    fn operator_examples() {
        let five = QuantitySystem::five();
        let two = QuantitySystem::two();
        assert_eq!(five.contrary(A), Ok(E));
        assert_eq!(five.contrary(T), Ok(D));
        assert_eq!(five.contrary(five.contrary(P).unwrap()), Ok(P));
        assert_eq!(five.mirror(A), Ok(I));
        assert_eq!(five.mirror(T), Ok(T));
        assert_eq!(five.mirror(P), Ok(K));
        assert_eq!(two.mirror(E), Ok(O));
        assert_eq!(two.mirror(A), Ok(I));
        assert_eq!(five.contradictory(I), Ok(E));
        assert_eq!(five.contradictory(A), Ok(O));
        assert_eq!(five.contradictory(five.contradictory(T).unwrap()), Ok(T));
        assert!(two.contrary(P).is_err());
        assert!(two.mirror(B).is_err());
    }

    #[test]
    fn implication_examples() {
        let five = QuantitySystem::five();
        assert_eq!(five.implies(A, T), Ok(true));
        assert_eq!(five.implies(T, A), Ok(false));
        assert_eq!(five.implies(A, O), Ok(false));
        assert_eq!(five.implies(K, K), Ok(true));
        assert!(QuantitySystem::two().implies(A, T).is_err());
    }

    #[test]
    fn contradictory_tables() {
        let five = QuantitySystem::five();
        let table: Vec<_> = five.quantifiers().map(|q| (q, five.contradictory(q).unwrap())).collect();
        assert_eq!(table, vec![(A, O), (P, G), (T, D), (K, B), (I, E), (E, I), (B, K), (D, T), (G, P), (O, A)]);
        let two = QuantitySystem::two();
        let table: Vec<_> = two.quantifiers().map(|q| (q, two.contradictory(q).unwrap())).collect();
        assert_eq!(table, vec![(A, O), (I, E), (E, I), (O, A)]);
    }

    #[test]
    fn operator_laws_hold_in_both_systems() {
        for sys in [QuantitySystem::two(), QuantitySystem::five()] {
            for q in sys.quantifiers() {
                let i = sys.index_of(q).unwrap();
                let c = sys.contrary(q).unwrap();
                let m = sys.mirror(q).unwrap();
                assert_eq!(sys.contrary(c).unwrap(), q);
                assert_eq!(sys.mirror(m).unwrap(), q);
                assert_eq!(sys.mirror(c).unwrap(), sys.contrary(m).unwrap());
                assert_ne!(c.polarity(), q.polarity());
                assert_eq!(sys.index_of(c).unwrap(), i);
                assert_eq!(m.polarity(), q.polarity());
                assert_eq!(sys.index_of(m).unwrap(), sys.size() - 1 - i);
                let d = sys.contradictory(q).unwrap();
                assert_ne!(d.polarity(), q.polarity());
                assert_eq!(sys.index_of(d).unwrap(), sys.size() - 1 - i);
            }
        }
    }

    #[test]
    fn implication_is_a_total_order_per_chain() {
        let sys = QuantitySystem::five();
        for pol in [Polarity::Affirmative, Polarity::Negative] {
            let chain = sys.chain(pol);
            for &a in chain {
                assert!(sys.implies(a, a).unwrap());
                for &b in chain {
                    let ab = sys.implies(a, b).unwrap();
                    let ba = sys.implies(b, a).unwrap();
                    assert!(ab || ba);
                    if ab && ba {
                        assert_eq!(a, b);
                    }
                    for &c in chain {
                        if ab && sys.implies(b, c).unwrap() {
                            assert!(sys.implies(a, c).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn weakenings_and_strengthenings() {
        let sys = QuantitySystem::five();
        assert_eq!(sys.weakenings(T).unwrap(), &[T, K, I]);
        assert_eq!(sys.strengthenings(D).unwrap(), &[E, B, D]);
    }
}
