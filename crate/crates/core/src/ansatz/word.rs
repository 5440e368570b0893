//! Words in abstract generators and adjacent-pair rewriting.
//!
//! A word is a sequence of letters in a model alphabet (`E, D` for the
//! exclusion algebra, `G1, G2, G3` for the diffusion-dissipation algebra);
//! a linear combination carries exact coefficients from any coefficient
//! ring. The reduction system rewrites adjacent pairs until the normal form
//! (lexicographically ordered letters) is reached: every rule either
//! shortens the word or lowers its inversion count, so rewriting terminates
//! and normal forms are unique for the shipped systems (checked against
//! reduction-order independence in the tests).

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::AnsatzError;
use crate::exact::{FromRat, Rat, Ring};

pub type Letter = u8;

/// Letters of the exclusion algebra.
pub const LETTER_E: Letter = 0;
pub const LETTER_D: Letter = 1;

/// Letters of the diffusion-dissipation algebra.
pub const LETTER_G1: Letter = 0;
pub const LETTER_G2: Letter = 1;
pub const LETTER_G3: Letter = 2;

/// Which generator alphabet a word is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// `{E, D}`
    ED,
    /// `{G1, G2, G3}`
    G,
}

impl Alphabet {
    pub fn size(&self) -> usize {
        match self {
            Alphabet::ED => 2,
            Alphabet::G => 3,
        }
    }

    fn letter_name(&self, l: Letter) -> &'static str {
        match (self, l) {
            (Alphabet::ED, LETTER_E) => "E",
            (Alphabet::ED, LETTER_D) => "D",
            (Alphabet::G, LETTER_G1) => "G1",
            (Alphabet::G, LETTER_G2) => "G2",
            (Alphabet::G, LETTER_G3) => "G3",
            _ => "?",
        }
    }

    fn parse_letter(&self, name: &str) -> Option<Letter> {
        match (self, name.to_ascii_uppercase().as_str()) {
            (Alphabet::ED, "E") => Some(LETTER_E),
            (Alphabet::ED, "D") => Some(LETTER_D),
            (Alphabet::G, "G1") => Some(LETTER_G1),
            (Alphabet::G, "G2") => Some(LETTER_G2),
            (Alphabet::G, "G3") => Some(LETTER_G3),
            _ => None,
        }
    }
}

/// Parse a word like `"E D E D^2"` or `"G2^3 G1"`.
pub fn parse_word(input: &str, alphabet: Alphabet) -> Result<Vec<Letter>, AnsatzError> {
    let mut word = Vec::new();
    for token in input.split_whitespace() {
        let (name, power) = match token.split_once('^') {
            Some((n, p)) => {
                let power: usize = p
                    .parse()
                    .map_err(|_| AnsatzError::BadWord(input.to_string()))?;
                (n, power)
            }
            None => (token, 1),
        };
        let letter = alphabet.parse_letter(name).ok_or_else(|| {
            AnsatzError::WrongAlphabet {
                letter: name.to_string(),
                alphabet: match alphabet {
                    Alphabet::ED => "{E, D}",
                    Alphabet::G => "{G1, G2, G3}",
                },
            }
        })?;
        word.extend(std::iter::repeat(letter).take(power));
    }
    Ok(word)
}

/// Render a word with powers compressed, e.g. `E D^2 E`.
pub fn format_word(word: &[Letter], alphabet: Alphabet) -> String {
    if word.is_empty() {
        return "1".to_string();
    }
    let mut out = String::new();
    let mut i = 0;
    while i < word.len() {
        let mut j = i;
        while j < word.len() && word[j] == word[i] {
            j += 1;
        }
        if !out.is_empty() {
            out.push(' ');
        }
        let _ = write!(out, "{}", alphabet.letter_name(word[i]));
        if j - i > 1 {
            let _ = write!(out, "^{}", j - i);
        }
        i = j;
    }
    out
}

/// Formal linear combination of words with coefficients in `C`.
///
/// Like terms are merged and zero terms dropped, so derived equality is
/// equality of normal representations.
#[derive(Debug, Clone, PartialEq)]
pub struct LinComb<C> {
    terms: BTreeMap<Vec<Letter>, C>,
}

impl<C: Ring> LinComb<C> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    /// The empty word with unit coefficient.
    pub fn one() -> Self {
        LinComb::monomial(Vec::new(), C::one())
    }

    pub fn monomial(word: Vec<Letter>, coeff: C) -> Self {
        let mut lc = LinComb::zero();
        lc.add_term(word, coeff);
        lc
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<Letter>, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, word: Vec<Letter>, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, factor: &C) -> Self {
        let mut out = LinComb::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.clone() * factor.clone());
        }
        out
    }

    /// Algebra product: concatenation of words, product of coefficients.
    pub fn concat(&self, other: &Self) -> Self {
        let mut out = LinComb::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                let mut w = w1.clone();
                w.extend_from_slice(w2);
                out.add_term(w, c1.clone() * c2.clone());
            }
        }
        out
    }
}

/// Rewrite an adjacent pair into a linear combination of words.
#[derive(Debug, Clone, PartialEq)]
pub struct PairRule {
    pub lhs: (Letter, Letter),
    pub rhs: Vec<(Rat, Vec<Letter>)>,
}

/// Which reducible pair to rewrite first; used to check that normal forms
/// do not depend on the reduction order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// A set of adjacent-pair rules with a common alphabet.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionSystem {
    pub alphabet: Alphabet,
    pub rules: Vec<PairRule>,
}

impl ReductionSystem {
    /// The exclusion algebra: `D E -> D + E`.
    pub fn tasep() -> Self {
        ReductionSystem {
            alphabet: Alphabet::ED,
            rules: vec![PairRule {
                lhs: (LETTER_D, LETTER_E),
                rhs: vec![
                    (Rat::from_integer(1.into()), vec![LETTER_D]),
                    (Rat::from_integer(1.into()), vec![LETTER_E]),
                ],
            }],
        }
    }

    /// The diffusion-dissipation algebra at a concrete `phi`:
    /// `G2 G1 -> phi G1 G2`, `G3 G1 -> G1 G3`, `G3 G2 -> phi G2 G3`.
    pub fn dissep(phi: &Rat) -> Self {
        let one = Rat::from_integer(1.into());
        ReductionSystem {
            alphabet: Alphabet::G,
            rules: vec![
                PairRule {
                    lhs: (LETTER_G2, LETTER_G1),
                    rhs: vec![(phi.clone(), vec![LETTER_G1, LETTER_G2])],
                },
                PairRule {
                    lhs: (LETTER_G3, LETTER_G1),
                    rhs: vec![(one, vec![LETTER_G1, LETTER_G3])],
                },
                PairRule {
                    lhs: (LETTER_G3, LETTER_G2),
                    rhs: vec![(phi.clone(), vec![LETTER_G2, LETTER_G3])],
                },
            ],
        }
    }

    fn rule_for(&self, pair: (Letter, Letter)) -> Option<&PairRule> {
        self.rules.iter().find(|r| r.lhs == pair)
    }

    /// Reduce a linear combination to normal form.
    pub fn reduce<C: Ring + FromRat>(&self, lc: &LinComb<C>) -> LinComb<C> {
        self.reduce_with(lc, Strategy::Leftmost)
    }

    pub fn reduce_with<C: Ring + FromRat>(
        &self,
        lc: &LinComb<C>,
        strategy: Strategy,
    ) -> LinComb<C> {
        let mut out = LinComb::zero();
        let mut work: Vec<(Vec<Letter>, C)> = lc
            .terms()
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        while let Some((word, coeff)) = work.pop() {
            let hit = match strategy {
                Strategy::Leftmost => (0..word.len().saturating_sub(1))
                    .find(|&i| self.rule_for((word[i], word[i + 1])).is_some()),
                Strategy::Rightmost => (0..word.len().saturating_sub(1))
                    .rev()
                    .find(|&i| self.rule_for((word[i], word[i + 1])).is_some()),
            };
            match hit {
                None => out.add_term(word, coeff),
                Some(i) => {
                    let rule = self
                        .rule_for((word[i], word[i + 1]))
                        .expect("hit position has a rule");
                    for (rc, repl) in &rule.rhs {
                        let mut w = Vec::with_capacity(word.len() + repl.len());
                        w.extend_from_slice(&word[..i]);
                        w.extend_from_slice(repl);
                        w.extend_from_slice(&word[i + 2..]);
                        work.push((w, coeff.clone() * C::from_rat(rc)));
                    }
                }
            }
        }
        out
    }
}
