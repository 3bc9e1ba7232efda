//! Small-cancellation analysis of group presentations.
//!
//! Words over a free group are sequences of signed letters (`+g` for
//! generator `g`, `-g` for its inverse, 1-based).  A presentation is a
//! generator count plus cyclically reduced relators.  The symmetrized closure
//! of a presentation collects every cyclic rotation of every relator and of
//! every inverse, remembering where each copy came from; a *piece* is a word
//! that occurs as a common prefix of two distinct members of that closure.
//!
//! The metric condition `C'(1/6)` asks that every piece be strictly shorter
//! than a sixth of the relator it sits in.  For a random presentation the
//! [`incoherence_certificate`] chains the checks that together certify
//! incoherence of the presented group when there are more relators than
//! generators minus one: the presentation is then aspherical, its Euler
//! characteristic `1 - m + n` is positive, and a positive second L2-Betti
//! number rules coherence out.
//!
//! Sampling (`sampler`) and the Monte Carlo rate lab (`monte`) live in
//! submodules.

mod monte;
mod sampler;

pub use monte::{
    monte_carlo, trial_seed, wilson_interval, MonteCarloError, MonteCarloParams, RateRow,
    RateTable, WILSON_Z95,
};
pub use sampler::{sample_cyclically_reduced, CyclicWordSampler};

use crate::rational::{int, rat, Rational};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

/// Errors raised by word and presentation constructors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("letter 0 is not a generator or an inverse")]
    ZeroLetter,
    #[error("letter {letter} names generator {generator} but there are only {generators}")]
    GeneratorOutOfRange {
        letter: i64,
        generator: usize,
        generators: usize,
    },
    #[error("the empty word has no root")]
    EmptyWord,
    #[error("relator {index} is empty after reduction")]
    EmptyRelator { index: usize },
    #[error("relator {index} is not cyclically reduced")]
    NotCyclicallyReduced { index: usize },
    #[error("a presentation needs at least one generator")]
    NoGenerators,
    #[error("word '{text}' contains '{symbol}', which is not a letter")]
    BadSymbol { text: String, symbol: char },
}

/// A word in a free group: letters are nonzero integers, `-x` inverting `x`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<i32>,
}

impl Word {
    pub fn from_letters(letters: impl IntoIterator<Item = i32>) -> Result<Self, WordError> {
        let letters: Vec<i32> = letters.into_iter().collect();
        if letters.contains(&0) {
            return Err(WordError::ZeroLetter);
        }
        Ok(Word { letters })
    }

    /// Parses letters `a..z` as generators 1..26 and `A..Z` as their
    /// inverses.
    pub fn from_text(text: &str) -> Result<Self, WordError> {
        let mut letters = Vec::with_capacity(text.len());
        for symbol in text.chars() {
            let letter = match symbol {
                'a'..='z' => symbol as i32 - 'a' as i32 + 1,
                'A'..='Z' => -(symbol as i32 - 'A' as i32 + 1),
                _ => {
                    return Err(WordError::BadSymbol {
                        text: text.to_owned(),
                        symbol,
                    })
                }
            };
            letters.push(letter);
        }
        Ok(Word { letters })
    }

    pub fn empty() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The formal inverse: letters reversed and negated.
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&x| -x).collect(),
        }
    }

    /// The rotation starting at position `k`.
    pub fn rotated(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let k = k % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[k..]);
        letters.extend_from_slice(&self.letters[..k]);
        Word { letters }
    }

    /// No adjacent letter cancels its neighbor.
    pub fn is_reduced(&self) -> bool {
        self.letters.windows(2).all(|pair| pair[0] != -pair[1])
    }

    /// Reduced, and the last letter does not cancel the first.
    pub fn is_cyclically_reduced(&self) -> bool {
        self.is_reduced()
            && (self.letters.len() < 2 || self.letters[0] != -self.letters[self.letters.len() - 1])
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &letter in &self.letters {
            if stack.last() == Some(&-letter) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        Word { letters: stack }
    }

    /// Freely reduces, then trims cancelling first/last pairs.
    pub fn cyclic_reduce(&self) -> Word {
        let reduced = self.free_reduce();
        let mut letters = reduced.letters;
        let mut start = 0;
        let mut end = letters.len();
        while end - start >= 2 && letters[start] == -letters[end - 1] {
            start += 1;
            end -= 1;
        }
        letters.truncate(end);
        letters.drain(..start);
        Word { letters }
    }

    /// The largest exponent representation: `Some((u, k))` with `self = u^k`,
    /// `k >= 2`, when the word is a proper power.
    ///
    /// Found through the failure function of the letter sequence: the
    /// smallest period `p` divides the length exactly when the word is a
    /// power, and then the exponent `len / p` is maximal.
    pub fn proper_power_root(&self) -> Result<Option<(Word, u32)>, WordError> {
        let n = self.letters.len();
        if n == 0 {
            return Err(WordError::EmptyWord);
        }
        let mut border = vec![0usize; n];
        for i in 1..n {
            let mut b = border[i - 1];
            while b > 0 && self.letters[i] != self.letters[b] {
                b = border[b - 1];
            }
            if self.letters[i] == self.letters[b] {
                b += 1;
            }
            border[i] = b;
        }
        let period = n - border[n - 1];
        if period < n && n.is_multiple_of(period) {
            let root = Word {
                letters: self.letters[..period].to_vec(),
            };
            Ok(Some((root, (n / period) as u32)))
        } else {
            Ok(None)
        }
    }
}

impl fmt::Display for Word {
    /// Letters render as `a..z` / `A..Z`; generators beyond 26 as `<g3>` /
    /// `<G3>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "(empty)");
        }
        for &letter in &self.letters {
            let generator = letter.unsigned_abs();
            if generator <= 26 {
                let base = if letter > 0 { b'a' } else { b'A' };
                write!(f, "{}", (base + generator as u8 - 1) as char)?;
            } else if letter > 0 {
                write!(f, "<g{generator}>")?;
            } else {
                write!(f, "<G{generator}>")?;
            }
        }
        Ok(())
    }
}

/// A presentation: `generators` many generators and cyclically reduced,
/// nonempty relators (duplicates permitted; the certificate will reject
/// them).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: usize,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(generators: usize, relators: Vec<Word>) -> Result<Self, WordError> {
        if generators == 0 {
            return Err(WordError::NoGenerators);
        }
        for (index, relator) in relators.iter().enumerate() {
            if relator.is_empty() {
                return Err(WordError::EmptyRelator { index });
            }
            if !relator.is_cyclically_reduced() {
                return Err(WordError::NotCyclicallyReduced { index });
            }
            for &letter in relator.letters() {
                let generator = letter.unsigned_abs() as usize;
                if generator > generators {
                    return Err(WordError::GeneratorOutOfRange {
                        letter: i64::from(letter),
                        generator,
                        generators,
                    });
                }
            }
        }
        Ok(Presentation {
            generators,
            relators,
        })
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    /// `chi = 1 - generators + relators` of the presentation complex.
    pub fn euler_characteristic(&self) -> Rational {
        int(1) - int(self.generators as i64) + int(self.relators.len() as i64)
    }
}

/// Where one member of a symmetrized closure came from: rotation `rotation`
/// of relator `relator`, inverted first or not.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub relator: usize,
    pub rotation: usize,
    pub inverted: bool,
}

/// The symmetrized closure of a presentation: every rotation of every relator
/// and every rotation of every inverted relator, deduplicated as words but
/// with the full provenance multiset retained.
#[derive(Clone, Debug)]
pub struct SymmetrizedSet {
    /// Distinct words, sorted.
    elements: Vec<Word>,
    /// Provenance entries of each element, parallel to `elements`.
    provenance: Vec<Vec<Provenance>>,
}

impl SymmetrizedSet {
    pub fn elements(&self) -> &[Word] {
        &self.elements
    }

    pub fn provenance(&self, index: usize) -> &[Provenance] {
        &self.provenance[index]
    }

    /// Total number of (relator, rotation, inverted) instances, counting
    /// collisions with multiplicity: `2 * sum of relator lengths`.
    pub fn instance_count(&self) -> usize {
        self.provenance.iter().map(Vec::len).sum()
    }
}

/// Builds the symmetrized closure of `p`.
pub fn symmetrize(p: &Presentation) -> SymmetrizedSet {
    let mut index: BTreeMap<Word, Vec<Provenance>> = BTreeMap::new();
    for (relator_index, relator) in p.relators().iter().enumerate() {
        for (inverted, base) in [(false, relator.clone()), (true, relator.inverse())] {
            for rotation in 0..base.len() {
                index
                    .entry(base.rotated(rotation))
                    .or_default()
                    .push(Provenance {
                        relator: relator_index,
                        rotation,
                        inverted,
                    });
            }
        }
    }
    let mut elements = Vec::with_capacity(index.len());
    let mut provenance = Vec::with_capacity(index.len());
    for (word, sources) in index {
        elements.push(word);
        provenance.push(sources);
    }
    SymmetrizedSet {
        elements,
        provenance,
    }
}

/// Piece statistics of a single relator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelatorPieces {
    /// Length of the longest piece occurring in this relator; equals the
    /// relator length when two distinct closure instances coincide as words.
    pub max_piece_length: usize,
    /// `max_piece_length / relator length`, exact.
    pub ratio: Rational,
    /// Two distinct closure members realizing the maximum (equal words when a
    /// collision forced the maximum); `None` when the maximum is 0.
    pub witness: Option<(Word, Word)>,
}

/// Piece statistics for every relator, plus the `C'(1/6)` verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PieceReport {
    pub relators: Vec<RelatorPieces>,
    /// Every relator's ratio is strictly below 1/6.
    pub c_prime_sixth: bool,
}

fn common_prefix_length(a: &Word, b: &Word) -> usize {
    a.letters()
        .iter()
        .zip(b.letters())
        .take_while(|(x, y)| x == y)
        .count()
}

/// Computes the longest piece of every relator.
///
/// The longest common prefix of a word with any *other* closure element is
/// attained at one of its neighbors in sorted order, so one pass over the
/// sorted closure suffices.  Collisions in the closure multiset (two distinct
/// instances equal as words) force the affected relators' maximum to their
/// full length.
pub fn piece_report(p: &Presentation) -> PieceReport {
    let closure = symmetrize(p);
    let elements = closure.elements();

    let neighbor_lcp: Vec<usize> = (0..elements.len())
        .map(|i| {
            let mut best = 0;
            if i > 0 {
                best = best.max(common_prefix_length(&elements[i - 1], &elements[i]));
            }
            if i + 1 < elements.len() {
                best = best.max(common_prefix_length(&elements[i], &elements[i + 1]));
            }
            best
        })
        .collect();

    let mut relators = Vec::with_capacity(p.relators().len());
    for (relator_index, relator) in p.relators().iter().enumerate() {
        let mut max_piece = 0usize;
        let mut witness: Option<(Word, Word)> = None;
        for (element_index, element) in elements.iter().enumerate() {
            let sources = closure.provenance(element_index);
            if !sources.iter().any(|s| s.relator == relator_index) {
                continue;
            }
            // A collision pins the maximum to the full relator length; the
            // matching witness is the coinciding pair.
            if sources.len() >= 2 && relator.len() > max_piece {
                max_piece = relator.len();
                witness = Some((element.clone(), element.clone()));
                continue;
            }
            let lcp = neighbor_lcp[element_index].min(relator.len());
            if lcp > max_piece {
                max_piece = lcp;
                let neighbor = if element_index > 0
                    && common_prefix_length(&elements[element_index - 1], element) == lcp
                {
                    elements[element_index - 1].clone()
                } else {
                    elements[element_index + 1].clone()
                };
                witness = Some((element.clone(), neighbor));
            }
        }
        let ratio = rat(max_piece as i64, relator.len() as i64);
        relators.push(RelatorPieces {
            max_piece_length: max_piece,
            ratio,
            witness,
        });
    }
    let c_prime_sixth = relators.iter().all(|r| r.ratio < rat(1, 6));
    PieceReport {
        relators,
        c_prime_sixth,
    }
}

/// Tests the metric condition `C'(lambda)`: every piece of every relator is
/// strictly shorter than `lambda` times the relator length.
pub fn is_metric_small_cancellation(p: &Presentation, lambda: &Rational) -> bool {
    piece_report(p).relators.iter().all(|r| r.ratio < *lambda)
}

/// The facts an incoherence certificate rests on; all true by construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CertificateFacts {
    pub c_prime_sixth: bool,
    pub no_proper_powers: bool,
    pub n_exceeds_m_minus_1: bool,
}

/// Outcome of the incoherence check for a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// The group is incoherent; `chi = 1 - m + n > 0` is the Euler
    /// characteristic of the aspherical presentation complex.
    Certified {
        chi: Rational,
        facts: CertificateFacts,
    },
    /// Some requirement failed; `reason` names the first one that did.
    Inconclusive { reason: String },
}

/// Certifies incoherence of the group presented by `p`.
///
/// Requirements, checked in order: every relator cyclically reduced and
/// nonempty (guaranteed by [`Presentation`]); no relator a proper power;
/// `C'(1/6)` holds; no two relators share a symmetrized-closure element; and
/// `n > m - 1`.  A `C'(1/6)` presentation without proper powers is
/// aspherical, so its group has Euler characteristic `1 - m + n`; when that
/// is positive the second L2-Betti number is positive too, and the group
/// cannot be coherent.
pub fn incoherence_certificate(p: &Presentation) -> Certificate {
    for relator in p.relators() {
        if let Some((root, exponent)) = relator
            .proper_power_root()
            .expect("presentation relators are nonempty")
        {
            return Certificate::Inconclusive {
                reason: format!("proper power: ({root})^{exponent}"),
            };
        }
    }

    let report = piece_report(p);
    if !report.c_prime_sixth {
        let worst = report
            .relators
            .iter()
            .enumerate()
            .max_by(|(_, a), (_, b)| a.ratio.cmp(&b.ratio))
            .expect("presentations without relators are vacuously C'(1/6)");
        return Certificate::Inconclusive {
            reason: format!(
                "not C'(1/6): relator {} has piece ratio {}",
                worst.0, worst.1.ratio
            ),
        };
    }

    let closure = symmetrize(p);
    for index in 0..closure.elements().len() {
        let sources = closure.provenance(index);
        for pair in sources.windows(2) {
            if pair[0].relator != pair[1].relator {
                return Certificate::Inconclusive {
                    reason: format!(
                        "relators {} and {} share the symmetrized word {}",
                        pair[0].relator,
                        pair[1].relator,
                        closure.elements()[index]
                    ),
                };
            }
        }
    }

    let m = p.generators();
    let n = p.relators().len();
    if n < m {
        return Certificate::Inconclusive {
            reason: "n <= m - 1".to_owned(),
        };
    }

    Certificate::Certified {
        chi: p.euler_characteristic(),
        facts: CertificateFacts {
            c_prime_sixth: true,
            no_proper_powers: true,
            n_exceeds_m_minus_1: true,
        },
    }
}
