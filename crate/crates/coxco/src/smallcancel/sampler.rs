//! Exactly uniform sampling of cyclically reduced words.
//!
//! The sampler draws uniformly from the set of cyclically reduced words of
//! length between 1 and `max_len` over `m >= 2` generators.  Counting is done
//! with big integers, so the distribution is exactly uniform for any length:
//! a length is chosen with probability proportional to how many words it
//! holds, then letters are filled in one at a time with exact conditional
//! weights.
//!
//! The count table classifies a partial word only by how its last letter `u`
//! relates to its first letter `f` (equal, inverse, or neither); the number
//! of valid completions depends on nothing else.  With `completions[k][c]`
//! the number of ways to append `k` more letters from class `c` and end on a
//! letter other than `f` inverse:
//!
//! ```text
//! completions[0] = [1, 0, 1]
//! completions[k][Equal]   = completions[k-1][Equal]   + (2m - 2) completions[k-1][Other]
//! completions[k][Inverse] = completions[k-1][Inverse] + (2m - 2) completions[k-1][Other]
//! completions[k][Other]   = completions[k-1][Equal] + completions[k-1][Inverse]
//!                           + (2m - 3) completions[k-1][Other]
//! ```
//!
//! A cyclically reduced word of length `L` is a first letter (2m choices)
//! followed by a completion of length `L - 1` from class `Equal`, so the
//! count of words of length `L` is `2m * completions[L-1][Equal]`; length 1
//! works out through `completions[0][Equal] = 1`.

use super::Word;
use num_bigint::{BigUint, RandBigInt};
use num_traits::Zero;
use rand::Rng;

const EQUAL: usize = 0;
const INVERSE: usize = 1;
const OTHER: usize = 2;

/// Precomputed count tables for one `(generators, max_len)` pair, reusable
/// across draws.
#[derive(Clone, Debug)]
pub struct CyclicWordSampler {
    generators: usize,
    max_len: usize,
    completions: Vec<[BigUint; 3]>,
    /// `length_counts[i]` counts cyclically reduced words of length `i + 1`.
    length_counts: Vec<BigUint>,
    total: BigUint,
}

impl CyclicWordSampler {
    /// Builds the tables.  Panics unless `generators >= 2` and `max_len >= 1`.
    pub fn new(generators: usize, max_len: usize) -> Self {
        assert!(generators >= 2, "sampler needs at least 2 generators");
        assert!(max_len >= 1, "sampler needs max_len >= 1");
        let m = generators;
        let mut completions: Vec<[BigUint; 3]> = Vec::with_capacity(max_len);
        completions.push([BigUint::from(1u32), BigUint::zero(), BigUint::from(1u32)]);
        for k in 1..max_len {
            let previous = &completions[k - 1];
            let other_fanout = BigUint::from(2 * m as u32 - 2);
            let equal = &previous[EQUAL] + &other_fanout * &previous[OTHER];
            let inverse = &previous[INVERSE] + &other_fanout * &previous[OTHER];
            let other = &previous[EQUAL]
                + &previous[INVERSE]
                + BigUint::from(2 * m as u32 - 3) * &previous[OTHER];
            completions.push([equal, inverse, other]);
        }
        let letter_count = BigUint::from(2 * m as u32);
        let length_counts: Vec<BigUint> = (1..=max_len)
            .map(|length| &letter_count * &completions[length - 1][EQUAL])
            .collect();
        let total = length_counts.iter().sum();
        CyclicWordSampler {
            generators,
            max_len,
            completions,
            length_counts,
            total,
        }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// Exact number of cyclically reduced words of the given length.
    pub fn count_of_length(&self, length: usize) -> &BigUint {
        &self.length_counts[length - 1]
    }

    /// Exact number of cyclically reduced words of length 1 to `max_len`.
    pub fn total_count(&self) -> &BigUint {
        &self.total
    }

    /// Draws one word, exactly uniform over all cyclically reduced words of
    /// length 1 to `max_len`.
    pub fn sample<R: Rng>(&self, rng: &mut R) -> Word {
        // Length, weighted by exact counts.
        let mut ticket = uniform_below(rng, &self.total);
        let mut length = self.max_len;
        for (index, count) in self.length_counts.iter().enumerate() {
            if ticket < *count {
                length = index + 1;
                break;
            }
            ticket -= count;
        }

        let m = self.generators as i32;
        // First letter: uniform over all 2m letters.
        let first = letter_from_index(rng.gen_range(0..2 * m as u32), m);
        let mut letters = vec![first];

        for remaining in (0..length - 1).rev() {
            let current = *letters.last().expect("word starts nonempty");
            let class_of_current = classify(current, first);
            // Fanout into each class from the current state: how many letters
            // of each class are legal as the next letter.
            let fanout = class_fanout(class_of_current, m as u32);
            let weights: [BigUint; 3] = [
                BigUint::from(fanout[EQUAL]) * &self.completions[remaining][EQUAL],
                BigUint::from(fanout[INVERSE]) * &self.completions[remaining][INVERSE],
                BigUint::from(fanout[OTHER]) * &self.completions[remaining][OTHER],
            ];
            let sum = &weights[0] + &weights[1] + &weights[2];
            let mut pick = uniform_below(rng, &sum);
            let mut class = OTHER;
            for c in [EQUAL, INVERSE, OTHER] {
                if pick < weights[c] {
                    class = c;
                    break;
                }
                pick -= &weights[c];
            }
            let next = match class {
                EQUAL => first,
                INVERSE => -first,
                _ => {
                    // Uniform over the legal letters that are neither f nor
                    // f inverse: exclude the inverse of the current letter
                    // when that inverse lies in this class.
                    let index = rng.gen_range(0..fanout[OTHER]);
                    other_letter(index, m, first, current)
                }
            };
            letters.push(next);
        }

        let word = Word::from_letters(letters).expect("letters are nonzero");
        debug_assert!(word.is_cyclically_reduced());
        word
    }
}

/// Draws one cyclically reduced word of length 1 to `max_len` over
/// `generators` generators, exactly uniformly.  Builds the count tables on
/// every call; reuse a [`CyclicWordSampler`] for repeated draws.
pub fn sample_cyclically_reduced<R: Rng>(generators: usize, max_len: usize, rng: &mut R) -> Word {
    CyclicWordSampler::new(generators, max_len).sample(rng)
}

/// Exactly uniform draw from `0..bound` (rejection sampling on big integers).
fn uniform_below<R: Rng>(rng: &mut R, bound: &BigUint) -> BigUint {
    rng.gen_biguint_below(bound)
}

fn classify(letter: i32, first: i32) -> usize {
    if letter == first {
        EQUAL
    } else if letter == -first {
        INVERSE
    } else {
        OTHER
    }
}

/// How many legal next letters fall in each class, given the class of the
/// current last letter.  The next letter must not invert the current one.
fn class_fanout(current_class: usize, m: u32) -> [u32; 3] {
    match current_class {
        EQUAL => [1, 0, 2 * m - 2],
        INVERSE => [0, 1, 2 * m - 2],
        _ => [1, 1, 2 * m - 3],
    }
}

/// The letter with the given index in the fixed enumeration
/// `1, -1, 2, -2, ...` of all `2m` letters.
fn letter_from_index(index: u32, m: i32) -> i32 {
    let generator = (index / 2) as i32 + 1;
    debug_assert!(generator <= m);
    if index.is_multiple_of(2) {
        generator
    } else {
        -generator
    }
}

/// The `index`-th letter (same fixed enumeration) among those that are
/// neither `first`, nor `first` inverse, nor the inverse of `current`.
fn other_letter(index: u32, m: i32, first: i32, current: i32) -> i32 {
    let mut seen = 0;
    for raw in 0..2 * m as u32 {
        let letter = letter_from_index(raw, m);
        if letter == first || letter == -first || letter == -current {
            continue;
        }
        if seen == index {
            return letter;
        }
        seen += 1;
    }
    unreachable!("class fanout counted {index} legal letters but fewer exist");
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use std::collections::BTreeMap;

    /// Oracle: enumerate every cyclically reduced word directly.
    fn enumerate_cyclically_reduced(m: usize, max_len: usize) -> Vec<Word> {
        let alphabet: Vec<i32> = (1..=m as i32).flat_map(|g| [g, -g]).collect();
        let mut all = Vec::new();
        let mut stack: Vec<Vec<i32>> = alphabet.iter().map(|&x| vec![x]).collect();
        while let Some(letters) = stack.pop() {
            let word = Word::from_letters(letters.clone()).unwrap();
            if word.is_cyclically_reduced() {
                all.push(word);
            }
            if letters.len() < max_len {
                for &x in &alphabet {
                    if x != -letters[letters.len() - 1] {
                        let mut next = letters.clone();
                        next.push(x);
                        stack.push(next);
                    }
                }
            }
        }
        all.sort();
        all
    }

    #[test]
    fn counts_match_explicit_enumeration() {
        for (m, max_len) in [(2usize, 4usize), (3, 3)] {
            let sampler = CyclicWordSampler::new(m, max_len);
            let words = enumerate_cyclically_reduced(m, max_len);
            let mut by_length: BTreeMap<usize, usize> = BTreeMap::new();
            for word in &words {
                *by_length.entry(word.len()).or_default() += 1;
            }
            for length in 1..=max_len {
                assert_eq!(
                    sampler.count_of_length(length),
                    &BigUint::from(by_length[&length]),
                    "count mismatch at m={m}, length={length}"
                );
            }
            assert_eq!(sampler.total_count(), &BigUint::from(words.len()));
        }
    }

    #[test]
    fn frozen_counts_for_two_generators() {
        let sampler = CyclicWordSampler::new(2, 4);
        let counts: Vec<u64> = (1..=4)
            .map(|length| {
                let count = sampler.count_of_length(length);
                u64::try_from(count.clone()).unwrap()
            })
            .collect();
        assert_eq!(counts, vec![4, 12, 28, 84]);
        assert_eq!(sampler.total_count(), &BigUint::from(128u32));
    }

    #[test]
    fn samples_are_always_cyclically_reduced() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (m, max_len) in [(2usize, 17usize), (3, 9), (5, 4), (2, 1)] {
            let sampler = CyclicWordSampler::new(m, max_len);
            for _ in 0..200 {
                let word = sampler.sample(&mut rng);
                assert!(word.is_cyclically_reduced());
                assert!(!word.is_empty() && word.len() <= max_len);
                assert!(word
                    .letters()
                    .iter()
                    .all(|x| x.unsigned_abs() as usize <= m));
            }
        }
    }

    #[test]
    fn length_one_is_uniform_over_letters() {
        let sampler = CyclicWordSampler::new(2, 1);
        assert_eq!(sampler.total_count(), &BigUint::from(4u32));
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen = std::collections::BTreeSet::new();
        for _ in 0..100 {
            seen.insert(sampler.sample(&mut rng));
        }
        assert_eq!(seen.len(), 4);
    }

    #[test]
    fn empirical_distribution_is_uniform() {
        // 10^5 draws over the 44 cyclically reduced words with m=2, l=3;
        // every cell must sit within 4 standard deviations of the mean.
        let sampler = CyclicWordSampler::new(2, 3);
        let words = enumerate_cyclically_reduced(2, 3);
        assert_eq!(words.len(), 44);
        assert_eq!(sampler.total_count(), &BigUint::from(44u32));

        let draws = 100_000usize;
        let mut histogram: BTreeMap<Word, usize> = BTreeMap::new();
        let mut rng = ChaCha8Rng::seed_from_u64(20260817);
        for _ in 0..draws {
            *histogram.entry(sampler.sample(&mut rng)).or_default() += 1;
        }
        let p = 1.0 / words.len() as f64;
        let mean = draws as f64 * p;
        let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
        for word in &words {
            let observed = *histogram.get(word).unwrap_or(&0) as f64;
            assert!(
                (observed - mean).abs() < 4.0 * sigma,
                "word {word} drawn {observed} times, expected {mean:.1} +- {:.1}",
                4.0 * sigma
            );
        }
        assert_eq!(histogram.len(), 44, "every word should appear");
    }

    #[test]
    fn fixed_seed_reproduces_the_sequence() {
        let sampler = CyclicWordSampler::new(3, 12);
        let draw = |seed: u64| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..20)
                .map(|_| sampler.sample(&mut rng))
                .collect::<Vec<_>>()
        };
        assert_eq!(draw(99), draw(99));
        assert_ne!(draw(99), draw(100));
    }

    #[test]
    fn one_shot_helper_matches_sampler() {
        let mut rng1 = ChaCha8Rng::seed_from_u64(5);
        let mut rng2 = ChaCha8Rng::seed_from_u64(5);
        let sampler = CyclicWordSampler::new(2, 6);
        assert_eq!(
            sample_cyclically_reduced(2, 6, &mut rng1),
            sampler.sample(&mut rng2)
        );
    }

    #[test]
    fn big_lengths_do_not_overflow() {
        // 3^200 exceeds u128; the table must hold exact counts anyway.
        let sampler = CyclicWordSampler::new(2, 200);
        let count = sampler.count_of_length(200);
        assert!(count.bits() > 300);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let word = sampler.sample(&mut rng);
        assert!(word.is_cyclically_reduced());
    }
}
