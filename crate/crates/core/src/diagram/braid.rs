use std::fmt;

use serde::{Deserialize, Serialize};

use super::KnotDiagram;
use crate::error::{Error, Result};

/// A braid word on `strands` strands. Letter `i` is the generator `σ_i`
/// crossing strands `i` and `i + 1`; `-i` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Braid {
    strands: usize,
    word: Vec<i32>,
}

impl Braid {
    pub fn new(word: Vec<i32>, strands: usize) -> Result<Self> {
        if strands == 0 {
            return Err(Error::MalformedBraid("a braid needs at least one strand".into()));
        }
        for (k, &letter) in word.iter().enumerate() {
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(Error::MalformedBraid(format!(
                    "letter {letter} at position {} is out of range for {strands} strands",
                    k + 1
                )));
            }
        }
        Ok(Braid { strands, word })
    }

    /// Braid with the strand count inferred as `max |letter| + 1`.
    pub fn from_word(word: Vec<i32>) -> Result<Self> {
        let strands = word.iter().map(|l| l.unsigned_abs() as usize).max().unwrap_or(0) + 1;
        Self::new(word, strands)
    }

    /// Parses integers separated by whitespace or commas, e.g. `1 1 1` or
    /// `1,-2,1,-2`. `strands` overrides the inferred count.
    pub fn parse(text: &str, strands: Option<usize>) -> Result<Self> {
        let mut word = Vec::new();
        let mut pos = 0;
        for token in text.split(|c: char| c.is_whitespace() || c == ',') {
            if !token.is_empty() {
                let offset = text[pos..].find(token).map_or(pos, |i| pos + i);
                let letter: i32 = token
                    .parse()
                    .map_err(|_| Error::parse(text, offset, format!("`{token}` is not an integer")))?;
                word.push(letter);
                pos = offset + token.len();
            }
        }
        match strands {
            Some(n) => Self::new(word, n),
            None => Self::from_word(word),
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Where the strand starting at each position ends up.
    pub fn permutation(&self) -> Vec<usize> {
        let mut at: Vec<usize> = (0..self.strands).collect();
        for &letter in &self.word {
            let i = letter.unsigned_abs() as usize - 1;
            at.swap(i, i + 1);
        }
        let mut perm = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            perm[strand] = pos;
        }
        perm
    }

    /// Number of components of the closure.
    pub fn components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; self.strands];
        let mut count = 0;
        for start in 0..self.strands {
            if !seen[start] {
                count += 1;
                let mut p = start;
                while !seen[p] {
                    seen[p] = true;
                    p = perm[p];
                }
            }
        }
        count
    }

    /// PD diagram of the closure. Positive letters give positive crossings.
    pub fn to_diagram(&self) -> Result<KnotDiagram> {
        let components = self.components();
        if components != 1 {
            return Err(Error::NotAKnot { components });
        }
        if self.word.is_empty() {
            return Ok(KnotDiagram::unknot());
        }

        let initial: Vec<u64> = (1..=self.strands as u64).collect();
        let mut current = initial.clone();
        let mut next = self.strands as u64 + 1;
        let mut tuples = Vec::with_capacity(self.word.len());
        for &letter in &self.word {
            let i = letter.unsigned_abs() as usize - 1;
            // Strands move upward; x enters bottom left, y bottom right.
            let (x, y) = (current[i], current[i + 1]);
            let (x_out, y_out) = (next, next + 1);
            next += 2;
            tuples.push(if letter > 0 {
                [y, x_out, y_out, x]
            } else {
                [x, y, x_out, y_out]
            });
            current[i] = y_out;
            current[i + 1] = x_out;
        }
        // Close up: the top end at each position is the bottom edge there.
        let close: std::collections::HashMap<u64, u64> =
            current.iter().copied().zip(initial.iter().copied()).collect();
        for t in &mut tuples {
            for label in t.iter_mut() {
                if let Some(&to) = close.get(label) {
                    *label = to;
                }
            }
        }
        KnotDiagram::from_pd(&tuples)
    }
}

impl fmt::Display for Braid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<String> = self.word.iter().map(|l| l.to_string()).collect();
        f.write_str(&letters.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_infer_strands() {
        let b = Braid::parse("1 -2, 1 -2", None).unwrap();
        assert_eq!(b.strands(), 3);
        assert_eq!(b.word(), &[1, -2, 1, -2]);
        assert_eq!(b.to_string(), "1 -2 1 -2");
        assert!(matches!(Braid::parse("1 x", None), Err(Error::Parse { column: 3, .. })));
        assert!(matches!(Braid::parse("0", None), Err(Error::MalformedBraid(_))));
        assert!(matches!(Braid::parse("3", Some(3)), Err(Error::MalformedBraid(_))));
    }

    #[test]
    fn closure_components() {
        assert_eq!(Braid::parse("1 1", None).unwrap().components(), 2);
        assert_eq!(
            Braid::parse("1 1", None).unwrap().to_diagram(),
            Err(Error::NotAKnot { components: 2 })
        );
        assert_eq!(Braid::parse("", Some(2)).unwrap().components(), 2);
        assert_eq!(Braid::parse("", None).unwrap().to_diagram().unwrap(), KnotDiagram::unknot());
    }

    #[test]
    fn trefoil_closure() {
        let d = Braid::parse("1 1 1", None).unwrap().to_diagram().unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.writhe(), 3);
        assert!(d.is_alternating());
        let m = Braid::parse("-1 -1 -1", None).unwrap().to_diagram().unwrap();
        assert_eq!(m.writhe(), -3);
    }

    #[test]
    fn figure_eight_closure() {
        let d = Braid::parse("1 -2 1 -2", None).unwrap().to_diagram().unwrap();
        assert_eq!(d.crossing_count(), 4);
        assert_eq!(d.writhe(), 0);
        assert!(d.is_alternating());
    }

    #[test]
    fn single_crossing_closure_is_a_kink() {
        let d = Braid::parse("1", None).unwrap().to_diagram().unwrap();
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.nugatory_crossings(), vec![0]);
    }
}
