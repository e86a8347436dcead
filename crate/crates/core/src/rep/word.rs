//! Words in the generators of a finitely presented group.

use std::fmt;

use crate::error::{Error, Result};

/// One generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter { gen: self.gen, inverse: !self.inverse }
    }
}

/// A product of letters, read left to right. Adjacent inverse pairs are
/// cancelled on construction; no other reduction is attempted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn generator(gen: usize) -> Word {
        Word(vec![Letter { gen, inverse: false }])
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Word {
        let mut w = Word::empty();
        for l in letters {
            w.push(l);
        }
        w
    }

    fn push(&mut self, l: Letter) {
        if self.0.last() == Some(&l.inv()) {
            self.0.pop();
        } else {
            self.0.push(l);
        }
    }

    /// Parses whitespace-separated generator names, `g'` denoting `g^-1`.
    /// The empty string (or `"1"`) is the identity.
    pub fn parse(s: &str, gen_names: &[String]) -> Result<Word> {
        let mut w = Word::empty();
        for tok in s.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, inverse) = match tok.strip_suffix('\'') {
                Some(n) => (n, true),
                None => (tok, false),
            };
            let gen = gen_names
                .iter()
                .position(|g| g == name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            w.push(Letter { gen, inverse });
        }
        Ok(w)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for &l in &other.0 {
            w.push(l);
        }
        w
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inv()).collect())
    }

    pub fn pow(&self, e: usize) -> Word {
        (0..e).fold(Word::empty(), |acc, _| acc.concat(self))
    }

    /// Replaces every generator by the corresponding word.
    pub fn substitute(&self, images: &[Word]) -> Word {
        self.0.iter().fold(Word::empty(), |acc, l| {
            let img = &images[l.gen];
            if l.inverse {
                acc.concat(&img.inverse())
            } else {
                acc.concat(img)
            }
        })
    }

    pub fn display<'a>(&'a self, gen_names: &'a [String]) -> impl fmt::Display + 'a {
        DisplayWord { word: self, names: gen_names }
    }
}

struct DisplayWord<'a> {
    word: &'a Word,
    names: &'a [String],
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            f.write_str(&self.names[l.gen])?;
            if l.inverse {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}
