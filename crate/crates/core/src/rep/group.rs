//! Presented groups with an automorphism `tau` given on generators.

use crate::error::{Error, Result};

use super::word::Word;

/// Generators, defining relations and the images of the generators under
/// `tau`. The relations are words equal to the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    gen_names: Vec<String>,
    relations: Vec<Word>,
    tau_images: Vec<Word>,
    tau_order: usize,
}

impl GroupData {
    pub fn new(
        gen_names: Vec<String>,
        relations: Vec<Word>,
        tau_images: Vec<Word>,
        tau_order: usize,
    ) -> Result<Self> {
        if tau_images.len() != gen_names.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} tau images for {} generators",
                tau_images.len(),
                gen_names.len()
            )));
        }
        for (i, g) in gen_names.iter().enumerate() {
            if g.is_empty() || g.contains(char::is_whitespace) || g.contains('\'') || g == "1" {
                return Err(Error::input(format!("group.generators[{i}]"), format!("bad generator name `{g}`")));
            }
            if gen_names[..i].contains(g) {
                return Err(Error::input(format!("group.generators[{i}]"), format!("duplicate generator `{g}`")));
            }
        }
        let bound = gen_names.len();
        let in_range = |w: &Word| w.letters().iter().all(|l| l.gen < bound);
        if !relations.iter().all(in_range) || !tau_images.iter().all(in_range) {
            return Err(Error::UnknownGenerator("index out of range".into()));
        }
        Ok(GroupData { gen_names, relations, tau_images, tau_order })
    }

    /// Parses relations and tau images written as words.
    pub fn parse(
        gen_names: &[&str],
        relations: &[&str],
        tau: &[(&str, &str)],
        tau_order: usize,
    ) -> Result<Self> {
        let names: Vec<String> = gen_names.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| Word::parse(r, &names))
            .collect::<Result<Vec<_>>>()?;
        let mut images = vec![None; names.len()];
        for (g, w) in tau {
            let i = names
                .iter()
                .position(|n| n == g)
                .ok_or_else(|| Error::UnknownGenerator(g.to_string()))?;
            images[i] = Some(Word::parse(w, &names)?);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| Error::input("group.tau", format!("no image for generator `{}`", names[i])))
            })
            .collect::<Result<Vec<_>>>()?;
        GroupData::new(names, rels, images, tau_order)
    }

    pub fn gen_names(&self) -> &[String] {
        &self.gen_names
    }

    pub fn num_gens(&self) -> usize {
        self.gen_names.len()
    }

    pub fn relations(&self) -> &[Word] {
        &self.relations
    }

    pub fn tau_images(&self) -> &[Word] {
        &self.tau_images
    }

    pub fn tau_order(&self) -> usize {
        self.tau_order
    }

    pub fn word(&self, s: &str) -> Result<Word> {
        Word::parse(s, &self.gen_names)
    }

    pub fn display_word(&self, w: &Word) -> String {
        w.display(&self.gen_names).to_string()
    }

    /// `tau^k(w)`.
    pub fn apply_tau(&self, w: &Word, k: usize) -> Word {
        (0..k).fold(w.clone(), |acc, _| acc.substitute(&self.tau_images))
    }

    /// `tau^-k(w)`, computed as `tau^(r - k mod r)(w)`; valid once `tau^r = 1`
    /// has been checked.
    pub fn apply_tau_inverse(&self, w: &Word, k: usize) -> Word {
        let r = self.tau_order.max(1);
        self.apply_tau(w, (r - k % r) % r)
    }
}
