//! Plain-text group description used by the CLI.
//!
//! ```text
//! # Klein four with two of its three involutions
//! degree 4
//! gen (1 2)
//! gen (3 4)
//! seed (1 2)
//! seed (3 4)
//! ```
//!
//! Points are 1-based. Each `seed` line lists comma-separated generators of
//! one subgroup (`seed` alone, or `seed ()`, is the trivial subgroup).
//! Blank lines and `#` comments are ignored.

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::perm::Perm;
use crate::Limits;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupFile {
    pub degree: usize,
    pub generators: Vec<Perm>,
    /// Generators of each seed subgroup.
    pub seeds: Vec<Vec<Perm>>,
}

impl GroupFile {
    pub fn parse(text: &str) -> Result<GroupFile> {
        let mut degree = None;
        let mut generators = Vec::new();
        let mut seeds: Vec<Vec<Perm>> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line_no = k + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (keyword, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match (keyword, degree) {
                ("degree", None) => {
                    let n: usize = rest
                        .parse()
                        .map_err(|_| Error::parse(line_no, format!("bad degree {rest:?}")))?;
                    if n == 0 {
                        return Err(Error::parse(line_no, "degree must be at least 1"));
                    }
                    degree = Some(n);
                }
                ("degree", Some(_)) => return Err(Error::parse(line_no, "degree given twice")),
                (_, None) => return Err(Error::parse(line_no, "expected `degree n` first")),
                ("gen", Some(n)) => {
                    if !seeds.is_empty() {
                        return Err(Error::parse(line_no, "`gen` lines must precede `seed` lines"));
                    }
                    generators.push(Perm::parse_cycles(n, rest).map_err(|e| Error::parse(line_no, e.to_string()))?);
                }
                ("seed", Some(n)) => {
                    let gens = rest
                        .split(',')
                        .map(str::trim)
                        .filter(|s| !s.is_empty())
                        .map(|s| Perm::parse_cycles(n, s).map_err(|e| Error::parse(line_no, e.to_string())))
                        .collect::<Result<Vec<_>>>()?;
                    seeds.push(gens);
                }
                (other, Some(_)) => return Err(Error::parse(line_no, format!("unknown keyword {other:?}"))),
            }
        }
        let degree = degree.ok_or_else(|| Error::parse(0, "missing `degree n` line"))?;
        Ok(GroupFile {
            degree,
            generators,
            seeds,
        })
    }

    pub fn group(&self, limits: &Limits) -> Result<PermGroup> {
        PermGroup::generate_with_limit(self.degree, &self.generators, limits.max_elements)
    }

    /// The group and the collection closed from the seeds.
    pub fn build(&self, limits: &Limits) -> Result<(PermGroup, Collection)> {
        let g = self.group(limits)?;
        let seeds = self
            .seeds
            .iter()
            .map(|gens| g.subgroup_from_generators(gens))
            .collect::<Result<Vec<_>>>()?;
        let c = Collection::close(&g, &seeds, limits)?;
        Ok((g, c))
    }
}
