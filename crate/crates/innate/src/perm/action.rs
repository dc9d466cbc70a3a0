use std::fmt::Write as _;

use serde::Serialize;

use super::{GeneratedGroup, PermError, Permutation};

/// How a point of a constructed domain is named.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PointLabel {
    Index(usize),
    /// A normalized vector, entries as discrete logs (`-1` for zero).
    Vector(Vec<i64>),
    /// A scaled point: residue index and normalized vector.
    Scaled { index: usize, vector: Vec<i64> },
    /// Value table of a quadratic form, bit `u` holding `Q(u)`.
    Form(Vec<u64>),
    /// A right coset named by a word in the acting generators.
    Coset(Vec<usize>),
    /// A subset of some underlying set.
    Subset(Vec<usize>),
}

impl PointLabel {
    pub fn render(&self) -> String {
        fn join(v: &[i64]) -> String {
            v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
        }
        match self {
            PointLabel::Index(i) => i.to_string(),
            PointLabel::Vector(v) => join(v),
            PointLabel::Scaled { index, vector } => format!("{index}:{}", join(vector)),
            PointLabel::Form(words) => {
                let mut s = String::new();
                for w in words.iter().rev() {
                    let _ = write!(s, "{w:016x}");
                }
                s
            }
            PointLabel::Coset(word) if word.is_empty() => "e".to_string(),
            PointLabel::Coset(word) => word
                .iter()
                .map(|g| format!("g{g}"))
                .collect::<Vec<_>>()
                .join("."),
            PointLabel::Subset(s) => format!(
                "{{{}}}",
                s.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
            ),
        }
    }
}

/// A named domain together with named generators acting on it.
#[derive(Clone, Debug)]
pub struct LabeledAction {
    pub name: String,
    pub labels: Vec<PointLabel>,
    pub generator_names: Vec<String>,
    pub generators: Vec<Permutation>,
}

impl LabeledAction {
    pub fn new(
        name: impl Into<String>,
        labels: Vec<PointLabel>,
        generator_names: Vec<String>,
        generators: Vec<Permutation>,
    ) -> Result<Self, PermError> {
        let n = labels.len();
        if generator_names.len() != generators.len() {
            return Err(PermError::InvalidPermutation("generator names and permutations differ in count".into()));
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != n) {
            return Err(PermError::DegreeMismatch {
                expected: n,
                found: g.degree(),
            });
        }
        Ok(LabeledAction {
            name: name.into(),
            labels,
            generator_names,
            generators,
        })
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    /// The group generated by every generator.
    pub fn group(&self) -> GeneratedGroup {
        GeneratedGroup::new(self.degree(), self.generators.clone()).expect("degrees checked")
    }

    /// Generators whose name starts with one of `prefixes`.
    pub fn generators_named(&self, prefixes: &[&str]) -> Vec<Permutation> {
        self.generator_names
            .iter()
            .zip(&self.generators)
            .filter(|(name, _)| prefixes.iter().any(|p| name.starts_with(p)))
            .map(|(_, g)| g.clone())
            .collect()
    }

    pub fn group_named(&self, prefixes: &[&str]) -> GeneratedGroup {
        GeneratedGroup::new(self.degree(), self.generators_named(prefixes)).expect("degrees checked")
    }

    /// One line per point, in point order.
    pub fn dump_domain(&self) -> Vec<String> {
        self.labels.iter().map(PointLabel::render).collect()
    }
}
