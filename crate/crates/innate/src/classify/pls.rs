use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::perm::{rank, GeneratedGroup};

use super::ClassifyError;

/// A point-line incidence structure on points `0..points`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IncidenceStructure {
    points: usize,
    lines: Vec<Vec<usize>>,
}

/// The partial-linear-space axiom that fails.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum PlsAxiom {
    LineSize,
    Replication,
    PairOnTwoLines,
    NoNonCollinearPair,
}

impl fmt::Display for PlsAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PlsAxiom::LineSize => "lines differ in size or have at most 2 points",
            PlsAxiom::Replication => "points lie on different numbers of lines",
            PlsAxiom::PairOnTwoLines => "some pair of points lies on two lines",
            PlsAxiom::NoNonCollinearPair => "every pair of points is collinear",
        };
        f.write_str(s)
    }
}

impl IncidenceStructure {
    pub fn new(points: usize, lines: Vec<Vec<usize>>) -> Result<Self, ClassifyError> {
        let mut sorted = Vec::with_capacity(lines.len());
        for mut line in lines {
            line.sort_unstable();
            line.dedup();
            if line.iter().any(|&p| p >= points) {
                return Err(ClassifyError::InvalidDesign(format!("line {line:?} has a point out of range")));
            }
            sorted.push(line);
        }
        sorted.sort();
        Ok(IncidenceStructure { points, lines: sorted })
    }

    /// Parses `points n` followed by one line per row of space-separated point indices.
    pub fn parse(text: &str) -> Result<Self, ClassifyError> {
        let mut rows = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = rows
            .next()
            .ok_or_else(|| ClassifyError::InvalidDesign("empty design".into()))?;
        let points = header
            .strip_prefix("points")
            .and_then(|s| s.trim().parse().ok())
            .ok_or_else(|| ClassifyError::InvalidDesign(format!("bad header {header:?}")))?;
        let lines = rows
            .map(|row| {
                row.split_whitespace()
                    .map(|t| t.parse().map_err(|_| ClassifyError::InvalidDesign(format!("bad point {t:?}"))))
                    .collect()
            })
            .collect::<Result<Vec<Vec<usize>>, _>>()?;
        IncidenceStructure::new(points, lines)
    }

    pub fn render(&self) -> String {
        let mut out = format!("points {}\n", self.points);
        for line in &self.lines {
            out.push_str(&line.iter().map(usize::to_string).collect::<Vec<_>>().join(" "));
            out.push('\n');
        }
        out
    }

    pub fn points(&self) -> usize {
        self.points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    /// Points collinear with `p`, excluding `p`.
    fn neighbours(&self, p: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .lines
            .iter()
            .filter(|l| l.contains(&p))
            .flat_map(|l| l.iter().copied().filter(|&x| x != p))
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Line size and replication number, or the first violated axiom.
    fn check_axioms(&self) -> Result<(usize, usize), PlsAxiom> {
        let k = self.lines.first().map_or(0, Vec::len);
        if k <= 2 || self.lines.iter().any(|l| l.len() != k) {
            return Err(PlsAxiom::LineSize);
        }
        let mut replication = vec![0usize; self.points];
        for line in &self.lines {
            for &p in line {
                replication[p] += 1;
            }
        }
        if replication.iter().any(|&x| x != replication[0]) {
            return Err(PlsAxiom::Replication);
        }
        let mut pairs = HashSet::new();
        for line in &self.lines {
            for (i, &a) in line.iter().enumerate() {
                for &b in &line[i + 1..] {
                    if !pairs.insert((a, b)) {
                        return Err(PlsAxiom::PairOnTwoLines);
                    }
                }
            }
        }
        if pairs.len() == self.points * (self.points - 1) / 2 {
            return Err(PlsAxiom::NoNonCollinearPair);
        }
        Ok((k, replication[0]))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlsReport {
    pub points: usize,
    pub lines: usize,
    pub line_size: usize,
    pub replication: usize,
    /// Every generator maps lines to lines.
    pub preserved: bool,
    pub rank: usize,
    /// The nontrivial orbitals are exactly the collinear and the non-collinear pairs.
    pub orbitals_match: bool,
}

pub fn verify_pls(s: &IncidenceStructure, g: &GeneratedGroup) -> Result<PlsReport, ClassifyError> {
    if g.degree() != s.points {
        return Err(ClassifyError::DegreeMismatch {
            group: g.degree(),
            points: s.points,
        });
    }
    let (k, replication) = s.check_axioms().map_err(ClassifyError::NotPartialLinearSpace)?;
    let line_set: HashSet<&Vec<usize>> = s.lines.iter().collect();
    let preserved = g.generators().iter().all(|x| {
        s.lines.iter().all(|line| {
            let mut image: Vec<usize> = line.iter().map(|&p| x.image(p)).collect();
            image.sort_unstable();
            line_set.contains(&image)
        })
    });
    let rank = rank(g)?;
    let mut orbitals_match = false;
    if rank == 3 && g.is_transitive() {
        let stab = g.stabilizer(0);
        let collinear = s.neighbours(0);
        let mut orbit = stab.orbit(collinear[0]);
        orbit.sort_unstable();
        let mut others: Vec<usize> = (1..s.points).filter(|p| collinear.binary_search(p).is_err()).collect();
        others.sort_unstable();
        let mut other_orbit = stab.orbit(others[0]);
        other_orbit.sort_unstable();
        orbitals_match = orbit == collinear && other_orbit == others;
    }
    Ok(PlsReport {
        points: s.points,
        lines: s.lines.len(),
        line_size: k,
        replication,
        preserved,
        rank,
        orbitals_match,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let s = IncidenceStructure::parse("points 7\n0 1 3\n1 2 4\n2 3 5\n3 4 6\n4 5 0\n5 6 1\n6 0 2\n").unwrap();
        assert_eq!(s.lines().len(), 7);
        assert_eq!(IncidenceStructure::parse(&s.render()).unwrap(), s);
    }

    #[test]
    fn fano_plane_is_a_linear_space() {
        let lines = (0..7).map(|x| vec![x, (x + 1) % 7, (x + 3) % 7]).collect();
        let s = IncidenceStructure::new(7, lines).unwrap();
        let g = GeneratedGroup::trivial(7);
        assert_eq!(
            verify_pls(&s, &g),
            Err(ClassifyError::NotPartialLinearSpace(PlsAxiom::NoNonCollinearPair))
        );
    }
}
