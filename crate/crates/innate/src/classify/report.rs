use serde::Serialize;

use crate::perm::{rank, GeneratedGroup};

use super::pit::{detect_pit, phi_hat, PitOutcome};
use super::special::is_special_pair;
use super::ClassifyError;

/// Groups up to this order have their element orders listed when identifying a quotient.
const ELEMENT_ORDER_CAP: u128 = 200_000;

/// Known quotients: degree, order, largest element order (0 when not needed), name and the
/// special-pair line of the socle's family.
const SIGNATURES: &[(usize, u128, u64, &str, Option<u8>)] = &[
    (5, 60, 0, "A5", Some(1)),
    (5, 120, 0, "S5", Some(1)),
    (6, 60, 0, "PSL(2,5)", Some(2)),
    (6, 120, 0, "PGL(2,5)", Some(2)),
    (7, 168, 0, "PSL(3,2)", Some(3)),
    (8, 168, 0, "PSL(2,7)", Some(2)),
    (8, 336, 0, "PGL(2,7)", Some(2)),
    (9, 504, 0, "PSL(2,8)", Some(2)),
    (9, 1512, 0, "PΓL(2,8)", Some(2)),
    (10, 60, 0, "A5 on pairs", None),
    (10, 120, 0, "S5 on pairs", None),
    (10, 360, 0, "PSL(2,9)", Some(2)),
    (10, 720, 6, "PΣL(2,9)", Some(2)),
    (10, 720, 8, "M10", Some(2)),
    (10, 720, 10, "PGL(2,9)", Some(2)),
    (10, 1440, 0, "PΓL(2,9)", Some(2)),
    (11, 7920, 0, "M11", Some(8)),
    (12, 660, 0, "PSL(2,11)", Some(2)),
    (12, 1320, 0, "PGL(2,11)", Some(2)),
    (12, 7920, 0, "M11 on 12", None),
    (13, 5616, 0, "PSL(3,3)", Some(2)),
    (14, 168, 0, "PSL(3,2) on A4-cosets", None),
    (14, 1092, 0, "PSL(2,13)", Some(2)),
    (14, 2184, 0, "PGL(2,13)", Some(2)),
    (15, 60, 0, "A5 on 2|2|1 partitions", None),
    (15, 120, 0, "S5 on 2|2|1 partitions", None),
    (15, 360, 0, "A6 on pairs", None),
    (15, 720, 0, "S6 on pairs", None),
    (18, 2448, 0, "PSL(2,17)", Some(2)),
    (18, 4896, 0, "PGL(2,17)", Some(2)),
    (20, 360, 0, "A6 on 3-sets", None),
    (20, 720, 6, "S6 on 3-sets", None),
    (20, 720, 8, "M10 on (C3^2:C4)-cosets", None),
    (21, 168, 0, "PSL(3,2) on flags", None),
    (21, 336, 0, "correlations of PG(2,2) on flags", None),
    (21, 2520, 0, "A7 on pairs", None),
    (21, 5040, 0, "S7 on pairs", None),
    (26, 7800, 0, "PSL(2,25)", Some(2)),
    (28, 504, 0, "PSL(2,8)", None),
    (28, 1512, 0, "PΓL(2,8)", Some(7)),
    (28, 6048, 0, "PSU(3,3)", Some(4)),
    (28, 12096, 0, "PΓU(3,3)", Some(4)),
    (28, 1_451_520, 0, "Sp(6,2)", Some(5)),
    (36, 1_451_520, 0, "Sp(6,2)", Some(5)),
    (57, 1_876_896, 0, "PSL(3,7)", Some(2)),
    (57, 5_630_688, 0, "PGL(3,7)", Some(2)),
    (65, 62_400, 0, "PSU(3,4)", Some(4)),
    (65, 124_800, 0, "PSU(3,4).2", Some(4)),
    (65, 249_600, 0, "PΓU(3,4)", Some(4)),
    (176, 44_352_000, 0, "HS", Some(9)),
    (276, 495_766_656_000, 0, "Co3", Some(10)),
];

/// The invariants used to name a quotient, and the name found, if any.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuotientSignature {
    pub degree: usize,
    pub order: u128,
    pub rank: usize,
    pub suborbits: Vec<usize>,
    pub max_element_order: Option<u64>,
    pub name: Option<String>,
    pub line: Option<u8>,
}

pub fn identify_quotient(x: &GeneratedGroup) -> Result<QuotientSignature, ClassifyError> {
    let suborbits = crate::perm::suborbit_lengths(x)?;
    let order = x.order();
    let max_element_order = (order <= ELEMENT_ORDER_CAP).then(|| {
        x.elements(ELEMENT_ORDER_CAP)
            .expect("order checked")
            .iter()
            .map(|e| e.order())
            .max()
            .unwrap_or(1)
    });
    let hit = SIGNATURES.iter().find(|&&(deg, ord, m, _, _)| {
        deg == x.degree() && ord == order && (m == 0 || max_element_order == Some(m))
    });
    Ok(QuotientSignature {
        degree: x.degree(),
        order,
        rank: suborbits.len(),
        suborbits,
        max_element_order,
        name: hit.map(|h| h.3.to_string()),
        line: hit.and_then(|h| h.4),
    })
}

/// One classified properly innately transitive group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PitReport {
    pub degree: usize,
    pub order: u128,
    pub r: usize,
    pub sigma_count: usize,
    pub rank: usize,
    pub special: bool,
    pub plinth_order: u128,
    pub quotient_signature: String,
    pub line_tag: Option<String>,
}

/// Classification of an arbitrary transitive group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum ClassifyOutcome {
    Proper(PitReport),
    Quasiprimitive { degree: usize, order: u128, plinth_order: u128 },
    AbelianPlinth { degree: usize, order: u128, plinth_order: u128 },
    NotInnatelyTransitive { degree: usize, order: u128 },
}

fn render_signature(sig: &QuotientSignature) -> String {
    match &sig.name {
        Some(name) => format!("{name} [degree {}, order {}]", sig.degree, sig.order),
        None => format!("unidentified [degree {}, order {}, suborbits {:?}]", sig.degree, sig.order, sig.suborbits),
    }
}

impl PitReport {
    pub fn from_decomposition(d: &super::PitDecomposition) -> Result<Self, ClassifyError> {
        let ph = phi_hat(d);
        let special = is_special_pair(&ph.quotient, &ph.r_sub, ph.sigma)?.holds;
        let sig = identify_quotient(&ph.quotient)?;
        Ok(PitReport {
            degree: d.degree(),
            order: d.group.order(),
            r: d.r,
            sigma_count: d.blocks.cell_count(),
            rank: rank(&d.group)?,
            special,
            plinth_order: d.plinth.order(),
            quotient_signature: render_signature(&sig),
            line_tag: sig.line.filter(|_| special).map(|l| format!("Line {l}")),
        })
    }
}

/// Runs detection, the cell-action map, the special-pair test and the rank on `g`.
pub fn classify_group(g: &GeneratedGroup) -> Result<ClassifyOutcome, ClassifyError> {
    let (degree, order) = (g.degree(), g.order());
    Ok(match detect_pit(g)? {
        PitOutcome::Proper(d) => ClassifyOutcome::Proper(PitReport::from_decomposition(&d)?),
        PitOutcome::Quasiprimitive { plinth_order } => ClassifyOutcome::Quasiprimitive {
            degree,
            order,
            plinth_order,
        },
        PitOutcome::AbelianPlinth { plinth_order } => ClassifyOutcome::AbelianPlinth {
            degree,
            order,
            plinth_order,
        },
        PitOutcome::NotInnatelyTransitive => ClassifyOutcome::NotInnatelyTransitive { degree, order },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_of_degree_ten_groups() {
        let s6 = GeneratedGroup::symmetric(6);
        assert_eq!(identify_quotient(&s6).unwrap().name, None);
        let s5 = GeneratedGroup::symmetric(5);
        let sig = identify_quotient(&s5).unwrap();
        assert_eq!(sig.name.as_deref(), Some("S5"));
        assert_eq!(sig.max_element_order, Some(6));
    }

    #[test]
    fn s4_has_an_abelian_plinth() {
        let out = classify_group(&GeneratedGroup::symmetric(4)).unwrap();
        assert!(matches!(out, ClassifyOutcome::AbelianPlinth { plinth_order: 4, .. }));
    }
}
