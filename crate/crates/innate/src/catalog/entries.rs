use serde::Serialize;

use crate::actions::FormType;

use super::recipe::{PlinthRecipe, RRecipe, RShape, SigmaRecipe};

/// One expected group. `id` is `degree/transitive-group number` for rows of the appendix
/// table (documentation only) and a descriptive tag otherwise.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpectedRow {
    pub id: String,
    pub degree: usize,
    pub order: u128,
    pub r: usize,
    pub rank: usize,
    pub special: Option<bool>,
}

/// Whether the produced groups must be exactly the expected rows, or merely include them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Matching {
    Exact,
    Includes,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub id: String,
    pub title: String,
    pub plinth: PlinthRecipe,
    pub sigma: SigmaRecipe,
    pub r_sub: RRecipe,
    pub matching: Matching,
    /// Part of the degree 12 to 42 table rather than an additional family instance.
    pub in_table: bool,
    /// Needs external data and minutes of run time.
    pub slow: bool,
    pub rows: Vec<ExpectedRow>,
}

impl CatalogEntry {
    pub fn degree(&self) -> Option<usize> {
        self.rows.first().map(|r| r.degree)
    }
}

fn linear(d: usize, p: u32, a: u32) -> PlinthRecipe {
    PlinthRecipe::Linear { d, p, a, graph: false }
}

fn r_index(index: u128) -> RRecipe {
    RRecipe {
        index,
        shape: RShape::Any,
    }
}

fn family(sets: &[&[usize]]) -> SigmaRecipe {
    SigmaRecipe::Family(sets.iter().map(|s| s.to_vec()).collect())
}

struct Spec {
    id: &'static str,
    title: &'static str,
    plinth: PlinthRecipe,
    sigma: SigmaRecipe,
    r_sub: RRecipe,
    matching: Matching,
    in_table: bool,
    slow: bool,
    degree: usize,
    rows: &'static [(&'static str, u128, usize, usize, Option<bool>)],
}

impl Spec {
    fn table(
        id: &'static str,
        title: &'static str,
        plinth: PlinthRecipe,
        sigma: SigmaRecipe,
        r_sub: RRecipe,
        degree: usize,
        rows: &'static [(&'static str, u128, usize, usize, Option<bool>)],
    ) -> Self {
        Spec {
            id,
            title,
            plinth,
            sigma,
            r_sub,
            matching: Matching::Exact,
            in_table: true,
            slow: false,
            degree,
            rows,
        }
    }

    fn extra(self, matching: Matching) -> Self {
        Spec {
            matching,
            in_table: false,
            ..self
        }
    }

    fn slow(self) -> Self {
        Spec { slow: true, ..self }
    }

    fn build(self) -> CatalogEntry {
        let degree = self.degree;
        CatalogEntry {
            id: self.id.into(),
            title: self.title.into(),
            plinth: self.plinth,
            sigma: self.sigma,
            r_sub: self.r_sub,
            matching: self.matching,
            in_table: self.in_table,
            slow: self.slow,
            rows: self
                .rows
                .iter()
                .map(|&(id, order, r, rank, special)| ExpectedRow {
                    id: id.into(),
                    degree,
                    order,
                    r,
                    rank,
                    special,
                })
                .collect(),
        }
    }
}

const Y: Option<bool> = Some(true);
const N: Option<bool> = Some(false);

/// Every construction of the catalog: the appendix table rows of degree 12 to 42 (41 rows
/// from 17 constructions), then the additional family instances and the two optional
/// sporadic entries.
pub fn builtin_catalog() -> Vec<CatalogEntry> {
    let p0 = || SigmaRecipe::Point(0);
    let flags = || family(&[&[0], &[0, 1, 2]]);
    let specs = vec![
        Spec::table("psl2-5-r2", "PSL(2,5), R of index 2 in 5:2", linear(2, 5, 1), p0(), r_index(2), 12,
            &[("12/76", 120, 2, 4, Y), ("12/124", 240, 2, 3, Y)]),
        Spec::table("psl3-2-points-r2", "PSL(3,2), R = A4 in S4", linear(3, 2, 1), p0(), r_index(2), 14,
            &[("14/17", 336, 2, 3, Y)]),
        Spec::table("a5-r3", "A5 on 5 points, R = V4 in A4", PlinthRecipe::Alternating { n: 5 }, p0(), r_index(3), 15,
            &[("15/15", 180, 3, 4, N), ("15/21", 360, 3, 3, Y)]),
        Spec::table("a5-pairs-r2", "A5 on pairs", PlinthRecipe::Alternating { n: 5 }, family(&[&[0, 1]]), r_index(2), 20,
            &[("20/36", 120, 2, 6, N), ("20/65", 240, 2, 5, N)]),
        Spec::table("psl2-9-r2", "PSL(2,9), R of index 2 in 3^2:4", linear(2, 3, 2), p0(), r_index(2), 20,
            &[
                ("20/152", 720, 2, 4, Y),
                ("20/197", 1440, 2, 3, Y),
                ("20/198", 1440, 2, 4, Y),
                ("20/200", 1440, 2, 3, Y),
                ("20/265", 2880, 2, 3, Y),
            ]),
        Spec::table(
            "m11-r2",
            "M11 on 11 points, R = A6 in M10",
            PlinthRecipe::DataFile { file: "m11.perm".into(), order: 7920 },
            p0(),
            r_index(2),
            22,
            &[("22/26", 15840, 2, 3, Y)],
        ),
        Spec::table("psl2-7-r3", "PSL(2,7), R = 7 in 7:3", linear(2, 7, 1), p0(), r_index(3), 24,
            &[("24/1355", 504, 3, 4, N), ("24/2668", 1008, 3, 4, N)]),
        Spec::table("psl3-3-r2", "PSL(3,3), R of index 2", linear(3, 3, 1), p0(), r_index(2), 26,
            &[("26/47", 11232, 2, 3, Y)]),
        Spec::table("psl2-13-r2", "PSL(2,13), R of index 2 in 13:6", linear(2, 13, 1), p0(), r_index(2), 28,
            &[("28/199", 2184, 2, 4, Y), ("28/281", 4368, 2, 3, Y)]),
        Spec::table(
            "a5-partitions-r2",
            "A5 on 2|2|1 partitions, R = C2 in V4",
            PlinthRecipe::Alternating { n: 5 },
            family(&[&[0, 1], &[2, 3], &[4]]),
            r_index(2),
            30,
            &[("30/29", 120, 2, 10, N), ("30/58", 240, 2, 7, N)],
        ),
        Spec::table("a6-pairs-r2", "A6 on pairs", PlinthRecipe::Alternating { n: 6 }, family(&[&[0, 1]]), r_index(2), 30,
            &[("30/179", 720, 2, 5, N), ("30/261", 1440, 2, 5, N)]),
        Spec::table("psl2-17-r2", "PSL(2,17), R of index 2 in 17:8", linear(2, 17, 1), p0(), r_index(2), 36,
            &[("36/5559", 4896, 2, 4, Y), ("36/8345", 9792, 2, 3, Y)]),
        Spec::table(
            "psl2-9-r4",
            "PSL(2,9) = A6, R = 3^2 of index 4 in 3^2:4",
            linear(2, 3, 2),
            p0(),
            r_index(4),
            40,
            &[
                ("40/587", 720, 2, 8, N),
                ("40/1189", 1440, 2, 6, N),
                ("40/1191", 1440, 2, 5, N),
                ("40/1197", 1440, 4, 6, N),
                ("40/2312", 2880, 4, 4, N),
                ("40/2314", 2880, 4, 5, N),
                ("40/2323", 2880, 4, 5, N),
                ("40/5156", 5760, 4, 4, N),
            ],
        ),
        Spec::table(
            "psl3-2-flags-c4",
            "PSL(3,2) on flags, R = C4",
            PlinthRecipe::Linear { d: 3, p: 2, a: 1, graph: true },
            flags(),
            RRecipe { index: 2, shape: RShape::Cyclic },
            42,
            &[("42/79", 336, 2, 10, N), ("42/131", 672, 2, 7, N)],
        ),
        Spec::table(
            "psl3-2-flags-v4",
            "PSL(3,2) on flags, R = C2^2",
            PlinthRecipe::Linear { d: 3, p: 2, a: 1, graph: true },
            flags(),
            RRecipe { index: 2, shape: RShape::NonCyclic },
            42,
            &[("42/80", 336, 2, 9, N), ("42/103", 504, 3, 7, N), ("42/175", 1008, 6, 5, N)],
        ),
        Spec::table("psl2-13-r3", "PSL(2,13), R of index 3 in 13:6", linear(2, 13, 1), p0(), r_index(3), 42,
            &[("42/335", 3276, 3, 4, N), ("42/484", 6552, 3, 4, N)]),
        Spec::table("a7-pairs-r2", "A7 on pairs", PlinthRecipe::Alternating { n: 7 }, family(&[&[0, 1]]), r_index(2), 42,
            &[("42/410", 5040, 2, 5, N), ("42/550", 10080, 2, 5, N)]),
        Spec::table("gammal2-4-r3", "PSL(2,4) on the projective line, R of index 3", linear(2, 2, 2), p0(), r_index(3), 15,
            &[("C3 x PSL(2,4)", 180, 3, 4, N), ("GammaL(2,4)", 360, 3, 3, Y)])
        .extra(Matching::Exact),
        Spec::table(
            "sp6-2-plus-r2",
            "Sp(6,2) on + forms, R = derived subgroup of O+(6,2)",
            PlinthRecipe::Symplectic { d: 3, eps: FormType::Plus },
            p0(),
            r_index(2),
            72,
            &[("C2 x Sp(6,2)", 2_903_040, 2, 4, Y)],
        )
        .extra(Matching::Exact),
        Spec::table(
            "sp6-2-minus-r2",
            "Sp(6,2) on - forms, R = derived subgroup of O-(6,2)",
            PlinthRecipe::Symplectic { d: 3, eps: FormType::Minus },
            p0(),
            r_index(2),
            56,
            &[("C2 x Sp(6,2)", 2_903_040, 2, 4, Y)],
        )
        .extra(Matching::Exact),
        Spec::table("psu3-3-r2", "PSU(3,3) on isotropic points, R of index 2", PlinthRecipe::Unitary { p: 3, a: 2 }, p0(),
            r_index(2), 56, &[("C2 x PSU(3,3)", 12096, 2, 4, Y), ("normalizer", 24192, 2, 4, Y)])
        .extra(Matching::Exact),
        Spec::table("psu3-4-r3", "PSU(3,4) on isotropic points, R of index 3", PlinthRecipe::Unitary { p: 2, a: 4 }, p0(),
            r_index(3), 195, &[("normalizer", 748_800, 3, 3, Y)])
        .extra(Matching::Includes),
        Spec::table("psl3-7-r2", "PSL(3,7) on points, R of index 2", linear(3, 7, 1), p0(), r_index(2), 114,
            &[("normalizer", 11_261_376, 2, 3, Y)])
        .extra(Matching::Includes),
        Spec::table(
            "line7-r2",
            "PSL(2,8) on cosets of C9, the PGammaL(2,8) special pair",
            linear(2, 2, 3),
            SigmaRecipe::CyclicNormalizer { order: 9 },
            r_index(2),
            56,
            &[("C2 x Ree(3)", 3024, 2, 4, Y)],
        )
        .extra(Matching::Includes),
        Spec::table(
            "hs-r2",
            "HS on 176 points, R of index 2",
            PlinthRecipe::DataFile { file: "hs176.perm".into(), order: 44_352_000 },
            p0(),
            r_index(2),
            352,
            &[("C2 x HS", 88_704_000, 2, 4, Y)],
        )
        .extra(Matching::Includes)
        .slow(),
        Spec::table(
            "co3-r2",
            "Co3 on 276 points, R of index 2",
            PlinthRecipe::DataFile { file: "co3-276.perm".into(), order: 495_766_656_000 },
            p0(),
            r_index(2),
            552,
            &[("C2 x Co3", 991_533_312_000, 2, 4, Y)],
        )
        .extra(Matching::Includes)
        .slow(),
    ];
    specs.into_iter().map(Spec::build).collect()
}
