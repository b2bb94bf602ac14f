//! Branching-vector families for each branching rule, parameterized by a
//! potential table. Each rule's worst case over its family gives the
//! branching number that the solver's running-time bound rests on, so the
//! enumeration here is the checkable form of that bound.
//!
//! Families over the 2-edge count m are enumerated up to the point where
//! the table's top-row extension makes further vectors repeat; component
//! counts are capped at 9 for the same reason (the table ignores the
//! component count past its cap, and pads to zero above the diagonal).

use crate::branching::{branching_number, BranchingVector};
use crate::measure::PsiTable;
use crate::rules::RuleId;
use std::collections::HashSet;

/// The branching rules with measure-based bounds, in report order.
/// The component-split rule recurses on disjoint parts and has no
/// branching vector.
pub const TABLE_RULES: [RuleId; 7] = [
    RuleId::B1,
    RuleId::B2,
    RuleId::B3,
    RuleId::B4,
    RuleId::B5,
    RuleId::B6,
    RuleId::B8,
];

/// Largest 2-edge degree enumerated for the branch-vertex family when the
/// degree regime itself puts no bound on it.
pub const D2_MAX_ENUMERATED: i64 = 10;

type Raw = Vec<(Vec<f64>, String)>;

/// All vectors of a rule's family for the regime `psi.dhat`, deduplicated,
/// keeping the first parameter tag for each distinct vector. Empty when
/// the rule cannot fire in this regime.
pub fn rule_vectors(rule: RuleId, psi: &PsiTable) -> Vec<(BranchingVector, String)> {
    dedupe(raw_vectors(rule, psi, 0))
}

#[derive(Clone, Debug)]
pub struct RuleReport {
    pub rule: RuleId,
    pub generated: usize,
    pub distinct: usize,
    /// Worst branching number over the family; None when the family is
    /// empty (rule not applicable in this regime).
    pub max_bn: Option<f64>,
    pub worst: Option<(BranchingVector, String)>,
    /// Vectors with a non-positive entry; any entry here invalidates the
    /// table for this regime.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

pub fn verify_rule(rule: RuleId, psi: &PsiTable) -> RuleReport {
    let raw = raw_vectors(rule, psi, 0);
    let generated = raw.len();
    let vectors = dedupe(raw);
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    if rule == RuleId::B3 && psi.dhat == 6 {
        notes.push(format!(
            "2-edge degrees above {D2_MAX_ENUMERATED} are not enumerated in this regime"
        ));
    }
    let mut max_bn = None;
    let mut worst = None;
    for (v, tag) in &vectors {
        if let Some(&bad) = v.0.iter().find(|&&x| x <= 0.0) {
            failures.push(format!("{rule} [{tag}]: entry {bad} in {v} is not positive"));
            continue;
        }
        let bn = branching_number(v).expect("positive entries checked");
        if max_bn.is_none_or(|m| bn > m) {
            max_bn = Some(bn);
            worst = Some((v.clone(), tag.clone()));
        }
    }
    RuleReport {
        rule,
        generated,
        distinct: vectors.len(),
        max_bn,
        worst,
        failures,
        notes,
    }
}

/// Reports for every branching rule under this table's regime.
pub fn verify_table(psi: &PsiTable) -> Vec<RuleReport> {
    TABLE_RULES.iter().map(|&r| verify_rule(r, psi)).collect()
}

/// Largest branching number over all rules, None if every family is empty.
pub fn global_max(reports: &[RuleReport]) -> Option<f64> {
    reports
        .iter()
        .filter_map(|r| r.max_bn)
        .fold(None, |acc, x| Some(acc.map_or(x, |a: f64| a.max(x))))
}

fn raw_vectors(rule: RuleId, psi: &PsiTable, extra_m: i64) -> Raw {
    let mut out = Raw::new();
    match rule {
        RuleId::B1 => b1(psi, &mut out, extra_m),
        RuleId::B2 => b2(psi, &mut out, extra_m),
        RuleId::B3 => b3(psi, &mut out, extra_m),
        RuleId::B4 => {
            if psi.dhat == 4 {
                push(
                    &mut out,
                    vec![1.0 + psi.psi(1, 1), 1.0 + psi.psi(1, 1), 3.0],
                    "triple-shared pair".into(),
                );
            }
        }
        RuleId::B5 => {
            if psi.dhat <= 4 {
                push(
                    &mut out,
                    vec![1.0 + psi.psi_star(4), 2.0, 2.0],
                    "four new 2-edges".into(),
                );
            }
        }
        RuleId::B6 => {
            if psi.dhat <= 4 {
                b6(psi, &mut out);
            }
        }
        RuleId::B8 => b8(psi, &mut out),
        _ => panic!("{rule} has no branching-vector family"),
    }
    out
}

fn push(out: &mut Raw, entries: Vec<f64>, tag: String) {
    out.push((entries, tag));
}

const C_CAP: i64 = 9;

/// [lo, hi] clipped at the component cap; empty when lo > hi.
fn caps(lo: i64, hi: i64) -> std::ops::RangeInclusive<i64> {
    lo..=hi.min(C_CAP)
}

/// [lo, hi]_def: the clipped range, or the singleton default when empty.
fn caps_or(lo: i64, hi: i64, def: i64) -> Vec<i64> {
    if lo > hi {
        vec![def]
    } else {
        caps(lo, hi).collect()
    }
}

// two branches, each committing two vertices of a 4-cycle of 2-edges
fn b1(psi: &PsiTable, out: &mut Raw, extra_m: i64) {
    for m in 4..=(13 + extra_m) {
        for c in caps_or(2, m - 3, 1) {
            let e = 2.0 - psi.delta(m, 4, c, c - 1);
            push(out, vec![e, e], format!("m={m} c={c}"));
        }
    }
}

// degree-2 vertex with max 2-edge degree; two sub-shapes depending on
// whether both its edges are 2-edges
fn b2(psi: &PsiTable, out: &mut Raw, extra_m: i64) {
    let m_hi = 14 + extra_m;
    // both edges are 2-edges
    for m in 2..=m_hi {
        for c in caps_or(2, m - 1, 1) {
            for cp in caps(1, m - 1) {
                push(
                    out,
                    vec![
                        1.0 - psi.delta(m, 1, c, cp),
                        2.0 - psi.delta(m, 2, c, c - 1),
                    ],
                    format!("2+2 m={m} c={c} c'={cp}"),
                );
            }
        }
        for c in caps(1, m - 1) {
            for cp in caps_or(1, m - 5, 0) {
                for cpp in caps_or(1, m - 4, 0) {
                    push(
                        out,
                        vec![
                            2.0 - psi.delta(m, 5, c, cp),
                            2.0 - psi.delta(m, 4, c, cpp),
                        ],
                        format!("2+2u m={m} c={c} c'={cp} c''={cpp}"),
                    );
                }
            }
        }
    }
    // one 2-edge and one 3-edge
    for m in 1..=m_hi {
        for cp in caps(1, m + 1) {
            push(
                out,
                vec![1.0 - psi.delta(m, -1, m, cp), 1.0],
                format!("2+3 m={m} c'={cp}"),
            );
        }
        for cp in caps_or(1, m - 3, 0) {
            for cpp in caps(1, m) {
                push(
                    out,
                    vec![
                        2.0 - psi.delta(m, 3, m, cp),
                        1.0 - psi.delta(m, 0, m, cpp),
                    ],
                    format!("2+3u m={m} c'={cp} c''={cpp}"),
                );
            }
        }
    }
}

// branch on a vertex of maximum 2-edge degree, split by that degree
fn b3(psi: &PsiTable, out: &mut Raw, extra_m: i64) {
    for m in 1..=(11 + extra_m) {
        for cp in caps(1, m + 1) {
            push(
                out,
                vec![
                    1.0 - psi.delta(m, 1, m, m - 1),
                    1.0 - psi.delta(m, -1, m, cp),
                ],
                format!("d2=1 m={m} c'={cp}"),
            );
        }
        for cp in caps(1, m + 2) {
            push(
                out,
                vec![
                    1.0 - psi.delta(m, 1, m, m - 1),
                    1.0 - psi.delta(m, -2, m, cp),
                ],
                format!("d2=1,d3>2 m={m} c'={cp}"),
            );
        }
    }
    for m in (2..=(12 + extra_m)).filter(|&m| m != 4) {
        let a2 = m.min(4) - 1;
        for c in caps(1, m - 1) {
            for cp in caps_or(1, m - 2, 0) {
                for cpp in caps_or(1, m - 3, 1) {
                    push(
                        out,
                        vec![
                            1.0 - psi.delta(m, 2, c, cp),
                            2.0 - psi.delta(m, a2, c, cpp),
                        ],
                        format!("d2=2 m={m} c={c} c'={cp} c''={cpp}"),
                    );
                }
            }
        }
    }
    for c in 1..=3 {
        for cp in 1..=2 {
            for cpp in 1..=2 {
                push(
                    out,
                    vec![
                        1.0 - psi.delta(4, 2, c, cp),
                        2.0 - psi.delta(4, 2, c, cpp),
                    ],
                    format!("d2=2 m=4 c={c} c'={cp} c''={cpp}"),
                );
            }
        }
    }
    // the branch vertex's 2-edge degree cannot exceed the regime's max
    // degree; only the top regime leaves it open
    let d_hi = if psi.dhat == 6 {
        D2_MAX_ENUMERATED
    } else {
        psi.dhat as i64
    };
    for d in 3..=d_hi {
        let dd = d * d;
        for m in d..=(8 + dd + 1 + extra_m) {
            let a2 = m.min(dd);
            for c in caps(1, m - d + 1) {
                for cp in caps_or(1, m - d, 0) {
                    for cpp in caps_or(1, m - a2, 0) {
                        push(
                            out,
                            vec![
                                1.0 - psi.delta(m, d, c, cp),
                                d as f64 - psi.delta(m, a2, c, cpp),
                            ],
                            format!("d2={d} m={m} c={c} c'={cp} c''={cpp}"),
                        );
                    }
                }
            }
        }
    }
}

// degree-2 vertex with two 3-edges, one committing branch and one
// excluding branch whose follow-up rule is folded in
fn b6(psi: &PsiTable, out: &mut Raw) {
    let s = |m: i64| psi.psi_star(m);
    let cases: [(Vec<f64>, &str); 5] = [
        (vec![1.0 + s(5), psi.psi(2, 2)], "five new 2-edges"),
        (
            vec![1.0 + s(4), 2.0f64.min(psi.psi(4, 2))],
            "vertex-collapse follow-up",
        ),
        (
            vec![1.0 + s(4), 1.0 + s(3), 1.0 + psi.psi(2, 2)],
            "degree-2 follow-up a",
        ),
        (
            vec![1.0 + s(4), 2.0, 1.0 + s(2)],
            "degree-2 follow-up b",
        ),
        (
            vec![3.0f64.min(2.0 + psi.psi(1, 1)), psi.psi(2, 2)],
            "covered-pair follow-up",
        ),
    ];
    for (v, tag) in cases {
        push(out, v, tag.into());
    }
}

// fallback: branch on a max-degree vertex, folding in the rule applied to
// each child; the vector sets depend on the degree regime
fn b8(psi: &PsiTable, out: &mut Raw) {
    let s = |m: i64| psi.psi_star(m);
    let p = |m: i64, c: i64| psi.psi(m, c);
    match psi.dhat {
        3 => {} // at most one such split per path; no vector bound needed
        6 => push(out, vec![1.0, s(6)], "d>=6".into()),
        d4or5 => {
            let d = d4or5 as i64;
            let generic: [(Vec<f64>, String); 7] = [
                (vec![1.0, 1.0], "budget follow-up".into()),
                (vec![1.0, s(d + 1)], "2-edge gain".into()),
                (vec![1.0, 2.0, 2.0], "cycle follow-up".into()),
                (
                    vec![1.0, 1.0 + s(d - 1), 2.0 + s(d - 2)],
                    "deg2 follow-up a".into(),
                ),
                (vec![1.0, 2.0, 2.0 + s(d - 4)], "deg2 follow-up b".into()),
                (
                    vec![1.0, 1.0 + s(d + 1), 1.0 + p(d, d)],
                    "deg2 follow-up c".into(),
                ),
                (
                    vec![1.0, 2.0 + s(d - 3), 1.0 + s(d)],
                    "deg2 follow-up d".into(),
                ),
            ];
            for (v, tag) in generic {
                push(out, v, tag);
            }
            if d == 5 {
                let extra: [(Vec<f64>, &str); 4] = [
                    (vec![1.0, 1.0 + p(4, 4), 1.0 + s(6)], "split d2'=1"),
                    (vec![1.0, 1.0 + s(3), 2.0 + s(2)], "split d2'=2"),
                    (vec![1.0, 1.0 + s(2), 3.0], "split d2'=3"),
                    (vec![1.0, 1.0 + s(1), 4.0], "split d2'=4"),
                ];
                for (v, tag) in extra {
                    push(out, v, tag.into());
                }
            } else {
                b8_deg4(psi, out);
            }
        }
    }
}

// the max-degree-4 fallback needs the follow-up rules on both children
// folded in; suffix pairs come from the split child's own follow-up
fn b8_deg4(psi: &PsiTable, out: &mut Raw) {
    let s = |m: i64| psi.psi_star(m);
    let p = |m: i64, c: i64| psi.psi(m, c);
    // split child keeps one 2-edge: suffix (1+psi(3,3), 1+psi(5,*))
    let sfx1 = [1.0 + p(3, 3), 1.0 + s(5)];
    let one: Vec<(Vec<f64>, &str)> = vec![
        (vec![1.0, 1.0 + p(3, 3), 1.0 + s(6)], "d2'=1 deep"),
        (vec![2.0, sfx1[0], sfx1[1]], "d2'=1 budget"),
        (vec![1.0 + s(2), sfx1[0], sfx1[1]], "d2'=1 collapse"),
        (
            vec![2.0 + p(1, 1), 2.0 + p(1, 1), 4.0, sfx1[0], sfx1[1]],
            "d2'=1 pair",
        ),
        (
            vec![2.0 + s(4), 3.0, 3.0, sfx1[0], sfx1[1]],
            "d2'=1 quad",
        ),
        (
            vec![2.0 + s(5), 1.0 + p(2, 2), sfx1[0], sfx1[1]],
            "d2'=1 deg2 a",
        ),
        (
            vec![2.0 + s(4), 2.0f64.min(1.0 + p(4, 2)), sfx1[0], sfx1[1]],
            "d2'=1 deg2 b",
        ),
        (
            vec![2.0 + s(4), 2.0 + s(3), 2.0 + p(2, 2), sfx1[0], sfx1[1]],
            "d2'=1 deg2 c",
        ),
        (
            vec![2.0 + s(4), 3.0, 2.0 + s(2), sfx1[0], sfx1[1]],
            "d2'=1 deg2 d",
        ),
        (
            vec![4.0f64.min(3.0 + p(1, 1)), 1.0 + p(2, 2), sfx1[0], sfx1[1]],
            "d2'=1 deg2 e",
        ),
    ];
    // split child keeps two 2-edges: suffix (1+psi(2,*), 2+psi(2,*))
    let sfx2 = [1.0 + s(2), 2.0 + s(2)];
    let two: Vec<(Vec<f64>, &str)> = vec![
        (vec![2.0, 1.0 + s(2), 1.0 + s(2)], "d2'=2 budget"),
        (vec![1.0 + p(1, 1), sfx2[0], sfx2[1]], "d2'=2 collapse"),
        (
            vec![2.0 + p(1, 1), 2.0 + p(1, 1), 4.0, sfx2[0], sfx2[1]],
            "d2'=2 pair",
        ),
        (
            vec![2.0 + s(4), 3.0, 3.0, sfx2[0], sfx2[1]],
            "d2'=2 quad",
        ),
        (
            vec![2.0 + s(5), 1.0 + p(2, 2), sfx2[0], sfx2[1]],
            "d2'=2 deg2 a",
        ),
        (
            vec![2.0 + s(4), 2.0f64.min(1.0 + p(4, 2)), sfx2[0], sfx2[1]],
            "d2'=2 deg2 b",
        ),
        (
            vec![2.0 + s(4), 2.0 + s(3), 2.0 + p(2, 2), sfx2[0], sfx2[1]],
            "d2'=2 deg2 c",
        ),
        (
            vec![2.0 + s(4), 3.0, 2.0 + s(2), sfx2[0], sfx2[1]],
            "d2'=2 deg2 d",
        ),
        (
            vec![4.0f64.min(3.0 + p(1, 1)), 1.0 + p(2, 2), sfx2[0], sfx2[1]],
            "d2'=2 deg2 e",
        ),
    ];
    for (v, tag) in one.into_iter().chain(two) {
        push(out, v, tag.into());
    }
}

fn quantize(v: &[f64]) -> Vec<i64> {
    v.iter().map(|&x| (x * 1e9).round() as i64).collect()
}

fn dedupe(raw: Raw) -> Vec<(BranchingVector, String)> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for (entries, tag) in raw {
        if seen.insert(quantize(&entries)) {
            out.push((BranchingVector(entries), tag));
        }
    }
    out
}
