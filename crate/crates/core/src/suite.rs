//! Exhaustive property checks over a universe of algebras.
//!
//! Every row of the suite is one statement, named by its anchor label, and
//! is evaluated on each algebra that meets the row's hypotheses. All
//! quantifiers range over every element (or pair, triple, block) of the
//! algebra, so a pass on a universe is a proof for that universe.

use std::collections::VecDeque;
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::catalog::{enumerate_order, named_catalog};
use crate::error::{Error, Result};
use crate::structure::bounds::{sharp_bounds_with, SharpBounds};
use crate::structure::closure::{big_theta, maximal_family_sums, sigma_closure};
use crate::structure::compat::{are_compatible, is_internally_compatible};
use crate::structure::elements::{central_elements, is_boolean_subalgebra, meager_elements};
use crate::structure::heyting::heyting_block_check;
use crate::structure::order::{
    is_lattice, join_of_set, join_within, maximum, meet_within, poset_join, poset_meet,
};
use crate::structure::riesz::has_rdp;
use crate::structure::StructureReport;
use crate::table::ElementId;
use crate::triple::{
    check_idempotent, check_phi, extract_triple, reconstruct_tea, TripleMaps, TripleRep,
};

/// How many failing instances are kept per row.
const KEPT_FAILURES: usize = 5;

/// Largest algebra on which the subset-based block oracle runs.
const SUBSET_ORACLE_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Scope {
    All,
    SharpSubalgebra,
    SharplyDominating,
    Homogeneous,
    Qualifying,
}

impl Scope {
    fn label(self) -> &'static str {
        match self {
            Scope::All => "all",
            Scope::SharpSubalgebra => "Sh(E) sub-algebra",
            Scope::SharplyDominating => "sharply dominating",
            Scope::Homogeneous => "homogeneous",
            Scope::Qualifying => "homogeneous + s.d.",
        }
    }
}

/// One algebra with everything the checks share.
struct Subject<'a> {
    e: &'a FiniteEffectAlgebra,
    report: StructureReport,
    bounds: SharpBounds,
    sharp_sub: bool,
    triple: Option<std::result::Result<(TripleRep, TripleMaps), String>>,
}

impl<'a> Subject<'a> {
    fn new(e: &'a FiniteEffectAlgebra) -> Self {
        let report = StructureReport::compute(e);
        let bounds = sharp_bounds_with(e, &report.sharp);
        let sharp_sub = e.is_sub_effect_algebra(&report.sharp);
        let triple = report.qualifies().then(|| {
            let t = extract_triple(e).map_err(|err| err.to_string())?;
            let maps = TripleMaps::compute(&t).map_err(|err| err.to_string())?;
            Ok((t, maps))
        });
        Subject {
            e,
            report,
            bounds,
            sharp_sub,
            triple,
        }
    }

    fn applies(&self, scope: Scope) -> bool {
        let f = &self.report.flags;
        match scope {
            Scope::All => true,
            Scope::SharpSubalgebra => self.sharp_sub,
            Scope::SharplyDominating => f.sharply_dominating.holds,
            Scope::Homogeneous => f.homogeneous.holds,
            Scope::Qualifying => self.report.qualifies(),
        }
    }

    fn meet(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        poset_meet(self.e, x, y)
    }

    fn hat(&self, x: ElementId) -> Option<ElementId> {
        self.bounds.hat(x)
    }

    fn tilde(&self, x: ElementId) -> Option<ElementId> {
        self.bounds.tilde(x)
    }

    fn down(&self, x: ElementId) -> &ElementSet {
        self.e.down_set(x)
    }

    fn sup(&self, x: ElementId) -> ElementId {
        self.e.orthosupplement(x)
    }

    fn is_meager(&self, x: ElementId) -> bool {
        self.report.meager.contains(x)
    }

    fn is_sharp(&self, x: ElementId) -> bool {
        self.report.sharp.contains(x)
    }

    fn meager(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.report.meager.iter()
    }

    fn sharp(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.report.sharp.iter()
    }
}

#[derive(Default)]
struct Tally {
    cases: u64,
    failed: u64,
    examples: Vec<(Vec<ElementId>, String)>,
}

impl Tally {
    fn check(&mut self, ok: bool, witness: &[ElementId], detail: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.examples.len() < KEPT_FAILURES {
                self.examples.push((witness.to_vec(), detail()));
            }
        }
    }
}

struct Check {
    anchor: &'static str,
    clause: &'static str,
    scope: Scope,
    run: fn(&Subject, &mut Tally),
}

fn show(x: Option<ElementId>) -> String {
    x.map_or_else(|| "undefined".to_string(), |v| v.to_string())
}

fn interval(s: &Subject, a: ElementId, b: ElementId) -> ElementSet {
    s.e.up_set(a).intersection(s.down(b))
}

fn common_below(s: &Subject, x: ElementId, y: ElementId) -> ElementSet {
    s.down(x).intersection(s.down(y))
}

/// Sums of finite families of nonzero elements of `[0, x']` that stay below
/// `x`, with no meagerness constraint on the partial sums.
fn bounded_family_sums(s: &Subject, x: ElementId) -> ElementSet {
    let e = s.e;
    let steps: Vec<ElementId> = s.down(s.sup(x)).iter().filter(|&a| a != e.zero()).collect();
    let mut reached = ElementSet::from_ids(e.order(), [e.zero()]);
    let mut queue = VecDeque::from([e.zero()]);
    while let Some(v) = queue.pop_front() {
        for &a in &steps {
            if let Some(w) = e.sum(v, a) {
                if e.leq(w, x) && reached.insert(w) {
                    queue.push_back(w);
                }
            }
        }
    }
    reached
}

fn xshom(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for u in e.ids() {
        for v1 in s.sharp() {
            for v2 in e.ids() {
                let Some(w) = e.sum(v1, v2) else { continue };
                if e.leq(u, w) && e.leq(w, s.sup(u)) {
                    let m = s.meet(u, v1);
                    t.check(e.leq(u, v2) && m == Some(e.zero()), &[u, v1, v2], || {
                        format!("u <= v2 is {}, u ∧ v1 = {}", e.leq(u, v2), show(m))
                    });
                }
            }
        }
    }
}

fn modyjem(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for v in e.ids() {
        let sharp = s.is_sharp(v);
        let second = e.ids().all(|w| {
            let Some(z) = e.ominus(v, w) else { return true };
            common_below(s, w, s.sup(w)).iter().all(|y| e.leq(y, z))
        });
        let third = s.down(v).iter().all(|w| {
            let d = e.ominus(v, w).expect("w <= v");
            common_below(s, w, s.sup(w)) == common_below(s, w, d)
        });
        t.check(sharp == second && second == third, &[v], || {
            format!("(i) {sharp}, (ii) {second}, (iii) {third}")
        });
    }
}

fn soucethat(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for w in s.sharp() {
        for y in s.down(w).iter() {
            if y == e.zero() {
                continue;
            }
            let mut k = 1;
            while let Some(ky) = e.multiple(k, y) {
                t.check(e.leq(ky, w), &[y, w], || {
                    format!("{k}·{y} = {ky} is not below {w}")
                });
                k += 1;
            }
        }
    }
}

fn suplem(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        let xc = s.sup(x);
        if let Some(h) = s.hat(x) {
            let a = e.ominus(h, x);
            let b = e.ominus(xc, s.sup(h));
            let c = s.tilde(xc).and_then(|tc| e.ominus(xc, tc));
            t.check(a.is_some() && a == b && b == c, &[x], || {
                format!(
                    "x^ - x = {}, x' - (x^)' = {}, x' - (x')~ = {}",
                    show(a),
                    show(b),
                    show(c)
                )
            });
        }
        if let Some(l) = s.tilde(x) {
            let a = e.ominus(x, l);
            let b = e.ominus(s.sup(l), xc);
            let c = s.hat(xc).and_then(|hc| e.ominus(hc, xc));
            t.check(a.is_some() && a == b && b == c, &[x], || {
                format!(
                    "x - x~ = {}, (x~)' - x' = {}, (x')^ - x' = {}",
                    show(a),
                    show(b),
                    show(c)
                )
            });
        }
    }
}

fn dusuplem(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        if let Some(h) = s.hat(x) {
            let d = e.ominus(h, x).expect("x <= x^");
            for y in e.ids() {
                let left = e.leq(y, d);
                let right = e.leq(y, s.sup(x)) && e.sum(x, y).and_then(|z| s.hat(z)) == Some(h);
                t.check(left == right, &[x, y], || {
                    format!("y <= x^ - x is {left}, right side {right}")
                });
            }
        }
        if let Some(l) = s.tilde(x) {
            let d = e.ominus(x, l).expect("x~ <= x");
            for y in e.ids() {
                let left = e.leq(y, d);
                let right = e.leq(y, x) && e.ominus(x, y).and_then(|z| s.tilde(z)) == Some(l);
                t.check(left == right, &[x, y], || {
                    format!("y <= x - x~ is {left}, right side {right}")
                });
            }
        }
    }
}

fn xssuplem(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        let base = common_below(s, x, s.sup(x));
        let lower = s.tilde(x).map(|l| e.ominus(x, l).expect("x~ <= x"));
        let upper = s.hat(x).map(|h| e.ominus(h, x).expect("x <= x^"));
        if let Some(m) = lower {
            let ok = base == common_below(s, m, s.sup(x)) && base == common_below(s, m, s.sup(m));
            t.check(ok, &[x], || "identity (i) fails".into());
        }
        if let Some(d) = upper {
            let ok = base == common_below(s, x, d) && base == common_below(s, s.sup(d), d);
            t.check(ok, &[x], || "identity (ii) fails".into());
        }
        if let (Some(m), Some(d)) = (lower, upper) {
            t.check(base == common_below(s, m, d), &[x], || {
                "identity (iii) fails".into()
            });
        }
    }
}

fn exssuplem(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        let Some(l) = s.tilde(x) else { continue };
        let m = e.ominus(x, l).expect("x~ <= x");
        for v in bounded_family_sums(s, x).iter() {
            let rest = e.ominus(x, v).and_then(|r| s.tilde(r));
            t.check(e.leq(v, m) && rest == Some(l), &[x, v], || {
                format!(
                    "family sum {v} vs x - x~ = {m}; (x - {v})~ = {}",
                    show(rest)
                )
            });
        }
    }
}

fn hatrozdilu(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        let (h, l) = (s.hat(x).expect("s.d."), s.tilde(x).expect("s.d."));
        let a = e.ominus(x, l).and_then(|v| s.hat(v));
        let b = e.ominus(h, x).and_then(|v| s.hat(v));
        let c = e.ominus(h, l);
        t.check(a.is_some() && a == b && b == c, &[x], || {
            format!("{} / {} / {}", show(a), show(b), show(c))
        });
    }
}

fn jmpy2_first(s: &Subject, t: &mut Tally) {
    for x in s.meager() {
        if let Some(h) = s.hat(x) {
            let d = s.e.ominus(h, x).expect("x <= x^");
            t.check(s.is_meager(d), &[x], || {
                format!("x^ - x = {d} is not meager")
            });
        }
    }
}

fn jmpy2_second(s: &Subject, t: &mut Tally) {
    for x in s.meager() {
        for y in s.meager() {
            let Some(z) = s.e.sum(x, y) else { continue };
            if s.is_sharp(z) {
                t.check(s.hat(x) == Some(z), &[x, y], || {
                    format!("x^ = {}, x + y = {z}", show(s.hat(x)))
                });
            }
        }
    }
}

fn jpy2(s: &Subject, t: &mut Tally) {
    let e = s.e;
    let lattice = s.report.flags.lattice.holds;
    for x in e.ids() {
        let Some(l) = s.tilde(x) else { continue };
        let m = e.ominus(x, l).expect("x~ <= x");
        let pairs: Vec<(ElementId, ElementId)> = s
            .sharp()
            .flat_map(|a| {
                s.meager()
                    .filter(move |&b| e.sum(a, b) == Some(x))
                    .map(move |b| (a, b))
            })
            .collect();
        let joined = !lattice || poset_join(e, l, m) == Some(x);
        let ok = s.is_meager(m) && pairs == [(l, m)] && s.meet(l, m) == Some(e.zero()) && joined;
        t.check(ok, &[x], || {
            format!("decompositions {pairs:?}, expected ({l}, {m})")
        });
    }
}

fn gejzapulm_first(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for c in s.report.center.iter() {
        for x in e.ids() {
            for y in e.ids() {
                let Some(z) = e.sum(x, y) else { continue };
                let left = s.meet(c, z);
                let right = s
                    .meet(c, x)
                    .zip(s.meet(c, y))
                    .and_then(|(a, b)| e.sum(a, b));
                t.check(left.is_some() && left == right, &[c, x, y], || {
                    format!(
                        "c ∧ (x + y) = {}, (c ∧ x) + (c ∧ y) = {}",
                        show(left),
                        show(right)
                    )
                });
            }
        }
    }
}

fn gejzapulm_second(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for c in s.report.center.iter() {
        for d in s.report.center.iter() {
            let Some(cd) = e.sum(c, d) else { continue };
            for x in e.ids() {
                let left = s.meet(x, cd);
                let right = s
                    .meet(x, c)
                    .zip(s.meet(x, d))
                    .and_then(|(a, b)| e.sum(a, b));
                t.check(left.is_some() && left == right, &[x, c, d], || {
                    format!(
                        "x ∧ (c + d) = {}, (x ∧ c) + (x ∧ d) = {}",
                        show(left),
                        show(right)
                    )
                });
            }
        }
    }
}

fn gejzasum_classes(s: &Subject, t: &mut Tally) {
    let f = &s.report.flags;
    let homogeneous = f.homogeneous.holds;
    t.check(!f.orthoalgebra.holds || homogeneous, &[], || {
        "orthoalgebra that is not homogeneous".into()
    });
    t.check(!f.lattice.holds || homogeneous, &[], || {
        "lattice that is not homogeneous".into()
    });
    let compatible = is_internally_compatible(s.e, &s.e.all());
    t.check(f.rdp.holds == (homogeneous && compatible), &[], || {
        format!(
            "RDP {}, homogeneous {homogeneous}, compatible {compatible}",
            f.rdp.holds
        )
    });
}

/// Inclusion-maximal sub-effect algebras with RDP, by brute force over all
/// subsets containing 0 and 1.
fn maximal_rdp_subalgebras(e: &FiniteEffectAlgebra) -> Vec<ElementSet> {
    let inner: Vec<ElementId> = e.ids().filter(|&x| x != e.zero() && x != e.one()).collect();
    let mut found: Vec<ElementSet> = Vec::new();
    for mask in 0u64..(1u64 << inner.len()) {
        let mut set = ElementSet::from_ids(e.order(), [e.zero(), e.one()]);
        for (i, &x) in inner.iter().enumerate() {
            if mask >> i & 1 == 1 {
                set.insert(x);
            }
        }
        if !e.is_sub_effect_algebra(&set) {
            continue;
        }
        if e.restrict(&set).map(|(b, _)| has_rdp(&b)).unwrap_or(false) {
            found.push(set);
        }
    }
    let mut maximal: Vec<ElementSet> = found
        .iter()
        .filter(|a| !found.iter().any(|b| b != *a && a.is_subset(b)))
        .cloned()
        .collect();
    maximal.sort_by_key(|b| b.to_vec());
    maximal
}

fn gejzasum_blocks(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for b in &s.report.blocks {
        let ok = b.contains(e.one()) && is_internally_compatible(e, b);
        t.check(ok, &b.to_vec(), || {
            "block lacks 1 or is not internally compatible".into()
        });
    }
    if e.order() <= SUBSET_ORACLE_MAX_ORDER {
        let oracle = maximal_rdp_subalgebras(e);
        t.check(oracle == s.report.blocks, &[], || {
            format!(
                "maximal RDP sub-algebras {:?} vs blocks {:?}",
                oracle.iter().map(ElementSet::to_vec).collect::<Vec<_>>(),
                s.report
                    .blocks
                    .iter()
                    .map(ElementSet::to_vec)
                    .collect::<Vec<_>>()
            )
        });
    }
}

fn gejzasum_cover(s: &Subject, t: &mut Tally) {
    let e = s.e;
    let mut union = ElementSet::empty(e.order());
    for b in &s.report.blocks {
        union.union_with(b);
    }
    t.check(union == e.all(), &[], || {
        let mut missing = e.all();
        missing.difference_with(&union);
        format!("blocks miss {:?}", missing.to_vec())
    });
    for x in e.ids() {
        for y in e.ids().skip(x.index()) {
            if are_compatible(e, x, y) {
                let inside = s
                    .report
                    .blocks
                    .iter()
                    .any(|b| b.contains(x) && b.contains(y));
                t.check(inside, &[x, y], || {
                    "compatible pair in no common block".into()
                });
            }
        }
    }
}

fn gejzasum_sharp(s: &Subject, t: &mut Tally) {
    t.check(s.sharp_sub, &[], || {
        "Sh(E) is not a sub-effect algebra".into()
    });
}

fn gejzasum_center(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        let (algebra, embed) = s.e.restrict(b).expect("blocks are sub-effect algebras");
        let center = ElementSet::from_ids(
            s.e.order(),
            central_elements(&algebra).iter().map(|c| embed[c.index()]),
        );
        let expected = s.report.sharp.intersection(b);
        t.check(center == expected, &b.to_vec(), || {
            format!(
                "C(B) = {:?}, Sh(E) ∩ B = {:?}",
                center.to_vec(),
                expected.to_vec()
            )
        });
    }
}

fn gejzasum_lower(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        for x in b.iter() {
            let below = common_below(s, x, s.sup(x));
            t.check(below.is_subset(b), &[x], || {
                format!("[0, x] ∩ [0, x'] = {:?} leaves the block", below.to_vec())
            });
        }
    }
}

fn ordinffin(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for y in e.ids().filter(|&y| y != e.zero()) {
        let crate::OrdValue::Finite(n) = e.ord(y) else {
            t.check(false, &[y], || "infinite order in a finite algebra".into());
            continue;
        };
        for k in 0..=n / 2 {
            let ky = e.multiple(k, y);
            let ok = ky.is_some_and(|v| s.report.hypermeager.contains(v));
            t.check(ok, &[y], || {
                format!("{k}·{y} = {} is not hypermeager", show(ky))
            });
        }
    }
}

fn archim(s: &Subject, t: &mut Tally) {
    let e = s.e;
    let whole = e.is_archimedean();
    let mea = e
        .restrict_generalized(&s.report.meager)
        .map(|(g, _)| g.is_archimedean());
    let hmea = e
        .restrict_generalized(&s.report.hypermeager)
        .map(|(g, _)| g.is_archimedean());
    t.check(
        mea.as_ref().ok() == Some(&whole) && hmea.as_ref().ok() == Some(&whole),
        &[],
        || format!("E {whole}, Mea {mea:?}, HMea {hmea:?}"),
    );
}

fn archimde(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids().filter(|&x| x != e.zero()) {
        t.check(matches!(e.ord(x), crate::OrdValue::Finite(_)), &[x], || {
            "infinite order".into()
        });
    }
    t.check(e.is_archimedean(), &[], || "not Archimedean".into());
}

fn gejzaoch(s: &Subject, t: &mut Tally) {
    let gap = s.bounds.first_gap();
    t.check(
        gap.is_none(),
        &gap.map(|(x, _)| vec![x]).unwrap_or_default(),
        || format!("missing {} sharp bound", gap.map_or("", |(_, w)| w)),
    );
}

fn blockua(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        let theta = big_theta(s.e, b);
        let sigma = sigma_closure(s.e, b);
        t.check(&theta == b && &sigma == b, &b.to_vec(), || {
            format!(
                "Theta(B) = {:?}, sigma(B) = {:?}",
                theta.to_vec(),
                sigma.to_vec()
            )
        });
    }
}

fn cduya(s: &Subject, t: &mut Tally) {
    let meager = &s.report.meager;
    for x in s.meager() {
        let sums = maximal_family_sums(s.e, meager, x);
        t.check(sums == [x], &[x], || {
            format!("maximal family sums {sums:?}")
        });
    }
}

fn corcduya(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in e.ids() {
        let l = s.tilde(x).expect("s.d.");
        let h = s.hat(x).expect("s.d.");
        let sums = bounded_family_sums(s, x);
        let sups = s.down(s.sup(x));
        for v in sums.iter() {
            let extendable = sups
                .iter()
                .any(|a| a != e.zero() && e.sum(v, a).is_some_and(|w| e.leq(w, x)));
            if !extendable {
                t.check(e.sum(l, v) == Some(x), &[x, v], || {
                    format!("x~ + {v} = {}", show(e.sum(l, v)))
                });
            }
        }
        for b in s.report.blocks.iter().filter(|b| b.contains(x)) {
            let ok = interval(s, l, x).is_subset(b) && interval(s, x, h).is_subset(b);
            t.check(ok, &[x], || {
                format!("[x~, x] or [x, x^] leaves block {:?}", b.to_vec())
            });
        }
    }
}

fn duscduya(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        for x in s.meager().filter(|&x| b.contains(x)) {
            t.check(s.down(x).is_subset(b), &[x], || {
                format!("[0, x] leaves block {:?}", b.to_vec())
            });
        }
        let (algebra, embed) = s.e.restrict(b).expect("blocks are sub-effect algebras");
        let inner = meager_elements(&algebra)
            .iter()
            .map(|m| embed[m.index()])
            .collect::<Vec<_>>();
        let ok = inner.iter().all(|&m| s.is_meager(m));
        t.check(ok, &b.to_vec(), || {
            format!("Mea(B) = {inner:?} not inside Mea(E)")
        });
    }
}

fn ocmdcduya(s: &Subject, t: &mut Tally) {
    // [0, 0] is a one-element lattice and is not an effect algebra.
    for x in s.meager().filter(|&x| x != s.e.zero()) {
        let (interval, _) = s.e.interval(x).expect("intervals are effect algebras");
        let lattice = is_lattice(&interval);
        let rdp = has_rdp(&interval);
        t.check(lattice && rdp, &[x], || {
            format!("[0, x]: lattice {lattice}, RDP {rdp}")
        });
    }
}

fn minimax(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for y in s.meager() {
        for z in s.meager() {
            let lower = common_below(s, y, z);
            let maximal: Vec<ElementId> = lower
                .iter()
                .filter(|&m| lower.iter().all(|w| w == m || !e.leq(m, w)))
                .collect();
            for w in lower.iter() {
                t.check(maximal.iter().any(|&m| e.leq(w, m)), &[y, z, w], || {
                    "lower bound below no maximal one".into()
                });
            }
        }
    }
}

fn dusminimax(s: &Subject, t: &mut Tally) {
    let meager = &s.report.meager;
    for x in s.meager() {
        for y in s.meager() {
            let inside = meet_within(s.e, meager, x, y);
            let outside = s.meet(x, y);
            t.check(inside.is_some() && inside == outside, &[x, y], || {
                format!("meet in Mea(E) {}, in E {}", show(inside), show(outside))
            });
        }
    }
}

fn meetmodjen(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for b in &s.report.blocks {
        for x in b.iter() {
            for y in b.iter() {
                if meet_within(e, b, x, y) == Some(e.zero()) {
                    let (hx, hy) = (s.hat(x).expect("s.d."), s.hat(y).expect("s.d."));
                    let m = s.meet(hx, hy);
                    t.check(m == Some(e.zero()), &[x, y], || {
                        format!("x^ ∧ y^ = {}", show(m))
                    });
                }
            }
        }
    }
}

fn blocksar(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for b in &s.report.blocks {
        let (algebra, _) = e.restrict(b).expect("blocks are sub-effect algebras");
        t.check(is_lattice(&algebra), &b.to_vec(), || {
            "block is not a lattice".into()
        });
        let meet_b = |x, y| meet_within(e, b, x, y);
        let parts = |x| {
            let l = s.tilde(x).expect("s.d.");
            (l, e.ominus(x, l).expect("x~ <= x"))
        };
        for y in b.iter() {
            for z in b.iter() {
                let ((ys, ym), (zs, zm)) = (parts(y), parts(z));
                let c = [
                    meet_b(ys, zs),
                    meet_b(ys, zm),
                    meet_b(zs, ym),
                    meet_b(ym, zm),
                ]
                .into_iter()
                .try_fold(e.zero(), |acc, m| m.and_then(|m| e.sum(acc, m)));
                let expected = meet_b(y, z);
                t.check(c.is_some() && c == expected, &[y, z], || {
                    format!("four-part sum {}, y ∧_B z = {}", show(c), show(expected))
                });
            }
        }
    }
}

fn ycoveredhea(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        let verdict = heyting_block_check(s.e, &s.bounds, b);
        t.check(verdict.is_ok(), &b.to_vec(), || {
            verdict.unwrap_err().to_string()
        });
    }
}

/// Triples `(B, x, y)` with `x, y` meager in a common block `B`.
fn meager_pairs_in_blocks<'s>(
    s: &'s Subject,
) -> impl Iterator<Item = (&'s ElementSet, ElementId, ElementId)> + 's {
    s.report.blocks.iter().flat_map(move |b| {
        let inner: Vec<ElementId> = s.meager().filter(|&x| b.contains(x)).collect();
        let pairs: Vec<(ElementId, ElementId)> = inner
            .iter()
            .flat_map(|&x| inner.iter().map(move |&y| (x, y)))
            .collect();
        pairs.into_iter().map(move |(x, y)| (b, x, y))
    })
}

fn modjen_first(s: &Subject, t: &mut Tally) {
    for b in &s.report.blocks {
        for y in s.meager().filter(|&y| b.contains(y)) {
            for v in b.iter() {
                let outer = s.meet(v, y);
                let inner = meet_within(s.e, b, v, y);
                t.check(outer.is_some() && outer == inner, &[v, y], || {
                    format!("v ∧ y = {}, v ∧_B y = {}", show(outer), show(inner))
                });
            }
        }
    }
}

fn modjen_same_hat(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for (b, x, y) in meager_pairs_in_blocks(s) {
        let h = s.hat(x).expect("s.d.");
        if s.hat(y) != Some(h) {
            continue;
        }
        let m = s.meet(x, y).expect("meager meets exist");
        let rest = e.ominus(h, m).expect("x ∧ y <= x^");
        t.check(s.is_meager(rest), &[x, y], || {
            format!("x^ - (x ∧ y) = {rest} is not meager")
        });
        let in_mea = join_within(e, &s.report.meager, x, y);
        let in_block = join_within(e, b, x, y);
        let in_interval = join_within(e, s.down(h), x, y);
        t.check(
            in_mea.is_some() && in_mea == in_block && in_block == in_interval,
            &[x, y],
            || {
                format!(
                    "joins {} / {} / {}",
                    show(in_mea),
                    show(in_block),
                    show(in_interval)
                )
            },
        );
        t.check(s.hat(m) == Some(h), &[x, y], || {
            format!("(x ∧ y)^ = {}", show(s.hat(m)))
        });
    }
}

fn modjen_split(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for b in &s.report.blocks {
        for x in s.meager().filter(|&x| b.contains(x)) {
            for v in b.iter().filter(|&v| e.leq(x, v)) {
                let vs = s.tilde(v).expect("s.d.");
                let vm = e.ominus(v, vs).expect("v~ <= v");
                let split = s
                    .meet(x, vs)
                    .zip(s.meet(x, vm))
                    .and_then(|(a, c)| e.sum(a, c));
                t.check(split == Some(x), &[x, v], || {
                    format!("(x ∧ v_S) + (x ∧ v_M) = {}", show(split))
                });
            }
        }
    }
}

/// Compatibility inside `Mea(E)`: all of `p, q, r` and the partial sums stay
/// meager.
fn meager_compatible(s: &Subject, x: ElementId, y: ElementId) -> bool {
    let e = s.e;
    s.down(x).iter().any(|q| {
        let Some(r) = e.ominus(y, q) else {
            return false;
        };
        e.sum(x, r).is_some_and(|total| s.is_meager(total))
    }) && s.is_meager(x)
        && s.is_meager(y)
}

fn modchov(s: &Subject, t: &mut Tally) {
    let e = s.e;
    for x in s.meager() {
        for y in s.meager() {
            let first = are_compatible(e, x, y);
            let second = meager_compatible(s, x, y);
            let join = join_within(e, &s.report.meager, x, y);
            let third = match (join, s.meet(x, y)) {
                (Some(j), Some(m)) => e.ominus(j, y) == e.ominus(x, m),
                _ => false,
            };
            t.check(first == second && second == third, &[x, y], || {
                format!("(i) {first}, (ii) {second}, (iii) {third}")
            });
        }
    }
}

fn principal_sharp(s: &Subject, t: &mut Tally) {
    for x in s.report.principal.iter() {
        t.check(s.is_sharp(x), &[x], || "principal but not sharp".into());
    }
    for x in s.report.center.iter() {
        t.check(s.report.principal.contains(x), &[x], || {
            "central but not principal".into()
        });
    }
}

fn center_boolean(s: &Subject, t: &mut Tally) {
    let e = s.e;
    let center = &s.report.center;
    t.check(is_boolean_subalgebra(e, center), &center.to_vec(), || {
        "C(E) is not a Boolean sub-algebra".into()
    });
    for c in center.iter() {
        for y in e.ids() {
            let split = s
                .meet(y, c)
                .zip(s.meet(y, s.sup(c)))
                .and_then(|(a, b)| e.sum(a, b));
            t.check(split == Some(y), &[c, y], || {
                format!("(y ∧ c) + (y ∧ c') = {}", show(split))
            });
        }
    }
}

/// Runs `f` on the extracted triple, or records the extraction failure.
fn with_triple(s: &Subject, t: &mut Tally, f: impl FnOnce(&TripleRep, &TripleMaps, &mut Tally)) {
    match &s.triple {
        Some(Ok((triple, maps))) => f(triple, maps, t),
        Some(Err(msg)) => t.check(false, &[], || msg.clone()),
        None => {}
    }
}

fn m1(s: &Subject, t: &mut Tally) {
    with_triple(s, t, |triple, maps, t| {
        let back = triple.back_maps().expect("extracted");
        for (x, &xe) in back.meager.iter().enumerate() {
            let via = back.sharp[maps.hat(ElementId::new(x)).index()];
            t.check(Some(via) == s.hat(xe), &[xe], || {
                format!("triple gives {via}, E gives {}", show(s.hat(xe)))
            });
        }
    });
}

fn m2(s: &Subject, t: &mut Tally) {
    let e = s.e;
    with_triple(s, t, |triple, maps, t| {
        let back = triple.back_maps().expect("extracted");
        for (si, &se) in back.sharp.iter().enumerate() {
            for (xi, &xe) in back.meager.iter().enumerate() {
                let below = s.report.meager.intersection(&common_below(s, xe, se));
                let join = join_of_set(e, &s.report.meager, &below);
                let meet = s.meet(xe, se);
                let mut ok = join.is_some();
                if let Some(m) = meet {
                    ok &= s.is_meager(m) && Some(m) == join;
                }
                if are_compatible(e, xe, se) {
                    ok &= meet.is_some() && meet == join;
                }
                let pi = maps
                    .pi(ElementId::new(si), ElementId::new(xi))
                    .map(|p| back.meager[p.index()]);
                ok &= pi == meet;
                t.check(ok, &[xe, se], || {
                    format!(
                        "join {}, x ∧ s = {}, pi_s(x) = {}",
                        show(join),
                        show(meet),
                        show(pi)
                    )
                });
            }
        }
    });
}

fn m3(s: &Subject, t: &mut Tally) {
    let e = s.e;
    with_triple(s, t, |triple, maps, t| {
        let back = triple.back_maps().expect("extracted");
        for (x, &xe) in back.meager.iter().enumerate() {
            let r = back.meager[maps.r(ElementId::new(x)).index()];
            let direct = s.hat(xe).and_then(|h| e.ominus(h, xe));
            t.check(Some(r) == direct, &[xe], || {
                format!("R(x) = {r}, x^ - x = {}", show(direct))
            });
        }
    });
}

fn m4(s: &Subject, t: &mut Tally) {
    let e = s.e;
    with_triple(s, t, |triple, maps, t| {
        let back = triple.back_maps().expect("extracted");
        for (x, &xe) in back.meager.iter().enumerate() {
            for (y, &ye) in back.meager.iter().enumerate() {
                let set = ElementSet::from_ids(
                    e.order(),
                    s.sharp().filter(|&z| {
                        let parts = s.meet(z, xe).zip(s.meet(z, ye));
                        parts.and_then(|(a, b)| e.sum(a, b)) == Some(z)
                    }),
                );
                let direct = maximum(e, &set);
                let via = maps
                    .s_map(ElementId::new(x), ElementId::new(y))
                    .map(|z| back.sharp[z.index()]);
                t.check(via == direct, &[xe, ye], || {
                    format!("triple gives {}, E gives {}", show(via), show(direct))
                });
            }
        }
    });
}

fn pommeag(s: &Subject, t: &mut Tally) {
    let e = s.e;
    with_triple(s, t, |triple, maps, t| {
        let back = triple.back_maps().expect("extracted");
        for (x, &xe) in back.meager.iter().enumerate() {
            for (y, &ye) in back.meager.iter().enumerate() {
                let direct = e.sum(xe, ye);
                let top = maps
                    .s_map(ElementId::new(x), ElementId::new(y))
                    .map(|z| back.sharp[z.index()]);
                let rest = top.and_then(|z| {
                    let dx = e.ominus(xe, s.meet(z, xe)?)?;
                    let dy = e.ominus(ye, s.meet(z, ye)?)?;
                    let d = e.sum(dx, dy).filter(|&d| s.is_meager(d))?;
                    (e.leq(d, s.sup(z))).then_some((z, d))
                });
                let rebuilt = rest.and_then(|(z, d)| e.sum(z, d));
                t.check(
                    direct.is_some() == rest.is_some() && (direct.is_none() || direct == rebuilt),
                    &[xe, ye],
                    || format!("x + y = {}, via S = {}", show(direct), show(rebuilt)),
                );
            }
        }
    });
}

fn tripletheor_phi(s: &Subject, t: &mut Tally) {
    with_triple(s, t, |triple, _, t| {
        let verdict =
            reconstruct_tea(&triple.stripped()).and_then(|tea| check_phi(s.e, triple, &tea));
        match verdict {
            Ok(Ok(_)) => t.check(true, &[], String::new),
            Ok(Err(failure)) => t.check(false, &[], || failure.to_string()),
            Err(err) => t.check(false, &[], || err.to_string()),
        }
    });
}

fn tripletheor_pure(s: &Subject, t: &mut Tally) {
    with_triple(s, t, |triple, _, t| {
        let full = reconstruct_tea(triple).map_err(|e| e.to_string());
        let stripped = reconstruct_tea(&triple.stripped()).map_err(|e| e.to_string());
        t.check(full.is_ok() && full == stripped, &[], || {
            "stripped triple rebuilds a different table".into()
        });
    });
}

fn tripletheor_idempotent(s: &Subject, t: &mut Tally) {
    with_triple(s, t, |triple, _, t| {
        let verdict = reconstruct_tea(triple).and_then(|tea| check_idempotent(triple, &tea));
        t.check(verdict.is_ok(), &[], || verdict.unwrap_err().to_string());
    });
}

static CHECKS: &[Check] = &[
    Check {
        anchor: "center",
        clause: "principal ⊆ Sh(E), C(E) ⊆ principal",
        scope: Scope::All,
        run: principal_sharp,
    },
    Check {
        anchor: "center",
        clause: "C(E) Boolean, y = (y∧c) + (y∧c')",
        scope: Scope::All,
        run: center_boolean,
    },
    Check {
        anchor: "gejzapulm",
        clause: "(i) c∧(x+y) = (c∧x)+(c∧y)",
        scope: Scope::All,
        run: gejzapulm_first,
    },
    Check {
        anchor: "gejzapulm",
        clause: "(ii) x∧(c+d) = (x∧c)+(x∧d)",
        scope: Scope::All,
        run: gejzapulm_second,
    },
    Check {
        anchor: "gejzasum",
        clause: "(i)-(iii) orthoalgebra/lattice/RDP",
        scope: Scope::All,
        run: gejzasum_classes,
    },
    Check {
        anchor: "gejzasum",
        clause: "(iv) blocks = maximal RDP sub-algebras",
        scope: Scope::Homogeneous,
        run: gejzasum_blocks,
    },
    Check {
        anchor: "gejzasum",
        clause: "(v) blocks cover E",
        scope: Scope::Homogeneous,
        run: gejzasum_cover,
    },
    Check {
        anchor: "gejzasum",
        clause: "(vi) Sh(E) sub-algebra",
        scope: Scope::Homogeneous,
        run: gejzasum_sharp,
    },
    Check {
        anchor: "gejzasum",
        clause: "(vii) C(B) = Sh(E) ∩ B",
        scope: Scope::Homogeneous,
        run: gejzasum_center,
    },
    Check {
        anchor: "gejzasum",
        clause: "(viii) [0,x]∩[0,x'] ⊆ B",
        scope: Scope::Homogeneous,
        run: gejzasum_lower,
    },
    Check {
        anchor: "xshom",
        clause: "u <= v2 and u∧v1 = 0",
        scope: Scope::Homogeneous,
        run: xshom,
    },
    Check {
        anchor: "ordinffin",
        clause: "k·y hypermeager for k <= ord(y)/2",
        scope: Scope::All,
        run: ordinffin,
    },
    Check {
        anchor: "archim",
        clause: "E, Mea(E), HMea(E) Archimedean alike",
        scope: Scope::All,
        run: archim,
    },
    Check {
        anchor: "jmpy2",
        clause: "(i) x^ - x meager",
        scope: Scope::SharpSubalgebra,
        run: jmpy2_first,
    },
    Check {
        anchor: "jmpy2",
        clause: "(ii) x + y sharp => x^ = x + y",
        scope: Scope::SharpSubalgebra,
        run: jmpy2_second,
    },
    Check {
        anchor: "jpy2",
        clause: "unique x = x_S + x_M",
        scope: Scope::SharpSubalgebra,
        run: jpy2,
    },
    Check {
        anchor: "gejzaoch",
        clause: "homogeneous finite => s.d.",
        scope: Scope::Homogeneous,
        run: gejzaoch,
    },
    Check {
        anchor: "modyjem",
        clause: "(i) <=> (ii) <=> (iii)",
        scope: Scope::Homogeneous,
        run: modyjem,
    },
    Check {
        anchor: "soucethat",
        clause: "y <= w sharp => k·y <= w",
        scope: Scope::Homogeneous,
        run: soucethat,
    },
    Check {
        anchor: "hatrozdilu",
        clause: "(x - x~)^ = (x^ - x)^ = x^ - x~",
        scope: Scope::SharplyDominating,
        run: hatrozdilu,
    },
    Check {
        anchor: "suplem",
        clause: "(i), (ii) difference identities",
        scope: Scope::All,
        run: suplem,
    },
    Check {
        anchor: "dusuplem",
        clause: "(i), (ii) characterizations",
        scope: Scope::All,
        run: dusuplem,
    },
    Check {
        anchor: "xssuplem",
        clause: "(i)-(iii) interval identities",
        scope: Scope::Homogeneous,
        run: xssuplem,
    },
    Check {
        anchor: "exssuplem",
        clause: "family sums below x - x~",
        scope: Scope::Homogeneous,
        run: exssuplem,
    },
    Check {
        anchor: "blockua",
        clause: "sigma(B) = Theta(B) = B",
        scope: Scope::Qualifying,
        run: blockua,
    },
    Check {
        anchor: "cduya",
        clause: "maximal family sums to x",
        scope: Scope::Qualifying,
        run: cduya,
    },
    Check {
        anchor: "corcduya",
        clause: "x = x~ + sum; [x~,x], [x,x^] ⊆ B",
        scope: Scope::Qualifying,
        run: corcduya,
    },
    Check {
        anchor: "duscduya",
        clause: "[0,x] ⊆ B, Mea(B) ⊆ Mea(E)",
        scope: Scope::Qualifying,
        run: duscduya,
    },
    Check {
        anchor: "ocmdcduya",
        clause: "[0,x] lattice with RDP",
        scope: Scope::Qualifying,
        run: ocmdcduya,
    },
    Check {
        anchor: "minimax",
        clause: "lower bounds below maximal ones",
        scope: Scope::All,
        run: minimax,
    },
    Check {
        anchor: "dusminimax",
        clause: "Mea(E) meet semilattice",
        scope: Scope::Qualifying,
        run: dusminimax,
    },
    Check {
        anchor: "meetmodjen",
        clause: "x ∧_B y = 0 => x^ ∧ y^ = 0",
        scope: Scope::Qualifying,
        run: meetmodjen,
    },
    Check {
        anchor: "blocksar",
        clause: "blocks are lattices, four-part meet",
        scope: Scope::Qualifying,
        run: blocksar,
    },
    Check {
        anchor: "archimde",
        clause: "Archimedean",
        scope: Scope::Qualifying,
        run: archimde,
    },
    Check {
        anchor: "ycoveredhea",
        clause: "blocks Heyting, x* = (x^)'",
        scope: Scope::Qualifying,
        run: ycoveredhea,
    },
    Check {
        anchor: "modjen",
        clause: "(i) v ∧ y = v ∧_B y",
        scope: Scope::Qualifying,
        run: modjen_first,
    },
    Check {
        anchor: "modjen",
        clause: "(ii)-(iv) equal sharp covers",
        scope: Scope::Qualifying,
        run: modjen_same_hat,
    },
    Check {
        anchor: "modjen",
        clause: "(v) x = (x∧v_S) + (x∧v_M)",
        scope: Scope::Qualifying,
        run: modjen_split,
    },
    Check {
        anchor: "modchov",
        clause: "(i) <=> (ii) <=> (iii)",
        scope: Scope::Qualifying,
        run: modchov,
    },
    Check {
        anchor: "tripletheor",
        clause: "(M1) hat from the triple",
        scope: Scope::Qualifying,
        run: m1,
    },
    Check {
        anchor: "m2",
        clause: "(M2) pi_s(x) = x ∧ s",
        scope: Scope::Qualifying,
        run: m2,
    },
    Check {
        anchor: "m3",
        clause: "(M3) R(x) = x^ - x",
        scope: Scope::Qualifying,
        run: m3,
    },
    Check {
        anchor: "tripletheor",
        clause: "(M4) S(x,y) = top of the set",
        scope: Scope::Qualifying,
        run: m4,
    },
    Check {
        anchor: "pommeag",
        clause: "x + y via S(x,y)",
        scope: Scope::Qualifying,
        run: pommeag,
    },
    Check {
        anchor: "tripletheor",
        clause: "phi is an isomorphism",
        scope: Scope::Qualifying,
        run: tripletheor_phi,
    },
    Check {
        anchor: "tripletheor",
        clause: "rebuild ignores back-maps",
        scope: Scope::Qualifying,
        run: tripletheor_pure,
    },
    Check {
        anchor: "tripletheor",
        clause: "re-extraction gives the triple",
        scope: Scope::Qualifying,
        run: tripletheor_idempotent,
    },
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureExample {
    pub algebra: String,
    pub witness: Vec<ElementId>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub anchor: &'static str,
    pub clause: &'static str,
    pub scope: Scope,
    pub algebras: usize,
    pub cases: u64,
    pub failed: u64,
    pub examples: Vec<FailureExample>,
}

/// A qualifying algebra and meager pair whose candidate set for `S` has no
/// top element (triple ids).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MissingTop {
    pub algebra: String,
    pub x: ElementId,
    pub y: ElementId,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub universe: usize,
    pub homogeneous: usize,
    pub qualifying: usize,
    pub checks: Vec<CheckResult>,
    pub missing_tops: Vec<MissingTop>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failed).sum()
    }

    /// Anchors with at least one evaluated case and no failures.
    pub fn passing_anchors(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in &self.checks {
            if !out.contains(&c.anchor) {
                out.push(c.anchor);
            }
        }
        out.retain(|a| {
            let rows = self.checks.iter().filter(|c| c.anchor == *a);
            rows.clone().all(|c| c.failed == 0) && rows.map(|c| c.cases).sum::<u64>() > 0
        });
        out
    }

    /// Plain-text table, one row per check, followed by failure examples.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "universe: {} algebras ({} homogeneous, {} homogeneous + sharply dominating)",
            self.universe, self.homogeneous, self.qualifying
        );
        let _ = writeln!(
            out,
            "{:<12} {:<42} {:<20} {:>8} {:>10} {:>8}  result",
            "anchor", "clause", "scope", "algebras", "cases", "failed"
        );
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:<12} {:<42} {:<20} {:>8} {:>10} {:>8}  {}",
                c.anchor,
                c.clause,
                c.scope.label(),
                c.algebras,
                c.cases,
                c.failed,
                if c.failed == 0 { "pass" } else { "FAIL" }
            );
        }
        for c in self.checks.iter().filter(|c| c.failed > 0) {
            for ex in &c.examples {
                let w: Vec<String> = ex.witness.iter().map(ToString::to_string).collect();
                let _ = writeln!(
                    out,
                    "FAIL {} {}: {} witness ({}): {}",
                    c.anchor,
                    c.clause,
                    ex.algebra,
                    w.join(", "),
                    ex.detail
                );
            }
        }
        for m in &self.missing_tops {
            let _ = writeln!(
                out,
                "note: {} has no top for S({}, {})",
                m.algebra, m.x, m.y
            );
        }
        let _ = writeln!(
            out,
            "{} checks, {} failures",
            self.checks.len(),
            self.failures()
        );
        out
    }
}

/// The named catalog followed by every enumerated algebra of order
/// `2..=max_order`, named `order<n>-<k>` in canonical order.
pub fn suite_universe(
    max_order: usize,
    bound: usize,
) -> Result<Vec<(String, FiniteEffectAlgebra)>> {
    if max_order > bound {
        return Err(Error::Refused(format!(
            "order {max_order} exceeds the enumeration bound {bound}"
        )));
    }
    let mut out: Vec<(String, FiniteEffectAlgebra)> = named_catalog()
        .into_iter()
        .map(|c| (c.name, c.algebra))
        .collect();
    for n in 2..=max_order {
        for (k, e) in enumerate_order(n).0.into_iter().enumerate() {
            out.push((format!("order{n}-{k}"), e));
        }
    }
    Ok(out)
}

/// Per-algebra outcome: check tallies, homogeneous, qualifying, missing tops.
type AlgebraOutcome = (Vec<Option<Tally>>, bool, bool, Vec<(ElementId, ElementId)>);

/// Evaluates every check on every algebra. Work is split by algebra; the
/// report does not depend on the number of threads.
pub fn run_suite(universe: &[(String, FiniteEffectAlgebra)]) -> SuiteReport {
    let per_algebra: Vec<AlgebraOutcome> = universe
        .par_iter()
        .map(|(_, e)| {
            let s = Subject::new(e);
            let tallies = CHECKS
                .iter()
                .map(|c| {
                    s.applies(c.scope).then(|| {
                        let mut t = Tally::default();
                        (c.run)(&s, &mut t);
                        t
                    })
                })
                .collect();
            let tops = match &s.triple {
                Some(Ok((_, maps))) => maps.without_top.clone(),
                _ => Vec::new(),
            };
            (
                tallies,
                s.report.flags.homogeneous.holds,
                s.report.qualifies(),
                tops,
            )
        })
        .collect();

    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|c| CheckResult {
            anchor: c.anchor,
            clause: c.clause,
            scope: c.scope,
            algebras: 0,
            cases: 0,
            failed: 0,
            examples: Vec::new(),
        })
        .collect();
    let mut missing_tops = Vec::new();
    let (mut homogeneous, mut qualifying) = (0, 0);
    for ((name, _), (tallies, hom, qual, tops)) in universe.iter().zip(per_algebra) {
        homogeneous += hom as usize;
        qualifying += qual as usize;
        for (result, tally) in checks.iter_mut().zip(tallies) {
            let Some(tally) = tally else { continue };
            result.algebras += 1;
            result.cases += tally.cases;
            result.failed += tally.failed;
            for (witness, detail) in tally.examples {
                if result.examples.len() < KEPT_FAILURES {
                    result.examples.push(FailureExample {
                        algebra: name.clone(),
                        witness,
                        detail,
                    });
                }
            }
        }
        missing_tops.extend(tops.into_iter().map(|(x, y)| MissingTop {
            algebra: name.clone(),
            x,
            y,
        }));
    }
    SuiteReport {
        universe: universe.len(),
        homogeneous,
        qualifying,
        checks,
        missing_tops,
    }
}
