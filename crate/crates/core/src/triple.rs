//! The triple `(Sh(E), Mea(E), h)` and the reconstruction of `E` from it.
//!
//! [`extract_triple`] builds the sharp sub-algebra and the generalized
//! effect algebra of meager elements on fresh ids, plus
//! `h(s) = { x meager : x <= s }`. The embeddings back into `E` are kept in a
//! separate field that only verification code reads.
//!
//! [`TripleMaps`] computes the four derived mappings from the triple alone:
//!
//! * `hat(x)`: least sharp `s` with `x` in `h(s)`;
//! * `pi(s, x)`: join in `Mea` of `{ y <= x : y in h(s) }`, defined when it
//!   exists and lies in `h(s)`;
//! * `r(x)`: the unique meager `y` with `hat(y) = hat(x)`, with
//!   `x + (y - (x ∧ y))` defined in `Mea` and in `h(hat x)`, and such that
//!   for every `z` in `h(hat x)`, `z + x` lies in `h(hat x)` exactly when
//!   `z <= y` and `hat(y - z) = hat(x)`;
//! * `s_map(x, y)`: the top of `{ z sharp : pi(z, x), pi(z, y) defined,
//!   z = hat(pi(z, x)), r(pi(z, x)) = pi(z, y) }`, if it has one.
//!
//! [`reconstruct_tea`] then builds the algebra on pairs `(s, m)` with `m` in
//! `h(s')`.

use std::fmt;

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, FiniteGeneralizedEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::error::{Error, HypothesisFailure, Result};
use crate::structure::bounds::sharp_bounds_with;
use crate::structure::elements::{meager_elements_with, sharp_elements};
use crate::structure::order::{join_of_set, maximum, minimum, poset_meet};
use crate::structure::riesz::homogeneity_witness;
use crate::table::{ElementId, PartialOpTable};

/// Embeddings of the triple's carriers into the source algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackMaps {
    pub sharp: Vec<ElementId>,
    pub meager: Vec<ElementId>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleRep {
    pub sharp_algebra: FiniteEffectAlgebra,
    pub meager_algebra: FiniteGeneralizedEffectAlgebra,
    /// `h[s]` is a set of meager ids, indexed by sharp id.
    pub h: Vec<ElementSet>,
    back_maps: Option<BackMaps>,
}

impl TripleRep {
    /// Assembles a triple from its components, refusing data that cannot
    /// come from an algebra: `h` must map every sharp element to a down-set
    /// of `Mea`, be monotone, and send 0 to `{0}` and 1 to all of `Mea`.
    pub fn new(
        sharp_algebra: FiniteEffectAlgebra,
        meager_algebra: FiniteGeneralizedEffectAlgebra,
        h: Vec<ElementSet>,
    ) -> Result<Self> {
        let bad = |msg: String| Error::Hypothesis(HypothesisFailure::InvalidTriple(msg));
        let ns = sharp_algebra.order();
        let nm = meager_algebra.order();
        if h.len() != ns {
            return Err(bad(format!(
                "h has {} entries for {ns} sharp elements",
                h.len()
            )));
        }
        if let Some(s) = h.iter().position(|set| set.universe() != nm) {
            return Err(bad(format!("h({s}) is not a subset of the meager carrier")));
        }
        let mz = meager_algebra.zero();
        let zero_set = ElementSet::from_ids(nm, [mz]);
        if h[sharp_algebra.zero().index()] != zero_set {
            return Err(bad("h(0) is not {0}".into()));
        }
        if h[sharp_algebra.one().index()] != ElementSet::full(nm) {
            return Err(bad("h(1) is not the whole meager carrier".into()));
        }
        for s in sharp_algebra.ids() {
            let hs = &h[s.index()];
            for x in hs {
                if !meager_algebra.down_set(x).is_subset(hs) {
                    return Err(bad(format!("h({s}) is not a down-set at {x}")));
                }
            }
            for t in sharp_algebra.up_set(s).iter() {
                if !hs.is_subset(&h[t.index()]) {
                    return Err(bad(format!("h is not monotone at {s} <= {t}")));
                }
            }
        }
        Ok(TripleRep {
            sharp_algebra,
            meager_algebra,
            h,
            back_maps: None,
        })
    }

    /// Embeddings into the source algebra, if this triple was extracted and
    /// not stripped. Reconstruction never reads them.
    pub fn back_maps(&self) -> Option<&BackMaps> {
        self.back_maps.as_ref()
    }

    /// Attaches embeddings into a source algebra; only their lengths are
    /// checked here, [`check_phi`] checks the rest.
    pub fn with_back_maps(mut self, maps: BackMaps) -> Result<Self> {
        if maps.sharp.len() != self.sharp_algebra.order()
            || maps.meager.len() != self.meager_algebra.order()
        {
            return Err(Error::Hypothesis(HypothesisFailure::InvalidTriple(
                "back-maps do not match the carriers".into(),
            )));
        }
        self.back_maps = Some(maps);
        Ok(self)
    }

    /// The same triple without embeddings.
    pub fn stripped(&self) -> TripleRep {
        TripleRep {
            back_maps: None,
            ..self.clone()
        }
    }
}

/// Checks the hypotheses of the representation theorem (finite algebras are
/// automatically meager-orthocomplete).
pub fn check_hypotheses(e: &FiniteEffectAlgebra) -> Result<()> {
    if let Err((u, v1, v2)) = homogeneity_witness(e) {
        return Err(HypothesisFailure::NotHomogeneous { u, v1, v2 }.into());
    }
    let bounds = sharp_bounds_with(e, &sharp_elements(e));
    if let Some((x, which)) = bounds.first_gap() {
        return Err(HypothesisFailure::NotSharplyDominating { x, which }.into());
    }
    Ok(())
}

pub fn extract_triple(e: &FiniteEffectAlgebra) -> Result<TripleRep> {
    check_hypotheses(e)?;
    let sharp = sharp_elements(e);
    let meager = meager_elements_with(e, &sharp);
    let (sharp_algebra, sharp_embed) = e.restrict(&sharp)?;
    let (meager_algebra, meager_embed) = e.restrict_generalized(&meager)?;
    let h = sharp_embed
        .iter()
        .map(|&s| {
            ElementSet::from_ids(
                meager_embed.len(),
                meager_embed
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| e.leq(m, s))
                    .map(|(i, _)| ElementId::new(i)),
            )
        })
        .collect();
    let mut triple = TripleRep::new(sharp_algebra, meager_algebra, h)?;
    triple.back_maps = Some(BackMaps {
        sharp: sharp_embed,
        meager: meager_embed,
    });
    Ok(triple)
}

/// The mappings M1-M4, tabulated from the triple alone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TripleMaps {
    ns: usize,
    nm: usize,
    hat: Vec<ElementId>,
    pi: Vec<Option<ElementId>>,
    r: Vec<ElementId>,
    s_map: Vec<Option<ElementId>>,
    /// Meager pairs whose candidate set for `s_map` has no top element.
    pub without_top: Vec<(ElementId, ElementId)>,
}

impl TripleMaps {
    pub fn compute(t: &TripleRep) -> Result<Self> {
        let sh = &t.sharp_algebra;
        let mea = &t.meager_algebra;
        let ns = sh.order();
        let nm = mea.order();
        let internal = |msg: String| Error::Internal(msg);

        let mut hat = Vec::with_capacity(nm);
        for x in mea.ids() {
            let over = ElementSet::from_ids(ns, sh.ids().filter(|s| t.h[s.index()].contains(x)));
            hat.push(
                minimum(sh, &over)
                    .ok_or_else(|| internal(format!("no least sharp element above meager {x}")))?,
            );
        }

        let all = ElementSet::full(nm);
        let mut pi = vec![None; ns * nm];
        for s in sh.ids() {
            let hs = &t.h[s.index()];
            for x in mea.ids() {
                let below = mea.down_set(x).intersection(hs);
                pi[s.index() * nm + x.index()] =
                    join_of_set(mea, &all, &below).filter(|z| hs.contains(*z));
            }
        }

        let mut maps = TripleMaps {
            ns,
            nm,
            hat,
            pi,
            r: Vec::new(),
            s_map: Vec::new(),
            without_top: Vec::new(),
        };

        for x in mea.ids() {
            let candidates: Vec<ElementId> =
                mea.ids().filter(|&y| maps.satisfies_r(t, x, y)).collect();
            match candidates[..] {
                [y] => maps.r.push(y),
                _ => {
                    return Err(internal(format!(
                        "meager {x} has {} candidates for its complement to the sharp cover",
                        candidates.len()
                    )))
                }
            }
        }

        let mut s_map = vec![None; nm * nm];
        for x in mea.ids() {
            for y in mea.ids() {
                let set = ElementSet::from_ids(ns, sh.ids().filter(|&z| maps.in_s_set(z, x, y)));
                let top = maximum(sh, &set);
                if top.is_none() {
                    maps.without_top.push((x, y));
                }
                s_map[x.index() * nm + y.index()] = top;
            }
        }
        maps.s_map = s_map;
        Ok(maps)
    }

    /// The three defining conditions of `r(x) = y`.
    fn satisfies_r(&self, t: &TripleRep, x: ElementId, y: ElementId) -> bool {
        let mea = &t.meager_algebra;
        let xh = self.hat(x);
        if self.hat(y) != xh {
            return false;
        }
        let hx = &t.h[xh.index()];
        let Some(m) = poset_meet(mea, x, y) else {
            return false;
        };
        let joined = mea.ominus(y, m).and_then(|d| mea.sum(x, d));
        if !joined.is_some_and(|j| hx.contains(j)) {
            return false;
        }
        hx.iter().all(|z| {
            let left = mea.sum(z, x).is_some_and(|s| hx.contains(s));
            let right = mea.leq(z, y) && mea.ominus(y, z).is_some_and(|d| self.hat(d) == xh);
            left == right
        })
    }

    fn in_s_set(&self, z: ElementId, x: ElementId, y: ElementId) -> bool {
        match (self.pi(z, x), self.pi(z, y)) {
            (Some(px), Some(py)) => self.hat(px) == z && self.r(px) == py,
            _ => false,
        }
    }

    /// M1: least sharp element whose `h`-set contains `x`.
    pub fn hat(&self, x: ElementId) -> ElementId {
        self.hat[x.index()]
    }

    /// M2: the meager part of `x` below `s`.
    pub fn pi(&self, s: ElementId, x: ElementId) -> Option<ElementId> {
        self.pi[s.index() * self.nm + x.index()]
    }

    /// M3: the meager complement of `x` in its sharp cover.
    pub fn r(&self, x: ElementId) -> ElementId {
        self.r[x.index()]
    }

    /// M4: the sharp part shared by `x` and `y`.
    pub fn s_map(&self, x: ElementId, y: ElementId) -> Option<ElementId> {
        self.s_map[x.index() * self.nm + y.index()]
    }

    pub fn sharp_order(&self) -> usize {
        self.ns
    }
}

pub fn widehat_triple(t: &TripleRep, x: ElementId) -> Result<ElementId> {
    Ok(TripleMaps::compute(t)?.hat(x))
}

pub fn pi_s(t: &TripleRep, s: ElementId, x: ElementId) -> Result<Option<ElementId>> {
    Ok(TripleMaps::compute(t)?.pi(s, x))
}

pub fn r_map(t: &TripleRep, x: ElementId) -> Result<ElementId> {
    Ok(TripleMaps::compute(t)?.r(x))
}

pub fn s_map(t: &TripleRep, x: ElementId, y: ElementId) -> Result<Option<ElementId>> {
    Ok(TripleMaps::compute(t)?.s_map(x, y))
}

/// The algebra rebuilt from a triple, on pairs `(sharp, meager)` of triple
/// ids in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TeaAlgebra {
    pub carrier: Vec<(ElementId, ElementId)>,
    pub algebra: FiniteEffectAlgebra,
}

impl TeaAlgebra {
    pub fn index_of(&self, pair: (ElementId, ElementId)) -> Option<ElementId> {
        self.carrier.binary_search(&pair).ok().map(ElementId::new)
    }
}

/// The partial sum of two pairs, following the four defining conditions in
/// order; `None` as soon as one fails.
pub fn tea_sum(
    t: &TripleRep,
    maps: &TripleMaps,
    (xs, xm): (ElementId, ElementId),
    (ys, ym): (ElementId, ElementId),
) -> Option<(ElementId, ElementId)> {
    let sh = &t.sharp_algebra;
    let mea = &t.meager_algebra;
    let s = maps.s_map(xm, ym)?;
    let zs = sh.sum(xs, ys).and_then(|v| sh.sum(v, s))?;
    let dx = mea.ominus(xm, maps.pi(s, xm)?)?;
    let dy = mea.ominus(ym, maps.pi(s, ym)?)?;
    let zm = mea.sum(dx, dy)?;
    t.h[sh.orthosupplement(zs).index()]
        .contains(zm)
        .then_some((zs, zm))
}

/// Builds `Tea` from the triple alone and validates it as an effect algebra.
pub fn reconstruct_tea(t: &TripleRep) -> Result<TeaAlgebra> {
    let maps = TripleMaps::compute(t)?;
    reconstruct_with(t, &maps)
}

pub fn reconstruct_with(t: &TripleRep, maps: &TripleMaps) -> Result<TeaAlgebra> {
    let sh = &t.sharp_algebra;
    let mea = &t.meager_algebra;
    let carrier: Vec<(ElementId, ElementId)> = sh
        .ids()
        .flat_map(|s| {
            let hs = &t.h[sh.orthosupplement(s).index()];
            mea.ids().filter(|&m| hs.contains(m)).map(move |m| (s, m))
        })
        .collect();
    let index = |p: (ElementId, ElementId)| carrier.binary_search(&p).ok().map(ElementId::new);
    let mut table = PartialOpTable::undefined(carrier.len());
    for (i, &x) in carrier.iter().enumerate() {
        for (j, &y) in carrier.iter().enumerate() {
            if let Some(z) = tea_sum(t, maps, x, y) {
                let k = index(z).ok_or_else(|| {
                    Error::Internal(format!("sum of {x:?} and {y:?} leaves the carrier"))
                })?;
                table.set(ElementId::new(i), ElementId::new(j), Some(k));
            }
        }
    }
    let zero = index((sh.zero(), mea.zero())).expect("(0, 0) is in the carrier");
    let one = index((sh.one(), mea.zero())).expect("(1, 0) is in the carrier");
    let algebra = FiniteEffectAlgebra::new(table, zero, one).map_err(|err| match err {
        Error::Axioms(v) => Error::Internal(format!(
            "reconstructed table is not an effect algebra: {}",
            v.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join("; ")
        )),
        other => other,
    })?;
    Ok(TeaAlgebra { carrier, algebra })
}

/// Re-extracts the triple of a reconstructed algebra and checks that it is
/// the original one under `s -> (s, 0)` and `m -> (0, m)`.
pub fn check_idempotent(t: &TripleRep, tea: &TeaAlgebra) -> Result<()> {
    let again = extract_triple(&tea.algebra)?;
    let maps = again.back_maps().expect("freshly extracted");
    let sh = &t.sharp_algebra;
    let mea = &t.meager_algebra;
    let mismatch = |what: &str| {
        Err(Error::Internal(format!(
            "re-extracted triple differs: {what}"
        )))
    };
    let sharp_pairs: Vec<(ElementId, ElementId)> =
        maps.sharp.iter().map(|&i| tea.carrier[i.index()]).collect();
    let meager_pairs: Vec<(ElementId, ElementId)> = maps
        .meager
        .iter()
        .map(|&i| tea.carrier[i.index()])
        .collect();
    let expect_sharp: Vec<_> = sh.ids().map(|s| (s, mea.zero())).collect();
    let expect_meager: Vec<_> = mea.ids().map(|m| (sh.zero(), m)).collect();
    if sharp_pairs != expect_sharp {
        return mismatch("sharp carrier");
    }
    if meager_pairs != expect_meager {
        return mismatch("meager carrier");
    }
    if again.sharp_algebra.table() != sh.table() {
        return mismatch("sharp sums");
    }
    if again.meager_algebra.table() != mea.table() {
        return mismatch("meager sums");
    }
    if again.h != t.h {
        return mismatch("h");
    }
    Ok(())
}

/// First way in which `phi(x) = (x~, x - x~)` fails to be an isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RoundtripFailure {
    OutsideCarrier {
        x: ElementId,
    },
    NotInjective {
        x: ElementId,
        y: ElementId,
    },
    NotSurjective {
        missing: usize,
    },
    Bounds,
    SumMismatch {
        x: ElementId,
        y: ElementId,
        in_source: Option<ElementId>,
        in_tea: Option<ElementId>,
    },
}

impl fmt::Display for RoundtripFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::OutsideCarrier { x } => write!(f, "phi({x}) is not in the reconstructed carrier"),
            Self::NotInjective { x, y } => write!(f, "phi({x}) = phi({y})"),
            Self::NotSurjective { missing } => {
                write!(f, "carrier element {missing} is not hit by phi")
            }
            Self::Bounds => write!(f, "phi does not preserve 0 and 1"),
            Self::SumMismatch {
                x,
                y,
                in_source,
                in_tea,
            } => write!(
                f,
                "{x} + {y}: source gives {}, reconstruction gives {}",
                in_source.map_or("undefined".into(), |v| v.to_string()),
                in_tea.map_or("undefined".into(), |v| format!("phi^-1 {v}")),
            ),
        }
    }
}

/// The verified isomorphism `E -> Tea(E)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RoundtripWitness {
    /// `phi[x]` is the carrier index of `phi(x)`.
    pub phi: Vec<ElementId>,
    /// `phi(x)` as a pair of source ids `(x~, x - x~)`.
    pub pairs: Vec<(ElementId, ElementId)>,
}

/// Checks that `phi(x) = (x~, x - x~)` is an isomorphism from `e` onto
/// `tea`, where `t` carries the embeddings of its ids into `e`.
pub fn check_phi(
    e: &FiniteEffectAlgebra,
    t: &TripleRep,
    tea: &TeaAlgebra,
) -> Result<std::result::Result<RoundtripWitness, RoundtripFailure>> {
    let back = t.back_maps().ok_or_else(|| {
        Error::Refused("phi needs a triple extracted from the source algebra".into())
    })?;
    let bounds = sharp_bounds_with(e, &sharp_elements(e));
    let local =
        |embed: &[ElementId], x: ElementId| embed.iter().position(|&y| y == x).map(ElementId::new);
    let mut phi = Vec::with_capacity(e.order());
    let mut pairs = Vec::with_capacity(e.order());
    for x in e.ids() {
        let Some(xs) = bounds.tilde(x) else {
            return Ok(Err(RoundtripFailure::OutsideCarrier { x }));
        };
        let xm = e.ominus(x, xs).expect("x~ <= x");
        pairs.push((xs, xm));
        let pair = local(&back.sharp, xs).zip(local(&back.meager, xm));
        match pair.and_then(|p| tea.index_of(p)) {
            Some(i) => phi.push(i),
            None => return Ok(Err(RoundtripFailure::OutsideCarrier { x })),
        }
    }
    let mut preimage = vec![None; tea.carrier.len()];
    for x in e.ids() {
        if let Some(y) = preimage[phi[x.index()].index()].replace(x) {
            return Ok(Err(RoundtripFailure::NotInjective { x: y, y: x }));
        }
    }
    if let Some(missing) = preimage.iter().position(Option::is_none) {
        return Ok(Err(RoundtripFailure::NotSurjective { missing }));
    }
    let ta = &tea.algebra;
    if phi[e.zero().index()] != ta.zero() || phi[e.one().index()] != ta.one() {
        return Ok(Err(RoundtripFailure::Bounds));
    }
    for x in e.ids() {
        for y in e.ids() {
            let in_source = e.sum(x, y);
            let in_tea = ta.sum(phi[x.index()], phi[y.index()]);
            if in_source.map(|z| phi[z.index()]) != in_tea {
                return Ok(Err(RoundtripFailure::SumMismatch {
                    x,
                    y,
                    in_source,
                    in_tea: in_tea.map(|v| preimage[v.index()].expect("bijective")),
                }));
            }
        }
    }
    Ok(Ok(RoundtripWitness { phi, pairs }))
}

/// Extracts the triple, rebuilds `Tea` from the stripped triple and checks
/// `phi` in both directions.
pub fn verify_roundtrip(
    e: &FiniteEffectAlgebra,
) -> Result<std::result::Result<RoundtripWitness, RoundtripFailure>> {
    let t = extract_triple(e)?;
    let tea = reconstruct_tea(&t.stripped())?;
    check_phi(e, &t, &tea)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{horizontal_sum, make_boolean, make_chain};

    fn id(i: u32) -> ElementId {
        ElementId(i)
    }

    #[test]
    fn boolean_triple() {
        let e = make_boolean(2).unwrap();
        let t = extract_triple(&e).unwrap();
        assert_eq!(t.sharp_algebra, e);
        assert_eq!(t.meager_algebra.order(), 1);
        assert!(t.h.iter().all(|s| s.len() == 1));
        let tea = reconstruct_tea(&t).unwrap();
        assert!(tea.carrier.iter().all(|&(_, m)| m == id(0)));
    }

    #[test]
    fn three_chain_triple_and_maps() {
        let e = make_chain(2).unwrap();
        let t = extract_triple(&e).unwrap();
        assert_eq!(t.back_maps().unwrap().sharp, vec![id(0), id(2)]);
        assert_eq!(t.back_maps().unwrap().meager, vec![id(0), id(1)]);
        assert_eq!(t.h[0].to_vec(), vec![id(0)]);
        assert_eq!(t.h[1].to_vec(), vec![id(0), id(1)]);
        let m = TripleMaps::compute(&t).unwrap();
        let a = id(1);
        assert_eq!(m.hat(id(0)), id(0));
        assert_eq!(m.hat(a), id(1));
        assert_eq!(m.r(id(0)), id(0));
        assert_eq!(m.r(a), a);
        assert_eq!(m.s_map(id(0), id(0)), Some(id(0)));
        assert_eq!(m.s_map(a, a), Some(id(1)));
        let tea = reconstruct_tea(&t).unwrap();
        assert_eq!(
            tea.carrier,
            vec![(id(0), id(0)), (id(0), a), (id(1), id(0))]
        );
        let pa = tea.index_of((id(0), a)).unwrap();
        assert_eq!(tea.algebra.sum(pa, pa), tea.index_of((id(1), id(0))));
    }

    #[test]
    fn four_chain_r_map() {
        let e = make_chain(3).unwrap();
        let t = extract_triple(&e).unwrap();
        let m = TripleMaps::compute(&t).unwrap();
        // Meager carrier is {0, p, q} on ids 0, 1, 2.
        assert_eq!(m.r(id(1)), id(2));
        assert_eq!(m.r(id(2)), id(1));
    }

    #[test]
    fn diamond_triple() {
        let c = make_chain(2).unwrap();
        let e = horizontal_sum(&[c.clone(), c]).unwrap();
        let t = extract_triple(&e).unwrap();
        assert_eq!(t.sharp_algebra.order(), 2);
        let mea = &t.meager_algebra;
        assert_eq!(mea.order(), 3);
        assert_eq!(mea.sum(id(1), id(1)), None);
        let m = TripleMaps::compute(&t).unwrap();
        assert_eq!(m.pi(id(1), id(1)), Some(id(1)));
        assert_eq!(m.s_map(id(1), id(2)), Some(id(0)));
        assert!(m.without_top.is_empty());
    }

    #[test]
    fn roundtrip_small_algebras() {
        let c = make_chain(2).unwrap();
        for e in [
            make_chain(1).unwrap(),
            make_chain(5).unwrap(),
            make_boolean(3).unwrap(),
            horizontal_sum(&[c.clone(), make_chain(3).unwrap(), make_boolean(2).unwrap()]).unwrap(),
        ] {
            let w = verify_roundtrip(&e).unwrap().unwrap();
            assert_eq!(w.pairs[e.zero().index()], (e.zero(), e.zero()));
            assert_eq!(w.pairs[e.one().index()], (e.one(), e.zero()));
            let t = extract_triple(&e).unwrap();
            check_idempotent(&t, &reconstruct_tea(&t).unwrap()).unwrap();
        }
    }

    #[test]
    fn corrupted_h_is_refused_or_detected() {
        let e = make_chain(3).unwrap();
        let mut t = extract_triple(&e).unwrap();
        let back = t.back_maps().cloned();
        t.h[1].remove(id(2));
        let shape = TripleRep::new(
            t.sharp_algebra.clone(),
            t.meager_algebra.clone(),
            t.h.clone(),
        );
        assert!(matches!(
            shape,
            Err(Error::Hypothesis(HypothesisFailure::InvalidTriple(_)))
        ));
        let _ = back;
    }

    #[test]
    fn triple_refuses_non_homogeneous() {
        let e = crate::catalog::catalog_entry("nonhomogeneous6")
            .unwrap()
            .algebra;
        assert!(matches!(
            extract_triple(&e),
            Err(Error::Hypothesis(HypothesisFailure::NotHomogeneous { .. }))
        ));
    }
}
