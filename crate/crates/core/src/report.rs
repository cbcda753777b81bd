//! The versioned JSON document printed by `analyze --json`.

use serde::Serialize;

use crate::algebra::{FiniteEffectAlgebra, PartialAlgebra};
use crate::bitset::ElementSet;
use crate::structure::bounds::{sharp_bounds_with, SharpBounds};
use crate::structure::{Flags, StructureReport};
use crate::table::ElementId;
use crate::triple::extract_triple;

/// Bumped whenever a field is added, removed or changes meaning.
pub const ANALYZE_SCHEMA: &str = "efalg-analyze/1";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TripleSummary {
    pub sharp_order: usize,
    pub meager_order: usize,
    /// Source ids of the sharp carrier, in triple order.
    pub sharp_ids: Vec<ElementId>,
    /// Source ids of the meager carrier, in triple order.
    pub meager_ids: Vec<ElementId>,
    /// `h[s]` in triple ids.
    pub h: Vec<ElementSet>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub schema: &'static str,
    pub order: usize,
    pub zero: ElementId,
    pub one: ElementId,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    pub orthosupplement: Vec<ElementId>,
    pub sharp: ElementSet,
    pub meager: ElementSet,
    pub hypermeager: ElementSet,
    pub center: ElementSet,
    pub principal: ElementSet,
    pub blocks: Vec<ElementSet>,
    pub flags: Flags,
    pub sharp_bounds: SharpBounds,
    /// Present when the algebra is homogeneous and sharply dominating.
    pub triple: Option<TripleSummary>,
}

impl AnalyzeReport {
    pub fn compute(e: &FiniteEffectAlgebra) -> Self {
        let report = StructureReport::compute(e);
        let sharp_bounds = sharp_bounds_with(e, &report.sharp);
        let triple = report.qualifies().then(|| {
            let t = extract_triple(e).expect("hypotheses were checked");
            let back = t.back_maps().expect("freshly extracted");
            TripleSummary {
                sharp_order: t.sharp_algebra.order(),
                meager_order: t.meager_algebra.order(),
                sharp_ids: back.sharp.clone(),
                meager_ids: back.meager.clone(),
                h: t.h.clone(),
            }
        });
        AnalyzeReport {
            schema: ANALYZE_SCHEMA,
            order: e.order(),
            zero: e.zero(),
            one: e.one(),
            names: e.names().map(<[String]>::to_vec),
            orthosupplement: e.ids().map(|x| e.orthosupplement(x)).collect(),
            sharp: report.sharp,
            meager: report.meager,
            hypermeager: report.hypermeager,
            center: report.center,
            principal: report.principal,
            blocks: report.blocks,
            flags: report.flags,
            sharp_bounds,
            triple,
        }
    }

    /// Pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("plain data serializes");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::make_chain;

    #[test]
    fn chain_report_shape() {
        let r = AnalyzeReport::compute(&make_chain(2).unwrap());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["schema"], ANALYZE_SCHEMA);
        assert_eq!(v["sharp"], serde_json::json!([0, 2]));
        assert_eq!(v["triple"]["meager_order"], 2);
        assert!(v.get("names").is_none());
    }
}
