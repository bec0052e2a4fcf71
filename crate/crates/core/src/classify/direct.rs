//! Membership decided from the ideals themselves rather than from structure.

use super::Family;
use crate::graph::Graph;
use crate::ideal::{phi, PhiOptions, PhiResult};
use crate::Result;
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DirectVerdict {
    pub family: Family,
    pub member: bool,
    pub phi: PhiResult,
}

/// Membership in `family` is `Φ ≤ level`, i.e. the ideal one index above the
/// level is nontrivial. Only indices up to `level + 1` are computed.
pub fn direct_membership(g: &Graph, family: Family, options: &PhiOptions) -> Result<DirectVerdict> {
    let level = family.level();
    let opts = PhiOptions { k_max: Some(level + 1), ..options.clone() };
    let phi = phi(g, family.ring(), &opts)?;
    Ok(DirectVerdict { family, member: phi.value <= level, phi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_family;
    use crate::graph::catalog;

    #[test]
    fn agrees_with_structure_on_small_graphs() {
        let graphs = [
            Graph::cycle(5),
            Graph::path(4),
            Graph::star(3),
            Graph::complete(4),
            catalog::by_name("paw").unwrap(),
            catalog::by_name("bull").unwrap(),
        ];
        let opts = PhiOptions::default();
        for g in &graphs {
            for f in Family::ALL {
                if f == Family::Lambda2tZ && g.is_complete() && g.n() >= 4 {
                    continue;
                }
                let direct = direct_membership(g, f, &opts).unwrap();
                let structural = classify_family(g, f).unwrap();
                assert_eq!(direct.member, structural.member, "{f} on {g:?}");
            }
        }
    }

    #[test]
    fn complete_graphs_have_nontrivial_third_univariate_ideal() {
        // every 3-minor of (t-1)I + J is divisible by (t-1)^2
        let k4 = Graph::complete(4);
        let direct = direct_membership(&k4, Family::Lambda2tZ, &PhiOptions::default()).unwrap();
        assert!(direct.member);
        assert!(!classify_family(&k4, Family::Lambda2tZ).unwrap().member);
    }
}
